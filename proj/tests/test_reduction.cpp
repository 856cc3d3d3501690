#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibercone/errors.hpp"
#include "fibercone/hilbert.hpp"
#include "fibercone/parser.hpp"
#include "fibercone/reduction.hpp"

using namespace fibercone;

namespace {

std::vector<Polynomial> polys(const PolyRing& R, const std::string& list) {
  return parse_poly_list(list, R);
}

}  // namespace

TEST_CASE("reduction test by colength ladder") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  IdealPtr m2 = A.power(m, 2);

  SUBCASE("the variables reduce the maximal ideal at exponent 0") {
    auto [ok, r] = is_reduction(A, polys(R, "x, y"), m);
    CHECK(ok);
    CHECK(r == 0);
  }

  SUBCASE("pure squares reduce the square of the maximal ideal") {
    auto [ok, r] = is_reduction(A, polys(R, "x^2, y^2"), m2);
    CHECK(ok);
    CHECK(r == 1);  // (x^2,y^2) != m^2 but (x^2,y^2) m^2 = m^4
  }

  SUBCASE("wrong sequence length is rejected") {
    auto [ok, r] = is_reduction(A, polys(R, "x"), m);
    CHECK_FALSE(ok);
    CHECK(r == -1);
  }

  SUBCASE("elements outside the ideal are rejected") {
    auto [ok, r] = is_reduction(A, polys(R, "x, y^3"), m2);
    CHECK_FALSE(ok);
  }

  SUBCASE("non-reduction fails within the probe bound") {
    auto [ok, r] = is_reduction(A, polys(R, "x^2, x*y"), m2);
    CHECK_FALSE(ok);  // (x^2, xy) omits y^k entirely
  }
}

TEST_CASE("reduction test on the quadric sequence in three variables") {
  PolyRing R(32003, {"x", "y", "z"});
  IdealArena A(R);
  IdealPtr m2 = A.power(A.maximal(), 2);
  ParameterSequence q =
      polys(R, "x^2 + y*z, y^2 + z^2 + x*z, x*z + x*y");
  auto [ok, r] = is_reduction(A, q, m2);
  CHECK(ok);
  CHECK(r == 1);
  // complete intersection of three quadrics: colength 2^3
  CHECK(A.make(q)->colength() == 8);
}

TEST_CASE("superficiality window checks") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  FiltrationPair pair = FiltrationPair::make(A, m, m);

  SUBCASE("a variable is superficial from the first row") {
    SuperficialVerdict v =
        check_superficial(parse_poly("x", R), pair, 5, 3);
    CHECK(v.pass);
    CHECK(v.r0 == 1);
  }

  SUBCASE("a generic linear form is superficial") {
    SuperficialVerdict v =
        check_superficial(parse_poly("x + 17*y", R), pair, 5, 2);
    CHECK(v.pass);
    CHECK(v.r0 == 1);
  }

  SUBCASE("the zero element is degenerate") {
    SuperficialVerdict v = check_superficial(parse_poly("0", R), pair, 4, 1);
    CHECK_FALSE(v.pass);
    CHECK(v.r0 == -1);
  }

  SUBCASE("a quadratic element fails for the maximal-ideal pair") {
    SuperficialVerdict v =
        check_superficial(parse_poly("x*y", R), pair, 5, 1);
    CHECK_FALSE(v.pass);
  }
}

TEST_CASE("stable exponent of the filtration product") {
  SUBCASE("regular pair stabilizes immediately") {
    PolyRing R(32003, {"x", "y"});
    IdealArena A(R);
    IdealPtr m = A.maximal();
    FiltrationPair pair = FiltrationPair::make(A, m, m);
    CHECK(s_value(polys(R, "x, y"), pair) == 0);
  }

  SUBCASE("cube filtration under two generic cubics stabilizes at 1") {
    PolyRing R(32003, {"x", "y"});
    IdealArena A(R);
    IdealPtr m = A.maximal();
    IdealPtr m3 = A.power(m, 3);
    ParameterSequence ab = polys(
        R,
        "x^3 + 2*x^2*y + 3*x*y^2 + 5*y^3, "
        "7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3");
    auto [ok, r] = is_reduction(A, ab, m3);
    REQUIRE(ok);
    CHECK(r == 1);
    CHECK(A.make(ab)->colength() == 9);
    FiltrationPair pair = FiltrationPair::make(A, m, m3);
    CHECK(s_value(ab, pair) == 1);
  }
}

TEST_CASE("random search for minimal reductions") {
  PolyRing R(32003, {"x", "y", "z"});
  IdealArena A(R);
  IdealPtr m = A.maximal();

  SUBCASE("three random linear forms reduce the maximal ideal") {
    ReductionData data = find_minimal_reduction(A, m, m, true, 8, 42);
    CHECK(data.x.size() == 3);
    CHECK(data.reduction_number == 0);
    CHECK(data.s_value == 0);
    CHECK(data.inside_I1);
    CHECK(data.seed == 42);
    REQUIRE(data.superficial_verdicts.size() == 3);
    for (const auto& v : data.superficial_verdicts) {
      CHECK(v.pass);
      CHECK(v.r0 == 1);
    }
  }

  SUBCASE("same seed reproduces the same sequence") {
    ReductionData a = find_minimal_reduction(A, m, m, false, 8, 1234);
    ReductionData b = find_minimal_reduction(A, m, m, false, 8, 1234);
    REQUIRE(a.x.size() == b.x.size());
    for (size_t i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
    ReductionData c = find_minimal_reduction(A, m, m, false, 8, 99);
    bool all_equal = true;
    for (size_t i = 0; i < a.x.size(); ++i)
      all_equal = all_equal && (a.x[i] == c.x[i]);
    CHECK_FALSE(all_equal);
  }
}

TEST_CASE("constraint that cannot be met exhausts the trial budget") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m2 = A.power(A.maximal(), 2);
  IdealPtr m3 = A.power(A.maximal(), 3);
  try {
    find_minimal_reduction(A, m2, m3, true, 6, 7);
    FAIL("expected TrialsExhausted");
  } catch (const TrialsExhausted& e) {
    CHECK(e.detail.find("trials=6") != std::string::npos);
    CHECK(e.detail.find("rejected_by_membership=6") != std::string::npos);
  }
}

TEST_CASE("multiplicity of a regular-sequence reduction matches its colength") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);

  SUBCASE("pure squares") {
    IdealPtr X = A.make(polys(R, "x^2, y^2"));
    PowerHilbertData p = PowerHilbertData::collect(A, X, 5);
    CHECK(p.e.coeffs[0] == 4);
    CHECK(static_cast<uint64_t>(p.e.coeffs[0]) == X->colength());
  }

  SUBCASE("generic cubics") {
    IdealPtr X = A.make(polys(
        R,
        "x^3 + 2*x^2*y + 3*x*y^2 + 5*y^3, "
        "7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3"));
    PowerHilbertData p = PowerHilbertData::collect(A, X, 5);
    CHECK(p.e.coeffs[0] == 9);
    CHECK(static_cast<uint64_t>(p.e.coeffs[0]) == X->colength());
  }
}
