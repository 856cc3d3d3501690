#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibercone/complexes.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/parser.hpp"

using namespace fibercone;

namespace {

std::vector<Polynomial> polys(const PolyRing& R, const std::string& list) {
  return parse_poly_list(list, R);
}

}  // namespace

TEST_CASE("complexes over the regular pair in two variables") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  FiltrationPair pair = FiltrationPair::make(A, m, m);
  ComplexFactory F(polys(R, "x, y"), pair);
  REQUIRE(F.inside_I1());

  SUBCASE("term shapes at n = 2") {
    ComplexInstance c1 = F.build(ComplexVariant::C1, 2);
    REQUIRE(c1.terms.size() == 3);
    CHECK(c1.terms[0].length() == 6);  // len(R/m^3)
    CHECK(c1.terms[1].length() == 6);  // 2 len(R/m^2)
    CHECK(c1.terms[2].length() == 1);  // len(R/m)

    ComplexInstance c0 = F.build(ComplexVariant::C0, 2);
    CHECK(c0.terms[0].length() == 3);  // len(R/m^2)
    CHECK(c0.terms[1].length() == 2);
    CHECK(c0.terms[2].length() == 0);  // R/I2^0 = 0
  }

  SUBCASE("homology of the power complex at n = 2") {
    const HomologyReport& h = F.homology(ComplexVariant::C0, 2);
    CHECK(h.h == std::vector<long long>{1, 0, 0});
  }

  SUBCASE("low degrees have zero differentials and full homology") {
    const HomologyReport& h = F.homology(ComplexVariant::C1, 0);
    CHECK(h.h == std::vector<long long>{1, 2, 1});
    const HomologyReport& hm = F.homology(ComplexVariant::C1, -2);
    CHECK(hm.h == std::vector<long long>{1, 2, 1});
  }

  SUBCASE("closed-form cross-checks over a window") {
    for (long long n = -2; n <= 6; ++n) {
      ClauseVerdict v = F.cross_check_homology(n);
      for (const auto& c : v.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
  }

  SUBCASE("higher homology of the filtration complex vanishes eventually") {
    // h_2 at n = 1 is len((m:m)/m) = 1; vanishing kicks in afterwards.
    CHECK(F.homology(ComplexVariant::C1, 1).h[2] == 1);
    for (long long n = 1; n <= 6; ++n)
      CHECK(F.homology(ComplexVariant::C1, n).h[1] == 0);
    for (long long n = 2; n <= 6; ++n)
      CHECK(F.homology(ComplexVariant::C1, n).h[2] == 0);
  }

  SUBCASE("length additivity and Euler identity") {
    for (long long n = 0; n <= 6; ++n) {
      ClauseVerdict v = F.euler_and_exactness_check(n);
      for (const auto& c : v.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
  }
}

TEST_CASE("quadric sequence on the squared maximal ideal in three variables") {
  PolyRing R(32003, {"x", "y", "z"});
  IdealArena A(R);
  IdealPtr m2 = A.power(A.maximal(), 2);
  FiltrationPair pair = FiltrationPair::make(A, m2, m2);
  ParameterSequence q = polys(R, "x^2 + y*z, y^2 + z^2 + x*z, x*z + x*y");
  ComplexFactory F(q, pair);
  REQUIRE(F.inside_I1());

  SUBCASE("low-degree homology is the binomial pattern") {
    const HomologyReport& h = F.homology(ComplexVariant::C1, 0);
    CHECK(h.h == std::vector<long long>{4, 12, 12, 4});
  }

  SUBCASE("cross-checks and additivity on a short window") {
    for (long long n = 0; n <= 3; ++n) {
      ClauseVerdict v = F.cross_check_homology(n);
      for (const auto& c : v.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
      ClauseVerdict e = F.euler_and_exactness_check(n);
      for (const auto& c : e.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
  }
}

TEST_CASE("mixed-degree pair from the worked counterexample") {
  PolyRing R(32003, {"x", "y", "z"});
  IdealArena A(R);
  IdealPtr I1 = A.make(polys(R, "x^4, y^2, z^2, x*y, x*z, y*z"));
  IdealPtr I2 = A.power(A.maximal(), 2);
  FiltrationPair pair = FiltrationPair::make(A, I1, I2);
  ParameterSequence q = polys(R, "x^2 + y*z, y^2 + z^2 + x*z, x*z + x*y");
  ComplexFactory F(q, pair);
  CHECK_FALSE(F.inside_I1());

  SUBCASE("term lengths of the filtration complex at n = 1") {
    ComplexInstance cx = F.build(ComplexVariant::C1, 1);
    CHECK(cx.terms[0].length() == 22);  // len(R/I1 I2)
    CHECK(cx.terms[1].length() == 18);  // 3 len(R/I1)
    CHECK(cx.terms[2].length() == 18);
    CHECK(cx.terms[3].length() == 6);
  }

  SUBCASE("truncated and fiber complexes demand (x) inside I1") {
    CHECK_THROWS_AS(F.build(ComplexVariant::D1, 2), HypothesisViolated);
    CHECK_THROWS_AS(F.build(ComplexVariant::KoszulFiber, 2),
                    HypothesisViolated);
    CHECK_THROWS_AS(F.euler_and_exactness_check(2), HypothesisViolated);
  }

  SUBCASE("untruncated clauses still cross-check") {
    for (long long n = 0; n <= 2; ++n) {
      ClauseVerdict v = F.cross_check_homology(n);
      for (const auto& c : v.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
  }
}

TEST_CASE("cube filtration under two generic cubics") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  IdealPtr m3 = A.power(m, 3);
  FiltrationPair pair = FiltrationPair::make(A, m, m3);
  ParameterSequence ab = polys(
      R,
      "x^3 + 2*x^2*y + 3*x*y^2 + 5*y^3, "
      "7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3");
  ComplexFactory F(ab, pair);
  REQUIRE(F.inside_I1());

  SUBCASE("fiber strand at n = 0 is one copy of R/I1") {
    const HomologyReport& h = F.homology(ComplexVariant::KoszulFiber, 0);
    CHECK(h.term_lengths == std::vector<long long>{1, 0, 0});
    CHECK(h.h == std::vector<long long>{1, 0, 0});
  }

  SUBCASE("windowed cross-checks, additivity, and truncation ranges") {
    for (long long n = -1; n <= 5; ++n) {
      ClauseVerdict v = F.cross_check_homology(n);
      for (const auto& c : v.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
    for (long long n = 0; n <= 5; ++n) {
      ClauseVerdict e = F.euler_and_exactness_check(n);
      for (const auto& c : e.clauses) {
        INFO(c.clause, " at n=", c.n, ": ", c.lhs, " vs ", c.rhs);
        CHECK(c.ok);
      }
    }
  }

  SUBCASE("rigidity of the truncated complex across the window") {
    // h_1(D)(1,n) = 0 throughout forces h_2(D)(1,n) = 0 throughout.
    bool h1_all_zero = true;
    for (long long n = 0; n <= 5; ++n)
      h1_all_zero = h1_all_zero && F.homology(ComplexVariant::D1, n).h[1] == 0;
    REQUIRE(h1_all_zero);
    for (long long n = 0; n <= 5; ++n)
      CHECK(F.homology(ComplexVariant::D1, n).h[2] == 0);
  }

  SUBCASE("eventual vanishing of higher homology near the window top") {
    for (long long n = 4; n <= 5; ++n) {
      const HomologyReport& h = F.homology(ComplexVariant::C1, n);
      CHECK(h.h[1] == 0);
      CHECK(h.h[2] == 0);
    }
  }
}

TEST_CASE("surjection bound on the generator module of the sequence") {
  // len((x)/I1(x)) <= k len(R/I1)
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();

  auto bound_holds = [&](IdealPtr I1, const ParameterSequence& x) {
    IdealPtr X = A.make(x);
    long long lhs =
        static_cast<long long>(A.module_length(A.product(I1, X), X));
    long long rhs = static_cast<long long>(x.size() * I1->colength());
    CHECK(lhs <= rhs);
    return lhs;
  };

  CHECK(bound_holds(m, polys(R, "x, y")) == 2);  // equality for free images
  bound_holds(m, polys(R,
                       "x^3 + 2*x^2*y + 3*x*y^2 + 5*y^3, "
                       "7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3"));
}

TEST_CASE("operation-level wrappers build fresh instances") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  FiltrationPair pair = FiltrationPair::make(A, m, m);
  ComplexInstance cx =
      build_complex(polys(R, "x, y"), pair, ComplexVariant::C1, 3);
  CHECK(cx.terms[0].length() == 10);  // len(R/m^4)
  HomologyReport h =
      homology_lengths(polys(R, "x, y"), pair, ComplexVariant::C1, 3);
  CHECK(h.h[0] == 1);
  CHECK(h.h[1] == 0);
}
