#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibercone/errors.hpp"
#include "fibercone/hilbert.hpp"
#include "fibercone/ideal.hpp"
#include "fibercone/parser.hpp"

using namespace fibercone;

namespace {

std::vector<Polynomial> polys(const PolyRing& R, const std::string& list) {
  return parse_poly_list(list, R);
}

std::vector<long long> coeffs(const BinomialFit& f) { return f.coeffs; }

}  // namespace

TEST_CASE("binomial coefficients, polynomial extension") {
  CHECK(binom_poly(6, 2) == 15);
  CHECK(binom_poly(4, 0) == 1);
  CHECK(binom_poly(3, 5) == 0);
  CHECK(binom_poly(-1, 2) == 1);   // (-1)(-2)/2
  CHECK(binom_poly(-2, 3) == -4);  // (-2)(-3)(-4)/6
  CHECK(binom_poly(-1, 1) == -1);
  CHECK(binom_nonneg(-1, 2) == 0);
  CHECK(binom_nonneg(-5, 0) == 0);
  CHECK(binom_nonneg(5, 2) == 10);
  // Pascal identity on a grid, including negative upper entries.
  for (long long t = -6; t <= 6; ++t)
    for (int k = 1; k <= 5; ++k)
      CHECK(binom_poly(t, k) == binom_poly(t - 1, k) + binom_poly(t - 1, k - 1));
}

TEST_CASE("basis evaluation and conversion") {
  // degree 2: A_0(n) = C(n+2,2), B_0(n) = C(n+1,2)
  CHECK(basis_eval(BasisTag::A, 2, 0, 3) == 10);
  CHECK(basis_eval(BasisTag::B, 2, 0, 3) == 6);
  CHECK(basis_eval(BasisTag::A, 2, 2, 7) == 1);
  CHECK(basis_eval(BasisTag::B, 2, 2, 7) == 1);

  BinomialFit b;
  b.degree = 2;
  b.basis = BasisTag::B;
  b.coeffs = {1, -1, 1};
  b.postulation = 0;
  BinomialFit a = b.to_basis(BasisTag::A);
  CHECK(coeffs(a) == std::vector<long long>{1, 0, 0});
  CHECK(coeffs(a.to_basis(BasisTag::B)) == coeffs(b));
  for (long long n = -3; n <= 10; ++n) CHECK(a.eval(n) == b.eval(n));

  BinomialFit e;
  e.degree = 2;
  e.basis = BasisTag::A;
  e.coeffs = {9, 12, 3};
  e.postulation = 0;
  CHECK(coeffs(e.to_basis(BasisTag::B)) == std::vector<long long>{9, 3, 0});
}

TEST_CASE("binomial fit by difference peeling") {
  SUBCASE("exact cubic data, postulation 0") {
    std::vector<long long> v;
    for (long long n = 0; n <= 8; ++n)
      v.push_back(8 * binom_poly(n + 3, 3) - 12 * binom_poly(n + 2, 2) +
                  4 * binom_poly(n + 1, 1));
    BinomialFit f = fit_binomial(v, 0, 3, BasisTag::A);
    CHECK(coeffs(f) == std::vector<long long>{8, 12, 4, 0});
    CHECK(f.postulation == 0);
    for (long long n = 0; n <= 8; ++n) CHECK(f.eval(n) == v[n]);
  }

  SUBCASE("initial deviation pushes postulation to 1") {
    std::vector<long long> v;
    for (long long n = 0; n <= 8; ++n) v.push_back(binom_poly(n + 2, 2));
    v[0] += 5;
    BinomialFit f = fit_binomial(v, 0, 2, BasisTag::A);
    CHECK(f.postulation == 1);
    CHECK(coeffs(f) == std::vector<long long>{1, 0, 0});
  }

  SUBCASE("window too small") {
    std::vector<long long> v{1, 4, 10, 20};
    CHECK_THROWS_AS(fit_binomial(v, 0, 3, BasisTag::A), WindowTooSmall);
  }

  SUBCASE("non-polynomial data never fits") {
    std::vector<long long> v{1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    CHECK_THROWS_AS(fit_binomial(v, 0, 2, BasisTag::A), WindowTooSmall);
  }

  SUBCASE("B basis fit agrees with A basis fit pointwise") {
    std::vector<long long> v;
    for (long long n = 0; n <= 9; ++n)
      v.push_back(9 * binom_poly(n + 2, 2) - 9 * binom_poly(n + 1, 1) + 1);
    BinomialFit fa = fit_binomial(v, 0, 2, BasisTag::A);
    BinomialFit fb = fit_binomial(v, 0, 2, BasisTag::B);
    CHECK(coeffs(fa) == std::vector<long long>{9, 9, 1});
    CHECK(coeffs(fb) == std::vector<long long>{9, 0, 1});
    CHECK(coeffs(fa.to_basis(BasisTag::B)) == coeffs(fb));
  }
}

TEST_CASE("rational series arithmetic") {
  RationalSeries s;
  s.num = {4, 4};
  s.denom_exp = 4;
  CHECK(s.value_at(0) == 4);
  CHECK(s.value_at(1) == 20);
  CHECK(s.value_at(2) == 56);
  CHECK(s.str() == "(4 + 4*t)/(1-t)^4");

  SUBCASE("denominator re-expression round trips") {
    RationalSeries up = s.with_denom(6);
    CHECK(up.denom_exp == 6);
    for (long long n = 0; n <= 12; ++n) CHECK(up.value_at(n) == s.value_at(n));
    CHECK(up.with_denom(4) == s);
    CHECK(up.minimal() == s);  // 4 + 4t has no (1-t) factor
  }

  SUBCASE("minimal cancels exactly the shared factors") {
    RationalSeries t;
    t.num = {1, -1, 1, -1};  // (1 + t^2)(1 - t)
    t.denom_exp = 3;
    RationalSeries m = t.minimal();
    CHECK(m.denom_exp == 2);
    CHECK(m.num == std::vector<long long>{1, 0, 1});
    for (long long n = 0; n <= 10; ++n) CHECK(m.value_at(n) == t.value_at(n));
  }

  SUBCASE("lowering below divisibility throws") {
    RationalSeries t;
    t.num = {1, 1};
    t.denom_exp = 2;
    CHECK_THROWS(t.with_denom(1));
  }

  SUBCASE("series recovered from values") {
    std::vector<long long> v;
    for (long long n = 0; n <= 6; ++n) v.push_back(s.value_at(n));
    CHECK(series_from_values(v, 4) == s);
    CHECK_THROWS_AS(series_from_values({4, 20, 56}, 4), WindowTooSmall);
  }
}

TEST_CASE("filtration data: powers of the maximal ideal in two variables") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  FiltrationPair pair = FiltrationPair::make(A, m, m);

  CHECK(pair.dim() == 2);
  CHECK(pair.filtration_ideal(0) == m);
  CHECK(pair.filtration_ideal(-3) == m);
  CHECK(pair.primed_ideal(-1) == A.unit());
  CHECK(pair.hilbert_function(-2) == 1);
  CHECK(pair.hilbert_function_primed(-2) == 0);
  CHECK(pair.hilbert_function(2) == 6);  // len(R/m^3)

  HilbertData h = HilbertData::collect(pair, 8);
  CHECK(coeffs(h.g) == std::vector<long long>{1, 0, 0});
  CHECK(h.g.postulation == 0);
  CHECK(coeffs(h.g.to_basis(BasisTag::B)) == std::vector<long long>{1, -1, 1});

  FiberHilbertData f = FiberHilbertData::collect(pair, 8);
  for (long long n = 0; n <= 8; ++n) CHECK(f.values[n] == n + 1);
  CHECK(coeffs(f.f) == std::vector<long long>{1, 0});
  CHECK(coeffs(f.f.to_basis(BasisTag::B)) == std::vector<long long>{1, -1});

  RationalSeries hs = h.series();
  CHECK(hs.num == std::vector<long long>{1});
  CHECK(hs.denom_exp == 3);
  RationalSeries fs = f.series();
  CHECK(fs.num == std::vector<long long>{1});
  CHECK(fs.denom_exp == 2);
}

TEST_CASE("filtration data: square of the maximal ideal in three variables") {
  PolyRing R(32003, {"x", "y", "z"});
  IdealArena A(R);
  IdealPtr m2 = A.power(A.maximal(), 2);
  FiltrationPair pair = FiltrationPair::make(A, m2, m2);

  HilbertData h = HilbertData::collect(pair, 7);
  CHECK(h.values[0] == 4);
  CHECK(h.values[1] == 20);
  CHECK(h.values[2] == 56);
  CHECK(coeffs(h.g) == std::vector<long long>{8, 4, 0, 0});
  CHECK(coeffs(h.g.to_basis(BasisTag::B)) ==
        std::vector<long long>{8, -4, 4, -4});
  CHECK(h.series() == [] {
    RationalSeries s;
    s.num = {4, 4};
    s.denom_exp = 4;
    return s;
  }());

  PowerHilbertData p = PowerHilbertData::collect(A, m2, 7);
  CHECK(coeffs(p.e) == std::vector<long long>{8, 12, 4, 0});
  CHECK(p.e.coeffs[0] == 8);  // multiplicity

  FiberHilbertData f = FiberHilbertData::collect(pair, 7);
  for (long long n = 0; n <= 7; ++n)
    CHECK(f.values[n] == 4 * (n + 1) * (n + 1));
  CHECK(coeffs(f.f) == std::vector<long long>{8, 4, 0});
}

TEST_CASE("filtration data: maximal ideal times its cube in two variables") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  IdealPtr m3 = A.power(m, 3);
  FiltrationPair pair = FiltrationPair::make(A, m, m3);

  HilbertData h = HilbertData::collect(pair, 6);
  CHECK(h.values == std::vector<long long>{1, 10, 28, 55, 91, 136, 190});
  CHECK(coeffs(h.g) == std::vector<long long>{9, 9, 1});
  CHECK(coeffs(h.g.to_basis(BasisTag::B)) == std::vector<long long>{9, 0, 1});

  RationalSeries hs = h.series();
  CHECK(hs.num == std::vector<long long>{1, 7, 1});
  CHECK(hs.denom_exp == 3);

  PowerHilbertData p = PowerHilbertData::collect(A, m3, 6);
  CHECK(p.values == std::vector<long long>{0, 6, 21, 45, 78, 120, 171});
  CHECK(coeffs(p.e) == std::vector<long long>{9, 12, 3});

  FiberHilbertData f = FiberHilbertData::collect(pair, 6);
  for (long long n = 0; n <= 6; ++n) CHECK(f.values[n] == 3 * n + 1);
  CHECK(coeffs(f.f) == std::vector<long long>{3, 2});
  CHECK(coeffs(f.f.to_basis(BasisTag::B)) == std::vector<long long>{3, -1});

  SUBCASE("fiber coefficients from power and filtration coefficients") {
    // f_i in the A basis equals (e_{i+1} - g_{i+1}) + (e_i - g_i) in the B
    // basis; this ties all three data sets together.
    auto eb = coeffs(p.e.to_basis(BasisTag::B));
    auto gb = coeffs(h.g.to_basis(BasisTag::B));
    auto fa = coeffs(f.f);
    for (size_t i = 0; i + 1 < eb.size(); ++i)
      CHECK(fa[i] == eb[i + 1] - gb[i + 1] + eb[i] - gb[i]);
  }

  SUBCASE("additivity of lengths across the three functions") {
    for (long long n = 0; n <= 6; ++n)
      CHECK(pair.hilbert_function(n) ==
            pair.power_function(n) + pair.fiber_value(n));
  }
}

TEST_CASE("filtration pair validation") {
  PolyRing R(32003, {"x", "y"});
  IdealArena A(R);
  IdealPtr m = A.maximal();
  CHECK_THROWS_AS(FiltrationPair::make(A, A.unit(), m), HypothesisViolated);
  IdealPtr line = A.make(polys(R, "x"));
  CHECK_THROWS_AS(FiltrationPair::make(A, m, line), NotFiniteColength);
  CHECK_THROWS_AS(PowerHilbertData::collect(A, line, 4), NotFiniteColength);
}

TEST_CASE("alternating binomial identity sweep") {
  std::string failure;
  CHECK(binomial_identity_check(6, 6, 20, &failure));
  CHECK(failure.empty());
}
