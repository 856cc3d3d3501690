#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/ideal.hpp"

namespace fibercone {

// C(top, k) as the degree-k polynomial top(top-1)...(top-k+1)/k!, valid for
// any integer top (so C(-1, 2) = 1). Exact integer arithmetic.
long long binom_poly(long long top, int k);
// C(top, k) with the combinatorial convention: 0 when top < 0.
long long binom_nonneg(long long top, int k);

// Two binomial bases for degree-D integer polynomial fits. A value sequence is
// represented as P(n) = sum_j (-1)^j c_j basis_j(n) with
//   A_j(n) = C(n + D - j, D - j)      (the basis of series numerators)
//   B_j(n) = C(n + D - 1 - j, D - j)  (the shifted basis used by the
//                                      summation formulas)
// Conversion: a_j = b_j + b_{j-1}.
enum class BasisTag { A, B };

long long basis_eval(BasisTag basis, int degree, int j, long long n);

struct BinomialFit {
  int degree = 0;  // D
  BasisTag basis = BasisTag::A;
  std::vector<long long> coeffs;  // c_0..c_D in the signed convention above
  long long postulation = 0;      // least n from which the fit matches values

  long long eval(long long n) const;
  BinomialFit to_basis(BasisTag target) const;
  std::string str() const;  // "(c0, c1, ...) basis=A deg=D from n0"
};

// Fits values[i] = f(lo + i) by a degree-`degree` binomial polynomial.
// Scans candidate postulation numbers upward; accepts the first n0 whose
// interpolant agrees with every later value up to the window end, with at
// least degree + 2 points of agreement. Throws WindowTooSmall otherwise.
BinomialFit fit_binomial(const std::vector<long long>& values, long long lo,
                         int degree, BasisTag basis);

// num(t) / (1 - t)^denom_exp with integer numerator.
struct RationalSeries {
  std::vector<long long> num;  // num[j] = coefficient of t^j; no trailing zeros
  int denom_exp = 0;

  long long value_at(long long n) const;  // coefficient of t^n, n >= 0
  RationalSeries minimal() const;         // cancel common (1 - t) factors
  RationalSeries with_denom(int e) const;  // re-express over (1 - t)^e
  std::string str() const;                 // e.g. "(4 + 4*t)/(1-t)^4"
  bool operator==(const RationalSeries& o) const;
};

// Numerator of sum_n values[n] t^n over (1 - t)^denom_exp. Requires at least
// `guard` verified zero coefficients past the numerator's degree, else throws
// WindowTooSmall (the window does not certify the tail).
RationalSeries series_from_values(const std::vector<long long>& values,
                                  int denom_exp, int guard = 2);

// The filtration {I1 * I2^n} of a pair of finite-colength ideals.
struct FiltrationPair {
  IdealArena* arena = nullptr;
  IdealPtr I1 = nullptr;
  IdealPtr I2 = nullptr;

  // Validates that both ideals are proper with finite colength.
  static FiltrationPair make(IdealArena& arena, IdealPtr I1, IdealPtr I2);

  int dim() const;  // number of ring variables

  // I1 * I2^n, with the convention I2^n = R for n <= 0 (value I1).
  IdealPtr filtration_ideal(long long n) const;
  // Primed variant: I1 * I2^n for n >= 0, the whole ring for n < 0.
  IdealPtr primed_ideal(long long n) const;

  // H(1,n) = len(R / I1 I2^n); equals len(R/I1) for n <= 0.
  long long hilbert_function(long long n) const;
  // H'(1,n) = H(1,n) for n >= 0, 0 for n < 0.
  long long hilbert_function_primed(long long n) const;
  // len(R / I2^n); 0 for n <= 0.
  long long power_function(long long n) const;
  // len(I2^n / I1 I2^n), n >= 0; computed by subtraction and cross-checked
  // against module_length.
  long long fiber_value(long long n) const;
};

// Collected Hilbert data of the filtration {I1 I2^n}: the g-coefficients.
struct HilbertData {
  FiltrationPair pair;
  long long N = 0;
  std::vector<long long> values;  // values[n] = H(1,n) for n in [0, N]
  BinomialFit g;                  // degree-d fit, A basis

  static HilbertData collect(const FiltrationPair& pair, long long N);
  RationalSeries series() const;  // closed form over (1-t)^(d+1)
};

// Hilbert data of the powers {I2^n}: the e-coefficients.
struct PowerHilbertData {
  IdealArena* arena = nullptr;
  IdealPtr I2 = nullptr;
  long long N = 0;
  std::vector<long long> values;  // values[n] = len(R/I2^n)
  BinomialFit e;                  // degree-d fit, A basis

  static PowerHilbertData collect(IdealArena& arena, IdealPtr I2, long long N);
};

// Hilbert data of the fiber quotients {I2^n / I1 I2^n}: the f-coefficients.
struct FiberHilbertData {
  FiltrationPair pair;
  long long N = 0;
  std::vector<long long> values;
  BinomialFit f;  // degree-(d-1) fit, A basis

  static FiberHilbertData collect(const FiltrationPair& pair, long long N);
  RationalSeries series() const;  // closed form over (1-t)^(d+1)
};

// C(n-s+d-1, d) = sum_{i=0}^{d} (-1)^i C(s+1, i) C(n+d-i, d-i); holds for all
// n >= s, d >= 1. Returns true iff the identity holds at every point of the
// sweep; on failure writes the first failing triple.
bool binomial_identity_check(int s_max, int d_max, long long n_max,
                             std::string* failure = nullptr);

}  // namespace fibercone
