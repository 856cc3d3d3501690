#include "fibercone/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("binomial overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("sum overflow");
  return r;
}

std::vector<long long> strip_trailing_zeros(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string poly_str(const std::vector<long long>& num) {
  if (num.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < num.size(); ++j) {
    long long c = num[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "t";
      if (j >= 2) os << "^" << j;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

long long binom_poly(long long top, int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (top < 0) {
    // C(top, k) = (-1)^k C(k - top - 1, k), now with nonnegative upper entry.
    long long v = binom_poly(k - top - 1, k);
    return (k % 2 == 0) ? v : -v;
  }
  if (top < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    // r stays integral: it is C(top - k + i, i) after step i.
    r = checked_mul(r, top - k + i) / i;
  }
  return r;
}

long long binom_nonneg(long long top, int k) {
  if (top < 0) return 0;
  return binom_poly(top, k);
}

long long basis_eval(BasisTag basis, int degree, int j, long long n) {
  int e = degree - j;
  long long top = basis == BasisTag::A ? n + degree - j : n + degree - 1 - j;
  return binom_poly(top, e);
}

long long BinomialFit::eval(long long n) const {
  long long total = 0;
  for (int j = 0; j <= degree; ++j) {
    long long term = checked_mul(coeffs[j], basis_eval(basis, degree, j, n));
    total = checked_add(total, j % 2 == 0 ? term : -term);
  }
  return total;
}

BinomialFit BinomialFit::to_basis(BasisTag target) const {
  if (target == basis) return *this;
  BinomialFit out = *this;
  out.basis = target;
  // With the signed convention P = sum (-1)^j c_j basis_j, the bases relate by
  // A_j = B_j + A_{j+1}, giving a_j = b_j + b_{j-1}.
  if (target == BasisTag::A) {
    long long prev = 0;
    for (int j = 0; j <= degree; ++j) {
      long long b = coeffs[j];
      out.coeffs[j] = checked_add(b, prev);
      prev = b;
    }
  } else {
    long long prev = 0;
    for (int j = 0; j <= degree; ++j) {
      out.coeffs[j] = coeffs[j] - prev;
      prev = out.coeffs[j];
    }
  }
  return out;
}

std::string BinomialFit::str() const {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j <= degree; ++j) {
    if (j) os << ", ";
    os << coeffs[j];
  }
  os << ") basis=" << (basis == BasisTag::A ? "A" : "B") << " deg=" << degree
     << " from n=" << postulation;
  return os.str();
}

BinomialFit fit_binomial(const std::vector<long long>& values, long long lo,
                         int degree, BasisTag basis) {
  const long long len = static_cast<long long>(values.size());
  const int D = degree;
  for (long long n0 = lo; n0 + D + 2 <= lo + len; ++n0) {
    const long long off = n0 - lo;
    std::vector<long long> resid(values.begin() + off, values.end());
    BinomialFit fit;
    fit.degree = D;
    fit.basis = basis;
    fit.coeffs.assign(D + 1, 0);
    fit.postulation = n0;
    bool ok = true;
    for (int j = 0; j <= D && ok; ++j) {
      int e = D - j;  // degree of basis_j; its e-th forward difference is 1
      if (static_cast<long long>(resid.size()) < e + 1) {
        ok = false;
        break;
      }
      long long diff = 0;
      for (int i = 0; i <= e; ++i) {
        long long term = checked_mul(binom_nonneg(e, i), resid[i]);
        diff = checked_add(diff, (e - i) % 2 == 0 ? term : -term);
      }
      fit.coeffs[j] = (j % 2 == 0) ? diff : -diff;
      for (size_t t = 0; t < resid.size(); ++t) {
        long long term = checked_mul(
            fit.coeffs[j],
            basis_eval(basis, D, j, n0 + static_cast<long long>(t)));
        resid[t] -= (j % 2 == 0) ? term : -term;
      }
    }
    if (!ok) continue;
    for (long long r : resid)
      if (r != 0) {
        ok = false;
        break;
      }
    if (ok) return fit;
  }
  throw WindowTooSmall(
      "no binomial polynomial of degree " + std::to_string(degree) +
      " matches a tail of the window with " + std::to_string(degree + 2) +
      " agreement points");
}

long long RationalSeries::value_at(long long n) const {
  if (n < 0) return 0;
  long long total = 0;
  for (size_t j = 0; j < num.size(); ++j) {
    if (num[j] == 0) continue;
    long long c;
    if (denom_exp == 0) {
      c = (static_cast<long long>(j) == n) ? 1 : 0;
    } else {
      c = binom_nonneg(n - static_cast<long long>(j) + denom_exp - 1,
                       denom_exp - 1);
    }
    total = checked_add(total, checked_mul(num[j], c));
  }
  return total;
}

RationalSeries RationalSeries::minimal() const {
  RationalSeries r;
  r.num = strip_trailing_zeros(num);
  r.denom_exp = denom_exp;
  while (r.denom_exp > 0) {
    long long at_one = 0;
    for (long long c : r.num) at_one = checked_add(at_one, c);
    if (at_one != 0 || r.num.empty()) break;
    // num = (1 - t) q  =>  q[j] = num[j] + q[j-1]
    std::vector<long long> q;
    long long prev = 0;
    for (size_t j = 0; j + 1 < r.num.size(); ++j) {
      prev = checked_add(r.num[j], prev);
      q.push_back(prev);
    }
    r.num = strip_trailing_zeros(std::move(q));
    r.denom_exp -= 1;
  }
  return r;
}

RationalSeries RationalSeries::with_denom(int e) const {
  RationalSeries r;
  r.num = strip_trailing_zeros(num);
  r.denom_exp = denom_exp;
  while (r.denom_exp < e) {
    // multiply numerator by (1 - t)
    std::vector<long long> p(r.num.size() + 1, 0);
    for (size_t j = 0; j < r.num.size(); ++j) {
      p[j] = checked_add(p[j], r.num[j]);
      p[j + 1] = checked_add(p[j + 1], -r.num[j]);
    }
    r.num = strip_trailing_zeros(std::move(p));
    r.denom_exp += 1;
  }
  while (r.denom_exp > e) {
    long long at_one = 0;
    for (long long c : r.num) at_one = checked_add(at_one, c);
    if (at_one != 0)
      throw std::invalid_argument(
          "series numerator not divisible by (1 - t)");
    std::vector<long long> q;
    long long prev = 0;
    for (size_t j = 0; j + 1 < r.num.size(); ++j) {
      prev = checked_add(r.num[j], prev);
      q.push_back(prev);
    }
    r.num = strip_trailing_zeros(std::move(q));
    r.denom_exp -= 1;
  }
  return r;
}

std::string RationalSeries::str() const {
  std::ostringstream os;
  os << "(" << poly_str(num) << ")";
  if (denom_exp > 0) {
    os << "/(1-t)";
    if (denom_exp > 1) os << "^" << denom_exp;
  }
  return os.str();
}

bool RationalSeries::operator==(const RationalSeries& o) const {
  return strip_trailing_zeros(num) == strip_trailing_zeros(o.num) &&
         denom_exp == o.denom_exp;
}

RationalSeries series_from_values(const std::vector<long long>& values,
                                  int denom_exp, int guard) {
  RationalSeries r;
  r.denom_exp = denom_exp;
  std::vector<long long> num(values.size(), 0);
  for (size_t j = 0; j < values.size(); ++j) {
    long long c = 0;
    for (int i = 0; i <= denom_exp && static_cast<size_t>(i) <= j; ++i) {
      long long term = checked_mul(binom_nonneg(denom_exp, i), values[j - i]);
      c = checked_add(c, i % 2 == 0 ? term : -term);
    }
    num[j] = c;
  }
  size_t last = num.size();
  while (last > 0 && num[last - 1] == 0) --last;
  if (num.size() - last < static_cast<size_t>(guard))
    throw WindowTooSmall(
        "window does not certify the series tail: need " +
        std::to_string(guard) + " trailing zero coefficients, saw " +
        std::to_string(num.size() - last));
  num.resize(last);
  r.num = std::move(num);
  return r;
}

FiltrationPair FiltrationPair::make(IdealArena& arena, IdealPtr I1,
                                    IdealPtr I2) {
  if (I1->is_unit() || I2->is_unit())
    throw HypothesisViolated("filtration ideals must be proper");
  if (I1->is_zero() || I2->is_zero())
    throw NotFiniteColength("filtration ideals must be nonzero");
  if (!I1->is_zero_dimensional() || !I2->is_zero_dimensional())
    throw NotFiniteColength("filtration ideals must have finite colength");
  FiltrationPair p;
  p.arena = &arena;
  p.I1 = I1;
  p.I2 = I2;
  return p;
}

int FiltrationPair::dim() const {
  return static_cast<int>(arena->ring().nvars());
}

IdealPtr FiltrationPair::filtration_ideal(long long n) const {
  int k = n <= 0 ? 0 : static_cast<int>(n);
  return arena->product(I1, arena->power(I2, k));
}

IdealPtr FiltrationPair::primed_ideal(long long n) const {
  if (n < 0) return arena->unit();
  return filtration_ideal(n);
}

long long FiltrationPair::hilbert_function(long long n) const {
  return static_cast<long long>(filtration_ideal(n)->colength());
}

long long FiltrationPair::hilbert_function_primed(long long n) const {
  if (n < 0) return 0;
  return hilbert_function(n);
}

long long FiltrationPair::power_function(long long n) const {
  if (n <= 0) return 0;
  return static_cast<long long>(
      arena->power(I2, static_cast<int>(n))->colength());
}

long long FiltrationPair::fiber_value(long long n) const {
  if (n < 0) return 0;
  IdealPtr pw = arena->power(I2, n <= 0 ? 0 : static_cast<int>(n));
  // module_length validates the containment I1*I2^n <= I2^n.
  return static_cast<long long>(
      arena->module_length(filtration_ideal(n), pw));
}

HilbertData HilbertData::collect(const FiltrationPair& pair, long long N) {
  HilbertData d;
  d.pair = pair;
  d.N = N;
  for (long long n = 0; n <= N; ++n)
    d.values.push_back(pair.hilbert_function(n));
  d.g = fit_binomial(d.values, 0, pair.dim(), BasisTag::A);
  return d;
}

RationalSeries HilbertData::series() const {
  return series_from_values(values, pair.dim() + 1);
}

PowerHilbertData PowerHilbertData::collect(IdealArena& arena, IdealPtr I2,
                                           long long N) {
  if (I2->is_unit() || !I2->is_zero_dimensional())
    throw NotFiniteColength("powers require a proper finite-colength ideal");
  PowerHilbertData d;
  d.arena = &arena;
  d.I2 = I2;
  d.N = N;
  for (long long n = 0; n <= N; ++n)
    d.values.push_back(
        n == 0 ? 0
               : static_cast<long long>(
                     arena.power(I2, static_cast<int>(n))->colength()));
  d.e = fit_binomial(d.values, 0, static_cast<int>(arena.ring().nvars()),
                     BasisTag::A);
  return d;
}

FiberHilbertData FiberHilbertData::collect(const FiltrationPair& pair,
                                           long long N) {
  FiberHilbertData d;
  d.pair = pair;
  d.N = N;
  for (long long n = 0; n <= N; ++n) d.values.push_back(pair.fiber_value(n));
  d.f = fit_binomial(d.values, 0, pair.dim() - 1, BasisTag::A);
  return d;
}

RationalSeries FiberHilbertData::series() const {
  return series_from_values(values, pair.dim());
}

bool binomial_identity_check(int s_max, int d_max, long long n_max,
                             std::string* failure) {
  for (int s = 0; s <= s_max; ++s) {
    for (int d = 1; d <= d_max; ++d) {
      for (long long n = s; n <= n_max; ++n) {
        long long lhs = binom_nonneg(n - s + d - 1, d);
        long long rhs = 0;
        for (int i = 0; i <= d; ++i) {
          long long term = checked_mul(binom_nonneg(s + 1, i),
                                       binom_nonneg(n + d - i, d - i));
          rhs = checked_add(rhs, i % 2 == 0 ? term : -term);
        }
        if (lhs != rhs) {
          if (failure)
            *failure = "s=" + std::to_string(s) + " d=" + std::to_string(d) +
                       " n=" + std::to_string(n) +
                       ": lhs=" + std::to_string(lhs) +
                       " rhs=" + std::to_string(rhs);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace fibercone
