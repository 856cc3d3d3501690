#include "fibercone/monomial.hpp"

#include <cassert>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {
constexpr uint32_t kExpCap = 1u << 30;
}

Monomial Monomial::var(size_t nvars, size_t i, uint32_t e) {
  ExpVec v(nvars, 0);
  v.at(i) = e;
  return Monomial(std::move(v));
}

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (uint32_t e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (uint32_t e : exps_)
    if (e) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  assert(exps_.size() == o.exps_.size());
  ExpVec v(exps_.size());
  for (size_t i = 0; i < v.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(exps_[i]) + o.exps_[i];
    if (s >= kExpCap) throw OverflowError("monomial exponent overflow");
    v[i] = static_cast<uint32_t>(s);
  }
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
  assert(exps_.size() == o.exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  assert(o.divides(*this));
  ExpVec v(exps_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] - o.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& o) const {
  ExpVec v(exps_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& o) const {
  ExpVec v(exps_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::min(exps_[i], o.exps_[i]);
  return Monomial(std::move(v));
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

namespace {

// Graded reverse lexicographic compare restricted to variables [from, n).
// Higher total degree wins; on ties, the monomial with the smaller exponent in
// the last variable where they differ is the larger one.
int degrevlex_cmp(const Monomial& a, const Monomial& b, size_t from) {
  uint64_t da = 0, db = 0;
  for (size_t i = from; i < a.nvars(); ++i) {
    da += a.exp(i);
    db += b.exp(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.nvars(); i-- > from;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int mon_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  assert(a.nvars() == b.nvars());
  switch (order) {
    case MonomialOrder::Degrevlex:
      return degrevlex_cmp(a, b, 0);
    case MonomialOrder::ElimFirst: {
      if (a.exp(0) != b.exp(0)) return a.exp(0) < b.exp(0) ? -1 : 1;
      return degrevlex_cmp(a, b, 1);
    }
  }
  return 0;
}

}  // namespace fibercone
