#include "fibercone/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "fibercone/errors.hpp"

namespace fibercone {

PolyRing::PolyRing(uint32_t p, std::vector<std::string> vars,
                   MonomialOrder order)
    : field_(p), vars_(std::move(vars)), order_(order) {
  if (vars_.empty()) throw std::invalid_argument("ring needs >= 1 variable");
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("duplicate variable name " + vars_[i]);
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
  }
  return out.empty() ? "1" : out;
}

namespace {
void check_same_ring(const PolyRing* a, const PolyRing* b) {
  if (a != b) throw RingMismatch("polynomials from different rings");
}
}  // namespace

Polynomial::Polynomial(const PolyRing* ring, std::vector<Term> terms)
    : ring_(ring) {
  const PrimeField& F = ring->field();
  std::unordered_map<Monomial, uint64_t, MonomialHash> acc;
  for (auto& t : terms) acc[t.mon] += t.coeff;
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    uint32_t r = static_cast<uint32_t>(c % F.characteristic());
    if (r) terms_.push_back(Term{m, r});
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ring->cmp(a.mon, b.mon) > 0;
  });
}

Polynomial Polynomial::constant(const PolyRing& ring, uint32_t c) {
  c %= ring.characteristic();
  Polynomial f(&ring);
  if (c) f.terms_.push_back(Term{Monomial::one(ring.nvars()), c});
  return f;
}

Polynomial Polynomial::monomial(const PolyRing& ring, Monomial m, uint32_t c) {
  c %= ring.characteristic();
  Polynomial f(&ring);
  if (c) f.terms_.push_back(Term{std::move(m), c});
  return f;
}

Polynomial Polynomial::variable(const PolyRing& ring, size_t i) {
  return monomial(ring, Monomial::var(ring.nvars(), i), 1);
}

uint64_t Polynomial::degree() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

Polynomial Polynomial::plus(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const PrimeField& F = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->cmp(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s) r.terms_.push_back(Term{terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::minus(const Polynomial& o) const {
  return plus(o.negated());
}

Polynomial Polynomial::negated() const {
  const PrimeField& F = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mon, F.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mon, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const PrimeField& F = ring_->field();
  const uint64_t p = F.characteristic();
  // Accumulate in uint64 and reduce lazily; p^2 * 2^20 stays below 2^64 for
  // p = 32003, so flush only on the rare risk of wraparound.
  const uint64_t limit = UINT64_MAX - static_cast<uint64_t>(p - 1) * (p - 1);
  std::unordered_map<Monomial, uint64_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      uint64_t& slot = acc[a.mon.times(b.mon)];
      if (slot > limit) slot %= p;
      slot += static_cast<uint64_t>(a.coeff) * b.coeff;
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    uint32_t v = static_cast<uint32_t>(c % p);
    if (v) r.terms_.push_back(Term{m, v});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&](const Term& a, const Term& b) {
              return ring_->cmp(a.mon, b.mon) > 0;
            });
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplying every monomial by a fixed monomial preserves the order.
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mon.times(m), F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::divided_by_term(const Monomial& m, uint32_t c) const {
  const PrimeField& F = ring_->field();
  uint32_t ci = F.inv(c);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mon))
      throw std::domain_error("inexact term division of polynomial");
    r.terms_.push_back(Term{t.mon.divided_by(m), F.mul(t.coeff, ci)});
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon)
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string mon = ring_->format(t.mon);
    if (t.mon.is_one()) {
      out << t.coeff;
    } else if (t.coeff == 1) {
      out << mon;
    } else {
      out << t.coeff << "*" << mon;
    }
  }
  return out.str();
}

Polynomial map_to_ring(const Polynomial& f, const PolyRing& target,
                       const std::vector<size_t>& var_map) {
  const PolyRing* src = f.ring();
  assert(var_map.size() == src->nvars());
  (void)src;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExpVec e(target.nvars(), 0);
    for (size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] += t.mon.exp(i);
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(&target, std::move(terms));
}

}  // namespace fibercone
