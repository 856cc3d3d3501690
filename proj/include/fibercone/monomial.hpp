#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace fibercone {

using ExpVec = std::vector<uint32_t>;

// Exponent vector in a fixed number of variables. The ring context (variable
// names, term order) lives in PolyRing; Monomial is pure combinatorics.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(ExpVec exps) : exps_(std::move(exps)) {}
  static Monomial one(size_t nvars) { return Monomial(ExpVec(nvars, 0)); }
  static Monomial var(size_t nvars, size_t i, uint32_t e = 1);

  size_t nvars() const { return exps_.size(); }
  uint32_t exp(size_t i) const { return exps_[i]; }
  const ExpVec& exps() const { return exps_; }
  uint64_t degree() const;
  bool is_one() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // *this / o, requires o.divides(*this)
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  // Container ordering only (plain lexicographic); term orders go through
  // mon_cmp.
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  ExpVec exps_;
};

enum class MonomialOrder {
  Degrevlex,
  // Block order: variable 0 alone (by exponent, larger first), ties broken by
  // degrevlex on the remaining variables. Monomials free of variable 0 compare
  // below anything containing it; used for elimination.
  ElimFirst,
};

// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
int mon_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t e : m.exps()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace fibercone
