#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/poly_ring.hpp"

namespace fibercone {

struct Term {
  Monomial mon;
  uint32_t coeff;  // nonzero, in [1, p)
};

// Sparse polynomial: terms strictly descending in the ring's order, all
// coefficients nonzero. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() : ring_(nullptr) {}
  explicit Polynomial(const PolyRing* ring) : ring_(ring) {}
  // Normalizes: merges equal monomials, drops zeros, sorts descending.
  Polynomial(const PolyRing* ring, std::vector<Term> terms);

  static Polynomial zero(const PolyRing& ring) { return Polynomial(&ring); }
  static Polynomial constant(const PolyRing& ring, uint32_t c);
  static Polynomial monomial(const PolyRing& ring, Monomial m, uint32_t c = 1);
  static Polynomial variable(const PolyRing& ring, size_t i);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mon; }
  uint32_t leading_coeff() const { return terms_.front().coeff; }
  uint64_t degree() const;  // max total degree over terms; 0 for zero poly

  Polynomial plus(const Polynomial& o) const;
  Polynomial minus(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial scaled(uint32_t c) const;
  Polynomial times(const Polynomial& o) const;
  Polynomial times_term(const Monomial& m, uint32_t c) const;
  Polynomial monic() const;
  // Exact division by a single term; throws if any term is not divisible.
  Polynomial divided_by_term(const Monomial& m, uint32_t c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const PolyRing* ring_;
  std::vector<Term> terms_;
};

// Maps a polynomial into another ring given a variable index map: target
// variable index for each source variable (monomials carried term-by-term).
Polynomial map_to_ring(const Polynomial& f, const PolyRing& target,
                       const std::vector<size_t>& var_map);

}  // namespace fibercone
