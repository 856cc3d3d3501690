#pragma once

#include <string>
#include <vector>

#include "fibercone/monomial.hpp"
#include "fibercone/prime_field.hpp"

namespace fibercone {

// A polynomial ring k[x_1..x_n] over a prime field with a fixed term order.
// Polynomials hold a pointer to their ring; rings must outlive them.
class PolyRing {
 public:
  PolyRing(uint32_t p, std::vector<std::string> vars,
           MonomialOrder order = MonomialOrder::Degrevlex);

  const PrimeField& field() const { return field_; }
  uint32_t characteristic() const { return field_.characteristic(); }
  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(size_t i) const { return vars_[i]; }
  // Returns the variable index or -1 if unknown.
  int var_index(const std::string& name) const;
  MonomialOrder order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const {
    return mon_cmp(a, b, order_);
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }

  std::string format(const Monomial& m) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace fibercone
