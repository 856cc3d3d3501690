#pragma once

#include <vector>

#include "fibercone/polynomial.hpp"

namespace fibercone {

// Remainder of f on division by basis (multivariate division algorithm).
// If basis is a Groebner basis this is the unique normal form.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis);

// Reduced Groebner basis of the ideal generated by gens, in the ring's term
// order: monic, tails reduced, sorted ascending by leading monomial. Empty
// result = zero ideal; basis {1} = unit ideal.
std::vector<Polynomial> reduced_groebner(const PolyRing& ring,
                                         std::vector<Polynomial> gens);

}  // namespace fibercone
