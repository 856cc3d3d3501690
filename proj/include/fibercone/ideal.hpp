#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/groebner.hpp"
#include "fibercone/polynomial.hpp"

namespace fibercone {

// An ideal of a polynomial ring, normalized to its reduced Groebner basis.
// Instances are owned and interned by an IdealArena: two handles compare equal
// iff they are the same pointer.
class Ideal {
 public:
  const PolyRing& ring() const { return *ring_; }
  const std::vector<Polynomial>& gb() const { return gb_; }
  bool is_zero() const { return gb_.empty(); }
  bool is_unit() const;

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb_); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& other) const;

  // True iff the quotient ring/ideal has finite k-dimension, i.e. every
  // variable appears as a pure power among the leading monomials.
  bool is_zero_dimensional() const;
  // dim_k(R/I); throws NotFiniteColength when infinite.
  uint64_t colength() const;
  // The standard monomials (basis of R/I), sorted ascending in ring order.
  const std::vector<Monomial>& std_monomials() const;
  // Index of a monomial in std_monomials(), or nullopt if not standard.
  std::optional<uint32_t> std_index(const Monomial& m) const;

  uint64_t gb_hash() const { return hash_; }

 private:
  friend class IdealArena;
  Ideal(const PolyRing* ring, std::vector<Polynomial> gb, uint64_t hash)
      : ring_(ring), gb_(std::move(gb)), hash_(hash) {}

  const PolyRing* ring_;
  std::vector<Polynomial> gb_;
  uint64_t hash_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<Monomial>> std_;
  mutable std::map<Monomial, uint32_t> std_index_;
};

using IdealPtr = const Ideal*;

// Creates, interns, and combines ideals of one ring. All products, powers,
// intersections, and colons are memoized; handles returned by the arena stay
// valid for its lifetime.
class IdealArena {
 public:
  explicit IdealArena(const PolyRing& ring);
  ~IdealArena();

  const PolyRing& ring() const { return *ring_; }

  IdealPtr make(std::vector<Polynomial> gens);
  IdealPtr zero();
  IdealPtr unit();
  IdealPtr maximal();  // (x_1, ..., x_n)
  IdealPtr principal(const Polynomial& f);

  IdealPtr sum(IdealPtr a, IdealPtr b);
  IdealPtr product(IdealPtr a, IdealPtr b);
  IdealPtr power(IdealPtr a, int n);  // n <= 0 gives the unit ideal
  IdealPtr intersect(IdealPtr a, IdealPtr b);
  IdealPtr colon(IdealPtr a, IdealPtr b);  // (a : b)

  // dim_k(I/J) for J subseteq I inside a zero-dimensional setting:
  // colength(J) - colength(I).
  uint64_t module_length(IdealPtr sub, IdealPtr big) const;

 private:
  IdealPtr intern(std::vector<Polynomial> gb);
  IdealPtr colon_single(IdealPtr a, const Polynomial& g);

  const PolyRing* ring_;
  std::unique_ptr<PolyRing> elim_ring_;  // one aux variable + originals
  std::vector<size_t> to_elim_;          // var map ring -> elim_ring
  std::mutex mu_;
  std::vector<std::unique_ptr<Ideal>> pool_;
  std::map<std::pair<uint64_t, std::string>, IdealPtr> interned_;
  std::map<std::tuple<char, IdealPtr, IdealPtr>, IdealPtr> binary_memo_;
  std::map<std::pair<IdealPtr, int>, IdealPtr> power_memo_;
};

}  // namespace fibercone
