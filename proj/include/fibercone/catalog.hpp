#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fibercone/hilbert.hpp"
#include "fibercone/reduction.hpp"

namespace fibercone {

// A self-contained worked instance: a ring, an ideal pair, and a pinned
// parameter sequence inside I2 (deterministic, no random search needed).
struct CatalogInstance {
  std::string name;
  std::string summary;
  std::unique_ptr<PolyRing> ring;
  std::unique_ptr<IdealArena> arena;
  IdealPtr I1 = nullptr;
  IdealPtr I2 = nullptr;
  ParameterSequence x;

  FiltrationPair pair() const { return FiltrationPair::make(*arena, I1, I2); }
  int dim() const { return static_cast<int>(ring->nvars()); }
};

// Instance names, in catalog order:
//   regular            I1 = I2 = m in k[x,y]; the baseline where every
//                      inequality is tight and all higher homology vanishes.
//   no-inner-reduction I2 = m^2 in k[x,y,z] with an I1 whose only reductions
//                      of I2 sit outside I1; the sequence is a minimal
//                      reduction of I2 not contained in I1.
//   surjection-gap     the pair whose generator-module surjection
//                      (R/I1)^k -> (x)/I1(x) fails to be injective.
//   min-mult           I1 = I2 = m^2 in k[x,y,z]: minimal multiplicity.
//   almost-min-mult    I1 = m, I2 = m^3 in k[x,y]: almost minimal
//                      multiplicity (the length invariant equals 1).
//   neither            I1 = m, I2 = m^4 in k[x,y]: the length invariant is 3.
//   depth-split        I1 = m, I2 = (x^4, x^3 y, x y^3, y^4) in k[x,y]: the
//                      power filtration and the product filtration have
//                      different depths.
std::vector<std::string> catalog_names();

// Throws std::invalid_argument for an unknown name.
std::unique_ptr<CatalogInstance> make_catalog_instance(const std::string& name);

}  // namespace fibercone
