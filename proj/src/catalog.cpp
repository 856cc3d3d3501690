#include "fibercone/catalog.hpp"

#include <stdexcept>

#include "fibercone/parser.hpp"

namespace fibercone {

namespace {

std::unique_ptr<CatalogInstance> build(
    const std::string& name, const std::string& summary,
    std::vector<std::string> vars, const std::string& I1_gens,
    const std::string& I2_gens, const std::string& x_list) {
  auto inst = std::make_unique<CatalogInstance>();
  inst->name = name;
  inst->summary = summary;
  inst->ring = std::make_unique<PolyRing>(32003, std::move(vars));
  inst->arena = std::make_unique<IdealArena>(*inst->ring);
  inst->I1 = inst->arena->make(parse_poly_list(I1_gens, *inst->ring));
  inst->I2 = inst->arena->make(parse_poly_list(I2_gens, *inst->ring));
  inst->x = parse_poly_list(x_list, *inst->ring);
  return inst;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"regular",         "no-inner-reduction", "surjection-gap",
          "min-mult",        "almost-min-mult",    "neither",
          "depth-split"};
}

std::unique_ptr<CatalogInstance> make_catalog_instance(
    const std::string& name) {
  if (name == "regular")
    return build("regular", "maximal ideal paired with itself in k[x,y]",
                 {"x", "y"}, "x, y", "x, y", "x, y");
  if (name == "no-inner-reduction")
    return build(
        "no-inner-reduction",
        "square of the maximal ideal over an I1 that contains no reduction "
        "of it",
        {"x", "y", "z"}, "x^4, y^2, z^2, x*y, x*z, y*z", "x^2, y^2, z^2, x*y, x*z, y*z",
        "x^2 + y*z, y^2 + z^2 + x*z, x*z + x*y");
  if (name == "surjection-gap")
    return build(
        "surjection-gap",
        "pair whose generator-module surjection has a kernel",
        {"x", "y", "z"}, "x^4, y^3, z^3, x*y, x*z, y*z",
        "x^3, y^3, z^3, x*y, x*z, y*z", "x^3 + y*z, y^3 + z^3 + x*z, x*z + x*y");
  if (name == "min-mult")
    return build("min-mult",
                 "square of the maximal ideal paired with itself in k[x,y,z]",
                 {"x", "y", "z"}, "x^2, y^2, z^2, x*y, x*z, y*z",
                 "x^2, y^2, z^2, x*y, x*z, y*z",
                 "x^2 + y*z, y^2 + z^2 + x*z, x*z + x*y");
  if (name == "almost-min-mult")
    return build("almost-min-mult",
                 "maximal ideal over its cube in k[x,y]", {"x", "y"}, "x, y",
                 "x^3, x^2*y, x*y^2, y^3",
                 "x^3 + 2*x^2*y + 3*x*y^2 + 5*y^3, "
                 "7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3");
  if (name == "neither")
    return build("neither",
                 "maximal ideal over its fourth power in k[x,y]", {"x", "y"},
                 "x, y", "x^4, x^3*y, x^2*y^2, x*y^3, y^4",
                 "x^4 + 2*x^3*y + 3*x^2*y^2 + 5*x*y^3 + 7*y^4, "
                 "11*x^4 + 13*x^3*y + 17*x^2*y^2 + 19*x*y^3 + 23*y^4");
  if (name == "depth-split")
    return build("depth-split",
                 "four-generator quartic ideal whose power filtration and "
                 "product filtration have different depths",
                 {"x", "y"}, "x, y", "x^4, x^3*y, x*y^3, y^4",
                 "x^4 + 2*x^3*y + 3*x*y^3 + 5*y^4, "
                 "7*x^4 + 11*x^3*y + 13*x*y^3 + 17*y^4");
  throw std::invalid_argument("unknown catalog instance: " + name);
}

}  // namespace fibercone
