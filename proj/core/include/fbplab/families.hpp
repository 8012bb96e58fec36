// Transformation monoid families as FiniteMonoid tables.

#ifndef FBPLAB_FAMILIES_HPP_
#define FBPLAB_FAMILIES_HPP_

#include <cstddef>
#include <vector>

#include "fbplab/monoid.hpp"
#include "fbplab/transformation.hpp"

namespace fbplab {

  // Closure of maps of a common degree under composition.
  Closure<PartialMap> transformation_closure(
      std::size_t                    degree,
      std::vector<PartialMap> const& generators,
      ClosureOptions                 options = {});

  enum class FamilyRoute {
    // Every member enumerated, then closed (the members are the generators).
    enumeration,
    // Closure of family_generators.
    generators
  };

  Closure<PartialMap> family_monoid(FamilyKind  kind,
                                    std::size_t m,
                                    FamilyRoute route = FamilyRoute::generators,
                                    std::size_t max_m = 8);

}  // namespace fbplab

#endif  // FBPLAB_FAMILIES_HPP_
