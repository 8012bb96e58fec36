#include "fbplab/families.hpp"

namespace fbplab {

  Closure<PartialMap> transformation_closure(
      std::size_t                    degree,
      std::vector<PartialMap> const& generators,
      ClosureOptions                 options) {
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw InvalidInput("generator " + g.to_string() + " has degree "
                           + std::to_string(g.degree()) + ", expected "
                           + std::to_string(degree));
      }
    }
    return closure(
        PartialMap::identity(degree),
        generators,
        [](PartialMap const& a, PartialMap const& b) { return compose(a, b); },
        [](PartialMap const& a) { return a.to_string(); },
        options);
  }

  Closure<PartialMap> family_monoid(FamilyKind  kind,
                                    std::size_t m,
                                    FamilyRoute route,
                                    std::size_t max_m) {
    auto generators = route == FamilyRoute::enumeration
                          ? enumerate_family(kind, m, max_m)
                          : family_generators(kind, m, max_m);
    return transformation_closure(m, generators);
  }

}  // namespace fbplab
