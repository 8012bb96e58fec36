// Extending a map on generators of a presentation to a monoid homomorphism.

#ifndef FBPLAB_HOMOMORPHISM_HPP_
#define FBPLAB_HOMOMORPHISM_HPP_

#include <optional>

#include "fbplab/monoid.hpp"
#include "fbplab/presentation.hpp"

namespace fbplab {

  struct HomomorphismResult {
    bool                    ok;
    // First relation whose sides evaluate differently.
    std::optional<Relation> failed_relation;
    // Submonoid of the target generated by the generator images.
    std::optional<Submonoid> image;
    bool                    surjective;
  };

  // The map on generators extends to a homomorphism exactly when every
  // relation holds in the target. Throws UndefinedVariable when gen_map
  // misses a generator.
  HomomorphismResult extend_homomorphism(Presentation const&        source,
                                         FiniteMonoid const&        target,
                                         ElementSubstitution const& gen_map);

}  // namespace fbplab

#endif  // FBPLAB_HOMOMORPHISM_HPP_
