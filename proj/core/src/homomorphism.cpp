#include "fbplab/homomorphism.hpp"

#include "fbplab/error.hpp"

namespace fbplab {

  namespace {
    Index evaluate(FiniteMonoid const&        m,
                   ElementSubstitution const& sigma,
                   Word const&                w) {
      return w.empty() ? m.identity() : evaluate_word(m, sigma, w);
    }
  }  // namespace

  HomomorphismResult extend_homomorphism(Presentation const&        source,
                                         FiniteMonoid const&        target,
                                         ElementSubstitution const& gen_map) {
    std::vector<Index> images;
    for (auto const& g : source.generators()) {
      auto it = gen_map.find(g);
      if (it == gen_map.end()) {
        throw UndefinedVariable(g.label());
      }
      if (it->second >= target.size()) {
        throw InvalidInput("generator image out of range");
      }
      images.push_back(it->second);
    }
    for (auto const& r : source.relations()) {
      if (evaluate(target, gen_map, r.lhs) != evaluate(target, gen_map, r.rhs)) {
        return HomomorphismResult{false, r, std::nullopt, false};
      }
    }
    auto       image      = submonoid_generated(target, images);
    bool const surjective = image.monoid.size() == target.size();
    return HomomorphismResult{true, std::nullopt, std::move(image), surjective};
  }

}  // namespace fbplab
