// Finite monoids as full multiplication tables, plus the generic closure
// that builds them from concrete generators.

#ifndef FBPLAB_MONOID_HPP_
#define FBPLAB_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fbplab/error.hpp"
#include "fbplab/transformation.hpp"
#include "fbplab/word.hpp"

namespace fbplab {

  // Bytes a single multiplication table may occupy; FBPLAB_CAP_MB overrides
  // the default of 4096 MB.
  std::size_t table_memory_cap_bytes();

  class FiniteMonoid {
   public:
    using Index = std::uint32_t;

    static constexpr std::size_t associativity_check_limit = 200;

    // Marks tables whose identity law and associativity are guaranteed by
    // construction.
    struct Trusted {};

    // Checks the identity law, and associativity when size <=
    // associativity_check_limit. Labels may be empty.
    FiniteMonoid(std::size_t              size,
                 std::vector<Index>       table,
                 Index                    identity,
                 std::vector<Index>       generators,
                 std::vector<std::string> labels = {});
    FiniteMonoid(Trusted,
                 std::size_t              size,
                 std::vector<Index>       table,
                 Index                    identity,
                 std::vector<Index>       generators,
                 std::vector<std::string> labels = {});

    // The one-element monoid.
    FiniteMonoid();

    std::size_t size() const noexcept {
      return size_;
    }
    Index product(Index a, Index b) const noexcept {
      return table_[std::size_t(a) * size_ + b];
    }
    Index identity() const noexcept {
      return identity_;
    }
    std::vector<Index> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Index> const& table() const noexcept {
      return table_;
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string label(Index a) const;

    // Positions into generators() whose product is a, found by breadth-first
    // search from the identity; nullopt when the generators miss a.
    std::optional<std::vector<std::size_t>> generator_word(Index a) const;
    bool generated_by_generators() const noexcept;

    friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
      return a.size_ == b.size_ && a.identity_ == b.identity_
             && a.table_ == b.table_ && a.generators_ == b.generators_;
    }

   private:
    void index_generators();

    std::size_t              size_;
    std::vector<Index>       table_;
    Index                    identity_;
    std::vector<Index>       generators_;
    std::vector<std::string> labels_;
    // Breadth-first spanning tree over the generators.
    std::vector<Index>    parent_;
    std::vector<std::uint32_t> via_;
  };

  using Index = FiniteMonoid::Index;

  // Verifies associativity exhaustively; O(n^3).
  bool is_associative(FiniteMonoid const& m);

  struct ClosureOptions {
    std::size_t max_size = std::size_t(1) << 22;
  };

  template <typename Element>
  struct Closure {
    FiniteMonoid         monoid;
    std::vector<Element> elements;
  };

  // Smallest set containing `identity` and `generators` closed under
  // `product`, indexed in breadth-first discovery order (identity first,
  // generators tried in the given order). generators() of the result is
  // aligned with the input list.
  template <typename Element,
            typename Product,
            typename Label,
            typename Hash = std::hash<Element>>
  Closure<Element> closure(Element const&              identity,
                           std::vector<Element> const& generators,
                           Product&&                   product,
                           Label&&                     label,
                           ClosureOptions              options = {}) {
    std::size_t const cap_bytes = table_memory_cap_bytes();
    std::vector<Element>                      elements{identity};
    std::unordered_map<Element, Index, Hash>  index{{identity, 0}};
    std::vector<Index>                        parent{0};
    std::vector<std::uint32_t>                via{0};
    std::vector<Index>                        right;
    std::size_t const                         g = generators.size();
    auto grow_check = [&](std::size_t n) {
      if (n > options.max_size) {
        throw LimitExceeded("closure size", n, options.max_size);
      }
      if (n * n > cap_bytes / sizeof(Index)) {
        throw LimitExceeded("multiplication table bytes (FBPLAB_CAP_MB)",
                            n * n * sizeof(Index),
                            cap_bytes);
      }
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t k = 0; k < g; ++k) {
        Element next = product(elements[i], generators[k]);
        auto [it, fresh] = index.try_emplace(next, Index(elements.size()));
        if (fresh) {
          grow_check(elements.size() + 1);
          elements.push_back(std::move(next));
          parent.push_back(Index(i));
          via.push_back(std::uint32_t(k));
        }
        right.push_back(it->second);
      }
    }
    std::size_t const  n = elements.size();
    std::vector<Index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      table[a * n] = Index(a);
      for (std::size_t b = 1; b < n; ++b) {
        table[a * n + b] = right[std::size_t(table[a * n + parent[b]]) * g + via[b]];
      }
    }
    std::vector<Index> gens;
    gens.reserve(g);
    for (auto const& e : generators) {
      gens.push_back(index.at(e));
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& e : elements) {
      labels.push_back(label(e));
    }
    FiniteMonoid monoid(FiniteMonoid::Trusted{},
                        n,
                        std::move(table),
                        0,
                        std::move(gens),
                        std::move(labels));
    return Closure<Element>{std::move(monoid), std::move(elements)};
  }

  using ElementSubstitution = std::map<VariableId, Index>;

  // Left-to-right product of the images. Throws UndefinedVariable.
  Index evaluate_word(FiniteMonoid const&        m,
                      ElementSubstitution const& sigma,
                      Word const&                w);

  FiniteMonoid direct_product(std::vector<FiniteMonoid const*> const& factors,
                              std::size_t max_size = std::size_t(1) << 16);
  FiniteMonoid direct_product(FiniteMonoid const& a,
                              FiniteMonoid const& b,
                              std::size_t max_size = std::size_t(1) << 16);

  // Reversed multiplication.
  FiniteMonoid dual(FiniteMonoid const& m);

  // m viewed as a semigroup with a new identity adjoined at index 0; element
  // i of m becomes i + 1.
  FiniteMonoid adjoin_identity(FiniteMonoid const& m);

  struct Triviality {
    bool r_trivial;
    bool l_trivial;
    bool j_trivial;
    friend bool operator==(Triviality const&, Triviality const&) = default;
  };

  // Compares principal right, left and two-sided ideals. Throws
  // std::logic_error if J-triviality holds without R- and L-triviality.
  Triviality triviality(FiniteMonoid const& m);

  struct StructureFlags {
    bool aperiodic;
    bool idempotents_commute;
    bool is_band;
    bool commutative;
  };

  StructureFlags structure_flags(FiniteMonoid const& m);

  struct Submonoid {
    FiniteMonoid       monoid;
    // inclusion[i] is the index in the parent monoid of element i.
    std::vector<Index> inclusion;
  };

  Submonoid submonoid_generated(FiniteMonoid const&       m,
                                std::vector<Index> const& subset);

  // True when phi(ab) = phi(a)phi(b) for all a, b and phi(1) = 1.
  bool is_homomorphism(FiniteMonoid const&       source,
                       FiniteMonoid const&       target,
                       std::vector<Index> const& phi);

  // Extends generator images along generator words of source and checks the
  // result is a homomorphism; nullopt otherwise. gen_images is aligned with
  // source.generators().
  std::optional<std::vector<Index>> map_by_generators(
      FiniteMonoid const&       source,
      FiniteMonoid const&       target,
      std::vector<Index> const& gen_images);

  struct RegularRepresentation {
    // order[k] is the element placed at point k + 1.
    std::vector<Index>      order;
    // maps[a] is x -> xa on the points [size], indexed by element.
    std::vector<PartialMap> maps;
    bool extensive;
    bool injective;
    bool multiplicative;
  };

  // Right regular representation with elements ordered by decreasing size
  // of their principal right ideal, which makes every map extensive when m
  // is R-trivial. Throws InvalidInput when m is not R-trivial.
  RegularRepresentation embed_rtrivial_in_Em(FiniteMonoid const& m);

  // "n", then n rows of n 0-based indices, "identity i", "generators ...".
  std::string  to_dump(FiniteMonoid const& m);
  FiniteMonoid from_dump(std::string_view text);

}  // namespace fbplab

#endif  // FBPLAB_MONOID_HPP_
