// Loop-free digraphs on vertices 1..n and their Catalan monoids, generated
// by the elementary maps tau_(p,q) that send p to q and fix the rest.

#ifndef FBPLAB_DIGRAPH_HPP_
#define FBPLAB_DIGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbplab/monoid.hpp"
#include "fbplab/transformation.hpp"

namespace fbplab {

  class Digraph {
   public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Digraph(std::size_t n) : n_(n) {}
    // Throws InvalidInput on loops or endpoints outside 1..n.
    Digraph(std::size_t n, std::vector<Edge> const& edges);

    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept {
      return n_;
    }
    std::set<Edge> const& edges() const noexcept {
      return edges_;
    }

    // Optional display names, one per vertex.
    void set_names(std::vector<std::string> names);
    std::string name(std::size_t v) const;

    // "n" on the first line, then "u v" per edge (1-based).
    static Digraph parse(std::string_view text);
    std::string    to_string() const;

   private:
    std::size_t              n_;
    std::set<Edge>           edges_;
    std::vector<std::string> names_;
  };

  // 1 -> 2 -> ... -> m.
  Digraph path_digraph(std::size_t m);

  // Spine 0 -> 1 -> ... -> n with a pendant edge i -> i' for i < n. Spine
  // vertex i is numbered i + 1 and i' is numbered n + 2 + i.
  Digraph build_gamma_n(std::size_t n);

  PartialMap tau_e(Digraph::Edge e, std::size_t n);

  struct DigraphAnalysis {
    bool                       is_acyclic;
    // Vertices on a longest directed path; absent for cyclic graphs.
    std::optional<std::size_t> longest_path_vertices;
  };

  DigraphAnalysis digraph_analysis(Digraph const& g);
  // Throws InvalidInput on a cyclic graph.
  std::size_t longest_path_vertices(Digraph const& g);

  // Generators are the tau_e in edge order.
  Closure<PartialMap> catalan_of_digraph(Digraph const& g,
                                         ClosureOptions options = {});

}  // namespace fbplab

#endif  // FBPLAB_DIGRAPH_HPP_
