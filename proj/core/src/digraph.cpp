#include "fbplab/digraph.hpp"

#include <sstream>

#include "fbplab/families.hpp"

namespace fbplab {

  Digraph::Digraph(std::size_t n, std::vector<Edge> const& edges) : n_(n) {
    for (auto [u, v] : edges) {
      add_edge(u, v);
    }
  }

  void Digraph::add_edge(std::size_t u, std::size_t v) {
    if (u == 0 || v == 0 || u > n_ || v > n_) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v)
                         + ") outside 1.." + std::to_string(n_));
    }
    if (u == v) {
      throw InvalidInput("loops are not allowed (vertex " + std::to_string(u)
                         + ")");
    }
    edges_.emplace(u, v);
  }

  void Digraph::set_names(std::vector<std::string> names) {
    if (names.size() != n_) {
      throw InvalidInput("one name per vertex expected");
    }
    names_ = std::move(names);
  }

  std::string Digraph::name(std::size_t v) const {
    return names_.empty() ? std::to_string(v) : names_.at(v - 1);
  }

  Digraph Digraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    long long          n = -1;
    while (std::getline(in, line)) {
      std::istringstream head(line);
      if (head >> n) {
        std::string extra;
        if (head >> extra) {
          throw ParseError("first line must hold only the vertex count");
        }
        break;
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw ParseError("expected the vertex count, got '" + line + "'");
      }
    }
    if (n < 0) {
      throw ParseError("missing vertex count");
    }
    Digraph g(static_cast<std::size_t>(n));
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      std::istringstream edge(line);
      long long          u = 0;
      long long          v = 0;
      std::string        extra;
      if (!(edge >> u >> v) || (edge >> extra) || u <= 0 || v <= 0) {
        throw ParseError("bad edge line '" + line + "'");
      }
      try {
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      } catch (ParseError const&) {
        throw;
      } catch (InvalidInput const& e) {
        throw ParseError(e.what());
      }
    }
    return g;
  }

  std::string Digraph::to_string() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (auto [u, v] : edges_) {
      out << u << ' ' << v << '\n';
    }
    return out.str();
  }

  Digraph path_digraph(std::size_t m) {
    Digraph g(m);
    for (std::size_t i = 1; i < m; ++i) {
      g.add_edge(i, i + 1);
    }
    return g;
  }

  Digraph build_gamma_n(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("Gamma_n needs n >= 1");
    }
    Digraph                  g(2 * n + 1);
    std::vector<std::string> names(2 * n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      names[i] = std::to_string(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      names[n + 1 + i] = std::to_string(i) + "'";
      g.add_edge(i + 1, i + 2);
      g.add_edge(i + 1, n + 2 + i);
    }
    g.set_names(std::move(names));
    return g;
  }

  PartialMap tau_e(Digraph::Edge e, std::size_t n) {
    auto [p, q] = e;
    if (p == 0 || q == 0 || p > n || q > n || p == q) {
      throw InvalidInput("tau_e needs an edge between distinct vertices of 1..n");
    }
    auto a = PartialMap::identity(n);
    a.set(p, PartialMap::Point(q));
    return a;
  }

  DigraphAnalysis digraph_analysis(Digraph const& g) {
    auto const n = g.vertex_count();
    std::vector<std::vector<std::size_t>> out(n + 1);
    std::vector<std::size_t>              indegree(n + 1, 0);
    for (auto [u, v] : g.edges()) {
      out[u].push_back(v);
      ++indegree[v];
    }
    // Kahn's order; leftover vertices lie on or behind a cycle.
    std::vector<std::size_t> order;
    for (std::size_t v = 1; v <= n; ++v) {
      if (indegree[v] == 0) {
        order.push_back(v);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto w : out[order[i]]) {
        if (--indegree[w] == 0) {
          order.push_back(w);
        }
      }
    }
    if (order.size() != n) {
      return DigraphAnalysis{false, std::nullopt};
    }
    std::vector<std::size_t> longest(n + 1, 1);
    std::size_t              best = n == 0 ? 0 : 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (auto w : out[*it]) {
        longest[*it] = std::max(longest[*it], longest[w] + 1);
      }
      best = std::max(best, longest[*it]);
    }
    return DigraphAnalysis{true, best};
  }

  std::size_t longest_path_vertices(Digraph const& g) {
    auto analysis = digraph_analysis(g);
    if (!analysis.is_acyclic) {
      throw InvalidInput("longest path is only defined here for acyclic digraphs");
    }
    return *analysis.longest_path_vertices;
  }

  Closure<PartialMap> catalan_of_digraph(Digraph const& g, ClosureOptions options) {
    std::vector<PartialMap> generators;
    for (auto const& e : g.edges()) {
      generators.push_back(tau_e(e, g.vertex_count()));
    }
    return transformation_closure(g.vertex_count(), generators, options);
  }

}  // namespace fbplab
