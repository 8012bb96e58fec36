#include "fbplab/coxeter.hpp"

#include <stdexcept>

#include "fbplab/error.hpp"
#include "fbplab/families.hpp"

namespace fbplab {

  namespace {
    using Point = PartialMap::Point;

    PartialMap swaps(std::size_t degree,
                     std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
      auto p = PartialMap::identity(degree);
      for (auto [a, b] : pairs) {
        p.set(a, Point(b));
        p.set(b, Point(a));
      }
      return p;
    }

    std::size_t order_of(PartialMap const& p) {
      auto const one = PartialMap::identity(p.degree());
      auto       q   = p;
      for (std::size_t k = 1; k <= 4096; ++k) {
        if (q == one) {
          return k;
        }
        q = compose(q, p);
      }
      throw std::logic_error("group element of order above 4096");
    }

    std::vector<PartialMap> dihedral(std::size_t m) {
      if (m == 2) {
        return {swaps(4, {{1, 2}}), swaps(4, {{3, 4}})};
      }
      // Residue r of Z_m sits at point r + 1.
      std::vector<Point> neg(m), shift(m);
      for (std::size_t r = 0; r < m; ++r) {
        neg[r]   = Point((m - r) % m + 1);
        shift[r] = Point((m + 1 - r) % m + 1);
      }
      return {PartialMap(neg), PartialMap(shift)};
    }

    // Vertices of the diagram as a path starting at its 4-labelled end, or
    // empty when the diagram is not a path with labels 3 (and one end 4).
    std::vector<std::size_t> path_order(CoxeterMatrix const& cd, bool& has_four) {
      auto const n = cd.rank();
      std::vector<std::vector<std::size_t>> adj(n);
      std::size_t edges = 0;
      has_four          = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto m = cd.entry(i, j);
          if (m == 2) {
            continue;
          }
          if (m != 3 && m != 4) {
            return {};
          }
          adj[i].push_back(j);
          adj[j].push_back(i);
          ++edges;
        }
      }
      if (edges + 1 != n) {
        return {};
      }
      std::vector<std::size_t> ends;
      for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 2) {
          return {};
        }
        if (adj[v].size() == 1) {
          ends.push_back(v);
        }
      }
      if (ends.size() != 2) {
        return {};
      }
      auto walk = [&](std::size_t start) {
        std::vector<std::size_t> order{start};
        std::size_t              prev = n, cur = start;
        while (true) {
          std::size_t next = n;
          for (auto v : adj[cur]) {
            if (v != prev) {
              next = v;
              break;
            }
          }
          if (next == n) {
            return order;
          }
          prev = cur;
          cur  = next;
          order.push_back(cur);
        }
      };
      auto order = walk(ends[0]);
      if (order.size() != n) {
        return {};
      }
      std::size_t fours = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (cd.entry(order[k], order[k + 1]) == 4) {
          ++fours;
        }
      }
      if (fours > 1) {
        return {};
      }
      if (fours == 1) {
        if (cd.entry(order[n - 2], order[n - 1]) == 4) {
          order = walk(ends[1]);
        }
        if (cd.entry(order[0], order[1]) != 4) {
          return {};
        }
        has_four = true;
      }
      return order;
    }
  }  // namespace

  CoxeterModel coxeter_group_model(CoxeterMatrix const& cd) {
    auto const              n = cd.rank();
    std::string             family;
    std::vector<PartialMap> gens;
    if (n == 1) {
      family = "A";
      gens   = {swaps(2, {{1, 2}})};
    } else if (n == 2) {
      auto m = cd.entry(0, 1);
      if (m == CoxeterMatrix::infinity) {
        throw InvalidInput("infinite dihedral group has no finite model");
      }
      family = "I";
      gens   = dihedral(m);
    } else {
      bool has_four = false;
      auto order    = path_order(cd, has_four);
      if (order.empty()) {
        throw InvalidInput("unsupported Coxeter diagram (models exist for A_n, "
                           "B_n and I2(m)):\n"
                           + cd.to_string());
      }
      gens.resize(n);
      if (!has_four) {
        family = "A";
        for (std::size_t k = 0; k < n; ++k) {
          gens[order[k]] = swaps(n + 1, {{k + 1, k + 2}});
        }
      } else {
        // Signed permutations: +i at point i, -i at point i + n.
        family         = "B";
        gens[order[0]] = swaps(2 * n, {{1, n + 1}});
        for (std::size_t k = 1; k < n; ++k) {
          gens[order[k]] = swaps(2 * n, {{k, k + 1}, {n + k, n + k + 1}});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (order_of(gens[i]) != 2) {
        throw std::logic_error("Coxeter generator is not an involution");
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (order_of(compose(gens[i], gens[j])) != cd.entry(i, j)) {
          throw std::logic_error("Coxeter model breaks (s_i s_j)^m_ij = 1");
        }
      }
    }
    auto const degree = gens[0].degree();
    auto       group  = transformation_closure(degree, gens);
    return CoxeterModel{family, std::move(gens), std::move(group)};
  }

  HeckeViaUnitary hecke0_via_unitary(CoxeterMatrix const& cd) {
    auto        model = coxeter_group_model(cd);
    auto const& w     = model.group.monoid;
    std::vector<SubsetElement> gens;
    for (auto g : w.generators()) {
      gens.push_back((SubsetElement(1) << w.identity()) | (SubsetElement(1) << g));
    }
    auto hecke = unitary_submonoid(w, gens);
    return HeckeViaUnitary{std::move(model), std::move(hecke)};
  }

}  // namespace fbplab
