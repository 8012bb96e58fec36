#include "fbplab/power.hpp"

#include <bit>

namespace fbplab {

  namespace {
    void check_base(FiniteMonoid const& m) {
      if (m.size() > max_subset_base) {
        throw LimitExceeded("subset base monoid size", m.size(), max_subset_base);
      }
    }

    SubsetElement bit(Index a) {
      return SubsetElement(1) << a;
    }

    void check_unitary(FiniteMonoid const& m, SubsetElement a) {
      if (m.size() < 64 && (a >> m.size()) != 0) {
        throw InvalidInput("subset mentions elements outside the monoid");
      }
      if ((a & bit(m.identity())) == 0) {
        throw InvalidInput("unitary subsets must contain the identity");
      }
    }
  }  // namespace

  SubsetElement subset_product(FiniteMonoid const& m,
                               SubsetElement       a,
                               SubsetElement       b) {
    SubsetElement result = 0;
    for (auto x = a; x != 0; x &= x - 1) {
      auto i = Index(std::countr_zero(x));
      for (auto y = b; y != 0; y &= y - 1) {
        result |= bit(m.product(i, Index(std::countr_zero(y))));
      }
    }
    return result;
  }

  std::string subset_label(FiniteMonoid const& m, SubsetElement a) {
    std::string out = "{";
    bool        first = true;
    for (auto x = a; x != 0; x &= x - 1) {
      out += (first ? "" : ",") + m.label(Index(std::countr_zero(x)));
      first = false;
    }
    return out + "}";
  }

  Closure<SubsetElement> unitary_power_monoid(FiniteMonoid const& m,
                                              std::size_t         max_size) {
    check_base(m);
    std::size_t const base = m.size();
    if (base - 1 >= 63 || (std::size_t(1) << (base - 1)) > max_size) {
      throw LimitExceeded("unitary power monoid size",
                          base - 1 >= 63 ? std::size_t(-1)
                                         : std::size_t(1) << (base - 1),
                          max_size);
    }
    std::size_t const n = std::size_t(1) << (base - 1);
    if (n * n > table_memory_cap_bytes() / sizeof(Index)) {
      throw LimitExceeded("multiplication table bytes (FBPLAB_CAP_MB)",
                          n * n * sizeof(Index),
                          table_memory_cap_bytes());
    }
    // Element k is the mask obtained by inserting the identity bit into the
    // binary expansion of k.
    Index const   e         = m.identity();
    SubsetElement low_mask  = bit(e) - 1;
    auto          mask_of   = [&](std::size_t k) {
      return (SubsetElement(k) & low_mask) | bit(e)
             | ((SubsetElement(k) & ~low_mask) << 1);
    };
    auto index_of = [&](SubsetElement a) {
      return std::size_t((a & low_mask) | ((a >> 1) & ~low_mask));
    };
    std::vector<SubsetElement> elements(n);
    for (std::size_t k = 0; k < n; ++k) {
      elements[k] = mask_of(k);
    }
    // single[a * n + k] = {a} . elements[k]; dropping the highest
    // non-identity element gives a mask of smaller index.
    std::vector<SubsetElement> single(base * n);
    for (Index a = 0; a < base; ++a) {
      single[a * n] = bit(m.product(a, e));
      for (std::size_t k = 1; k < n; ++k) {
        auto const others = elements[k] ^ bit(e);
        auto const top    = Index(63 - std::countl_zero(others));
        single[a * n + k] = single[a * n + index_of(elements[k] ^ bit(top))]
                            | bit(m.product(a, top));
      }
    }
    std::vector<Index> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        SubsetElement product = 0;
        for (auto x = elements[i]; x != 0; x &= x - 1) {
          product |= single[std::size_t(std::countr_zero(x)) * n + k];
        }
        table[i * n + k] = Index(index_of(product));
      }
    }
    std::vector<Index>       generators;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != 0) {
        generators.push_back(Index(k));
      }
      labels.push_back(subset_label(m, elements[k]));
    }
    FiniteMonoid monoid(FiniteMonoid::Trusted{},
                        n,
                        std::move(table),
                        0,
                        std::move(generators),
                        std::move(labels));
    return Closure<SubsetElement>{std::move(monoid), std::move(elements)};
  }

  Closure<SubsetElement> unitary_submonoid(
      FiniteMonoid const&               m,
      std::vector<SubsetElement> const& generators) {
    check_base(m);
    for (auto g : generators) {
      check_unitary(m, g);
    }
    return closure(
        bit(m.identity()),
        generators,
        [&m](SubsetElement a, SubsetElement b) { return subset_product(m, a, b); },
        [&m](SubsetElement a) { return subset_label(m, a); });
  }

}  // namespace fbplab
