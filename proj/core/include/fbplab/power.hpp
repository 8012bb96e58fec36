// Monoids of unitary subsets: subsets of a monoid containing its identity,
// multiplied elementwise. Subsets are 64-bit masks over element indices.

#ifndef FBPLAB_POWER_HPP_
#define FBPLAB_POWER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fbplab/monoid.hpp"

namespace fbplab {

  using SubsetElement = std::uint64_t;

  inline constexpr std::size_t max_subset_base = 64;

  // A . B = {ab | a in A, b in B}. Needs m.size() <= 64.
  SubsetElement subset_product(FiniteMonoid const& m,
                               SubsetElement       a,
                               SubsetElement       b);

  std::string subset_label(FiniteMonoid const& m, SubsetElement a);

  // All 2^{|M|-1} unitary subsets, indexed by increasing mask (so {1} is
  // index 0). Throws LimitExceeded past max_size elements.
  Closure<SubsetElement> unitary_power_monoid(FiniteMonoid const& m,
                                              std::size_t max_size = 4096);

  // Submonoid of P_1(M) generated by the given unitary subsets, built by
  // closure without materialising P_1(M).
  Closure<SubsetElement> unitary_submonoid(
      FiniteMonoid const&               m,
      std::vector<SubsetElement> const& generators);

}  // namespace fbplab

#endif  // FBPLAB_POWER_HPP_
