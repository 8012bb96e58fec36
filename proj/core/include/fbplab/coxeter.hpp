// Permutation models of Coxeter groups (A_n, B_n, I2(m)) and 0-Hecke monoids
// built from unitary subsets {1, s_i} of the group.

#ifndef FBPLAB_COXETER_HPP_
#define FBPLAB_COXETER_HPP_

#include <string>
#include <vector>

#include "fbplab/monoid.hpp"
#include "fbplab/power.hpp"
#include "fbplab/presentation.hpp"
#include "fbplab/transformation.hpp"

namespace fbplab {

  struct CoxeterModel {
    // "A", "B" or "I"; generators[i] realises s_{i+1}.
    std::string             family;
    std::vector<PartialMap> generators;
    Closure<PartialMap>     group;
  };

  // Throws InvalidInput for diagrams outside the supported catalogue, and
  // std::logic_error if some s_i s_j fails to have order exactly m_ij.
  CoxeterModel coxeter_group_model(CoxeterMatrix const& cd);

  struct HeckeViaUnitary {
    CoxeterModel           model;
    // Generators are {1, s_i} in order.
    Closure<SubsetElement> hecke;
  };

  // Needs |W| <= 64.
  HeckeViaUnitary hecke0_via_unitary(CoxeterMatrix const& cd);

}  // namespace fbplab

#endif  // FBPLAB_COXETER_HPP_
