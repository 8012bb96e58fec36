// Finite monoid and semigroup presentations, including the named families
// (Catalan, free tree, 0-Hecke, Lee) and Coxeter matrices.

#ifndef FBPLAB_PRESENTATION_HPP_
#define FBPLAB_PRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fbplab/word.hpp"

namespace fbplab {

  struct Relation {
    Word lhs;
    Word rhs;
    std::string to_string() const;
    friend bool operator==(Relation const&, Relation const&) = default;
  };

  class Presentation {
   public:
    // Relation words must use only the generators. Monoid presentations may
    // have an empty side; semigroup presentations may not.
    Presentation(std::vector<VariableId> generators,
                 std::vector<Relation>   relations,
                 bool                    semigroup = false);

    std::vector<VariableId> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    bool is_semigroup() const noexcept {
      return semigroup_;
    }

    // "gens: a b c" (or "sgens:" for a semigroup presentation), then one
    // "lhs = rhs" per line; "1" stands for the empty word and "#" starts a
    // comment.
    static Presentation parse(std::string_view text);
    std::string         to_string() const;

   private:
    std::vector<VariableId> generators_;
    std::vector<Relation>   relations_;
    bool                    semigroup_;
  };

  // Symmetric, ones on the diagonal, off-diagonal entries >= 2 or infinity.
  class CoxeterMatrix {
   public:
    static constexpr std::size_t infinity = 0;

    explicit CoxeterMatrix(std::vector<std::vector<std::size_t>> entries);

    std::size_t rank() const noexcept {
      return entries_.size();
    }
    // 0-based; infinity for an unbounded pair.
    std::size_t entry(std::size_t i, std::size_t j) const {
      return entries_.at(i).at(j);
    }

    // "n", then the entries above the diagonal row by row ("inf" allowed).
    // Input that also lists the diagonal ones is accepted.
    static CoxeterMatrix parse(std::string_view text);
    std::string          to_string() const;

    friend bool operator==(CoxeterMatrix const&, CoxeterMatrix const&) = default;

   private:
    std::vector<std::vector<std::size_t>> entries_;
  };

  CoxeterMatrix coxeter_A(std::size_t n);
  CoxeterMatrix coxeter_B(std::size_t n);
  CoxeterMatrix coxeter_I2(std::size_t m);
  CoxeterMatrix coxeter_H3();
  CoxeterMatrix coxeter_D4();
  // "A3", "B3", "H3", "D4", "I4" or "I2(4)".
  CoxeterMatrix coxeter_by_name(std::string_view name);

  // u v u ... with `length` letters.
  Word alternating(VariableId const& u, VariableId const& v, std::size_t length);

  // a1..a_{m-1}: idempotent, distant ones commute, and
  // a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1} = a_{i+1} a_i.
  Presentation catalan_presentation(std::size_t m);
  // a1..an: idempotent, a_k a_i a_k = a_k a_i for i < k.
  Presentation free_tree_presentation(std::size_t n);
  // s1..sn: idempotent plus the braid relations of the matrix.
  Presentation hecke0_presentation(CoxeterMatrix const& cd);
  // e, f idempotent with (efe..., n letters) = (fef..., n + 1) = (efe..., n + 1).
  Presentation lee_monoid_presentation(std::size_t n);
  // Semigroup: e^2 = e, f^2 = f, efe = efef = fefe.
  Presentation lee_L3_presentation();
  // Semigroup: e^2 = e, f^2 = f, efef = efefe = fefef.
  Presentation lee_L4_presentation();

  // kind in {catalan, free_tree, hecke0, lee_monoid, lee_L3, lee_L4}; arg is
  // the numeric parameter or, for hecke0, a Coxeter diagram name.
  Presentation named_presentation(std::string_view kind, std::string_view arg);

}  // namespace fbplab

#endif  // FBPLAB_PRESENTATION_HPP_
