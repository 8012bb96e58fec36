// Integer-coded words used internally for the J_m / U_m signatures and the
// bounded identity fragments. Not installed.

#ifndef FBPLAB_SRC_CODED_WORD_HPP_
#define FBPLAB_SRC_CODED_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "fbplab/word.hpp"

namespace fbplab::internal {

  using Code      = std::uint32_t;
  using CodedWord = std::vector<Code>;
  // Sorted, duplicate-free.
  using CodeSet = std::vector<Code>;

  // Assigns codes to variables in order of first appearance.
  class Coder {
   public:
    Code code(VariableId const& v);
    CodedWord encode(Word const& w);
    VariableId const& variable(Code c) const {
      return variables_[c];
    }
    std::size_t size() const noexcept {
      return variables_.size();
    }

   private:
    std::map<VariableId, Code> codes_;
    std::vector<VariableId>    variables_;
  };

  CodeSet alphabet_of(std::span<Code const> w);

  using SubwordSet = std::set<CodedWord>;
  SubwordSet subwords_upto(std::span<Code const> w, std::size_t k);

  // Everything conditions (i)-(iii) of U_m look at: the alphabet and, for
  // each unambiguously scattered subword of length <= m, the alphabets of
  // the k + 1 gaps around its unique embedding.
  struct UmSignature {
    CodeSet                                 alphabet;
    std::map<CodedWord, std::vector<CodeSet>> gaps;
    friend bool operator==(UmSignature const&, UmSignature const&) = default;
    friend auto operator<=>(UmSignature const&, UmSignature const&) = default;
  };
  UmSignature um_signature(std::span<Code const> w, std::size_t m);

  bool shortlex_less(CodedWord const& a, CodedWord const& b);

  using CodedIdentity = std::pair<CodedWord, CodedWord>;
  CodedIdentity canonical(CodedWord const& lhs, CodedWord const& rhs);

  // Words over codes 0..vars-1 of length 1..max_len in shortlex order.
  std::vector<CodedWord> universe(std::size_t vars, std::size_t max_len);

  Word decode_standard(CodedWord const& w);

}  // namespace fbplab::internal

#endif  // FBPLAB_SRC_CODED_WORD_HPP_
