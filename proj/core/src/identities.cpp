#include "fbplab/identities.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "coded_word.hpp"

namespace fbplab {

  namespace {
    using internal::Code;
    using internal::CodedWord;

    struct Compiled {
      internal::Coder coder;
      CodedWord       lhs;
      CodedWord       rhs;
    };

    Compiled compile(Identity const& id) {
      Compiled c;
      c.lhs = c.coder.encode(id.lhs());
      c.rhs = c.coder.encode(id.rhs());
      return c;
    }

    Index fold(FiniteMonoid const&       m,
               CodedWord const&          w,
               std::vector<Index> const& value) {
      Index x = m.identity();
      for (auto c : w) {
        x = m.product(x, value[c]);
      }
      return x;
    }

    std::vector<Index> domain_of(FiniteMonoid const&                      m,
                                 std::optional<std::vector<Index>> const& domain) {
      if (domain) {
        if (domain->empty()) {
          throw InvalidInput("substitution domain must be nonempty");
        }
        for (auto a : *domain) {
          if (a >= m.size()) {
            throw InvalidInput("domain element out of range");
          }
        }
        return *domain;
      }
      std::vector<Index> all(m.size());
      for (Index a = 0; a < m.size(); ++a) {
        all[a] = a;
      }
      return all;
    }

    // base^exponent, or cap + 1 when it would pass cap.
    std::size_t bounded_power(std::size_t base, std::size_t exponent, std::size_t cap) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > cap / base) {
          return cap + 1;
        }
        result *= base;
      }
      return result;
    }

    ElementSubstitution to_substitution(internal::Coder const&    coder,
                                        std::vector<Index> const& value) {
      ElementSubstitution sigma;
      for (Code c = 0; c < coder.size(); ++c) {
        sigma.emplace(coder.variable(c), value[c]);
      }
      return sigma;
    }
  }  // namespace

  IdentityVerdict satisfies_identity(FiniteMonoid const&        m,
                                     Identity const&            id,
                                     SatisfactionOptions const& options) {
    auto const compiled = compile(id);
    auto const domain   = domain_of(m, options.domain);
    auto const vars     = compiled.coder.size();
    auto const total    = bounded_power(domain.size(), vars, options.max_substitutions);
    if (total > options.max_substitutions) {
      throw LimitExceeded("substitutions for identity check",
                          total,
                          options.max_substitutions);
    }
    std::vector<std::size_t> digit(vars, 0);
    std::vector<Index>       value(vars, domain[0]);
    std::size_t              checked = 0;
    while (true) {
      ++checked;
      if (fold(m, compiled.lhs, value) != fold(m, compiled.rhs, value)) {
        return IdentityVerdict{
            false, to_substitution(compiled.coder, value), checked};
      }
      std::size_t i = vars;
      while (i > 0 && ++digit[i - 1] == domain.size()) {
        digit[i - 1] = 0;
        value[i - 1] = domain[0];
        --i;
      }
      if (i == 0) {
        break;
      }
      value[i - 1] = domain[digit[i - 1]];
    }
    return IdentityVerdict{true, std::nullopt, checked};
  }

  SampledVerdict satisfies_identity_sampled(FiniteMonoid const&               m,
                                            Identity const&                   id,
                                            std::size_t                       samples,
                                            std::uint64_t                     seed,
                                            std::optional<std::vector<Index>> domain) {
    if (samples == 0) {
      throw InvalidInput("at least one sample is required");
    }
    auto const compiled = compile(id);
    auto const elements = domain_of(m, domain);
    auto const vars     = compiled.coder.size();
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    std::vector<Index>                         value(vars);
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& v : value) {
        v = elements[pick(rng)];
      }
      if (fold(m, compiled.lhs, value) != fold(m, compiled.rhs, value)) {
        auto sigma = to_substitution(compiled.coder, value);
        if (evaluate_word(m, sigma, id.lhs()) == evaluate_word(m, sigma, id.rhs())) {
          throw std::logic_error("sampled counterexample failed re-check");
        }
        return SampledVerdict{true, std::move(sigma), s + 1, seed};
      }
    }
    return SampledVerdict{false, std::nullopt, samples, seed};
  }

  namespace {
    struct VectorHash {
      std::size_t operator()(std::vector<Index> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h = (h ^ x) * 0x100000001b3ull;
        }
        return h;
      }
    };
  }  // namespace

  std::vector<std::vector<std::size_t>> bounded_theory_classes(
      FiniteMonoid const& m,
      Universe            universe,
      std::size_t         max_work) {
    auto const words = internal::universe(universe.vars, universe.max_len);
    auto const subs  = bounded_power(m.size(), universe.vars, max_work);
    if (subs > max_work || (subs != 0 && words.size() > max_work / subs)) {
      throw LimitExceeded("bounded theory work (words x substitutions)",
                          subs > max_work ? subs : subs * words.size(),
                          max_work);
    }
    // values[w][s]: value of word w under substitution s, where s encodes
    // x_{i+1} -> digit i in base |M| with x1 most significant. Words come in
    // shortlex order, so w minus its last letter is already computed.
    std::vector<std::vector<Index>> values(words.size());
    std::map<CodedWord, std::size_t> position;
    std::vector<std::size_t>        place(universe.vars, 1);
    for (std::size_t i = universe.vars; i-- > 1;) {
      place[i - 1] = place[i] * m.size();
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
      auto const& word = words[w];
      position.emplace(word, w);
      auto const  last = word.back();
      auto&       out  = values[w];
      out.resize(subs);
      if (word.size() == 1) {
        for (std::size_t s = 0; s < subs; ++s) {
          out[s] = Index((s / place[last]) % m.size());
        }
      } else {
        auto const& prev = values[position.at(CodedWord(word.begin(), word.end() - 1))];
        for (std::size_t s = 0; s < subs; ++s) {
          out[s] = m.product(prev[s], Index((s / place[last]) % m.size()));
        }
      }
    }
    std::unordered_map<std::vector<Index>, std::size_t, VectorHash> group;
    std::vector<std::vector<std::size_t>>                           classes;
    for (std::size_t w = 0; w < words.size(); ++w) {
      auto [it, fresh] = group.try_emplace(std::move(values[w]), classes.size());
      if (fresh) {
        classes.emplace_back();
      }
      classes[it->second].push_back(w);
    }
    std::sort(classes.begin(), classes.end());
    return classes;
  }

  IdentitySet bounded_identity_theory(FiniteMonoid const& m,
                                      Universe            universe,
                                      std::size_t         max_work) {
    std::vector<Word> words;
    for (auto const& w : internal::universe(universe.vars, universe.max_len)) {
      words.push_back(internal::decode_standard(w));
    }
    return identities_from_classes(words,
                                   bounded_theory_classes(m, universe, max_work));
  }

  IsotermVerdict is_isoterm_bounded(FiniteMonoid const&   m,
                                    Word const&           u,
                                    IsotermOptions const& options) {
    if (u.empty()) {
      throw InvalidInput("isoterm candidates must be nonempty words");
    }
    std::size_t const max_len = options.max_len == 0 ? u.size() + 2 : options.max_len;
    internal::Coder   coder;
    auto const        coded_u = coder.encode(u);
    auto              names   = alphabet(u);
    for (std::size_t i = 1, added = 0; added < options.extra_fresh; ++i) {
      VariableId z("z" + std::to_string(i));
      if (names.insert(z).second) {
        coder.code(z);
        ++added;
      }
    }
    std::size_t const letters = coder.size();
    std::size_t const subs =
        bounded_power(m.size(), letters, options.max_substitutions);
    if (subs > options.max_substitutions) {
      throw LimitExceeded("substitutions for isoterm search",
                          subs,
                          options.max_substitutions);
    }
    auto assignment = [&](std::size_t s, std::vector<Index>& value) {
      for (std::size_t i = letters; i-- > 0;) {
        value[i] = Index(s % m.size());
        s /= m.size();
      }
    };
    // Value of u under every substitution, in odometer order.
    std::vector<Index> u_values(subs);
    std::vector<Index> value(letters);
    for (std::size_t s = 0; s < subs; ++s) {
      assignment(s, value);
      u_values[s] = fold(m, coded_u, value);
    }
    std::mt19937_64                            rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, subs - 1);
    std::vector<std::size_t>                   probes(options.prefilter_samples);
    for (auto& p : probes) {
      p = pick(rng);
    }
    std::vector<std::vector<Index>> probe_values;
    for (auto p : probes) {
      assignment(p, value);
      probe_values.push_back(value);
    }

    std::size_t checked = 0;
    for (auto const& v : internal::universe(letters, max_len)) {
      if (v == coded_u) {
        continue;
      }
      ++checked;
      bool survives = true;
      for (std::size_t k = 0; k < probes.size() && survives; ++k) {
        survives = fold(m, v, probe_values[k]) == u_values[probes[k]];
      }
      if (!survives) {
        continue;
      }
      std::vector<std::size_t> digit(letters, 0);
      std::fill(value.begin(), value.end(), Index(0));
      std::size_t s = 0;
      for (;; ++s) {
        if (fold(m, v, value) != u_values[s]) {
          break;
        }
        std::size_t i = letters;
        while (i > 0 && ++digit[i - 1] == m.size()) {
          digit[i - 1] = 0;
          value[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          s = subs;
          break;
        }
        value[i - 1] = Index(digit[i - 1]);
      }
      if (s == subs) {
        Word witness;
        for (auto c : v) {
          witness.push_back(coder.variable(c));
        }
        return IsotermVerdict{false, witness, checked, max_len, options.extra_fresh};
      }
    }
    return IsotermVerdict{true, std::nullopt, checked, max_len, options.extra_fresh};
  }

  IdentityVerdict band_identity_check(FiniteMonoid const& b,
                                      Word const&         u,
                                      VariableId const&   x,
                                      Word const&         v) {
    if (!structure_flags(b).is_band) {
      throw InvalidInput("band identity check needs a band");
    }
    if (u.empty() || v.empty()) {
      throw InvalidInput("u and v must be nonempty");
    }
    auto const au = alphabet(u);
    if (au != alphabet(v) || au.count(x) == 0) {
      throw InvalidInput("band identity check needs x in alf(u) = alf(v)");
    }
    Word lhs = u;
    lhs.push_back(x);
    lhs += v;
    return satisfies_identity(b, Identity(lhs, u + v));
  }

}  // namespace fbplab
