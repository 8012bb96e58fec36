#include "fbplab/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fbplab/error.hpp"

namespace fbplab {

  namespace {
    using Letter  = RewriteSystem::Letter;
    using Letters = RewriteSystem::Letters;
    using Rule    = RewriteSystem::Rule;

    bool shortlex_greater(Letters const& a, Letters const& b) {
      if (a.size() != b.size()) {
        return a.size() > b.size();
      }
      return a > b;
    }

    bool has_suffix(Letters const& w, Letters const& s) {
      return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - s.size());
    }

    bool contains_factor(Letters const& w, Letters const& f) {
      return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
    }

    // Stack-based reduction: out stays irreducible, so only rules ending at
    // the newest letter need checking.
    template <typename Rules, typename Index>
    Letters reduce_with(Letters const& w, Rules const& rules, Index const& by_last) {
      Letters out;
      Letters pending(w.rbegin(), w.rend());
      while (!pending.empty()) {
        out.push_back(pending.back());
        pending.pop_back();
        for (auto id : by_last[out.back()]) {
          auto const& r = rules[id];
          if (has_suffix(out, r.lhs)) {
            out.resize(out.size() - r.lhs.size());
            pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
            break;
          }
        }
      }
      return out;
    }

    class Completer {
     public:
      Completer(std::size_t letters, CompletionOptions options)
          : options_(options), by_last_(letters) {}

      void push(Letters a, Letters b) {
        pending_.emplace_back(std::move(a), std::move(b));
      }

      // False when a cap is hit.
      bool run() {
        while (true) {
          if (!drain()) {
            return false;
          }
          // Overlaps of each rule with every older live rule, in order of
          // creation.
          if (next_ < rules_.size()) {
            auto const j = next_++;
            for (std::size_t i = 0; i <= j && alive_[j]; ++i) {
              if (alive_[i]) {
                overlaps(i, j);
                if (i != j) {
                  overlaps(j, i);
                }
              }
            }
            continue;
          }
          // Confluence check over all live pairs.
          for (std::size_t j = 0; j < rules_.size(); ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
              if (alive_[i] && alive_[j]) {
                overlaps(i, j);
                overlaps(j, i);
              }
            }
          }
          if (pending_.empty()) {
            return true;
          }
        }
      }

      std::vector<Rule> live_rules() const {
        std::vector<Rule> out;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          if (alive_[i]) {
            out.push_back(rules_[i]);
          }
        }
        std::sort(out.begin(), out.end(), [](Rule const& a, Rule const& b) {
          return shortlex_greater(b.lhs, a.lhs);
        });
        return out;
      }

     private:
      Letters reduce(Letters const& w) const {
        return reduce_with(w, rules_, by_last_);
      }

      // Critical pairs from a proper suffix of rule i overlapping a prefix of
      // rule j.
      void overlaps(std::size_t i, std::size_t j) {
        auto const& a = rules_[i];
        auto const& b = rules_[j];
        auto const  n = std::min(a.lhs.size(), b.lhs.size());
        for (std::size_t k = 1; k < n; ++k) {
          if (!std::equal(a.lhs.end() - k, a.lhs.end(), b.lhs.begin())) {
            continue;
          }
          Letters left = a.rhs;
          left.insert(left.end(), b.lhs.begin() + k, b.lhs.end());
          Letters right(a.lhs.begin(), a.lhs.end() - k);
          right.insert(right.end(), b.rhs.begin(), b.rhs.end());
          auto l = reduce(left);
          auto r = reduce(right);
          if (l != r) {
            push(std::move(l), std::move(r));
          }
        }
      }

      bool drain() {
        while (!pending_.empty()) {
          auto [a, b] = std::move(pending_.front());
          pending_.pop_front();
          a = reduce(a);
          b = reduce(b);
          if (a == b) {
            continue;
          }
          if (shortlex_greater(b, a)) {
            std::swap(a, b);
          }
          if (a.size() > options_.length_cap) {
            return false;
          }
          add_rule(Rule{std::move(a), std::move(b)});
          if (live_ > options_.rule_cap) {
            return false;
          }
        }
        return true;
      }

      void add_rule(Rule rule) {
        std::size_t const id = rules_.size();
        rules_.push_back(std::move(rule));
        alive_.push_back(true);
        ++live_;
        by_last_[rules_[id].lhs.back()].push_back(id);
        // Interreduce: rules whose left side contains the new one become
        // equations again; right sides are renormalised.
        for (std::size_t i = 0; i < id; ++i) {
          if (!alive_[i]) {
            continue;
          }
          if (contains_factor(rules_[i].lhs, rules_[id].lhs)) {
            kill(i);
            push(rules_[i].lhs, rules_[i].rhs);
          } else if (contains_factor(rules_[i].rhs, rules_[id].lhs)) {
            rules_[i].rhs = reduce(rules_[i].rhs);
          }
        }
      }

      void kill(std::size_t i) {
        alive_[i] = false;
        --live_;
        auto& bucket = by_last_[rules_[i].lhs.back()];
        bucket.erase(std::find(bucket.begin(), bucket.end(), i));
      }

      CompletionOptions                            options_;
      std::vector<Rule>                            rules_;
      std::vector<bool>                            alive_;
      std::vector<std::vector<std::size_t>>        by_last_;
      std::deque<std::pair<Letters, Letters>>      pending_;
      std::size_t                                  next_ = 0;
      std::size_t                                  live_ = 0;
    };

    std::vector<std::vector<std::size_t>> index_rules(std::vector<Rule> const& rules,
                                                      std::size_t letters) {
      std::vector<std::vector<std::size_t>> by_last(letters);
      for (std::size_t i = 0; i < rules.size(); ++i) {
        by_last[rules[i].lhs.back()].push_back(i);
      }
      return by_last;
    }

    struct LettersHash {
      std::size_t operator()(Letters const& w) const noexcept {
        std::size_t h = w.size();
        for (auto c : w) {
          h = (h ^ c) * 0x100000001b3ull;
        }
        return h;
      }
    };
  }  // namespace

  RewriteSystem::RewriteSystem(Presentation      presentation,
                               std::vector<Rule> rules,
                               CompletionStatus  status)
      : presentation_(std::move(presentation)),
        rules_(std::move(rules)),
        status_(status) {
    auto const letters = presentation_.generators().size();
    for (auto const& r : rules_) {
      if (r.lhs.empty() || !shortlex_greater(r.lhs, r.rhs)) {
        throw InvalidInput("rewrite rules must be shortlex decreasing");
      }
      for (auto const* side : {&r.lhs, &r.rhs}) {
        for (auto c : *side) {
          if (c >= letters) {
            throw InvalidInput("rewrite rule letter out of range");
          }
        }
      }
    }
    by_last_ = index_rules(rules_, letters);
  }

  RewriteSystem::Letters RewriteSystem::encode(Word const& w) const {
    auto const& gens = presentation_.generators();
    Letters     out;
    out.reserve(w.size());
    for (auto const& v : w) {
      auto it = std::find(gens.begin(), gens.end(), v);
      if (it == gens.end()) {
        throw UndefinedVariable(v.label());
      }
      out.push_back(Letter(it - gens.begin()));
    }
    return out;
  }

  Word RewriteSystem::decode(Letters const& w) const {
    Word out;
    for (auto c : w) {
      out.push_back(presentation_.generators().at(c));
    }
    return out;
  }

  RewriteSystem::Letters RewriteSystem::reduce(Letters w) const {
    return reduce_with(w, rules_, by_last_);
  }

  RewriteSystem complete(Presentation const& p, CompletionOptions const& options) {
    if (options.rule_cap == 0 || options.length_cap == 0) {
      throw InvalidInput("completion caps must be positive");
    }
    RewriteSystem const encoder(p, {}, CompletionStatus::complete);
    Completer           completer(p.generators().size(), options);
    for (auto const& r : p.relations()) {
      completer.push(encoder.encode(r.lhs), encoder.encode(r.rhs));
    }
    bool const done = completer.run();
    return RewriteSystem(p,
                         completer.live_rules(),
                         done ? CompletionStatus::complete : CompletionStatus::capped);
  }

  PresentedMonoid enumerate_presented(RewriteSystem const& rs, std::size_t max_size) {
    auto const& p = rs.presentation();
    std::vector<Letters> gens;
    for (RewriteSystem::Letter c = 0; c < p.generators().size(); ++c) {
      gens.push_back(rs.reduce({c}));
    }
    auto product = [&rs](Letters const& a, Letters const& b) {
      Letters w = a;
      w.insert(w.end(), b.begin(), b.end());
      return rs.reduce(std::move(w));
    };
    auto label = [&rs](Letters const& a) {
      return a.empty() ? std::string("1") : rs.decode(a).to_string();
    };
    auto result = closure<Letters, decltype(product)&, decltype(label)&, LettersHash>(
        Letters{}, gens, product, label, ClosureOptions{max_size});
    std::vector<Word> forms;
    forms.reserve(result.elements.size());
    for (auto const& w : result.elements) {
      forms.push_back(rs.decode(w));
    }
    auto const size = result.monoid.size();
    return PresentedMonoid{std::move(result.monoid),
                           std::move(forms),
                           rs.status() == CompletionStatus::complete,
                           p.is_semigroup() ? size - 1 : size};
  }

  std::optional<std::uint64_t> t_sequence(std::size_t n) {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (t > (UINT64_MAX / (t + 1))) {
        return std::nullopt;
      }
      t *= t + 1;
    }
    return t;
  }

}  // namespace fbplab
