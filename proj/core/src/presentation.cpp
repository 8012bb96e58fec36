#include "fbplab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "fbplab/error.hpp"

namespace fbplab {

  namespace {
    std::string trim(std::string_view s) {
      auto first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(" \t\r");
      return std::string(s.substr(first, last - first + 1));
    }

    std::string side_string(Word const& w) {
      return w.empty() ? "1" : w.to_string();
    }

    Word parse_side(std::string const& text) {
      auto t = trim(text);
      return t == "1" ? Word() : Word::parse(t);
    }

    std::size_t parse_count(std::string_view text, char const* what) {
      auto t = trim(text);
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
            return std::isdigit(c);
          })) {
        throw ParseError(std::string("expected a nonnegative integer for ") + what
                         + ", got '" + t + "'");
      }
      try {
        return std::stoull(t);
      } catch (std::out_of_range const&) {
        throw ParseError(std::string(what) + " out of range");
      }
    }

    VariableId numbered(char const* stem, std::size_t i) {
      return VariableId(stem + std::to_string(i));
    }
  }  // namespace

  std::string Relation::to_string() const {
    return side_string(lhs) + " = " + side_string(rhs);
  }

  Presentation::Presentation(std::vector<VariableId> generators,
                             std::vector<Relation>   relations,
                             bool                    semigroup)
      : generators_(std::move(generators)),
        relations_(std::move(relations)),
        semigroup_(semigroup) {
    std::set<VariableId> gens(generators_.begin(), generators_.end());
    if (gens.size() != generators_.size()) {
      throw InvalidInput("repeated generator in presentation");
    }
    for (auto const& r : relations_) {
      for (auto const* side : {&r.lhs, &r.rhs}) {
        if (semigroup_ && side->empty()) {
          throw InvalidInput("semigroup relations need nonempty sides: "
                             + r.to_string());
        }
        for (auto const& v : *side) {
          if (gens.count(v) == 0) {
            throw UndefinedVariable(v.label());
          }
        }
      }
    }
  }

  Presentation Presentation::parse(std::string_view text) {
    std::istringstream              in{std::string(text)};
    std::string                     line;
    std::optional<std::vector<VariableId>> gens;
    bool                            semigroup = false;
    std::vector<Relation>           relations;
    std::size_t                     line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto t = trim(line);
      if (t.empty()) {
        continue;
      }
      auto const where = " (line " + std::to_string(line_no) + ")";
      if (!gens) {
        auto colon = t.find(':');
        auto head  = colon == std::string::npos ? std::string() : trim(t.substr(0, colon));
        if (head != "gens" && head != "sgens") {
          throw ParseError("presentation must start with 'gens:' or 'sgens:'" + where);
        }
        semigroup = head == "sgens";
        auto w    = Word::parse(t.substr(colon + 1));
        gens.emplace(w.begin(), w.end());
        continue;
      }
      auto eq = t.find('=');
      if (eq == std::string::npos || t.find('=', eq + 1) != std::string::npos) {
        throw ParseError("relation needs exactly one '='" + where);
      }
      relations.push_back({parse_side(t.substr(0, eq)), parse_side(t.substr(eq + 1))});
    }
    if (!gens) {
      throw ParseError("empty presentation");
    }
    return Presentation(std::move(*gens), std::move(relations), semigroup);
  }

  std::string Presentation::to_string() const {
    std::string out = semigroup_ ? "sgens:" : "gens:";
    for (auto const& g : generators_) {
      out += ' ' + g.label();
    }
    out += '\n';
    for (auto const& r : relations_) {
      out += r.to_string() + '\n';
    }
    return out;
  }

  CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<std::size_t>> entries)
      : entries_(std::move(entries)) {
    auto const n = entries_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n) {
        throw InvalidInput("Coxeter matrix must be square");
      }
      if (entries_[i][i] != 1) {
        throw InvalidInput("Coxeter matrix diagonal must be 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (entries_[i][j] != entries_[j][i]) {
          throw InvalidInput("Coxeter matrix must be symmetric");
        }
        if (i != j && entries_[i][j] == 1) {
          throw InvalidInput("off-diagonal Coxeter entries must be >= 2 or inf");
        }
      }
    }
  }

  CoxeterMatrix CoxeterMatrix::parse(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::string              token;
    std::vector<std::string> tokens;
    while (in >> token) {
      tokens.push_back(token);
    }
    if (tokens.empty()) {
      throw ParseError("empty Coxeter matrix");
    }
    auto const n = parse_count(tokens[0], "Coxeter rank");
    if (n == 0 || n > 64) {
      throw ParseError("Coxeter rank must lie in [1, 64]");
    }
    auto const strict   = n * (n - 1) / 2;
    auto const diagonal = n * (n + 1) / 2;
    auto const given    = tokens.size() - 1;
    if (given != strict && given != diagonal) {
      throw ParseError("expected " + std::to_string(strict) + " entries above the diagonal, or "
                       + std::to_string(diagonal) + " with it, got "
                       + std::to_string(given));
    }
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 1));
    std::size_t                           k = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = given == diagonal ? i : i + 1; j < n; ++j) {
        auto const& t = tokens[k++];
        auto v = (t == "inf" || t == "oo") ? infinity : parse_count(t, "Coxeter entry");
        if (i == j && v != 1) {
          throw ParseError("Coxeter matrix diagonal must be 1");
        }
        if (i != j && v == 1) {
          throw ParseError("off-diagonal Coxeter entries must be >= 2 or inf");
        }
        m[i][j] = m[j][i] = v;
      }
    }
    return CoxeterMatrix(std::move(m));
  }

  std::string CoxeterMatrix::to_string() const {
    std::string out = std::to_string(rank()) + '\n';
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = i + 1; j < rank(); ++j) {
        auto v = entries_[i][j];
        out += (j == i + 1 ? "" : " ") + (v == infinity ? std::string("inf") : std::to_string(v));
      }
      if (i + 1 < rank()) {
        out += '\n';
      }
    }
    return out;
  }

  namespace {
    CoxeterMatrix from_path(std::vector<std::size_t> const& labels) {
      auto const n = labels.size() + 1;
      std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 2));
      for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = m[i + 1][i] = labels[i];
      }
      return CoxeterMatrix(std::move(m));
    }
  }  // namespace

  CoxeterMatrix coxeter_A(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("A_n needs n >= 1");
    }
    return from_path(std::vector<std::size_t>(n - 1, 3));
  }

  CoxeterMatrix coxeter_B(std::size_t n) {
    if (n < 2) {
      throw InvalidInput("B_n needs n >= 2");
    }
    std::vector<std::size_t> labels(n - 1, 3);
    labels[0] = 4;
    return from_path(labels);
  }

  CoxeterMatrix coxeter_I2(std::size_t m) {
    if (m < 2) {
      throw InvalidInput("I2(m) needs m >= 2");
    }
    return from_path({m});
  }

  CoxeterMatrix coxeter_H3() {
    return from_path({5, 3});
  }

  CoxeterMatrix coxeter_D4() {
    std::vector<std::vector<std::size_t>> m(4, std::vector<std::size_t>(4, 2));
    for (std::size_t i = 0; i < 4; ++i) {
      m[i][i] = 1;
    }
    for (std::size_t leaf : {0, 2, 3}) {
      m[1][leaf] = m[leaf][1] = 3;
    }
    return CoxeterMatrix(std::move(m));
  }

  CoxeterMatrix coxeter_by_name(std::string_view name) {
    auto const s = trim(name);
    if (s == "H3") {
      return coxeter_H3();
    }
    if (s == "D4") {
      return coxeter_D4();
    }
    if (s.size() >= 2) {
      auto rest = s.substr(1);
      if (s[0] == 'A') {
        return coxeter_A(parse_count(rest, "A_n rank"));
      }
      if (s[0] == 'B') {
        return coxeter_B(parse_count(rest, "B_n rank"));
      }
      if (s[0] == 'I') {
        if (rest.rfind("2(", 0) == 0 && rest.back() == ')') {
          rest = rest.substr(2, rest.size() - 3);
        }
        return coxeter_I2(parse_count(rest, "I2(m) parameter"));
      }
    }
    throw InvalidInput("unknown Coxeter diagram '" + s
                       + "' (known: An, Bn, In, I2(m), H3, D4)");
  }

  Word alternating(VariableId const& u, VariableId const& v, std::size_t length) {
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(i % 2 == 0 ? u : v);
    }
    return w;
  }

  Presentation catalan_presentation(std::size_t m) {
    if (m < 2) {
      throw InvalidInput("Catalan presentation needs m >= 2");
    }
    std::vector<VariableId> a;
    for (std::size_t i = 1; i < m; ++i) {
      a.push_back(numbered("a", i));
    }
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < a.size(); ++i) {
      rel.push_back({{a[i], a[i]}, {a[i]}});
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = i + 2; k < a.size(); ++k) {
        rel.push_back({{a[k], a[i]}, {a[i], a[k]}});
      }
    }
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      rel.push_back({{a[i], a[i + 1], a[i]}, {a[i + 1], a[i]}});
      rel.push_back({{a[i + 1], a[i], a[i + 1]}, {a[i + 1], a[i]}});
    }
    return Presentation(std::move(a), std::move(rel));
  }

  Presentation free_tree_presentation(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("free tree presentation needs n >= 1");
    }
    std::vector<VariableId> a;
    for (std::size_t i = 1; i <= n; ++i) {
      a.push_back(numbered("a", i));
    }
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < n; ++i) {
      rel.push_back({{a[i], a[i]}, {a[i]}});
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        rel.push_back({{a[k], a[i], a[k]}, {a[k], a[i]}});
      }
    }
    return Presentation(std::move(a), std::move(rel));
  }

  Presentation hecke0_presentation(CoxeterMatrix const& cd) {
    std::vector<VariableId> s;
    for (std::size_t i = 1; i <= cd.rank(); ++i) {
      s.push_back(numbered("s", i));
    }
    std::vector<Relation> rel;
    for (auto const& g : s) {
      rel.push_back({{g, g}, {g}});
    }
    for (std::size_t i = 0; i < cd.rank(); ++i) {
      for (std::size_t j = i + 1; j < cd.rank(); ++j) {
        auto m = cd.entry(i, j);
        if (m != CoxeterMatrix::infinity) {
          rel.push_back({alternating(s[j], s[i], m), alternating(s[i], s[j], m)});
        }
      }
    }
    return Presentation(std::move(s), std::move(rel));
  }

  Presentation lee_monoid_presentation(std::size_t n) {
    if (n < 3) {
      throw InvalidInput("Lee monoid presentation needs n >= 3");
    }
    VariableId const e("e"), f("f");
    std::vector<Relation> rel{{{e, e}, {e}},
                              {{f, f}, {f}},
                              {alternating(f, e, n + 1), alternating(e, f, n)},
                              {alternating(e, f, n + 1), alternating(e, f, n)}};
    return Presentation({e, f}, std::move(rel));
  }

  Presentation lee_L3_presentation() {
    VariableId const e("e"), f("f");
    std::vector<Relation> rel{{{e, e}, {e}},
                              {{f, f}, {f}},
                              {alternating(e, f, 4), alternating(e, f, 3)},
                              {alternating(f, e, 4), alternating(e, f, 3)}};
    return Presentation({e, f}, std::move(rel), true);
  }

  Presentation lee_L4_presentation() {
    VariableId const e("e"), f("f");
    std::vector<Relation> rel{{{e, e}, {e}},
                              {{f, f}, {f}},
                              {alternating(e, f, 5), alternating(e, f, 4)},
                              {alternating(f, e, 5), alternating(e, f, 4)}};
    return Presentation({e, f}, std::move(rel), true);
  }

  Presentation named_presentation(std::string_view kind, std::string_view arg) {
    if (kind == "catalan") {
      return catalan_presentation(parse_count(arg, "m"));
    }
    if (kind == "free_tree") {
      return free_tree_presentation(parse_count(arg, "n"));
    }
    if (kind == "hecke0") {
      return hecke0_presentation(coxeter_by_name(arg));
    }
    if (kind == "lee_monoid") {
      return lee_monoid_presentation(parse_count(arg, "n"));
    }
    if (kind == "lee_L3") {
      return lee_L3_presentation();
    }
    if (kind == "lee_L4") {
      return lee_L4_presentation();
    }
    throw InvalidInput("unknown presentation '" + std::string(kind)
                       + "' (known: catalan, free_tree, hecke0, lee_monoid, "
                         "lee_L3, lee_L4)");
  }

}  // namespace fbplab
