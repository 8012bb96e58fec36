#include "fbplab/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fbplab {

  std::size_t table_memory_cap_bytes() {
    std::size_t mb = 4096;
    if (char const* env = std::getenv("FBPLAB_CAP_MB")) {
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        mb = static_cast<std::size_t>(value);
      }
    }
    return mb * 1024 * 1024;
  }

  namespace {
    void check_shape(std::size_t                      size,
                     std::vector<Index> const&        table,
                     Index                            identity,
                     std::vector<Index> const&        generators,
                     std::vector<std::string> const&  labels) {
      if (size == 0) {
        throw InvalidInput("a monoid has at least one element");
      }
      if (table.size() != size * size) {
        throw InvalidInput("table must have size^2 entries");
      }
      for (auto x : table) {
        if (x >= size) {
          throw InvalidInput("table entry out of range");
        }
      }
      if (identity >= size) {
        throw InvalidInput("identity index out of range");
      }
      for (auto g : generators) {
        if (g >= size) {
          throw InvalidInput("generator index out of range");
        }
      }
      if (!labels.empty() && labels.size() != size) {
        throw InvalidInput("one label per element expected");
      }
    }
  }  // namespace

  FiniteMonoid::FiniteMonoid(std::size_t              size,
                             std::vector<Index>       table,
                             Index                    identity,
                             std::vector<Index>       generators,
                             std::vector<std::string> labels)
      : FiniteMonoid(Trusted{},
                     size,
                     std::move(table),
                     identity,
                     std::move(generators),
                     std::move(labels)) {
    for (std::size_t a = 0; a < size_; ++a) {
      if (product(identity_, Index(a)) != a || product(Index(a), identity_) != a) {
        throw InvalidInput("identity law fails at element " + std::to_string(a));
      }
    }
    if (size_ <= associativity_check_limit && !is_associative(*this)) {
      throw InvalidInput("multiplication table is not associative");
    }
  }

  FiniteMonoid::FiniteMonoid(Trusted,
                             std::size_t              size,
                             std::vector<Index>       table,
                             Index                    identity,
                             std::vector<Index>       generators,
                             std::vector<std::string> labels)
      : size_(size),
        table_(std::move(table)),
        identity_(identity),
        generators_(std::move(generators)),
        labels_(std::move(labels)) {
    check_shape(size_, table_, identity_, generators_, labels_);
    index_generators();
  }

  FiniteMonoid::FiniteMonoid()
      : FiniteMonoid(Trusted{}, 1, {0}, 0, {}, {"1"}) {}

  void FiniteMonoid::index_generators() {
    auto const unseen = static_cast<Index>(-1);
    parent_.assign(size_, unseen);
    via_.assign(size_, 0);
    parent_[identity_] = identity_;
    std::deque<Index> queue{identity_};
    while (!queue.empty()) {
      auto a = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        auto b = product(a, generators_[k]);
        if (parent_[b] == unseen) {
          parent_[b] = a;
          via_[b]    = std::uint32_t(k);
          queue.push_back(b);
        }
      }
    }
  }

  std::string FiniteMonoid::label(Index a) const {
    if (a < labels_.size()) {
      return labels_[a];
    }
    return std::to_string(a);
  }

  std::optional<std::vector<std::size_t>> FiniteMonoid::generator_word(
      Index a) const {
    if (parent_.at(a) == static_cast<Index>(-1)) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    while (a != identity_) {
      word.push_back(via_[a]);
      a = parent_[a];
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  bool FiniteMonoid::generated_by_generators() const noexcept {
    return std::none_of(parent_.begin(), parent_.end(), [](Index p) {
      return p == static_cast<Index>(-1);
    });
  }

  bool is_associative(FiniteMonoid const& m) {
    auto const n = m.size();
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        auto ab = m.product(a, b);
        for (Index c = 0; c < n; ++c) {
          if (m.product(ab, c) != m.product(a, m.product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Index evaluate_word(FiniteMonoid const&        m,
                      ElementSubstitution const& sigma,
                      Word const&                w) {
    if (w.empty()) {
      throw InvalidInput("cannot evaluate the empty word");
    }
    Index value = m.identity();
    for (auto const& v : w) {
      auto it = sigma.find(v);
      if (it == sigma.end()) {
        throw UndefinedVariable(v.label());
      }
      if (it->second >= m.size()) {
        throw InvalidInput("element index out of range for '" + v.label() + "'");
      }
      value = m.product(value, it->second);
    }
    return value;
  }

  FiniteMonoid direct_product(std::vector<FiniteMonoid const*> const& factors,
                              std::size_t                             max_size) {
    if (factors.empty()) {
      return FiniteMonoid();
    }
    std::size_t n = 1;
    for (auto const* f : factors) {
      if (f->size() > max_size / n) {
        throw LimitExceeded("direct product size", n * f->size(), max_size);
      }
      n *= f->size();
    }
    if (n * n > table_memory_cap_bytes() / sizeof(Index)) {
      throw LimitExceeded("multiplication table bytes (FBPLAB_CAP_MB)",
                          n * n * sizeof(Index),
                          table_memory_cap_bytes());
    }
    std::size_t const k = factors.size();
    // Mixed radix with the first factor most significant.
    auto split = [&](std::size_t x) {
      std::vector<Index> parts(k);
      for (std::size_t i = k; i-- > 0;) {
        parts[i] = Index(x % factors[i]->size());
        x /= factors[i]->size();
      }
      return parts;
    };
    auto join = [&](std::vector<Index> const& parts) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < k; ++i) {
        x = x * factors[i]->size() + parts[i];
      }
      return Index(x);
    };
    std::vector<std::vector<Index>> coords(n);
    for (std::size_t x = 0; x < n; ++x) {
      coords[x] = split(x);
    }
    std::vector<Index> table(n * n);
    std::vector<Index> parts(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < k; ++i) {
          parts[i] = factors[i]->product(coords[a][i], coords[b][i]);
        }
        table[a * n + b] = join(parts);
      }
    }
    std::vector<Index> identity_parts(k);
    for (std::size_t i = 0; i < k; ++i) {
      identity_parts[i] = factors[i]->identity();
    }
    // Each generator of a factor, paired with identities elsewhere.
    std::vector<Index> generators;
    for (std::size_t i = 0; i < k; ++i) {
      for (auto g : factors[i]->generators()) {
        auto p = identity_parts;
        p[i]   = g;
        generators.push_back(join(p));
      }
    }
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) {
        s += (i == 0 ? "" : ",") + factors[i]->label(coords[x][i]);
      }
      labels[x] = s + ")";
    }
    return FiniteMonoid(FiniteMonoid::Trusted{},
                        n,
                        std::move(table),
                        join(identity_parts),
                        std::move(generators),
                        std::move(labels));
  }

  FiniteMonoid direct_product(FiniteMonoid const& a,
                              FiniteMonoid const& b,
                              std::size_t         max_size) {
    return direct_product(std::vector<FiniteMonoid const*>{&a, &b}, max_size);
  }

  FiniteMonoid dual(FiniteMonoid const& m) {
    auto const         n = m.size();
    std::vector<Index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = m.product(Index(b), Index(a));
      }
    }
    return FiniteMonoid(FiniteMonoid::Trusted{},
                        n,
                        std::move(table),
                        m.identity(),
                        m.generators(),
                        m.labels());
  }

  FiniteMonoid adjoin_identity(FiniteMonoid const& m) {
    auto const         n = m.size() + 1;
    std::vector<Index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == 0) {
          table[a * n + b] = Index(b);
        } else if (b == 0) {
          table[a * n + b] = Index(a);
        } else {
          table[a * n + b] = m.product(Index(a - 1), Index(b - 1)) + 1;
        }
      }
    }
    std::vector<Index> generators;
    for (Index a = 1; a < n; ++a) {
      generators.push_back(a);
    }
    std::vector<std::string> labels{"1"};
    for (Index a = 0; a < m.size(); ++a) {
      labels.push_back(m.label(a));
    }
    return FiniteMonoid(FiniteMonoid::Trusted{},
                        n,
                        std::move(table),
                        0,
                        std::move(generators),
                        std::move(labels));
  }

  namespace {
    // Rows of bits, one row per element.
    class BitRows {
     public:
      explicit BitRows(std::size_t n)
          : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

      void set(std::size_t row, std::size_t col) {
        bits_[row * words_ + col / 64] |= std::uint64_t(1) << (col % 64);
      }
      bool test(std::size_t row, std::size_t col) const {
        return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
      }
      void unite(std::size_t row, BitRows const& other, std::size_t other_row) {
        for (std::size_t w = 0; w < words_; ++w) {
          bits_[row * words_ + w] |= other.bits_[other_row * words_ + w];
        }
      }
      std::vector<std::uint64_t> row(std::size_t r) const {
        return std::vector<std::uint64_t>(bits_.begin() + r * words_,
                                          bits_.begin() + (r + 1) * words_);
      }
      bool rows_distinct() const {
        std::set<std::vector<std::uint64_t>> seen;
        for (std::size_t r = 0; r < n_; ++r) {
          if (!seen.insert(row(r)).second) {
            return false;
          }
        }
        return true;
      }
      std::size_t count(std::size_t r) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          c += static_cast<std::size_t>(__builtin_popcountll(bits_[r * words_ + w]));
        }
        return c;
      }

     private:
      std::size_t                n_;
      std::size_t                words_;
      std::vector<std::uint64_t> bits_;
    };

    BitRows right_ideals(FiniteMonoid const& m) {
      BitRows rows(m.size());
      for (Index a = 0; a < m.size(); ++a) {
        for (Index b = 0; b < m.size(); ++b) {
          rows.set(a, m.product(a, b));
        }
      }
      return rows;
    }
  }  // namespace

  Triviality triviality(FiniteMonoid const& m) {
    auto const n     = m.size();
    BitRows    right = right_ideals(m);
    BitRows    left(n);
    for (Index a = 0; a < n; ++a) {
      for (Index c = 0; c < n; ++c) {
        left.set(a, m.product(c, a));
      }
    }
    // MaM is the union of cM over c in Ma.
    BitRows both(n);
    for (Index a = 0; a < n; ++a) {
      for (Index c = 0; c < n; ++c) {
        if (left.test(a, c)) {
          both.unite(a, right, c);
        }
      }
    }
    Triviality result{
        right.rows_distinct(), left.rows_distinct(), both.rows_distinct()};
    if (result.j_trivial && !(result.r_trivial && result.l_trivial)) {
      throw std::logic_error("J-trivial table that is not R- and L-trivial");
    }
    return result;
  }

  StructureFlags structure_flags(FiniteMonoid const& m) {
    auto const     n = m.size();
    StructureFlags flags{true, true, true, true};
    std::vector<Index> idempotents;
    for (Index a = 0; a < n; ++a) {
      auto aa = m.product(a, a);
      if (aa == a) {
        idempotents.push_back(a);
      } else {
        flags.is_band = false;
      }
      // The powers of a run into a cycle; aperiodic means the cycle has
      // length one, i.e. the first repeated power is a fixed point.
      std::vector<bool> seen(n, false);
      Index             p = a;
      while (!seen[p]) {
        seen[p] = true;
        p       = m.product(p, a);
      }
      if (m.product(p, a) != p) {
        flags.aperiodic = false;
      }
      for (Index b = 0; b < n; ++b) {
        if (m.product(a, b) != m.product(b, a)) {
          flags.commutative = false;
        }
      }
    }
    for (auto e : idempotents) {
      for (auto f : idempotents) {
        if (m.product(e, f) != m.product(f, e)) {
          flags.idempotents_commute = false;
        }
      }
    }
    return flags;
  }

  Submonoid submonoid_generated(FiniteMonoid const&       m,
                                std::vector<Index> const& subset) {
    for (auto a : subset) {
      if (a >= m.size()) {
        throw InvalidInput("subset element out of range");
      }
    }
    auto result = closure(
        m.identity(),
        subset,
        [&m](Index a, Index b) { return m.product(a, b); },
        [&m](Index a) { return m.label(a); });
    return Submonoid{std::move(result.monoid), std::move(result.elements)};
  }

  bool is_homomorphism(FiniteMonoid const&       source,
                       FiniteMonoid const&       target,
                       std::vector<Index> const& phi) {
    if (phi.size() != source.size()) {
      return false;
    }
    for (auto x : phi) {
      if (x >= target.size()) {
        return false;
      }
    }
    if (phi[source.identity()] != target.identity()) {
      return false;
    }
    for (Index a = 0; a < source.size(); ++a) {
      for (Index b = 0; b < source.size(); ++b) {
        if (phi[source.product(a, b)] != target.product(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Index>> map_by_generators(
      FiniteMonoid const&       source,
      FiniteMonoid const&       target,
      std::vector<Index> const& gen_images) {
    if (gen_images.size() != source.generators().size()) {
      throw InvalidInput("one image per source generator expected");
    }
    for (auto x : gen_images) {
      if (x >= target.size()) {
        throw InvalidInput("generator image out of range");
      }
    }
    std::vector<Index> phi(source.size());
    for (Index a = 0; a < source.size(); ++a) {
      auto word = source.generator_word(a);
      if (!word) {
        return std::nullopt;
      }
      Index value = target.identity();
      for (auto k : *word) {
        value = target.product(value, gen_images[k]);
      }
      phi[a] = value;
    }
    if (!is_homomorphism(source, target, phi)) {
      return std::nullopt;
    }
    return phi;
  }

  RegularRepresentation embed_rtrivial_in_Em(FiniteMonoid const& m) {
    if (!triviality(m).r_trivial) {
      throw InvalidInput("regular embedding into E_m needs an R-trivial monoid");
    }
    auto const n     = m.size();
    BitRows    right = right_ideals(m);
    RegularRepresentation rep;
    rep.order.resize(n);
    for (Index a = 0; a < n; ++a) {
      rep.order[a] = a;
    }
    std::stable_sort(rep.order.begin(), rep.order.end(), [&](Index a, Index b) {
      return right.count(a) > right.count(b);
    });
    std::vector<std::size_t> point(n);
    for (std::size_t k = 0; k < n; ++k) {
      point[rep.order[k]] = k + 1;
    }
    rep.maps.reserve(n);
    for (Index a = 0; a < n; ++a) {
      PartialMap rho(n);
      for (Index x = 0; x < n; ++x) {
        rho.set(point[x], PartialMap::Point(point[m.product(x, a)]));
      }
      rep.maps.push_back(std::move(rho));
    }
    rep.extensive = std::all_of(rep.maps.begin(), rep.maps.end(), [](auto const& r) {
      return properties(r).extensive && properties(r).total;
    });
    rep.injective = std::set<PartialMap>(rep.maps.begin(), rep.maps.end()).size() == n;
    rep.multiplicative = true;
    for (Index a = 0; a < n && rep.multiplicative; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (compose(rep.maps[a], rep.maps[b]) != rep.maps[m.product(a, b)]) {
          rep.multiplicative = false;
          break;
        }
      }
    }
    return rep;
  }

  std::string to_dump(FiniteMonoid const& m) {
    std::ostringstream out;
    out << m.size() << '\n';
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = 0; b < m.size(); ++b) {
        out << (b == 0 ? "" : " ") << m.product(a, b);
      }
      out << '\n';
    }
    out << "identity " << m.identity() << '\n';
    out << "generators";
    for (auto g : m.generators()) {
      out << ' ' << g;
    }
    out << '\n';
    return out.str();
  }

  FiniteMonoid from_dump(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long          n = 0;
    if (!(in >> n) || n <= 0) {
      throw ParseError("monoid dump must start with a positive size");
    }
    auto const         size = static_cast<std::size_t>(n);
    if (size * size > table_memory_cap_bytes() / sizeof(Index)) {
      throw LimitExceeded("multiplication table bytes (FBPLAB_CAP_MB)",
                          size * size * sizeof(Index),
                          table_memory_cap_bytes());
    }
    std::vector<Index> table(size * size);
    for (auto& x : table) {
      long long v = -1;
      if (!(in >> v) || v < 0 || v >= n) {
        throw ParseError("bad or missing table entry");
      }
      x = Index(v);
    }
    std::string keyword;
    long long   identity = -1;
    if (!(in >> keyword) || keyword != "identity" || !(in >> identity)
        || identity < 0 || identity >= n) {
      throw ParseError("expected 'identity <i>'");
    }
    if (!(in >> keyword) || keyword != "generators") {
      throw ParseError("expected 'generators ...'");
    }
    std::vector<Index> generators;
    long long          g = 0;
    while (in >> g) {
      if (g < 0 || g >= n) {
        throw ParseError("generator index out of range");
      }
      generators.push_back(Index(g));
    }
    if (!in.eof()) {
      throw ParseError("unexpected text after generators");
    }
    try {
      return FiniteMonoid(
          size, std::move(table), Index(identity), std::move(generators));
    } catch (ParseError const&) {
      throw;
    } catch (InvalidInput const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace fbplab
