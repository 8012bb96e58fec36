#include "fbplab/transformation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fbplab/error.hpp"

namespace fbplab {

  PartialMap::PartialMap(std::size_t m) : image_(m, undefined) {
    if (m > max_degree) {
      throw LimitExceeded("map degree", m, max_degree);
    }
  }

  PartialMap::PartialMap(std::vector<Point> image) : image_(std::move(image)) {
    if (image_.size() > max_degree) {
      throw LimitExceeded("map degree", image_.size(), max_degree);
    }
    for (auto p : image_) {
      if (p > image_.size()) {
        throw InvalidInput("image point " + std::to_string(p)
                           + " outside [" + std::to_string(image_.size()) + "]");
      }
    }
  }

  PartialMap PartialMap::identity(std::size_t m) {
    PartialMap result(m);
    for (std::size_t i = 1; i <= m; ++i) {
      result.image_[i - 1] = static_cast<Point>(i);
    }
    return result;
  }

  PartialMap PartialMap::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw ParseError("map literal must look like [a1,...,am]: "
                       + std::string(text));
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Point> image;
    if (text.empty()) {
      return PartialMap(std::move(image));
    }
    while (true) {
      auto comma = text.find(',');
      auto entry = trim(text.substr(0, comma));
      if (entry == "-") {
        image.push_back(undefined);
      } else {
        if (entry.empty()
            || !std::all_of(entry.begin(), entry.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          throw ParseError("bad map entry '" + std::string(entry) + "'");
        }
        auto value = std::stoul(std::string(entry));
        if (value == 0 || value > max_degree) {
          throw ParseError("map entry out of range: " + std::string(entry));
        }
        image.push_back(static_cast<Point>(value));
      }
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    try {
      return PartialMap(std::move(image));
    } catch (InvalidInput const& e) {
      throw ParseError(e.what());
    }
  }

  void PartialMap::set(std::size_t point, Point value) {
    if (point == 0 || point > degree() || value > degree()) {
      throw InvalidInput("point outside the base set");
    }
    image_[point - 1] = value;
  }

  std::size_t PartialMap::rank() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(image_.begin(), image_.end(), [](Point p) {
          return p != undefined;
        }));
  }

  std::string PartialMap::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += image_[i] == undefined ? std::string("-")
                                    : std::to_string(image_[i]);
    }
    return out + "]";
  }

  PartialMap compose(PartialMap const& a, PartialMap const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidInput("cannot compose maps of degrees "
                         + std::to_string(a.degree()) + " and "
                         + std::to_string(b.degree()));
    }
    std::vector<PartialMap::Point> image(a.degree(), PartialMap::undefined);
    for (std::size_t i = 1; i <= a.degree(); ++i) {
      if (auto p = a[i]; p != PartialMap::undefined) {
        image[i - 1] = b[p];
      }
    }
    return PartialMap(std::move(image));
  }

  MapProperties properties(PartialMap const& a) {
    MapProperties result{true, true, true, true};
    std::vector<bool> hit(a.degree() + 1, false);
    PartialMap::Point last = 0;
    for (std::size_t i = 1; i <= a.degree(); ++i) {
      auto p = a[i];
      if (p == PartialMap::undefined) {
        result.total = false;
        continue;
      }
      if (hit[p]) {
        result.injective = false;
      }
      hit[p] = true;
      if (p < last) {
        result.order_preserving = false;
      }
      last = p;
      if (p < i) {
        result.extensive = false;
      }
    }
    return result;
  }

  namespace {
    struct FamilyName {
      FamilyKind       kind;
      std::string_view name;
    };
    constexpr FamilyName family_names[] = {{FamilyKind::E, "E"},
                                           {FamilyKind::C, "C"},
                                           {FamilyKind::IC, "IC"},
                                           {FamilyKind::PE, "PE"},
                                           {FamilyKind::PC, "PC"},
                                           {FamilyKind::IE, "IE"},
                                           {FamilyKind::POI, "POI"},
                                           {FamilyKind::OPFixTop, "OPFixTop"}};
  }  // namespace

  std::string to_string(FamilyKind kind) {
    for (auto const& entry : family_names) {
      if (entry.kind == kind) {
        return std::string(entry.name);
      }
    }
    return "?";
  }

  FamilyKind family_from_string(std::string_view name) {
    for (auto const& entry : family_names) {
      if (entry.name == name) {
        return entry.kind;
      }
    }
    throw InvalidInput("unknown family '" + std::string(name) + "'");
  }

  std::vector<FamilyKind> all_families() {
    std::vector<FamilyKind> result;
    for (auto const& entry : family_names) {
      result.push_back(entry.kind);
    }
    return result;
  }

  bool in_family(FamilyKind kind, PartialMap const& a) {
    auto p = properties(a);
    switch (kind) {
      case FamilyKind::E:
        return p.total && p.extensive;
      case FamilyKind::C:
        return p.total && p.order_preserving && p.extensive;
      case FamilyKind::IC:
        return p.injective && p.order_preserving && p.extensive;
      case FamilyKind::PE:
        return p.extensive;
      case FamilyKind::PC:
        return p.order_preserving && p.extensive;
      case FamilyKind::IE:
        return p.injective && p.extensive;
      case FamilyKind::POI:
        return p.injective && p.order_preserving;
      case FamilyKind::OPFixTop:
        return p.total && p.order_preserving
               && (a.degree() == 0 || a[a.degree()] == a.degree());
    }
    return false;
  }

  namespace {
    struct FamilyRules {
      bool total;
      bool injective;
      bool order_preserving;
      bool extensive;
      bool fix_top;
    };

    FamilyRules rules_of(FamilyKind kind) {
      switch (kind) {
        case FamilyKind::E:
          return {true, false, false, true, false};
        case FamilyKind::C:
          return {true, false, true, true, false};
        case FamilyKind::IC:
          return {false, true, true, true, false};
        case FamilyKind::PE:
          return {false, false, false, true, false};
        case FamilyKind::PC:
          return {false, false, true, true, false};
        case FamilyKind::IE:
          return {false, true, false, true, false};
        case FamilyKind::POI:
          return {false, true, true, false, false};
        case FamilyKind::OPFixTop:
          return {true, false, true, false, true};
      }
      return {};
    }
  }  // namespace

  std::vector<PartialMap> enumerate_family(FamilyKind  kind,
                                           std::size_t m,
                                           std::size_t max_m) {
    if (m == 0) {
      throw InvalidInput("family degree must be at least 1");
    }
    if (m > max_m) {
      throw LimitExceeded("exhaustive family enumeration degree", m, max_m);
    }
    // Depth-first over image vectors with entries 0 (undefined) .. m in
    // lexicographic order. Every defining property is decided by prefixes,
    // so a branch is cut as soon as its prefix violates one.
    auto const                     rules = rules_of(kind);
    std::vector<PartialMap::Point> image(m, PartialMap::undefined);
    std::vector<bool>              used(m + 1, false);
    std::vector<PartialMap>        result;
    auto dfs = [&](auto&& self, std::size_t point, PartialMap::Point last) -> void {
      if (point > m) {
        result.emplace_back(image);
        return;
      }
      for (std::size_t v = 0; v <= m; ++v) {
        if (v == 0) {
          if (rules.total) {
            continue;
          }
          image[point - 1] = PartialMap::undefined;
          self(self, point + 1, last);
          continue;
        }
        if ((rules.injective && used[v]) || (rules.order_preserving && v < last)
            || (rules.extensive && v < point)
            || (rules.fix_top && point == m && v != m)) {
          continue;
        }
        image[point - 1] = static_cast<PartialMap::Point>(v);
        bool const was_used = used[v];
        used[v]             = true;
        self(self, point + 1, static_cast<PartialMap::Point>(v));
        used[v] = was_used;
      }
      image[point - 1] = PartialMap::undefined;
    };
    dfs(dfs, 1, 0);
    return result;
  }

  namespace {
    // Fixes everything except p, which goes to q (0 = undefined).
    PartialMap moving(std::size_t m, std::size_t p, PartialMap::Point q) {
      auto a = PartialMap::identity(m);
      a.set(p, q);
      return a;
    }
  }  // namespace

  std::vector<PartialMap> family_generators(FamilyKind  kind,
                                            std::size_t m,
                                            std::size_t max_m) {
    if (m == 0) {
      throw InvalidInput("family degree must be at least 1");
    }
    using Point = PartialMap::Point;
    std::vector<PartialMap> result;
    switch (kind) {
      case FamilyKind::C:
        for (std::size_t i = 1; i < m; ++i) {
          result.push_back(moving(m, i, static_cast<Point>(i + 1)));
        }
        return result;
      case FamilyKind::E:
        for (std::size_t i = 1; i < m; ++i) {
          for (std::size_t j = i + 1; j <= m; ++j) {
            result.push_back(moving(m, i, static_cast<Point>(j)));
          }
        }
        return result;
      case FamilyKind::IC:
        // Partial identities missing one point, and i -> i + 1 with i + 1
        // dropped from the domain.
        for (std::size_t i = 1; i <= m; ++i) {
          result.push_back(moving(m, i, PartialMap::undefined));
        }
        for (std::size_t i = 1; i < m; ++i) {
          auto a = moving(m, i, static_cast<Point>(i + 1));
          a.set(i + 1, PartialMap::undefined);
          result.push_back(a);
        }
        return result;
      default:
        break;
    }
    auto identity = PartialMap::identity(m);
    for (auto& a : enumerate_family(kind, m, max_m)) {
      if (a != identity) {
        result.push_back(std::move(a));
      }
    }
    return result;
  }

  PartialMap bar_map(PartialMap const& a) {
    std::size_t const m = a.degree();
    if (m + 1 > PartialMap::max_degree) {
      throw LimitExceeded("map degree", m + 1, PartialMap::max_degree);
    }
    std::vector<PartialMap::Point> image(m + 1);
    image[m] = static_cast<PartialMap::Point>(m + 1);
    for (std::size_t k = m; k >= 1; --k) {
      image[k - 1] = a.defined(k) ? a[k] : image[k];
    }
    return PartialMap(std::move(image));
  }

  PartialMap hat_map(PartialMap const& b) {
    std::size_t const n = b.degree();
    if (n == 0) {
      throw InvalidInput("hat map needs a map on [m + 1] with m >= 0");
    }
    if (!properties(b).total) {
      throw InvalidInput("hat map needs a total map");
    }
    if (b[n] != n) {
      throw InvalidInput("hat map needs a map fixing its top point");
    }
    std::size_t const m = n - 1;
    // Largest preimage of each value.
    std::vector<std::size_t> largest(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      largest[b[k]] = k;
    }
    PartialMap result(m);
    for (std::size_t k = 1; k <= m; ++k) {
      if (b[k] != n && largest[b[k]] == k) {
        result.set(k, b[k]);
      }
    }
    return result;
  }

  std::size_t catalan_number(std::size_t n) {
    // C_{k+1} = C_k * 2(2k + 1) / (k + 2); exact at every step.
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (c > std::numeric_limits<std::size_t>::max() / (2 * (2 * k + 1))) {
        throw LimitExceeded("Catalan number index", n, k);
      }
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

}  // namespace fbplab
