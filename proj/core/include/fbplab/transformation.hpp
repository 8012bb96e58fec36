// Partial transformations of [m] = {1, ..., m}, the named monoid families
// built from them, and the bijection between IC_m and C_{m+1}.

#ifndef FBPLAB_TRANSFORMATION_HPP_
#define FBPLAB_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fbplab {

  // Maps act on the right: x(ab) = (xa)b. Points are 1-based.
  class PartialMap {
   public:
    using Point                     = std::uint16_t;
    static constexpr Point undefined = 0;
    static constexpr std::size_t max_degree = 4096;

    // The empty map on [m].
    explicit PartialMap(std::size_t m = 0);
    // image[i - 1] is the image of i, or `undefined`.
    explicit PartialMap(std::vector<Point> image);

    static PartialMap identity(std::size_t m);
    // "[a1,...,am]" with "-" for undefined entries.
    static PartialMap parse(std::string_view text);

    std::size_t degree() const noexcept {
      return image_.size();
    }
    bool defined(std::size_t point) const {
      return image_.at(point - 1) != undefined;
    }
    // The image of a point, or `undefined`.
    Point operator[](std::size_t point) const {
      return image_.at(point - 1);
    }
    void set(std::size_t point, Point value);

    std::vector<Point> const& image() const noexcept {
      return image_;
    }
    std::size_t rank() const noexcept;
    std::string to_string() const;

    friend bool operator==(PartialMap const&, PartialMap const&) = default;
    friend auto operator<=>(PartialMap const&, PartialMap const&) = default;

   private:
    std::vector<Point> image_;
  };

  // Throws InvalidInput on a degree mismatch.
  PartialMap compose(PartialMap const& a, PartialMap const& b);

  struct MapProperties {
    bool total;
    bool injective;
    bool order_preserving;
    bool extensive;
    friend bool operator==(MapProperties const&, MapProperties const&) = default;
  };

  MapProperties properties(PartialMap const& a);

  enum class FamilyKind {
    // Total extensive maps.
    E,
    // Total order-preserving extensive maps.
    C,
    // Partial order-preserving extensive injections.
    IC,
    // Partial extensive maps.
    PE,
    // Partial order-preserving extensive maps.
    PC,
    // Partial extensive injections.
    IE,
    // Partial order-preserving injections.
    POI,
    // Total order-preserving maps fixing m.
    OPFixTop
  };

  std::string        to_string(FamilyKind kind);
  FamilyKind         family_from_string(std::string_view name);
  std::vector<FamilyKind> all_families();

  bool in_family(FamilyKind kind, PartialMap const& a);

  // Every member of the family on [m], in increasing order of image vectors,
  // by a depth-first search over image prefixes.
  std::vector<PartialMap> enumerate_family(FamilyKind  kind,
                                           std::size_t m,
                                           std::size_t max_m = 8);

  // A generating set for the family on [m]. C, E and IC get small generating
  // sets; the other families fall back to their non-identity members.
  std::vector<PartialMap> family_generators(FamilyKind  kind,
                                            std::size_t m,
                                            std::size_t max_m = 8);

  // Total map on [m + 1] fixing m + 1; k is sent to ka when defined and to
  // the image of k + 1 otherwise.
  PartialMap bar_map(PartialMap const& a);
  // Restriction of b to the points k <= m with kb != m + 1 that are largest
  // in their fibre. Throws InvalidInput if b is partial or moves m + 1.
  PartialMap hat_map(PartialMap const& b);

  std::size_t catalan_number(std::size_t n);

}  // namespace fbplab

template <>
struct std::hash<fbplab::PartialMap> {
  std::size_t operator()(fbplab::PartialMap const& a) const noexcept {
    std::size_t h = a.degree();
    for (auto p : a.image()) {
      h = h * 1000003u ^ p;
    }
    return h;
  }
};

#endif  // FBPLAB_TRANSFORMATION_HPP_
