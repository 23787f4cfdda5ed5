#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pastebox {

using Coord = std::int32_t;

/// Largest ambient dimension supported by the fixed-size vertex storage.
inline constexpr int kMaxDim = 6;

class PasteboxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lattice point of N^d. Unused trailing slots are kept at zero so that
/// the defaulted comparisons and hashing only see meaningful data.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(int dim);
  Vertex(std::initializer_list<Coord> coords);
  explicit Vertex(const std::vector<Coord>& coords);

  int dim() const { return dim_; }
  Coord operator[](int a) const { return c_[static_cast<std::size_t>(a)]; }
  Coord& operator[](int a) { return c_[static_cast<std::size_t>(a)]; }

  /// Copy with coordinate `a` replaced by `value`.
  Vertex with(int a, Coord value) const;
  std::vector<Coord> coords() const;
  bool leq(const Vertex& other) const;

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;

 private:
  std::uint8_t dim_ = 0;
  std::array<Coord, kMaxDim> c_{};
};

/// A pair (lo, hi) with lo <= hi componentwise.
struct Box {
  Vertex lo;
  Vertex hi;

  Box() = default;
  Box(Vertex lo_, Vertex hi_);
  static Box point(const Vertex& v) { return Box(v, v); }

  int ambient() const { return lo.dim(); }
  /// Number of strict directions.
  int dimension() const;
  bool strictIn(int a) const { return lo[a] < hi[a]; }
  bool contains(const Box& inner) const;

  auto operator<=>(const Box&) const = default;
  bool operator==(const Box&) const = default;
};

std::string toString(const Vertex& v);
std::string toString(const Box& b);

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};
struct BoxHash {
  std::size_t operator()(const Box& b) const noexcept;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

/// All boxes whose coordinates are drawn from the corner values of `b`,
/// including `b`; there are 3^{dimension(b)} of them.
std::vector<Box> cornerSubboxes(const Box& b);

/// The codimension-one corner faces of a non-degenerate box.
std::vector<Box> facets(const Box& b);

/// Join of two adjacent boxes of equal dimension, or nothing when the
/// pair is not adjacent. Identical boxes are adjacent to themselves.
std::optional<Box> tryJoin(const Box& first, const Box& second);

/// Per-direction choices of (lo, hi) coordinate pairs.
using IntervalChoices = std::vector<std::vector<std::pair<Coord, Coord>>>;

/// Every box obtained by picking one pair per direction.
std::vector<Box> productBoxes(const IntervalChoices& choices);

/// All pairs (u, v) with u <= v drawn from a sorted value list.
std::vector<std::pair<Coord, Coord>> orderedPairs(const std::vector<Coord>& values);

}  // namespace pastebox
