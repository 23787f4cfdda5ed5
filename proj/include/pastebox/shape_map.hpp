#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pastebox/shape.hpp"

namespace pastebox {

using VertexMap = std::unordered_map<Vertex, Vertex, VertexHash>;

/// A vertex map between shapes of equal dimension. Validity is checked by
/// validateShapeMap, not on construction.
struct ShapeMap {
  Shape source;
  Shape target;
  VertexMap vertexMap;

  /// Throws when `v` has no image.
  Vertex operator()(const Vertex& v) const;
  Box apply(const Box& b) const;
};

struct MapReport {
  bool valid = true;
  std::string violation;
};

/// Checks that boxes go to boxes of the target and degenerate directions
/// stay degenerate. Throws when the vertex map is not total on the source.
MapReport validateShapeMap(const ShapeMap& m);

bool isInjective(const ShapeMap& m);
ShapeMap identityMap(const Shape& shape);

/// Boxes (f(x), f(y)) for every source box; not closed in general.
std::vector<Box> imageBoxes(const ShapeMap& m);

/// A d-tuple of weakly increasing sequences; maps[a] has n_a + 1 entries.
struct Simplex {
  std::vector<std::vector<Coord>> maps;

  int dim() const { return static_cast<int>(maps.size()); }
  std::vector<int> level() const;
  /// Sorted distinct values of each sequence.
  std::vector<std::vector<Coord>> images() const;
  Vertex at(const Vertex& x) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

std::string toString(const Simplex& s);

/// Throws unless every sequence is weakly increasing.
void checkMonotone(const Simplex& s);

/// Every box whose coordinates in each direction are drawn from the image of
/// that direction's sequence lies in `shape`.
bool satisfiesBoxCondition(const Shape& shape, const Simplex& s);
/// Same test on per-direction sorted value sets.
bool imagesSatisfyBoxCondition(const Shape& shape, const std::vector<std::vector<Coord>>& images);

/// The coordinatewise vertex map x -> (s_a(x_a)) from `source`, whose
/// vertices must lie in the domain of the sequences.
ShapeMap productMap(const Shape& source, const Shape& target, const Simplex& s);

/// Reads the tuple (f_a(i) = f(i e_a)_a) off a map out of a standard grid
/// with extents `level`, and checks that f is the coordinatewise map it
/// determines. Empty when f is not of that form.
std::optional<Simplex> tupleOf(const ShapeMap& f, const std::vector<int>& level);

}  // namespace pastebox
