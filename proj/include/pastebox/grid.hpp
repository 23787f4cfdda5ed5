#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pastebox/shape_map.hpp"

namespace pastebox {

/// All boxes (x, y) with 0 <= x_a <= y_a <= n_a.
Shape standardGrid(const std::vector<int>& extents);

/// Boxes of dimension at most `maxDim` whose coordinates lie on the given
/// per-direction lines.
std::vector<Box> latticeBoxes(const std::vector<std::vector<Coord>>& lines, int maxDim);

/// Per-direction grid lines (the images of the witnessing map) and whether
/// the top boxes are present.
struct GridWitness {
  std::vector<std::vector<Coord>> lines;
  bool closed = false;

  std::vector<int> extents() const;
  Box corners() const;
  bool isCell() const;
  bool operator==(const GridWitness&) const = default;
};

/// The map from the standard grid (truncated below the top dimension when
/// open) that the witness describes.
ShapeMap witnessMap(const Shape& grid, const GridWitness& w);

/// Injective and hitting every non-degenerate top box of the target.
/// Throws on an invalid map.
bool isDShaping(const ShapeMap& m);

/// The unique witness when `shape` is an open or closed grid.
std::optional<GridWitness> detectGrid(const Shape& shape);

/// Boxes pinned to a corner value in some direction.
Shape gridBoundary(const Shape& grid, const GridWitness& w);

struct GridCell {
  Box window;
  Shape cell;
};

/// One cell per tuple of consecutive line pairs, in lexicographic order.
std::vector<GridCell> gridCells(const Shape& grid, const GridWitness& w);

/// An injective cell inside a standard grid: extents n_a and window bounds
/// 0 <= i_a(0) < i_a(1) <= n_a.
struct BoxdotSpec {
  std::vector<int> extents;
  std::vector<std::pair<Coord, Coord>> window;

  void validate() const;
  Box windowBox() const;
};

/// Membership in the complement-of-window shape: some direction has
/// y_a <= i_a(0) or x_a >= i_a(1).
bool inBoxdot(const BoxdotSpec& spec, const Box& b);
/// Membership in the lower (y_a <= i_a(0)) or upper (x_a >= i_a(1)) half.
bool inHalf(const BoxdotSpec& spec, bool upper, int a, const Box& b);

struct BoxdotFamily {
  Shape grid;
  Shape boxdot;
  Shape window;
  std::vector<Shape> lower;
  std::vector<Shape> upper;
};

BoxdotFamily boxdotFamily(const BoxdotSpec& spec);

struct GridPullback {
  std::vector<int> level;
  /// Inclusions of the apex into the sources of f and g.
  ShapeMap toF;
  ShapeMap toG;
  Simplex tupleF;
  Simplex tupleG;
  std::vector<std::vector<Coord>> intersectedImages;
};

/// Pullback of two injective maps out of standard grids, formed by
/// intersecting images direction by direction. Empty when some direction
/// has disjoint images. Throws when a map is not injective or not out of a
/// standard grid.
std::optional<GridPullback> gridPullback(const ShapeMap& f, const ShapeMap& g);

/// Extents of a standard grid source, read off its bounding box.
std::vector<int> standardExtents(const Shape& source);

}  // namespace pastebox
