#pragma once

#include <cstdint>
#include <string>

#include "pastebox/structure.hpp"

namespace pastebox {

struct GeneratedShape {
  Shape shape;
  Decomposition decomposition;
};

/// Builds a random 2-dimensional composable shape together with its
/// decomposition. A random tree of windows is grown from the root: every
/// internal node splits its window along random interior lines, and the
/// shape is the closure of the leaf cells. `budget` caps the number of
/// internal nodes; budget 1 yields a single closed grid. Deterministic per
/// seed.
GeneratedShape randomComposable(std::uint64_t seed, int budget);

/// SVG drawing: vertex (x, y) at pixel (80x, 80y) plus a margin, one arrow
/// per join-irreducible 1-box and one translucent rectangle per
/// non-degenerate 2-box. Shapes of dimension 3 are drawn as one sheet per
/// value of the third coordinate. Throws for dimension above 3.
std::string renderSvg(const Shape& shape);

}  // namespace pastebox
