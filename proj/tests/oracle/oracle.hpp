#pragma once

// Brute-force reference computations used to establish expected values.
// Everything here is written directly from the definitions and shares no
// code with the library beyond the Box/Vertex/Shape value types.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pastebox/shape.hpp"

namespace pastebox::oracle {

/// Closure by repeated full passes over all faces and all pairs.
std::set<Box> naiveClose(int dim, const std::vector<Box>& generators);

/// Number of weakly increasing maps [n] -> [m], by enumerating all of
/// {0..m}^{n+1}.
std::uint64_t monotoneMapCount(int n, int m);

/// Number of vertex maps V(source) -> V(target) that are maps of pasting
/// shapes, checked box by box. Exponential; keep sources tiny.
std::uint64_t literalMapCount(const Shape& source, const Shape& target);

/// Size of a nerve level: tuples of monotone sequences over the used
/// coordinate values whose every image box is in the shape.
std::uint64_t nerveLevelCount(const Shape& shape, const std::vector<int>& level);

/// Windows (lo, hi) of vertices strict in exactly k directions whose
/// proper corner faces are all in the shape.
std::vector<Box> entireWindows(const Shape& shape, int k);

/// Entire windows with no other entire window of the same strict set
/// nested inside.
std::vector<Box> vertebraWindows(const Shape& shape, int k);

/// Per-direction line sets (at least two lines each) whose full lattice of
/// boxes lies in the shape.
std::uint64_t closedSubgridCount(const Shape& shape);

/// Calls `fn` on every subshape of `shape` with at most `maxBoxes` boxes,
/// by deciding boxes in an order where faces and join parts come first.
/// Stops after `limit` subshapes. Returns the number visited.
std::uint64_t forEachSubshape(const Shape& shape, std::size_t maxBoxes, const std::function<void(const Shape&)>& fn,
                              std::uint64_t limit = UINT64_MAX);

/// Random subshapes with at most `maxBoxes` boxes, from the same decision
/// order with a per-sample inclusion probability.
std::vector<Shape> randomSubshapes(const Shape& shape, std::size_t maxBoxes, std::size_t count, std::mt19937_64& rng);

struct CoveringVerdict {
  bool condition1 = true;
  bool condition2 = true;
  bool holds() const { return condition1 && condition2; }
};

/// (1) every box w of a part has part|_w = I|_w; (2) every closed
/// k-vertebra of I lies in some part.
CoveringVerdict covering(const Shape& shape, const std::vector<Shape>& parts);

}  // namespace pastebox::oracle
