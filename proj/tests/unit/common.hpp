#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "pastebox/fixtures.hpp"
#include "pastebox/shape.hpp"

namespace pastebox::test {

inline Box B(std::initializer_list<Coord> lo, std::initializer_list<Coord> hi) { return Box(Vertex(lo), Vertex(hi)); }
inline Box P(std::initializer_list<Coord> v) { return Box::point(Vertex(v)); }

// Closure of one or two random boxes in [0,n]^dim.
inline Shape randomSmallShape(std::mt19937_64& rng, int dim, Coord n) {
  std::uniform_int_distribution<Coord> coord(0, n);
  std::vector<Box> gens;
  const int count = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int i = 0; i < count; ++i) {
    Vertex lo(dim), hi(dim);
    for (int a = 0; a < dim; ++a) {
      Coord x = coord(rng), y = coord(rng);
      lo[a] = std::min(x, y);
      hi[a] = std::max(x, y);
    }
    gens.emplace_back(lo, hi);
  }
  return close(dim, gens);
}

}  // namespace pastebox::test
