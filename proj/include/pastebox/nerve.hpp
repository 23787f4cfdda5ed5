#pragma once

#include <map>
#include <memory>
#include <vector>

#include "pastebox/grid.hpp"

namespace pastebox {

/// The simplices of one level [I]_{n_1,...,n_d}, sorted.
struct NerveLevel {
  std::vector<int> level;
  std::vector<Simplex> simplices;

  std::size_t size() const { return simplices.size(); }
  bool contains(const Simplex& s) const;
};

/// Enumerates image sets satisfying the box condition in parallel, then
/// expands each to its monotone surjections.
NerveLevel nerveLevel(const Shape& shape, const std::vector<int>& level);

/// Reference enumeration: every tuple of monotone sequences over the
/// coordinate values, filtered by the box condition. Single-threaded.
NerveLevel nerveLevelSerial(const Shape& shape, const std::vector<int>& level);

/// Number of directions whose sequence is not constant.
int simplexDimension(const Simplex& s);

/// Simplices with every sequence injective.
std::size_t nonDegenerateCount(const NerveLevel& level);

/// Per-shape memo of nerve levels.
class NerveCache {
 public:
  explicit NerveCache(Shape shape) : shape_(std::move(shape)) {}
  const Shape& shape() const { return shape_; }
  const NerveLevel& level(const std::vector<int>& n);

 private:
  Shape shape_;
  std::map<std::vector<int>, std::unique_ptr<NerveLevel>> levels_;
};

/// Segal map in direction `a` from `full` (level n) to the fibre product of
/// `unit` (level n with n_a = 1): a bijection check by explicit gluing.
bool segalBijection(const NerveLevel& full, const NerveLevel& unit, int a);

/// Segal maps in every direction with n_a >= 2 are bijections.
bool segalCheck(const Shape& shape, const std::vector<int>& level);
bool segalCheck(NerveCache& cache, const std::vector<int>& level);

NerveLevel spineLevel(const Shape& shape, const std::vector<int>& level);
std::vector<Simplex> spineGapReport(const Shape& shape, const std::vector<int>& level);

/// Post-composition of a simplex of the source with a coordinatewise map.
Simplex compose(const Simplex& outer, const Simplex& inner);

/// At each level, pairs of simplices of the two sources that agree in the
/// target come from exactly one simplex of `apex`, and every apex simplex
/// gives such a pair.
bool pullbackNerveCheck(const GridPullback& square, const std::vector<std::vector<int>>& levels);
bool pullbackLevelCheck(const GridPullback& square, const NerveLevel& apex, const NerveLevel& fromF,
                        const NerveLevel& fromG);

}  // namespace pastebox
