#include "pastebox/nerve.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pastebox/structure.hpp"

namespace pastebox {

bool NerveLevel::contains(const Simplex& s) const { return std::binary_search(simplices.begin(), simplices.end(), s); }

namespace {

void checkLevel(const Shape& shape, const std::vector<int>& level) {
  if (static_cast<int>(level.size()) != shape.dim()) throw PasteboxError("nerve level has wrong length");
  for (int n : level)
    if (n < 0) throw PasteboxError("negative nerve level");
}

/// Nonempty subsets of `values` with at most `maxSize` elements.
std::vector<std::vector<Coord>> smallSubsets(const std::vector<Coord>& values, std::size_t maxSize) {
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == maxSize) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      current.push_back(values[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Weakly increasing sequences of length n+1 with image exactly `image`.
std::vector<std::vector<Coord>> surjections(const std::vector<Coord>& image, int n) {
  std::vector<std::vector<Coord>> out;
  const int r = static_cast<int>(image.size());
  if (r == 0 || r > n + 1) return out;
  // Choose the r-1 steps (out of n) at which the value moves up.
  std::vector<int> steps;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(steps.size()) == r - 1) {
      std::vector<Coord> seq;
      std::size_t pos = 0;
      seq.push_back(image[0]);
      for (int i = 1; i <= n; ++i) {
        if (pos < steps.size() && steps[pos] == i) ++pos;
        seq.push_back(image[pos]);
      }
      out.push_back(std::move(seq));
      return;
    }
    for (int i = from; i <= n; ++i) {
      steps.push_back(i);
      self(self, i + 1);
      steps.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Weakly increasing sequences of length n+1 over `values`.
std::vector<std::vector<Coord>> monotoneSequences(const std::vector<Coord>& values, int n) {
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == n + 1) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
      current.push_back(values[i]);
      self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

template <class F>
void forEachProduct(const std::vector<std::size_t>& sizes, F&& body) {
  for (std::size_t s : sizes)
    if (s == 0) return;
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    body(idx);
    int a = static_cast<int>(sizes.size()) - 1;
    for (; a >= 0; --a) {
      auto& i = idx[static_cast<std::size_t>(a)];
      if (++i < sizes[static_cast<std::size_t>(a)]) break;
      i = 0;
    }
    if (a < 0) return;
  }
}

}  // namespace

NerveLevel nerveLevel(const Shape& shape, const std::vector<int>& level) {
  checkLevel(shape, level);
  NerveLevel out{level, {}};
  if (shape.empty()) return out;
  const int d = shape.dim();
  const auto values = shape.coordinateValues();
  std::vector<std::vector<std::vector<Coord>>> subsets;
  std::vector<std::size_t> radix;
  for (int a = 0; a < d; ++a) {
    subsets.push_back(smallSubsets(values[static_cast<std::size_t>(a)], static_cast<std::size_t>(level[static_cast<std::size_t>(a)]) + 1));
    radix.push_back(subsets.back().size());
  }
  std::size_t total = 1;
  for (std::size_t r : radix) total *= r;

  std::vector<std::vector<Simplex>> found(total);
  const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long flat = 0; flat < count; ++flat) {
    std::size_t rest = static_cast<std::size_t>(flat);
    std::vector<std::vector<Coord>> images(static_cast<std::size_t>(d));
    for (int a = d - 1; a >= 0; --a) {
      const std::size_t r = radix[static_cast<std::size_t>(a)];
      images[static_cast<std::size_t>(a)] = subsets[static_cast<std::size_t>(a)][rest % r];
      rest /= r;
    }
    if (!imagesSatisfyBoxCondition(shape, images)) continue;
    std::vector<std::vector<std::vector<Coord>>> seqs;
    std::vector<std::size_t> sizes;
    for (int a = 0; a < d; ++a) {
      seqs.push_back(surjections(images[static_cast<std::size_t>(a)], level[static_cast<std::size_t>(a)]));
      sizes.push_back(seqs.back().size());
    }
    auto& bucket = found[static_cast<std::size_t>(flat)];
    forEachProduct(sizes, [&](const std::vector<std::size_t>& idx) {
      Simplex s;
      for (int a = 0; a < d; ++a) s.maps.push_back(seqs[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]]);
      bucket.push_back(std::move(s));
    });
  }
  for (auto& bucket : found)
    for (auto& s : bucket) out.simplices.push_back(std::move(s));
  std::sort(out.simplices.begin(), out.simplices.end());
  return out;
}

NerveLevel nerveLevelSerial(const Shape& shape, const std::vector<int>& level) {
  checkLevel(shape, level);
  NerveLevel out{level, {}};
  if (shape.empty()) return out;
  const int d = shape.dim();
  const auto values = shape.coordinateValues();
  std::vector<std::vector<std::vector<Coord>>> seqs;
  std::vector<std::size_t> sizes;
  for (int a = 0; a < d; ++a) {
    seqs.push_back(monotoneSequences(values[static_cast<std::size_t>(a)], level[static_cast<std::size_t>(a)]));
    sizes.push_back(seqs.back().size());
  }
  forEachProduct(sizes, [&](const std::vector<std::size_t>& idx) {
    Simplex s;
    for (int a = 0; a < d; ++a) s.maps.push_back(seqs[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]]);
    if (satisfiesBoxCondition(shape, s)) out.simplices.push_back(std::move(s));
  });
  std::sort(out.simplices.begin(), out.simplices.end());
  return out;
}

int simplexDimension(const Simplex& s) {
  int k = 0;
  for (const auto& m : s.maps) k += m.front() != m.back() ? 1 : 0;
  return k;
}

std::size_t nonDegenerateCount(const NerveLevel& level) {
  return static_cast<std::size_t>(std::count_if(level.simplices.begin(), level.simplices.end(), [](const Simplex& s) {
    for (const auto& m : s.maps)
      if (std::adjacent_find(m.begin(), m.end()) != m.end()) return false;
    return true;
  }));
}

const NerveLevel& NerveCache::level(const std::vector<int>& n) {
  auto& slot = levels_[n];
  if (!slot) slot = std::make_unique<NerveLevel>(nerveLevel(shape_, n));
  return *slot;
}

bool segalBijection(const NerveLevel& full, const NerveLevel& unit, int a) {
  const auto ua = static_cast<std::size_t>(a);
  const int n = full.level[ua];
  // Functoriality: restrictions of full simplices are unit simplices.
  for (const Simplex& s : full.simplices) {
    for (int j = 0; j < n; ++j) {
      Simplex piece = s;
      piece.maps[ua] = {s.maps[ua][static_cast<std::size_t>(j)], s.maps[ua][static_cast<std::size_t>(j) + 1]};
      if (!unit.contains(piece)) return false;
    }
  }
  // Glue every compatible chain and look it up.
  std::map<std::pair<std::vector<std::vector<Coord>>, Coord>, std::vector<const Simplex*>> byStart;
  for (const Simplex& t : unit.simplices) {
    auto others = t.maps;
    others[ua].clear();
    byStart[{others, t.maps[ua][0]}].push_back(&t);
  }
  std::size_t glued = 0;
  bool ok = true;
  for (const Simplex& first : unit.simplices) {
    auto others = first.maps;
    others[ua].clear();
    std::vector<Coord> seq = first.maps[ua];
    auto rec = [&](auto&& self) -> void {
      if (!ok) return;
      if (static_cast<int>(seq.size()) == n + 1) {
        Simplex s{others};
        s.maps[ua] = seq;
        if (!full.contains(s)) ok = false;
        ++glued;
        return;
      }
      auto it = byStart.find({others, seq.back()});
      if (it == byStart.end()) return;
      for (const Simplex* next : it->second) {
        seq.push_back(next->maps[ua][1]);
        self(self);
        seq.pop_back();
      }
    };
    rec(rec);
    if (!ok) return false;
  }
  return glued == full.size();
}

bool segalCheck(NerveCache& cache, const std::vector<int>& level) {
  checkLevel(cache.shape(), level);
  const NerveLevel& full = cache.level(level);
  for (int a = 0; a < static_cast<int>(level.size()); ++a) {
    if (level[static_cast<std::size_t>(a)] < 2) continue;
    auto unitLevel = level;
    unitLevel[static_cast<std::size_t>(a)] = 1;
    if (!segalBijection(full, cache.level(unitLevel), a)) return false;
  }
  return true;
}

bool segalCheck(const Shape& shape, const std::vector<int>& level) {
  NerveCache cache(shape);
  return segalCheck(cache, level);
}

NerveLevel spineLevel(const Shape& shape, const std::vector<int>& level) {
  checkLevel(shape, level);
  std::set<Simplex> all;
  for (const auto& v : enumerateVertebrae(shape, shape.dim()))
    for (auto& s : nerveLevel(v.shape, level).simplices) all.insert(std::move(s));
  return {level, {all.begin(), all.end()}};
}

std::vector<Simplex> spineGapReport(const Shape& shape, const std::vector<int>& level) {
  const NerveLevel full = nerveLevel(shape, level);
  const NerveLevel spine = spineLevel(shape, level);
  std::vector<Simplex> out;
  for (const Simplex& s : full.simplices)
    if (simplexDimension(s) >= shape.dim() && !spine.contains(s)) out.push_back(s);
  return out;
}

Simplex compose(const Simplex& outer, const Simplex& inner) {
  if (outer.dim() != inner.dim()) throw PasteboxError("compose: dimension mismatch");
  Simplex out;
  for (int a = 0; a < outer.dim(); ++a) {
    const auto& f = outer.maps[static_cast<std::size_t>(a)];
    std::vector<Coord> seq;
    for (Coord i : inner.maps[static_cast<std::size_t>(a)]) {
      if (i < 0 || static_cast<std::size_t>(i) >= f.size()) throw PasteboxError("compose: index out of range");
      seq.push_back(f[static_cast<std::size_t>(i)]);
    }
    out.maps.push_back(std::move(seq));
  }
  return out;
}

namespace {

Simplex tupleOfProduct(const ShapeMap& leg, const std::vector<int>& apexExtents) {
  auto t = tupleOf(leg, apexExtents);
  if (!t) throw PasteboxError("pullback leg is not coordinatewise");
  return *t;
}

}  // namespace

bool pullbackLevelCheck(const GridPullback& square, const NerveLevel& apex, const NerveLevel& fromF,
                        const NerveLevel& fromG) {
  const Simplex legF = tupleOfProduct(square.toF, square.level);
  const Simplex legG = tupleOfProduct(square.toG, square.level);
  std::map<std::pair<Simplex, Simplex>, int> hits;
  for (const Simplex& u : apex.simplices) {
    const Simplex s = compose(legF, u);
    const Simplex t = compose(legG, u);
    if (!fromF.contains(s) || !fromG.contains(t)) return false;
    if (!(compose(square.tupleF, s) == compose(square.tupleG, t))) return false;
    ++hits[{s, t}];
  }
  std::map<Simplex, std::vector<const Simplex*>> byImage;
  for (const Simplex& t : fromG.simplices) byImage[compose(square.tupleG, t)].push_back(&t);
  for (const Simplex& s : fromF.simplices) {
    auto it = byImage.find(compose(square.tupleF, s));
    if (it == byImage.end()) continue;
    for (const Simplex* t : it->second) {
      auto h = hits.find({s, *t});
      if (h == hits.end() || h->second != 1) return false;
    }
  }
  return true;
}

bool pullbackNerveCheck(const GridPullback& square, const std::vector<std::vector<int>>& levels) {
  for (const auto& n : levels) {
    const NerveLevel apex = nerveLevel(square.toF.source, n);
    const NerveLevel fromF = nerveLevel(square.toF.target, n);
    const NerveLevel fromG = nerveLevel(square.toG.target, n);
    if (!pullbackLevelCheck(square, apex, fromF, fromG)) return false;
  }
  return true;
}

}  // namespace pastebox
