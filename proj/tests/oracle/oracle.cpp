#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pastebox::oracle {

namespace {

bool within(const Box& inner, const Box& outer) {
  for (int a = 0; a < inner.ambient(); ++a)
    if (inner.lo[a] < outer.lo[a] || inner.hi[a] > outer.hi[a]) return false;
  return true;
}

int strictCount(const Box& b) {
  int n = 0;
  for (int a = 0; a < b.ambient(); ++a) n += b.lo[a] < b.hi[a];
  return n;
}

// All boxes with x_a, y_a in {lo_a, hi_a}.
std::vector<Box> faces(const Box& b) {
  std::vector<Box> out;
  const int d = b.ambient();
  std::vector<int> choice(static_cast<std::size_t>(d), 0);
  while (true) {
    Vertex x(d), y(d);
    bool ok = true;
    for (int a = 0; a < d; ++a) {
      const int c = choice[static_cast<std::size_t>(a)];
      x[a] = c == 1 ? b.hi[a] : b.lo[a];
      y[a] = c == 0 ? b.lo[a] : b.hi[a];
      ok = ok && x[a] <= y[a];
    }
    if (ok) out.emplace_back(x, y);
    int a = 0;
    while (a < d && ++choice[static_cast<std::size_t>(a)] == 3) choice[static_cast<std::size_t>(a++)] = 0;
    if (a == d) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent(const Box& p, const Box& q) {
  const int d = p.ambient();
  if (strictCount(p) == 0) return false;
  int stacking = 0;
  for (int a = 0; a < d; ++a) {
    const bool sp = p.lo[a] < p.hi[a];
    const bool sq = q.lo[a] < q.hi[a];
    if (sp != sq) return false;
    if (!sp) {
      if (p.lo[a] != q.lo[a]) return false;
    } else if (p.lo[a] == q.lo[a] && p.hi[a] == q.hi[a]) {
    } else if (p.hi[a] == q.lo[a]) {
      ++stacking;
    } else {
      return false;
    }
  }
  return stacking <= 1;
}

std::vector<std::vector<Coord>> usedValues(const Shape& s) {
  std::vector<std::set<Coord>> v(static_cast<std::size_t>(s.dim()));
  for (const Box& b : s.boxes())
    for (int a = 0; a < s.dim(); ++a) v[static_cast<std::size_t>(a)].insert(b.lo[a]);
  std::vector<std::vector<Coord>> out;
  for (const auto& x : v) out.emplace_back(x.begin(), x.end());
  return out;
}

void forEachTuple(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t s : sizes)
    if (s == 0) return;
  while (true) {
    fn(idx);
    std::size_t a = 0;
    while (a < sizes.size() && ++idx[a] == sizes[a]) idx[a++] = 0;
    if (a == sizes.size()) return;
  }
}

bool latticeInside(const Shape& s, const std::vector<std::vector<Coord>>& sets) {
  const int d = s.dim();
  std::vector<std::size_t> sizes;
  for (const auto& v : sets) sizes.push_back(v.size() * v.size());
  bool ok = true;
  forEachTuple(sizes, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    Vertex x(d), y(d);
    for (int a = 0; a < d; ++a) {
      const auto& v = sets[static_cast<std::size_t>(a)];
      x[a] = v[idx[static_cast<std::size_t>(a)] / v.size()];
      y[a] = v[idx[static_cast<std::size_t>(a)] % v.size()];
      if (x[a] > y[a]) return;
    }
    ok = s.contains(Box(x, y));
  });
  return ok;
}

std::vector<std::vector<Coord>> subsetsOfSizeAtLeast(const std::vector<Coord>& values, std::size_t minSize) {
  std::vector<std::vector<Coord>> out;
  const std::size_t n = values.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Coord> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) s.push_back(values[i]);
    if (s.size() >= minSize) out.push_back(std::move(s));
  }
  return out;
}

Shape restrictTo(const Shape& s, const Box& w) {
  std::vector<Box> kept;
  for (const Box& b : s.boxes())
    if (within(b, w)) kept.push_back(b);
  return Shape::fromClosedBoxesUnchecked(s.dim(), kept);
}

}  // namespace

std::set<Box> naiveClose(int dim, const std::vector<Box>& generators) {
  std::set<Box> s(generators.begin(), generators.end());
  for (const Box& b : s)
    if (b.ambient() != dim) throw PasteboxError("oracle: dimension mismatch");
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Box> snapshot(s.begin(), s.end());
    for (const Box& b : snapshot)
      for (const Box& f : faces(b)) changed |= s.insert(f).second;
    for (const Box& p : snapshot)
      for (const Box& q : snapshot)
        if (adjacent(p, q)) changed |= s.insert(Box(p.lo, q.hi)).second;
  }
  return s;
}

std::uint64_t monotoneMapCount(int n, int m) {
  std::uint64_t count = 0;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(m + 1));
  forEachTuple(sizes, [&](const std::vector<std::size_t>& seq) { count += std::is_sorted(seq.begin(), seq.end()); });
  return count;
}

std::uint64_t literalMapCount(const Shape& source, const Shape& target) {
  const auto vs = source.vertices();
  const auto vt = target.vertices();
  std::vector<std::size_t> sizes(vs.size(), vt.size());
  std::uint64_t count = 0;
  forEachTuple(sizes, [&](const std::vector<std::size_t>& idx) {
    auto image = [&](const Vertex& v) {
      const auto it = std::lower_bound(vs.begin(), vs.end(), v);
      return vt[idx[static_cast<std::size_t>(it - vs.begin())]];
    };
    for (const Box& b : source.boxes()) {
      const Vertex x = image(b.lo);
      const Vertex y = image(b.hi);
      if (!x.leq(y) || !target.contains(Box(x, y))) return;
      for (int a = 0; a < source.dim(); ++a)
        if (b.lo[a] == b.hi[a] && x[a] != y[a]) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t nerveLevelCount(const Shape& shape, const std::vector<int>& level) {
  const int d = shape.dim();
  const auto values = usedValues(shape);
  std::vector<std::vector<std::vector<Coord>>> sequences;
  for (int a = 0; a < d; ++a) {
    const auto& v = values[static_cast<std::size_t>(a)];
    std::vector<std::vector<Coord>> seqs;
    std::vector<std::size_t> sizes(static_cast<std::size_t>(level[static_cast<std::size_t>(a)] + 1), v.size());
    forEachTuple(sizes, [&](const std::vector<std::size_t>& idx) {
      if (!std::is_sorted(idx.begin(), idx.end())) return;
      std::vector<Coord> s;
      for (std::size_t i : idx) s.push_back(v[i]);
      seqs.push_back(std::move(s));
    });
    sequences.push_back(std::move(seqs));
  }
  std::vector<std::size_t> sizes;
  for (const auto& s : sequences) sizes.push_back(s.size());
  std::uint64_t count = 0;
  forEachTuple(sizes, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Coord>> images;
    for (int a = 0; a < d; ++a) {
      std::vector<Coord> im = sequences[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]];
      im.erase(std::unique(im.begin(), im.end()), im.end());
      images.push_back(std::move(im));
    }
    count += latticeInside(shape, images);
  });
  return count;
}

std::vector<Box> entireWindows(const Shape& shape, int k) {
  std::vector<Box> out;
  const auto vs = shape.vertices();
  for (const Vertex& lo : vs)
    for (const Vertex& hi : vs) {
      if (!lo.leq(hi)) continue;
      const Box w(lo, hi);
      if (strictCount(w) != k) continue;
      bool ok = true;
      for (const Box& f : faces(w))
        if (f != w && !shape.contains(f)) ok = false;
      if (ok) out.push_back(w);
    }
  return out;
}

std::vector<Box> vertebraWindows(const Shape& shape, int k) {
  const auto ws = entireWindows(shape, k);
  std::vector<Box> out;
  for (const Box& w : ws) {
    bool minimal = true;
    for (const Box& u : ws) {
      if (u == w || !within(u, w)) continue;
      bool sameStrict = true;
      for (int a = 0; a < shape.dim(); ++a) sameStrict = sameStrict && (u.lo[a] < u.hi[a]) == (w.lo[a] < w.hi[a]);
      if (sameStrict) minimal = false;
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

std::uint64_t closedSubgridCount(const Shape& shape) {
  const auto values = usedValues(shape);
  std::vector<std::vector<std::vector<Coord>>> options;
  for (const auto& v : values) options.push_back(subsetsOfSizeAtLeast(v, 2));
  std::vector<std::size_t> sizes;
  for (const auto& o : options) sizes.push_back(o.size());
  std::uint64_t count = 0;
  forEachTuple(sizes, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Coord>> sets;
    for (std::size_t a = 0; a < idx.size(); ++a) sets.push_back(options[a][idx[a]]);
    count += latticeInside(shape, sets);
  });
  return count;
}

CoveringVerdict covering(const Shape& shape, const std::vector<Shape>& parts) {
  CoveringVerdict v;
  for (const Shape& p : parts)
    for (const Box& w : p.boxes())
      if (!(restrictTo(p, w) == restrictTo(shape, w))) v.condition1 = false;
  for (int k = 0; k <= shape.dim(); ++k)
    for (const Box& w : vertebraWindows(shape, k)) {
      if (!shape.contains(w)) continue;
      const Shape vert = restrictTo(shape, w);
      bool found = false;
      for (const Shape& p : parts) found = found || vert.isSubshapeOf(p);
      if (!found) v.condition2 = false;
    }
  return v;
}

}  // namespace pastebox::oracle

namespace pastebox::oracle {

namespace {

// Boxes ordered so that every proper face and every pair of join parts of a
// box precede it, with the faces and part pairs as indices.
struct DecisionOrder {
  std::vector<Box> boxes;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parts;

  explicit DecisionOrder(const Shape& shape) : boxes(shape.boxes().begin(), shape.boxes().end()) {
    auto extent = [](const Box& b) {
      Coord e = 0;
      for (int a = 0; a < b.ambient(); ++a) e += b.hi[a] - b.lo[a];
      return e;
    };
    std::sort(boxes.begin(), boxes.end(), [&](const Box& x, const Box& y) {
      if (strictCount(x) != strictCount(y)) return strictCount(x) < strictCount(y);
      if (extent(x) != extent(y)) return extent(x) < extent(y);
      return x < y;
    });
    std::map<Box, std::size_t> index;
    for (std::size_t i = 0; i < boxes.size(); ++i) index[boxes[i]] = i;
    faces.resize(boxes.size());
    parts.resize(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (const Box& f : oracle::faces(boxes[i]))
        if (f != boxes[i]) faces[i].push_back(index.at(f));
      for (std::size_t p = 0; p < i; ++p)
        for (std::size_t q = 0; q < i; ++q)
          if (adjacent(boxes[p], boxes[q]) && boxes[p].lo == boxes[i].lo && boxes[q].hi == boxes[i].hi &&
              boxes[p] != boxes[q])
            parts[i].emplace_back(p, q);
    }
  }

  // 0: must exclude, 1: must include, 2: free, 3: contradiction.
  int status(std::size_t i, const std::vector<char>& in) const {
    bool facesIn = true;
    for (std::size_t f : faces[i]) facesIn = facesIn && in[f];
    bool forced = false;
    for (auto [p, q] : parts[i]) forced = forced || (in[p] && in[q]);
    if (!facesIn) return forced ? 3 : 0;
    return forced ? 1 : 2;
  }

  Shape build(const std::vector<char>& in, int dim) const {
    std::vector<Box> chosen;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      if (in[i]) chosen.push_back(boxes[i]);
    return Shape::fromClosedBoxes(dim, chosen);
  }
};

}  // namespace

std::uint64_t forEachSubshape(const Shape& shape, std::size_t maxBoxes, const std::function<void(const Shape&)>& fn,
                              std::uint64_t limit) {
  const DecisionOrder order(shape);
  std::vector<char> in(order.boxes.size(), 0);
  std::uint64_t visited = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t size) {
    if (size > maxBoxes || visited >= limit) return;
    if (i == order.boxes.size()) {
      ++visited;
      fn(order.build(in, shape.dim()));
      return;
    }
    const int st = order.status(i, in);
    if (st == 3) return;
    if (st != 1) rec(i + 1, size);
    if (st != 0) {
      in[i] = 1;
      rec(i + 1, size + 1);
      in[i] = 0;
    }
  };
  rec(0, 0);
  return visited;
}

std::vector<Shape> randomSubshapes(const Shape& shape, std::size_t maxBoxes, std::size_t count, std::mt19937_64& rng) {
  const DecisionOrder order(shape);
  std::vector<Shape> out;
  while (out.size() < count) {
    const double p = std::uniform_real_distribution<double>(0.2, 0.95)(rng);
    std::vector<char> in(order.boxes.size(), 0);
    std::size_t size = 0;
    bool ok = true;
    for (std::size_t i = 0; ok && i < order.boxes.size(); ++i) {
      const int st = order.status(i, in);
      if (st == 3) ok = false;
      else if (st == 1 || (st == 2 && size < maxBoxes && std::bernoulli_distribution(p)(rng)))
        in[i] = 1;
      size += in[i];
    }
    if (ok && size <= maxBoxes) out.push_back(order.build(in, shape.dim()));
  }
  return out;
}

}  // namespace pastebox::oracle
