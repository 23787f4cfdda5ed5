#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pastebox/grid.hpp"

namespace pastebox {

struct EntireWitness {
  Box window;
  int k = 0;
  bool closed = false;
  bool open = false;
};

struct EntireSubshape {
  Shape shape;
  EntireWitness witness;
};

/// Restriction of `shape` to `window`, provided every proper corner face of
/// the window lies in `shape`.
std::optional<EntireSubshape> entireSubshape(const Shape& shape, const Box& window);

/// Windows (alpha, omega) with alpha, omega vertices of `shape`, strict in
/// exactly k directions, whose proper faces all lie in `shape`.
std::vector<Box> entireWindows(const Shape& shape, int k);

/// Minimal k-entire subshapes, ordered by window.
std::vector<EntireSubshape> enumerateVertebrae(const Shape& shape, int k);

/// k-entire subshapes whose window is a box of `shape`.
std::vector<EntireSubshape> closedEntireSubshapes(const Shape& shape, int k);

/// Whether no other k-window of `shape` is nested strictly inside `window`.
bool isVertebraWindow(const Shape& shape, const Box& window);

/// The k-dimensional shape obtained by dropping the degenerate directions of
/// the window.
Shape viewInOwnDimension(const EntireSubshape& e);

/// Boxes pinned to a coordinate of the bounding box in some direction.
Shape shapeBoundary(const Shape& shape);

enum class Verdict { Yes, No, Inconclusive };
const char* toString(Verdict v);

/// Default search budget, overridable with PASTEBOX_BUDGET.
std::uint64_t defaultBudget();

struct FiltrationStep {
  Shape grid;
  GridWitness witness;
};

/// I_0 = base, I_k = I_{k-1} united with steps[k-1].grid.
struct Filtration {
  Shape base;
  GridWitness baseWitness;
  std::vector<FiltrationStep> steps;
};

/// A leaf holds a cell. A node holds an open base grid and one piece per
/// base cell.
struct Decomposition {
  Shape shape;
  bool leaf = false;
  Shape base;
  GridWitness baseWitness;
  std::vector<Decomposition> pieces;

  int height() const;
};

/// Empty string when valid, otherwise the first failed condition.
std::string validateFiltration(const Shape& shape, const Filtration& f);
std::string validateDecomposition(const Shape& shape, const Decomposition& dec);
Filtration flatten(const Decomposition& dec);

template <class T>
struct Decided {
  Verdict verdict = Verdict::No;
  std::optional<T> value;
};

/// Memoized decision procedure for admittability and minimal height.
///
/// A non-cell shape is admittable exactly when some choice of interior
/// lines L gives an open base grid A (all boxes of dimension < d pinned to
/// L) such that restricting the shape to each cell of A yields admittable
/// pieces whose union with A recloses to the shape. A is taken maximal,
/// which loses nothing: any valid base with lines L is contained in it and
/// meets each cell window in the same boundary.
class AdmittabilityEngine {
 public:
  explicit AdmittabilityEngine(std::uint64_t budget = defaultBudget());

  Decided<int> height(const Shape& shape);
  Decided<Decomposition> decomposition(const Shape& shape);
  Decided<Filtration> filtration(const Shape& shape);
  Verdict admittable(const Shape& shape);

  std::uint64_t nodesVisited() const { return nodes_; }

 private:
  struct Entry {
    std::optional<int> height;
    std::vector<std::vector<Coord>> lines;
  };
  struct BudgetExhausted {};

  const Entry& solve(const Shape& shape);
  std::optional<int> tryLines(const Shape& shape, const std::vector<std::vector<Coord>>& lines);
  Decomposition build(const Shape& shape);

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Shape, Entry, ShapeHash> memo_;
};

/// Open base grid for the given lines: boxes below the top dimension pinned
/// to a line.
Shape baseForLines(const Shape& shape, const std::vector<std::vector<Coord>>& lines);

Decided<Filtration> isAdmittable(const Shape& shape);
Decided<Decomposition> findDecomposition(const Shape& shape);
Decided<int> heightOf(const Shape& shape);

struct StructureReport {
  Verdict verdict = Verdict::No;
  std::string reason;
  std::optional<Box> failingWindow;
};

/// Admittable, bounding box present, and every closed k-entire subshape
/// with k < d admittable in its own dimension.
StructureReport isComposable(const Shape& shape, AdmittabilityEngine& engine);
StructureReport isComposable(const Shape& shape);
/// Every closed k-entire subshape with 1 <= k <= d is admittable. Throws on
/// the empty shape.
StructureReport isLocallyComposable(const Shape& shape, AdmittabilityEngine& engine);
StructureReport isLocallyComposable(const Shape& shape);

struct DivisionPair {
  Shape K;
  Shape J;
  Shape ambient;
};

struct DivisionReport {
  Verdict verdict = Verdict::No;
  bool definitionHolds = false;
  bool membershipHolds = false;
  std::vector<std::string> failures;
};

/// Checks the defining conditions and, separately, that K is cut out of the
/// ambient shape by "some y_a <= alpha_a or x_a >= omega_a" for the corners
/// (alpha, omega) of J.
DivisionReport checkDivisionPair(const DivisionPair& pair, AdmittabilityEngine& engine);
DivisionReport checkDivisionPair(const DivisionPair& pair);

struct CoverViolation {
  int condition = 0;
  int part = -1;
  Box window;
};

struct CoverReport {
  bool verdict = true;
  std::vector<CoverViolation> violations;
};

/// Throws when a part is not a subshape.
CoverReport checkCovering(const Shape& shape, const std::vector<Shape>& parts);

struct UnionReport {
  bool holds = false;
  std::string mode;
  std::vector<Box> residual;
};

/// Compares the shape with the union of its vertebrae, or of its closed
/// k-vertebrae for all k when it is locally but not globally composable.
UnionReport verifyVertebraUnion(const Shape& shape, AdmittabilityEngine& engine);
UnionReport verifyVertebraUnion(const Shape& shape);

enum class FillBranch { Truncated, IntoK, DivisionMap, None };
const char* toString(FillBranch b);

struct FillableReport {
  bool fillable = false;
  FillBranch branch = FillBranch::None;
  std::optional<Simplex> map;
  std::optional<BoxdotSpec> window;
};

/// All d-shaping maps from standard grids with positive extents into
/// `shape`, as strictly increasing tuples.
std::vector<Simplex> dShapingMaps(const Shape& shape);

/// Fillability through the corner criterion on d-shaping maps.
FillableReport isFillable(const Shape& F, const DivisionPair& pair);
/// Fillability by searching windows i and checking preimages literally.
FillableReport isFillableByDefinition(const Shape& F, const DivisionPair& pair);

/// Number of distinct closed grids in `shape` given by injective maps from
/// standard grids with positive extents.
std::size_t countClosedSubgridImages(const Shape& shape);

}  // namespace pastebox
