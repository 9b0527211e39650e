#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gromov/matrix.hpp"

namespace gromov {

/// Convex weights: every entry in [0,1], summing to 1 within 1e-9.
class CombinationWeights {
 public:
  /// Throws Error when the invariants fail.
  explicit CombinationWeights(std::vector<double> alpha);

  /// Comma-separated decimals, e.g. "0.5,0.5".
  static CombinationWeights parse(std::string_view text);
  /// (theta, 1 - theta).
  static CombinationWeights pair(double theta);

  std::size_t size() const noexcept { return alpha_.size(); }
  double operator[](std::size_t i) const { return alpha_[i]; }
  const std::vector<double>& values() const noexcept { return alpha_; }

 private:
  std::vector<double> alpha_;
};

/// Entrywise weighted sum. Not a Gromov matrix in general.
Matrix convex(std::span<const GromovMatrix> matrices,
              const CombinationWeights& weights);

/// The G-convex combination: the convex combination with its upper-triangle
/// entries raised, largest first, until every triple satisfies the
/// three-point condition. O(k n^2 + n^3).
GromovMatrix g_convex(std::span<const GromovMatrix> matrices,
                      const CombinationWeights& weights);

/// The raising step alone, applied to a symmetric matrix.
Matrix gromovize(const Matrix& matrix);

struct FixpointResult {
  GromovMatrix matrix;
  /// Sweeps that changed at least one entry.
  std::size_t iterations;
};

/// Repeats N(j,k) <- max(N(j,k), max_l min(N(l,j), N(l,k))) over all pairs
/// until nothing changes. Independent of `gromovize` and much slower.
FixpointResult g_convex_fixpoint(const Matrix& matrix);

/// max(a_i, min of the other two); `index` is zero-based.
double max_min(const std::array<double, 3>& values, std::size_t index);

/// Partition {pair} + {singleton} of a triple with
/// M(pair0, singleton) = M(pair1, singleton) <= M(pair0, pair1).
struct TripleType {
  std::array<std::size_t, 2> pair;
  std::size_t singleton;

  bool operator==(const TripleType&) const = default;
};

/// All types of the triple {i, j, l} (zero-based), pair indices ascending,
/// ordered by singleton. Never empty for a Gromov matrix.
std::vector<TripleType> triple_types(const GromovMatrix& matrix, std::size_t i,
                                     std::size_t j, std::size_t l,
                                     double eps = kTolerance);

enum class InheritanceResult { kOk, kNotApplicable, kCounterexample };

/// Checks that a triple whose pair entry is untouched by the raising step
/// and dominates its cross entries has a type found in some component.
InheritanceResult check_type_inheritance(
    std::span<const GromovMatrix> matrices, const CombinationWeights& weights,
    const std::array<std::size_t, 3>& triple, double eps = kTolerance);

struct PathSample {
  double theta;
  GromovMatrix matrix;
};

struct PathTrace {
  /// theta = 0, 1/grid, ..., 1; theta = 1 is M1 and theta = 0 is M2.
  std::vector<PathSample> samples;
  std::vector<double> turning_points;
};

inline constexpr double kTurningThreshold = 1e-6;

/// Samples the G-convex path between M1 and M2 and locates the parameters
/// where it stops being affine.
PathTrace trace_path(const GromovMatrix& m1, const GromovMatrix& m2,
                     std::size_t grid, double threshold = kTurningThreshold);

/// All weight vectors of length k whose entries are multiples of 1/steps.
std::vector<CombinationWeights> simplex_grid(std::size_t k, std::size_t steps);

}  // namespace gromov
