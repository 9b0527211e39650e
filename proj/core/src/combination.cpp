#include "gromov/combination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gromov/format.hpp"

namespace gromov {

CombinationWeights::CombinationWeights(std::vector<double> alpha)
    : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw Error("combination weights are empty");
  double sum = 0.0;
  for (double a : alpha_) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error("combination weight " + format_double(a) +
                  " is outside [0,1]");
    }
    sum += a;
  }
  if (std::abs(sum - 1.0) > kTolerance) {
    throw Error("combination weights sum to " + format_double(sum) +
                ", not 1");
  }
}

CombinationWeights CombinationWeights::parse(std::string_view text) {
  std::vector<double> alpha;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string token(text.substr(pos, comma - pos));
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    alpha.push_back(parse_double(token, "weights"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return CombinationWeights(std::move(alpha));
}

CombinationWeights CombinationWeights::pair(double theta) {
  return CombinationWeights({theta, 1.0 - theta});
}

namespace {

void check_operands(std::span<const GromovMatrix> matrices,
                    const CombinationWeights& weights) {
  if (matrices.empty()) throw Error("no matrices to combine");
  if (matrices.size() != weights.size()) {
    throw Error(std::to_string(matrices.size()) + " matrices but " +
                std::to_string(weights.size()) + " weights");
  }
  for (const auto& m : matrices) {
    if (m.size() != matrices.front().size()) {
      throw StructuralError("matrices to combine differ in dimension");
    }
  }
}

bool is_diagonal(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

Matrix convex(std::span<const GromovMatrix> matrices,
              const CombinationWeights& weights) {
  check_operands(matrices, weights);
  Matrix sum = Matrix::Zero(matrices.front().size(), matrices.front().size());
  for (std::size_t h = 0; h < matrices.size(); ++h) {
    if (weights[h] != 0.0) sum += weights[h] * matrices[h].entries();
  }
  return sum;
}

GromovMatrix g_convex(std::span<const GromovMatrix> matrices,
                      const CombinationWeights& weights) {
  Matrix sum = convex(matrices, weights);
  // A Gromov matrix plus diagonal ones is already Gromov.
  std::size_t full = 0;
  for (std::size_t h = 0; h < matrices.size(); ++h) {
    if (weights[h] > 0.0 && !is_diagonal(matrices[h].entries())) ++full;
  }
  if (full <= 1) return GromovMatrix::assume_valid(std::move(sum));
  return GromovMatrix::assume_valid(gromovize(sum));
}

Matrix gromovize(const Matrix& matrix) {
  require_symmetric(matrix);
  const auto n = static_cast<std::size_t>(matrix.rows());
  Matrix out = matrix;
  if (n < 3) return out;

  struct Slot {
    std::size_t i;
    std::size_t j;
  };
  std::vector<Slot> slots;
  slots.reserve(n * (n - 1) / 2);
  std::vector<std::size_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      id[i * n + j] = id[j * n + i] = slots.size();
      slots.push_back({i, j});
    }
  }
  const auto value = [&](std::size_t s) -> double& {
    return out(static_cast<Eigen::Index>(slots[s].i),
               static_cast<Eigen::Index>(slots[s].j));
  };

  std::vector<std::size_t> sequence(slots.size());
  std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  // Slots were generated in (row, column) order, so a stable sort on the
  // value alone breaks ties by position.
  std::stable_sort(sequence.begin(), sequence.end(),
                   [&](std::size_t a, std::size_t b) {
                     return value(a) > value(b);
                   });

  // The sequence as a doubly linked list so entries can be moved in O(1).
  constexpr std::size_t kEnd = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(slots.size(), kEnd);
  std::vector<std::size_t> prev(slots.size(), kEnd);
  for (std::size_t p = 0; p + 1 < sequence.size(); ++p) {
    next[sequence[p]] = sequence[p + 1];
    prev[sequence[p + 1]] = sequence[p];
  }

  std::vector<bool> done(slots.size(), false);
  for (std::size_t t = sequence.front(); t != kEnd; t = next[t]) {
    done[t] = true;
    const double x = value(t);
    const auto [i, j] = slots[t];
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const std::size_t a = id[i * n + k];
      const std::size_t b = id[j * n + k];
      if (done[a] == done[b]) continue;
      const std::size_t v = done[a] ? b : a;
      value(v) = x;
      if (prev[v] == t) continue;
      // Unlink v and reinsert it right after t.
      next[prev[v]] = next[v];
      if (next[v] != kEnd) prev[next[v]] = prev[v];
      next[v] = next[t];
      prev[v] = t;
      if (next[t] != kEnd) prev[next[t]] = v;
      next[t] = v;
    }
  }

  for (const auto& [i, j] : slots) {
    out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return out;
}

FixpointResult g_convex_fixpoint(const Matrix& matrix) {
  require_symmetric(matrix);
  const Eigen::Index n = matrix.rows();
  Matrix current = matrix;
  std::size_t iterations = 0;
  const auto cap = static_cast<std::size_t>(n * (n - 1) / 2) + 1;
  while (iterations <= cap) {
    Matrix updated = current;
    bool changed = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        double best = current(j, k);
        for (Eigen::Index l = 0; l < n; ++l) {
          if (l == j || l == k) continue;
          best = std::max(best, max_min({current(j, k), current(l, j),
                                         current(l, k)},
                                        0));
        }
        if (best != current(j, k)) {
          updated(j, k) = updated(k, j) = best;
          changed = true;
        }
      }
    }
    if (!changed) break;
    current = std::move(updated);
    ++iterations;
  }
  return {GromovMatrix::assume_valid(std::move(current)), iterations};
}

double max_min(const std::array<double, 3>& values, std::size_t index) {
  if (index > 2) throw std::out_of_range("max_min index must be 0, 1 or 2");
  const double other = std::min(values[(index + 1) % 3], values[(index + 2) % 3]);
  return std::max(values[index], other);
}

std::vector<TripleType> triple_types(const GromovMatrix& matrix, std::size_t i,
                                     std::size_t j, std::size_t l, double eps) {
  const auto n = static_cast<std::size_t>(matrix.size());
  if (i >= n || j >= n || l >= n) {
    throw std::out_of_range("triple index out of range");
  }
  if (i == j || j == l || i == l) throw Error("triple indices must be distinct");
  const auto m = [&](std::size_t a, std::size_t b) {
    return matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  };
  std::array<std::size_t, 3> t{i, j, l};
  std::sort(t.begin(), t.end());
  std::vector<TripleType> types;
  for (std::size_t s = 0; s < 3; ++s) {
    const std::size_t single = t[s];
    std::array<std::size_t, 2> pair{t[(s + 1) % 3], t[(s + 2) % 3]};
    std::sort(pair.begin(), pair.end());
    const double cross_a = m(pair[0], single);
    const double cross_b = m(pair[1], single);
    if (std::abs(cross_a - cross_b) <= eps &&
        std::max(cross_a, cross_b) <= m(pair[0], pair[1]) + eps) {
      types.push_back({pair, single});
    }
  }
  std::sort(types.begin(), types.end(),
            [](const TripleType& a, const TripleType& b) {
              return a.singleton < b.singleton;
            });
  return types;
}

InheritanceResult check_type_inheritance(
    std::span<const GromovMatrix> matrices, const CombinationWeights& weights,
    const std::array<std::size_t, 3>& triple, double eps) {
  const Matrix plain = convex(matrices, weights);
  const GromovMatrix raised = g_convex(matrices, weights);
  const auto at = [](const Matrix& m, std::size_t a, std::size_t b) {
    return m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  };
  bool applicable = false;
  for (std::size_t s = 0; s < 3; ++s) {
    const std::size_t l = triple[s];
    std::array<std::size_t, 2> pair{triple[(s + 1) % 3], triple[(s + 2) % 3]};
    std::sort(pair.begin(), pair.end());
    const auto [i, j] = pair;
    const auto& r = raised.entries();
    const bool hypothesis = std::abs(at(plain, i, j) - at(r, i, j)) <= eps &&
                            at(r, i, j) + eps >= at(r, i, l) &&
                            std::abs(at(r, i, l) - at(r, j, l)) <= eps;
    if (!hypothesis) continue;
    applicable = true;
    const TripleType type{pair, l};
    bool found = false;
    for (std::size_t h = 0; h < matrices.size() && !found; ++h) {
      if (weights[h] <= 0.0) continue;
      const auto types = triple_types(matrices[h], i, j, l, eps);
      found = std::find(types.begin(), types.end(), type) != types.end();
    }
    if (!found) return InheritanceResult::kCounterexample;
  }
  return applicable ? InheritanceResult::kOk : InheritanceResult::kNotApplicable;
}

namespace {

Matrix second_difference(const Matrix& a, const Matrix& b, const Matrix& c) {
  return a - 2.0 * b + c;
}

}  // namespace

PathTrace trace_path(const GromovMatrix& m1, const GromovMatrix& m2,
                     std::size_t grid, double threshold) {
  if (grid == 0) throw Error("trace_path needs a positive grid");
  if (m1.size() != m2.size()) {
    throw StructuralError("trace_path endpoints differ in dimension");
  }
  const std::array<GromovMatrix, 2> ends{m1, m2};
  PathTrace trace;
  trace.samples.reserve(grid + 1);
  for (std::size_t s = 0; s <= grid; ++s) {
    const double theta = static_cast<double>(s) / static_cast<double>(grid);
    trace.samples.push_back({theta, g_convex(ends, CombinationWeights::pair(theta))});
  }

  const auto& samples = trace.samples;
  const auto entries = [&](std::size_t s) -> const Matrix& {
    return samples[s].matrix.entries();
  };
  std::vector<bool> flagged(grid + 1, false);
  for (std::size_t s = 1; s < grid; ++s) {
    const Matrix d = second_difference(entries(s - 1), entries(s), entries(s + 1));
    flagged[s] = d.cwiseAbs().maxCoeff() > threshold;
  }

  const double h = 1.0 / static_cast<double>(grid);
  std::size_t s = 1;
  while (s < grid) {
    if (!flagged[s]) {
      ++s;
      continue;
    }
    const std::size_t a = s;
    while (s + 1 < grid && flagged[s + 1]) ++s;
    const std::size_t b = s;
    ++s;

    bool located = false;
    if (a >= 2 && b + 2 <= grid) {
      const Matrix left = (entries(a - 1) - entries(a - 2)) / h;
      const Matrix right = (entries(b + 2) - entries(b + 1)) / h;
      Eigen::Index r = 0;
      Eigen::Index c = 0;
      const double change = (left - right).cwiseAbs().maxCoeff(&r, &c);
      if (change > 0.0) {
        const double t0 = samples[a - 1].theta;
        const double t1 = samples[b + 1].theta;
        const double y0 = entries(a - 1)(r, c);
        const double y1 = entries(b + 1)(r, c);
        // y0 + L (t - t0) = y1 + R (t - t1)
        const double t = (y1 - y0 + left(r, c) * t0 - right(r, c) * t1) /
                         (left(r, c) - right(r, c));
        // A lone kink lies inside every flagged stencil; anything else means
        // several kinks share the cluster.
        const double slack = 1e-9 * h;
        if (t >= samples[b - 1].theta - slack && t <= samples[a + 1].theta + slack) {
          trace.turning_points.push_back(t);
          located = true;
        }
      }
    }
    if (!located) {
      if (a >= 2 && b + 2 <= grid) {
        for (std::size_t f = a; f <= b; ++f) {
          trace.turning_points.push_back(samples[f].theta);
        }
      } else {
        trace.turning_points.push_back(
            0.5 * (samples[a].theta + samples[b].theta));
      }
    }
  }
  return trace;
}

namespace {

void compositions(std::size_t parts, std::size_t remaining,
                  std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t first = remaining + 1; first-- > 0;) {
    prefix.push_back(first);
    compositions(parts - 1, remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CombinationWeights> simplex_grid(std::size_t k, std::size_t steps) {
  if (k == 0 || steps == 0) throw Error("simplex_grid needs k >= 1 and steps >= 1");
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> prefix;
  compositions(k, steps, prefix, parts);
  std::vector<CombinationWeights> grid;
  grid.reserve(parts.size());
  for (const auto& p : parts) {
    std::vector<double> alpha;
    alpha.reserve(k);
    for (std::size_t q : p) {
      alpha.push_back(static_cast<double>(q) / static_cast<double>(steps));
    }
    grid.emplace_back(std::move(alpha));
  }
  return grid;
}

}  // namespace gromov
