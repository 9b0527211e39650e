#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "gromov/matrix.hpp"
#include "gromov/tree.hpp"

namespace gromov {

/// Push the 1x1 matrix (a), a > 0.
struct Init {
  double a;
};
/// Pop N, pop M, push the block diagonal M (+) N.
struct DirectSum {};
/// Add a > 0 to every entry of the top matrix.
struct ExtensionI {
  double a;
};
/// Add a to every entry of the top matrix, then append a row and column
/// filled with b (a >= b > 0).
struct ExtensionII {
  double a;
  double b;
};

using GromovicationOp = std::variant<Init, DirectSum, ExtensionI, ExtensionII>;

bool operator==(const Init& x, const Init& y);
bool operator==(const DirectSum&, const DirectSum&);
bool operator==(const ExtensionI& x, const ExtensionI& y);
bool operator==(const ExtensionII& x, const ExtensionII& y);

/// A stack program over Gromovication operations plus the reordering that
/// maps its output back to base-set order: result(i,j) = out(p[i], p[j]).
/// An empty permutation means the identity.
struct BuildProgram {
  std::vector<GromovicationOp> ops;
  std::vector<std::size_t> permutation;

  bool operator==(const BuildProgram&) const = default;
};

/// Runs the stack machine. Throws ProgramError naming the offending op.
GromovMatrix apply_program(const BuildProgram& program);

/// Splits a base into Gromovication operations. Non-canonical bases are
/// restricted to their span first. Throws Error for an empty base set.
BuildProgram decompose(const Base& base);

/// Lower bound on the smallest eigenvalue of apply_program(program), combined
/// op by op: Init(a) -> a; DirectSum -> min; ExtensionI keeps the bound;
/// ExtensionII(a,b) -> min(bound, b - b^2/a) when a > b and
/// bound / (n + 1 + bound/a) when a = b, n the pre-extension size.
double lambda_min_bound(const BuildProgram& program);

}  // namespace gromov
