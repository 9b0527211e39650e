#include "gromov/program.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gromov {

bool operator==(const Init& x, const Init& y) { return x.a == y.a; }
bool operator==(const DirectSum&, const DirectSum&) { return true; }
bool operator==(const ExtensionI& x, const ExtensionI& y) { return x.a == y.a; }
bool operator==(const ExtensionII& x, const ExtensionII& y) {
  return x.a == y.a && x.b == y.b;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_parameters(const GromovicationOp& op, std::size_t index) {
  std::visit(
      Overloaded{
          [&](const Init& o) {
            if (!(o.a > 0.0)) throw ProgramError(index, "init needs a > 0");
          },
          [](const DirectSum&) {},
          [&](const ExtensionI& o) {
            if (!(o.a > 0.0)) throw ProgramError(index, "ext1 needs a > 0");
          },
          [&](const ExtensionII& o) {
            if (!(o.b > 0.0) || !(o.a >= o.b)) {
              throw ProgramError(index, "ext2 needs a >= b > 0");
            }
          },
      },
      op);
}

// Shared stack discipline for apply_program and lambda_min_bound.
template <class T, class Step>
T run_stack(const BuildProgram& program, Step step) {
  std::vector<T> stack;
  for (std::size_t index = 0; index < program.ops.size(); ++index) {
    const auto& op = program.ops[index];
    check_parameters(op, index);
    const std::size_t need = std::holds_alternative<Init>(op)        ? 0
                             : std::holds_alternative<DirectSum>(op) ? 2
                                                                     : 1;
    if (stack.size() < need) {
      throw ProgramError(index, "stack holds " + std::to_string(stack.size()) +
                                    " matrices, op needs " +
                                    std::to_string(need));
    }
    step(stack, op);
  }
  if (stack.size() != 1) {
    throw ProgramError(program.ops.size(),
                       "program leaves " + std::to_string(stack.size()) +
                           " matrices on the stack");
  }
  return std::move(stack.back());
}

void check_permutation(const BuildProgram& program, std::size_t n) {
  const auto& perm = program.permutation;
  if (perm.empty()) return;
  if (perm.size() != n) {
    throw ProgramError(program.ops.size(),
                       "permutation has " + std::to_string(perm.size()) +
                           " entries for a " + std::to_string(n) + "x" +
                           std::to_string(n) + " matrix");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw ProgramError(program.ops.size(), "permutation is not a bijection");
    }
    seen[p] = true;
  }
}

}  // namespace

GromovMatrix apply_program(const BuildProgram& program) {
  Matrix out = run_stack<Matrix>(
      program, [](std::vector<Matrix>& stack, const GromovicationOp& op) {
        std::visit(
            Overloaded{
                [&](const Init& o) { stack.push_back(Matrix::Constant(1, 1, o.a)); },
                [&](const DirectSum&) {
                  Matrix top = std::move(stack.back());
                  stack.pop_back();
                  Matrix& below = stack.back();
                  const Eigen::Index p = below.rows();
                  const Eigen::Index q = top.rows();
                  Matrix sum = Matrix::Zero(p + q, p + q);
                  sum.topLeftCorner(p, p) = below;
                  sum.bottomRightCorner(q, q) = top;
                  below = std::move(sum);
                },
                [&](const ExtensionI& o) { stack.back().array() += o.a; },
                [&](const ExtensionII& o) {
                  Matrix& m = stack.back();
                  const Eigen::Index n = m.rows();
                  Matrix grown = Matrix::Constant(n + 1, n + 1, o.b);
                  grown.topLeftCorner(n, n) = m.array() + o.a;
                  m = std::move(grown);
                },
            },
            op);
      });

  const auto n = static_cast<std::size_t>(out.rows());
  check_permutation(program, n);
  if (program.permutation.empty()) return GromovMatrix::assume_valid(std::move(out));
  Matrix result(out.rows(), out.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          out(static_cast<Eigen::Index>(program.permutation[i]),
              static_cast<Eigen::Index>(program.permutation[j]));
    }
  }
  return GromovMatrix::assume_valid(std::move(result));
}

double lambda_min_bound(const BuildProgram& program) {
  struct Entry {
    std::size_t n;
    double bound;
  };
  const Entry result = run_stack<Entry>(
      program, [](std::vector<Entry>& stack, const GromovicationOp& op) {
        std::visit(
            Overloaded{
                [&](const Init& o) { stack.push_back({1, o.a}); },
                [&](const DirectSum&) {
                  const Entry top = stack.back();
                  stack.pop_back();
                  stack.back().n += top.n;
                  stack.back().bound = std::min(stack.back().bound, top.bound);
                },
                [](const ExtensionI&) {},
                [&](const ExtensionII& o) {
                  Entry& e = stack.back();
                  if (o.a > o.b) {
                    e.bound = std::min(e.bound, o.b - o.b * o.b / o.a);
                  } else {
                    e.bound = e.bound /
                              (static_cast<double>(e.n) + 1.0 + e.bound / o.a);
                  }
                  ++e.n;
                },
            },
            op);
      });
  return result.bound;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(const Base& base)
      : tree_(base.tree()), rooted_(tree_.rooted_at(base.base_vertex_id())) {
    is_base_.assign(tree_.size(), false);
    for (NodeId id : base.base_ids()) is_base_[id] = true;
    children_.resize(tree_.size());
    for (NodeId x : rooted_.order) {
      if (rooted_.parent[x] != kNoNode) children_[rooted_.parent[x]].push_back(x);
    }
    // Smallest base label per subtree, bottom-up.
    smallest_.assign(tree_.size(), nullptr);
    for (auto it = rooted_.order.rbegin(); it != rooted_.order.rend(); ++it) {
      const NodeId x = *it;
      if (is_base_[x]) consider(x, &tree_.name(x));
      if (smallest_[x] != nullptr && rooted_.parent[x] != kNoNode) {
        consider(rooted_.parent[x], smallest_[x]);
      }
    }
    for (auto& kids : children_) {
      std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
        return *smallest_[a] < *smallest_[b];
      });
    }
  }

  // Programs of the children of x, joined by direct sums.
  void emit_children(NodeId x) {
    bool first = true;
    for (NodeId c : children_[x]) {
      emit_branch(c);
      if (!first) ops_.push_back(DirectSum{});
      first = false;
    }
  }

  std::vector<GromovicationOp> ops_;
  std::vector<NodeId> order_;

 private:
  // Matrix of the base nodes below c as seen from the parent of c.
  void emit_branch(NodeId c) {
    const double w = rooted_.parent_weight[c];
    if (is_base_[c]) {
      if (children_[c].empty()) {
        ops_.push_back(Init{w});
      } else {
        emit_children(c);
        if (auto* ext = std::get_if<ExtensionI>(&ops_.back())) {
          const double a = ext->a + w;
          ops_.back() = ExtensionII{a, w};
        } else {
          ops_.push_back(ExtensionII{w, w});
        }
      }
      order_.push_back(c);
    } else {
      emit_children(c);
      ops_.push_back(ExtensionI{w});
    }
  }

  void consider(NodeId x, const std::string* label) {
    if (smallest_[x] == nullptr || *label < *smallest_[x]) smallest_[x] = label;
  }

  const WeightedTree& tree_;
  WeightedTree::Rooted rooted_;
  std::vector<bool> is_base_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<const std::string*> smallest_;
};

}  // namespace

BuildProgram decompose(const Base& base) {
  if (base.size() == 0) throw Error("decompose: empty base set");
  const Base spanning =
      base.is_canonical()
          ? base
          : restrict_to_span(base.tree(), base.base_vertex(), base.base_set());

  Decomposer d(spanning);
  d.emit_children(spanning.base_vertex_id());

  BuildProgram program;
  program.ops = std::move(d.ops_);
  std::vector<std::size_t> position(spanning.tree().size(), 0);
  for (std::size_t p = 0; p < d.order_.size(); ++p) position[d.order_[p]] = p;
  const auto ids = spanning.base_ids();
  program.permutation.reserve(ids.size());
  bool identity = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    program.permutation.push_back(position[ids[i]]);
    identity = identity && position[ids[i]] == i;
  }
  if (identity) program.permutation.clear();
  return program;
}

}  // namespace gromov
