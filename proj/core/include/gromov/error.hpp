#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gromov {

/// Absolute tolerance used when comparing derived metric quantities.
inline constexpr double kTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownNodeError : public Error {
 public:
  explicit UnknownNodeError(std::string node)
      : Error("unknown node '" + node + "'"), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

/// Input is not a square symmetric matrix (as opposed to failing one of the
/// Gromov conditions).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A build program could not be executed; `op_index()` is the offending op,
/// or the op count when the failure is in the trailer (stack or permutation).
class ProgramError : public Error {
 public:
  ProgramError(std::size_t op_index, const std::string& what)
      : Error("op " + std::to_string(op_index) + ": " + what),
        op_index_(op_index) {}

  std::size_t op_index() const noexcept { return op_index_; }

 private:
  std::size_t op_index_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gromov
