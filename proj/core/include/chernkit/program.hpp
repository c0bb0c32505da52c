#pragma once

#include <span>
#include <vector>

#include "chernkit/expr.hpp"

namespace chernkit {

/// A batch of expressions flattened into a single instruction tape.
/// Nodes shared between outputs are evaluated once. Results are identical
/// to evaluate() on each output.
class Program {
 public:
  Program() = default;
  explicit Program(std::span<const Expr> outputs);

  std::size_t outputs() const { return outputs_.size(); }
  std::size_t instructions() const { return ops_.size(); }

  /// Writes one value per output. Throws EvalError like evaluate().
  void run(std::span<const Complex> p, std::span<Complex> out) const;
  std::vector<Complex> run(std::span<const Complex> p) const;

 private:
  struct Op {
    ExprKind kind;
    int a = -1;
    int b = -1;
    int n = 0;
    Complex value{};
  };
  std::vector<Op> ops_;
  std::vector<int> outputs_;
};

}  // namespace chernkit
