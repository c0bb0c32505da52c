#include "chernkit/program.hpp"

#include <unordered_map>

#include "detail.hpp"

namespace chernkit {

namespace {

struct Compiler {
  std::unordered_map<const void*, int> slots;
  std::vector<Expr> keep;

  template <typename Emit>
  int compile(const Expr& e, Emit&& emit) {
    if (auto it = slots.find(e.id()); it != slots.end()) return it->second;
    int a = -1;
    int b = -1;
    if (e.arity() >= 1) a = compile(e.child(0), emit);
    if (e.arity() == 2) b = compile(e.child(1), emit);
    const int slot = emit(e, a, b);
    slots.emplace(e.id(), slot);
    keep.push_back(e);
    return slot;
  }
};

}  // namespace

Program::Program(std::span<const Expr> outputs) {
  Compiler compiler;
  auto emit = [this](const Expr& e, int a, int b) {
    Op op{e.kind(), a, b, 0, {}};
    if (e.kind() == ExprKind::Constant) op.value = e.value();
    if (e.kind() == ExprKind::Coord || e.kind() == ExprKind::ConjCoord) op.n = e.index();
    if (e.kind() == ExprKind::Pow) op.n = e.exponent();
    ops_.push_back(op);
    return static_cast<int>(ops_.size()) - 1;
  };
  outputs_.reserve(outputs.size());
  for (const Expr& e : outputs) outputs_.push_back(compiler.compile(e, emit));
}

void Program::run(std::span<const Complex> p, std::span<Complex> out) const {
  std::vector<Complex> r(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
      case ExprKind::Constant:
        r[i] = op.value;
        break;
      case ExprKind::Coord:
      case ExprKind::ConjCoord: {
        const auto k = static_cast<std::size_t>(op.n);
        if (k > p.size()) throw EvalError("coordinate z" + std::to_string(k) + " outside point dimension");
        r[i] = op.kind == ExprKind::Coord ? p[k - 1] : std::conj(p[k - 1]);
        break;
      }
      case ExprKind::Neg:
        r[i] = -r[op.a];
        break;
      case ExprKind::Conj:
        r[i] = std::conj(r[op.a]);
        break;
      case ExprKind::Exp:
        r[i] = std::exp(r[op.a]);
        break;
      case ExprKind::Log:
        if (std::abs(r[op.a]) < detail::kTinyDenominator) throw EvalError("log of zero");
        r[i] = std::log(r[op.a]);
        break;
      case ExprKind::Add:
        r[i] = r[op.a] + r[op.b];
        break;
      case ExprKind::Sub:
        r[i] = r[op.a] - r[op.b];
        break;
      case ExprKind::Mul:
        r[i] = r[op.a] * r[op.b];
        break;
      case ExprKind::Div:
        if (std::abs(r[op.b]) < detail::kTinyDenominator) throw EvalError("division by zero");
        r[i] = r[op.a] / r[op.b];
        break;
      case ExprKind::Pow:
        r[i] = detail::int_power(r[op.a], op.n);
        break;
    }
  }
  for (std::size_t j = 0; j < outputs_.size(); ++j) out[j] = r[outputs_[j]];
}

std::vector<Complex> Program::run(std::span<const Complex> p) const {
  std::vector<Complex> out(outputs_.size());
  run(p, out);
  return out;
}

}  // namespace chernkit
