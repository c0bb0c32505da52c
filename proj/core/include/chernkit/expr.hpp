#pragma once

// Complex-valued expression DAGs in the independent symbols z_k and zbar_k,
// with exact Wirtinger differentiation and numeric evaluation.

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chernkit {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;

/// Raised when an expression cannot be evaluated at a point
/// (division by a vanishing denominator, logarithm of zero).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExprKind {
  Constant,
  Coord,      // z_k
  ConjCoord,  // zbar_k
  Neg,
  Conj,
  Exp,
  Log,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // integer exponent >= 2 after construction
};

/// Immutable handle to an expression node. Copies share structure, so
/// sub-expressions bound with `let` in the DSL form a DAG rather than a tree.
class Expr {
 public:
  Expr();  // constant 0
  Expr(Complex value);  // NOLINT(google-explicit-constructor)
  Expr(double value);   // NOLINT(google-explicit-constructor)

  static Expr coord(int k);
  static Expr conj_coord(int k);

  ExprKind kind() const;
  Complex value() const;
  /// 1-based coordinate index for Coord/ConjCoord.
  int index() const;
  int exponent() const;
  std::size_t arity() const;
  const Expr& child(std::size_t i) const;

  /// Identity of the underlying node; stable while any handle is alive.
  const void* id() const { return node_.get(); }

  bool is_constant() const { return kind() == ExprKind::Constant; }
  bool is_constant(Complex c) const { return is_constant() && value() == c; }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr log(const Expr& a);
  friend Expr conj(const Expr& a);
  friend Expr pow(const Expr& a, int n);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  static Expr make(ExprKind kind, Expr a, Expr b = Expr(), int n = 0);

  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr conj(const Expr& a);
/// Negative exponents become 1 / a^(-n); a^0 folds to 1 and a^1 to a.
Expr pow(const Expr& a, int n);

/// sum_k z_k * zbar_k over k = 1..n.
Expr abs2(int n);

enum class Wirtinger { Holomorphic, Antiholomorphic };

/// d/dz_k (Holomorphic) or d/dzbar_k (Antiholomorphic), treating z and zbar
/// as independent symbols. k is 1-based.
Expr diff(const Expr& e, Wirtinger kind, int k);

/// Differentiates many expressions while sharing work across common
/// sub-expressions. Results stay valid after the differentiator is gone.
class Differentiator {
 public:
  Expr operator()(const Expr& e, Wirtinger kind, int k);

 private:
  using Key = std::tuple<const void*, int, int>;
  std::map<Key, Expr> memo_;
  // Keeps every memoised input alive so node addresses are never reused.
  std::vector<Expr> pinned_;
};

/// Recursive evaluation; zbar_k evaluates to conj(p[k-1]).
/// Throws EvalError on |denominator| < 1e-300 or log(0).
Complex evaluate(const Expr& e, std::span<const Complex> p);

/// DSL rendering that parses back to an evaluation-identical expression.
std::string to_string(const Expr& e);

/// Largest coordinate index referenced, 0 for constants.
int max_coordinate(const Expr& e);

/// Number of distinct nodes in the DAG.
std::size_t node_count(const Expr& e);

}  // namespace chernkit
