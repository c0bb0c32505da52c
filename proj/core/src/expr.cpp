#include "chernkit/expr.hpp"

#include "detail.hpp"

#include <array>
#include <cassert>
#include <cmath>
#include <functional>
#include <unordered_set>

namespace chernkit {

struct Expr::Node {
  ExprKind kind = ExprKind::Constant;
  Complex value{};
  int n = 0;  // coordinate index or exponent
  // Null handles; Expr() would allocate another Node.
  std::array<Expr, 2> children{Expr(std::shared_ptr<const Node>{}),
                               Expr(std::shared_ptr<const Node>{})};
};

namespace {

std::size_t arity_of(ExprKind kind) {
  switch (kind) {
    case ExprKind::Constant:
    case ExprKind::Coord:
    case ExprKind::ConjCoord:
      return 0;
    case ExprKind::Neg:
    case ExprKind::Conj:
    case ExprKind::Exp:
    case ExprKind::Log:
    case ExprKind::Pow:
      return 1;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
  }
  return 0;
}

using detail::int_power;
using detail::kTinyDenominator;

}  // namespace

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(Complex{0.0, 0.0}) {}

Expr::Expr(double value) : Expr(Complex{value, 0.0}) {}

Expr::Expr(Complex value) {
  auto node = std::make_shared<Node>();
  node->kind = ExprKind::Constant;
  node->value = value;
  node_ = std::move(node);
}

Expr Expr::coord(int k) {
  if (k < 1) throw std::invalid_argument("coordinate index must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = ExprKind::Coord;
  node->n = k;
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::conj_coord(int k) {
  if (k < 1) throw std::invalid_argument("coordinate index must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = ExprKind::ConjCoord;
  node->n = k;
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::make(ExprKind kind, Expr a, Expr b, int n) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->n = n;
  node->children[0] = std::move(a);
  if (arity_of(kind) == 2) node->children[1] = std::move(b);
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

ExprKind Expr::kind() const { return node_->kind; }
Complex Expr::value() const { return node_->value; }
int Expr::index() const { return node_->n; }
int Expr::exponent() const { return node_->n; }
std::size_t Expr::arity() const { return arity_of(node_->kind); }

const Expr& Expr::child(std::size_t i) const {
  assert(i < arity());
  return node_->children[i];
}

// Constructors below fold constants and drop additive/multiplicative
// identities and annihilators. Nothing else is rewritten.

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() + b.value());
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return Expr::make(ExprKind::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() - b.value());
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  return Expr::make(ExprKind::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() * b.value());
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr();
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return Expr::make(ExprKind::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant() && std::abs(b.value()) >= kTinyDenominator) {
    return Expr(a.value() / b.value());
  }
  if (a.is_constant(0.0) && !b.is_constant(0.0)) return Expr();
  if (b.is_constant(1.0)) return a;
  return Expr::make(ExprKind::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.value());
  if (a.kind() == ExprKind::Neg) return a.child(0);
  return Expr::make(ExprKind::Neg, a);
}

Expr exp(const Expr& a) {
  if (a.is_constant()) return Expr(std::exp(a.value()));
  return Expr::make(ExprKind::Exp, a);
}

Expr log(const Expr& a) {
  if (a.is_constant() && std::abs(a.value()) >= kTinyDenominator) {
    return Expr(std::log(a.value()));
  }
  return Expr::make(ExprKind::Log, a);
}

Expr conj(const Expr& a) {
  switch (a.kind()) {
    case ExprKind::Constant:
      return Expr(std::conj(a.value()));
    case ExprKind::Coord:
      return Expr::conj_coord(a.index());
    case ExprKind::ConjCoord:
      return Expr::coord(a.index());
    case ExprKind::Conj:
      return a.child(0);
    default:
      return Expr::make(ExprKind::Conj, a);
  }
}

Expr pow(const Expr& a, int n) {
  if (n < 0) return Expr(1.0) / pow(a, -n);
  if (n == 0) return Expr(1.0);
  if (n == 1) return a;
  if (a.is_constant()) return Expr(int_power(a.value(), n));
  return Expr::make(ExprKind::Pow, a, Expr(), n);
}

Expr abs2(int n) {
  Expr sum;
  for (int k = 1; k <= n; ++k) sum = sum + Expr::coord(k) * Expr::conj_coord(k);
  return sum;
}

namespace {

Wirtinger flipped(Wirtinger kind) {
  return kind == Wirtinger::Holomorphic ? Wirtinger::Antiholomorphic : Wirtinger::Holomorphic;
}

}  // namespace

Expr Differentiator::operator()(const Expr& e, Wirtinger kind, int k) {
  const Key key{e.id(), static_cast<int>(kind), k};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Expr result;
  switch (e.kind()) {
    case ExprKind::Constant:
      break;
    case ExprKind::Coord:
      if (kind == Wirtinger::Holomorphic && e.index() == k) result = Expr(1.0);
      break;
    case ExprKind::ConjCoord:
      if (kind == Wirtinger::Antiholomorphic && e.index() == k) result = Expr(1.0);
      break;
    case ExprKind::Neg:
      result = -(*this)(e.child(0), kind, k);
      break;
    case ExprKind::Conj:
      // d/dz conj(u) = conj(d/dzbar u)
      result = conj((*this)(e.child(0), flipped(kind), k));
      break;
    case ExprKind::Exp:
      result = e * (*this)(e.child(0), kind, k);
      break;
    case ExprKind::Log:
      result = (*this)(e.child(0), kind, k) / e.child(0);
      break;
    case ExprKind::Add:
      result = (*this)(e.child(0), kind, k) + (*this)(e.child(1), kind, k);
      break;
    case ExprKind::Sub:
      result = (*this)(e.child(0), kind, k) - (*this)(e.child(1), kind, k);
      break;
    case ExprKind::Mul: {
      const Expr& a = e.child(0);
      const Expr& b = e.child(1);
      result = (*this)(a, kind, k) * b + a * (*this)(b, kind, k);
      break;
    }
    case ExprKind::Div: {
      const Expr& a = e.child(0);
      const Expr& b = e.child(1);
      const Expr da = (*this)(a, kind, k);
      const Expr db = (*this)(b, kind, k);
      if (db.is_constant(0.0)) {
        result = da / b;
      } else {
        result = (da * b - a * db) / pow(b, 2);
      }
      break;
    }
    case ExprKind::Pow: {
      const Expr& a = e.child(0);
      const int n = e.exponent();
      result = Expr(static_cast<double>(n)) * pow(a, n - 1) * (*this)(a, kind, k);
      break;
    }
  }
  memo_.emplace(key, result);
  pinned_.push_back(e);
  return result;
}

Expr diff(const Expr& e, Wirtinger kind, int k) {
  if (k < 1) throw std::invalid_argument("coordinate index must be >= 1");
  Differentiator d;
  return d(e, kind, k);
}

Complex evaluate(const Expr& e, std::span<const Complex> p) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return e.value();
    case ExprKind::Coord:
    case ExprKind::ConjCoord: {
      const auto k = static_cast<std::size_t>(e.index());
      if (k > p.size()) throw EvalError("coordinate z" + std::to_string(k) + " outside point dimension");
      return e.kind() == ExprKind::Coord ? p[k - 1] : std::conj(p[k - 1]);
    }
    case ExprKind::Neg:
      return -evaluate(e.child(0), p);
    case ExprKind::Conj:
      return std::conj(evaluate(e.child(0), p));
    case ExprKind::Exp:
      return std::exp(evaluate(e.child(0), p));
    case ExprKind::Log: {
      const Complex a = evaluate(e.child(0), p);
      if (std::abs(a) < kTinyDenominator) throw EvalError("log of zero");
      return std::log(a);
    }
    case ExprKind::Add:
      return evaluate(e.child(0), p) + evaluate(e.child(1), p);
    case ExprKind::Sub:
      return evaluate(e.child(0), p) - evaluate(e.child(1), p);
    case ExprKind::Mul:
      return evaluate(e.child(0), p) * evaluate(e.child(1), p);
    case ExprKind::Div: {
      const Complex num = evaluate(e.child(0), p);
      const Complex den = evaluate(e.child(1), p);
      if (std::abs(den) < kTinyDenominator) throw EvalError("division by zero");
      return num / den;
    }
    case ExprKind::Pow:
      return int_power(evaluate(e.child(0), p), e.exponent());
  }
  return {};
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_double(double x) { return detail::shortest(x); }

std::string format_constant(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) {
    if (re >= 0.0 && !std::signbit(re)) return format_double(re);
    return "(" + format_double(re) + ")";
  }
  if (re == 0.0) {
    if (im > 0.0) return format_double(im) + "i";
    return "(" + format_double(im) + "i)";
  }
  const char* sign = im < 0.0 ? "-" : "+";
  return "(" + format_double(re) + sign + format_double(std::abs(im)) + "i)";
}

std::string render(const Expr& e);

std::string wrap_if(const Expr& e, bool parens) {
  return parens ? "(" + render(e) + ")" : render(e);
}

std::string render(const Expr& e) {
  const int prec = precedence(e);
  switch (e.kind()) {
    case ExprKind::Constant:
      return format_constant(e.value());
    case ExprKind::Coord:
      return "z" + std::to_string(e.index());
    case ExprKind::ConjCoord:
      return "zbar" + std::to_string(e.index());
    case ExprKind::Neg:
      return "-" + wrap_if(e.child(0), precedence(e.child(0)) < prec);
    case ExprKind::Conj:
      return "conj(" + render(e.child(0)) + ")";
    case ExprKind::Exp:
      return "exp(" + render(e.child(0)) + ")";
    case ExprKind::Log:
      return "log(" + render(e.child(0)) + ")";
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      const auto op = static_cast<int>(e.kind()) - static_cast<int>(ExprKind::Add);
      return wrap_if(e.child(0), precedence(e.child(0)) < prec) + ops[op] +
             wrap_if(e.child(1), precedence(e.child(1)) <= prec);
    }
    case ExprKind::Pow:
      return wrap_if(e.child(0), precedence(e.child(0)) <= prec) + "^" + std::to_string(e.exponent());
  }
  return {};
}

void visit_unique(const Expr& root, const std::function<void(const Expr&)>& fn) {
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> stack{&root};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    fn(*e);
    for (std::size_t i = 0; i < e->arity(); ++i) stack.push_back(&e->child(i));
  }
}

}  // namespace

std::string to_string(const Expr& e) { return render(e); }

int max_coordinate(const Expr& e) {
  int best = 0;
  visit_unique(e, [&](const Expr& node) {
    if (node.kind() == ExprKind::Coord || node.kind() == ExprKind::ConjCoord) {
      best = std::max(best, node.index());
    }
  });
  return best;
}

std::size_t node_count(const Expr& e) {
  std::size_t count = 0;
  visit_unique(e, [&](const Expr&) { ++count; });
  return count;
}

}  // namespace chernkit
