#pragma once

// Text format for Hermitian metrics in local holomorphic coordinates.
//
//   # comment
//   name hopf-2                  optional label
//   dim 2
//   let r = abs2(z)              named sub-expression
//   g[1,1] = 1/r                 1-based; omitted entries are 0
//   g[2,2] = 1/r
//   domain annulus 0.5 2         ball R | annulus R1 R2 | polydisc R |
//                                product F1; F2; ...  (one factor per coordinate)
//
// Statements end at a newline or ';'. A `domain product` statement runs to
// the end of its line, its ';' separating the factors.
//
// Expressions: literals 2, 1.5e-3, 2i (imaginary), i; coordinates z1..zN and
// zbar1..zbarN; abs2(z) = sum z_k zbar_k and abs2(zK) = zK zbarK; conj, exp,
// log; + - * / and ^ with an integer exponent; parentheses.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chernkit/domain.hpp"
#include "chernkit/expr.hpp"

namespace chernkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// A metric g_{i jbar} given entrywise as expressions.
struct MetricSpec {
  int n = 0;
  std::vector<Expr> entries;  // row-major, entries[i * n + j] = g_{i jbar}, 0-based
  std::string name;
  Domain domain = Domain::ball(1.0);

  MetricSpec() = default;
  MetricSpec(int dim, std::string label, Domain dom);

  const Expr& entry(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  Expr& entry(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }
};

MetricSpec parse_metric(std::string_view source);

/// Parses a single expression in n coordinates, e.g. a conformal factor.
Expr parse_expression(std::string_view source, int n,
                      const std::map<std::string, Expr, std::less<>>& bindings = {});

/// Renders a spec in the DSL. Nonzero entries only; `let` bindings are inlined.
std::string to_dsl(const MetricSpec& spec);

}  // namespace chernkit
