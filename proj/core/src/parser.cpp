#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "chernkit/dsl.hpp"

namespace chernkit {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

MetricSpec::MetricSpec(int dim, std::string label, Domain dom)
    : n(dim), entries(static_cast<std::size_t>(dim) * dim), name(std::move(label)), domain(std::move(dom)) {}

namespace {

enum class Tok {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Equals,
  Semicolon,
  Newline,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  bool imaginary = false;
  int line = 1;
  int column = 1;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = scan();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  /// Raw text from the current position to the next ';', newline or '#'.
  std::string raw_until_separator() {
    lookahead_.reset();
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != ';' && src_[pos_] != '\n' && src_[pos_] != '#') advance();
    std::string s(src_.substr(start, pos_ - start));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skip_blanks();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      return scan_number(t);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    advance();
    t.text = std::string(1, c);
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case ',': t.kind = Tok::Comma; break;
      case '=': t.kind = Tok::Equals; break;
      case ';': t.kind = Tok::Semicolon; break;
      case '\n': t.kind = Tok::Newline; break;
      default:
        throw ParseError(t.line, t.column, "unexpected character '" + t.text + "'");
    }
    return t;
  }

  Token scan_number(Token& t) {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        while (pos_ < look) advance();
        digits();
      }
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(t.line, t.column, "malformed number '" + std::string(text) + "'");
    }
    t.kind = Tok::Number;
    t.text = std::string(text);
    t.number = value;
    if (pos_ < src_.size() && src_[pos_] == 'i' && !(pos_ + 1 < src_.size() && ident_char(src_[pos_ + 1]))) {
      advance();
      t.imaginary = true;
      t.text += 'i';
    }
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> lookahead_;
};

const std::set<std::string, std::less<>> kReserved = {"i",   "z",    "g",      "dim",  "let",  "domain", "name",
                                                      "exp", "log",  "conj",   "abs2", "ball", "annulus",
                                                      "polydisc", "product"};

std::optional<int> coordinate_suffix(std::string_view ident, std::string_view prefix) {
  if (ident.size() <= prefix.size() || ident.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = ident.substr(prefix.size());
  int k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  MetricSpec parse_program() {
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::End) break;
      if (t.kind == Tok::Newline || t.kind == Tok::Semicolon) {
        lex_.next();
        continue;
      }
      statement();
      end_of_statement();
    }
    if (n_ == 0) {
      const Token& t = lex_.peek();
      throw ParseError(t.line, t.column, "missing 'dim N' statement");
    }
    MetricSpec spec(n_, name_, domain_.value_or(Domain::ball(1.0)));
    for (auto& [key, e] : assigned_) spec.entry(key.first, key.second) = e;
    if (spec.domain.kind == Domain::Kind::Product && static_cast<int>(spec.domain.factors.size()) != n_) {
      throw ParseError(domain_line_, domain_column_,
                       "product domain has " + std::to_string(spec.domain.factors.size()) +
                           " factors but dim is " + std::to_string(n_));
    }
    return spec;
  }

  Expr parse_single(int n, const std::map<std::string, Expr, std::less<>>& bindings) {
    n_ = n;
    for (const auto& [k, v] : bindings) lets_.emplace(k, v);
    Expr e = expression();
    while (lex_.peek().kind == Tok::Newline || lex_.peek().kind == Tok::Semicolon) lex_.next();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError(t.line, t.column, "unexpected '" + t.text + "' after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  Token expect(Tok kind, const char* what) {
    Token t = lex_.next();
    if (t.kind != kind) fail(t, std::string("expected ") + what + describe(t));
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return " but reached end of input";
      case Tok::Newline: return " but reached end of line";
      default: return " but found '" + t.text + "'";
    }
  }

  void end_of_statement() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Newline || t.kind == Tok::Semicolon || t.kind == Tok::End) return;
    fail(t, "unexpected '" + t.text + "' at end of statement");
  }

  int integer(const Token& t, const char* what) {
    if (t.kind != Tok::Number || t.imaginary || t.number != std::floor(t.number) || std::abs(t.number) > 1e9) {
      fail(t, std::string("expected integer ") + what + describe(t));
    }
    return static_cast<int>(t.number);
  }

  double real_number() {
    Token t = lex_.next();
    double sign = 1.0;
    if (t.kind == Tok::Minus) {
      sign = -1.0;
      t = lex_.next();
    }
    if (t.kind != Tok::Number || t.imaginary) fail(t, "expected real number" + describe(t));
    return sign * t.number;
  }

  void require_dim(const Token& t) {
    if (n_ == 0) fail(t, "'dim N' must come before this statement");
  }

  void statement() {
    Token t = lex_.next();
    if (t.kind != Tok::Ident) fail(t, "expected a statement (dim, let, g[i,j], domain, name)" + describe(t));
    if (t.text == "dim") {
      if (n_ != 0) fail(t, "duplicate 'dim' statement");
      Token v = lex_.next();
      const int n = integer(v, "dimension");
      if (n < 1) fail(v, "dimension must be >= 1");
      n_ = n;
    } else if (t.text == "name") {
      name_ = lex_.raw_until_separator();
      if (name_.empty()) fail(t, "empty name");
    } else if (t.text == "let") {
      require_dim(t);
      Token id = expect(Tok::Ident, "name after 'let'");
      if (kReserved.count(id.text) || coordinate_suffix(id.text, "z") || coordinate_suffix(id.text, "zbar")) {
        fail(id, "'" + id.text + "' is reserved");
      }
      if (lets_.count(id.text)) fail(id, "'" + id.text + "' is already defined");
      expect(Tok::Equals, "'='");
      Expr e = expression();
      lets_.emplace(id.text, std::move(e));
    } else if (t.text == "g") {
      require_dim(t);
      expect(Tok::LBracket, "'['");
      Token ti = lex_.next();
      const int i = integer(ti, "row index");
      expect(Tok::Comma, "','");
      Token tj = lex_.next();
      const int j = integer(tj, "column index");
      expect(Tok::RBracket, "']'");
      if (i < 1 || i > n_) fail(ti, "row index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
      if (j < 1 || j > n_) fail(tj, "column index " + std::to_string(j) + " outside 1.." + std::to_string(n_));
      expect(Tok::Equals, "'='");
      Expr e = expression();
      if (!assigned_.emplace(std::pair{i - 1, j - 1}, std::move(e)).second) {
        fail(t, "duplicate assignment to g[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
    } else if (t.text == "domain") {
      if (domain_) fail(t, "duplicate 'domain' statement");
      domain_line_ = t.line;
      domain_column_ = t.column;
      domain_ = domain_spec();
    } else {
      fail(t, "unknown statement '" + t.text + "'");
    }
  }

  Domain single_domain(const Token& kw) {
    try {
      if (kw.text == "ball") return Domain::ball(real_number());
      if (kw.text == "polydisc") return Domain::polydisc(real_number());
      if (kw.text == "annulus") {
        const double r1 = real_number();
        const double r2 = real_number();
        return Domain::annulus(r1, r2);
      }
    } catch (const std::invalid_argument& e) {
      fail(kw, e.what());
    }
    fail(kw, "unknown domain kind '" + kw.text + "'");
  }

  Domain domain_spec() {
    Token kw = expect(Tok::Ident, "domain kind");
    if (kw.text != "product") return single_domain(kw);
    std::vector<Domain> factors;
    for (;;) {
      Token f = expect(Tok::Ident, "domain factor");
      factors.push_back(single_domain(f));
      if (lex_.peek().kind != Tok::Semicolon) break;
      lex_.next();
    }
    return Domain::product(std::move(factors));
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k != Tok::Plus && k != Tok::Minus) return lhs;
      lex_.next();
      Expr rhs = term();
      lhs = k == Tok::Plus ? lhs + rhs : lhs - rhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k != Tok::Star && k != Tok::Slash) return lhs;
      lex_.next();
      Expr rhs = unary();
      lhs = k == Tok::Star ? lhs * rhs : lhs / rhs;
    }
  }

  Expr unary() {
    const Tok k = lex_.peek().kind;
    if (k == Tok::Minus) {
      lex_.next();
      return -unary();
    }
    if (k == Tok::Plus) {
      lex_.next();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.next();
    bool parens = false;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      parens = true;
    }
    int sign = 1;
    if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
      if (lex_.next().kind == Tok::Minus) sign = -1;
    }
    Token t = lex_.next();
    const int exponent = integer(t, "exponent");
    if (parens) expect(Tok::RParen, "')'");
    return pow(base, sign * exponent);
  }

  Expr coordinate(const Token& t, int k, bool conjugate) {
    if (k < 1 || k > n_) {
      fail(t, "coordinate '" + t.text + "' outside dimension " + std::to_string(n_));
    }
    return conjugate ? Expr::conj_coord(k) : Expr::coord(k);
  }

  Expr primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Number:
        return t.imaginary ? Expr(Complex{0.0, t.number}) : Expr(t.number);
      case Tok::LParen: {
        Expr e = expression();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        break;
      default:
        fail(t, "expected expression" + describe(t));
    }
    if (t.text == "i") return Expr(Complex{0.0, 1.0});
    if (t.text == "exp" || t.text == "log" || t.text == "conj") {
      expect(Tok::LParen, "'('");
      Expr arg = expression();
      expect(Tok::RParen, "')'");
      if (t.text == "exp") return exp(arg);
      if (t.text == "log") return log(arg);
      return conj(arg);
    }
    if (t.text == "abs2") {
      expect(Tok::LParen, "'('");
      Token a = expect(Tok::Ident, "'z' or 'zK' inside abs2");
      expect(Tok::RParen, "')'");
      if (a.text == "z") {
        if (!abs2_) abs2_ = abs2(n_);
        return *abs2_;
      }
      if (auto k = coordinate_suffix(a.text, "z")) {
        return coordinate(a, *k, false) * coordinate(a, *k, true);
      }
      fail(a, "abs2 expects 'z' or 'zK'");
    }
    if (auto k = coordinate_suffix(t.text, "zbar")) return coordinate(t, *k, true);
    if (auto k = coordinate_suffix(t.text, "z")) return coordinate(t, *k, false);
    if (auto it = lets_.find(t.text); it != lets_.end()) return it->second;
    fail(t, "unknown identifier '" + t.text + "'");
  }

  Lexer lex_;
  int n_ = 0;
  std::string name_;
  std::optional<Domain> domain_;
  int domain_line_ = 0;
  int domain_column_ = 0;
  std::optional<Expr> abs2_;
  std::map<std::string, Expr, std::less<>> lets_;
  std::map<std::pair<int, int>, Expr> assigned_;
};

}  // namespace

MetricSpec parse_metric(std::string_view source) { return Parser(source).parse_program(); }

Expr parse_expression(std::string_view source, int n, const std::map<std::string, Expr, std::less<>>& bindings) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  return Parser(source).parse_single(n, bindings);
}

std::string to_dsl(const MetricSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name " + spec.name + "\n";
  out += "dim " + std::to_string(spec.n) + "\n";
  out += "domain " + spec.domain.to_string() + "\n";
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      const Expr& e = spec.entry(i, j);
      if (e.is_constant(0.0)) continue;
      out += "g[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + to_string(e) + "\n";
    }
  }
  return out;
}

}  // namespace chernkit
