#include "chernkit/domain.hpp"

#include <cmath>
#include <stdexcept>

#include "chernkit/random.hpp"
#include "detail.hpp"

namespace chernkit {

namespace {

double norm2(std::span<const Complex> p) {
  double s = 0.0;
  for (const Complex& c : p) s += std::norm(c);
  return s;
}

std::string number(double x) { return detail::shortest(x); }

Complex sample_disc(Rng& rng, double inner, double outer) {
  for (;;) {
    const Complex c{rng.uniform(-outer, outer), rng.uniform(-outer, outer)};
    const double r = std::abs(c);
    if (r <= outer && r >= inner) return c;
  }
}

}  // namespace

Domain Domain::ball(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  Domain d;
  d.kind = Kind::Ball;
  d.outer = radius;
  return d;
}

Domain Domain::annulus(double inner, double outer) {
  if (!(inner >= 0.0 && outer > inner)) throw std::invalid_argument("annulus needs 0 <= R1 < R2");
  Domain d;
  d.kind = Kind::Annulus;
  d.inner = inner;
  d.outer = outer;
  return d;
}

Domain Domain::polydisc(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("polydisc radius must be positive");
  Domain d;
  d.kind = Kind::Polydisc;
  d.outer = radius;
  return d;
}

Domain Domain::product(std::vector<Domain> factors) {
  if (factors.empty()) throw std::invalid_argument("product domain needs factors");
  for (const Domain& f : factors) {
    if (f.kind == Kind::Product) throw std::invalid_argument("nested product domains are not supported");
  }
  Domain d;
  d.kind = Kind::Product;
  d.factors = std::move(factors);
  return d;
}

bool Domain::contains(std::span<const Complex> p) const {
  switch (kind) {
    case Kind::Ball:
      return norm2(p) <= outer * outer;
    case Kind::Annulus: {
      const double r2 = norm2(p);
      return r2 >= inner * inner && r2 <= outer * outer;
    }
    case Kind::Polydisc:
      for (const Complex& c : p) {
        if (std::abs(c) > outer) return false;
      }
      return true;
    case Kind::Product:
      if (p.size() != factors.size()) return false;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!factors[k].contains(p.subspan(k, 1))) return false;
      }
      return true;
  }
  return false;
}

std::string Domain::to_string() const {
  switch (kind) {
    case Kind::Ball:
      return "ball " + number(outer);
    case Kind::Annulus:
      return "annulus " + number(inner) + " " + number(outer);
    case Kind::Polydisc:
      return "polydisc " + number(outer);
    case Kind::Product: {
      std::string s = "product ";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) s += "; ";
        s += factors[k].to_string();
      }
      return s;
    }
  }
  return {};
}

std::vector<Point> sample_domain(const Domain& domain, int n, int count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (domain.kind == Domain::Kind::Product && static_cast<int>(domain.factors.size()) != n) {
    throw std::invalid_argument("product domain has " + std::to_string(domain.factors.size()) +
                                " factors for dimension " + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(points.size()) < count) {
    Point p(static_cast<std::size_t>(n));
    switch (domain.kind) {
      case Domain::Kind::Ball:
      case Domain::Kind::Annulus: {
        const double r = domain.outer;
        for (auto& c : p) c = {rng.uniform(-r, r), rng.uniform(-r, r)};
        if (!domain.contains(p)) continue;
        break;
      }
      case Domain::Kind::Polydisc:
        for (auto& c : p) c = sample_disc(rng, 0.0, domain.outer);
        break;
      case Domain::Kind::Product:
        for (int k = 0; k < n; ++k) {
          const Domain& f = domain.factors[static_cast<std::size_t>(k)];
          p[static_cast<std::size_t>(k)] =
              sample_disc(rng, f.kind == Domain::Kind::Annulus ? f.inner : 0.0, f.outer);
        }
        break;
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace chernkit
