#include "chernkit/mixed.hpp"

#include <cmath>
#include <stdexcept>

#include "chernkit/frame.hpp"
#include "chernkit/random.hpp"
#include "chernkit/parallel.hpp"

namespace chernkit {

MixedParams::MixedParams(double a, double b) : alpha(a), beta(b) {
  if (std::abs(a) + std::abs(b) == 0.0) throw std::invalid_argument("mixed curvature needs alpha or beta nonzero");
}

SphereQuartic::SphereQuartic(const ChernCurvature& Rc, const Matrix& g, MixedParams params) : params_(params) {
  const RicciBundle bundle = ricci_bundle(Rc, g);
  const Matrix E = orthonormal_frame(g);
  R_ = change_frame(Rc.R, E);
  rho_ = frame_components(bundle.rho1, E);
}

double SphereQuartic::value(const Vector& Z) const {
  const int n = dim();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = Z(i) * std::conj(Z(j));
  Complex ric{};
  Complex quartic{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ric += rho_(i, j) * w(i, j);
      Complex inner{};
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) inner += R_(i, j, k, l) * w(k, l);
      quartic += inner * w(i, j);
    }
  }
  return params_.alpha * ric.real() + params_.beta * quartic.real();
}

Vector SphereQuartic::gradient(const Vector& Z) const {
  const int n = dim();
  Vector out = Vector::Zero(n);
  for (int m = 0; m < n; ++m) {
    Complex ric{};
    for (int a = 0; a < n; ++a) ric += rho_(a, m) * Z(a);
    Complex quartic{};
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) {
        const Complex zz = Z(a) * Z(c);
        for (int d = 0; d < n; ++d) {
          quartic += R_(a, m, c, d) * zz * std::conj(Z(d));
          quartic += R_(a, d, c, m) * zz * std::conj(Z(d));
        }
      }
    }
    out(m) = 2.0 * (params_.alpha * ric + params_.beta * quartic);
  }
  return out;
}

double mixed_curvature(const ChernCurvature& Rc, const Matrix& g, MixedParams params, const Vector& X) {
  if (X.size() != Rc.dim()) throw std::invalid_argument("vector dimension does not match curvature");
  if (X.squaredNorm() == 0.0) throw std::invalid_argument("mixed curvature of the zero vector");
  const RicciBundle bundle = ricci_bundle(Rc, g);
  const double len2 = hermitian_form(g, X, X).real();
  const double ric = hermitian_form(bundle.rho1, X, X).real() / len2;
  return params.alpha * ric + params.beta * holomorphic_sectional(Rc, g, X);
}

double sphere_average_closed_form(const RicciBundle& bundle, MixedParams params, int n) {
  return (((n + 1) * params.alpha + params.beta) * bundle.u + params.beta * bundle.v) / (n * (n + 1.0));
}

namespace {

constexpr long kChunk = 4096;

struct Moments {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double total = static_cast<double>(count + o.count);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / total;
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

Vector random_unit(Rng& rng, int n) {
  Vector z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.complex_normal();
  const double len = z.norm();
  return len > 0.0 ? Vector(z / len) : Vector(Vector::Unit(n, 0));
}

}  // namespace

MonteCarloEstimate sphere_average_monte_carlo(const ChernCurvature& Rc, const Matrix& g, MixedParams params,
                                              const MonteCarloOptions& options) {
  if (options.samples < 1000) throw std::invalid_argument("Monte Carlo average needs at least 1000 samples");
  const SphereQuartic f(Rc, g, params);
  const int n = f.dim();
  const std::size_t chunks = static_cast<std::size_t>((options.samples + kChunk - 1) / kChunk);
  std::vector<Moments> parts(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    Rng rng(Rng::split(options.seed, c));
    const long begin = static_cast<long>(c) * kChunk;
    const long end = std::min(options.samples, begin + kChunk);
    for (long s = begin; s < end; ++s) parts[c].add(f.value(random_unit(rng, n)));
  });
  Moments all;
  for (const Moments& m : parts) all.merge(m);
  MonteCarloEstimate out;
  out.samples = all.count;
  out.mean = all.mean;
  const double var = all.count > 1 ? std::max(0.0, all.m2) / static_cast<double>(all.count - 1) : 0.0;
  out.standard_error = std::sqrt(var / static_cast<double>(all.count));
  return out;
}

namespace {

struct Run {
  Vector Z;
  double value = 0.0;
  double gradient = 0.0;
  bool converged = false;
};

Vector tangent(const Vector& Z, const Vector& G) { return G - Z.dot(G).real() * Z; }

// Ascent of sign * f from Z. Armijo backtracking while the predicted gain
// is resolvable in f; below that, fixed short gradient steps, which still
// shrink the projected gradient.
Run climb(const SphereQuartic& f, Vector Z, double sign, double scale, const ExtremizeOptions& opt) {
  double fz = sign * f.value(Z);
  const double t0 = 1.0 / (4.0 * scale);
  const double t_polish = 1.0 / (8.0 * scale);
  const double t_max = 1e3 * t0;
  double t = t0;
  bool polish = false;
  bool converged = false;
  for (int it = 0; it < opt.max_iter; ++it) {
    const Vector P = tangent(Z, sign * f.gradient(Z));
    const double pn = P.norm();
    if (pn < opt.tol) {
      converged = true;
      break;
    }
    if (polish) {
      Z += t_polish * P;
      Z /= Z.norm();
      fz = sign * f.value(Z);
      continue;
    }
    t = std::min(2.0 * t, t_max);
    bool accepted = false;
    while (t > 1e-10 * t0) {
      Vector trial = Z + t * P;
      trial /= trial.norm();
      const double ft = sign * f.value(trial);
      if (ft > fz + 1e-4 * t * pn * pn) {
        Z = trial;
        fz = ft;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) polish = true;
  }
  Run best;
  best.Z = Z;
  best.value = sign * fz;
  best.gradient = tangent(Z, sign * f.gradient(Z)).norm();
  best.converged = converged || best.gradient < opt.tol;
  return best;
}

std::vector<Vector> starting_points(int n, const ExtremizeOptions& opt) {
  std::vector<Vector> starts;
  for (int a = 0; a < n; ++a) starts.push_back(Vector::Unit(n, a));
  const double h = 1.0 / std::sqrt(2.0);
  const Complex phases[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (const Complex& c : phases) {
        Vector z = Vector::Zero(n);
        z(a) = h;
        z(b) = c * h;
        starts.push_back(z);
      }
    }
  }
  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng(Rng::split(opt.seed, static_cast<std::uint64_t>(r)));
    starts.push_back(random_unit(rng, n));
  }
  return starts;
}

}  // namespace

ExtremumReport extremize(const ChernCurvature& Rc, const Matrix& g, MixedParams params,
                         const ExtremizeOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("extremize needs at least one restart");
  if (!(options.tol > 0.0)) throw std::invalid_argument("extremize tolerance must be positive");
  const SphereQuartic f(Rc, g, params);
  const int n = f.dim();
  const double scale = std::abs(params.alpha) * max_abs(f.ricci()) * n +
                       std::abs(params.beta) * f.curvature().max_abs() * n * n;
  const std::vector<Vector> starts = starting_points(n, options);

  ExtremumReport report;
  report.restarts_used = static_cast<int>(starts.size());
  if (scale == 0.0) {
    report.argmin = report.argmax = starts.front();
    report.converged = true;
    return report;
  }

  std::vector<Run> highs(starts.size());
  std::vector<Run> lows(starts.size());
  parallel_for(starts.size(), options.threads, [&](std::size_t s) {
    highs[s] = climb(f, starts[s], 1.0, scale, options);
    lows[s] = climb(f, starts[s], -1.0, scale, options);
  });
  std::size_t hi = 0;
  std::size_t lo = 0;
  for (std::size_t s = 1; s < starts.size(); ++s) {
    if (highs[s].value > highs[hi].value) hi = s;
    if (lows[s].value < lows[lo].value) lo = s;
  }
  report.max_value = highs[hi].value;
  report.min_value = lows[lo].value;
  report.argmax = highs[hi].Z;
  report.argmin = lows[lo].Z;
  report.max_gradient = highs[hi].gradient;
  report.min_gradient = lows[lo].gradient;
  report.converged = highs[hi].converged && lows[lo].converged;
  if (report.max_value < report.min_value) report.max_value = report.min_value;
  report.spread = report.max_value - report.min_value;
  return report;
}

Tensor4 constancy_tensor(const ChernCurvature& Rc, const Matrix& g, MixedParams params, double c) {
  const int n = Rc.dim();
  const Matrix ric = ricci_bundle(Rc, g).rho1;
  const Tensor4& R = Rc.R;
  const double a = params.alpha;
  const double b = params.beta;
  Tensor4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Complex lhs = a * (ric(i, j) * g(k, l) + ric(k, j) * g(i, l) + ric(i, l) * g(k, j) + ric(k, l) * g(i, j)) +
                              b * (R(i, j, k, l) + R(k, j, i, l) + R(i, l, k, j) + R(k, l, i, j));
          out(i, j, k, l) = lhs - 2.0 * c * (g(i, j) * g(k, l) + g(i, l) * g(k, j));
        }
  return out;
}

double constancy_tensor_residual(const ChernCurvature& Rc, const Matrix& g, MixedParams params, double c) {
  return constancy_tensor(Rc, g, params, c).max_abs();
}

double trace_identity_residual(const RicciBundle& bundle, const Matrix& g, MixedParams params, double f) {
  const int n = static_cast<int>(g.rows());
  const double a = params.alpha;
  const double b = params.beta;
  const Matrix lhs = (a * (n + 2) + b) * bundle.rho1 + b * bundle.rho2 + b * (bundle.rho3 + bundle.rho4);
  const Matrix rhs = (2.0 * (n + 1) * f - a * bundle.u) * g;
  const double matrix_residual = max_abs(lhs - rhs);
  const double scalar_residual = std::abs((a * (n + 1) + b) * bundle.u + b * bundle.v - n * (n + 1.0) * f);
  return std::max(matrix_residual, scalar_residual);
}

}  // namespace chernkit
