#include "chernkit/analysis.hpp"

#include <stdexcept>
#include <string>

namespace chernkit {

PointAnalysis analyze(const SymbolicJet& metric, std::span<const Complex> p) {
  PointAnalysis a;
  a.jet = metric.at(p);
  a.coordinate = chern_curvature(a.jet);
  a.unitary = to_unitary_frame(a.coordinate, a.jet);
  const int n = a.jet.dim();
  a.ricci = ricci_bundle(a.unitary, Matrix::Identity(n, n));
  a.torsion = torsion(a.jet);
  a.kahler_defect = kahler_defect(a.jet);
  a.kahler_like_defect = kahler_like_defect(a.unitary);
  return a;
}

double quantity(const PointAnalysis& a, std::string_view name) {
  const int n = a.jet.dim();
  auto need = [&](int k) {
    if (n < k) throw std::invalid_argument("quantity " + std::string(name) + " needs dimension >= " + std::to_string(k));
  };
  if (name == "u") return a.ricci.u;
  if (name == "v") return a.ricci.v;
  if (name == "eta_norm2") return a.torsion.eta_norm2;
  if (name == "H_e1") return a.unitary.R(0, 0, 0, 0).real();
  if (name == "R_1111") return a.unitary.R(0, 0, 0, 0).real();
  if (name == "R_2222") {
    need(2);
    return a.unitary.R(1, 1, 1, 1).real();
  }
  if (name == "rho1_11") return a.ricci.rho1(0, 0).real();
  if (name == "rho1_22") {
    need(2);
    return a.ricci.rho1(1, 1).real();
  }
  if (name == "rho1_12") {
    need(2);
    return std::abs(a.ricci.rho1(0, 1));
  }
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

}  // namespace chernkit
