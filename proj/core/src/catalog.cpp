#include "chernkit/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace chernkit {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::ClosedForm: return "closed-form";
    case Origin::Derived: return "derived";
    case Origin::Trivial: return "trivial";
  }
  return "derived";
}

namespace {

constexpr int kMaxDim = 4;

std::string coord(char prefix, int k) { return std::string(prefix == 'z' ? "z" : "zbar") + std::to_string(k); }

std::string euclidean_source(int n) {
  std::ostringstream s;
  s << "name euclidean-" << n << "\ndim " << n << "\n";
  for (int i = 1; i <= n; ++i) s << "g[" << i << "," << i << "] = 1\n";
  s << "domain ball 1\n";
  return s.str();
}

// Kahler potential +-log(1 +- |z|^2): g = delta/w -+ zbar_i z_j / w^2.
std::string space_form_source(const std::string& name, int n, int sign) {
  std::ostringstream s;
  s << "name " << name << "\ndim " << n << "\n";
  s << "let w = 1 " << (sign > 0 ? "+" : "-") << " abs2(z)\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      s << "g[" << i << "," << j << "] = ";
      if (i == j) s << "1/w " << (sign > 0 ? "- " : "+ ");
      else if (sign > 0) s << "-";
      s << coord('b', i) << "*" << coord('z', j) << "/w^2\n";
    }
  }
  s << "domain ball 0.8\n";
  return s.str();
}

std::string hopf_source(const std::string& name, int n) {
  std::ostringstream s;
  s << "name " << name << "\ndim " << n << "\nlet r = abs2(z)\n";
  for (int i = 1; i <= n; ++i) s << "g[" << i << "," << i << "] = 1/r\n";
  s << "domain annulus 0.5 2\n";
  return s.str();
}

std::string adm_source() {
  return "name adm-product-surface\n"
         "dim 2\n"
         "g[1,1] = 2/(1 - z1*zbar1)^2\n"
         "g[2,2] = 2/(1 + z2*zbar2)^2\n"
         "domain product ball 0.6; ball 2\n";
}

bool split_family(std::string_view name, std::string_view family, int& n) {
  if (name.size() != family.size() + 2 || name.substr(0, family.size()) != family || name[family.size()] != '-')
    return false;
  const char c = name.back();
  if (c < '1' || c > '0' + kMaxDim) return false;
  n = c - '0';
  return true;
}

CatalogEntry make(std::string name, std::string source, bool kahler, std::string notes) {
  CatalogEntry e;
  e.name = std::move(name);
  e.source = std::move(source);
  e.spec = parse_metric(e.source);
  e.kahler = kahler;
  e.notes = std::move(notes);
  return e;
}

}  // namespace

CatalogEntry builtin(std::string_view name) {
  int n = 0;
  if (split_family(name, "euclidean", n)) {
    CatalogEntry e = make(std::string(name), euclidean_source(n), true, "flat metric on the unit ball");
    for (const char* q : {"u", "v", "eta_norm2", "H_e1"}) e.expected.push_back({q, 0.0, 1e-12, Origin::Trivial});
    return e;
  }
  if (split_family(name, "fubini-study", n)) {
    CatalogEntry e = make(std::string(name), space_form_source(std::string(name), n, 1), true,
                          "potential log(1 + |z|^2); constant holomorphic sectional curvature 2");
    const double s = n * (n + 1.0);
    e.expected = {{"H_e1", 2.0, 1e-9, Origin::Derived},
                  {"u", s, 1e-9, Origin::Derived},
                  {"v", s, 1e-9, Origin::Derived},
                  {"eta_norm2", 0.0, 1e-12, Origin::Trivial}};
    return e;
  }
  if (split_family(name, "complex-hyperbolic", n)) {
    CatalogEntry e = make(std::string(name), space_form_source(std::string(name), n, -1), true,
                          "potential -log(1 - |z|^2); constant holomorphic sectional curvature -2");
    const double s = -n * (n + 1.0);
    e.expected = {{"H_e1", -2.0, 1e-9, Origin::Derived},
                  {"u", s, 1e-9, Origin::Derived},
                  {"v", s, 1e-9, Origin::Derived},
                  {"eta_norm2", 0.0, 1e-12, Origin::Trivial}};
    return e;
  }
  if (split_family(name, "hopf", n)) {
    CatalogEntry e = make(std::string(name), hopf_source(std::string(name), n), n == 1,
                          "g = delta / |z|^2 on C^n minus the origin; mixed curvature vanishes for n alpha + beta = 0");
    e.expected = {{"u", n * (n - 1.0), 1e-10, Origin::ClosedForm},
                  {"v", n - 1.0, 1e-10, Origin::ClosedForm},
                  {"eta_norm2", (n - 1.0) * (n - 1.0), 1e-9, Origin::Derived}};
    return e;
  }
  if (name == "adm-product-surface") {
    CatalogEntry e = make("adm-product-surface", adm_source(), true,
                          "product of a disc of curvature -1 and a sphere chart of curvature 1; "
                          "mixed curvature vanishes for alpha + beta = 0");
    e.expected = {{"R_1111", -1.0, 1e-9, Origin::ClosedForm}, {"R_2222", 1.0, 1e-9, Origin::ClosedForm},
                  {"rho1_11", -1.0, 1e-9, Origin::ClosedForm}, {"rho1_22", 1.0, 1e-9, Origin::ClosedForm},
                  {"rho1_12", 0.0, 1e-9, Origin::ClosedForm},  {"u", 0.0, 1e-9, Origin::Derived},
                  {"v", 0.0, 1e-9, Origin::Derived}};
    return e;
  }
  if (name == "isosceles-hopf-surface") {
    std::string src = hopf_source("isosceles-hopf-surface", 2);
    CatalogEntry e = make("isosceles-hopf-surface", src, false,
                          "standard Hopf metric, which descends to every isosceles Hopf surface; "
                          "mixed curvature vanishes for 2 alpha + beta = 0");
    e.expected = {{"u", 2.0, 1e-10, Origin::ClosedForm},
                  {"v", 1.0, 1e-10, Origin::ClosedForm},
                  {"eta_norm2", 1.0, 1e-9, Origin::Derived}};
    return e;
  }
  throw std::invalid_argument("unknown catalog metric '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const char* family : {"euclidean", "fubini-study", "complex-hyperbolic", "hopf"})
    for (int n = 1; n <= kMaxDim; ++n) out.push_back(std::string(family) + "-" + std::to_string(n));
  out.push_back("adm-product-surface");
  out.push_back("isosceles-hopf-surface");
  return out;
}

std::string catalog_source(std::string_view name) { return builtin(name).source; }

std::vector<Point> sample_points(const CatalogEntry& entry, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be at least 1");
  return sample_domain(entry.spec.domain, entry.spec.n, count, seed);
}

}  // namespace chernkit
