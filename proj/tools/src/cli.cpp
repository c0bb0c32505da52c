#include "chernkit_tools/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chernkit/catalog.hpp"
#include "chernkit/jet.hpp"
#include "chernkit_tools/report.hpp"
#include "chernkit_tools/verify.hpp"

namespace chernkit::tools {

namespace {

struct Options {
  ReportConfig config;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<std::string> at;
  std::string out;
  std::string format = "table";
  std::string suite = "all";
  std::optional<double> tol;
  std::string show;
};

void add_report_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--metric,-m", o.config.metric, "catalog name or DSL file")->required();
  cmd->add_option("--points,-n", o.config.count, "number of sampled points")->check(CLI::PositiveNumber);
  cmd->add_option("--seed,-s", o.config.seed, "sampling seed");
  cmd->add_option("--at", o.at, "explicit point, comma-separated coordinates (repeatable)");
  cmd->add_option("--alpha,-a", o.alphas, "alpha of a mixed-curvature pair (repeatable)");
  cmd->add_option("--beta,-b", o.betas, "beta of a mixed-curvature pair (repeatable)");
  cmd->add_option("--conformal", o.config.conformal, "conformal factor F; the metric becomes exp(2F) g");
  cmd->add_option("--restarts", o.config.extremize.restarts, "random restarts per extremization")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", o.config.extremize.max_iter, "iteration cap per ascent")->check(CLI::PositiveNumber);
  cmd->add_option("--threads,-j", o.config.threads, "worker threads over points")->check(CLI::PositiveNumber);
  cmd->add_option("--out,-o", o.out, "write the report here instead of stdout");
}

std::optional<double> env_tolerance() {
  const char* v = std::getenv("CHERNKIT_TOL");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(t > 0.0)) throw InputError(std::string("CHERNKIT_TOL is not a positive number: ") + v);
  return t;
}

void finish_config(Options& o) {
  if (o.alphas.size() != o.betas.size()) throw InputError("--alpha and --beta must be given the same number of times");
  for (std::size_t i = 0; i < o.alphas.size(); ++i) {
    try {
      o.config.params.emplace_back(o.alphas[i], o.betas[i]);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (auto t = env_tolerance()) o.config.extremize.tol = *t;
}

void resolve_explicit_points(Options& o) {
  if (o.at.empty()) return;
  const int n = resolve_metric(o.config).spec.n;
  for (const std::string& text : o.at) o.config.points.push_back(parse_point(text, n));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern curvature toolkit for Hermitian metrics", "chernkit"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "curvature report at sampled or given points (JSON)");
  add_report_options(eval, o);

  CLI::App* ext = app.add_subcommand("extremize", "extrema of the mixed curvature over unit directions");
  add_report_options(ext, o);
  ext->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--suite", o.suite, "all, core, conformal, surface, mixed or catalog")
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--tol", o.tol, "replace every check tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--out,-o", o.out, "also write outcomes as JSON");

  CLI::App* catalog = app.add_subcommand("catalog", "built-in metrics");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "names and notes");
  CLI::App* show = catalog->add_subcommand("show", "print the DSL source of a metric");
  show->add_option("name", o.show)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (eval->parsed() || ext->parsed()) {
      finish_config(o);
      resolve_explicit_points(o);
      if (eval->parsed()) {
        const Report r = run_eval(o.config);
        emit(r.document.dump(2) + "\n", o.out, out);
        if (r.errors > 0) err << r.errors << " point(s) could not be evaluated\n";
        return r.errors > 0 ? kInputError : kSuccess;
      }
      const Report r = run_extremize(o.config);
      emit(o.format == "json" ? r.document.dump(2) + "\n" : extremize_table(r.document), o.out, out);
      if (r.non_converged > 0) err << r.non_converged << " extremization(s) did not converge\n";
      return r.errors > 0 ? kInputError : kSuccess;
    }
    if (verify->parsed()) {
      const std::optional<double> tol = o.tol ? o.tol : env_tolerance();
      const VerifySummary s = run_verify(o.suite, tol);
      print_summary(s, out);
      if (!o.out.empty()) {
        Json doc;
        doc["schema"] = 1;
        doc["command"] = "verify";
        doc["suite"] = o.suite;
        doc["failures"] = s.failures();
        Json checks = Json::array();
        for (const auto& c : s.checks)
          checks.push_back({{"id", c.id},
                            {"suite", c.suite},
                            {"metric", c.metric},
                            {"point", c.point},
                            {"residual", c.residual},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass},
                            {"origin", c.origin}});
        doc["checks"] = std::move(checks);
        emit(doc.dump(2) + "\n", o.out, out);
      }
      return s.all_pass() ? kSuccess : kVerificationFailed;
    }
    if (list->parsed()) {
      for (const std::string& name : catalog_names()) {
        const CatalogEntry e = builtin(name);
        out << name << "  dim " << e.spec.n << "  " << e.spec.domain.to_string() << (e.kahler ? "  kahler" : "")
            << "\n    " << e.notes << "\n";
      }
      return kSuccess;
    }
    if (show->parsed()) {
      try {
        out << catalog_source(o.show);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      return kSuccess;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kInputError;
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace chernkit::tools
