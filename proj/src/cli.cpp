#include "cgas/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgas/droplet.hpp"
#include "cgas/equilibrium.hpp"
#include "cgas/errors.hpp"
#include "cgas/norms.hpp"
#include "cgas/oracles.hpp"
#include "cgas/partition.hpp"
#include "cgas/special_fn.hpp"

#ifndef CGAS_VERSION
#define CGAS_VERSION "0.0.0"
#endif

namespace cgas {

namespace {

using Value = std::variant<double, long, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string text_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string text_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return text_number(*d);
  if (const auto* l = std::get_if<long>(&v)) return std::to_string(*l);
  return std::get<std::string>(v);
}

nlohmann::json json_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* l = std::get_if<long>(&v)) return *l;
  return std::get<std::string>(v);
}

void emit(std::ostream& out, const std::string& format, const Record& rec) {
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec) j[k] = json_value(v);
    out << j.dump() << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << rec[i].first;
    out << "\n";
    for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << text_value(rec[i].second);
    out << "\n";
  } else if (rec.size() == 1 && std::holds_alternative<double>(rec[0].second)) {
    out << text_value(rec[0].second) << "\n";
  } else {
    for (std::size_t i = 0; i < rec.size(); ++i)
      out << (i ? " " : "") << rec[i].first << "=" << text_value(rec[i].second);
    out << "\n";
  }
}

std::vector<long> parse_ns(const std::string& s) {
  std::vector<long> ns;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v <= 0)
      throw CLI::ValidationError("--Ns", "expected comma-separated positive integers, got '" + s + "'");
    ns.push_back(v);
  }
  if (ns.empty()) throw CLI::ValidationError("--Ns", "empty list");
  return ns;
}

struct Options {
  std::string format = "text";
  unsigned threads = 0;
  double quad_tol = 1e-12;

  std::string potential = "ginibre";
  double scale = 1.0;
  double lambda = 1.0;
  double c = 1.0;
  double alpha = 1.0;
  double R = 1.0;

  long N = 0;
  long j = 0;
  std::string ensemble = "normal";
  std::string convention = "physics";
  std::string method = "exact";
  bool terms = false;
  std::string model = "ml";
  bool compare = false;
  std::string which = "sum_v_normal";
  std::string ns = "100,200,400,800";
  std::string out_path;
};

RadialPotential make_potential(const Options& o) {
  if (o.potential == "ginibre") return RadialPotential::ginibre(o.scale);
  if (o.potential == "ml") return RadialPotential::mittag_leffler(o.lambda, o.c);
  return RadialPotential::truncated_unitary(o.alpha, o.R);
}

ExecOptions exec_of(const Options& o) { return {o.threads, o.quad_tol}; }

QuadOptions quad_of(const Options& o) {
  QuadOptions q;
  q.rel_tol = o.quad_tol;
  return q;
}

int run(const std::string& cmd, const Options& o, std::ostream& out) {
  const RadialPotential p = cmd == "oracle" ? RadialPotential::ginibre() : make_potential(o);
  const Ensemble ens = parse_ensemble(o.ensemble);
  const Convention conv = parse_convention(o.convention);

  if (cmd == "droplet") {
    const Droplet d = droplet_of(p);
    emit(out, o.format, {{"r0", d.r0}, {"r1", d.r1}, {"kind", std::string(to_string(d.kind))}});
  } else if (cmd == "equilibrium") {
    const EquilibriumReport r = equilibrium_report(p, quad_of(o));
    emit(out, o.format,
         {{"energy", r.energy},
          {"entropy", r.entropy},
          {"log_potential_origin", r.log_potential_origin},
          {"f_term", r.f_term},
          {"mass", r.mass},
          {"r0", r.droplet.r0},
          {"r1", r.droplet.r1},
          {"kind", std::string(to_string(r.droplet.kind))}});
  } else if (cmd == "zw") {
    const ZWCoefficients z = zw_coefficients(p, quad_of(o));
    const EquilibriumReport r = equilibrium_report(p, quad_of(o));
    emit(out, o.format,
         {{"f0", z.f0},
          {"f_half", z.f_half},
          {"f1", z.f1},
          {"f0_plus_energy", z.f0 + r.energy},
          {"f_half_plus_half_entropy", z.f_half + r.entropy / 2.0},
          {"f1_minus_f_disc", z.f1 - r.f_term}});
  } else if (cmd == "norm") {
    const NormQuery nq{o.N, o.j, ens};
    double v = 0.0;
    if (o.method == "exact")
      v = log_norm_exact(p, nq, quad_of(o));
    else if (o.method == "laplace")
      v = log_norm_laplace(p, nq);
    else if (o.method == "lowdeg")
      v = log_norm_lowdeg(p, nq);
    else
      v = log_norm_highdeg(p, nq);
    emit(out, o.format, {{"log_norm", v}});
  } else if (cmd == "exact") {
    emit(out, o.format, {{"log_z_exact", log_z_exact(p, o.N, ens, conv, exec_of(o))}});
  } else if (cmd == "expand") {
    const ExpansionTerms t = expansion_terms(p, ens, conv);
    if (o.terms) {
      emit(out, o.format,
           {{"c_n2", t.c_n2}, {"c_nlogn", t.c_nlogn}, {"c_n", t.c_n}, {"c_logn", t.c_logn}, {"c_1", t.c_1}});
    } else {
      emit(out, o.format, {{"log_z_asymptotic", t.evaluate(double(o.N))}});
    }
  } else if (cmd == "oracle") {
    double closed = 0.0;
    std::optional<RadialPotential> q;
    if (o.model == "ml") {
      closed = ml_log_z(o.lambda, o.c, o.N, ens);
      q = RadialPotential::mittag_leffler(o.lambda, o.c);
    } else {
      closed = tu_log_z(o.alpha, o.R, o.N, ens);
      q = RadialPotential::truncated_unitary(o.alpha, o.R);
    }
    if (conv == Convention::canonical) closed -= ln_factorial(o.N);
    if (o.compare) {
      const double exact = log_z_exact(*q, o.N, ens, conv, exec_of(o));
      emit(out, o.format, {{"log_z_oracle", closed}, {"log_z_exact", exact}, {"difference", exact - closed}});
    } else {
      emit(out, o.format, {{"log_z_oracle", closed}});
    }
  } else if (cmd == "lemmas") {
    const LemmaSumResult r = lemma_sum(p, o.N, parse_lemma_sum(o.which));
    emit(out, o.format, {{"direct", r.direct}, {"predicted", r.predicted}, {"gap", r.direct - r.predicted}});
  } else if (cmd == "converge") {
    const ConvergenceTable t = convergence_study(p, parse_ns(o.ns), ens, conv, exec_of(o));
    const std::string csv = to_csv(t);
    if (!o.out_path.empty()) {
      std::ofstream f(o.out_path, std::ios::binary);
      if (!f) throw CLI::ValidationError("--out", "cannot open '" + o.out_path + "' for writing");
      f << csv;
      emit(out, o.format,
           {{"fitted_exponent", t.fitted_exponent},
            {"fit_r2", t.fit_r2},
            {"rows", static_cast<long>(t.rows.size())},
            {"out", o.out_path}});
    } else if (o.format == "json") {
      nlohmann::ordered_json j;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : t.rows)
        j["rows"].push_back({{"N", r.N}, {"log_z_exact", r.exact}, {"log_z_asymptotic", r.asymptotic},
                             {"residual", r.residual}});
      j["fitted_exponent"] = json_value(t.fitted_exponent);
      j["fit_r2"] = json_value(t.fit_r2);
      j["underflow"] = t.underflow;
      out << j.dump() << "\n";
    } else {
      out << csv;
    }
  }
  return exit_ok;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Log-partition functions of 2D Coulomb gases with radial potentials", "cgas"};
  app.set_version_flag("--version", std::string("cgas ") + CGAS_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = all available)")->capture_default_str();
  app.add_option("--quad-tol", o.quad_tol, "Relative quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--potential", o.potential, "Potential family")
      ->check(CLI::IsMember({"ginibre", "ml", "tu"}))
      ->capture_default_str();
  app.add_option("--scale", o.scale, "Ginibre scale")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--lambda", o.lambda, "Mittag-Leffler exponent")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--c", o.c, "Mittag-Leffler point charge")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--alpha", o.alpha, "Truncated unitary alpha")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--R", o.R, "Truncated unitary radius")->check(CLI::PositiveNumber)->capture_default_str();

  auto add_n = [&](CLI::App* sub) {
    return sub->add_option("--N", o.N, "Particle number")->check(CLI::PositiveNumber)->required();
  };
  auto add_ensemble = [&](CLI::App* sub) {
    sub->add_option("--ensemble", o.ensemble, "normal or symplectic")
        ->check(CLI::IsMember({"normal", "symplectic"}))
        ->capture_default_str();
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", o.convention, "physics (Z_N) or canonical (Z_N/N!)")
        ->check(CLI::IsMember({"physics", "canonical"}))
        ->capture_default_str();
  };

  app.add_subcommand("droplet", "Droplet radii and kind");
  app.add_subcommand("equilibrium", "Equilibrium energy, entropy, potential at 0 and F term");
  app.add_subcommand("zw", "Zabrodin-Wiegmann coefficients and identification residuals");

  auto* norm = app.add_subcommand("norm", "Log of one orthogonal norm");
  add_n(norm);
  norm->add_option("--j", o.j, "Degree")->check(CLI::NonNegativeNumber)->required();
  add_ensemble(norm);
  norm->add_option("--method", o.method, "exact, laplace, lowdeg or highdeg")
      ->check(CLI::IsMember({"exact", "laplace", "lowdeg", "highdeg"}))
      ->capture_default_str();

  auto* exact = app.add_subcommand("exact", "log Z_N from exact norms");
  add_n(exact);
  add_ensemble(exact);
  add_convention(exact);

  auto* expand = app.add_subcommand("expand", "Large-N expansion of log Z_N");
  auto* expand_n = expand->add_option("--N", o.N, "Particle number")->check(CLI::PositiveNumber);
  add_ensemble(expand);
  add_convention(expand);
  expand->add_flag("--terms", o.terms, "Print the five coefficients instead of the value");

  auto* oracle = app.add_subcommand("oracle", "Closed-form log Z_N");
  oracle->add_option("--model", o.model, "ml or tu")->check(CLI::IsMember({"ml", "tu"}))->capture_default_str();
  add_n(oracle);
  add_ensemble(oracle);
  add_convention(oracle);
  oracle->add_flag("--compare", o.compare, "Also print the quadrature value and the difference");

  auto* lemmas = app.add_subcommand("lemmas", "Partial sums over the tau grid against their predictions");
  add_n(lemmas);
  lemmas->add_option("--which", o.which, "Which sum")
      ->check(CLI::IsMember({"sum_v_normal", "sum_logdq_normal", "sum_logr_normal", "sum_v_symp_odd",
                             "sum_logdq_symp_odd", "sum_logr_symp_odd"}))
      ->capture_default_str();

  auto* converge = app.add_subcommand("converge", "Residuals exact - asymptotic over a list of N");
  converge->add_option("--Ns", o.ns, "Comma-separated ascending N values")->capture_default_str();
  add_ensemble(converge);
  add_convention(converge);
  converge->add_option("--out", o.out_path, "CSV output path (stdout when absent)");

  try {
    app.parse(argc, argv);
    if (expand->parsed() && !o.terms && expand_n->count() == 0)
      throw CLI::RequiredError("--N (or --terms)");
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const IntegrationError& e) {
    err << "integration error: " << e.what() << "\n";
    return exit_numerical;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return exit_numerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_numerical;
  }
}

}  // namespace cgas
