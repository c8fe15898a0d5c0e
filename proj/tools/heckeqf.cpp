// Command-line frontend: every pipeline with reproducible, machine-readable
// output.  Exit codes: 0 success / all checks pass, 1 a verification check
// failed, 2 bad usage or configuration.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "heckeqf/arith.hpp"
#include "heckeqf/asymptotics.hpp"
#include "heckeqf/dirichlet.hpp"
#include "heckeqf/eigenform.hpp"
#include "heckeqf/io.hpp"
#include "heckeqf/parallel.hpp"
#include "heckeqf/qform.hpp"
#include "heckeqf/symmpower.hpp"

namespace {

using namespace heckeqf;

struct OutStream {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = nullptr;
};

OutStream open_output(const std::string& path) {
  OutStream out;
  if (path.empty() || path == "-") {
    out.os = &std::cout;
    return out;
  }
  out.file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*out.file) throw std::runtime_error("cannot open output file: " + path);
  out.os = out.file.get();
  return out;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

// Coefficient tables are materialized in memory; 10^7 already means minutes
// of eta-product arithmetic and hundreds of MB of bigints.
constexpr uint64_t kMaxTableLimit = 10000000;

bool check_formula_disc(long long disc, std::string* err) {
  if (!is_valid_discriminant(disc)) {
    *err = "discriminant must be negative and 0 or 1 (mod 4)";
    return false;
  }
  if (!in_class_number_one_registry(disc)) {
    *err = "discriminant is outside the thirteen-entry class-number-one registry";
    return false;
  }
  return true;
}

int cmd_eigenform(int weight, uint32_t limit, const std::string& format, const std::string& out_path) {
  if (!is_supported_weight(weight)) return fail_usage("weight must be one of 12, 16, 18, 20, 22, 26");
  if (limit < 1 || limit > kMaxTableLimit) return fail_usage("limit must be in [1, 10^7]");
  Eigenform f = make_eigenform(weight, limit);
  OutStream out = open_output(out_path);
  std::ostream& os = *out.os;
  if (format == "json") {
    os << "{\"schema\":\"heckeqf.eigenform.v1\",\"weight\":" << weight << ",\"limit\":" << limit
       << ",\"rows\":[";
    for (uint32_t n = 1; n <= limit; ++n) {
      if (n > 1) os << ",";
      os << "[" << n << ",\"" << f.a[n].get_str() << "\"," << format_double17(f.lambda[n]) << "]";
    }
    os << "]}\n";
  } else {
    os << "# schema: heckeqf.eigenform.v1\n";
    os << "n,a_n,lambda_n\n";
    for (uint32_t n = 1; n <= limit; ++n) {
      os << n << "," << f.a[n].get_str() << "," << format_double17(f.lambda[n]) << "\n";
    }
  }
  return 0;
}

int cmd_qform(long long disc, uint32_t limit, bool limit_given, const std::string& format,
              const std::string& out_path) {
  if (!is_valid_discriminant(disc)) return fail_usage("discriminant must be negative and 0 or 1 (mod 4)");
  if (limit_given && limit > kMaxTableLimit) return fail_usage("limit must be at most 10^7");
  OutStream out = open_output(out_path);
  std::ostream& os = *out.os;

  std::vector<QuadForm> forms = reduced_forms(disc);
  if (limit_given) {
    // Theta coefficient table of the principal (first reduced) form.
    const QuadForm& q = forms.front();
    std::vector<uint64_t> theta = theta_coefficients(q, limit);
    if (format == "json") {
      os << "{\"schema\":\"heckeqf.qform.theta.v1\",\"d\":" << disc << ",\"form\":{\"a\":" << q.a
         << ",\"b\":" << q.b << ",\"c\":" << q.c << "},\"limit\":" << limit << ",\"r_q\":[";
      for (uint32_t n = 0; n <= limit; ++n) {
        if (n > 0) os << ",";
        os << theta[n];
      }
      os << "]}\n";
    } else {
      os << "# schema: heckeqf.qform.theta.v1\n";
      os << "# d=" << disc << " a=" << q.a << " b=" << q.b << " c=" << q.c << "\n";
      os << "n,r_q_n\n";
      for (uint32_t n = 0; n <= limit; ++n) os << n << "," << theta[n] << "\n";
    }
    return 0;
  }

  uint32_t h = static_cast<uint32_t>(forms.size());
  int w = automorph_weight(disc);
  if (format == "json") {
    os << "{\"schema\":\"heckeqf.qform.v1\",\"d\":" << disc << ",\"h\":" << h << ",\"w_d\":" << w
       << ",\"class_number_one\":" << (h == 1 ? "true" : "false") << ",\"forms\":[";
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (i > 0) os << ",";
      os << "{\"a\":" << forms[i].a << ",\"b\":" << forms[i].b << ",\"c\":" << forms[i].c << "}";
    }
    os << "]}\n";
  } else {
    os << "# schema: heckeqf.qform.v1\n";
    os << "# d=" << disc << " h=" << h << " w_d=" << w << "\n";
    os << "a,b,c\n";
    for (const QuadForm& q : forms) os << q.a << "," << q.b << "," << q.c << "\n";
  }
  return 0;
}

int cmd_sums(int weight, long long disc, unsigned r, uint64_t x, uint64_t grid_start,
             double grid_ratio, unsigned workers, const std::string& format,
             const std::string& out_path) {
  std::string err;
  if (!is_supported_weight(weight)) return fail_usage("weight must be one of 12, 16, 18, 20, 22, 26");
  if (!check_formula_disc(disc, &err)) return fail_usage(err);
  if (r < 1 || r > 8) return fail_usage("r must be in 1..8");
  if (x < 1 || x > kMaxTableLimit) return fail_usage("x must be in [1, 10^7]");
  if (grid_start < 1 || grid_ratio <= 1.0) return fail_usage("need grid-start >= 1 and grid-ratio > 1");

  FactorTable table(static_cast<uint32_t>(x));
  Eigenform f = make_eigenform(weight, static_cast<uint32_t>(x));
  std::vector<uint64_t> grid = checkpoint_grid(grid_start, grid_ratio, x);
  if (grid.empty() || grid.back() != x) grid.push_back(x);
  PartialSumSeries series = compute_series(f, disc, r, grid, table, workers);

  OutStream out = open_output(out_path);
  std::ostream& os = *out.os;
  if (format == "json") {
    os << "{\"schema\":\"heckeqf.sums.v1\",\"weight\":" << weight << ",\"disc\":" << disc
       << ",\"r\":" << r << ",\"x\":" << x << ",\"grid_start\":" << grid_start
       << ",\"grid_ratio\":" << format_double17(grid_ratio) << ",\"checkpoints\":[";
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
      if (i > 0) os << ",";
      os << "[" << series.checkpoints[i].first << "," << format_double17(series.checkpoints[i].second)
         << "]";
    }
    os << "]}\n";
  } else {
    os << "# schema: heckeqf.sums.v1\n";
    os << "# weight=" << weight << " disc=" << disc << " r=" << r << " x=" << x
       << " grid_start=" << grid_start << " grid_ratio=" << format_double17(grid_ratio) << "\n";
    os << "x,s_r\n";
    for (const auto& [cx, s] : series.checkpoints) os << cx << "," << format_double17(s) << "\n";
  }
  return 0;
}

int cmd_decomp(int weight, long long disc, unsigned r, uint32_t limit, unsigned workers,
               const std::string& format, const std::string& out_path, const std::string& series) {
  std::string err;
  if (!is_supported_weight(weight)) return fail_usage("weight must be one of 12, 16, 18, 20, 22, 26");
  if (!check_formula_disc(disc, &err)) return fail_usage(err);
  if (r < 1 || r > 8) return fail_usage("r must be in 1..8");
  if (!series.empty() && series != "r" && series != "l" && series != "u")
    return fail_usage("series must be one of r, l, u");
  if (limit > kMaxTableLimit) return fail_usage("limit must be in [1, 10^7]");
  if (limit == 0) limit = (r <= 4) ? 5000 : 2000;

  FactorTable table(limit);
  Eigenform f = make_eigenform(weight, limit);
  DecompositionSpec ledger = DecompositionSpec::lemma_ledger(r);
  DirichletCoeffs r_series = build_r_series(r, f, disc, limit, table);
  DirichletCoeffs l_series = build_l_series(ledger, f, disc, limit, table, workers);
  DirichletCoeffs u_series = convolve(invert(l_series), r_series);
  DirichletCoeffs recon = convolve(l_series, u_series);

  if (!series.empty()) {
    // bare coefficient table of the chosen series
    const DirichletCoeffs& chosen = (series == "r") ? r_series : (series == "l") ? l_series : u_series;
    OutStream out = open_output(out_path);
    std::ostream& os = *out.os;
    if (format == "json") {
      os << "{\"schema\":\"heckeqf.dirichlet.v1\",\"weight\":" << weight << ",\"disc\":" << disc
         << ",\"r\":" << r << ",\"series\":\"" << series << "\",\"limit\":" << limit << ",\"c\":[";
      for (uint32_t n = 1; n <= limit; ++n) {
        if (n > 1) os << ",";
        os << format_double17(chosen.c[n]);
      }
      os << "]}\n";
    } else {
      os << "# schema: heckeqf.dirichlet.v1\n";
      os << "# weight=" << weight << " disc=" << disc << " r=" << r << " series=" << series << "\n";
      os << "n,c_n\n";
      for (uint32_t n = 1; n <= limit; ++n) os << n << "," << format_double17(chosen.c[n]) << "\n";
    }
    return 0;
  }

  const double w = static_cast<double>(automorph_weight(disc));
  const double u1_err = std::abs(u_series.c[1] - w);
  double max_u_squarefree = 0.0;
  double max_recon_rel = 0.0;
  bool recon_ok = true;
  for (uint32_t n = 1; n <= limit; ++n) {
    if (n > 1) {
      bool squarefree = true;
      for (const auto& [p, e] : table.factorize(n)) {
        if (e > 1) {
          squarefree = false;
          break;
        }
      }
      if (squarefree) max_u_squarefree = std::max(max_u_squarefree, std::abs(u_series.c[n]));
    }
    const double resid = std::abs(recon.c[n] - r_series.c[n]);
    const double allowed = std::max(1e-8 * std::abs(r_series.c[n]), 1e-10);
    if (resid > allowed) recon_ok = false;
    if (std::abs(r_series.c[n]) > 1e-10)
      max_recon_rel = std::max(max_recon_rel, resid / std::abs(r_series.c[n]));
  }
  const bool u1_ok = u1_err <= 1e-8;
  const bool squarefree_ok = max_u_squarefree <= 1e-8;
  const bool pass = u1_ok && squarefree_ok && recon_ok;

  OutStream out = open_output(out_path);
  std::ostream& os = *out.os;
  if (format == "json") {
    os << "{\"schema\":\"heckeqf.decomp.v1\",\"weight\":" << weight << ",\"disc\":" << disc
       << ",\"r\":" << r << ",\"limit\":" << limit << ",\"degree_total\":" << ledger.degree_total()
       << ",\"ledger\":[";
    for (std::size_t i = 0; i < ledger.factors.size(); ++i) {
      const LFactor& lf = ledger.factors[i];
      if (i > 0) os << ",";
      os << "{\"label\":\"" << json_escape(lf.label()) << "\",\"m\":" << lf.sym_m
         << ",\"n\":" << lf.sym_n << ",\"twisted\":" << (lf.twisted ? "true" : "false")
         << ",\"exponent\":" << lf.exponent << ",\"degree\":" << lf.degree() << "}";
    }
    os << "],\"u1\":" << format_double17(u_series.c[1])
       << ",\"u1_abs_error\":" << format_double17(u1_err)
       << ",\"max_abs_u_squarefree\":" << format_double17(max_u_squarefree)
       << ",\"max_recon_rel_residual\":" << format_double17(max_recon_rel)
       << ",\"checks\":{\"u1\":" << (u1_ok ? "true" : "false")
       << ",\"squarefree_vanishing\":" << (squarefree_ok ? "true" : "false")
       << ",\"reconstruction\":" << (recon_ok ? "true" : "false")
       << "},\"pass\":" << (pass ? "true" : "false") << "}\n";
  } else {
    os << "# schema: heckeqf.decomp.v1\n";
    os << "# weight=" << weight << " disc=" << disc << " r=" << r << " limit=" << limit
       << " degree_total=" << ledger.degree_total() << "\n";
    os << "n,r_n,reconstructed_n,residual,u_n\n";
    for (uint32_t n = 1; n <= limit; ++n) {
      os << n << "," << format_double17(r_series.c[n]) << "," << format_double17(recon.c[n]) << ","
         << format_double17(recon.c[n] - r_series.c[n]) << "," << format_double17(u_series.c[n])
         << "\n";
    }
    os << "# u1=" << format_double17(u_series.c[1])
       << " max_abs_u_squarefree=" << format_double17(max_u_squarefree)
       << " max_recon_rel_residual=" << format_double17(max_recon_rel) << "\n";
    os << "# result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  std::cerr << "decomp r=" << r << " D=" << disc << " X=" << limit << ": "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_signs(int weight, long long disc, uint64_t x, const std::string& format,
              const std::string& out_path) {
  std::string err;
  if (!is_supported_weight(weight)) return fail_usage("weight must be one of 12, 16, 18, 20, 22, 26");
  if (!check_formula_disc(disc, &err)) return fail_usage(err);
  if (x < 1 || 2 * x > kMaxTableLimit) return fail_usage("x must be in [1, 5 * 10^6]");

  FactorTable table(static_cast<uint32_t>(2 * x));
  Eigenform f = make_eigenform(weight, static_cast<uint32_t>(2 * x));
  SignChangeReport report = count_sign_changes(f, disc, x, table);

  OutStream out = open_output(out_path);
  std::ostream& os = *out.os;
  if (format == "csv") {
    os << "# schema: heckeqf.signs.v1\n";
    os << "# weight=" << weight << " disc=" << disc << " x=" << x << " count=" << report.count
       << " bound=" << format_double17(report.bound)
       << " threshold=" << format_double17(report.threshold)
       << " verdict=" << (report.verdict ? "PASS" : "FAIL") << "\n";
    os << "location\n";
    for (uint32_t n : report.locations) os << n << "\n";
  } else {
    os << "{\"schema\":\"heckeqf.signs.v1\",\"weight\":" << weight << ",\"disc\":" << disc
       << ",\"x\":" << x << ",\"interval\":{\"from_exclusive\":" << x
       << ",\"to_inclusive\":" << 2 * x << "},\"count\":" << report.count
       << ",\"bound\":" << format_double17(report.bound)
       << ",\"threshold\":" << format_double17(report.threshold)
       << ",\"verdict\":" << (report.verdict ? "true" : "false") << ",\"locations\":[";
    for (std::size_t i = 0; i < report.locations.size(); ++i) {
      if (i > 0) os << ",";
      os << report.locations[i];
    }
    os << "]}\n";
  }
  std::cerr << "signs D=" << disc << " x=" << x << ": count=" << report.count << " "
            << (report.verdict ? "PASS" : "FAIL") << "\n";
  return report.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke eigenform coefficient sums at binary-quadratic-form values"};
  app.require_subcommand(1);

  int weight = 12;
  long long disc = -4;
  unsigned r = 2;
  uint32_t limit = 0;
  uint64_t x = 10000;
  uint64_t grid_start = 1000;
  double grid_ratio = 1.5;
  std::string series;
  unsigned workers = heckeqf::default_workers();
  std::string format;
  std::string out_path = "-";

  CLI::App* sc_eigenform = app.add_subcommand("eigenform", "emit n, a_n, lambda_n for n <= limit");
  sc_eigenform->add_option("--weight", weight, "eigenform weight");
  sc_eigenform->add_option("--limit", limit, "coefficient limit X")->required();
  sc_eigenform->add_option("--format", format, "csv|json");
  sc_eigenform->add_option("--out", out_path, "output path or - for stdout");

  CLI::App* sc_qform = app.add_subcommand("qform", "reduced forms / theta coefficients");
  sc_qform->add_option("--disc", disc, "discriminant D < 0")->required();
  CLI::Option* qform_limit = sc_qform->add_option("--limit", limit, "emit r_Q(0..X) when given");
  sc_qform->add_option("--format", format, "csv|json");
  sc_qform->add_option("--out", out_path, "output path");

  CLI::App* sc_sums = app.add_subcommand("sums", "partial sums S_r over a checkpoint grid");
  sc_sums->add_option("--weight", weight, "eigenform weight");
  sc_sums->add_option("--disc", disc, "discriminant (class number 1)")->required();
  sc_sums->add_option("--r", r, "power r in 1..8");
  sc_sums->add_option("--x", x, "largest checkpoint")->required();
  sc_sums->add_option("--grid-start", grid_start, "first checkpoint");
  sc_sums->add_option("--grid-ratio", grid_ratio, "geometric grid ratio");
  sc_sums->add_option("--workers", workers, "worker threads");
  sc_sums->add_option("--format", format, "csv|json");
  sc_sums->add_option("--out", out_path, "output path");

  CLI::App* sc_decomp = app.add_subcommand("decomp", "coefficient-level L-function decomposition check");
  sc_decomp->add_option("--weight", weight, "eigenform weight");
  sc_decomp->add_option("--disc", disc, "discriminant (class number 1)")->required();
  sc_decomp->add_option("--r", r, "power r in 1..8");
  sc_decomp->add_option("--limit", limit, "coefficient limit (default 5000 for r <= 4, else 2000)");
  sc_decomp->add_option("--series", series, "emit one coefficient table instead: r|l|u");
  sc_decomp->add_option("--workers", workers, "worker threads");
  sc_decomp->add_option("--format", format, "csv|json");
  sc_decomp->add_option("--out", out_path, "output path");

  CLI::App* sc_signs = app.add_subcommand("signs", "sign changes of lambda over represented n in (x, 2x]");
  sc_signs->add_option("--weight", weight, "eigenform weight");
  sc_signs->add_option("--disc", disc, "discriminant (class number 1)")->required();
  sc_signs->add_option("--x", x, "interval start")->required();
  sc_signs->add_option("--format", format, "csv|json");
  sc_signs->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!format.empty() && format != "csv" && format != "json") {
    return fail_usage("format must be csv or json");
  }

  try {
    if (sc_eigenform->parsed()) {
      if (format.empty()) format = "csv";
      return cmd_eigenform(weight, limit, format, out_path);
    }
    if (sc_qform->parsed()) {
      if (format.empty()) format = qform_limit->count() > 0 ? "csv" : "json";
      return cmd_qform(disc, limit, qform_limit->count() > 0, format, out_path);
    }
    if (sc_sums->parsed()) {
      if (format.empty()) format = "csv";
      return cmd_sums(weight, disc, r, x, grid_start, grid_ratio, workers, format, out_path);
    }
    if (sc_decomp->parsed()) {
      if (format.empty()) format = "csv";
      return cmd_decomp(weight, disc, r, limit, workers, format, out_path, series);
    }
    if (sc_signs->parsed()) {
      if (format.empty()) format = "json";
      return cmd_signs(weight, disc, x, format, out_path);
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return fail_usage("no subcommand");
}
