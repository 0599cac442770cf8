#include "sbi_cli/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sbi/errors.hpp"
#include "sbi/expint.hpp"
#include "sbi/oracle.hpp"
#include "sbi/triple.hpp"
#include "sbi_cli/errata.hpp"
#include "sbi_cli/format.hpp"
#include "sbi_cli/grid.hpp"

namespace sbi::cli {
namespace {

const std::vector<std::string> kRowColumns = {"spec", "value", "method", "err_estimate", "status"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_precondition(const Error& e) {
  return dynamic_cast<const DomainError*>(&e) || dynamic_cast<const DivergenceError*>(&e) ||
         dynamic_cast<const UnsupportedError*>(&e) || dynamic_cast<const SingularError*>(&e);
}

struct Options {
  std::string n = "0", m = "0", h = "0", k = "0", l = "0", alpha = "1", beta = "1", mu = "1";
  std::string format = "csv";
  std::string output;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  std::string tail_policy = "exponential";

  Format fmt() const { return format == "json" ? Format::json : Format::csv; }

  oracle::QuadConfig quad() const {
    oracle::QuadConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_depth = max_depth;
    cfg.tail_policy = tail_policy == "period" ? oracle::TailPolicy::period_summation
                                              : oracle::TailPolicy::exponential_bound;
    return cfg;
  }

  std::vector<IntegralSpec> specs() const {
    try {
      return expand(parse_grid(n, m, h, k, l, alpha, beta, mu));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void write_spec_json(JsonWriter& w, const IntegralSpec& s) {
  w.begin_object();
  w.key("n").value(s.n);
  w.key("m");
  if (s.damping == Damping::imaginary_unit) {
    w.value("i");
  } else {
    w.value(s.m);
  }
  w.key("h").value(s.h).key("k").value(s.k).key("l").value(s.l);
  w.key("alpha").value(s.alpha).key("beta").value(s.beta).key("mu").value(s.mu);
  w.end_object();
}

// One output row: the fixed columns plus optional extra numeric columns.
struct Row {
  IntegralSpec spec;
  std::optional<EvalResult> result;
  std::string status;
  std::vector<std::pair<std::string, std::optional<ComplexValue>>> extra;
};

std::string render_rows(const std::vector<Row>& rows, const std::vector<std::string>& extra_columns,
                        Format format) {
  if (format == Format::csv) {
    std::vector<std::string> header = kRowColumns;
    header.insert(header.end(), extra_columns.begin(), extra_columns.end());
    std::string out = csv_row(header);
    for (const Row& r : rows) {
      std::vector<std::string> fields = {describe(r.spec)};
      if (r.result) {
        fields.push_back(format_complex(r.result->value));
        fields.push_back(to_string(r.result->method));
        fields.push_back(format_double(r.result->err_estimate));
      } else {
        fields.insert(fields.end(), {"", "", ""});
      }
      fields.push_back(r.status);
      for (const auto& [name, v] : r.extra) fields.push_back(v ? format_complex(*v) : "");
      out += csv_row(fields);
    }
    return out;
  }
  JsonWriter w;
  w.begin_array();
  for (const Row& r : rows) {
    w.begin_object();
    w.key("spec");
    write_spec_json(w, r.spec);
    if (r.result) {
      w.key("value").value(r.result->value);
      w.key("method").value(to_string(r.result->method));
      w.key("err_estimate").value(r.result->err_estimate);
    } else {
      w.key("value").null().key("method").null().key("err_estimate").null();
    }
    w.key("status").value(r.status);
    for (const auto& [name, v] : r.extra) {
      w.key(name);
      if (v) {
        w.value(*v);
      } else {
        w.null();
      }
    }
    w.end_object();
  }
  w.end_array();
  return w.str() + "\n";
}

std::string render_single(const Row& row, Format format) {
  if (format == Format::csv) return render_rows({row}, {}, format);
  JsonWriter w;
  w.begin_object();
  w.key("spec");
  write_spec_json(w, row.spec);
  w.key("value").value(row.result->value);
  w.key("method").value(to_string(row.result->method));
  w.key("err_estimate").value(row.result->err_estimate);
  w.key("status").value(row.status);
  w.end_object();
  return w.str() + "\n";
}

IntegralSpec single_spec(const Options& o) {
  const auto specs = o.specs();
  if (specs.size() != 1) throw UsageError("eval takes exactly one value per spec field");
  return specs.front();
}

std::string row_status_for(const Error& e) {
  if (dynamic_cast<const DivergenceError*>(&e)) return "divergent-precondition";
  return std::string("error: ") + e.what();
}

int write_output(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << text;
    return kOk;
  }
  std::filesystem::path path(o.output);
  const char* dir = std::getenv("SBI_OUTPUT_DIR");
  if (path.is_relative() && dir && *dir) path = std::filesystem::path(dir) / path;
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << path.string() << "\n";
    return kNumericalFailure;
  }
  file << text;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triple spherical Bessel integrals: closed forms, quadrature oracle and errata"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.name("sbi");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file");

  Options o;
  app.add_option("--n", o.n, "Power n (value, list a,b,c or range min:max:count)")->capture_default_str();
  app.add_option("--m", o.m, "Damping m >= 0, or i for the undamped e^{-ix}")->capture_default_str();
  app.add_option("--h", o.h, "Order h")->capture_default_str();
  app.add_option("--k", o.k, "Order k")->capture_default_str();
  app.add_option("--l", o.l, "Order l")->capture_default_str();
  app.add_option("--alpha", o.alpha, "Frequency alpha")->capture_default_str();
  app.add_option("--beta", o.beta, "Frequency beta")->capture_default_str();
  app.add_option("--mu", o.mu, "Frequency mu")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "Write to this file (relative paths resolve under $SBI_OUTPUT_DIR)");
  app.add_option("--abs-tol", o.abs_tol, "Oracle absolute tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rel-tol", o.rel_tol, "Oracle relative tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-depth", o.max_depth, "Oracle bisection depth limit")
      ->check(CLI::Range(10, 200))
      ->capture_default_str();
  app.add_option("--tail-policy", o.tail_policy, "Oracle tail handling")
      ->check(CLI::IsMember({"exponential", "period"}))
      ->capture_default_str();

  std::optional<double> eval_x;
  bool eval_definite = false;
  auto* eval = app.add_subcommand("eval", "Evaluate the closed form at --x or over (0, inf) with --definite");
  eval->add_option("--x", eval_x, "Point x > 0 of the antiderivative");
  eval->add_flag("--definite", eval_definite, "Definite integral over (0, inf)");

  std::optional<double> cmp_a, cmp_b;
  bool cmp_definite = false;
  double cmp_tol = 1e-7;
  auto* compare = app.add_subcommand("compare", "Compare closed forms with the quadrature oracle over a grid");
  compare->add_option("--a", cmp_a, "Lower limit of the finite interval");
  compare->add_option("--b", cmp_b, "Upper limit of the finite interval");
  compare->add_flag("--definite", cmp_definite, "Compare definite integrals over (0, inf)");
  compare->add_option("--cmp-tol", cmp_tol, "Pass when |closed - oracle| <= tol * max(1, |oracle|)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::optional<double> sweep_x;
  bool sweep_definite = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate closed forms over a parameter grid");
  sweep->add_option("--x", sweep_x, "Point x > 0 of the antiderivative");
  sweep->add_flag("--definite", sweep_definite, "Definite integrals over (0, inf)");

  double x_min = 0.0, x_max = 0.0;
  int count = 0;
  auto* ei_table = app.add_subcommand("ei-table", "Tabulate Ei(x) on an even grid, skipping x = 0");
  ei_table->add_option("--x-min", x_min, "Grid start")->required();
  ei_table->add_option("--x-max", x_max, "Grid end")->required();
  ei_table->add_option("--count", count, "Number of grid points")->required();

  auto* errata = app.add_subcommand("errata", "Report printed formulas that fail numerical checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format format = o.fmt();
    if (*eval) {
      const IntegralSpec spec = single_spec(o);
      if (!eval_definite && !eval_x) throw UsageError("eval needs --x or --definite");
      if (eval_definite && eval_x) throw UsageError("--x and --definite are mutually exclusive");
      Row row{spec, eval_definite ? triple::eval_definite(spec) : triple::eval_indefinite(spec, *eval_x), "ok", {}};
      return write_output(render_single(row, format), o, out, err);
    }
    if (*compare) {
      if (!cmp_definite && !(cmp_a && cmp_b)) throw UsageError("compare needs --a and --b, or --definite");
      if (cmp_definite && (cmp_a || cmp_b)) throw UsageError("--a/--b and --definite are mutually exclusive");
      if (!cmp_definite && !(*cmp_a < *cmp_b)) throw UsageError("compare needs --a < --b");
      const oracle::QuadConfig cfg = o.quad();
      cfg.validate();
      std::vector<Row> rows;
      bool failed = false;
      for (const IntegralSpec& spec : o.specs()) {
        Row row{spec, std::nullopt, "", {{"oracle_value", std::nullopt}, {"oracle_err", std::nullopt}, {"abs_diff", std::nullopt}}};
        try {
          EvalResult closed;
          EvalResult reference;
          if (cmp_definite) {
            closed = triple::eval_definite(spec);
            reference = oracle::quad_semi_infinite(spec, cfg);
          } else {
            closed = triple::eval_indefinite(spec, *cmp_b);
            const EvalResult lower = triple::eval_indefinite(spec, *cmp_a);
            closed.value -= lower.value;
            closed.err_estimate += lower.err_estimate;
            reference = oracle::quad_finite_complex(
                [&spec](double x) { return oracle::integrand(spec, x); }, *cmp_a, *cmp_b, cfg);
          }
          const double diff = std::abs(closed.value - reference.value);
          const bool pass = reference.converged && diff <= cmp_tol * std::max(1.0, std::abs(reference.value));
          row.result = closed;
          row.status = pass ? "pass" : "fail";
          row.extra[0].second = reference.value;
          row.extra[1].second = ComplexValue{reference.err_estimate, 0.0};
          row.extra[2].second = ComplexValue{diff, 0.0};
          failed = failed || !pass;
        } catch (const Error& e) {
          row.status = row_status_for(e);
          failed = failed || row.status != "divergent-precondition";
        }
        rows.push_back(std::move(row));
      }
      const int code = write_output(render_rows(rows, {"oracle_value", "oracle_err", "abs_diff"}, format), o, out, err);
      if (code != kOk) return code;
      return failed ? kCompareFailed : kOk;
    }
    if (*sweep) {
      if (!sweep_definite && !sweep_x) throw UsageError("sweep needs --x or --definite");
      std::vector<Row> rows;
      for (const IntegralSpec& spec : o.specs()) {
        Row row{spec, std::nullopt, "ok", {}};
        try {
          row.result = sweep_definite ? triple::eval_definite(spec) : triple::eval_indefinite(spec, *sweep_x);
        } catch (const Error& e) {
          row.status = row_status_for(e);
        }
        rows.push_back(std::move(row));
      }
      return write_output(render_rows(rows, {}, format), o, out, err);
    }
    if (*ei_table) {
      if (count < 2 || !(x_min < x_max)) throw UsageError("ei-table needs x-min < x-max and count >= 2");
      const double skip = 1e-12 * (x_max - x_min);
      std::string text;
      JsonWriter w;
      if (format == Format::csv) {
        text = csv_row({"x", "ei"});
      } else {
        w.begin_array();
      }
      for (int i = 0; i < count; ++i) {
        const double x = (x_min * (count - 1 - i) + x_max * i) / (count - 1);
        if (std::abs(x) <= skip) continue;
        const double v = expint::ei(x);
        if (format == Format::csv) {
          text += csv_row({format_double(x), format_double(v)});
        } else {
          w.begin_object().key("x").value(x).key("ei").value(v).end_object();
        }
      }
      if (format == Format::json) text = w.end_array().str() + "\n";
      return write_output(text, o, out, err);
    }
    if (*errata) {
      const auto entries = errata_entries();
      std::string text;
      if (format == Format::csv) {
        text = csv_row({"id", "quantity", "printed_form", "corrected_form", "point", "oracle_method", "printed",
                        "corrected", "oracle", "tolerance", "printed_matches", "corrected_matches"});
        for (const auto& e : entries) {
          text += csv_row({e.id, e.quantity, e.printed_form, e.corrected_form, e.point, e.oracle_method,
                           format_complex(e.printed), format_complex(e.corrected), format_complex(e.oracle),
                           format_double(e.tolerance), e.printed_matches() ? "true" : "false",
                           e.corrected_matches() ? "true" : "false"});
        }
      } else {
        JsonWriter w;
        w.begin_array();
        for (const auto& e : entries) {
          w.begin_object();
          w.key("id").value(e.id).key("quantity").value(e.quantity);
          w.key("printed_form").value(e.printed_form).key("corrected_form").value(e.corrected_form);
          w.key("point").value(e.point).key("oracle_method").value(e.oracle_method);
          w.key("printed").value(e.printed).key("corrected").value(e.corrected).key("oracle").value(e.oracle);
          w.key("tolerance").value(e.tolerance);
          w.key("printed_matches").value(e.printed_matches());
          w.key("corrected_matches").value(e.corrected_matches());
          w.end_object();
        }
        text = w.end_array().str() + "\n";
      }
      return write_output(text, o, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_precondition(e) ? kPrecondition : kNumericalFailure;
  }
  return kUsage;
}

}  // namespace sbi::cli
