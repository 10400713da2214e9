// curveode: exact series expansions, differential operators and special
// functions attached to plane-curve charts.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "curveode/curve.hpp"
#include "curveode/diffop.hpp"
#include "curveode/error.hpp"
#include "curveode/eval.hpp"
#include "curveode/io.hpp"
#include "curveode/special.hpp"

namespace {

using namespace curveode;

// A value that starts with '{' is inline JSON; anything else is a file path.
std::string read_input(const std::string& spec) {
  size_t first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return spec;
  std::ifstream in(spec, std::ios::binary);
  if (!in) fail(errc::config_error, "cannot open '" + spec + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::config_error, "cannot write '" + out_path + "'");
  out << text;
}

std::vector<Rational> parse_init(const std::string& text) {
  std::vector<Rational> init;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    size_t end = comma == std::string::npos ? text.size() : comma;
    std::string item = text.substr(pos, end - pos);
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) {
      fail(errc::invalid_argument, "empty entry in --init list");
    }
    init.push_back(parse_rational(item.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (init.empty()) fail(errc::invalid_argument, "--init list is empty");
  return init;
}

std::string basis_to_csv(const std::vector<SeriesFunction>& basis) {
  std::string out = "k";
  for (size_t i = 0; i < basis.size(); ++i) out += ",w" + std::to_string(i);
  out += '\n';
  long trunc = 0;
  for (const SeriesFunction& w : basis) {
    trunc = std::max(trunc, static_cast<long>(w.h.coeffs().size()) - 1);
  }
  for (long k = 0; k <= trunc && !basis.empty(); ++k) {
    out += std::to_string(k);
    for (const SeriesFunction& w : basis) {
      out += ',';
      out += to_string(w.h.at(k));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential equations attached to algebraic curves"};
  app.require_subcommand(1);

  std::string chart_spec, expr_text, init_text, in_spec, grid_spec, out_path;
  std::string format = "json";
  long trunc = 16;
  long n = 0;
  long nmax = 8;
  bool perturb = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* expand = app.add_subcommand(
      "expand", "expand the branch u(T) of a chart by Newton lifting");
  expand->add_option("--chart", chart_spec, "chart JSON (path or inline)")
      ->required();
  expand->add_option("--trunc", trunc, "truncation degree N")->default_val(16);
  add_common(expand);

  CLI::App* embed = app.add_subcommand(
      "embed", "embed a coordinate expression as a Laurent series");
  embed->add_option("--chart", chart_spec, "chart JSON (path or inline)")
      ->required();
  embed->add_option("--expr", expr_text, "expression in the chart coordinates")
      ->required();
  embed->add_option("--trunc", trunc, "knowledge horizon N")->default_val(16);
  add_common(embed);

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "solution basis of the operator attached to an expression");
  solve_cmd->add_option("--chart", chart_spec, "chart JSON (path or inline)")
      ->required();
  solve_cmd->add_option("--expr", expr_text, "expression defining the symbol")
      ->required();
  solve_cmd->add_option("--trunc", trunc, "truncation degree N")->default_val(16);
  add_common(solve_cmd);

  CLI::App* ivp = app.add_subcommand(
      "ivp", "unique solution with prescribed derivatives at 0");
  ivp->add_option("--chart", chart_spec, "chart JSON (path or inline)")
      ->required();
  ivp->add_option("--expr", expr_text, "expression defining the symbol")
      ->required();
  ivp->add_option("--init", init_text,
                  "comma-separated initial derivatives, one per degree")
      ->required();
  ivp->add_option("--trunc", trunc, "truncation degree N")->default_val(16);
  add_common(ivp);

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "sample a solution on a grid with tail bounds");
  eval_cmd->add_option("--in", in_spec, "solution JSON (path or inline)")
      ->required();
  eval_cmd->add_option("--grid", grid_spec, "grid as lo:hi:count")->required();
  add_common(eval_cmd);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the Bessel verification suite");
  verify->add_option("--nmax", nmax, "largest index to verify")->default_val(8);
  verify->add_option("--trunc", trunc, "truncation degree N")->default_val(40);
  verify->add_flag("--perturb", perturb,
                   "corrupt one coefficient so the suite must fail (negative control)");
  add_common(verify);

  CLI::App* bessel = app.add_subcommand("bessel", "Bessel Taylor model J_n");
  bessel->add_option("--n", n, "index")->required();
  bessel->add_option("--trunc", trunc, "truncation degree N")->default_val(40);
  add_common(bessel);

  CLI::App* laguerre_cmd =
      app.add_subcommand("laguerre", "Laguerre polynomial model L_n");
  laguerre_cmd->add_option("--n", n, "index")->required();
  add_common(laguerre_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (expand->parsed()) {
      CurveChart chart = chart_from_json(read_input(chart_spec));
      TruncatedSeries u = expand_branch(chart, trunc);
      emit(format == "json" ? to_json(u) : to_csv(u), out_path);
      return 0;
    }
    if (embed->parsed()) {
      CurveChart chart = chart_from_json(read_input(chart_spec));
      LaurentSeries s = sharp_embed(expr_text, chart, trunc);
      emit(format == "json" ? to_json(s) : to_csv(s), out_path);
      return 0;
    }
    if (solve_cmd->parsed()) {
      CurveChart chart = chart_from_json(read_input(chart_spec));
      DiffOperator op(sharp_embed(expr_text, chart, trunc));
      if (op.degree() <= 0) {
        std::string note = "no solutions other than 0";
        emit(format == "json" ? basis_to_json(op.degree(), {}, note)
                              : basis_to_csv({}),
             out_path);
        return 0;
      }
      std::vector<SeriesFunction> basis = solve(op, trunc);
      emit(format == "json" ? basis_to_json(op.degree(), basis)
                            : basis_to_csv(basis),
           out_path);
      return 0;
    }
    if (ivp->parsed()) {
      CurveChart chart = chart_from_json(read_input(chart_spec));
      DiffOperator op(sharp_embed(expr_text, chart, trunc));
      SeriesFunction w = solve_ivp(op, parse_init(init_text), trunc);
      emit(format == "json" ? to_json(w) : to_csv(w), out_path);
      return 0;
    }
    if (eval_cmd->parsed()) {
      // Sample tables default to CSV; everything else defaults to JSON.
      if (eval_cmd->get_option("--format")->count() == 0) format = "csv";
      SeriesFunction w = function_from_json(read_input(in_spec));
      SampleTable table = eval_function(w, parse_grid(grid_spec));
      emit(format == "csv" ? to_csv(table) : table_to_json(table), out_path);
      return 0;
    }
    if (verify->parsed()) {
      VerifyReport report = verify_bessel_suite(nmax, trunc, perturb);
      emit(format == "json" ? report_to_json(report) : report_to_csv(report),
           out_path);
      return report.all_pass() ? 0 : 1;
    }
    if (bessel->parsed()) {
      SeriesFunction w = bessel_series(n, trunc);
      emit(format == "json" ? to_json(w) : to_csv(w), out_path);
      return 0;
    }
    if (laguerre_cmd->parsed()) {
      SeriesFunction w = laguerre(n);
      emit(format == "json" ? to_json(w) : to_csv(w), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cout << error_to_json(e.kind(), e.what());
    bool usage = e.code() == errc::config_error ||
                 e.code() == errc::invalid_argument;
    return usage ? 2 : 1;
  }
  return 2;
}
