#include "bandspec/cli.hpp"

#include <algorithm>
#include <cstdint>

#include "CLI11.hpp"
#include "bandspec/diagram.hpp"
#include "bandspec/document.hpp"
#include "bandspec/errors.hpp"
#include "bandspec/expr.hpp"
#include "bandspec/verify.hpp"

namespace bandspec {

namespace {

int cmd_spectrum(const std::string& expr_text, OperatorKind kind, bool as_json,
                 std::ostream& out) {
  const ExprPtr e = parse_expr(expr_text);
  SpectrumDocument doc;
  doc.expr = expr_text;
  doc.kind = kind;
  doc.degree = eval_meta(*e).degree;
  doc.bands = derived_spectrum(*e, kind).intervals();
  out << (as_json ? to_json(doc) : to_text(doc));
  return 0;
}

int cmd_verify(const std::string& expr_text, int trunc, double tol,
               std::uint64_t cap, bool as_json, std::ostream& out) {
  const ExprPtr e = parse_expr(expr_text);
  const VerificationReport report = verify_containment(*e, trunc, tol, cap);
  SpectrumDocument doc;
  doc.expr = expr_text;
  doc.kind = OperatorKind::Adjacency;
  doc.degree = eval_meta(*e).degree;
  doc.bands = report.predicted.intervals();
  doc.verification = VerificationSummary::from_report(report);
  out << (as_json ? to_json(doc) : to_text(doc));
  return report.passed() ? 0 : 1;
}

int cmd_diagram(const std::string& expr_text, OperatorKind kind,
                const std::string& out_path, std::ostream& out) {
  const ExprPtr e = parse_expr(expr_text);
  write_band_diagram(derived_spectrum(*e, kind), expr_text, out_path);
  out << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact band spectra of adjacency operators of composed graphs"};
  app.require_subcommand(1);

  std::string expr_text;
  std::string kind_text = "adjacency";
  bool as_json = false;
  int trunc = 16;
  double tol = kDefaultVerifyTol;
  std::uint64_t cap = kDefaultVertexCap;
  std::string out_path;

  const auto kind_check = CLI::IsMember(
      {"adjacency", "laplacian", "markov", "normalized-laplacian"});
  const char* grammar =
      "Expression: atoms K<n>, Kb<n>, Q<d>, C<m>, P<m>, Line, Lattice<d>, "
      "Tree<q>, Free<d>, lit:<path>; operators + (sum), * (product), "
      "& (strong), <N>@ (N-fold sum); parentheses allowed";

  CLI::App* sp = app.add_subcommand("spectrum", "Evaluate the band spectrum");
  sp->add_option("expr", expr_text, grammar)->required();
  sp->add_option("--kind", kind_text, "Operator kind")->check(kind_check);
  sp->add_flag("--json", as_json, "Emit the JSON document");

  CLI::App* vf = app.add_subcommand(
      "verify", "Check the prediction against eigenvalues of a finite truncation");
  vf->add_option("expr", expr_text, grammar)->required();
  vf->add_option("--trunc", trunc, "Truncation size for infinite atoms")
      ->check(CLI::Range(3, 1 << 20));
  vf->add_option("--tol", tol, "Containment tolerance")->check(CLI::PositiveNumber);
  vf->add_option("--cap", cap, "Vertex cap for materialization");
  vf->add_flag("--json", as_json, "Emit the JSON document");

  CLI::App* dg = app.add_subcommand("diagram", "Write an SVG band diagram");
  dg->add_option("expr", expr_text, grammar)->required();
  dg->add_option("--out", out_path, "Output SVG path")->required();
  dg->add_option("--kind", kind_text, "Operator kind")->check(kind_check);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  // kind_check already vetted the string.
  const OperatorKind kind = *operator_kind_from_string(kind_text);
  try {
    if (sp->parsed()) return cmd_spectrum(expr_text, kind, as_json, out);
    if (vf->parsed()) return cmd_verify(expr_text, trunc, tol, cap, as_json, out);
    return cmd_diagram(expr_text, kind, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bandspec
