#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

using gl3twist::cli::RunConfig;
using gl3twist::cli::Subcommand;

namespace {

void add_form_options(CLI::App* app, RunConfig& c) {
  app->add_option("--kind", c.kind, "eisenstein, symsquare or file");
  app->add_option("--params", c.params, "Langlands parameters a1,a2,a3 (sum zero)")->delimiter(',');
  app->add_option("--data", c.data, "GL(2) eigenvalue file or coefficient file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted GL(3) exponential sums: transforms, phases and Voronoi checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--tol", c.tol, "numerical tolerance");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--workers", c.workers, "worker threads (default GL3TWIST_WORKERS or all cores)");
  app.add_option("--eps-class", c.epsilon.classification, "epsilon used for regime classification");

  auto* approx = app.add_subcommand("approx", "Dirichlet approximation alpha = a/q + theta/2pi");
  approx->add_option("--alpha", c.alpha)->required();
  approx->add_option("--Q", c.Q)->required();

  auto* kl = app.add_subcommand("kloosterman", "Kloosterman sum S(a, b; c)");
  kl->add_option("--a", c.a)->required();
  kl->add_option("--b", c.b)->required();
  kl->add_option("--c", c.c)->required();

  auto* forms = app.add_subcommand("forms", "Fourier coefficients and coefficient lemmas");
  forms->add_option("action", c.forms_action, "coeff, conductor, short-sum or rankin");
  add_form_options(forms, c);
  forms->add_option("--m", c.m);
  forms->add_option("--n", c.n);
  forms->add_option("--A", c.A);
  forms->add_option("--B", c.B);
  forms->add_option("--X", c.X);

  auto* saddle = app.add_subcommand("saddle", "Stationary-phase approximation of the Mellin integral");
  saddle->add_option("--N", c.N)->required();
  saddle->add_option("--theta", c.theta)->required();
  saddle->add_option("--tau", c.tau)->required();
  saddle->add_option("--sigma", c.sigma);
  saddle->add_flag("--compare", c.compare, "also evaluate by quadrature");

  auto* phase = app.add_subcommand("phase", "Tabulate the phase function and its derivatives");
  phase->add_option("--params", c.params)->delimiter(',')->required();
  phase->add_option("--x", c.x)->required();
  phase->add_option("--N", c.N)->required();
  phase->add_option("--theta", c.theta)->required();
  phase->add_option("--table", c.table, "t_min,t_max,step")->delimiter(',')->required();

  auto* psi = app.add_subcommand("psi", "Voronoi transform Psi_k(x) by contour integration");
  psi->add_option("--x", c.x)->required();
  psi->add_option("--k", c.k);
  psi->add_option("--params", c.params)->delimiter(',')->required();
  psi->add_option("--N", c.N)->required();
  psi->add_option("--theta", c.theta)->required();
  psi->add_option("--sigma", c.sigma);
  psi->add_flag("--asymptotic", c.asymptotic, "also evaluate the stationary-phase model");

  auto* scan = app.add_subcommand("scan", "Direct twisted sums over an (N, alpha) grid");
  add_form_options(scan, c);
  scan->add_option("--N", c.N_range, "lo..hi (doubling) or a comma list")->required();
  scan->add_option("--alphas", c.alphas, "preset:mixed, preset:irrational or a comma list");
  scan->add_option("--Q", c.Q, "approximation parameter; 'auto' or <= 0 for automatic")
      ->transform([](std::string s) { return s == "auto" ? std::string("0") : s; });
  scan->add_option("--mode", c.mode, "sharp or smooth");

  auto* vor = app.add_subcommand("voronoi-check", "Compare both sides of the Voronoi formula");
  add_form_options(vor, c);
  vor->add_option("--N", c.N)->required();
  vor->add_option("--q", c.q)->required();
  vor->add_option("--a", c.a)->required();
  vor->add_option("--cutoff-factor", c.cutoff_factor, "multiplier on the dual-sum cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {approx, Subcommand::Approx}, {kl, Subcommand::Kloosterman},
      {forms, Subcommand::Forms},   {saddle, Subcommand::Saddle},
      {phase, Subcommand::Phase},   {psi, Subcommand::Psi},
      {scan, Subcommand::Scan},     {vor, Subcommand::VoronoiCheck}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) c.subcommand = kind;
  }
  for (int i = 0; i < argc; ++i) c.command_line += (i ? " " : "") + std::string(argv[i]);
  return gl3twist::cli::run(c, std::cout, std::cerr);
}
