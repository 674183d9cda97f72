#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gl3twist/arith.hpp"
#include "gl3twist/diophantine.hpp"
#include "gl3twist/error.hpp"
#include "gl3twist/forms.hpp"
#include "gl3twist/numeric.hpp"
#include "gl3twist/phase.hpp"
#include "gl3twist/sums.hpp"
#include "gl3twist/transform.hpp"
#include "gl3twist/window.hpp"

namespace gl3twist::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kTolerance = 3;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LanglandsParams params_of(const RunConfig& c) {
  if (c.params.size() != 3) throw ValidationError("--params needs three comma-separated values");
  try {
    return LanglandsParams::from(c.params[0], c.params[1], c.params[2]);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--params: ") + e.what());
  }
}

FormSpec form_of(const RunConfig& c) {
  if (c.kind == "eisenstein") return FormSpec::eisenstein(params_of(c));
  if (c.kind == "symsquare") {
    if (c.data.empty()) throw ValidationError("--kind symsquare needs --data <eigenvalue file>");
    return FormSpec::sym_square(ingest_gl2_table(std::filesystem::path(c.data)));
  }
  if (c.kind == "file") {
    if (c.data.empty()) throw ValidationError("--kind file needs --data <coefficient file>");
    return FormSpec::file_backed(ingest_coefficient_table(std::filesystem::path(c.data)));
  }
  throw ValidationError("--kind must be eisenstein, symsquare or file");
}

void header(std::ostream& os, const RunConfig& c, const FormSpec* form) {
  os << "# gl3twist " << GL3TWIST_VERSION << '\n';
  if (!c.command_line.empty()) os << "# command: " << c.command_line << '\n';
  if (form) {
    os << "# form: " << form->describe() << '\n';
    os << "# conductor: " << std::setprecision(10) << form->conductor() << '\n';
  }
  os << "# epsilon: classification=" << c.epsilon.classification
     << " envelope=" << c.epsilon.envelope << " reduced=" << c.epsilon.reduced << '\n';
  os << "# tol: " << c.tol << '\n';
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ValidationError(std::string(name) + " must be positive");
}

int cmd_approx(const RunConfig& c, std::ostream& os) {
  check_positive(c.Q, "--Q");
  const auto r = dirichlet_approx(c.alpha, c.Q);
  os << std::setprecision(17) << r.a << ' ' << r.q << ' ' << r.theta << ' ' << r.bound() << '\n';
  return kOk;
}

int cmd_kloosterman(const RunConfig& c, std::ostream& os) {
  if (c.c < 1) throw ValidationError("--c must be a positive modulus");
  os << std::setprecision(15) << kloosterman(c.a, c.b, c.c) << '\n';
  return kOk;
}

int cmd_forms(const RunConfig& c, std::ostream& os) {
  const FormSpec form = form_of(c);
  os << std::setprecision(15);
  if (c.forms_action == "coeff") {
    if (c.m < 1 || c.n < 1) throw ValidationError("--m and --n must be positive");
    const cplx v = coeff(form, c.m, c.n);
    os << v.real() << ' ' << v.imag() << '\n';
  } else if (c.forms_action == "conductor") {
    os << form.conductor() << '\n';
  } else if (c.forms_action == "short-sum") {
    const CoefficientProvider provider(form, static_cast<std::int64_t>(c.A + c.B) + 1);
    const auto r = short_sum_ratio(provider, c.A, c.B, c.epsilon.reduced);
    os << "value,envelope_half,envelope_one,epsilon\n"
       << r.value << ',' << r.envelope_half << ',' << r.envelope_one << ',' << r.epsilon << '\n';
  } else if (c.forms_action == "rankin") {
    const CoefficientProvider provider(form, static_cast<std::int64_t>(c.X) + 1);
    os << rankin_selberg_partial(provider, c.X) << '\n';
  } else {
    throw ValidationError("forms action must be coeff, conductor, short-sum or rankin");
  }
  return kOk;
}

int cmd_saddle(const RunConfig& c, std::ostream& os) {
  check_positive(c.N, "--N");
  const ModulatedWindow win{c.N, c.theta, c.sigma};
  const auto s = saddle_I(win, c.tau, c.epsilon.classification);
  header(os, c, nullptr);
  os << std::setprecision(15);
  if (!c.compare) {
    os << "regime,main_re,main_im,error_estimate\n"
       << to_string(s.regime) << ',' << s.main.real() << ',' << s.main.imag() << ','
       << s.errorEstimate << '\n';
    return kOk;
  }
  const cplx d = direct_I(win, c.tau);
  os << "regime,main_re,main_im,error_estimate,quadrature_re,quadrature_im,difference\n"
     << to_string(s.regime) << ',' << s.main.real() << ',' << s.main.imag() << ','
     << s.errorEstimate << ',' << d.real() << ',' << d.imag() << ',' << std::abs(s.main - d)
     << '\n';
  return kOk;
}

int cmd_phase(const RunConfig& c, std::ostream& os) {
  if (c.table.size() != 3) throw ValidationError("--table needs t_min,t_max,step");
  const double lo = c.table[0];
  const double hi = c.table[1];
  const double step = c.table[2];
  check_positive(step, "table step");
  if (hi < lo) throw ValidationError("--table needs t_min <= t_max");
  if ((hi - lo) / step > 1e7) throw ValidationError("--table would produce more than 1e7 rows");
  PhaseContext ctx;
  try {
    ctx = PhaseContext(c.x, c.N, c.theta, params_of(c));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  header(os, c, nullptr);
  os << "# stationary points:";
  for (double r : stationary_points(ctx, lo, hi)) os << ' ' << std::setprecision(12) << r;
  os << '\n' << std::setprecision(15) << "t,f,f_prime,f_second,C,delta\n";
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) {
    const double t = lo + step * static_cast<double>(i);
    os << t << ',';
    try {
      os << f_eval(ctx, t) << ',' << f_prime(ctx, t) << ',' << f_second(ctx, t) << ',';
    } catch (const PhaseSingularity&) {
      os << "nan,nan,nan,";
    }
    os << C_poly(ctx.params, t) << ',';
    if (t == 0.0) {
      os << "nan\n";
    } else {
      os << delta(ctx, t) << '\n';
    }
  }
  return kOk;
}

int cmd_psi(const RunConfig& c, std::ostream& os) {
  check_positive(c.x, "--x");
  check_positive(c.N, "--N");
  check_positive(c.tol, "--tol");
  if (c.k != 0 && c.k != 1) throw ValidationError("--k must be 0 or 1");
  if (!(c.sigma > -0.5 && c.sigma <= 0.5)) throw ValidationError("--sigma must lie in (-1/2, 1/2]");
  const LanglandsParams p = params_of(c);
  const ModulatedWindow win{c.N, c.theta, 0.0};
  const auto r = psi_k_contour(c.x, {c.k, p}, win, c.sigma, c.tol);
  header(os, c, nullptr);
  os << "# conductor: " << analytic_conductor(p) << '\n' << std::setprecision(15);
  os << "x,k,re,im,quadrature_error,sigma,truncation_tau,regime";
  if (c.asymptotic) os << ",asymptotic_re,asymptotic_im,ratio";
  os << '\n'
     << c.x << ',' << c.k << ',' << r.value.real() << ',' << r.value.imag() << ','
     << r.quadratureError << ',' << r.contourSigma << ',' << r.truncationTau << ','
     << to_string(r.regime);
  if (c.asymptotic) {
    const cplx a = asymptotic_psi(c.x, {c.k, p}, win);
    os << ',' << a.real() << ',' << a.imag() << ',' << std::abs(a) / std::abs(r.value);
  }
  os << '\n';
  return r.converged ? kOk : kTolerance;
}

std::ostream& open_output(const RunConfig& c, std::ostream& fallback,
                          std::unique_ptr<std::ofstream>& holder) {
  if (c.out.empty()) return fallback;
  holder = std::make_unique<std::ofstream>(c.out);
  if (!*holder) throw ValidationError("cannot open output file " + c.out);
  return *holder;
}

int cmd_scan(const RunConfig& c, std::ostream& fallback) {
  const FormSpec form = form_of(c);
  const auto ns = parse_n_range(c.N_range);
  const auto alphas = parse_alphas(c.alphas);
  SumMode mode;
  if (c.mode == "sharp") {
    mode = SumMode::Sharp;
  } else if (c.mode == "smooth") {
    mode = SumMode::Smooth;
  } else {
    throw ValidationError("--mode must be sharp or smooth");
  }
  double top = 0.0;
  for (double n : ns) top = std::max(top, n);
  const CoefficientProvider provider(form, static_cast<std::int64_t>(std::ceil(2.0 * top)) + 1);

  struct Row {
    double N, alpha;
    SumExperiment exp;
    double s_abs = 0.0;
    BoundReport bound;
    std::string error;
  };
  std::vector<Row> rows;
  for (double n : ns) {
    for (double alpha : alphas) rows.push_back({n, alpha, {}, 0.0, {}, {}});
  }
  const unsigned workers = c.workers == 0 ? default_workers() : c.workers;
  parallel_for(rows.size(), workers, [&](std::size_t i) {
    Row& r = rows[i];
    try {
      r.exp = SumExperiment::make(form, r.N, r.alpha, c.Q, mode);
      r.s_abs = std::abs(direct_sum(provider, r.exp));
      r.bound = predicted_bound(r.N, form.conductor(), r.exp.Q, r.exp.approx.theta * r.N);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  std::unique_ptr<std::ofstream> holder;
  std::ostream& os = open_output(c, fallback, holder);
  header(os, c, &form);
  os << "# mode: " << to_string(mode) << "\n# Q: " << (c.Q > 0.0 ? std::to_string(c.Q) : "auto")
     << '\n';
  os << "N,alpha,a,q,theta,|S|,envelope_R,envelope_U,regime\n" << std::setprecision(15);
  for (const Row& r : rows) {
    os << r.N << ',' << r.alpha << ',';
    if (!r.error.empty()) {
      os << ",,,nan,nan,nan,error: " << r.error << '\n';
      continue;
    }
    os << r.exp.approx.a << ',' << r.exp.approx.q << ',' << r.exp.approx.theta << ',' << r.s_abs
       << ',' << r.bound.ramanujan << ',' << r.bound.unconditional << ',' << r.bound.regime
       << '\n';
  }
  return kOk;
}

int cmd_voronoi(const RunConfig& c, std::ostream& fallback) {
  const FormSpec form = form_of(c);
  check_positive(c.N, "--N");
  check_positive(c.tol, "--tol");
  if (c.q < 1) throw ValidationError("--q must be positive");
  if (gcd(c.a, c.q) != 1) throw ValidationError("--a must be coprime to --q");
  const double alpha = static_cast<double>(c.a) / static_cast<double>(c.q);
  SumExperiment exp = SumExperiment::make(form, c.N, alpha, static_cast<double>(c.q),
                                          SumMode::Smooth);
  // Use the requested fraction itself (theta = 0).
  exp.approx.a = ((c.a % c.q) + c.q) % c.q;
  exp.approx.q = c.q;
  exp.approx.theta = 0.0;
  const CoefficientProvider provider(form, static_cast<std::int64_t>(std::ceil(2.0 * c.N)) + 1);
  DualSumOptions options;
  options.cutoff_factor = c.cutoff_factor;
  options.workers = c.workers;
  const auto r = dual_sum(provider, exp, c.tol, options);

  std::unique_ptr<std::ofstream> holder;
  std::ostream& os = open_output(c, fallback, holder);
  header(os, c, &form);
  for (const auto& w : r.warnings) os << "# warning: " << w << '\n';
  os << "# cutoff factor: " << c.cutoff_factor << '\n';
  os << "N,a,q,direct_re,direct_im,dual_plus_re,dual_plus_im,dual_minus_re,dual_minus_im,"
        "residual,dual_terms,transform_error\n"
     << std::setprecision(15) << c.N << ',' << exp.approx.a << ',' << c.q << ','
     << r.direct.real() << ',' << r.direct.imag() << ',' << r.dualPlus.real() << ','
     << r.dualPlus.imag() << ',' << r.dualMinus.real() << ',' << r.dualMinus.imag() << ','
     << r.residual << ',' << r.dualTermsUsed << ',' << r.transformError << '\n';
  return r.transformError <= c.tol ? kOk : kTolerance;
}

}  // namespace

std::vector<double> parse_n_range(const std::string& text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const double lo = std::stod(text.substr(0, dots));
      const double hi = std::stod(text.substr(dots + 2));
      if (!(lo >= 1.0) || hi < lo) throw ValidationError("--N range must satisfy 1 <= lo <= hi");
      for (double n = lo; n <= hi * (1.0 + 1e-12); n *= 2.0) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    }
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse --N \"" + text + "\"");
  }
  if (out.empty()) throw ValidationError("--N is empty");
  for (double n : out) check_positive(n, "--N");
  return out;
}

std::vector<double> parse_alphas(const std::string& text) {
  if (text == "preset:mixed") return mixed_alpha_preset();
  if (text == "preset:irrational") return quadratic_irrationals();
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse --alphas \"" + text + "\"");
  }
  if (out.empty()) throw ValidationError("--alphas is empty");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.tol > 0.0)) throw ValidationError("--tol must be positive");
    switch (config.subcommand) {
      case Subcommand::Approx:
        return cmd_approx(config, out);
      case Subcommand::Kloosterman:
        return cmd_kloosterman(config, out);
      case Subcommand::Forms:
        return cmd_forms(config, out);
      case Subcommand::Saddle:
        return cmd_saddle(config, out);
      case Subcommand::Phase:
        return cmd_phase(config, out);
      case Subcommand::Psi:
        return cmd_psi(config, out);
      case Subcommand::Scan:
        return cmd_scan(config, out);
      case Subcommand::VoronoiCheck:
        return cmd_voronoi(config, out);
    }
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << " (best estimate " << e.best_estimate() << ", error "
        << e.error_estimate() << ")\n";
    return kTolerance;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kTolerance;
  }
  return kInvalid;
}

}  // namespace gl3twist::cli
