#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gl3twist::cli {

enum class Subcommand { Approx, Kloosterman, Saddle, Phase, Psi, Scan, VoronoiCheck, Forms };

struct EpsilonChoices {
  double classification = 0.2;
  double envelope = 0.05;
  double reduced = 0.1;  // T_k and the short-sum envelopes
};

/// Everything one invocation needs. Fields not used by the chosen
/// subcommand are ignored.
struct RunConfig {
  Subcommand subcommand = Subcommand::Approx;
  EpsilonChoices epsilon;
  double tol = 1e-8;
  std::string out;  // empty: stdout
  unsigned workers = 0;
  std::string command_line;

  // form selection
  std::string kind = "eisenstein";
  std::vector<double> params{0.0, 0.0, 0.0};
  std::string data;

  double alpha = 0.0;
  double Q = 0.0;  // <= 0: automatic
  long long a = 0, b = 0, c = 1;
  long long m = 1, n = 1;
  std::string forms_action = "coeff";
  double A = 0.0, B = 0.0, X = 1.0;

  double N = 1000.0;
  double theta = 0.0;
  double tau = 0.0;
  double sigma = 0.0;
  bool compare = false;

  double x = 1.0;
  int k = 0;
  bool asymptotic = false;
  std::vector<double> table;  // t_min, t_max, step

  std::string N_range;        // "256..16384" (doubling) or "256,512,..."
  std::string alphas = "preset:mixed";
  std::string mode = "sharp";
  long long q = 1;
  double cutoff_factor = 1.0;
};

/// Exit status: 0 success, 2 invalid configuration or input, 3 a numerical
/// tolerance was not met.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "256..16384" -> 256, 512, ..., 16384; otherwise a comma-separated list.
std::vector<double> parse_n_range(const std::string& text);
std::vector<double> parse_alphas(const std::string& text);

}  // namespace gl3twist::cli
