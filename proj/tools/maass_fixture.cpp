// Writes Hecke eigenvalues of the first odd level-one Maass form at primes
// up to a bound, in the GL(2) table format read by ingest_gl2_table.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "gl3twist/forms.hpp"
#include "hejhal.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a GL(2) Maass eigenvalue table"};
  std::int64_t bound = 20000;
  std::string out_path;
  gl3twist::hejhal::Settings settings;
  app.add_option("--bound", bound, "largest n computed")->check(CLI::Range(13, 10'000'000));
  app.add_option("--r", settings.r, "spectral parameter");
  app.add_option("--out", out_path, "output file (default stdout)");
  CLI11_PARSE(app, argc, argv);

  const auto c = gl3twist::hejhal::coefficients(bound, settings);

  // Self-check: multiplicativity c(mn) = c(m) c(n) for coprime m, n.
  double worst = 0.0;
  for (std::int64_t m = 2; m < 200; ++m) {
    for (std::int64_t n = 2; m * n <= bound; ++n) {
      if (std::gcd(m, n) == 1) worst = std::max(worst, std::abs(c[m * n] - c[m] * c[n]));
    }
  }

  gl3twist::GL2EigenvalueTable table;
  table.r = settings.r;
  std::vector<bool> composite(bound + 1, false);
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::int64_t k = p * p; k <= bound; k += p) composite[k] = true;
    table.lambda.emplace(p, c[p]);
  }
  std::ostringstream comment;
  comment << std::setprecision(16) << "Hecke eigenvalues of the odd level-one Maass cusp form, r = " << settings.r << "\n"
          << "computed by collocation, n <= " << bound << "\n"
          << "max |c(mn) - c(m)c(n)| over coprime m < 200: " << worst;
  if (out_path.empty()) {
    gl3twist::write_gl2_table(std::cout, table, comment.str());
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open " << out_path << '\n';
      return 2;
    }
    gl3twist::write_gl2_table(out, table, comment.str());
  }
  std::cerr << "multiplicativity check: " << worst << '\n';
  return 0;
}
