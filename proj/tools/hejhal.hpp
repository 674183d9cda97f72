#pragma once

#include <cstdint>
#include <vector>

namespace gl3twist::hejhal {

/// Level-one odd Maass cusp form with spectral parameter r, expanded as
/// f(z) = sum_n c(n) sqrt(y) K_{ir}(2 pi n y) sin(2 pi n x), c(1) = 1.
struct Settings {
  double r = 9.533695261353557554344235235928770;
  int stage1_terms = 26;     // M
  double stage1_height = 0.28;
  int stage1_points = 40;    // Q
  int expansion_terms = 14;  // terms of the stage-1 expansion reused in stage 2
  double band_ratio = 1.25;
};

/// Hecke eigenvalues c(1..n_max) (index 0 unused).
///
/// Stage 1 solves the linear system from automorphy under z -> -1/z at
/// points pulled back into the fundamental domain. Stage 2 recovers c(n) in
/// bands [n0, 1.25 n0] from the stage-1 expansion, sampled on a horizontal
/// line low enough that K_{ir}(2 pi n Y) is not yet exponentially small.
std::vector<double> coefficients(std::int64_t n_max, const Settings& settings = {});

}  // namespace gl3twist::hejhal
