#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gl3twist {

using cplx = std::complex<double>;

/// Imaginary parts a_j of the tempered Langlands parameters alpha_j = i a_j.
/// Always sums to zero and is stored with |a1| >= |a2| >= |a3|.
struct LanglandsParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  /// Validates the zero-sum condition (relative slack 1e-9) and sorts.
  static LanglandsParams from(double x, double y, double z);

  std::array<double, 3> values() const { return {a1, a2, a3}; }
  double product() const { return a1 * a2 * a3; }
};

/// prod (1 + |a_i|).
double analytic_conductor(const LanglandsParams& params);

/// Satake parameters at a prime; A(p^k1, p^k2) is the Schur polynomial of
/// shape (k1 + k2, k2, 0) evaluated at beta.
struct SatakeLocal {
  std::int64_t p = 0;
  std::array<cplx, 3> beta{cplx(1.0), cplx(1.0), cplx(1.0)};
};

/// (alpha^2, 1, alpha^-2) with alpha + 1/alpha = lambda_p, |alpha| >= 1.
SatakeLocal sym_square_satake(double lambda_p, std::int64_t p = 0);

/// Schur polynomial s_{(k1+k2, k2, 0)}(beta) with beta1 beta2 beta3 = 1.
cplx schur_local(const std::array<cplx, 3>& beta, int k1, int k2);

struct GL2EigenvalueTable {
  double r = 0.0;
  std::map<std::int64_t, double> lambda;
  /// Non-fatal findings, e.g. |lambda_p| above the Ramanujan bound.
  std::vector<std::string> warnings;

  std::int64_t prime_bound() const { return lambda.empty() ? 0 : lambda.rbegin()->first; }
};

GL2EigenvalueTable ingest_gl2_table(std::istream& in);
GL2EigenvalueTable ingest_gl2_table(const std::filesystem::path& path);
void write_gl2_table(std::ostream& out, const GL2EigenvalueTable& table,
                     const std::string& comment = {});

/// Explicit A(m, n) values, for forms whose coefficients come from elsewhere.
/// File format: "PARAMS a1 a2 a3" then lines "m n re [im]"; '#' comments.
struct CoefficientTable {
  LanglandsParams params;
  std::map<std::pair<std::int64_t, std::int64_t>, cplx> entries;
};

CoefficientTable ingest_coefficient_table(std::istream& in);
CoefficientTable ingest_coefficient_table(const std::filesystem::path& path);

enum class FormKind { Eisenstein, SymSquare, FileBacked };

std::string to_string(FormKind kind);

class FormSpec {
 public:
  static FormSpec eisenstein(const LanglandsParams& params);
  /// Symmetric-square lift of a level-one Maass form with spectral
  /// parameter table.r; Langlands parameters (2r, 0, -2r).
  static FormSpec sym_square(GL2EigenvalueTable table);
  static FormSpec file_backed(CoefficientTable table);

  FormKind kind() const { return kind_; }
  const LanglandsParams& params() const { return params_; }
  double conductor() const { return conductor_; }
  /// True for the lifts and tables, false for the Eisenstein family whose
  /// L-function has poles.
  bool cuspidal() const { return kind_ != FormKind::Eisenstein; }

  const GL2EigenvalueTable* gl2_table() const { return gl2_.get(); }
  const CoefficientTable* coefficient_table() const { return table_.get(); }

  std::string describe() const;

 private:
  FormKind kind_ = FormKind::Eisenstein;
  LanglandsParams params_;
  double conductor_ = 1.0;
  std::shared_ptr<const GL2EigenvalueTable> gl2_;
  std::shared_ptr<const CoefficientTable> table_;
};

/// Immutable source of A(m, n) for one form. A(1, n) for n <= cache_bound and
/// the Satake parameters of all primes up to that bound are computed in the
/// constructor; afterwards every method is const and safe to call from any
/// number of threads.
class CoefficientProvider {
 public:
  CoefficientProvider(FormSpec spec, std::int64_t cache_bound);

  const FormSpec& spec() const { return spec_; }
  std::int64_t cache_bound() const { return bound_; }

  /// A(m, n). Throws InsufficientData when the form's data does not reach.
  cplx coeff(std::int64_t m, std::int64_t n) const;
  /// A(1, n), from the cache when possible.
  cplx a1n(std::int64_t n) const;
  SatakeLocal satake(std::int64_t p) const;

 private:
  cplx compute_coeff(std::int64_t m, std::int64_t n) const;
  SatakeLocal compute_satake(std::int64_t p) const;
  /// Prime factorisation as (p, exponent) pairs.
  std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) const;

  FormSpec spec_;
  std::int64_t bound_;
  std::vector<std::int32_t> smallest_factor_;
  std::vector<SatakeLocal> satake_;  // indexed by prime
  std::vector<cplx> a1n_;
};

/// A(m, n) straight from a FormSpec without caching.
cplx coeff(const FormSpec& spec, std::int64_t m, std::int64_t n);

struct ShortSumReport {
  double value = 0.0;          ///< sum_{A <= n <= A+B} |A(1,n)| / n
  double envelope_half = 0.0;  ///< (B/A)^{1/2} (A c)^eps
  double envelope_one = 0.0;   ///< (B/A) (A c)^eps
  double epsilon = 0.0;
};

ShortSumReport short_sum_ratio(const CoefficientProvider& provider, double a, double b,
                               double epsilon = 0.1);

/// sum_{n <= X} |A(1,n)|^2 / n.
double rankin_selberg_partial(const CoefficientProvider& provider, double x);

}  // namespace gl3twist
