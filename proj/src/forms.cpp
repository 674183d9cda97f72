#include "gl3twist/forms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gl3twist/error.hpp"

namespace gl3twist {
namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = body.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = body.find_last_not_of(" \t\r");
  return body.substr(first, last - first + 1);
}

std::string line_error(int line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

LanglandsParams LanglandsParams::from(double x, double y, double z) {
  const double scale = 1.0 + std::abs(x) + std::abs(y) + std::abs(z);
  if (std::abs(x + y + z) > 1e-9 * scale) {
    throw std::invalid_argument("Langlands parameters must sum to zero");
  }
  std::array<double, 3> v = {x, y, z};
  std::sort(v.begin(), v.end(), [](double l, double r) {
    if (std::abs(l) != std::abs(r)) return std::abs(l) > std::abs(r);
    return l > r;
  });
  return {v[0], v[1], v[2]};
}

double analytic_conductor(const LanglandsParams& params) {
  return (1.0 + std::abs(params.a1)) * (1.0 + std::abs(params.a2)) * (1.0 + std::abs(params.a3));
}

SatakeLocal sym_square_satake(double lambda_p, std::int64_t p) {
  const cplx disc = std::sqrt(cplx(lambda_p * lambda_p - 4.0, 0.0));
  const cplx plus = 0.5 * (lambda_p + disc);
  const cplx minus = 0.5 * (lambda_p - disc);
  const cplx alpha = std::abs(minus) > std::abs(plus) ? minus : plus;
  const cplx a2 = alpha * alpha;
  return {p, {a2, cplx(1.0), 1.0 / a2}};
}

cplx schur_local(const std::array<cplx, 3>& beta, int k1, int k2) {
  if (k1 == 0 && k2 == 0) return 1.0;
  const cplx e1 = beta[0] + beta[1] + beta[2];
  const cplx e2 = beta[0] * beta[1] + beta[0] * beta[2] + beta[1] * beta[2];
  const cplx e3 = beta[0] * beta[1] * beta[2];
  const int top = k1 + k2 + 1;
  // complete homogeneous symmetric polynomials h_0..h_top
  std::vector<cplx> h(top + 1, 0.0);
  h[0] = 1.0;
  for (int k = 1; k <= top; ++k) {
    cplx v = e1 * h[k - 1];
    if (k >= 2) v -= e2 * h[k - 2];
    if (k >= 3) v += e3 * h[k - 3];
    h[k] = v;
  }
  // Jacobi-Trudi for a shape (l1, l2, 0): h_{l1} h_{l2} - h_{l1+1} h_{l2-1}
  const int l1 = k1 + k2;
  const int l2 = k2;
  cplx value = h[l1] * h[l2];
  if (l2 >= 1) value -= h[l1 + 1] * h[l2 - 1];
  return value;
}

GL2EigenvalueTable ingest_gl2_table(std::istream& in) {
  GL2EigenvalueTable table;
  bool have_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      double r = 0.0;
      std::string extra;
      if (!(fields >> tag >> r) || tag != "R" || (fields >> extra)) {
        throw ParseError(line_error(line_no, "malformed header, expected \"R <decimal>\""));
      }
      table.r = r;
      have_header = true;
      continue;
    }
    std::int64_t p = 0;
    double lambda = 0.0;
    std::string extra;
    if (!(fields >> p >> lambda) || (fields >> extra)) {
      throw ParseError(line_error(line_no, "malformed line, expected \"<prime> <decimal>\""));
    }
    if (!is_prime(p)) throw ParseError(line_error(line_no, std::to_string(p) + " is not prime"));
    if (table.lambda.count(p) != 0) {
      throw ParseError(line_error(line_no, "duplicate entry for prime " + std::to_string(p)));
    }
    if (!table.lambda.empty() && p < table.prime_bound()) {
      throw ParseError(line_error(line_no, "primes must be ascending"));
    }
    if (std::abs(lambda) > 2.0 + 1e-6) {
      table.warnings.push_back("lambda_" + std::to_string(p) + " = " + std::to_string(lambda) +
                               " exceeds the Ramanujan bound 2");
    }
    table.lambda.emplace(p, lambda);
  }
  if (!have_header) throw ParseError("missing \"R <decimal>\" header");
  if (table.lambda.empty()) throw ParseError("no eigenvalue entries");
  for (std::int64_t p = 2; p <= table.prime_bound(); ++p) {
    if (is_prime(p) && table.lambda.count(p) == 0) {
      throw ParseError("missing prime " + std::to_string(p) + " below the table bound " +
                       std::to_string(table.prime_bound()));
    }
  }
  return table;
}

GL2EigenvalueTable ingest_gl2_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return ingest_gl2_table(in);
}

void write_gl2_table(std::ostream& out, const GL2EigenvalueTable& table,
                     const std::string& comment) {
  std::istringstream lines(comment);
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
  out << std::setprecision(17) << "R " << table.r << '\n';
  for (const auto& [p, lambda] : table.lambda) out << p << ' ' << lambda << '\n';
}

CoefficientTable ingest_coefficient_table(std::istream& in) {
  CoefficientTable table;
  bool have_params = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (!have_params) {
      std::string tag;
      double a = 0.0, b = 0.0, c = 0.0;
      if (!(fields >> tag >> a >> b >> c) || tag != "PARAMS") {
        throw ParseError(line_error(line_no, "expected \"PARAMS a1 a2 a3\""));
      }
      try {
        table.params = LanglandsParams::from(a, b, c);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_error(line_no, e.what()));
      }
      have_params = true;
      continue;
    }
    std::int64_t m = 0, n = 0;
    double re = 0.0, im = 0.0;
    if (!(fields >> m >> n >> re) || m < 1 || n < 1) {
      throw ParseError(line_error(line_no, "expected \"m n re [im]\""));
    }
    if (!(fields >> im)) im = 0.0;
    if (!table.entries.emplace(std::make_pair(m, n), cplx(re, im)).second) {
      throw ParseError(line_error(line_no, "duplicate entry"));
    }
  }
  if (!have_params) throw ParseError("missing PARAMS header");
  if (table.entries.empty()) throw ParseError("no coefficient entries");
  return table;
}

CoefficientTable ingest_coefficient_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return ingest_coefficient_table(in);
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Eisenstein:
      return "eisenstein";
    case FormKind::SymSquare:
      return "symsquare";
    case FormKind::FileBacked:
      return "file";
  }
  return "unknown";
}

FormSpec FormSpec::eisenstein(const LanglandsParams& params) {
  FormSpec spec;
  spec.kind_ = FormKind::Eisenstein;
  spec.params_ = params;
  spec.conductor_ = analytic_conductor(params);
  return spec;
}

FormSpec FormSpec::sym_square(GL2EigenvalueTable table) {
  FormSpec spec;
  spec.kind_ = FormKind::SymSquare;
  spec.params_ = LanglandsParams::from(2.0 * table.r, 0.0, -2.0 * table.r);
  spec.conductor_ = analytic_conductor(spec.params_);
  spec.gl2_ = std::make_shared<const GL2EigenvalueTable>(std::move(table));
  return spec;
}

FormSpec FormSpec::file_backed(CoefficientTable table) {
  FormSpec spec;
  spec.kind_ = FormKind::FileBacked;
  spec.params_ = table.params;
  spec.conductor_ = analytic_conductor(spec.params_);
  spec.table_ = std::make_shared<const CoefficientTable>(std::move(table));
  return spec;
}

std::string FormSpec::describe() const {
  std::ostringstream os;
  os << std::setprecision(10) << to_string(kind_) << "(a=" << params_.a1 << ',' << params_.a2
     << ',' << params_.a3;
  if (gl2_) os << ";r=" << gl2_->r << ";primes<=" << gl2_->prime_bound();
  if (table_) os << ";entries=" << table_->entries.size();
  os << ")";
  return os.str();
}

CoefficientProvider::CoefficientProvider(FormSpec spec, std::int64_t cache_bound)
    : spec_(std::move(spec)), bound_(std::max<std::int64_t>(cache_bound, 1)) {
  smallest_factor_.assign(bound_ + 1, 0);
  for (std::int64_t i = 2; i <= bound_; ++i) {
    if (smallest_factor_[i] != 0) continue;
    for (std::int64_t j = i; j <= bound_; j += i) {
      if (smallest_factor_[j] == 0) smallest_factor_[j] = static_cast<std::int32_t>(i);
    }
  }
  if (spec_.kind() == FormKind::FileBacked) return;

  satake_.resize(bound_ + 1);
  for (std::int64_t p = 2; p <= bound_; ++p) {
    if (smallest_factor_[p] == p) satake_[p] = compute_satake(p);
  }
  a1n_.assign(bound_ + 1, 0.0);
  a1n_[1] = 1.0;
  for (std::int64_t n = 2; n <= bound_; ++n) {
    const std::int64_t p = smallest_factor_[n];
    std::int64_t rest = n;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    a1n_[n] = a1n_[rest] * schur_local(satake_[p].beta, 0, k);
  }
}

SatakeLocal CoefficientProvider::compute_satake(std::int64_t p) const {
  switch (spec_.kind()) {
    case FormKind::Eisenstein: {
      SatakeLocal local;
      local.p = p;
      const double logp = std::log(static_cast<double>(p));
      const auto a = spec_.params().values();
      for (int j = 0; j < 3; ++j) local.beta[j] = std::polar(1.0, -a[j] * logp);
      return local;
    }
    case FormKind::SymSquare: {
      const auto& table = spec_.gl2_table()->lambda;
      const auto it = table.find(p);
      if (it == table.end()) {
        throw InsufficientData("insufficient data: no GL(2) eigenvalue for prime " +
                               std::to_string(p));
      }
      return sym_square_satake(it->second, p);
    }
    case FormKind::FileBacked:
      break;
  }
  throw InsufficientData("insufficient data: file-backed forms carry no Satake parameters");
}

SatakeLocal CoefficientProvider::satake(std::int64_t p) const {
  if (p <= bound_ && p < static_cast<std::int64_t>(satake_.size()) && satake_[p].p == p) {
    return satake_[p];
  }
  return compute_satake(p);
}

std::vector<std::pair<std::int64_t, int>> CoefficientProvider::factor(std::int64_t n) const {
  std::vector<std::pair<std::int64_t, int>> out;
  while (n > 1 && n <= bound_) {
    const std::int64_t p = smallest_factor_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  for (std::int64_t d = 2; n > 1 && d * d <= n; ++d) {
    if (n % d != 0) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

cplx CoefficientProvider::compute_coeff(std::int64_t m, std::int64_t n) const {
  if (spec_.kind() == FormKind::FileBacked) {
    const auto& entries = spec_.coefficient_table()->entries;
    const auto it = entries.find({m, n});
    if (it == entries.end()) {
      throw InsufficientData("insufficient data: A(" + std::to_string(m) + "," +
                             std::to_string(n) + ") not in table");
    }
    return it->second;
  }
  std::map<std::int64_t, std::pair<int, int>> exponents;
  for (const auto& [p, k] : factor(m)) exponents[p].first = k;
  for (const auto& [p, k] : factor(n)) exponents[p].second = k;
  cplx value = 1.0;
  for (const auto& [p, k] : exponents) value *= schur_local(satake(p).beta, k.first, k.second);
  return value;
}

cplx CoefficientProvider::coeff(std::int64_t m, std::int64_t n) const {
  if (m < 1 || n < 1) throw std::invalid_argument("coefficient indices must be positive");
  if (m == 1 && n <= bound_ && !a1n_.empty()) return a1n_[n];
  return compute_coeff(m, n);
}

cplx CoefficientProvider::a1n(std::int64_t n) const { return coeff(1, n); }

cplx coeff(const FormSpec& spec, std::int64_t m, std::int64_t n) {
  return CoefficientProvider(spec, 1).coeff(m, n);
}

ShortSumReport short_sum_ratio(const CoefficientProvider& provider, double a, double b,
                               double epsilon) {
  if (!(a > 0.0) || b < 0.0 || b > a) {
    throw std::invalid_argument("short sums need A >= B >= 0 and A > 0");
  }
  ShortSumReport report;
  report.epsilon = epsilon;
  const auto lo = static_cast<std::int64_t>(std::ceil(a));
  const auto hi = static_cast<std::int64_t>(std::floor(a + b));
  double sum = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    sum += std::abs(provider.a1n(n)) / static_cast<double>(n);
  }
  report.value = sum;
  const double growth = std::pow(a * provider.spec().conductor(), epsilon);
  report.envelope_half = std::sqrt(b / a) * growth;
  report.envelope_one = (b / a) * growth;
  return report;
}

double rankin_selberg_partial(const CoefficientProvider& provider, double x) {
  if (x < 1.0) throw std::invalid_argument("Rankin-Selberg partial sums need X >= 1");
  const auto top = static_cast<std::int64_t>(std::floor(x));
  double sum = 0.0;
  for (std::int64_t n = 1; n <= top; ++n) sum += std::norm(provider.a1n(n)) / static_cast<double>(n);
  return sum;
}

}  // namespace gl3twist
