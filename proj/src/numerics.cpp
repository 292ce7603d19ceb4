#include "qmorse/numerics.hpp"

#include <cmath>
#include <limits>

namespace qmorse {

namespace {

// ---------------------------------------------------------------------------
// exact rational arithmetic for the Bernoulli recurrence
// ---------------------------------------------------------------------------

using int128 = __int128;

int128 igcd(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Rat128 {
  int128 num = 0;
  int128 den = 1;

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int128 g = igcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

Rat128 add(const Rat128& x, const Rat128& y) {
  Rat128 r{x.num * y.den + y.num * x.den, x.den * y.den};
  r.reduce();
  return r;
}

Rat128 mul_int(const Rat128& x, int128 k) {
  Rat128 r{x.num * k, x.den};
  r.reduce();
  return r;
}

Rat128 div_int(const Rat128& x, int128 k) {
  Rat128 r{x.num, x.den * k};
  r.reduce();
  return r;
}

}  // namespace

BernoulliTable::BernoulliTable(int max_order) : max_order_(max_order) {
  if (max_order < 2 || max_order % 2 != 0 || max_order > 40)
    throw std::invalid_argument("Bernoulli table order must be even, in [2, 40]");

  const int m_top = max_order;
  // C(m+1, j) by Pascal rows as we go
  std::vector<Rat128> b(m_top + 1);
  b[0] = {1, 1};
  std::vector<int128> binom(m_top + 2, 0);  // row C(m+1, .)
  for (int m = 1; m <= m_top; ++m) {
    // build row m+1 of Pascal's triangle
    binom[0] = 1;
    for (int j = 1; j <= m + 1; ++j) binom[j] = 0;
    for (int row = 1; row <= m + 1; ++row)
      for (int j = row; j >= 1; --j) binom[j] += binom[j - 1];
    Rat128 sum{0, 1};
    for (int j = 0; j < m; ++j) sum = add(sum, mul_int(b[j], binom[j]));
    b[m] = div_int(mul_int(sum, -1), m + 1);
  }

  even_.reserve(m_top / 2);
  for (int two_p = 2; two_p <= m_top; two_p += 2) {
    const Rat128& r = b[two_p];
    constexpr int128 lim = std::numeric_limits<long long>::max();
    if (r.num > lim || r.num < -lim || r.den > lim)
      throw std::overflow_error("Bernoulli rational exceeds 64-bit range");
    even_.push_back({static_cast<long long>(r.num), static_cast<long long>(r.den)});
  }
}

Rational BernoulliTable::at(int two_p) const {
  if (two_p < 2 || two_p % 2 != 0 || two_p > max_order_)
    throw std::out_of_range("Bernoulli order out of range");
  return even_[two_p / 2 - 1];
}

Rational bernoulli(int two_p) {
  static const BernoulliTable table(20);
  return table.at(two_p);
}

double erf(double x) { return std::erf(x); }

double dawson(double x) {
  const double ax = std::fabs(x);
  if (ax < 1e-4) {
    // leading Taylor terms; error O(x^7)
    const double x2 = x * x;
    return x * (1.0 - (2.0 / 3.0) * x2 + (4.0 / 15.0) * x2 * x2);
  }
  if (ax <= 6.0) {
    // D(x) = exp(-x^2) * S with S = sum_n x^(2n+1) / (n! (2n+1)).
    // All series terms are positive, so there is no cancellation; at the
    // branch edge S ~ exp(36) which is far from overflow.
    const double x2 = ax * ax;
    double t = ax;  // x^(2n+1)/n!
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
      const double contrib = t / (2 * n + 1);
      sum += contrib;
      t *= x2 / (n + 1);
      if (contrib < sum * 1e-17 && n > 2) break;
    }
    const double r = std::exp(-x2) * sum;
    return x < 0 ? -r : r;
  }
  // asymptotic series D(x) ~ (1/(2x)) sum_k (2k-1)!!/(2x^2)^k; for |x| > 6
  // the optimally truncated remainder is below 1e-14 relative
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= (2 * k - 1) * inv2x2;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum / (2.0 * x);
}

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

ScaledValue exp_scaled_erfi_integral(double c, double u_lo, double u_hi) {
  if (!(c > 0)) throw std::domain_error("exp_scaled_erfi_integral: c must be positive");
  if (!(u_lo <= u_hi))
    throw std::invalid_argument("exp_scaled_erfi_integral: u_lo must not exceed u_hi");
  if (u_lo == u_hi) return {0.0, 0.0};

  const double rc = std::sqrt(c);
  // primitive integral_0^u exp(c t^2) dt = D(rc u) exp(c u^2) / rc, odd in u
  const double m_hi = dawson(rc * u_hi) / rc;
  const double l_hi = c * u_hi * u_hi;
  const double m_lo = dawson(rc * u_lo) / rc;
  const double l_lo = c * u_lo * u_lo;

  const double scale = std::max(l_hi, l_lo);
  const double mantissa = m_hi * std::exp(l_hi - scale) - m_lo * std::exp(l_lo - scale);
  if (mantissa == 0.0) return {0.0, 0.0};
  return {mantissa, scale};
}

namespace {

double central_estimate(const std::function<double(double)>& fn, double at,
                        double h, int order) {
  auto eval = [&](double x) {
    const double v = fn(x);
    if (!std::isfinite(v))
      throw numerical_error("non-finite function value in differentiation stencil");
    return v;
  };
  if (order == 1) return (eval(at + h) - eval(at - h)) / (2.0 * h);
  return (eval(at + h) - 2.0 * eval(at) + eval(at - h)) / (h * h);
}

}  // namespace

double differentiate(const std::function<double(double)>& fn, double at, int order,
                     const DiffConfig& cfg) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("differentiate: order must be 1 or 2");
  if (cfg.richardson_levels < 0 || cfg.richardson_levels > 10)
    throw std::invalid_argument("differentiate: richardson_levels out of range");

  const double eps = std::numeric_limits<double>::epsilon();
  double rel_step;
  if (cfg.base_step) {
    rel_step = *cfg.base_step;
    if (!(rel_step > 0.0 && rel_step < 1.0))
      throw std::invalid_argument("differentiate: base_step must lie in (0, 1)");
  } else {
    // roundoff/truncation balance differs between the two stencils
    rel_step = (order == 1) ? std::cbrt(eps) : std::pow(eps, 0.25);
  }

  const double scale = std::fabs(at) > 0.0 ? std::fabs(at) : 1.0;
  const int levels = cfg.richardson_levels;
  const double h_min = rel_step * scale;

  // estimates at h_min * 2^L .. h_min, extrapolated in h^2
  std::vector<double> t(levels + 1);
  for (int k = 0; k <= levels; ++k) {
    const double h = h_min * static_cast<double>(1 << (levels - k));
    t[k] = central_estimate(fn, at, h, order);
  }
  for (int j = 1; j <= levels; ++j) {
    const double f = std::pow(4.0, j);
    for (int k = levels; k >= j; --k) t[k] = (f * t[k] - t[k - 1]) / (f - 1.0);
  }
  return t[levels];
}

MaximizeResult maximize_scalar(const std::function<double(double)>& fn, double lo,
                               double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("maximize_scalar: need lo < hi");
  if (!(tol > 0)) throw std::invalid_argument("maximize_scalar: tol must be positive");

  const double lo0 = lo;
  const double hi0 = hi;
  int evals = 0;
  auto eval = [&](double x) {
    const double v = fn(x);
    ++evals;
    if (!std::isfinite(v))
      throw numerical_error("non-finite objective value in maximize_scalar");
    return v;
  };

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = eval(x1);
  double f2 = eval(x2);
  int iter = 0;
  while (hi - lo > tol && iter++ < 400) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = eval(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = eval(x1);
    }
  }

  MaximizeResult result;
  result.argmax = 0.5 * (lo + hi);
  result.max = eval(result.argmax);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.evaluations = evals;
  result.endpoint_warning =
      (result.argmax - lo0 <= 2.0 * tol) || (hi0 - result.argmax <= 2.0 * tol);
  return result;
}

}  // namespace qmorse
