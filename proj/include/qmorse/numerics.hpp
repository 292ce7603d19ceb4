#ifndef QMORSE_NUMERICS_HPP
#define QMORSE_NUMERICS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qmorse {

/// Thrown when a numerical kernel meets a non-finite value it cannot absorb
/// (bad stencil point, non-finite objective, exhausted scaling).
class numerical_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational, used for Bernoulli coefficients.
struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/**
 * Bernoulli numbers B_2, B_4, ..., B_{2P} as exact rationals, generated by
 * the binomial recurrence  B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j.
 * Built once; read-only afterwards.
 */
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_order = 20);

  /// B_{two_p} for even two_p in [2, max_order]; throws std::out_of_range.
  Rational at(int two_p) const;
  double value(int two_p) const { return at(two_p).value(); }
  int max_order() const { return max_order_; }

 private:
  int max_order_;
  std::vector<Rational> even_;  // B_2, B_4, ...
};

/// B_{two_p} from a shared table (orders up to 20).
Rational bernoulli(int two_p);

/// Standard error function.
double erf(double x);

/// Dawson function D(x) = exp(-x^2) * integral_0^x exp(t^2) dt.
/// Series branch for |x| <= 6, asymptotic branch beyond; odd in x;
/// relative accuracy ~1e-13 over both branches.
double dawson(double x);

/// Number represented as mantissa * exp(log_scale), so that integrals of
/// exp(c u^2) can be carried around without overflowing a double.
struct ScaledValue {
  double mantissa = 0;
  double log_scale = 0;
  double value() const;
};

/**
 * integral_{u_lo}^{u_hi} exp(c u^2) du for c > 0, returned in scaled form.
 * Uses the primitive  integral_0^x exp(c t^2) dt = D(sqrt(c) x) exp(c x^2) / sqrt(c).
 */
ScaledValue exp_scaled_erfi_integral(double c, double u_lo, double u_hi);

/// Central-difference configuration. base_step is relative to the
/// evaluation point; when unset the default is eps^(1/3) for first
/// derivatives and eps^(1/4) for second derivatives.
struct DiffConfig {
  enum class Scheme { central };
  Scheme scheme = Scheme::central;
  std::optional<double> base_step;  // in (0, 1) when set
  int richardson_levels = 2;
};

/// Derivative of order 1 or 2 at `at` by Richardson-extrapolated central
/// differences. Throws numerical_error on a non-finite stencil value.
double differentiate(const std::function<double(double)>& fn, double at,
                     int order, const DiffConfig& cfg = {});

struct MaximizeResult {
  double argmax = 0;
  double max = 0;
  double bracket_lo = 0;   ///< final bracket, width <= tol
  double bracket_hi = 0;
  bool endpoint_warning = false;  ///< maximum sits at an interval end: bracket likely wrong
  int evaluations = 0;
};

/// Golden-section search for the maximum of fn on [lo, hi]. For a unimodal
/// fn the returned argmax is within tol of the true maximizer.
MaximizeResult maximize_scalar(const std::function<double(double)>& fn,
                               double lo, double hi, double tol);

}  // namespace qmorse

#endif
