#include "qmorse/partition.hpp"

#include <cmath>

#include "qmorse/numerics.hpp"

namespace qmorse {

namespace {

constexpr double kFactorial2p[] = {0, 2.0, 24.0, 720.0};  // (2p)! for p = 1..3

void require_nonempty(const DeformedSpectrum& s, const char* who) {
  if (s.empty())
    throw empty_spectrum_error(std::string(who) + ": spectrum has no bound states");
}

void require_em_method(const PartitionMethod& method) {
  if (method.tag != ZMethodTag::euler_maclaurin)
    throw std::invalid_argument("z_euler_maclaurin: method.tag mismatch");
  if (method.em_order < 1 || method.em_order > 3)
    throw std::invalid_argument("em_order must be 1, 2 or 3");
}

}  // namespace

PartitionResult z_direct(const DeformedSpectrum& s, double beta) {
  require_nonempty(s, "z_direct");
  if (beta < 0 || !std::isfinite(beta))
    throw std::domain_error("z_direct: beta must be non-negative");

  const double e0 = s.levels.front();
  double z = 0.0;
  double smallest = 1.0;
  for (int n = s.n_max; n >= 1; --n) {  // smallest terms first
    const double term = std::exp(-beta * (s.levels[n] - e0));
    if (n == s.n_max) smallest = term;
    z += term;
  }
  z += 1.0;  // ground term, exactly 1

  PartitionResult result;
  result.z = z;
  result.beta = beta;
  result.method = {ZMethodTag::direct, 0, EndpointMode::lower_only};
  result.diagnostics["terms"] = static_cast<double>(s.n_max + 1);
  result.diagnostics["smallest_term"] = smallest;
  return result;
}

double em_summand(double x, const DeformedSpectrum& s, double beta) {
  require_nonempty(s, "em_summand");
  if (beta < 0) throw std::domain_error("em_summand: beta must be non-negative");
  return std::exp(-beta * (level_energy(s, x) - level_energy(s, 0.0)));
}

double em_summand_derivative(double x, int order, const DeformedSpectrum& s,
                             double beta) {
  if (order != 1 && order != 3 && order != 5)
    throw std::invalid_argument("em_summand_derivative: order must be 1, 3 or 5");
  require_nonempty(s, "em_summand_derivative");
  if (beta < 0) throw std::domain_error("em_summand_derivative: beta must be non-negative");

  const double qnu = s.q * s.nu;
  const double c = beta * s.q * s.q * s.molecule.v0;
  const double k = 2.0 / qnu;
  const double u = 1.0 - (2.0 * x + 1.0) / qnu;
  const double a = -2.0 * c * k * u;  // g'(x)
  const double b = 2.0 * c * k * k;  // g''(x), constant
  const double f = em_summand(x, s, beta);

  switch (order) {
    case 1:
      return a * f;
    case 3:
      return (a * a * a + 3.0 * a * b) * f;
    default:  // 5
      return (std::pow(a, 5) + 10.0 * a * a * a * b + 15.0 * a * b * b) * f;
  }
}

PartitionResult z_euler_maclaurin(const DeformedSpectrum& s, double beta,
                                  PartitionMethod method) {
  require_nonempty(s, "z_euler_maclaurin");
  require_em_method(method);
  if (!(beta > 0)) throw std::domain_error("z_euler_maclaurin: beta must be positive");

  const int n_top = s.n_max;
  const double qnu = s.q * s.nu;
  const double c = beta * s.q * s.q * s.molecule.v0;
  const double u0 = 1.0 - 1.0 / qnu;
  const double u_top = 1.0 - (2.0 * n_top + 1.0) / qnu;

  // integral_0^{n_max} f dx after substituting u = 1 - (2x+1)/(q nu);
  // the exp(beta E_0) reference factor cancels the scale exactly
  const ScaledValue raw = exp_scaled_erfi_integral(c, u_top, u0);
  const double integral =
      0.5 * qnu * raw.mantissa * std::exp(raw.log_scale - c * u0 * u0);

  const double half_f0 = 0.5 * em_summand(0.0, s, beta);

  PartitionResult result;
  result.beta = beta;
  result.method = method;
  result.diagnostics["half_f0"] = half_f0;
  result.diagnostics["integral"] = integral;
  result.diagnostics["integral_log_scale"] = raw.log_scale;

  double corrections = 0.0;
  for (int p = 1; p <= method.em_order; ++p) {
    const double term = bernoulli(2 * p).value() / kFactorial2p[p] *
                        em_summand_derivative(0.0, 2 * p - 1, s, beta);
    corrections += term;
    result.diagnostics["correction_p" + std::to_string(p)] = term;
  }

  double z = half_f0 + integral - corrections;

  if (method.endpoint_mode == EndpointMode::full_endpoints) {
    const double half_fn = 0.5 * em_summand(n_top, s, beta);
    double upper = 0.0;
    for (int p = 1; p <= method.em_order; ++p)
      upper += bernoulli(2 * p).value() / kFactorial2p[p] *
               em_summand_derivative(n_top, 2 * p - 1, s, beta);
    z += half_fn + upper;
    result.diagnostics["upper_half_fn"] = half_fn;
    result.diagnostics["upper_corrections"] = upper;
  }

  // continuous-limit variant (upper limit mu - 1/2, where u vanishes), as a
  // diagnostic only
  const ScaledValue cont = exp_scaled_erfi_integral(c, 0.0, u0);
  result.diagnostics["integral_continuous_limit"] =
      0.5 * qnu * cont.mantissa * std::exp(cont.log_scale - c * u0 * u0);

  if (!std::isfinite(z))
    throw numerical_error("z_euler_maclaurin: scaled representation exhausted");
  result.z = z;
  return result;
}

PartitionResult z_closed_form(const DeformedSpectrum& s, double beta) {
  require_nonempty(s, "z_closed_form");
  if (!(beta > 0)) throw std::domain_error("z_closed_form: beta must be positive");

  const double q = s.q;
  const double nu = s.nu;
  const double v0 = s.molecule.v0;
  const double qnu = q * nu;
  const double u0 = 1.0 - 1.0 / qnu;
  const double u_top = 1.0 - (2.0 * s.n_max + 1.0) / qnu;
  const double c = beta * q * q * v0;

  // Bernoulli-derivative terms expanded in (beta, q, V0, nu):
  //   + (beta q V0 / (3 nu)) u0
  //   - (1/720) [ (4 beta q V0 / nu)^3 u0^3 + (96 beta^2 q V0^2 / nu^3) u0 ]
  const double linear = beta * q * v0 / (3.0 * nu) * u0;
  const double w = 4.0 * beta * q * v0 / nu;
  const double cubic_pair =
      (w * w * w * u0 * u0 * u0 + 96.0 * beta * beta * q * v0 * v0 / (nu * nu * nu) * u0) /
      720.0;

  // integral term through the Dawson function:
  //   (q nu / (2 sqrt(c))) [ D(sqrt(c) u0) - exp(-c (u0^2 - u_top^2)) D(sqrt(c) u_top) ]
  const double rc = std::sqrt(c);
  const double integral =
      0.5 * qnu / rc *
      (dawson(rc * u0) - std::exp(-c * (u0 * u0 - u_top * u_top)) * dawson(rc * u_top));

  double z = 0.5 + integral + linear - cubic_pair;

  PartitionResult result;
  result.z = z;
  result.beta = beta;
  result.method = {ZMethodTag::closed_form, 2, EndpointMode::lower_only};
  result.diagnostics["integral"] = integral;
  result.diagnostics["linear_term"] = linear;
  result.diagnostics["cubic_pair_term"] = -cubic_pair;
  if (!std::isfinite(z)) throw numerical_error("z_closed_form: non-finite result");
  return result;
}

PartitionResult z_by_method(const DeformedSpectrum& s, double beta,
                            const PartitionMethod& method) {
  switch (method.tag) {
    case ZMethodTag::direct:
      return z_direct(s, beta);
    case ZMethodTag::euler_maclaurin:
      return z_euler_maclaurin(s, beta, method);
    case ZMethodTag::closed_form:
      return z_closed_form(s, beta);
  }
  throw std::invalid_argument("z_by_method: bad method tag");
}

ClosedFormCoefficients closed_form_coefficients(const Molecule& mol) {
  ClosedFormCoefficients k;
  const double r = PhysicalConstants::hbar_c / std::sqrt(8.0 * mol.mass_ev() * mol.v0);
  k.a_over_nu = r;
  k.nu_per_a = 1.0 / r;
  k.linear_coeff = mol.v0 * r / 3.0;
  k.cubic_coeff = std::pow(4.0 * mol.v0 * r, 3);
  k.quadratic_coeff = 96.0 * mol.v0 * mol.v0 * r * r * r;
  k.well_depth = mol.v0;
  k.sqrt_well_depth = std::sqrt(mol.v0);
  k.erf_prefactor = r * std::sqrt(M_PI * mol.v0);
  k.erf_denom_q2 = 16.0 * mol.v0 * mol.v0 * r * r;
  k.erf_denom_cross = 32.0 * mol.v0 * mol.v0 * r * r * r;
  k.erf_denom_const = 16.0 * mol.v0 * mol.v0 * r * r * r * r;
  return k;
}

}  // namespace qmorse
