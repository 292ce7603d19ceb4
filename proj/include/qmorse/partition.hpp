#ifndef QMORSE_PARTITION_HPP
#define QMORSE_PARTITION_HPP

#include <map>
#include <string>

#include "qmorse/spectrum.hpp"

namespace qmorse {

enum class ZMethodTag { direct, euler_maclaurin, closed_form };

/// Endpoint handling of the Euler-MacLaurin formula. lower_only keeps the
/// 1/2 f(0) and lower-limit derivative terms only, the truncation the
/// analytic closed form expands; full_endpoints adds the 1/2 f(n_max) and
/// upper-limit derivative terms of the standard formula.
enum class EndpointMode { lower_only, full_endpoints };

struct PartitionMethod {
  ZMethodTag tag = ZMethodTag::direct;
  int em_order = 2;  ///< Bernoulli correction depth, p = 1..em_order, in {1,2,3}
  EndpointMode endpoint_mode = EndpointMode::lower_only;
};

struct PartitionResult {
  double z = 0;
  double beta = 0;  ///< 1/eV
  PartitionMethod method;
  std::map<std::string, double> diagnostics;
};

/**
 * Exact partition function by direct summation,
 *   Z = sum_{n=0}^{n_max} exp(-beta (E_n - E_0)),
 * referenced to the ground state so the n = 0 term is exactly 1 and
 * Z -> 1 as beta -> infinity.
 */
PartitionResult z_direct(const DeformedSpectrum& s, double beta);

/// Continuous summand f(x) = exp(-beta (E(x) - E_0)); f(0) = 1. At integer
/// x it reproduces the direct-sum terms bit-for-bit.
double em_summand(double x, const DeformedSpectrum& s, double beta);

/// Analytic odd-order derivative of the summand (order 1, 3 or 5). With
/// g(x) = -beta (E(x) - E_0), A = g', B = g'' (constant, higher vanish):
///   f'    = A f
///   f'''  = (A^3 + 3 A B) f
///   f^(5) = (A^5 + 10 A^3 B + 15 A B^2) f
double em_summand_derivative(double x, int order, const DeformedSpectrum& s,
                             double beta);

/**
 * Euler-MacLaurin approximation
 *   Z = 1/2 f(0) + integral_0^{n_max} f dx
 *       - sum_{p=1}^{P} B_{2p}/(2p)! f^(2p-1)(0)   [+ upper-endpoint terms],
 * with the integral evaluated through the Dawson function in scaled form so
 * no intermediate exp(beta q^2 V0) is ever materialised. Diagnostics record
 * every term plus the continuous-upper-limit variant of the integral.
 */
PartitionResult z_euler_maclaurin(const DeformedSpectrum& s, double beta,
                                  PartitionMethod method = {ZMethodTag::euler_maclaurin, 2,
                                                            EndpointMode::lower_only});

/// Fully analytic form of the order-2, lower-endpoint Euler-MacLaurin
/// partition function: the Bernoulli-derivative terms expanded in
/// (beta, q, V0, nu) plus the Dawson-function integral term. Agrees with
/// z_euler_maclaurin(order 2, lower_only) to better than 1e-10 relative.
PartitionResult z_closed_form(const DeformedSpectrum& s, double beta);

/// Dispatch on method.tag.
PartitionResult z_by_method(const DeformedSpectrum& s, double beta,
                            const PartitionMethod& method);

/// Molecule-dependent constants of the analytic closed form, written in the
/// layout  1/2 + L beta q u0 / a - (1/720)(K3 beta^3 q^3 u0^3 + K2 beta^2 q u0)/a^3 - erf term,
/// where u0 = 1 - r/(a q) and r = hbar_c / sqrt(8 m V0).
struct ClosedFormCoefficients {
  double a_over_nu = 0;        ///< r = hbar_c/sqrt(8 m V0), Angstrom
  double nu_per_a = 0;         ///< 1/r
  double linear_coeff = 0;     ///< L  = V0 r / 3
  double cubic_coeff = 0;      ///< K3 = (4 V0 r)^3
  double quadratic_coeff = 0;  ///< K2 = 96 V0^2 r^3
  double well_depth = 0;       ///< V0, the energy constant of the exponential
  double sqrt_well_depth = 0;  ///< sqrt(V0), the error-function argument factor
  double erf_prefactor = 0;    ///< r sqrt(pi V0)
  double erf_denom_q2 = 0;     ///< 16 V0^2 r^2, q^2 coefficient under the root
  double erf_denom_cross = 0;  ///< 32 V0^2 r^3, q/a cross coefficient
  double erf_denom_const = 0;  ///< 16 V0^2 r^4, 1/a^2 coefficient
};

ClosedFormCoefficients closed_form_coefficients(const Molecule& mol);

}  // namespace qmorse

#endif
