#include "qmorse/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace qmorse {

namespace {

struct Moments {
  double z;
  double mean;      // <dE>
  double variance;  // Var(dE)
};

Moments boltzmann_moments(const DeformedSpectrum& s, double beta) {
  const double e0 = s.levels.front();
  const std::size_t n = s.levels.size();
  std::vector<double> de(n), w(n);
  double z = 0.0;
  double s1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    de[i] = s.levels[i] - e0;
    w[i] = std::exp(-beta * de[i]);
    z += w[i];
    s1 += w[i] * de[i];
  }
  const double mean = s1 / z;
  double s2 = 0.0;  // two-pass variance, non-negative by construction
  for (std::size_t i = 0; i < n; ++i) s2 += w[i] * (de[i] - mean) * (de[i] - mean);
  return {z, mean, s2 / z};
}

}  // namespace

ThermoPoint thermo_point(const DeformedSpectrum& s, double beta,
                         const PartitionMethod& method, DiffMode diff,
                         const DiffConfig& dcfg) {
  if (!(beta > 0)) throw std::domain_error("thermo_point: beta must be positive");
  if (s.empty()) throw empty_spectrum_error("thermo_point: spectrum has no bound states");
  if (diff == DiffMode::analytic && method.tag != ZMethodTag::direct)
    throw std::invalid_argument("analytic differentiation requires the direct method");

  ThermoPoint pt;
  pt.beta = beta;
  pt.temperature = kelvin_from_beta(beta);
  pt.method = method;
  pt.diff = diff;

  double z, log_z;
  if (diff == DiffMode::analytic) {
    const Moments mo = boltzmann_moments(s, beta);
    z = mo.z;
    log_z = std::log(z);
    pt.internal_energy = mo.mean;
    pt.heat_capacity = beta * beta * mo.variance;
  } else {
    z = z_by_method(s, beta, method).z;
    if (!(z > 0))
      throw numerical_error("thermo_point: partition function is not positive");
    log_z = std::log(z);
    auto log_z_of = [&](double b) {
      const double zb = z_by_method(s, b, method).z;
      return std::log(zb);  // NaN for zb <= 0; the stencil check reports it
    };
    pt.internal_energy = -differentiate(log_z_of, beta, 1, dcfg);
    pt.heat_capacity = beta * beta * differentiate(log_z_of, beta, 2, dcfg);
  }

  pt.free_energy = -log_z / beta;
  pt.entropy = log_z + beta * pt.internal_energy;
  pt.diagnostics["z"] = z;
  pt.diagnostics["log_z"] = log_z;
  return pt;
}

std::vector<std::pair<double, double>> specific_heat_curve(
    const DeformedSpectrum& s, const std::vector<double>& betas,
    const PartitionMethod& method, DiffMode diff) {
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0)) throw std::domain_error("specific_heat_curve: beta grid must be positive");
    if (i > 0 && !(betas[i] > betas[i - 1]))
      throw std::invalid_argument("specific_heat_curve: beta grid must be strictly increasing");
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(betas.size());
  for (double b : betas)
    curve.emplace_back(b, thermo_point(s, b, method, diff).heat_capacity);
  return curve;
}

CriticalPoint critical_temperature(const DeformedSpectrum& s, double lo, double hi,
                                   const PartitionMethod& method, DiffMode diff,
                                   double tol) {
  if (!(lo > 0) || !(lo < hi))
    throw std::invalid_argument("critical_temperature: need 0 < lo < hi");
  if (s.empty())
    throw empty_spectrum_error("critical_temperature: spectrum has no bound states");

  auto heat = [&](double b) -> double {
    // Approximate methods lose positivity of Z at large beta; steer the
    // search away from that region instead of aborting it.
    try {
      return thermo_point(s, b, method, diff).heat_capacity;
    } catch (const numerical_error&) {
      return -1e300;
    }
  };

  // coarse scan localizes the peak before golden-section refinement
  constexpr int kScanPoints = 160;
  int best = -1;
  double best_c = -1e301;
  std::vector<double> grid(kScanPoints + 1);
  for (int i = 0; i <= kScanPoints; ++i) {
    grid[i] = lo + (hi - lo) * i / kScanPoints;
    const double ci = heat(grid[i]);
    if (ci > best_c) {
      best_c = ci;
      best = i;
    }
  }
  if (best < 0 || best_c <= -1e300)
    throw numerical_error("critical_temperature: no finite specific heat in bracket");

  const double refine_lo = grid[std::max(0, best - 1)];
  const double refine_hi = grid[std::min(kScanPoints, best + 1)];
  const MaximizeResult r = maximize_scalar(heat, refine_lo, refine_hi, tol);

  CriticalPoint cp;
  cp.beta_c = r.argmax;
  cp.t_c = kelvin_from_beta(r.argmax);
  cp.c_max = r.max;
  cp.endpoint_warning = (best == 0) || (best == kScanPoints);
  return cp;
}

SweepTable sweep(const Molecule& mol, std::vector<double> qs,
                 const std::vector<double>& betas, const PartitionMethod& method,
                 DiffMode diff) {
  for (double q : qs)
    if (!(q > 0) || q > 1.0) throw std::domain_error("sweep: q values must lie in (0, 1]");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0)) throw std::domain_error("sweep: beta grid must be positive");
    if (i > 0 && !(betas[i] > betas[i - 1]))
      throw std::invalid_argument("sweep: beta grid must be strictly increasing");
  }
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
    throw std::invalid_argument("sweep: duplicate q values");

  SweepTable table;
  table.molecule = mol.name;
  for (double q : qs) {
    const DeformedSpectrum s = make_spectrum(mol, q);
    if (s.empty()) {
      table.empty_qs.push_back(q);
      continue;
    }
    for (double b : betas) table.rows.push_back({q, thermo_point(s, b, method, diff)});
  }
  return table;
}

}  // namespace qmorse
