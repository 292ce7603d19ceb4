#ifndef QMORSE_THERMO_HPP
#define QMORSE_THERMO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmorse/numerics.hpp"
#include "qmorse/partition.hpp"

namespace qmorse {

enum class DiffMode { analytic, numeric };

/// One thermodynamic state point. Energies are referenced to the ground
/// state (U is the mean excitation energy); S and C are in units of kB.
struct ThermoPoint {
  double beta = 0;             ///< 1/eV
  double temperature = 0;      ///< K
  double free_energy = 0;      ///< F = -ln Z / beta, eV
  double internal_energy = 0;  ///< U = -d ln Z / d beta, eV
  double entropy = 0;          ///< S = ln Z + beta U, in kB
  double heat_capacity = 0;    ///< C = beta^2 d^2 ln Z / d beta^2, in kB
  PartitionMethod method;
  DiffMode diff = DiffMode::analytic;
  std::map<std::string, double> diagnostics;  // carries z, log_z
};

/// The analytic path (direct method only) uses the exact moment formulas
/// U = <dE>, C = beta^2 Var(dE) over Boltzmann weights; the numeric path
/// differentiates ln Z of whichever method was requested.
ThermoPoint thermo_point(const DeformedSpectrum& s, double beta,
                         const PartitionMethod& method, DiffMode diff,
                         const DiffConfig& dcfg = {});

std::vector<std::pair<double, double>> specific_heat_curve(
    const DeformedSpectrum& s, const std::vector<double>& betas,
    const PartitionMethod& method, DiffMode diff);

struct CriticalPoint {
  double beta_c = 0;        ///< 1/eV
  double t_c = 0;           ///< K, = 1/(kB beta_c)
  double c_max = 0;         ///< in kB
  bool endpoint_warning = false;
};

/// Locates the specific-heat maximum on [lo, hi] by a coarse scan followed
/// by golden-section refinement.
CriticalPoint critical_temperature(const DeformedSpectrum& s, double lo,
                                   double hi, const PartitionMethod& method,
                                   DiffMode diff, double tol = 1e-8);

struct SweepRow {
  double q = 0;
  ThermoPoint point;
};

/// Cartesian (q, beta) grid of thermo points, sorted by (q, beta).
/// q values with no bound states are listed in empty_qs and produce no rows.
struct SweepTable {
  std::string molecule;
  std::vector<SweepRow> rows;
  std::vector<double> empty_qs;
};

SweepTable sweep(const Molecule& mol, std::vector<double> qs,
                 const std::vector<double>& betas, const PartitionMethod& method,
                 DiffMode diff);

}  // namespace qmorse

#endif
