#include "qmorse/spectrum.hpp"

#include <cmath>

namespace qmorse {

namespace {

void require_deformation(double q) {
  if (!(q > 0.0) || q > 1.0 || !std::isfinite(q))
    throw std::domain_error("deformation q must lie in (0, 1]");
}

}  // namespace

double potential(double x, const Molecule& mol, double q) {
  require_deformation(q);
  const double e = std::exp(-mol.alpha * x);
  return mol.v0 * (e * e - 2.0 * q * e);
}

double well_capacity(const Molecule& mol) {
  return std::sqrt(8.0 * mol.mass_ev() * mol.v0) / (PhysicalConstants::hbar_c * mol.alpha);
}

double level_energy(const DeformedSpectrum& s, double x) {
  const double u = 1.0 - (2.0 * x + 1.0) / (s.q * s.nu);
  return -s.q * s.q * s.molecule.v0 * u * u;
}

DeformedSpectrum make_spectrum(const Molecule& mol, double q) {
  require_deformation(q);
  DeformedSpectrum s;
  s.molecule = mol;
  s.q = q;
  s.nu = well_capacity(mol);
  s.mu = q * s.nu / 2.0;

  const double top = s.mu - 0.5;  // continuous upper bound on n
  if (top < 0.0) return s;        // no bound states; empty ladder

  s.n_max = static_cast<int>(std::floor(top));
  s.edge_level = (static_cast<double>(s.n_max) == top);  // level exactly at E = 0
  s.levels.reserve(s.n_max + 1);
  for (int n = 0; n <= s.n_max; ++n) s.levels.push_back(level_energy(s, n));
  return s;
}

std::vector<double> excitation_energies(const DeformedSpectrum& s) {
  if (s.empty()) throw empty_spectrum_error("excitation_energies: spectrum has no bound states");
  std::vector<double> de;
  de.reserve(s.levels.size());
  for (double e : s.levels) de.push_back(e - s.levels.front());
  return de;
}

std::map<std::string, double> nu_table(const Registry& reg) {
  std::map<std::string, double> table;
  for (const Molecule& m : reg.molecules()) table[m.name] = well_capacity(m);
  return table;
}

}  // namespace qmorse
