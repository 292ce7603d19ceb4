#ifndef QMORSE_SPECTRUM_HPP
#define QMORSE_SPECTRUM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmorse/physchem.hpp"

namespace qmorse {

class empty_spectrum_error : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Bound-state ladder of the q-deformed Morse oscillator for one
/// (molecule, q) pair. Immutable after construction.
struct DeformedSpectrum {
  Molecule molecule;
  double q = 1.0;   ///< deformation, in (0, 1]
  double nu = 0;    ///< well capacity, sqrt(8 m V0) / (hbar_c alpha)
  double mu = 0;    ///< q * nu / 2
  int n_max = -1;   ///< highest bound quantum number; -1 when none
  std::vector<double> levels;  ///< E_n in eV for n = 0..n_max
  bool edge_level = false;     ///< top level sits exactly at E = 0

  bool empty() const { return levels.empty(); }
};

/// Deformed Morse potential V0 (exp(-2 alpha x) - 2 q exp(-alpha x)).
/// Minimum -q^2 V0 at x = ln(1/q)/alpha. Throws for q outside (0, 1].
double potential(double x, const Molecule& mol, double q);

/// nu = sqrt(8 m V0) / (hbar_c alpha); mu = q nu / 2 bounds the ladder.
double well_capacity(const Molecule& mol);

/// Level energies E_n = -q^2 V0 (1 - (n + 1/2)/mu)^2 for n = 0..n_max with
/// n_max = floor(q nu / 2 - 1/2). An empty ladder (q nu < 1) is a valid
/// result, not an error.
DeformedSpectrum make_spectrum(const Molecule& mol, double q);

/// E(x), the level formula continued to real x.
double level_energy(const DeformedSpectrum& s, double x);

/// Excitation energies E_n - E_0; first element exactly 0.
std::vector<double> excitation_energies(const DeformedSpectrum& s);

/// nu per molecule name.
std::map<std::string, double> nu_table(const Registry& reg);

}  // namespace qmorse

#endif
