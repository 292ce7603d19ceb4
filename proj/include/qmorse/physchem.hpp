#ifndef QMORSE_PHYSCHEM_HPP
#define QMORSE_PHYSCHEM_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmorse {

/**
 * Unit conventions used throughout the library: energies in eV, lengths in
 * Angstrom, temperatures in kelvin, inverse temperature beta = 1/(kB T) in
 * 1/eV. Reduced masses enter in amu and are converted to their energy
 * equivalent with amu_to_ev.
 */
struct PhysicalConstants {
  static constexpr double hbar_c = 1973.269;         // eV * Angstrom
  static constexpr double amu_to_ev = 931.5e6;       // eV per amu
  static constexpr double k_b = 8.617333262e-5;      // eV / K (CODATA 2018)
};

/// Spectroscopic constants of a diatomic molecule.
struct Molecule {
  std::string name;
  double m = 0;      ///< reduced mass, amu
  double v0 = 0;     ///< dissociation energy (well depth), eV
  double alpha = 0;  ///< range parameter, 1/Angstrom
  double a = 0;      ///< inverse range 1/alpha, Angstrom

  /// Reduced mass as an energy, eV.
  double mass_ev() const { return m * PhysicalConstants::amu_to_ev; }
};

/// Validates the constants and derives a = 1/alpha.
Molecule make_molecule(std::string name, double m_amu, double v0_ev,
                       double alpha_inv_angstrom);

class parse_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class duplicate_name_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class unknown_molecule_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered collection of molecules with unique, case-sensitive names.
/// Immutable once filled; lookups are safe from concurrent threads.
class Registry {
 public:
  Registry() = default;

  /// Appends a molecule; throws duplicate_name_error on a repeated name.
  void add(Molecule mol);

  /// Throws unknown_molecule_error when absent.
  const Molecule& get(const std::string& name) const;

  const Molecule* find(const std::string& name) const noexcept;
  bool contains(const std::string& name) const noexcept { return find(name) != nullptr; }

  const std::vector<Molecule>& molecules() const noexcept { return molecules_; }
  std::size_t size() const noexcept { return molecules_.size(); }

 private:
  std::vector<Molecule> molecules_;
};

/// The four built-in molecules (HCl, H2, CO, LiH) with their tabulated
/// spectroscopic constants.
Registry builtin_registry();

enum class RegistryFormat { csv, json };

/// CSV registry format. Header is exactly `name,m_amu,V0_eV,alpha_invA`,
/// one molecule per row, UTF-8, LF line endings.
Registry parse_registry_csv(std::istream& in);
Registry parse_registry_json(std::istream& in);
Registry load_registry(const std::filesystem::path& path, RegistryFormat format);

void write_registry_csv(const Registry& reg, std::ostream& out);
void write_registry_json(const Registry& reg, std::ostream& out);

/// T = 1/(kB * beta). Throws std::domain_error for beta <= 0.
double kelvin_from_beta(double beta);
/// beta = 1/(kB * T). Throws std::domain_error for T <= 0.
double beta_from_kelvin(double t_kelvin);

}  // namespace qmorse

#endif
