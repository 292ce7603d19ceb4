#include "qmorse/physchem.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "qmorse/format.hpp"

namespace qmorse {

namespace {

constexpr const char* kCsvHeader = "name,m_amu,V0_eV,alpha_invA";

void validate_constants(const std::string& name, double m, double v0, double alpha) {
  if (!(m > 0) || !std::isfinite(m))
    throw validation_error("molecule '" + name + "': reduced mass must be positive");
  if (!(v0 > 0) || !std::isfinite(v0))
    throw validation_error("molecule '" + name + "': dissociation energy must be positive");
  if (!(alpha > 0) || !std::isfinite(alpha))
    throw validation_error("molecule '" + name + "': range parameter must be positive");
}

double parse_field(const std::string& text, const std::string& what, int line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw parse_error("line " + std::to_string(line_no) + ": cannot parse " + what +
                      " from '" + text + "'");
  }
}

}  // namespace

Molecule make_molecule(std::string name, double m_amu, double v0_ev,
                       double alpha_inv_angstrom) {
  if (name.empty()) throw validation_error("molecule name must be non-empty");
  validate_constants(name, m_amu, v0_ev, alpha_inv_angstrom);
  Molecule mol;
  mol.name = std::move(name);
  mol.m = m_amu;
  mol.v0 = v0_ev;
  mol.alpha = alpha_inv_angstrom;
  mol.a = 1.0 / alpha_inv_angstrom;
  return mol;
}

void Registry::add(Molecule mol) {
  if (find(mol.name) != nullptr)
    throw duplicate_name_error("duplicate molecule name '" + mol.name + "'");
  molecules_.push_back(std::move(mol));
}

const Molecule& Registry::get(const std::string& name) const {
  if (const Molecule* m = find(name)) return *m;
  throw unknown_molecule_error("unknown molecule '" + name + "'");
}

const Molecule* Registry::find(const std::string& name) const noexcept {
  for (const Molecule& m : molecules_)
    if (m.name == name) return &m;
  return nullptr;
}

Registry builtin_registry() {
  Registry reg;
  reg.add(make_molecule("HCl", 0.9801045, 4.61907, 2.38057));
  reg.add(make_molecule("H2", 0.50391, 4.7446, 1.440558));
  reg.add(make_molecule("CO", 6.8606719, 11.2256, 2.59441));
  reg.add(make_molecule("LiH", 0.8801221, 2.515287, 1.7998368));
  return reg;
}

Registry parse_registry_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty registry file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw parse_error("bad CSV header: expected '" + std::string(kCsvHeader) + "'");

  Registry reg;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4)
      throw parse_error("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                        std::to_string(fields.size()));
    double m = parse_field(fields[1], "m_amu", line_no);
    double v0 = parse_field(fields[2], "V0_eV", line_no);
    double alpha = parse_field(fields[3], "alpha_invA", line_no);
    reg.add(make_molecule(fields[0], m, v0, alpha));
  }
  return reg;
}

Registry parse_registry_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON registry: ") + e.what());
  }
  if (!doc.is_array()) throw parse_error("JSON registry must be an array of objects");
  Registry reg;
  for (const auto& item : doc) {
    if (!item.is_object()) throw parse_error("JSON registry entries must be objects");
    for (const char* key : {"name", "m_amu", "V0_eV", "alpha_invA"})
      if (!item.contains(key))
        throw parse_error(std::string("JSON registry entry missing key '") + key + "'");
    if (!item["name"].is_string() || !item["m_amu"].is_number() ||
        !item["V0_eV"].is_number() || !item["alpha_invA"].is_number())
      throw parse_error("JSON registry entry has a wrongly typed field");
    reg.add(make_molecule(item["name"].get<std::string>(), item["m_amu"].get<double>(),
                          item["V0_eV"].get<double>(), item["alpha_invA"].get<double>()));
  }
  return reg;
}

Registry load_registry(const std::filesystem::path& path, RegistryFormat format) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open registry file '" + path.string() + "'");
  return format == RegistryFormat::csv ? parse_registry_csv(in) : parse_registry_json(in);
}

void write_registry_csv(const Registry& reg, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const Molecule& m : reg.molecules())
    out << m.name << ',' << format_number(m.m) << ',' << format_number(m.v0) << ','
        << format_number(m.alpha) << '\n';
}

void write_registry_json(const Registry& reg, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Molecule& m : reg.molecules())
    arr.push_back({{"name", m.name}, {"m_amu", m.m}, {"V0_eV", m.v0}, {"alpha_invA", m.alpha}});
  out << arr.dump(2) << '\n';
}

double kelvin_from_beta(double beta) {
  if (!(beta > 0)) throw std::domain_error("beta must be positive");
  return 1.0 / (PhysicalConstants::k_b * beta);
}

double beta_from_kelvin(double t_kelvin) {
  if (!(t_kelvin > 0)) throw std::domain_error("temperature must be positive");
  return 1.0 / (PhysicalConstants::k_b * t_kelvin);
}

}  // namespace qmorse
