#include "qmorse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qmorse/format.hpp"
#include "qmorse/numerics.hpp"
#include "qmorse/partition.hpp"
#include "qmorse/physchem.hpp"
#include "qmorse/spectrum.hpp"
#include "qmorse/thermo.hpp"

namespace qmorse::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string registry_path;
  std::string format = "csv";
  std::string out_path;
  int em_order = 2;
  std::string endpoints = "paper";
  std::string diff = "analytic";
  std::string method = "direct";

  std::string molecule;
  double q = 1.0;
  std::string q_list;  // sweep/tc: comma-separated
  double beta_min = 0.1;
  double beta_max = 20.0;
  int beta_steps = 100;
  bool log_beta = false;
  double bracket_lo = 0.05;
  double bracket_hi = 100.0;
  double tol = 1e-8;
};

EndpointMode endpoint_mode_of(const Options& opt) {
  if (opt.endpoints == "paper") return EndpointMode::lower_only;
  if (opt.endpoints == "full") return EndpointMode::full_endpoints;
  throw std::invalid_argument("--endpoints must be 'paper' or 'full'");
}

DiffMode diff_mode_of(const Options& opt) {
  if (opt.diff == "analytic") return DiffMode::analytic;
  if (opt.diff == "numeric") return DiffMode::numeric;
  throw std::invalid_argument("--diff must be 'analytic' or 'numeric'");
}

PartitionMethod method_of(const Options& opt) {
  PartitionMethod m;
  m.em_order = opt.em_order;
  m.endpoint_mode = endpoint_mode_of(opt);
  if (opt.method == "direct") m.tag = ZMethodTag::direct;
  else if (opt.method == "em") m.tag = ZMethodTag::euler_maclaurin;
  else if (opt.method == "closed") m.tag = ZMethodTag::closed_form;
  else throw std::invalid_argument("--method must be 'direct', 'em' or 'closed'");
  return m;
}

const char* method_name(ZMethodTag tag) {
  switch (tag) {
    case ZMethodTag::direct: return "direct";
    case ZMethodTag::euler_maclaurin: return "euler_maclaurin";
    case ZMethodTag::closed_form: return "closed_form";
  }
  return "?";
}

std::vector<double> parse_q_list(const std::string& text) {
  std::vector<double> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad q value '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad q value '" + item + "'");
    qs.push_back(v);
  }
  if (qs.empty()) throw std::invalid_argument("empty q list");
  return qs;
}

std::vector<double> beta_grid(const Options& opt) {
  if (opt.beta_steps < 1) throw std::invalid_argument("--beta-steps must be >= 1");
  if (!(opt.beta_min > 0)) throw std::invalid_argument("--beta-min must be positive");
  if (opt.beta_steps > 1 && !(opt.beta_max > opt.beta_min))
    throw std::invalid_argument("--beta-max must exceed --beta-min");
  std::vector<double> grid;
  grid.reserve(opt.beta_steps);
  if (opt.beta_steps == 1) {
    grid.push_back(opt.beta_min);
    return grid;
  }
  if (opt.log_beta) {
    const double ratio = std::log(opt.beta_max / opt.beta_min);
    for (int i = 0; i < opt.beta_steps; ++i)
      grid.push_back(opt.beta_min * std::exp(ratio * i / (opt.beta_steps - 1)));
  } else {
    for (int i = 0; i < opt.beta_steps; ++i)
      grid.push_back(opt.beta_min +
                     (opt.beta_max - opt.beta_min) * i / (opt.beta_steps - 1));
  }
  return grid;
}

Registry load_effective_registry(const Options& opt) {
  if (opt.registry_path.empty()) return builtin_registry();
  RegistryFormat fmt = RegistryFormat::csv;
  if (opt.registry_path.size() >= 5 &&
      opt.registry_path.substr(opt.registry_path.size() - 5) == ".json")
    fmt = RegistryFormat::json;
  return load_registry(opt.registry_path, fmt);
}

// ---------------------------------------------------------------------------
// emission
// ---------------------------------------------------------------------------

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
  }
  void meta(const std::string& key, double value) { meta(key, format_number(value)); }
  void meta(const std::string& key, int value) { meta(key, std::to_string(value)); }

  void header(const std::vector<std::string>& columns) { columns_ = columns; }

  void row(const std::vector<std::string>& cells) { rows_.push_back(cells); }

  void flush() {
    if (json_) {
      ordered_json doc;
      ordered_json meta = ordered_json::object();
      for (const auto& [k, v] : meta_) meta[k] = as_json(v);
      doc["meta"] = meta;
      ordered_json rows = ordered_json::array();
      for (const auto& r : rows_) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < columns_.size() && i < r.size(); ++i)
          obj[columns_[i]] = as_json(r[i]);
        rows.push_back(obj);
      }
      doc["rows"] = rows;
      out_ << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : meta_) out_ << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i)
      out_ << columns_[i] << (i + 1 < columns_.size() ? "," : "");
    out_ << '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i)
        out_ << r[i] << (i + 1 < r.size() ? "," : "");
      out_ << '\n';
    }
  }

 private:
  // numeric-looking cells become JSON numbers, everything else stays text
  static ordered_json as_json(const std::string& cell) {
    if (cell.empty()) return cell;
    char* end = nullptr;
    const long long i = std::strtoll(cell.c_str(), &end, 10);
    if (end == cell.c_str() + cell.size()) return i;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() + cell.size()) return v;
    return cell;
  }

  std::ostream& out_;
  bool json_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string fmt(double x) { return format_number(x); }

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

void cmd_molecules(const Options& opt, const Registry& reg, std::ostream& out) {
  if (opt.format == "json") {
    write_registry_json(reg, out);
  } else {
    write_registry_csv(reg, out);
  }
}

void cmd_spectrum(const Options& opt, const Registry& reg, std::ostream& out) {
  const Molecule& mol = reg.get(opt.molecule);
  const DeformedSpectrum s = make_spectrum(mol, opt.q);

  Emitter em(out, opt.format == "json");
  em.meta("molecule", mol.name);
  em.meta("q", opt.q);
  em.meta("nu", s.nu);
  em.meta("mu", s.mu);
  em.meta("n_max", s.n_max);
  if (s.empty()) em.meta("note", "no bound states");
  if (s.edge_level) em.meta("note", "top level exactly at dissociation");
  em.header({"n", "E_n_eV", "deltaE_n_eV"});
  if (!s.empty()) {
    const std::vector<double> de = excitation_energies(s);
    for (int n = 0; n <= s.n_max; ++n)
      em.row({std::to_string(n), fmt(s.levels[n]), fmt(de[n])});
  }
  em.flush();
}

void cmd_zfun(const Options& opt, const Registry& reg, std::ostream& out) {
  const Molecule& mol = reg.get(opt.molecule);
  const DeformedSpectrum s = make_spectrum(mol, opt.q);
  const std::vector<double> grid = beta_grid(opt);

  PartitionMethod em_method{ZMethodTag::euler_maclaurin, opt.em_order, endpoint_mode_of(opt)};

  Emitter em(out, opt.format == "json");
  em.meta("molecule", mol.name);
  em.meta("q", opt.q);
  em.meta("nu", s.nu);
  em.meta("n_max", s.n_max);
  em.meta("em_order", opt.em_order);
  em.meta("endpoints", opt.endpoints);
  em.meta("beta_units", "1/eV");
  em.header({"beta", "Z_direct", "Z_em", "Z_closed", "rel_dev_em", "rel_dev_closed"});
  for (double b : grid) {
    const double zd = z_direct(s, b).z;
    const double ze = z_euler_maclaurin(s, b, em_method).z;
    const double zc = z_closed_form(s, b).z;
    em.row({fmt(b), fmt(zd), fmt(ze), fmt(zc), fmt((ze - zd) / zd), fmt((zc - zd) / zd)});
  }
  em.flush();
}

void add_empty_q_note(Emitter& em, const std::vector<double>& empty_qs) {
  if (empty_qs.empty()) return;
  std::string joined;
  for (double q : empty_qs) {
    if (!joined.empty()) joined += ',';
    joined += format_number(q);
  }
  em.meta("no_bound_states_q", joined);
}

void emit_thermo_rows(Emitter& em, const std::vector<SweepRow>& rows,
                      const PartitionMethod& method, DiffMode diff) {
  const char* mname = method_name(method.tag);
  const char* dname = diff == DiffMode::analytic ? "analytic" : "numeric";
  for (const SweepRow& r : rows)
    em.row({fmt(r.q), fmt(r.point.beta), fmt(r.point.temperature), fmt(r.point.free_energy),
            fmt(r.point.internal_energy), fmt(r.point.entropy), fmt(r.point.heat_capacity),
            mname, dname});
}

void cmd_thermo(const Options& opt, const Registry& reg, std::ostream& out) {
  const Molecule& mol = reg.get(opt.molecule);
  const PartitionMethod method = method_of(opt);
  const DiffMode diff = diff_mode_of(opt);
  const SweepTable table = sweep(mol, {opt.q}, beta_grid(opt), method, diff);

  Emitter em(out, opt.format == "json");
  em.meta("molecule", mol.name);
  em.meta("method", method_name(method.tag));
  em.meta("diff", opt.diff);
  em.meta("em_order", opt.em_order);
  em.meta("endpoints", opt.endpoints);
  em.meta("beta_units", "1/eV");
  add_empty_q_note(em, table.empty_qs);
  em.header({"q", "beta", "T_K", "F_eV", "U_eV", "S_kB", "C_kB", "method", "diff"});
  emit_thermo_rows(em, table.rows, method, diff);
  em.flush();
}

void cmd_sweep(const Options& opt, const Registry& reg, std::ostream& out) {
  const Molecule& mol = reg.get(opt.molecule);
  const PartitionMethod method = method_of(opt);
  const DiffMode diff = diff_mode_of(opt);
  const std::vector<double> qs =
      opt.q_list.empty() ? std::vector<double>{0.3, 0.5, 0.7, 0.9, 1.0}
                         : parse_q_list(opt.q_list);
  const SweepTable table = sweep(mol, qs, beta_grid(opt), method, diff);

  Emitter em(out, opt.format == "json");
  em.meta("molecule", mol.name);
  em.meta("method", method_name(method.tag));
  em.meta("diff", opt.diff);
  em.meta("em_order", opt.em_order);
  em.meta("endpoints", opt.endpoints);
  em.meta("beta_units", "1/eV");
  add_empty_q_note(em, table.empty_qs);
  em.header({"q", "beta", "T_K", "F_eV", "U_eV", "S_kB", "C_kB", "method", "diff"});
  emit_thermo_rows(em, table.rows, method, diff);
  em.flush();
}

void cmd_tc(const Options& opt, const Registry& reg, std::ostream& out) {
  const PartitionMethod method = method_of(opt);
  const DiffMode diff = diff_mode_of(opt);
  if (!(opt.bracket_lo > 0) || !(opt.bracket_lo < opt.bracket_hi))
    throw std::invalid_argument("bad critical-temperature bracket");

  std::vector<const Molecule*> mols;
  if (opt.molecule.empty())
    for (const Molecule& m : reg.molecules()) mols.push_back(&m);
  else
    mols.push_back(&reg.get(opt.molecule));
  const std::vector<double> qs = opt.q_list.empty()
                                     ? std::vector<double>{0.3, 0.5, 0.7, 0.9, 1.0}
                                     : parse_q_list(opt.q_list);

  Emitter em(out, opt.format == "json");
  em.meta("method", method_name(method.tag));
  em.meta("diff", opt.diff);
  em.meta("bracket_lo", opt.bracket_lo);
  em.meta("bracket_hi", opt.bracket_hi);
  em.meta("tol", opt.tol);
  em.meta("beta_units", "1/eV");
  std::vector<double> empty_qs;
  std::string warnings;
  std::vector<std::vector<std::string>> rows;
  for (const Molecule* mol : mols) {
    for (double q : qs) {
      const DeformedSpectrum s = make_spectrum(*mol, q);
      if (s.empty()) {
        empty_qs.push_back(q);
        continue;
      }
      const CriticalPoint cp =
          critical_temperature(s, opt.bracket_lo, opt.bracket_hi, method, diff, opt.tol);
      if (cp.endpoint_warning) {
        if (!warnings.empty()) warnings += "; ";
        warnings += mol->name + " q=" + fmt(q);
      }
      rows.push_back({mol->name, fmt(q), fmt(cp.beta_c), fmt(cp.t_c), fmt(cp.c_max)});
    }
  }
  add_empty_q_note(em, empty_qs);
  if (!warnings.empty()) em.meta("endpoint_warning", warnings);
  em.header({"molecule", "q", "beta_C", "T_C_K", "C_max"});
  for (auto& r : rows) em.row(r);
  em.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;

  CLI::App app{"bound spectra, vibrational partition functions and thermodynamics "
               "of the q-deformed Morse oscillator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after the subcommand name

  app.add_option("--registry", opt.registry_path,
                 "molecule registry file (.csv or .json); built-in table when omitted");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out_path, "write output to this file instead of stdout");
  app.add_option("--em-order", opt.em_order, "Bernoulli correction depth")
      ->check(CLI::IsMember({1, 2, 3}));
  app.add_option("--endpoints", opt.endpoints,
                 "Euler-MacLaurin endpoint handling: lower-endpoint terms only "
                 "('paper') or both endpoints ('full')")
      ->check(CLI::IsMember({"paper", "full"}));
  app.add_option("--diff", opt.diff, "differentiation of ln Z")
      ->check(CLI::IsMember({"analytic", "numeric"}));
  app.add_option("--method", opt.method, "partition-function method for thermo/tc/sweep")
      ->check(CLI::IsMember({"direct", "em", "closed"}));

  auto* molecules = app.add_subcommand("molecules", "print the molecule registry");

  auto* spectrum = app.add_subcommand("spectrum", "bound-state energies for one (molecule, q)");
  spectrum->add_option("--molecule", opt.molecule)->required();
  spectrum->add_option("--q", opt.q);

  auto* zfun = app.add_subcommand("zfun", "partition function by all three methods over a beta grid");
  zfun->add_option("--molecule", opt.molecule)->required();
  zfun->add_option("--q", opt.q);
  zfun->add_option("--beta-min", opt.beta_min);
  zfun->add_option("--beta-max", opt.beta_max);
  zfun->add_option("--beta-steps", opt.beta_steps);
  zfun->add_flag("--log-beta", opt.log_beta);

  auto* thermo = app.add_subcommand("thermo", "F, U, S, C over a beta grid");
  thermo->add_option("--molecule", opt.molecule)->required();
  thermo->add_option("--q", opt.q);
  thermo->add_option("--beta-min", opt.beta_min)->default_val(0.1);
  thermo->add_option("--beta-max", opt.beta_max)->default_val(50.0);
  thermo->add_option("--beta-steps", opt.beta_steps);
  thermo->add_flag("--log-beta", opt.log_beta);

  auto* tc = app.add_subcommand("tc", "specific-heat maximum and critical temperature");
  tc->add_option("--molecule", opt.molecule, "one molecule; all registry molecules when omitted");
  tc->add_option("--q", opt.q_list, "comma-separated q list; default 0.3,0.5,0.7,0.9,1.0");
  tc->add_option("--bracket-lo", opt.bracket_lo);
  tc->add_option("--bracket-hi", opt.bracket_hi);
  tc->add_option("--tol", opt.tol);

  auto* sweepcmd = app.add_subcommand("sweep", "thermo table over a (q, beta) grid");
  sweepcmd->add_option("--molecule", opt.molecule)->required();
  sweepcmd->add_option("--q", opt.q_list, "comma-separated q list; default 0.3,0.5,0.7,0.9,1.0");
  sweepcmd->add_option("--beta-min", opt.beta_min)->default_val(0.1);
  sweepcmd->add_option("--beta-max", opt.beta_max)->default_val(50.0);
  sweepcmd->add_option("--beta-steps", opt.beta_steps);
  sweepcmd->add_flag("--log-beta", opt.log_beta);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }

  Registry reg;
  try {
    reg = load_effective_registry(opt);
  } catch (const std::exception& e) {
    err << "registry error: " << e.what() << '\n';
    return kRegistryError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "error: cannot open output file '" << opt.out_path << "'\n";
      return kInvalidArgument;
    }
    sink = &file;
  }

  try {
    if (molecules->parsed()) cmd_molecules(opt, reg, *sink);
    else if (spectrum->parsed()) cmd_spectrum(opt, reg, *sink);
    else if (zfun->parsed()) cmd_zfun(opt, reg, *sink);
    else if (thermo->parsed()) cmd_thermo(opt, reg, *sink);
    else if (tc->parsed()) cmd_tc(opt, reg, *sink);
    else if (sweepcmd->parsed()) cmd_sweep(opt, reg, *sink);
  } catch (const unknown_molecule_error& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownMolecule;
  } catch (const numerical_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::overflow_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qmorse::cli
