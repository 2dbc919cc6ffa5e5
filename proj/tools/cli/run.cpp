#include "cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cli/verify.hpp"
#include "dqm/cayley.hpp"
#include "dqm/errors.hpp"
#include "dqm/hermite.hpp"
#include "dqm/kravchuk_wigner.hpp"
#include "dqm/lattice.hpp"
#include "dqm/oscillator.hpp"
#include "dqm/planewave.hpp"

namespace dqm::cli {

namespace {

struct FlagSpec {
  const char* name;
  const char* help;
  bool is_flag = false;
};

struct SubcommandSpec {
  const char* name;
  const char* help;
  std::vector<FlagSpec> flags;
};

const std::vector<SubcommandSpec>& subcommands() {
  static const std::vector<SubcommandSpec> specs{
      {"basis", "Plane-wave momenta and optional basis table",
       {{"N", "lattice size"}, {"epsilon", "lattice spacing (default 1)"},
        {"table", "also emit the basis table j,m,re,im", true}}},
      {"evolve", "Cayley evolution trace",
       {{"hamiltonian", "JSON matrix file or sigma_x|sigma_y|sigma_z"}, {"tau", "time step"},
        {"steps", "number of steps (default 10)"}, {"state", "JSON state file (default e_0)"}}},
      {"heisenberg-check", "Heisenberg difference-scheme residual table",
       {{"hamiltonian", "JSON matrix file or sigma_x|sigma_y|sigma_z"},
        {"observable", "JSON matrix file or sigma_x|sigma_y|sigma_z (default sigma_x)"},
        {"tau", "time step"}, {"n", "step index (default 1)"}}},
      {"wigner", "Wigner d-matrix residual checks",
       {{"N", "2j"}, {"beta", "angle in (0, pi)"},
        {"check", "all|symmetry|recurrence|orthogonality (default all)"}}},
      {"spectrum", "Finite oscillator spectra",
       {{"N", "oscillator size"}, {"p", "Kravchuk parameter (default 0.5)"},
        {"what", "energy|position|commutator (default energy)"}}},
      {"converge", "Continuum-limit convergence table",
       {{"n", "level (default 0)"}, {"N-list", "comma-separated sizes (default 16,32,64,128)"},
        {"p", "Kravchuk parameter (default 0.5)"}}},
      {"hermite", "Sampled Hermite functions",
       {{"n", "level"}, {"s-min", "grid start (default -5)"}, {"s-max", "grid end (default 5)"},
        {"samples", "grid points (default 101)"}}},
      {"verify-all", "Full invariant suite", {{"seed", "random seed (default 7)"}}},
  };
  return specs;
}

using Params = std::map<std::string, std::string>;

const std::string* find(const Params& params, const std::string& name) {
  const auto it = params.find(name);
  return it == params.end() ? nullptr : &it->second;
}

long parse_long(const std::string& name, const std::string& text) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ParameterError(name, "expected an integer, got '" + text + "'");
  }
  return v;
}

double parse_real(const std::string& name, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) {
    throw ParameterError(name, "expected a finite real, got '" + text + "'");
  }
  return v;
}

long get_long(const Params& params, const std::string& name, std::optional<long> fallback, long lo,
              long hi) {
  const auto* text = find(params, name);
  if (!text && !fallback) throw ParameterError(name, "required");
  const long v = text ? parse_long(name, *text) : *fallback;
  if (v < lo || v > hi) {
    throw ParameterError(name, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

double get_real(const Params& params, const std::string& name, std::optional<double> fallback) {
  const auto* text = find(params, name);
  if (!text && !fallback) throw ParameterError(name, "required");
  return text ? parse_real(name, *text) : *fallback;
}

std::string get_choice(const Params& params, const std::string& name, const std::string& fallback,
                       std::initializer_list<const char*> choices) {
  const auto* text = find(params, name);
  const std::string v = text ? *text : fallback;
  std::string joined;
  for (const char* c : choices) {
    if (v == c) return v;
    if (!joined.empty()) joined += '|';
    joined += c;
  }
  throw ParameterError(name, "expected one of " + joined + ", got '" + v + "'");
}

std::string read_file(const std::string& name, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError(name, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ComplexMatrix matrix_from_json(const std::string& name, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(name, e.what());
  }
  auto rows_of = [&](const nlohmann::json& j) {
    if (!j.is_array()) throw ParameterError(name, "matrix must be an array of rows");
    std::vector<std::vector<double>> rows;
    try {
      rows = j.get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(name, e.what());
    }
    return rows;
  };
  const nlohmann::json re_json = doc.is_object() ? doc.value("re", nlohmann::json()) : doc;
  const auto re = rows_of(re_json);
  std::vector<std::vector<double>> im;
  if (doc.is_object() && doc.contains("im")) im = rows_of(doc.at("im"));
  const std::size_t d = re.size();
  if (d == 0) throw ParameterError(name, "matrix is empty");
  if (!im.empty() && im.size() != d) throw ParameterError(name, "re and im differ in shape");
  ComplexMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    if (re[r].size() != d || (!im.empty() && im[r].size() != d)) {
      throw ParameterError(name, "matrix must be square");
    }
    for (std::size_t c = 0; c < d; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r][c], im.empty() ? 0.0 : im[r][c]};
    }
  }
  return m;
}

ComplexMatrix load_matrix(const Params& params, const std::string& name, const char* fallback) {
  const auto* text = find(params, name);
  if (!text && !fallback) throw ParameterError(name, "required");
  const std::string v = text ? *text : fallback;
  const std::complex<double> i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  if (v == "sigma_x") {
    m << 0.0, 1.0, 1.0, 0.0;
  } else if (v == "sigma_y") {
    m << 0.0, -i, i, 0.0;
  } else if (v == "sigma_z") {
    m << 1.0, 0.0, 0.0, -1.0;
  } else {
    m = matrix_from_json(name, read_file(name, v));
  }
  return m;
}

HermitianOperator load_hamiltonian(const Params& params) {
  try {
    return HermitianOperator(load_matrix(params, "hamiltonian", nullptr));
  } catch (const DomainError& e) {
    throw ParameterError("hamiltonian", e.what());
  }
}

double get_tau(const Params& params) {
  const double tau = get_real(params, "tau", std::nullopt);
  if (!(tau > 0.0)) throw ParameterError("tau", "must be positive");
  return tau;
}

int get_size(const Params& params, long lo = 1) {
  return static_cast<int>(get_long(params, "N", std::nullopt, lo, 100000));
}

std::string str(double v) { return format_double(v); }
std::string str(long long v) { return std::to_string(v); }

struct Outcome {
  std::string text;
  int status = kExitOk;
};

Outcome run_basis(const RunConfig& cfg) {
  const int n = get_size(cfg.parameters);
  const double eps = get_real(cfg.parameters, "epsilon", 1.0);
  if (!(eps > 0.0)) throw ParameterError("epsilon", "must be positive");
  const PlaneWaveBasis basis(static_cast<std::size_t>(n), eps);
  Table momenta{{"m", "k_m"}, {}};
  for (std::size_t m = 0; m < basis.size(); ++m) momenta.rows.push_back({str(static_cast<long long>(m)), str(basis.momentum(m))});
  if (!find(cfg.parameters, "table")) return {export_table(momenta, cfg.format)};
  Table entries{{"j", "m", "re", "im"}, {}};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t m = 0; m < basis.size(); ++m) {
      const Complex e = basis.entry(j, m);
      entries.rows.push_back({str(static_cast<long long>(j)), str(static_cast<long long>(m)), str(e.real()), str(e.imag())});
    }
  }
  if (cfg.format == Format::Csv) return {export_table(momenta, cfg.format) + "\n" + export_table(entries, cfg.format)};
  nlohmann::json doc;
  doc["momenta"] = nlohmann::json::parse(export_table(momenta, cfg.format));
  doc["basis"] = nlohmann::json::parse(export_table(entries, cfg.format));
  return {doc.dump(2) + "\n"};
}

Outcome run_evolve(const RunConfig& cfg) {
  const HermitianOperator h = load_hamiltonian(cfg.parameters);
  const double tau = get_tau(cfg.parameters);
  const long steps = get_long(cfg.parameters, "steps", 10, 0, 10000000);
  const Eigen::Index d = h.dimension();
  ComplexVector psi0 = ComplexVector::Zero(d);
  if (const auto* path = find(cfg.parameters, "state")) {
    LatticeState state = [&] {
      try {
        return lattice_state_from_json(read_file("state", *path));
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParameterError*>(&e)) throw;
        throw ParameterError("state", e.what());
      }
    }();
    if (static_cast<Eigen::Index>(state.size()) != d) {
      throw ParameterError("state", "length " + std::to_string(state.size()) + " does not match the " +
                                        std::to_string(d) + "-dimensional hamiltonian");
    }
    for (Eigen::Index k = 0; k < d; ++k) psi0[k] = state[static_cast<std::size_t>(k)];
  } else {
    psi0[0] = 1.0;
  }
  const CayleyPropagator prop(h, tau);
  Table table{{"n", "norm"}, {}};
  for (Eigen::Index k = 0; k < d; ++k) {
    table.columns.push_back("re_" + std::to_string(k));
    table.columns.push_back("im_" + std::to_string(k));
  }
  ComplexVector psi = psi0;
  for (long n = 0; n <= steps; ++n) {
    std::vector<std::string> row{str(static_cast<long long>(n)), str(psi.norm())};
    for (Eigen::Index k = 0; k < d; ++k) {
      row.push_back(str(psi[k].real()));
      row.push_back(str(psi[k].imag()));
    }
    table.rows.push_back(std::move(row));
    psi = prop.step() * psi;
  }
  return {export_table(table, cfg.format)};
}

Outcome run_heisenberg(const RunConfig& cfg) {
  const HermitianOperator h = load_hamiltonian(cfg.parameters);
  const ComplexMatrix a0 = load_matrix(cfg.parameters, "observable", "sigma_x");
  if (a0.rows() != h.dimension()) throw ParameterError("observable", "dimension does not match the hamiltonian");
  const double tau = get_tau(cfg.parameters);
  const long n = get_long(cfg.parameters, "n", 1, 0, 1000000);
  const VerificationReport report = heisenberg_report(h, a0, tau, n);
  return {export_report(report, cfg.format), exit_status(report)};
}

Outcome run_wigner(const RunConfig& cfg) {
  const int n = get_size(cfg.parameters);
  const double beta = get_real(cfg.parameters, "beta", std::nullopt);
  if (!(beta > 0.0 && beta < std::numbers::pi)) throw ParameterError("beta", "must lie in (0, pi)");
  const std::string check = get_choice(cfg.parameters, "check", "all", {"all", "symmetry", "recurrence", "orthogonality"});
  const WignerDMatrix d = [&] {
    try {
      return WignerDMatrix(n, beta);
    } catch (const DomainError& e) {
      throw ParameterError("N", e.what());
    }
  }();
  Table table{{"check", "value"}, {}};
  bool ok = true;
  auto add = [&](const char* name, double value, double tol) {
    table.rows.push_back({name, str(value)});
    ok = ok && value < tol;
  };
  const bool all = check == "all";
  if (all || check == "symmetry") add("symmetry", symmetry_defect(d), 1e-12);
  if (all || check == "recurrence") {
    const auto rec = recurrence_residuals(d);
    add("three_term_recurrence", rec.three_term, 1e-10);
    add("column_shift_recurrence", rec.column_shift, 1e-10);
  }
  if (all || check == "orthogonality") add("orthogonality", orthogonality_defect(d), 1e-10);
  if (all) add("direct_sum", direct_sum_defect(d), 1e-10);
  return {export_table(table, cfg.format), ok ? kExitOk : kExitChecksFailed};
}

double get_p(const Params& params) {
  const double p = get_real(params, "p", 0.5);
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p", "must lie in (0, 1)");
  return p;
}

Outcome run_spectrum(const RunConfig& cfg) {
  const int n = get_size(cfg.parameters);
  const double p = get_p(cfg.parameters);
  const std::string what = get_choice(cfg.parameters, "what", "energy", {"energy", "position", "commutator"});
  const OscillatorModel model(n, p);
  const Eigen::MatrixXd a = model.annihilation();
  const Eigen::MatrixXd ad = model.creation();
  if (what == "position") {
    const PositionSpectrum spectrum = position_spectrum(model);
    Table table{{"m_prime", "value"}, {}};
    for (std::size_t k = 0; k < spectrum.twice_m_prime.size(); ++k) {
      table.rows.push_back({str(0.5 * spectrum.twice_m_prime[k]), str(spectrum.eigenvalues[static_cast<Eigen::Index>(k)])});
    }
    return {export_table(table, cfg.format)};
  }
  const Eigen::MatrixXd op = what == "energy" ? Eigen::MatrixXd(a * ad + ad * a) : Eigen::MatrixXd(a * ad - ad * a);
  Table table{{"n", "value"}, {}};
  for (int level = 0; level < model.levels(); ++level) table.rows.push_back({str(static_cast<long long>(level)), str(op(level, level))});
  return {export_table(table, cfg.format)};
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const long v = parse_long("N-list", item);
    if (v < 1 || v > 100000) throw ParameterError("N-list", "sizes must lie in [1, 100000]");
    sizes.push_back(static_cast<int>(v));
  }
  if (sizes.empty()) throw ParameterError("N-list", "empty list");
  return sizes;
}

Outcome run_converge(const RunConfig& cfg) {
  const int level = static_cast<int>(get_long(cfg.parameters, "n", 0, 0, 1000));
  const auto* list = find(cfg.parameters, "N-list");
  const std::vector<int> sizes = parse_size_list(list ? *list : "16,32,64,128");
  for (int s : sizes) {
    if (s < level) throw ParameterError("N-list", "every size must be at least n");
  }
  const double p = get_p(cfg.parameters);
  const ConvergenceTable result = [&] {
    try {
      return continuum_convergence(level, sizes, p);
    } catch (const DomainError& e) {
      throw ParameterError("N-list", e.what());
    }
  }();
  Table table{{"N", "max_error"}, {}};
  for (const auto& row : result.rows) table.rows.push_back({str(static_cast<long long>(row.size)), str(row.max_error)});
  return {export_table(table, cfg.format)};
}

Outcome run_hermite(const RunConfig& cfg) {
  const int n = static_cast<int>(get_long(cfg.parameters, "n", std::nullopt, 0, 10000));
  const double lo = get_real(cfg.parameters, "s-min", -5.0);
  const double hi = get_real(cfg.parameters, "s-max", 5.0);
  if (!(lo < hi)) throw ParameterError("s-max", "must exceed --s-min");
  const int samples = static_cast<int>(get_long(cfg.parameters, "samples", 101, 2, 10000000));
  Table table{{"s", "psi"}, {}};
  for (double s : uniform_grid(lo, hi, samples)) table.rows.push_back({str(s), str(eval_psi(n, s))});
  return {export_table(table, cfg.format)};
}

Outcome run_verify_all(const RunConfig& cfg) {
  const VerificationReport report = verify_all(cfg.seed);
  return {export_report(report, cfg.format), exit_status(report)};
}

Outcome dispatch(const RunConfig& cfg) {
  const std::string& s = cfg.subcommand;
  if (s == "basis") return run_basis(cfg);
  if (s == "evolve") return run_evolve(cfg);
  if (s == "heisenberg-check") return run_heisenberg(cfg);
  if (s == "wigner") return run_wigner(cfg);
  if (s == "spectrum") return run_spectrum(cfg);
  if (s == "converge") return run_converge(cfg);
  if (s == "hermite") return run_hermite(cfg);
  if (s == "verify-all") return run_verify_all(cfg);
  throw UsageError("unknown subcommand '" + s + "'");
}

nlohmann::json cell_to_json(const std::string& cell) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (!cell.empty() && *end == '\0' && std::isfinite(v)) {
    if (cell.find_first_of(".eE") == std::string::npos) return std::strtoll(cell.c_str(), nullptr, 10);
    return v;
  }
  return cell;
}

}  // namespace

int exit_status(const VerificationReport& report) {
  return report.passed() ? kExitOk : kExitChecksFailed;
}

std::string export_table(const Table& table, Format format) {
  if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& cell : row) r.push_back(cell_to_json(cell));
      rows.push_back(std::move(r));
    }
    nlohmann::json doc;
    doc["columns"] = table.columns;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

RunConfig parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"Discrete-lattice quantum mechanics toolkit", "dqm"};
  app.require_subcommand(1);
  std::map<std::string, std::string> format_text;
  std::map<std::string, std::string> output_text;
  std::vector<std::pair<CLI::App*, std::vector<CLI::Option*>>> registered;
  for (const auto& entry : subcommands()) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    std::vector<CLI::Option*> options;
    for (const auto& flag : entry.flags) {
      const std::string long_name = std::string("--") + flag.name;
      options.push_back(flag.is_flag ? sub->add_flag(long_name, flag.help) : sub->add_option(long_name, flag.help));
    }
    options.push_back(sub->add_option("--format", "csv|json (default csv)"));
    options.push_back(sub->add_option("--output", "output path (default standard output)"));
    registered.emplace_back(sub, std::move(options));
  }
  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    bool known = false;
    for (const auto& entry : subcommands()) known = known || args.front() == entry.name;
    if (!known) throw UsageError("unknown subcommand '" + args.front() + "'\n" + app.help());
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }
  RunConfig cfg;
  for (const auto& [sub, options] : registered) {
    if (!sub->parsed()) continue;
    cfg.subcommand = sub->get_name();
    for (CLI::Option* opt : options) {
      if (opt->count() == 0) continue;
      const std::string name = opt->get_name().substr(2);
      cfg.parameters[name] = opt->get_type_size() == 0 ? "true" : opt->as<std::string>();
    }
  }
  if (const auto* f = find(cfg.parameters, "format")) {
    if (*f == "csv") {
      cfg.format = Format::Csv;
    } else if (*f == "json") {
      cfg.format = Format::Json;
    } else {
      throw ParameterError("format", "expected csv|json, got '" + *f + "'");
    }
    cfg.parameters.erase("format");
  }
  if (const auto* o = find(cfg.parameters, "output")) {
    cfg.output = *o;
    cfg.parameters.erase("output");
  }
  if (const auto* s = find(cfg.parameters, "seed")) {
    if (s->empty() || s->find_first_not_of("0123456789") != std::string::npos) {
      throw ParameterError("seed", "expected a non-negative integer, got '" + *s + "'");
    }
    errno = 0;
    cfg.seed = std::strtoull(s->c_str(), nullptr, 10);
    if (errno == ERANGE) throw ParameterError("seed", "out of range");
    cfg.parameters.erase("seed");
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    outcome = dispatch(config);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    write_artifact(outcome.text, config.output, out);
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kExitIo;
  }
  return outcome.status;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_command_line(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << e.what();
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace dqm::cli
