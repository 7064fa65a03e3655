#include "improper/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include "improper/breve.hpp"
#include "improper/distint.hpp"
#include "improper/errors.hpp"
#include "improper/expression.hpp"
#include "improper/ipdelta.hpp"
#include "improper/kernel.hpp"
#include "improper/qm1d.hpp"

namespace improper::cli {

namespace {

struct OptionSpec {
  std::string name;
  std::string fallback;
  std::string help;
  bool is_flag = false;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  std::function<Table(const RunConfig&)> run;
};

// options every subcommand accepts
const std::vector<OptionSpec>& common_options() {
  static const std::vector<OptionSpec> opts{
      {"format", "csv", "output format: csv or json"},
      {"output", "", "write the table to this path instead of stdout"},
      {"no-timestamp", "false", "omit the timestamp comment line", true},
  };
  return opts;
}

std::vector<OptionSpec> schedule_options(const std::string& start,
                                         const std::string& steps) {
  return {{"eps-start", start, "largest width of the schedule"},
          {"eps-ratio", "0.5", "geometric ratio of the schedule"},
          {"steps", steps, "number of widths"}};
}

KernelKind parse_family(const std::string& s) {
  if (s == "gaussian") return KernelKind::Gaussian;
  if (s == "box") return KernelKind::Box;
  if (s == "lorentzian") return KernelKind::Lorentzian;
  if (s == "sinc") return KernelKind::Sinc;
  throw UsageError("unknown kernel family '" + s +
                   "' (expected gaussian, box, lorentzian, sinc)");
}

EpsilonSchedule schedule_of(const RunConfig& c) {
  return {c.number("eps-start"), c.number("eps-ratio"), c.integer("steps")};
}

Expression expression_of(const RunConfig& c) {
  const std::string src = c.get("f");
  if (src.empty()) throw UsageError("--f is required");
  return parse_expression(src);
}

Table limit_table(const LimitEstimate& e) {
  Table t{{"value", "order", "residual", "diverged"}, {}, e.diverged};
  t.rows.push_back({e.value, e.order, e.residual, e.diverged});
  return t;
}

PiecewisePotential potential_of(const RunConfig& c, double eps) {
  const std::string kind = c.get("potential");
  if (kind == "delta-box") return delta_well_box(c.number("g"), eps);
  if (kind == "delta-prime") return delta_prime_pair(c.number("c"), eps);
  throw UsageError("unknown potential '" + kind +
                   "' (expected delta-box, delta-prime)");
}

// ------------------------------------------------------------- commands

Table run_kernel(const RunConfig& c) {
  const DeltaKerneld kernel(parse_family(c.get("family")), c.number("eps"));
  const std::string grid = c.get("grid");
  double lo = 0, hi = 0, step = 0;
  {
    std::vector<double> parts;
    std::size_t begin = 0;
    for (;;) {
      const std::size_t end = grid.find(':', begin);
      const std::string piece = grid.substr(begin, end - begin);
      double x = 0;
      const auto [p, ec] =
          std::from_chars(piece.data(), piece.data() + piece.size(), x);
      if (ec != std::errc() || p != piece.data() + piece.size())
        throw UsageError("malformed --grid '" + grid + "' (expected lo:hi:step)");
      parts.push_back(x);
      if (end == std::string::npos) break;
      begin = end + 1;
    }
    if (parts.size() != 3)
      throw UsageError("malformed --grid '" + grid + "' (expected lo:hi:step)");
    lo = parts[0];
    hi = parts[1];
    step = parts[2];
  }
  if (!(step > 0.0) || !(hi >= lo))
    throw UsageError("--grid needs lo <= hi and step > 0");
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw UsageError("--grid has too many points");
  const int order = c.integer("order");
  Table t{{"zeta", "value"}, {}, false};
  for (long long i = 0; i < count; ++i) {
    const double z = lo + step * double(i);
    t.rows.push_back({z, eval_kernel(kernel, z, order)});
  }
  return t;
}

Table run_action(const RunConfig& c) {
  const std::string kind = c.get("kind");
  ActionKind action;
  if (kind == "delta")
    action = ActionKind::delta();
  else if (kind == "derivative")
    action = ActionKind::derivative(c.integer("order"));
  else if (kind == "moment")
    action = ActionKind::moment();
  else if (kind == "fourier")
    action = ActionKind::fourier();
  else
    throw UsageError("unknown action kind '" + kind +
                     "' (expected delta, derivative, moment, fourier)");
  const auto f = expression_of(c);
  return limit_table(distribution_action(f.integrand(), action,
                                         parse_family(c.get("family")),
                                         schedule_of(c), c.number("tol")));
}

Table run_ip(const RunConfig& c) {
  const int k = c.integer("k");
  const auto schedule = schedule_of(c);
  if (c.flag("alpha-table")) {
    Table t{{"eps", "alpha_numeric", "alpha_closed", "ratio"}, {}, false};
    for (double eps : schedule.values()) {
      const double a = ip_alpha(k, eps, AlphaMode::Numeric);
      const double b = ip_alpha(k, eps, AlphaMode::ClosedForm);
      t.rows.push_back({eps, a, b, a / b});
    }
    return t;
  }
  const auto f = expression_of(c);
  return limit_table(ip_action(f.integrand(), k, c.number("omega"), schedule,
                               c.integer("sing-order"), c.number("tol")));
}

Table run_breve(const RunConfig& c) {
  const auto f = expression_of(c);
  const auto schedule = schedule_of(c);
  if (c.flag("delta-prime"))
    return limit_table(
        delta_prime_action(f.integrand(), schedule, c.number("tol")));
  const std::string w = c.get("weight");
  BreveWeight weight;
  if (w == "none")
    weight = BreveWeight::None;
  else if (w == "abs")
    weight = BreveWeight::AbsZeta;
  else
    throw UsageError("unknown weight '" + w + "' (expected none, abs)");
  return limit_table(
      breve_action(f.integrand(), weight, schedule, c.number("tol")));
}

Table run_qm_bound(const RunConfig& c) {
  const auto v = potential_of(c, c.number("eps"));
  const auto levels = bound_states(v, {c.number("emin"), c.number("emax")},
                                   c.number("tol"), c.integer("scan"));
  Table t{{"index", "energy"}, {}, false};
  for (std::size_t i = 0; i < levels.size(); ++i)
    t.rows.push_back({static_cast<long long>(i), levels[i]});
  return t;
}

Table run_qm_scatter(const RunConfig& c) {
  const double energy = c.number("energy");
  Table t{{"kind", "eps", "energy", "transmission", "reflection", "order",
           "residual", "diverged"},
          {},
          false};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!c.flag("sweep")) {
    const auto s = scattering(potential_of(c, c.number("eps")), energy);
    t.rows.push_back({std::string("sample"), c.number("eps"), energy,
                      s.transmission, s.reflection, nan, nan, false});
    return t;
  }
  std::vector<Sample> samples;
  for (double eps : schedule_of(c).values()) {
    const auto s = scattering(potential_of(c, eps), energy);
    samples.push_back({eps, s.transmission});
    t.rows.push_back({std::string("sample"), eps, energy, s.transmission,
                      s.reflection, nan, nan, false});
  }
  const auto limit = epsilon_limit(samples);
  t.rows.push_back({std::string("limit"), 0.0, energy, limit.value,
                    1.0 - limit.value, limit.order, limit.residual,
                    limit.diverged});
  t.diverged = limit.diverged;
  return t;
}

Table run_qm_bands(const RunConfig& c) {
  const double g = c.number("g");
  const double a = c.number("period");
  const auto points = band_scan(g, a, c.number("eps"),
                                {c.number("emin"), c.number("emax")},
                                c.integer("points"));
  Table t{{"energy", "bloch_rhs", "limit", "allowed"}, {}, false};
  for (const auto& p : points)
    t.rows.push_back({p.energy, p.bloch_rhs,
                      comb_dispersion_limit(g, a, p.energy), p.allowed});
  return t;
}

Table run_qm_darboux(const RunConfig& c) {
  const double g = c.number("g");
  const double eps = c.number("eps");
  const double half = c.number("half-width");
  const double h = eps * c.number("step-factor");
  if (!(half > 2.0 * eps)) throw UsageError("--half-width must exceed 2 eps");
  const auto n = static_cast<Eigen::Index>(std::llround(2.0 * half / h)) + 1;
  const auto grid =
      sample(delta_well_box(g, eps), -half, h, n, Boundary::Dirichlet);

  const std::string source = c.get("ground");
  Eigen::VectorXd psi;
  double e0 = -0.5 * g * g;
  if (source == "numeric") {
    auto gs = ground_state(grid);
    psi = std::move(gs.psi);
    e0 = gs.energy;
  } else if (source == "smoothed") {
    psi = smoothed_delta_ground_state(g, eps, grid);
  } else {
    throw UsageError("unknown ground source '" + source +
                     "' (expected numeric, smoothed)");
  }
  const auto partner = darboux_transform(grid, psi, e0);

  if (c.flag("profile")) {
    Table t{{"zeta", "v", "v1"}, {}, false};
    for (Eigen::Index i = 0; i < partner.size(); ++i)
      t.rows.push_back(
          {partner.zeta(i), grid.values()[i + 1], partner.values()[i]});
    return t;
  }
  Table t{{"eps", "g", "e0", "core_v", "core_v1"}, {}, false};
  t.rows.push_back({eps, g, e0, core_integral(grid, 2.0 * eps),
                    core_integral(partner, 2.0 * eps)});
  return t;
}

Table run_qm_commute(const RunConfig& c) {
  const CommutationGrid grid{c.integer("points"), c.number("fixed-region")};
  const auto samples =
      darboux_commutation_check(c.number("v0"), schedule_of(c), grid);
  // exact Scarf ground energy (s + 1)^2 / 2 with s(s + 1) / 2 = V0
  const double s1 = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * c.number("v0")));
  Table t{{"eps", "supnorm", "supnorm_fixed", "e0_reg", "e0_exact"}, {}, false};
  for (const auto& s : samples)
    t.rows.push_back({s.epsilon, s.deviation, s.fixed_deviation,
                      s.ground_energy, 0.5 * s1 * s1});
  return t;
}

template <class... Parts>
std::vector<OptionSpec> join(Parts&&... parts) {
  std::vector<OptionSpec> out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table{
      {"kernel",
       "tabulate a nascent delta (or a derivative) on a grid",
       {{"family", "gaussian", "gaussian, box, lorentzian or sinc"},
        {"eps", "0.1", "kernel width"},
        {"order", "0", "derivative order 0..4"},
        {"grid", "-1:1:0.1", "lo:hi:step"}},
       run_kernel},
      {"action",
       "extrapolated eps -> 0 action of a nascent delta on f",
       join(std::vector<OptionSpec>{
                {"f", "", "integrand in z"},
                {"kind", "delta", "delta, derivative, moment or fourier"},
                {"order", "1", "derivative order for --kind derivative"},
                {"family", "gaussian", "gaussian, box, lorentzian or sinc"},
                {"tol", "1e-13", "absolute quadrature tolerance"}},
            schedule_options("0.4", "8")),
       run_action},
      {"ip",
       "modified delta acting on fields with |z|^-k singularities",
       join(std::vector<OptionSpec>{
                {"f", "", "integrand in z"},
                {"k", "1", "singularity order k >= 1"},
                {"omega", "0", "assigned value of the singular moment"},
                {"sing-order", "0", "declared singularity order of f"},
                {"tol", "1e-15", "absolute quadrature tolerance"},
                {"alpha-table", "false",
                 "tabulate both normalisations instead", true}},
            schedule_options("0.4", "8")),
       run_ip},
      {"breve",
       "breve-delta well family (or the Delta' pair) acting on f",
       join(std::vector<OptionSpec>{
                {"f", "", "integrand in z"},
                {"weight", "none", "none or abs (multiply f by |z|)"},
                {"delta-prime", "false", "use the antisymmetric pair", true},
                {"tol", "1e-14", "absolute quadrature tolerance"}},
            schedule_options("0.4", "8")),
       run_breve},
      {"qm-bound",
       "bound states of a regularised point interaction",
       {{"potential", "delta-box", "delta-box or delta-prime"},
        {"g", "1", "delta strength (well depth g / (2 eps))"},
        {"c", "1", "delta-prime pair strength"},
        {"eps", "1e-3", "regularisation width"},
        {"emin", "-10", "lower end of the energy window"},
        {"emax", "0", "upper end of the energy window"},
        {"tol", "1e-10", "bisection tolerance"},
        {"scan", "2000", "scan points"}},
       run_qm_bound},
      {"qm-scatter",
       "transmission through a regularised point interaction",
       join(std::vector<OptionSpec>{
                {"potential", "delta-box", "delta-box or delta-prime"},
                {"g", "1", "delta strength"},
                {"c", "1", "delta-prime pair strength"},
                {"eps", "1e-3", "regularisation width without --sweep"},
                {"energy", "0.5", "incident energy k^2 / 2"},
                {"sweep", "false", "extrapolate over the schedule", true}},
            schedule_options("0.2", "8")),
       run_qm_scatter},
      {"qm-bands",
       "Bloch condition of a regularised Dirac comb",
       {{"g", "1", "delta strength"},
        {"period", fmt::format("{:.17g}", std::numbers::pi), "lattice period"},
        {"eps", "1e-3", "regularisation width"},
        {"emin", "0.01", "lowest energy"},
        {"emax", "4", "highest energy"},
        {"points", "200", "energies"}},
       run_qm_bands},
      {"qm-darboux",
       "partner potential of a regularised attractive delta",
       {{"g", "1", "delta strength"},
        {"eps", "1e-3", "regularisation width"},
        {"half-width", "10", "Dirichlet box [-L, L]"},
        {"step-factor", "0.1", "grid step in units of eps"},
        {"ground", "numeric", "numeric or smoothed ground state"},
        {"profile", "false", "emit the potentials instead of the summary",
         true}},
       run_qm_darboux},
      {"qm-commute",
       "regularise/transform commutation for the Scarf cell",
       join(std::vector<OptionSpec>{
                {"v0", "1", "Scarf strength V0 >= 0"},
                {"points", "4096", "periodic grid points"},
                {"fixed-region", "0.5", "also report sup on |z| > this"}},
            schedule_options("0.2", "4")),
       run_qm_commute},
  };
  return table;
}

const CommandSpec& find_command(const std::string& name) {
  for (const auto& c : command_table())
    if (c.name == name) return c;
  throw UsageError("unknown command '" + name + "'");
}

const OptionSpec* find_option(const CommandSpec& cmd, const std::string& key) {
  for (const auto& o : cmd.options)
    if (o.name == key) return &o;
  for (const auto& o : common_options())
    if (o.name == key) return &o;
  return nullptr;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config_file(const std::string& path,
                                                    const CommandSpec& cmd) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError(fmt::format("{}:{}: expected key=value", path, lineno));
    const std::string key = trim(t.substr(0, eq));
    if (!find_option(cmd, key))
      throw UsageError(fmt::format("{}:{}: unknown key '{}' for {}", path,
                                   lineno, key, cmd.name));
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<T, long long>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else
          return v;
      },
      cell);
}

std::string json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
        else if constexpr (std::is_same_v<T, long long>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else
          return nlohmann::json(v).dump();
      },
      cell);
}

std::vector<std::string> header_lines(const RunConfig& config,
                                      bool timestamp) {
  std::vector<std::string> lines;
  lines.push_back(fmt::format("improper {}", kVersion));
  lines.push_back("command=" + config.command);
  for (const auto& [k, v] : config.options) lines.push_back(k + "=" + v);
  if (timestamp)
    lines.push_back(fmt::format("timestamp={:%Y-%m-%dT%H:%M:%SZ}",
                                fmt::gmtime(std::chrono::system_clock::to_time_t(
                                    std::chrono::system_clock::now()))));
  return lines;
}

}  // namespace

std::string RunConfig::get(const std::string& key) const {
  const auto it = options.find(key);
  if (it == options.end()) throw UsageError("missing option '" + key + "'");
  return it->second;
}

double RunConfig::number(const std::string& key) const {
  const std::string s = get(key);
  double x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw UsageError("--" + key + " expects a number, got '" + s + "'");
  return x;
}

int RunConfig::integer(const std::string& key) const {
  const std::string s = get(key);
  int x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw UsageError("--" + key + " expects an integer, got '" + s + "'");
  return x;
}

bool RunConfig::flag(const std::string& key) const {
  const std::string s = get(key);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw UsageError("--" + key + " expects true or false, got '" + s + "'");
}

std::vector<std::string> commands() {
  std::vector<std::string> out;
  for (const auto& c : command_table()) out.push_back(c.name);
  return out;
}

bool parse_args(std::span<const std::string> args, RunConfig& config,
                std::ostream& help) {
  CLI::App app{"Nascent deltas, improper-function actions and regularised "
               "point interactions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  struct Bound {
    const CommandSpec* spec;
    CLI::App* app;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::map<std::string, CLI::Option*> opts;
    std::string config_path;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& cmd : command_table()) {
    auto b = std::make_unique<Bound>();
    b->spec = &cmd;
    b->app = app.add_subcommand(cmd.name, cmd.help);
    auto add = [&](const OptionSpec& o) {
      CLI::Option* opt;
      if (o.is_flag) {
        opt = b->app->add_flag("--" + o.name, b->flags[o.name], o.help);
      } else {
        opt = b->app->add_option("--" + o.name, b->values[o.name], o.help);
        if (!o.fallback.empty()) opt->default_str(o.fallback);
        opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
      }
      b->opts[o.name] = opt;
    };
    for (const auto& o : cmd.options) add(o);
    for (const auto& o : common_options()) add(o);
    b->app->add_option("--config", b->config_path,
                       "key=value file; command-line flags take precedence");
    bound.push_back(std::move(b));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    help << (subs.empty() ? app.help() : subs.front()->help());
    return false;
  } catch (const CLI::CallForVersion&) {
    help << kVersion << '\n';
    return false;
  } catch (const CLI::Success&) {
    help << app.help();
    return false;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& b : bound) {
    if (!b->app->parsed()) continue;
    const CommandSpec& cmd = *b->spec;
    config.command = cmd.name;
    config.options.clear();
    std::map<std::string, std::string> from_file;
    if (!b->config_path.empty())
      from_file = read_config_file(b->config_path, cmd);
    auto resolve = [&](const OptionSpec& o) {
      std::string value = o.fallback;
      if (auto it = from_file.find(o.name); it != from_file.end())
        value = it->second;
      if (b->opts.at(o.name)->count() > 0)
        value = o.is_flag ? (b->flags.at(o.name) ? "true" : "false")
                          : b->values.at(o.name);
      config.options[o.name] = value;
    };
    for (const auto& o : cmd.options) resolve(o);
    for (const auto& o : common_options()) resolve(o);
    const std::string fmt_name = config.options.at("format");
    if (fmt_name != "csv" && fmt_name != "json")
      throw UsageError("--format must be csv or json, got '" + fmt_name + "'");
    return true;
  }
  throw UsageError("no subcommand given");
}

Table run(const RunConfig& config) {
  return find_command(config.command).run(config);
}

void write_csv(const RunConfig& config, const Table& table, std::ostream& out,
               bool timestamp) {
  for (const auto& line : header_lines(config, timestamp))
    out << "# " << line << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_json(const RunConfig& config, const Table& table, std::ostream& out,
                bool timestamp) {
  out << "{\"config\":[";
  const auto lines = header_lines(config, timestamp);
  for (std::size_t i = 0; i < lines.size(); ++i)
    out << (i ? "," : "") << nlohmann::json(lines[i]).dump();
  out << "],\"columns\":[";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << nlohmann::json(table.columns[i]).dump();
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? "," : "") << '[';
    for (std::size_t i = 0; i < table.rows[r].size(); ++i)
      out << (i ? "," : "") << json_cell(table.rows[r][i]);
    out << ']';
  }
  out << "]}\n";
}

int cli_main(std::span<const std::string> args, std::ostream& out,
             std::ostream& err, bool color) {
  const auto fail = [&](const std::string& what) {
    std::string msg = what;
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    if (color)
      err << "\x1b[31merror:\x1b[0m " << msg << '\n';
    else
      err << "error: " << msg << '\n';
    return 1;
  };
  try {
    RunConfig config;
    if (!parse_args(args, config, out)) return 0;
    const Table table = run(config);
    const bool timestamp = !config.flag("no-timestamp");
    const bool json = config.get("format") == "json";
    const std::string path = config.get("output");
    std::ostringstream buffer;
    if (json)
      write_json(config, table, buffer, timestamp);
    else
      write_csv(config, table, buffer, timestamp);
    if (path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) return fail("cannot open output file '" + path + "'");
      file << buffer.str();
    }
    return table.diverged ? 2 : 0;
  } catch (const ParseError& e) {
    return fail(std::string("expression: ") + e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace improper::cli
