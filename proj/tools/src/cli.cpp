#include "kgbound_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "kgbound/coulomb.hpp"
#include "kgbound/errors.hpp"
#include "kgbound/lorentz.hpp"
#include "kgbound/parallel.hpp"
#include "kgbound/radial_solver.hpp"
#include "kgbound/wavefunction.hpp"

namespace kgbound::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PhysicalParams make_params(const Settings& s) {
  return PhysicalParams::natural(s.get_double("z", 1.0), s.get_double("alpha", kFineStructure));
}

struct StateSpec {
  int n;
  int l;
};

/// --n is the maximum principal number unless --l pins a single state.
std::vector<StateSpec> requested_states(const Settings& s, int default_n) {
  const int n = s.get_int("n", default_n);
  const auto l = s.get_optional_int("l");
  if (l) {
    QuantumNumbers check(n, *l);
    return {{n, *l}};
  }
  if (n < 1) throw InvalidQuantumNumbers("n must be >= 1");
  std::vector<StateSpec> out;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < k; ++j) out.push_back({k, j});
  }
  return out;
}

SolveMode mode_setting(const Settings& s, const std::string& fallback) {
  try {
    return parse_mode(s.get_string("mode", fallback));
  } catch (const InvalidParams& e) {
    throw ConfigError(std::string("key 'mode': ") + e.what());
  }
}

Stencil stencil_setting(const Settings& s, const std::string& fallback) {
  const std::string v = s.get_string("stencil", fallback);
  if (v == "frobenius") return Stencil::frobenius;
  if (v == "standard") return Stencil::standard;
  throw ConfigError("key 'stencil': expected frobenius or standard, got '" + v + "'");
}

PotentialSpec potential_setting(const Settings& s, SolveMode mode, const PhysicalParams& p) {
  const std::string kind = s.get_string("potential", "coulomb");
  PotentialSpec spec;
  if (kind == "coulomb") {
    spec = PotentialSpec::coulomb(p.z_number);
  } else if (kind == "hulthen") {
    spec = PotentialSpec::hulthen(p.z_number, s.get_double("lambda", 0.2), p);
  } else if (kind == "none") {
    spec = PotentialSpec::free();
  } else {
    throw ConfigError("key 'potential': expected coulomb, hulthen or none, got '" + kind + "'");
  }
  if (mode == SolveMode::kg_equal || mode == SolveMode::kg_scalar_vector) {
    spec.scalar_part = spec.vector_part;
  }
  return spec;
}

std::string potential_label(const Settings& s) {
  const std::string kind = s.get_string("potential", "coulomb");
  if (kind == "hulthen") {
    std::ostringstream os;
    os.precision(12);
    os << "hulthen(lambda=" << s.get_double("lambda", 0.2) << ")";
    return os.str();
  }
  return kind;
}

bool flag_setting(const Settings& s, const std::string& key) {
  const std::string v = s.get_string(key, "false");
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + v + "'");
}

std::vector<std::size_t> sizes_setting(const Settings& s) {
  const std::string text = s.get_string("sizes", "1000,2000,4000,8000");
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0' || v < 200) {
      throw ConfigError("key 'sizes': expected comma-separated integers >= 200, got '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.size() < 3) throw ConfigError("key 'sizes': need at least three grid sizes");
  return out;
}

std::size_t grid_points_setting(const Settings& s, int fallback) {
  const int v = s.get_int("grid-n", fallback);
  if (v < 200) throw ConfigError("key 'grid-n': need at least 200 points");
  return static_cast<std::size_t>(v);
}

void add_param_meta(Table& t, const std::string& command, const PhysicalParams& p) {
  t.meta.emplace_back("command", command);
  t.meta.emplace_back("z", p.z_number);
  t.meta.emplace_back("alpha", p.alpha);
  t.meta.emplace_back("units", std::string("natural"));
}

struct RowStatus {
  std::string status = "ok";
  std::string message;
  int severity = kOk;
};

template <typename F>
RowStatus guarded(F&& body) {
  RowStatus st;
  try {
    body();
  } catch (const SupercriticalCoupling& e) {
    st = {"supercritical", e.what(), kDomain};
  } catch (const StateNotFound& e) {
    st = {"state_not_found", e.what(), kDomain};
  } catch (const DomainError& e) {
    st = {"domain_error", e.what(), kDomain};
  } catch (const NoConvergence& e) {
    st = {"no_convergence", e.what(), kNumerical};
  } catch (const TailNotConverged& e) {
    st = {"tail_not_converged", e.what(), kNumerical};
  } catch (const NumericalError& e) {
    st = {"numerical_error", e.what(), kNumerical};
  }
  return st;
}

}  // namespace

CommandResult cmd_spectrum(const Settings& s) {
  const PhysicalParams p = make_params(s);
  CommandResult res;
  Table& t = res.table;
  add_param_meta(t, "spectrum", p);
  t.columns = {"n",           "l",         "sigma_l",   "e_total", "e_prime",
               "system_mass", "expansion", "abs_diff"};
  const double mc2 = p.rest_energy();
  for (const auto& st : requested_states(s, 4)) {
    const BoundState b = energy_level(p, st.n, st.l);
    const double expansion = energy_expansion(p, st.n, st.l);
    t.add_row({static_cast<long long>(st.n), static_cast<long long>(st.l),
               sigma_closed(p, st.l).sigma_l, b.e_total / mc2, b.e_prime / mc2,
               b.system_mass / p.rest_mass, expansion / mc2, std::abs(b.e_prime - energy_expansion_prime(p, st.n, st.l)) / mc2});
  }
  return res;
}

CommandResult cmd_wavefunction(const Settings& s) {
  const PhysicalParams p = make_params(s);
  const int n = s.get_int("n", 1);
  const int l = s.get_int("l", 0);
  const RadialWavefunction wf = build_radial(p, n, l);
  const double an = wf.length_scale();
  const double r_min = s.get_double("rmin", 1e-3 * an);
  const double r_max = s.get_double("rmax", (60.0 + 8.0 * n) * an);
  const RadialGrid grid = RadialGrid::log_uniform(r_min, r_max, grid_points_setting(s, 2000));
  const std::vector<double> values = sample(wf, grid);

  CommandResult res;
  Table& t = res.table;
  add_param_meta(t, "wavefunction", p);
  t.meta.emplace_back("n", static_cast<long long>(n));
  t.meta.emplace_back("l", static_cast<long long>(l));
  t.meta.emplace_back("sigma_l", wf.poly.sigma_l);
  t.meta.emplace_back("e_prime", wf.e_prime);
  t.meta.emplace_back("system_mass", wf.system_mass);
  t.meta.emplace_back("rho_scale", wf.rho_scale);
  t.meta.emplace_back("normalization", wf.normalization);
  t.meta.emplace_back("node_count", static_cast<long long>(count_sign_changes(values)));
  t.meta.emplace_back("grid", std::string("log"));
  t.columns = {"r", "R", "u", "rho", "density"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double R = values[i];
    t.add_row({r, R, r * R, wf.rho(r), r * r * R * R});
  }
  return res;
}

CommandResult cmd_solve(const Settings& s) {
  const PhysicalParams p = make_params(s);
  const SolveMode mode = mode_setting(s, "kg-vector");
  const PotentialSpec potential = potential_setting(s, mode, p);
  const bool richardson = flag_setting(s, "richardson");
  const std::vector<StateSpec> states = requested_states(s, 1);

  SolveRequest base;
  base.mode = mode;
  base.potential = potential;
  base.grid_points = grid_points_setting(s, 8000);
  base.r_max = s.get_double("rmax", 0.0);
  base.sc_tolerance = s.get_double("tol", 1e-12);
  base.max_sc_iters = s.get_int("max-iters", 200);
  base.stencil = stencil_setting(s, "frobenius");

  struct Outcome {
    BoundState state;
    double extrapolated = kNaN;
    RowStatus status;
  };
  std::vector<Outcome> outcomes(states.size());
  parallel_for(states.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SolveRequest req = base;
      req.n = states[i].n;
      req.l = states[i].l;
      outcomes[i].status = guarded([&] {
        if (richardson) {
          const RichardsonResult rr = solve_richardson(req, p, req.grid_points / 2);
          outcomes[i].state = rr.fine;
          outcomes[i].extrapolated = rr.e_prime;
        } else {
          outcomes[i].state = solve_self_consistent(req, p);
        }
      });
    }
  });

  CommandResult res;
  Table& t = res.table;
  add_param_meta(t, "solve", p);
  t.meta.emplace_back("grid_points", static_cast<long long>(base.grid_points));
  t.meta.emplace_back("stencil", s.get_string("stencil", "frobenius"));
  t.meta.emplace_back("sc_tolerance", base.sc_tolerance);
  t.columns = {"mode",      "potential",  "n",          "l",         "e_prime",
               "e_prime_richardson", "system_mass", "iterations", "residual",
               "node_count", "status",     "message"};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Outcome& o = outcomes[i];
    const bool ok = o.status.severity == kOk;
    t.add_row({to_string(mode), potential_label(s), static_cast<long long>(states[i].n),
               static_cast<long long>(states[i].l), ok ? o.state.e_prime : kNaN, o.extrapolated,
               ok ? o.state.system_mass : kNaN, static_cast<long long>(ok ? o.state.iterations : 0),
               ok ? o.state.residual : kNaN, static_cast<long long>(ok ? o.state.node_count : -1),
               o.status.status, o.status.message});
    res.exit_code = std::max(res.exit_code, o.status.severity);
  }
  return res;
}

CommandResult cmd_compare(const Settings& s) {
  const PhysicalParams p = make_params(s);
  const std::vector<StateSpec> states = requested_states(s, 2);
  SolveRequest base;
  base.mode = SolveMode::kg_vector;
  base.potential = PotentialSpec::coulomb(p.z_number);
  base.grid_points = grid_points_setting(s, 8000);
  base.r_max = s.get_double("rmax", 0.0);
  base.sc_tolerance = s.get_double("tol", 1e-12);

  std::vector<double> numeric(states.size(), kNaN);
  parallel_for(states.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SolveRequest req = base;
      req.n = states[i].n;
      req.l = states[i].l;
      numeric[i] = solve_richardson(req, p, req.grid_points / 2).e_prime;
    }
  });

  CommandResult res;
  Table& t = res.table;
  add_param_meta(t, "compare", p);
  t.columns = {"n",          "l",           "e_kg_closed", "e_kg_numeric",
               "e_schrodinger", "delta_numeric", "relativistic_shift"};
  const double za = p.z_alpha();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const int n = states[i].n;
    const double closed = energy_level(p, n, states[i].l).e_prime;
    const double schr = -p.rest_energy() * za * za / (2.0 * n * n);
    t.add_row({static_cast<long long>(n), static_cast<long long>(states[i].l), closed, numeric[i],
               schr, std::abs(closed - numeric[i]) / std::abs(closed),
               (closed - schr) / std::abs(schr)});
  }
  return res;
}

CommandResult cmd_lorentz(const Settings& s) {
  const BoostSpec boost = BoostSpec::from_beta(s.get_double("beta", 0.6));
  CharacterState k;
  k.e_total = s.get_double("energy", 1.2);
  k.p = {s.get_double("px", 0.3), s.get_double("py", 0.0), s.get_double("pz", 0.0)};
  k.u_potential = s.get_double("u", 0.1);
  const double u_prime = s.get_double("u-prime", k.u_potential);
  const CharacterState kp = boost_forward(k, boost, u_prime);
  const CharacterState back = boost_backward(kp, boost, k.u_potential);

  CommandResult res;
  Table& t = res.table;
  t.meta.emplace_back("command", std::string("lorentz"));
  t.meta.emplace_back("beta", boost.beta());
  t.meta.emplace_back("gamma", boost.gamma());
  t.columns = {"frame", "e_total", "px", "py", "pz", "u", "e_minus_u", "invariant"};
  auto row = [&](const std::string& name, const CharacterState& c) {
    t.add_row({name, c.e_total, c.p[0], c.p[1], c.p[2], c.u_potential, c.e_total - c.u_potential,
               invariant_mass_sq(c)});
  };
  row("K", k);
  row("K'", kp);
  row("K(roundtrip)", back);
  return res;
}

CommandResult cmd_convergence(const Settings& s) {
  const PhysicalParams p = make_params(s);
  SolveRequest req;
  req.mode = mode_setting(s, "kg-vector");
  req.potential = potential_setting(s, req.mode, p);
  req.n = s.get_int("n", 1);
  req.l = s.get_int("l", 0);
  req.r_max = s.get_double("rmax", 0.0);
  req.sc_tolerance = s.get_double("tol", 1e-12);
  req.stencil = stencil_setting(s, "standard");
  const auto rows = convergence_study(req, p, sizes_setting(s));

  double reference = kNaN;
  const bool coulomb = s.get_string("potential", "coulomb") == "coulomb";
  if (coulomb && req.mode == SolveMode::kg_vector) {
    reference = energy_level(p, req.n, req.l).e_prime;
  } else if (coulomb && req.mode == SolveMode::schrodinger) {
    reference = -p.rest_energy() * p.z_alpha() * p.z_alpha() / (2.0 * req.n * req.n);
  }

  CommandResult res;
  Table& t = res.table;
  add_param_meta(t, "convergence", p);
  t.meta.emplace_back("mode", to_string(req.mode));
  t.meta.emplace_back("stencil", s.get_string("stencil", "standard"));
  t.meta.emplace_back("n", static_cast<long long>(req.n));
  t.meta.emplace_back("l", static_cast<long long>(req.l));
  t.columns = {"points", "e_prime", "richardson", "observed_order", "reference", "rel_error"};
  for (const auto& r : rows) {
    t.add_row({static_cast<long long>(r.points), r.e_prime, r.richardson, r.observed_order,
               reference, std::abs(r.e_prime - reference) / std::abs(reference)});
  }
  return res;
}

CommandResult run_command(const std::string& command, const Settings& s) {
  if (command == "spectrum") return cmd_spectrum(s);
  if (command == "wavefunction") return cmd_wavefunction(s);
  if (command == "solve") return cmd_solve(s);
  if (command == "compare") return cmd_compare(s);
  if (command == "lorentz") return cmd_lorentz(s);
  if (command == "convergence") return cmd_convergence(s);
  throw ConfigError("unknown command '" + command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein-Gordon bound states: spectra, wavefunctions, solvers, Lorentz kinematics",
               "kgbound"};
  app.require_subcommand(1);

  struct Bound {
    CLI::App* sub = nullptr;
    std::string config;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::map<std::string, Bound> subs;
  const std::map<std::string, std::string> about = {
      {"spectrum", "closed-form Coulomb levels and the alpha^4 expansion"},
      {"wavefunction", "tabulate a normalized radial function"},
      {"solve", "finite-difference self-consistent eigenvalues"},
      {"compare", "closed form, numerical and Schrodinger energies side by side"},
      {"lorentz", "boost a character state (E, p, U) along x"},
      {"convergence", "grid-refinement study with observed order"},
  };
  for (const auto& name : command_names()) {
    Bound& b = subs[name];
    b.sub = app.add_subcommand(name, about.at(name));
    b.sub->add_option("--config", b.config, "key = value file with optional [command] sections");
    for (const auto& key : allowed_keys(name)) {
      if (key == "richardson") {
        b.options[key] = b.sub->add_flag("--richardson", "also report the N/2, N extrapolation");
      } else {
        b.options[key] = b.sub->add_option("--" + key, b.values[key]);
      }
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kgbound: " << e.what() << '\n';
    return kConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Bound& b = subs.at(command);
  try {
    std::map<std::string, std::string> merged;
    if (!b.config.empty()) merged = load_config_file(b.config, command);
    for (const auto& [key, opt] : b.options) {
      if (opt->count() == 0) continue;
      merged[key] = key == "richardson" ? "true" : b.values[key];
    }
    const Settings settings(merged);
    const Format format = parse_format(settings.get_string("format", "csv"));
    const std::string path = settings.get_string("out", "-");

    CommandResult result = run_command(command, settings);
    if (path == "-") {
      write_table(result.table, format, out);
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw ConfigError("cannot open output file '" + path + "'");
      write_table(result.table, format, f);
    }
    if (result.exit_code != kOk) err << "kgbound: one or more states failed; see status column\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    err << "kgbound: config error: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    err << "kgbound: domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericalError& e) {
    err << "kgbound: numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "kgbound: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace kgbound::cli
