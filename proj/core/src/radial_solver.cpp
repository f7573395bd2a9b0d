#include "kgbound/radial_solver.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "kgbound/errors.hpp"

namespace kgbound {

std::string to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::schrodinger: return "schrodinger";
    case SolveMode::kg_vector: return "kg-vector";
    case SolveMode::kg_scalar_vector: return "kg-scalar-vector";
    case SolveMode::kg_equal: return "kg-equal";
  }
  return "unknown";
}

SolveMode parse_mode(const std::string& text) {
  std::string t;
  for (char ch : text) t += ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "schrodinger") return SolveMode::schrodinger;
  if (t == "kg-vector" || t == "kgvector") return SolveMode::kg_vector;
  if (t == "kg-scalar-vector" || t == "kgscalarvector") return SolveMode::kg_scalar_vector;
  if (t == "kg-equal" || t == "kgequal") return SolveMode::kg_equal;
  throw InvalidParams("unknown solve mode '" + text + "'");
}

namespace {

// P(r) = U(r) + A/r, regular at the origin.
double regular_part(const PotentialTerm& term, double r, double e2) noexcept {
  if (auto* h = std::get_if<HulthenTerm>(&term)) {
    const double a = h->z * e2;
    const double x = h->lambda * r;
    double g;  // 1/x - 1/expm1(x)
    if (x < 0.05) {
      const double x2 = x * x;
      g = 0.5 + x * (-1.0 / 12.0 + x2 * (1.0 / 720.0 + x2 * (-1.0 / 30240.0 + x2 / 1209600.0)));
    } else {
      g = 1.0 / x - 1.0 / std::expm1(x);
    }
    return a * h->lambda * g;
  }
  return 0.0;
}

// (P(r) - B) / r.
double regular_slope(const PotentialTerm& term, double r, double e2) noexcept {
  if (auto* h = std::get_if<HulthenTerm>(&term)) {
    const double a = h->z * e2;
    const double x = h->lambda * r;
    double d;  // (g(x) - 1/2) / x
    if (x < 0.05) {
      const double x2 = x * x;
      d = -1.0 / 12.0 + x2 * (1.0 / 720.0 + x2 * (-1.0 / 30240.0 + x2 / 1209600.0));
    } else {
      d = (1.0 / x - 1.0 / std::expm1(x) - 0.5) / x;
    }
    return a * h->lambda * h->lambda * d;
  }
  return 0.0;
}

}  // namespace

double RadialEquation::effective_potential(double r) const noexcept {
  const double l2 = static_cast<double>(l) * (l + 1);
  double v = kinetic * l2 / (r * r);
  if (c_u != 0.0 || c_uu != 0.0) {
    const double u = evaluate_term(u_term, r, coupling_sq);
    v += c_u * u + c_uu * u * u;
  }
  if (c_s != 0.0 || c_ss != 0.0) {
    const double s_val = evaluate_term(s_term, r, coupling_sq);
    v += c_s * s_val + c_ss * s_val * s_val;
  }
  return v;
}

double RadialEquation::regular_remainder(double r) const noexcept {
  // cX (X + A/r) + cXX (P^2 - 2 A (P - B)/r) per channel, minus k a1^2
  double q = -kinetic * a1 * a1;
  auto channel = [&](const PotentialTerm& term, double c1, double c2) {
    if (c1 == 0.0 && c2 == 0.0) return;
    const LaurentCoefficients lc = laurent_coefficients(term, coupling_sq);
    const double pr = regular_part(term, r, coupling_sq);
    q += c1 * pr;
    if (c2 != 0.0) q += c2 * (pr * pr - 2.0 * lc.inverse_r * regular_slope(term, r, coupling_sq));
  };
  channel(u_term, c_u, c_uu);
  channel(s_term, c_s, c_ss);
  return q;
}

RadialEquation effective_radial_equation(SolveMode mode, const PotentialSpec& potential,
                                         const PhysicalParams& p, double m_sys, int l) {
  if (!(m_sys > 0.0) || !std::isfinite(m_sys)) throw InvalidParams("system mass must be positive");
  if (l < 0) throw InvalidQuantumNumbers("l must be >= 0");
  potential.check();
  RadialEquation eq;
  eq.mode = mode;
  eq.l = l;
  eq.u_term = potential.vector_part;
  eq.coupling_sq = p.coupling_sq();
  const double hb2 = p.hbar * p.hbar;
  const double c2 = p.c * p.c;
  const double m0 = p.rest_mass;

  switch (mode) {
    case SolveMode::schrodinger:
      if (potential.has_scalar()) {
        throw UnsupportedCombination("schrodinger mode ignores scalar potentials");
      }
      eq.mass_parameter = 2.0 * m0;
      eq.kinetic = hb2 / eq.mass_parameter;
      eq.c_u = 1.0;
      break;
    case SolveMode::kg_vector:
      if (potential.has_scalar()) {
        throw UnsupportedCombination("kg-vector mode ignores scalar potentials; use kg-scalar-vector");
      }
      eq.mass_parameter = m0 + m_sys;
      eq.kinetic = hb2 / eq.mass_parameter;
      eq.c_u = 2.0 * m_sys / eq.mass_parameter;
      eq.c_uu = -1.0 / (eq.mass_parameter * c2);
      break;
    case SolveMode::kg_scalar_vector:
      eq.mass_parameter = m0 + m_sys;
      eq.kinetic = hb2 / eq.mass_parameter;
      eq.c_u = 2.0 * m_sys / eq.mass_parameter;
      eq.c_uu = -1.0 / (eq.mass_parameter * c2);
      eq.c_s = 2.0 * m0 / eq.mass_parameter;
      eq.c_ss = 1.0 / (eq.mass_parameter * c2);
      eq.s_term = potential.scalar_part;
      break;
    case SolveMode::kg_equal:
      if (!potential.scalar_equals_vector()) {
        throw UnsupportedCombination("kg-equal mode requires the scalar part to equal the vector part");
      }
      eq.mass_parameter = m0 + m_sys;
      eq.kinetic = hb2 / eq.mass_parameter;
      eq.c_u = 2.0;
      break;
  }

  const LaurentCoefficients lu = laurent_coefficients(eq.u_term, eq.coupling_sq);
  const LaurentCoefficients ls = laurent_coefficients(eq.s_term, eq.coupling_sq);
  eq.gamma = static_cast<double>(l) * (l + 1) +
             (eq.c_uu * lu.inverse_r * lu.inverse_r + eq.c_ss * ls.inverse_r * ls.inverse_r) /
                 eq.kinetic;
  eq.w1 = eq.c_u * lu.inverse_r + eq.c_s * ls.inverse_r +
          2.0 * eq.c_uu * lu.inverse_r * lu.constant + 2.0 * eq.c_ss * ls.inverse_r * ls.constant;
  const double disc = 0.25 + eq.gamma;
  if (disc < 0.0) {
    throw SupercriticalCoupling(p.z_alpha(), l);
  }
  eq.s = 0.5 + std::sqrt(disc);
  eq.a1 = -eq.w1 / (2.0 * eq.kinetic * eq.s);
  return eq;
}

double DiscretizedOperator::rayleigh_quotient(const std::vector<double>& u) const {
  const std::size_t n = u.size();
  double kin = 0.0;
  double pot = 0.0;
  double norm = 0.0;
  // faces 0..n, u_0 = u_{n+1} = 0
  for (std::size_t f = 0; f <= n; ++f) {
    const double next = f < n ? u[f] : 0.0;         // node f+1 (1-based)
    const double self = f > 0 ? u[f - 1] : 0.0;     // node f
    const double flux = face_next[f] * next - face_self[f] * self;
    kin += flux * flux;
  }
  for (std::size_t i = 0; i < n; ++i) {
    pot += potential[i] * u[i] * u[i];
    norm += u[i] * u[i];
  }
  return (kinetic_scale * kin + pot) / norm;
}

RadialGrid solver_grid(Stencil stencil, double r_max, std::size_t points) {
  return stencil == Stencil::frobenius ? RadialGrid::cell_centered(r_max, points)
                                       : RadialGrid::uniform(r_max, points);
}

DiscretizedOperator assemble(const RadialEquation& eq, const RadialGrid& grid, Stencil stencil) {
  const std::size_t n = grid.size();
  if (n < 200) throw InvalidParams("solver grids need at least 200 points");
  DiscretizedOperator op;
  op.stencil = stencil;
  op.mass_parameter = eq.mass_parameter;
  op.r = grid.points();
  op.face_next.assign(n + 1, 1.0);
  op.face_self.assign(n + 1, 1.0);
  op.potential.resize(n);

  if (stencil == Stencil::frobenius) {
    if (grid.spacing() != GridSpacing::cell_centered) {
      throw InvalidParams("frobenius stencil needs a cell-centred grid");
    }
    op.h = grid.step();
    const double e_next = std::exp(-0.5 * eq.a1 * op.h);
    const double e_self = std::exp(0.5 * eq.a1 * op.h);
    op.face_next[0] = 0.0;
    op.face_self[0] = 0.0;
    for (std::size_t f = 1; f <= n; ++f) {
      const double fi = static_cast<double>(f);
      op.face_next[f] = std::pow(fi / (fi + 0.5), eq.s) * e_next;
      op.face_self[f] = std::pow(fi / (fi - 0.5), eq.s) * e_self;
    }
    for (std::size_t i = 0; i < n; ++i) op.potential[i] = eq.regular_remainder(op.r[i]);
  } else {
    if (grid.spacing() != GridSpacing::uniform) {
      throw InvalidParams("standard stencil needs a uniform grid");
    }
    op.h = grid.step();
    for (std::size_t i = 0; i < n; ++i) op.potential[i] = eq.effective_potential(op.r[i]);
  }
  op.kinetic_scale = eq.kinetic / (op.h * op.h);

  op.matrix.diag.resize(n);
  op.matrix.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    // node i (0-based) is node i+1 in face numbering: faces i (left) and i+1 (right)
    const double right = op.face_self[i + 1];
    const double left = op.face_next[i];
    op.matrix.diag[i] = op.kinetic_scale * (right * right + left * left) + op.potential[i];
    if (i + 1 < n) op.matrix.off[i] = -op.kinetic_scale * op.face_next[i + 1] * op.face_self[i + 1];
  }
  return op;
}

namespace {

int significant_sign_changes(const std::vector<double>& u) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  const double floor_value = 1e-9 * peak;
  int changes = 0;
  int last = 0;
  for (double v : u) {
    if (std::abs(v) <= floor_value) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Eigenpair eigenpair_at(const DiscretizedOperator& op, std::size_t index) {
  const double estimate = bisect_eigenvalue(op.matrix, index);
  Eigenpair out;
  out.u = inverse_iteration(op.matrix, estimate);
  out.node_count = significant_sign_changes(out.u);
  out.e_prime = op.rayleigh_quotient(out.u);
  double norm = 0.0;
  for (double v : out.u) norm += v * v;
  norm = std::sqrt(norm * op.h);
  double peak = 0.0;
  for (double v : out.u) peak = std::max(peak, std::abs(v));
  double sign = 1.0;
  for (double v : out.u) {
    if (std::abs(v) > 1e-6 * peak) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : out.u) v *= sign / norm;
  return out;
}

}  // namespace

Eigenpair inner_eigensolve(const DiscretizedOperator& op, int node_target) {
  if (node_target < 0) throw InvalidParams("node target must be >= 0");
  const std::size_t bound_count = sturm_count(op.matrix, 0.0);
  const auto target = static_cast<std::size_t>(node_target);
  if (bound_count == 0) {
    throw StateNotFound("operator has no bound eigenvalue (E' < 0)");
  }
  // Sturm oscillation puts the state at index node_target; neighbours cover
  // roundoff in the node count.
  const std::size_t lo = target >= 2 ? target - 2 : 0;
  const std::size_t hi = std::min(bound_count, target + 3);
  std::vector<std::size_t> order;
  if (target < bound_count) order.push_back(target);
  for (std::size_t i = lo; i < hi; ++i) {
    if (i != target) order.push_back(i);
  }
  for (std::size_t idx : order) {
    Eigenpair e = eigenpair_at(op, idx);
    if (e.node_count == node_target && e.e_prime < 0.0) return e;
  }
  std::ostringstream os;
  os << "no bound eigenpair with " << node_target << " nodes (" << bound_count
     << " bound eigenvalues on the grid)";
  throw StateNotFound(os.str());
}

double default_r_max(const SolveRequest& req, const PhysicalParams& p) {
  const double m0 = p.rest_mass;
  const RadialEquation eq = effective_radial_equation(req.mode, req.potential, p, m0, req.l);
  const double n = req.n;
  const double n2 = n * n;
  // Fallback when there is no attractive 1/r part: the rest-mass Bohr radius.
  const double length = eq.w1 > 0.0 ? 2.0 * eq.kinetic / eq.w1 : p.bohr_radius() / p.z_number;
  // u ~ (r/(n a))^n e^{-r/(n a)} is below 1e-16 of its peak by r = n (40 + 4n) a
  double r_max = n * (40.0 + 4.0 * n) * length;
  double lambda = 0.0;
  for (const auto* t : {&req.potential.vector_part, &req.potential.scalar_part}) {
    if (auto* h = std::get_if<HulthenTerm>(t)) lambda = std::max(lambda, h->lambda);
  }
  if (lambda > 0.0 && eq.w1 > 0.0) {
    const double x = lambda * n2 * eq.kinetic / eq.w1;
    const double stretch = x < 0.9 ? 1.0 / (1.0 - x) : 10.0;
    r_max *= stretch;
  }
  return r_max;
}

namespace {

void check_tail(const Eigenpair& e, double tolerance) {
  const std::size_t n = e.u.size();
  const std::size_t start = n - std::max<std::size_t>(1, n / 100);
  double peak = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    peak = std::max(peak, std::abs(e.u[i]));
    if (i >= start) tail = std::max(tail, std::abs(e.u[i]));
  }
  if (tail > tolerance * peak) {
    std::ostringstream os;
    os << "eigenfunction has not decayed at r_max (tail/peak = " << tail / peak
       << "); increase r_max";
    throw TailNotConverged(os.str());
  }
}

BoundState make_state(const SolveRequest& req, const PhysicalParams& p, const Eigenpair& e,
                      const RadialGrid& grid) {
  BoundState b = BoundState::from_energy(QuantumNumbers(req.n, req.l), e.e_prime, p);
  b.node_count = e.node_count;
  b.r = grid.points();
  b.u = e.u;
  return b;
}

}  // namespace

BoundState solve_self_consistent(const SolveRequest& req, const PhysicalParams& p) {
  p.check();
  QuantumNumbers qn(req.n, req.l);
  if (!(req.sc_tolerance > 0.0)) throw InvalidParams("sc_tolerance must be positive");
  if (req.max_sc_iters < 1) throw InvalidParams("max_sc_iters must be >= 1");
  const double r_max = req.r_max > 0.0 ? req.r_max : default_r_max(req, p);
  const RadialGrid grid = solver_grid(req.stencil, r_max, req.grid_points);
  const int nodes = qn.radial_nodes();
  const double m0 = p.rest_mass;
  const double c2 = p.c * p.c;

  if (req.mode == SolveMode::schrodinger) {
    const RadialEquation eq = effective_radial_equation(req.mode, req.potential, p, m0, req.l);
    const Eigenpair e = inner_eigensolve(assemble(eq, grid, req.stencil), nodes);
    check_tail(e, req.tail_tolerance);
    BoundState b = make_state(req, p, e, grid);
    b.iterations = 1;
    b.residual = 0.0;
    return b;
  }

  double m = m0;
  double previous_residual = std::numeric_limits<double>::infinity();
  std::vector<double> history;
  for (int it = 1; it <= req.max_sc_iters; ++it) {
    const RadialEquation eq = effective_radial_equation(req.mode, req.potential, p, m, req.l);
    const Eigenpair e = inner_eigensolve(assemble(eq, grid, req.stencil), nodes);
    double m_next = m0 + e.e_prime / c2;
    if (!(m_next > 0.0)) {
      throw NoConvergence("system mass left the physical range", m_next, m);
    }
    const double residual = std::abs(m_next - m) / m0;
    history.push_back(residual);
    if (residual < req.sc_tolerance) {
      check_tail(e, req.tail_tolerance);
      BoundState b = make_state(req, p, e, grid);
      b.iterations = it;
      b.residual = residual;
      b.residual_history = std::move(history);
      return b;
    }
    if (residual > previous_residual) m_next = m + 0.5 * (m_next - m);
    previous_residual = residual;
    if (it == req.max_sc_iters) {
      std::ostringstream os;
      os << "self-consistency did not reach " << req.sc_tolerance << " in " << req.max_sc_iters
         << " iterations (last residual " << residual << ")";
      throw NoConvergence(os.str(), m_next, m);
    }
    m = m_next;
  }
  throw NoConvergence("self-consistency loop exited unexpectedly", m, m);
}

RichardsonResult solve_richardson(const SolveRequest& req, const PhysicalParams& p,
                                  std::size_t coarse_points) {
  SolveRequest r = req;
  if (r.r_max <= 0.0) r.r_max = default_r_max(req, p);
  RichardsonResult out;
  r.grid_points = coarse_points;
  out.coarse = solve_self_consistent(r, p);
  r.grid_points = 2 * coarse_points;
  out.fine = solve_self_consistent(r, p);
  out.e_prime = (4.0 * out.fine.e_prime - out.coarse.e_prime) / 3.0;
  return out;
}

std::vector<ConvergenceRow> convergence_study(const SolveRequest& req, const PhysicalParams& p,
                                              const std::vector<std::size_t>& grid_sizes) {
  if (grid_sizes.size() < 3) throw InvalidParams("convergence study needs at least 3 grid sizes");
  SolveRequest r = req;
  if (r.r_max <= 0.0) r.r_max = default_r_max(req, p);
  std::vector<ConvergenceRow> rows;
  std::vector<double> steps;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t points : grid_sizes) {
    r.grid_points = points;
    ConvergenceRow row;
    row.points = points;
    row.e_prime = solve_self_consistent(r, p).e_prime;
    const RadialGrid g = solver_grid(r.stencil, r.r_max, points);
    steps.push_back(g.step());
    row.richardson = nan;
    row.observed_order = nan;
    const std::size_t k = rows.size();
    if (k >= 1) {
      const double ratio = steps[k - 1] / steps[k];
      const double t = ratio * ratio;
      row.richardson = (t * row.e_prime - rows[k - 1].e_prime) / (t - 1.0);
    }
    if (k >= 2) {
      const double d1 = rows[k - 2].e_prime - rows[k - 1].e_prime;
      const double d2 = rows[k - 1].e_prime - row.e_prime;
      if (d1 != 0.0 && d2 != 0.0) {
        row.observed_order = std::log(std::abs(d1 / d2)) / std::log(steps[k - 1] / steps[k]);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kgbound
