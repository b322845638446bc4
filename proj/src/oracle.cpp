#include <bqed/oracle.hpp>
#include <bqed/rates.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace bqed {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod nodes on [-1, 1] and weights, with the embedded
// 7-point Gauss rule (Gauss nodes are the odd-index Kronrod nodes plus
// the center).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double integral = 0.0;
  double error = 0.0;
};

struct PanelWorse {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo < b.lo;  // deterministic tie-break
  }
};

template <class F>
Panel gk15(const F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int k = 0; k < 7; ++k) {
    const double x = h * kXgk[k];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[k] * fsum;
    if (k % 2 == 1) resg += kWg[k / 2] * fsum;
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.integral = resk * h;
  p.error = std::fabs((resk - resg) * h);
  return p;
}

std::complex<double> component(const Mat3c& G, Pair pair) {
  switch (pair) {
    case Pair::xx: return G[0][0];
    case Pair::yy: return G[1][1];
    case Pair::zz: return G[2][2];
    case Pair::xz: return G[0][2];
  }
  return {};
}

// One eps rung: adaptive GK15 integration of the real half-line
// integrand on [0, L]. Because the minus-branch kernel satisfies
// G(-u) = conj(G(u)), the full-line transform of the even combination
// reduces to 2 Re G(u) cos(w u) on the half line, and of the odd
// combination to -2 Im G(u) sin(w u); both integrands are real.
template <class F>
double integrate_rung(const F& f, double peak, double L, double eps,
                      double w, const QuadratureConfig& cfg,
                      double* err_out) {
  std::vector<double> bp{0.0, L};
  auto add = [&](double x) {
    if (x > 0.0 && x < L) bp.push_back(x);
  };
  if (peak > 0.0) add(peak);
  for (double k : {1.0, 3.0, 10.0, 30.0, 100.0}) {
    add(peak - k * eps);
    add(peak + k * eps);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double x0 = bp[i];
    const double x1 = bp[i + 1];
    const double center = 0.5 * (x0 + x1);
    // Two resolution scales: the regulator width near the kernel peak
    // and the oscillation period elsewhere.
    const double cap =
        std::fabs(center - peak) <= 5.0 * eps ? eps / 10.0 : kPi / w;
    const int n = static_cast<int>(
        std::clamp(std::ceil((x1 - x0) / cap), 1.0, 4096.0));
    for (int j = 0; j < n; ++j) {
      const double a = x0 + (x1 - x0) * (static_cast<double>(j) / n);
      const double b =
          (j == n - 1) ? x1 : x0 + (x1 - x0) * (static_cast<double>(j + 1) / n);
      Panel p = gk15(f, a, b);
      total += p.integral;
      err += p.error;
      queue.push(p);
    }
  }
  int splits = 0;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)) &&
         splits < cfg.max_subdivisions) {
    Panel worst = queue.top();
    if (worst.hi - worst.lo < 1e-13 * std::max(1.0, worst.hi)) break;
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = gk15(f, worst.lo, mid);
    Panel right = gk15(f, mid, worst.hi);
    total += left.integral + right.integral - worst.integral;
    err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  // Deterministic final reduction in position order.
  std::vector<Panel> panels;
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  total = 0.0;
  err = 0.0;
  for (const Panel& p : panels) {
    total += p.integral;
    err += p.error;
  }
  if (!std::isfinite(total) || !std::isfinite(err)) {
    throw std::runtime_error("quadrature produced a non-finite value");
  }
  *err_out = err;
  return total;
}

// Polynomial-in-eps extrapolation to eps = 0 through the given rungs.
double lagrange_at_zero(const std::vector<std::pair<double, double>>& pts,
                        std::size_t first, std::size_t count,
                        const std::vector<double>* errs = nullptr,
                        double* err_accum = nullptr) {
  double value = 0.0;
  for (std::size_t i = first; i < first + count; ++i) {
    double weight = 1.0;
    for (std::size_t j = first; j < first + count; ++j) {
      if (j == i) continue;
      weight *= pts[j].first / (pts[j].first - pts[i].first);
    }
    value += weight * pts[i].second;
    if (errs != nullptr && err_accum != nullptr) {
      *err_accum += std::fabs(weight) * (*errs)[i];
    }
  }
  return value;
}

double pol_component(const Transition& t, Pair pair) {
  switch (pair) {
    case Pair::xx: return t.polarization[0][0];
    case Pair::yy: return t.polarization[1][1];
    case Pair::zz: return t.polarization[2][2];
    case Pair::xz: return t.polarization[0][2];
  }
  return 0.0;
}

const RateEntry* find_entry(const RateBreakdown& bd, const std::string& partner,
                            Pair pair, Mechanism mech, Part part) {
  for (const RateEntry& e : bd.entries) {
    if (e.partner == partner && e.pair == pair && e.mechanism == mech &&
        e.part == part) {
      return &e;
    }
  }
  return nullptr;
}

}  // namespace

FourierValue fourier_kernel(KernelKind kind, Pair pair, const Trajectory& traj,
                            double omega, const QuadratureConfig& cfg) {
  if (!std::isfinite(omega) || omega == 0.0) {
    throw std::domain_error("omega must be finite and nonzero");
  }
  const bool is_free = kind == KernelKind::wightman_free_hadamard ||
                       kind == KernelKind::wightman_free_pauli_jordan;
  const bool is_even = kind == KernelKind::hadamard ||
                       kind == KernelKind::wightman_free_hadamard;
  FourierValue out;
  // Components whose kernel vanishes identically.
  if (pair == Pair::xz &&
      (is_free || traj.kind == Trajectory::Kind::inertial)) {
    return out;
  }
  if (cfg.eps_ladder.empty()) {
    throw std::invalid_argument("eps ladder must not be empty");
  }
  for (double e : cfg.eps_ladder) {
    if (!std::isfinite(e) || e <= 0.0) {
      throw std::invalid_argument("eps ladder entries must be > 0");
    }
  }
  const double w = std::fabs(omega);
  const bool accelerated = traj.kind == Trajectory::Kind::uniform_acceleration;
  double peak = 0.0;
  double L = 0.0;
  if (is_free) {
    L = accelerated ? 10.0 / traj.a : 600.0 / w;
  } else if (!accelerated) {
    peak = 2.0 * traj.z;
    L = peak + 600.0 / w;
  } else {
    peak = (2.0 / traj.a) * std::asinh(traj.a * traj.z);
    L = peak + 10.0 / traj.a;
  }
  if (cfg.half_range_L > 0.0) L = cfg.half_range_L;

  std::vector<double> quad_errs;
  for (double e : cfg.eps_ladder) {
    const double eps = e / w;
    auto integrand = [&](double u) {
      const Mat3c G = is_free ? wightman_free(traj, Branch::minus, u, eps)
                              : wightman_boundary(traj, Branch::minus, u, eps);
      const std::complex<double> g = component(G, pair);
      return is_even ? 2.0 * g.real() * std::cos(w * u)
                     : -2.0 * g.imag() * std::sin(w * u);
    };
    double qerr = 0.0;
    const double I = integrate_rung(integrand, peak, L, eps, w, cfg, &qerr);
    out.ladder.emplace_back(eps, I);
    quad_errs.push_back(qerr);
  }
  const std::size_t n = out.ladder.size();
  double propagated = 0.0;
  out.value = lagrange_at_zero(out.ladder, 0, n, &quad_errs, &propagated);
  double shallow;  // one order lower, for the extrapolation error estimate
  if (n >= 2) {
    shallow = lagrange_at_zero(out.ladder, n - 2, 2);
  } else {
    shallow = out.ladder.back().second;
  }
  out.error = std::fabs(out.value - shallow) + propagated;
  if (!is_even && omega < 0.0) {
    out.value = -out.value;
    for (auto& rung : out.ladder) rung.second = -rung.second;
  }
  return out;
}

std::vector<OracleReport> verify_rate(const AtomSpec& spec,
                                      const std::string& b,
                                      const Trajectory& traj,
                                      const QuadratureConfig& cfg,
                                      double pass_rel_tol, double e2) {
  const RateBreakdown bd =
      traj.kind == Trajectory::Kind::inertial
          ? rate_inertial(spec, b, traj.z, e2)
          : rate_accelerated(spec, b, traj.z, traj.a, e2);
  std::vector<OracleReport> out;
  auto passes = [&](double closed, double oracle) {
    return std::fabs(closed - oracle) <=
           std::max(cfg.abs_tol, pass_rel_tol * std::fabs(closed));
  };
  for (const Transition& t : transitions_from(spec, b)) {
    if (t.omega == 0.0) continue;
    const double ws = t.omega;
    const std::string head = b + "->" + t.partner + " ";
    const char* chan = ws > 0 ? " deexc" : " exc";
    for (Pair p : {Pair::xx, Pair::yy, Pair::zz, Pair::xz}) {
      const double P = pol_component(t, p);
      const double m = p == Pair::xz ? 2.0 : 1.0;
      const struct {
        Mechanism mech;
        KernelKind kind;
        const char* label;
      } rows[2] = {{Mechanism::vf, KernelKind::hadamard, " boundary vf"},
                   {Mechanism::rr, KernelKind::pauli_jordan, " boundary rr"}};
      for (const auto& row : rows) {
        const RateEntry* entry =
            find_entry(bd, t.partner, p, row.mech, Part::boundary);
        OracleReport rep;
        rep.quantity_id = head + pair_name(p) + row.label + chan;
        rep.closed_form_value = entry != nullptr ? entry->rate : 0.0;
        if (P == 0.0) {
          rep.oracle_value = 0.0;
          rep.pass = rep.closed_form_value == 0.0;
        } else {
          const FourierValue F = fourier_kernel(row.kind, p, traj, ws, cfg);
          const double scale = -e2 * ws * m * P;
          rep.oracle_value = scale * F.value;
          rep.abs_error_estimate = std::fabs(scale) * F.error;
          rep.extrapolation_curve = F.ladder;
          for (auto& rung : rep.extrapolation_curve) rung.second *= scale;
          rep.pass = passes(rep.closed_form_value, rep.oracle_value);
        }
        out.push_back(std::move(rep));
      }
      if (p == Pair::xz) continue;
      const RateEntry* entry =
          find_entry(bd, t.partner, p, Mechanism::total, Part::unbounded);
      OracleReport rep;
      rep.quantity_id = head + pair_name(p) + " unbounded total" + chan;
      rep.closed_form_value = entry != nullptr ? entry->rate : 0.0;
      if (P == 0.0) {
        rep.oracle_value = 0.0;
        rep.pass = rep.closed_form_value == 0.0;
      } else {
        const FourierValue Fh = fourier_kernel(
            KernelKind::wightman_free_hadamard, p, traj, ws, cfg);
        const FourierValue Fx = fourier_kernel(
            KernelKind::wightman_free_pauli_jordan, p, traj, ws, cfg);
        const double scale = -e2 * ws * P;
        rep.oracle_value = scale * (Fh.value + Fx.value);
        rep.abs_error_estimate = std::fabs(scale) * (Fh.error + Fx.error);
        rep.extrapolation_curve = Fh.ladder;
        for (std::size_t i = 0; i < rep.extrapolation_curve.size(); ++i) {
          rep.extrapolation_curve[i].second =
              scale * (Fh.ladder[i].second + Fx.ladder[i].second);
        }
        rep.pass = passes(rep.closed_form_value, rep.oracle_value);
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<SeriesCoefficient> series_probe(
    const std::function<double(double)>& fn, int order,
    ProbeDirection direction, double h0) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (!std::isfinite(h0) || h0 <= 0.0) {
    throw std::invalid_argument("h0 must be finite and > 0");
  }
  const int J = order + 4;
  std::vector<double> h(J);
  for (int j = 0; j < J; ++j) h[j] = h0 / static_cast<double>(1 << j);

  // Neville table on a ratio-2 ladder: stage i removes the x^(i*step)
  // term from samples of a power series in x.
  auto extrapolate = [](const std::vector<double>& d, double ratio_pow,
                        double* err) {
    std::vector<double> t = d;
    const int n = static_cast<int>(t.size());
    double prev_diag = t[n - 1];
    double denom = 1.0;
    for (int i = 1; i < n; ++i) {
      denom *= ratio_pow;
      for (int j = n - 1; j >= i; --j) {
        t[j] = t[j] + (t[j] - t[j - 1]) / (denom - 1.0);
      }
      if (i == n - 2) prev_diag = t[n - 1];
    }
    *err = std::fabs(t[n - 1] - prev_diag) +
           std::fabs(t[n - 1] - t[n - 2]);
    return t[n - 1];
  };

  std::vector<SeriesCoefficient> coeffs(order + 1);
  if (direction == ProbeDirection::forward) {
    std::vector<double> f(J);
    for (int j = 0; j < J; ++j) f[j] = fn(h[j]);
    std::vector<double> d(J);
    for (int k = 0; k <= order; ++k) {
      for (int j = 0; j < J; ++j) {
        double rem = f[j];
        double hp = 1.0;
        for (int m = 0; m < k; ++m) {
          rem -= coeffs[m].value * hp;
          hp *= h[j];
        }
        d[j] = rem / hp;
      }
      coeffs[k].value = extrapolate(d, 2.0, &coeffs[k].error);
    }
    return coeffs;
  }
  // Central: split even and odd parts, each a series in h^2.
  std::vector<double> even(J), odd(J);
  for (int j = 0; j < J; ++j) {
    const double fp = fn(h[j]);
    const double fm = fn(-h[j]);
    even[j] = 0.5 * (fp + fm);
    odd[j] = 0.5 * (fp - fm);
  }
  std::vector<double> d(J);
  for (int parity = 0; parity < 2; ++parity) {
    const std::vector<double>& part = parity == 0 ? even : odd;
    for (int k = parity; k <= order; k += 2) {
      for (int j = 0; j < J; ++j) {
        double rem = part[j];
        double hp = parity == 0 ? 1.0 : h[j];
        for (int m = parity; m < k; m += 2) {
          rem -= coeffs[m].value * hp;
          hp *= h[j] * h[j];
        }
        d[j] = rem / hp;
      }
      coeffs[k].value = extrapolate(d, 4.0, &coeffs[k].error);
    }
  }
  return coeffs;
}

}  // namespace bqed
