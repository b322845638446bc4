#include <bqed/rates.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bqed {

namespace {

constexpr double kInv32Pi = 1.0 / (32.0 * std::numbers::pi);
constexpr double kInv3Pi = 1.0 / (3.0 * std::numbers::pi);

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_valid(const AtomSpec& spec) {
  const auto problems = validate(spec);
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "invalid atom spec:";
  for (const auto& p : problems) msg << "\n  - " << p;
  throw std::invalid_argument(msg.str());
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

// Shared assembly for all three entry points. With include_boundary the
// distance z must be positive; a = 0 selects the inertial trajectory.
// Entry order per transition and pair: boundary vf, boundary rr
// (adjacent, so an inertial excitation channel sums to exactly zero),
// then the unbounded total for diagonal pairs.
RateBreakdown assemble(const AtomSpec& spec, const std::string& b, double z,
                       double a, double e2, const EvalPolicy& policy,
                       bool include_boundary) {
  require_valid(spec);
  require(std::isfinite(e2) && e2 > 0.0, "coupling e2 must be > 0");
  require(std::isfinite(a) && a >= 0.0, "acceleration must be >= 0");
  if (include_boundary) {
    require(std::isfinite(z) && z > 0.0, "distance z must be > 0");
  }
  RateBreakdown bd;
  bd.coupling_e2 = e2;
  for (const Transition& t : transitions_from(spec, b)) {
    if (t.omega == 0.0) continue;  // degenerate pair: no rotating transition
    const double w = std::fabs(t.omega);
    const Channel ch =
        t.omega > 0.0 ? Channel::deexcitation : Channel::excitation;
    const double n = planck_n(w, a);
    const double K = 1.0 + (a > 0.0 ? (a * a) / (w * w) : 0.0);
    const double w4 = w * w * w * w;
    for (Pair p : {Pair::xx, Pair::yy, Pair::zz, Pair::xz}) {
      const double P = pol_component(t, p);
      const double m = p == Pair::xz ? 2.0 : 1.0;
      if (include_boundary) {
        double f;
        if (a == 0.0) {
          f = p == Pair::zz ? f_z(w * z, policy)
              : p == Pair::xz ? 0.0
                              : f_x(w * z, policy);
        } else {
          f = f_accel(p, w * z, a * z, policy);
        }
        const double base = kInv32Pi * e2 * w4 * m * P * f;
        RateEntry vf;
        vf.partner = t.partner;
        vf.omega = w;
        vf.mechanism = Mechanism::vf;
        vf.part = Part::boundary;
        vf.channel = ch;
        vf.pair = p;
        vf.rate = (ch == Channel::deexcitation ? base : -base) * (1.0 + 2.0 * n);
        bd.entries.push_back(vf);
        RateEntry rr = vf;
        rr.mechanism = Mechanism::rr;
        rr.rate = base;
        bd.entries.push_back(rr);
      }
      if (p != Pair::xz) {
        const double U = kInv3Pi * e2 * w4 * P * K;
        RateEntry unb;
        unb.partner = t.partner;
        unb.omega = w;
        unb.mechanism = Mechanism::total;
        unb.part = Part::unbounded;
        unb.channel = ch;
        unb.pair = p;
        unb.rate = ch == Channel::deexcitation ? -U * (1.0 + n) : U * n;
        bd.entries.push_back(unb);
      }
    }
  }
  return bd;
}

}  // namespace

const char* mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::vf: return "vf";
    case Mechanism::rr: return "rr";
    case Mechanism::total: return "total";
  }
  return "??";
}

const char* part_name(Part p) {
  switch (p) {
    case Part::boundary: return "boundary";
    case Part::unbounded: return "unbounded";
  }
  return "??";
}

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::deexcitation: return "deexcitation";
    case Channel::excitation: return "excitation";
  }
  return "??";
}

double RateBreakdown::total() const {
  double sum = 0.0;
  for (const RateEntry& e : entries) sum += e.rate;
  return sum;
}

double RateBreakdown::total(Part part) const {
  double sum = 0.0;
  for (const RateEntry& e : entries) {
    if (e.part == part) sum += e.rate;
  }
  return sum;
}

RateBreakdown rate_inertial(const AtomSpec& spec, const std::string& b,
                            double z, double e2, const EvalPolicy& policy) {
  return assemble(spec, b, z, 0.0, e2, policy, true);
}

RateBreakdown rate_accelerated(const AtomSpec& spec, const std::string& b,
                               double z, double a, double e2,
                               const EvalPolicy& policy) {
  require(std::isfinite(a) && a > 0.0, "acceleration must be > 0");
  return assemble(spec, b, z, a, e2, policy, true);
}

RateBreakdown unbounded_rate(const AtomSpec& spec, const std::string& b,
                             double a, double e2, const EvalPolicy& policy) {
  return assemble(spec, b, 1.0, a, e2, policy, false);
}

CrossingResult nonthermal_crossing(double omega, double a, Pair component,
                                   double z_lo, double z_hi, int max_roots,
                                   const EvalPolicy& policy) {
  require(std::isfinite(omega) && omega > 0.0, "omega must be > 0");
  require(std::isfinite(a) && a > 0.0, "acceleration must be > 0");
  require(std::isfinite(z_lo) && std::isfinite(z_hi) && z_lo > 0.0,
          "z_lo must be finite and > 0");
  if (!(z_lo < z_hi)) {
    throw std::invalid_argument("malformed range: need z_lo < z_hi");
  }
  if (component == Pair::xz) {
    throw std::invalid_argument(
        "crossing search applies to diagonal components only");
  }
  if (max_roots < 1) throw std::invalid_argument("max_roots must be >= 1");
  const double r2 = (a * a) / (omega * omega);
  auto g = [&](double z) {
    return r2 - (3.0 / 16.0) * f_accel(component, omega * z, a * z, policy);
  };
  CrossingResult result;
  result.component = component;
  const double step = std::numbers::pi / (64.0 * omega);
  double z_prev = z_lo;
  double g_prev = g(z_prev);
  auto record = [&](double root) {
    result.roots.push_back(root);
    result.residuals.push_back(std::fabs(g(root)));
  };
  while (z_prev < z_hi &&
         static_cast<int>(result.roots.size()) < max_roots) {
    double z_next = std::min(z_prev + step, z_hi);
    double g_next = g(z_next);
    if (g_prev == 0.0) {
      record(z_prev);
    } else if (g_next != 0.0 && std::signbit(g_prev) != std::signbit(g_next)) {
      double lo = z_prev;
      double hi = z_next;
      double g_lo = g_prev;
      while (hi - lo > 1e-15 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (g_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(g_mid) == std::signbit(g_lo)) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
        }
      }
      record(0.5 * (lo + hi));
    }
    if (z_next >= z_hi) break;
    z_prev = z_next;
    g_prev = g_next;
  }
  return result;
}

}  // namespace bqed
