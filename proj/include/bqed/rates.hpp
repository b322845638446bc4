#pragma once

#include <bqed/atom.hpp>
#include <bqed/special_functions.hpp>

#include <string>
#include <vector>

namespace bqed {

/// Which fluctuation mechanism a contribution belongs to.
enum class Mechanism { vf, rr, total };

/// Which part of the field correlator sourced it.
enum class Part { boundary, unbounded };

/// Direction of the energy flow in the transition.
enum class Channel { deexcitation, excitation };

const char* mechanism_name(Mechanism m);
const char* part_name(Part p);
const char* channel_name(Channel c);

/// One additive contribution to d<H_atom>/dtau.
struct RateEntry {
  std::string partner;       ///< id of the level the transition couples to
  double omega = 0.0;        ///< transition frequency magnitude
  Mechanism mechanism = Mechanism::vf;
  Part part = Part::boundary;
  Channel channel = Channel::deexcitation;
  Pair pair = Pair::xx;
  double rate = 0.0;
};

/// All contributions for one level, plus the coupling they were computed
/// with. Entries are ordered so that exactly cancelling vf/rr pairs are
/// adjacent: summing sequentially yields an exact 0.0 for a ground state.
struct RateBreakdown {
  double coupling_e2 = 0.0;
  std::vector<RateEntry> entries;

  /// Sequential sum of all entries.
  double total() const;
  /// Sequential sum restricted to one part.
  double total(Part part) const;
};

/// Rate of change of the mean atomic energy for level `b` of `spec` held
/// static at distance z > 0 from the plane (inertial trajectory; parallel
/// drift does not change the result). `e2` is the squared charge
/// prefactor multiplying |<b|r|d>|^2.
RateBreakdown rate_inertial(const AtomSpec& spec, const std::string& b,
                            double z, double e2, const EvalPolicy& policy = {});

/// Same quantity for uniform proper acceleration a > 0 at distance z > 0.
RateBreakdown rate_accelerated(const AtomSpec& spec, const std::string& b,
                               double z, double a, double e2,
                               const EvalPolicy& policy = {});

/// Only the boundary-independent (free-space) contributions, valid for
/// a >= 0; a = 0 reduces to the inertial free-space result.
RateBreakdown unbounded_rate(const AtomSpec& spec, const std::string& b,
                             double a, double e2,
                             const EvalPolicy& policy = {});

/// Locations where the boundary-induced correction cancels the
/// acceleration-induced free-space excess for one diagonal component.
struct CrossingResult {
  Pair component = Pair::zz;
  std::vector<double> roots;
  std::vector<double> residuals;
};

/// Scans g(z) = a^2/omega^2 - (3/16) f_component(omega z, a z) for sign
/// changes on [z_lo, z_hi] and polishes each bracket by bisection to a
/// residual below 1e-10 * max(1, a^2/omega^2). Diagonal components only.
CrossingResult nonthermal_crossing(double omega, double a, Pair component,
                                   double z_lo, double z_hi,
                                   int max_roots = 8,
                                   const EvalPolicy& policy = {});

}  // namespace bqed
