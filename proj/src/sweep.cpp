#include <bqed/sweep.hpp>
#include <bqed/rates.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bqed {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<double> grid_values(const SweepPlan& plan) {
  std::vector<double> v(plan.points);
  if (plan.log_spacing) {
    const double l0 = std::log(plan.from);
    const double l1 = std::log(plan.to);
    v[0] = plan.from;
    for (int i = 1; i < plan.points; ++i) {
      v[i] = i == plan.points - 1
                 ? plan.to
                 : std::exp(l0 + (l1 - l0) * i / (plan.points - 1));
    }
  } else {
    for (int i = 0; i < plan.points; ++i) {
      v[i] = i == plan.points - 1
                 ? plan.to
                 : plan.from + (plan.to - plan.from) * i / (plan.points - 1);
    }
  }
  return v;
}

void validate_plan(const SweepPlan& plan) {
  auto bad = [](const char* msg) { throw std::invalid_argument(msg); };
  if (plan.points < 2) bad("sweep needs at least 2 points");
  if (!std::isfinite(plan.from) || !std::isfinite(plan.to) ||
      plan.from >= plan.to) {
    bad("sweep range must satisfy from < to");
  }
  if (plan.log_spacing && plan.from <= 0.0) {
    bad("log spacing requires from > 0");
  }
  switch (plan.variable) {
    case SweepPlan::Variable::z:
      if (plan.from <= 0.0) bad("z sweep requires from > 0");
      break;
    case SweepPlan::Variable::a:
      if (plan.from < 0.0) bad("a sweep requires from >= 0");
      break;
    case SweepPlan::Variable::omega:
      if (plan.from <= 0.0) bad("omega sweep requires from > 0");
      break;
  }
  if (plan.variable != SweepPlan::Variable::z &&
      (!std::isfinite(plan.fixed_z) || plan.fixed_z <= 0.0)) {
    bad("fixed z must be > 0");
  }
  if (plan.variable != SweepPlan::Variable::a &&
      (!std::isfinite(plan.fixed_a) || plan.fixed_a < 0.0)) {
    bad("fixed acceleration must be >= 0");
  }
  if (plan.variable != SweepPlan::Variable::omega &&
      (!std::isfinite(plan.omega_scale) || plan.omega_scale <= 0.0)) {
    bad("omega scale must be > 0");
  }
}

// CSV rows for one grid point. Walks the breakdown entries, which arrive
// per transition and pair as (vf boundary, rr boundary[, unbounded
// total]); the boundary total row is derived as vf + rr.
std::string point_rows(const AtomSpec& spec, const std::string& b,
                       const SweepPlan& plan, double value,
                       const EvalPolicy& policy) {
  double z = plan.fixed_z;
  double a = plan.fixed_a;
  double scale = plan.omega_scale;
  switch (plan.variable) {
    case SweepPlan::Variable::z: z = value; break;
    case SweepPlan::Variable::a: a = value; break;
    case SweepPlan::Variable::omega: scale = value; break;
  }
  AtomSpec scaled = spec;
  for (Level& lvl : scaled.levels) lvl.energy *= scale;
  const RateBreakdown bd =
      a > 0.0 ? rate_accelerated(scaled, b, z, a, plan.e2, policy)
              : rate_inertial(scaled, b, z, plan.e2, policy);
  std::string out;
  const std::string val_str = fmt17(value);
  auto row = [&](const RateEntry& e, Mechanism mech, Part part, double rate) {
    const double omega_bd =
        e.channel == Channel::deexcitation ? e.omega : -e.omega;
    out += val_str;
    out += ',';
    out += fmt17(omega_bd);
    out += ',';
    out += pair_name(e.pair);
    out += ',';
    out += mechanism_name(mech);
    out += ',';
    out += part_name(part);
    out += ',';
    out += channel_name(e.channel);
    out += ',';
    out += fmt17(rate);
    out += '\n';
  };
  const RateEntry* vf = nullptr;
  for (const RateEntry& e : bd.entries) {
    if (e.part == Part::boundary && e.mechanism == Mechanism::vf) {
      vf = &e;
      row(e, Mechanism::vf, Part::boundary, e.rate);
    } else if (e.part == Part::boundary && e.mechanism == Mechanism::rr) {
      row(e, Mechanism::rr, Part::boundary, e.rate);
      if (vf != nullptr) {
        row(e, Mechanism::total, Part::boundary, vf->rate + e.rate);
        vf = nullptr;
      }
    } else {
      row(e, Mechanism::total, Part::unbounded, e.rate);
    }
  }
  return out;
}

}  // namespace

std::string run_sweep(const AtomSpec& spec, const std::string& b,
                      const SweepPlan& plan, const EvalPolicy& policy) {
  validate_plan(plan);
  const std::vector<double> values = grid_values(plan);
  std::vector<std::string> chunks(values.size());
  const int workers =
      std::max(1, std::min(plan.threads, static_cast<int>(values.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      chunks[i] = point_rows(spec, b, plan, values[i], policy);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= values.size()) return;
        try {
          chunks[i] = point_rows(spec, b, plan, values[i], policy);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::string csv = "variable,omega_bd,pair,mechanism,part,channel,rate\n";
  for (const std::string& c : chunks) csv += c;
  return csv;
}

}  // namespace bqed
