#include "beadlab/ring_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "beadlab/kernels.hpp"

namespace beadlab {

ChainState::ChainState(int n_, const RingSet& s) : n(n_), ell(s.size()), occupied(s) {
  if (s.n != n_) throw domain_error("ChainState: ring size mismatch");
  if (ell < 1 || ell > n - 1) throw domain_error("ChainState: need 1 <= ell <= n-1");
}

RingSet Trajectory::state_at(double t) const {
  RingSet s = initial.occupied;
  for (const auto& e : events) {
    if (e.time > t) break;
    s = s.with_move(e.from);
  }
  return s;
}

namespace ring {
namespace {

std::uint64_t rotate_right1(const RingSet& s) {
  return ((s.bits >> 1) | (s.bits << (s.n - 1))) & s.mask();
}

template <class RateFn>
std::vector<Move> legal_moves(const RingSet& set, RateFn&& rate_of) {
  std::vector<Move> moves;
  for (int h = 0; h < set.n; ++h) {
    if (!set.contains(h) || set.contains((h + 1) % set.n)) continue;
    RingSet target = set.with_move(h);
    moves.push_back({h, target, rate_of(set, target)});
  }
  return moves;
}

}  // namespace

double log_delta(const RingSet& set) {
  const auto members = set.members();
  double sum = 0.0;
  for (std::size_t j = 0; j < members.size(); ++j)
    for (std::size_t k = j + 1; k < members.size(); ++k) {
      const double chord =
          2.0 * std::abs(std::sin(kPi * (members[k] - members[j]) / set.n));
      sum += std::log(chord);
    }
  return sum;
}

double delta(const RingSet& set) { return std::exp(log_delta(set)); }

double chain_exit_rate(int n, int ell) {
  return std::sin(kPi * ell / n) / std::sin(kPi / n);
}

double traffic_compensator(int n, int ell) { return ell - chain_exit_rate(n, ell); }

cdouble det_root_matrix(const std::vector<int>& tuple, int n) {
  const int ell = static_cast<int>(tuple.size());
  if (ell == 0) return {1.0, 0.0};
  {
    auto sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return {0.0, 0.0};
  }
  std::vector<cdouble> a(static_cast<std::size_t>(ell) * ell);
  for (int j = 0; j < ell; ++j)
    for (int k = 0; k < ell; ++k) {
      const double angle = 2.0 * kPi / n * ((n - ell + 1) / 2.0 + k) * tuple[j];
      a[j * ell + k] = std::polar(1.0, angle);
    }
  const cdouble det = det_inplace(a, ell);

  // Chord-product identity: |det| carries delta, the phase is a signed
  // power of i times the ordering sign.
  int inversions = 0;
  long h_sum = 0;
  for (int j = 0; j < ell; ++j) {
    h_sum += tuple[j];
    for (int k = j + 1; k < ell; ++k)
      if (tuple[j] > tuple[k]) ++inversions;
  }
  RingSet set = RingSet::from_members(n, tuple);
  const double dval = std::exp(log_delta(set));
  cdouble expected = dval;
  expected *= (inversions % 2 == 0) ? 1.0 : -1.0;
  expected *= (h_sum % 2 == 0) ? 1.0 : -1.0;
  expected *= std::polar(1.0, kPi / 2.0 * (ell * (ell - 1) / 2));
  if (std::abs(det - expected) > 1e-10 * std::max(1.0, dval))
    throw numeric_error("det_root_matrix: chord-product identity violated");
  return det;
}

double stationary_prob(const RingSet& set) {
  return std::exp(2.0 * log_delta(set) - set.size() * std::log(double(set.n)));
}

std::vector<Move> gordenko_rates(const RingSet& set) {
  const double base = log_delta(set);
  return legal_moves(set, [&](const RingSet&, const RingSet& target) {
    return std::exp(log_delta(target) - base);
  });
}

std::vector<Move> tasep_rates(const RingSet& set) {
  return legal_moves(set, [](const RingSet&, const RingSet&) { return 1.0; });
}

int traffic(const RingSet& set) {
  return __builtin_popcountll(set.bits & rotate_right1(set));
}

Trajectory simulate(ChainKind kind, const ChainState& start, double horizon,
                    std::uint64_t seed) {
  if (horizon < 0) throw domain_error("simulate: horizon must be nonnegative");
  Trajectory traj;
  traj.initial = start;
  traj.horizon = horizon;
  Rng rng(seed);
  RingSet state = start.occupied;
  double t = 0.0;
  while (true) {
    const auto moves = (kind == ChainKind::gordenko) ? gordenko_rates(state)
                                                     : tasep_rates(state);
    double total = 0.0;
    for (const auto& m : moves) total += m.rate;
    if (!(total > 0.0))
      throw numeric_error("simulate: frozen state (impossible for ell <= n-1)");
    t += rng.exponential(total);
    if (t > horizon) break;
    double pick = rng.uniform01() * total;
    std::size_t idx = 0;
    for (; idx + 1 < moves.size(); ++idx) {
      pick -= moves[idx].rate;
      if (pick <= 0.0) break;
    }
    traj.events.push_back({t, moves[idx].from});
    state = moves[idx].target;
  }
  return traj;
}

double generator_identity_check(int n, int ell) {
  if (n > 12) throw domain_error("generator_identity_check: n capped at 12");
  const double mu = chain_exit_rate(n, ell);
  double worst = 0.0;
  for (const RingSet& state : enumerate_states(n, ell)) {
    const double d = delta(state);
    double lhs = 0.0;
    for (const auto& move : tasep_rates(state)) lhs += delta(move.target) - d;
    const double rhs = (mu - ell + traffic(state)) * d;
    const double scale = d * std::max(1.0, mu);
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

double martingale_weight(const Trajectory& traj, double t) {
  if (t < 0 || t > traj.horizon) throw domain_error("martingale_weight: t outside horizon");
  const double comp = traffic_compensator(traj.initial.n, traj.initial.ell);
  RingSet state = traj.initial.occupied;
  const double log_d0 = log_delta(state);
  double integral = 0.0;
  double prev = 0.0;
  for (const auto& e : traj.events) {
    if (e.time > t) break;
    integral += (traffic(state) - comp) * (e.time - prev);
    prev = e.time;
    state = state.with_move(e.from);
  }
  integral += (traffic(state) - comp) * (t - prev);
  return std::exp(log_d0 - log_delta(state) + integral);
}

double transition_prob_kernel(const RingSet& from, const RingSet& to, double t) {
  if (from.n != to.n || from.size() != to.size())
    throw domain_error("transition_prob_kernel: mismatched states");
  if (!(t > 0)) throw domain_error("transition_prob_kernel: t must be positive");
  const int ell = from.size();
  const auto params = kernels::root_sets(from.n, ell);
  std::vector<KernelPoint> pts;
  pts.reserve(2 * ell);
  for (int h : from.members()) pts.push_back({Flavor::occupied, 0.0, h});
  for (int h : to.members()) pts.push_back({Flavor::occupied, t, h});
  const cdouble det = kernels::mixed_correlation(pts, params);
  if (std::abs(det.imag()) > 1e-9 * std::max(1.0, std::abs(det)))
    throw numeric_error("transition_prob_kernel: determinant not real");
  return det.real() * std::exp(ell * std::log(double(from.n)) - 2.0 * log_delta(from));
}

double rate_from_kernel(const RingSet& from, int h) {
  if (!from.contains(h) || from.contains((h + 1) % from.n))
    throw domain_error("rate_from_kernel: move not legal from this state");
  const RingSet to = from.with_move(h);
  const double t1 = 1e-4, t2 = 5e-5;
  const double f1 = transition_prob_kernel(from, to, t1) / t1;
  const double f2 = transition_prob_kernel(from, to, t2) / t2;
  return 2.0 * f2 - f1;  // the limit has an O(t) correction; extrapolate it out
}

std::vector<RingSet> enumerate_states(int n, int ell) {
  double count = 1.0;
  for (int i = 1; i <= std::min(ell, n - ell); ++i)
    count = count * (n - std::min(ell, n - ell) + i) / i;
  if (count > 1e6)
    throw resource_error("state enumeration capped at 1e6 states; use simulation");
  std::vector<RingSet> states;
  if (ell == 0) {
    states.emplace_back(n, 0);
    return states;
  }
  std::uint64_t mask = (1ULL << ell) - 1;
  const std::uint64_t limit = 1ULL << n;
  while (mask < limit) {
    states.emplace_back(n, mask);
    const std::uint64_t t = mask | (mask - 1);
    mask = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(mask) + 1));
  }
  return states;
}

std::vector<double> rate_matrix(ChainKind kind, const std::vector<RingSet>& states) {
  const int dim = static_cast<int>(states.size());
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < dim; ++i) index[states[i].bits] = i;
  std::vector<double> q(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    const auto moves = (kind == ChainKind::gordenko) ? gordenko_rates(states[i])
                                                     : tasep_rates(states[i]);
    double total = 0.0;
    for (const auto& m : moves) {
      q[i * static_cast<std::size_t>(dim) + index.at(m.target.bits)] += m.rate;
      total += m.rate;
    }
    q[i * static_cast<std::size_t>(dim) + i] = -total;
  }
  return q;
}

std::vector<double> transition_matrix_expm(const std::vector<double>& q, int dim, double t) {
  double rate_cap = 0.0;
  for (int i = 0; i < dim; ++i)
    rate_cap = std::max(rate_cap, -q[i * static_cast<std::size_t>(dim) + i]);
  if (rate_cap == 0.0 || t == 0.0) {
    std::vector<double> identity(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) identity[i * static_cast<std::size_t>(dim) + i] = 1.0;
    return identity;
  }

  // Uniformisation: P = I + Q/cap is stochastic; exp(Qt) is a Poisson mixture
  // of its powers.
  std::vector<double> p(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      p[i * static_cast<std::size_t>(dim) + j] =
          q[i * static_cast<std::size_t>(dim) + j] / rate_cap + (i == j ? 1.0 : 0.0);

  const double a = rate_cap * t;
  std::vector<double> out(static_cast<std::size_t>(dim) * dim, 0.0);
  std::vector<double> power(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) power[i * static_cast<std::size_t>(dim) + i] = 1.0;

  double weight = std::exp(-a);
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] += weight * power[idx];
  std::vector<double> next(static_cast<std::size_t>(dim) * dim);
  for (int m = 1; m < 100000; ++m) {
    // power <- power * p
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < dim; ++i)
      for (int kk = 0; kk < dim; ++kk) {
        const double v = power[i * static_cast<std::size_t>(dim) + kk];
        if (v == 0.0) continue;
        const double* prow = &p[kk * static_cast<std::size_t>(dim)];
        double* nrow = &next[i * static_cast<std::size_t>(dim)];
        for (int j = 0; j < dim; ++j) nrow[j] += v * prow[j];
      }
    power.swap(next);
    weight *= a / m;
    for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] += weight * power[idx];
    if (weight < 1e-18 && m > a) break;
  }
  return out;
}

}  // namespace ring
}  // namespace beadlab
