#pragma once

#include <cstdint>
#include <vector>

#include "beadlab/common.hpp"
#include "beadlab/torus.hpp"

namespace beadlab {

struct ChainState {
  int n = 0;
  int ell = 0;
  RingSet occupied;

  ChainState() = default;
  ChainState(int n_, const RingSet& s);
};

enum class ChainKind { gordenko, tasep };

/// Exclusion-chain sample path: legal jump records over a finite horizon.
struct Trajectory {
  ChainState initial;
  struct Event {
    double time;
    int from;  // occupied site that moved to from+1
  };
  std::vector<Event> events;
  double horizon = 0.0;

  RingSet state_at(double t) const;
};

namespace ring {

/// Product of pairwise chord lengths of the unit-circle points indexed by E.
/// Computed in log space; singleton and empty sets give 1.
double log_delta(const RingSet& set);
double delta(const RingSet& set);

/// sin(pi ell / n) / sin(pi / n): constant total exit rate of the
/// non-colliding chain, and the sum of the left root set negated.
double chain_exit_rate(int n, int ell);

/// ell - chain_exit_rate: compensator in the traffic martingale weight.
double traffic_compensator(int n, int ell);

/// det of the root-power matrix for an ordered tuple; cross-checked against
/// the chord-product identity before returning.  Repeated entries give 0.
cdouble det_root_matrix(const std::vector<int>& tuple, int n);

/// Stationary weight of the non-colliding chain: delta(E)^2 / n^ell.
double stationary_prob(const RingSet& set);

struct Move {
  int from;
  RingSet target;
  double rate;
};

std::vector<Move> gordenko_rates(const RingSet& set);
std::vector<Move> tasep_rates(const RingSet& set);

/// Number of occupied sites whose clockwise neighbour is also occupied.
int traffic(const RingSet& set);

/// Event-driven exact simulation; trajectories are deterministic per seed.
Trajectory simulate(ChainKind kind, const ChainState& start, double horizon,
                    std::uint64_t seed);

/// Max relative residual of the generator eigen-identity for the chord
/// product over all states.
double generator_identity_check(int n, int ell);

/// (delta(X_0)/delta(X_t)) * exp(integral of Traffic - compensator), the
/// unit-mean change-of-measure weight; integral taken over exact holding
/// intervals.
double martingale_weight(const Trajectory& traj, double t);

/// Transition probability from the 2*ell-point occupation determinant.
double transition_prob_kernel(const RingSet& from, const RingSet& to, double t);

/// Short-time derivative of the kernel transition probability (Richardson
/// stencil over t in {1e-4, 5e-5}); approximates the chord-ratio rate.
double rate_from_kernel(const RingSet& from, int h);

std::vector<RingSet> enumerate_states(int n, int ell);

/// Dense rate matrix in the enumeration order of `states`.
std::vector<double> rate_matrix(ChainKind kind, const std::vector<RingSet>& states);

/// exp(Q t) by uniformisation; exact finite-state reference for the kernel
/// transition formula.
std::vector<double> transition_matrix_expm(const std::vector<double>& q, int dim, double t);

}  // namespace ring
}  // namespace beadlab
