#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beadlab/common.hpp"

namespace beadlab {

/// A point on the semi-discrete torus: horizontal coordinate t in [0,1),
/// string index h in {0,...,n-1} with mod-n string arithmetic.
struct BeadPoint {
  double t = 0.0;
  int h = 0;
};

/// Subset of {0,...,n-1} packed into one machine word (n <= 63).
struct RingSet {
  int n = 0;
  std::uint64_t bits = 0;

  RingSet() = default;
  RingSet(int n_, std::uint64_t bits_);

  static RingSet from_members(int n, const std::vector<int>& members);

  bool contains(int h) const { return (bits >> wrap(h)) & 1u; }
  int size() const { return __builtin_popcountll(bits); }
  std::uint64_t mask() const { return (n == 64) ? ~0ULL : ((1ULL << n) - 1); }

  RingSet with_move(int from) const;  // from -> from+1 (caller checks legality)
  std::vector<int> members() const;
  std::string to_string() const;

  int wrap(int h) const {
    int r = h % n;
    return r < 0 ? r + n : r;
  }

  friend bool operator==(const RingSet& a, const RingSet& b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

/// k beads per string, horizontal coordinates sorted strictly increasing
/// within each string, all n*k coordinates pairwise distinct.
struct BeadConfiguration {
  int n = 0;
  int k = 0;
  std::vector<std::vector<double>> strings;  // strings[h] has exactly k entries

  static BeadConfiguration from_json_text(const std::string& text);
  std::string to_json_text() const;
};

/// Piecewise-constant right-continuous path of ring subsets; each jump at
/// (time, h) replaces h by h+1 in the occupied set.
struct OccupationPath {
  struct Jump {
    double time;
    int string;
  };

  int n = 0;
  RingSet initial;
  std::vector<Jump> jumps;  // sorted by time

  /// State at time t (right-continuous: a jump at exactly t has fired).
  RingSet state_at(double t) const;
};

namespace torus {

/// Throws domain_error when the configuration is structurally malformed
/// (wrong counts per string, coordinates outside [0,1), unsorted strings).
/// Structural problems are distinct from a false interlacing verdict.
void check_structure(const BeadConfiguration& cfg);

/// True iff every neighbouring pair of strings satisfies one of the two
/// interlacing chains and all coordinates are pairwise distinct.
/// k = 0 configurations are vacuously valid.
bool validate_configuration(const BeadConfiguration& cfg);

/// Occupied strings at time t.  A bead exactly at the query time counts as a
/// full loop away on its own string, which realises right-continuity of the
/// occupation process.
RingSet occupied_set_at(const BeadConfiguration& cfg, double t);

/// Occupation number: cardinality of the occupied set at t = 0.
/// Requires a valid configuration with k >= 1; always in {1,...,n-1}.
int occupation_number(const BeadConfiguration& cfg);

/// Full occupation path: initial set plus one jump per bead.  Verifies jump
/// legality and wrap-around closure, so it doubles as an independent oracle
/// for the occupation number.
OccupationPath build_occupation_path(const BeadConfiguration& cfg);

struct GapSums {
  double p_sum = 0.0;  // same-string gaps; totals the torus measure n
  double q_sum = 0.0;  // up-string gaps; totals the occupation number
};

/// Toric gap sums over all beads, using the residue [t'-t] = t'-t+1_{t'<t}.
GapSums gap_sums(const BeadConfiguration& cfg);

/// Tilt: ratio of the q-gap average to the p-gap average; equals ell/n.
double tilt(const BeadConfiguration& cfg);

/// Reflection (t,h) -> (1-t mod 1, h); occupation number maps to n-ell.
BeadConfiguration reflect(const BeadConfiguration& cfg);

/// Global rotation t -> t+c mod 1.
BeadConfiguration rotate(const BeadConfiguration& cfg, double c);

}  // namespace torus
}  // namespace beadlab
