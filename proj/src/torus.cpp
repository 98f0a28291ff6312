#include "beadlab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace beadlab {

RingSet::RingSet(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
  if (n_ < 1 || n_ > 63) throw domain_error("RingSet: n must be in [1,63]");
  if (bits_ & ~mask()) throw domain_error("RingSet: bits outside {0,...,n-1}");
}

RingSet RingSet::from_members(int n, const std::vector<int>& members) {
  RingSet s(n, 0);
  for (int h : members) s.bits |= 1ULL << s.wrap(h);
  return s;
}

RingSet RingSet::with_move(int from) const {
  RingSet out = *this;
  out.bits &= ~(1ULL << wrap(from));
  out.bits |= 1ULL << wrap(from + 1);
  return out;
}

std::vector<int> RingSet::members() const {
  std::vector<int> out;
  for (int h = 0; h < n; ++h)
    if (contains(h)) out.push_back(h);
  return out;
}

std::string RingSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int h : members()) {
    if (!first) s += ",";
    s += std::to_string(h);
    first = false;
  }
  return s + "}";
}

BeadConfiguration BeadConfiguration::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BeadConfiguration cfg;
  cfg.n = j.at("n").get<int>();
  cfg.k = j.at("k").get<int>();
  for (const auto& row : j.at("strings")) {
    std::vector<double> s;
    for (const auto& v : row) {
      if (v.is_string())
        s.push_back(std::stod(v.get<std::string>()));
      else
        s.push_back(v.get<double>());
    }
    cfg.strings.push_back(std::move(s));
  }
  return cfg;
}

std::string BeadConfiguration::to_json_text() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& s : strings) {
    auto row = nlohmann::ordered_json::array();
    for (double t : s) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", t);
      row.push_back(std::string(buf));
    }
    rows.push_back(row);
  }
  j["strings"] = rows;
  return j.dump();
}

RingSet OccupationPath::state_at(double t) const {
  RingSet s = initial;
  for (const auto& j : jumps) {
    if (j.time > t) break;
    s = s.with_move(j.string);
  }
  return s;
}

namespace torus {
namespace {

// Residue of x mod 1 mapped into (0,1]: a coordinate coinciding with the
// query time counts as a full loop away.
double residue_strict(double x) {
  double r = x - std::floor(x);
  if (r == 0.0) r = 1.0;
  return r;
}

// Distance from time t to the first bead of `coords` strictly after t.
double first_bead_after(const std::vector<double>& coords, double t) {
  double best = std::numeric_limits<double>::infinity();
  for (double c : coords) best = std::min(best, residue_strict(c - t));
  return best;
}

}  // namespace

void check_structure(const BeadConfiguration& cfg) {
  if (cfg.n < 2 || cfg.n > 63) throw domain_error("configuration: n must be in [2,63]");
  if (cfg.k < 0) throw domain_error("configuration: k must be nonnegative");
  if (static_cast<int>(cfg.strings.size()) != cfg.n)
    throw domain_error("configuration: expected one coordinate list per string");
  for (const auto& s : cfg.strings) {
    if (static_cast<int>(s.size()) != cfg.k)
      throw domain_error("configuration: every string must hold exactly k beads");
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!(s[j] >= 0.0 && s[j] < 1.0))
        throw domain_error("configuration: coordinates must lie in [0,1)");
      if (j > 0 && s[j] < s[j - 1])
        throw domain_error("configuration: string coordinates must be sorted");
    }
  }
}

bool validate_configuration(const BeadConfiguration& cfg) {
  check_structure(cfg);
  if (cfg.k == 0) return true;

  // Pairwise distinctness across the whole configuration; ties are rejected.
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(cfg.n) * cfg.k);
  for (const auto& s : cfg.strings) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1]) return false;

  // With distinct coordinates the two chains collapse to a strict merge
  // alternation; which string owns the earliest bead picks the chain.
  for (int h = 0; h < cfg.n; ++h) {
    const auto& a = cfg.strings[h];
    const auto& b = cfg.strings[(h + 1) % cfg.n];
    std::size_t ia = 0, ib = 0;
    bool expect_a = a[0] < b[0];
    while (ia < a.size() || ib < b.size()) {
      const double na = ia < a.size() ? a[ia] : std::numeric_limits<double>::infinity();
      const double nb = ib < b.size() ? b[ib] : std::numeric_limits<double>::infinity();
      if (expect_a) {
        if (na > nb) return false;
        ++ia;
      } else {
        if (nb > na) return false;
        ++ib;
      }
      expect_a = !expect_a;
    }
  }
  return true;
}

RingSet occupied_set_at(const BeadConfiguration& cfg, double t) {
  RingSet s(cfg.n, 0);
  for (int h = 0; h < cfg.n; ++h) {
    const double own = first_bead_after(cfg.strings[h], t);
    const double below = first_bead_after(cfg.strings[(h + cfg.n - 1) % cfg.n], t);
    if (own < below) s.bits |= 1ULL << h;
  }
  return s;
}

int occupation_number(const BeadConfiguration& cfg) {
  if (cfg.k < 1) throw domain_error("occupation_number: k must be >= 1");
  if (!validate_configuration(cfg)) throw domain_error("occupation_number: invalid configuration");
  const int ell = occupied_set_at(cfg, 0.0).size();
  if (ell < 1 || ell > cfg.n - 1) throw numeric_error("occupation_number: ell outside {1,...,n-1}");
  return ell;
}

OccupationPath build_occupation_path(const BeadConfiguration& cfg) {
  if (cfg.k < 1) throw domain_error("build_occupation_path: k must be >= 1");
  if (!validate_configuration(cfg)) throw domain_error("build_occupation_path: invalid configuration");

  OccupationPath path;
  path.n = cfg.n;
  path.initial = occupied_set_at(cfg, 0.0);
  for (int h = 0; h < cfg.n; ++h)
    for (double t : cfg.strings[h]) path.jumps.push_back({t, h});
  std::sort(path.jumps.begin(), path.jumps.end(),
            [](const OccupationPath::Jump& a, const OccupationPath::Jump& b) {
              return a.time < b.time;
            });

  // Replay the jumps: each must be legal, and the loop must close.
  RingSet state = path.initial;
  for (const auto& j : path.jumps) {
    const int to = state.wrap(j.string + 1);
    if (!state.contains(j.string) || state.contains(to))
      throw numeric_error("build_occupation_path: illegal jump");
    state = state.with_move(j.string);
  }
  if (!(state == path.initial))
    throw numeric_error("build_occupation_path: path does not close around the torus");
  return path;
}

GapSums gap_sums(const BeadConfiguration& cfg) {
  if (cfg.k < 1) throw domain_error("gap_sums: k must be >= 1");
  if (!validate_configuration(cfg)) throw domain_error("gap_sums: invalid configuration");
  GapSums sums;
  for (int h = 0; h < cfg.n; ++h) {
    const auto& own = cfg.strings[h];
    const auto& above = cfg.strings[(h + 1) % cfg.n];
    for (std::size_t j = 0; j < own.size(); ++j) {
      const double next_same =
          (own.size() == 1) ? 1.0
                            : residue_strict(own[(j + 1) % own.size()] - own[j]);
      sums.p_sum += next_same;
      sums.q_sum += first_bead_after(above, own[j]);
    }
  }
  return sums;
}

double tilt(const BeadConfiguration& cfg) {
  const GapSums s = gap_sums(cfg);
  return s.q_sum / s.p_sum;
}

BeadConfiguration reflect(const BeadConfiguration& cfg) {
  BeadConfiguration out = cfg;
  for (auto& s : out.strings) {
    for (double& t : s) {
      t = 1.0 - t;
      if (t >= 1.0) t -= 1.0;
    }
    std::sort(s.begin(), s.end());
  }
  return out;
}

BeadConfiguration rotate(const BeadConfiguration& cfg, double c) {
  BeadConfiguration out = cfg;
  for (auto& s : out.strings) {
    for (double& t : s) {
      t += c;
      t -= std::floor(t);
    }
    std::sort(s.begin(), s.end());
  }
  return out;
}

}  // namespace torus
}  // namespace beadlab
