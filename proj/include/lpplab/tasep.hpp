#pragma once

// Event-driven TASEP with step initial condition and a slow bond at the
// origin, on a finite window of Z.
//
// The wait of particle i (the one started at site -i) for its j-th jump,
// counted from the moment the jump becomes possible, is the exponential
// attached to the index pair (i,j) under the run key; the rate is 1 except
// across the bond (0,1) where it is 1-eps. Indexing clocks by (particle,
// jump) rather than by event order makes the process exactly the last
// passage percolation coupling: sweeping eps under one key is a monotone
// coupling, and completion times reproduce the lattice DP bit for bit.

#include <cassert>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "lpplab/lattice.hpp"
#include "lpplab/rng.hpp"

namespace lpplab {

struct TasepState {
  int64_t window_left = 0;   // sites -window_left .. window_right
  int64_t window_right = 0;
  std::vector<uint8_t> occupied;    // indexed by site + window_left
  std::vector<int64_t> position;    // particle k started at -k
  std::vector<int64_t> jump_count;  // jumps performed per particle
  double time = 0.0;
  int64_t bond_crossings = 0;        // jumps across (0,1)
  std::vector<double> crossing_times;

  int64_t site_count() const { return window_left + window_right + 1; }
  int64_t particle_count() const { return static_cast<int64_t>(position.size()); }

  bool site_occupied(int64_t site) const {
    return occupied[static_cast<std::size_t>(site + window_left)] != 0;
  }
  void set_site(int64_t site, bool value) {
    occupied[static_cast<std::size_t>(site + window_left)] = value ? 1 : 0;
  }

  // Occupation matches positions, no double occupancy, no overtaking.
  bool consistent() const {
    std::vector<uint8_t> seen(occupied.size(), 0);
    for (int64_t k = 0; k < particle_count(); ++k) {
      const int64_t s = position[k];
      if (s < -window_left || s > window_right) return false;
      if (!site_occupied(s)) return false;
      if (seen[static_cast<std::size_t>(s + window_left)]) return false;
      seen[static_cast<std::size_t>(s + window_left)] = 1;
      if (k > 0 && position[k] >= position[k - 1]) return false;
    }
    int64_t occ = 0;
    for (uint8_t b : occupied) occ += b;
    return occ == particle_count();
  }
};

// Step initial condition on the window: sites -W_left..0 occupied, 1..W_right
// empty; particle k sits at -k.
inline TasepState init_step(int64_t w_left, int64_t w_right) {
  if (w_left < 1 || w_right < 1) throw std::invalid_argument("init_step: window sides must be >= 1");
  TasepState st;
  st.window_left = w_left;
  st.window_right = w_right;
  st.occupied.assign(static_cast<std::size_t>(st.site_count()), 0);
  st.position.resize(static_cast<std::size_t>(w_left + 1));
  st.jump_count.assign(static_cast<std::size_t>(w_left + 1), 0);
  for (int64_t k = 0; k <= w_left; ++k) {
    st.position[static_cast<std::size_t>(k)] = -k;
    st.set_site(-k, true);
  }
  return st;
}

struct WindowExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct TasepEvent {
  double when;
  int64_t particle;  // -1 marks the right-boundary sentinel
  friend bool operator>(const TasepEvent& a, const TasepEvent& b) { return a.when > b.when; }
};

}  // namespace detail

// Runs the dynamics from the given state until t_max. In TASEP an enabled
// jump can only be disabled by firing, so each particle carries at most one
// pending event and events are never stale. Touching either window edge
// before t_max (lead particle needing a site beyond window_right, or the
// leftmost particle vacating -window_left) raises WindowExhausted: beyond
// that moment the finite window no longer reproduces the infinite system.
//
// Clock draws are a pure function of (key, particle, jump index), so one call
// per (state, key) is exact; resuming a returned state needs a fresh key.
inline TasepState simulate(TasepState state, double epsilon, double t_max, const StreamKey& key) {
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::invalid_argument("simulate: epsilon must be in [0,1)");
  if (!(t_max > 0.0)) throw std::invalid_argument("simulate: t_max must be > 0");

  const auto jump_rate = [epsilon](int64_t from_site) {
    return from_site == 0 ? 1.0 - epsilon : 1.0;
  };

  std::priority_queue<detail::TasepEvent, std::vector<detail::TasepEvent>,
                      std::greater<detail::TasepEvent>>
      queue;

  const auto schedule = [&](int64_t p, double now) {
    const int64_t s = state.position[static_cast<std::size_t>(p)];
    if (s == state.window_right) {
      // the jump would leave the window; fires as a sentinel so that it only
      // errors if it lands inside the horizon
      queue.push({now + exponential_at(key, static_cast<uint32_t>(p),
                                       static_cast<uint32_t>(state.jump_count[static_cast<std::size_t>(p)]),
                                       jump_rate(s)),
                  -1});
      return;
    }
    if (state.site_occupied(s + 1)) return;
    const double wait = exponential_at(key, static_cast<uint32_t>(p),
                                       static_cast<uint32_t>(state.jump_count[static_cast<std::size_t>(p)]),
                                       jump_rate(s));
    queue.push({now + wait, p});
  };

  for (int64_t p = 0; p < state.particle_count(); ++p) schedule(p, state.time);

  int64_t events = 0;
  while (!queue.empty()) {
    const auto ev = queue.top();
    if (ev.when > t_max) break;
    queue.pop();
    if (ev.particle < 0)
      throw WindowExhausted("tasep: lead particle reached the right window edge before t_max");

    const int64_t p = ev.particle;
    const int64_t s = state.position[static_cast<std::size_t>(p)];
    assert(!state.site_occupied(s + 1));
    state.set_site(s, false);
    state.set_site(s + 1, true);
    state.position[static_cast<std::size_t>(p)] = s + 1;
    state.jump_count[static_cast<std::size_t>(p)] += 1;
    state.time = ev.when;
    if (s == 0) {
      state.bond_crossings += 1;
      state.crossing_times.push_back(ev.when);
    }
    if (s == -state.window_left)
      throw WindowExhausted("tasep: left window edge vacated before t_max");

    schedule(p, ev.when);
    const int64_t q = p + 1;
    if (q < state.particle_count() && state.position[static_cast<std::size_t>(q)] == s - 1)
      schedule(q, ev.when);

    if ((++events & 0xFFFF) == 0 && !state.consistent())
      throw std::logic_error("tasep: state inconsistency detected");
  }
  state.time = t_max;
  return state;
}

struct CurrentEstimate {
  double J = 0.0;             // crossings per unit time after burn-in
  double horizon = 0.0;
  double standard_error = 0.0;  // batch means
  bool degenerate = false;      // no crossings observed
};

inline CurrentEstimate current_estimate(const TasepState& state, double burn_in) {
  if (!(state.time > burn_in)) throw std::invalid_argument("current_estimate: horizon must exceed burn-in");
  CurrentEstimate est;
  est.horizon = state.time;
  const double span = state.time - burn_in;
  int64_t crossings = 0;
  for (double t : state.crossing_times)
    if (t > burn_in) ++crossings;
  est.J = static_cast<double>(crossings) / span;
  if (crossings == 0) {
    est.degenerate = true;
    return est;
  }
  constexpr int kBatches = 20;
  double rates[kBatches] = {};
  const double dt = span / kBatches;
  for (double t : state.crossing_times) {
    if (t <= burn_in) continue;
    int b = static_cast<int>((t - burn_in) / dt);
    if (b >= kBatches) b = kBatches - 1;
    rates[b] += 1.0 / dt;
  }
  double mean = 0.0;
  for (double r : rates) mean += r;
  mean /= kBatches;
  double var = 0.0;
  for (double r : rates) var += (r - mean) * (r - mean);
  var /= (kBatches - 1);
  est.standard_error = std::sqrt(var / kBatches);
  return est;
}

struct CoupledPassageTime {
  double tasep_time = 0.0;
  double lpp_time = 0.0;
};

// The TASEP<->DLPP identity made executable: one shared weight array, the
// waiting-time recursion t(i,j) = max(t(i,j-1), t(i-1,j)) + xi(i,j) on the
// TASEP side and the passage-time DP on the LPP side. The two results must
// agree to the last bit.
inline CoupledPassageTime coupled_passage_time(int64_t n, double epsilon, const StreamKey& key) {
  if (n < 1) throw std::invalid_argument("coupled_passage_time: n must be >= 1");
  const LatticeWeights w = sample_weights(n, epsilon, 0, key);

  // TASEP side: completion time of particle i's j-th jump.
  std::vector<double> done(static_cast<std::size_t>(n + 1));
  for (int64_t i = 0; i <= n; ++i) {
    for (int64_t j = 0; j <= n; ++j) {
      double ready = 0.0;
      if (i == 0 && j == 0)
        ready = 0.0;  // particle 0's first jump is possible at time 0
      else if (i == 0)
        ready = done[static_cast<std::size_t>(j - 1)];  // own previous jump
      else if (j == 0)
        ready = done[0];  // particle ahead vacated the target
      else
        ready = std::max(done[static_cast<std::size_t>(j)],
                         done[static_cast<std::size_t>(j - 1)]);
      done[static_cast<std::size_t>(j)] = w.at(i, j) + ready;
    }
  }

  return {done[static_cast<std::size_t>(n)], passage_time_value(w)};
}

}  // namespace lpplab
