// Copyright 2026 The dmlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <optional>
#include <vector>

#include "dmlab/errors.hpp"
#include "dmlab/rng.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

namespace {

struct Move {
  Label a = 0;
  Label b = 0;
  Label delta = 0;
};

// Mutable owner/sum view of a partition. Partition values stay immutable;
// the descent works here and materializes a Partition only for the result.
class Workspace {
 public:
  Workspace(const Partition& p, Label s)
      : n_(p.n()), s_(s), owner_(static_cast<std::size_t>(p.n())), sums_(p.sums()) {
    for (Label x = 1; x <= n_; ++x) owner_[idx(x)] = p.block_of(x);
  }

  Label deviation() const {
    Label d = 0;
    for (Label sum : sums_) d += (sum - s_) * (sum - s_);
    return d;
  }

  Width width() const {
    std::optional<Label> last_low;
    std::optional<Label> best;
    for (Label x = 1; x <= n_; ++x) {
      const Label sum = sums_[owner_[idx(x)]];
      if (sum < s_) {
        last_low = x;
      } else if (sum > s_ && last_low && (!best || x - *last_low < *best)) {
        best = x - *last_low;
      }
    }
    return best ? Width::finite(*best) : Width::infinite();
  }

  // Most negative 2t(t - u) over all a < b in different blocks; the scan
  // order makes the first strict minimum the lexicographically smallest.
  std::optional<Move> best_improving() const {
    std::optional<Move> best;
    for (Label a = 1; a < n_; ++a) {
      const std::size_t ia = owner_[idx(a)];
      for (Label b = a + 1; b <= n_; ++b) {
        const std::size_t ib = owner_[idx(b)];
        if (ia == ib) continue;
        const Label t = b - a;
        const Label u = sums_[ib] - sums_[ia];
        if (t >= u) continue;
        const Label delta = 2 * t * (t - u);
        if (!best || delta < best->delta) best = Move{a, b, delta};
      }
    }
    return best;
  }

  // All exchanges with b - a equal to the sum gap, i.e. delta = 0.
  std::vector<Move> zero_moves() const {
    std::vector<Move> moves;
    for (Label a = 1; a < n_; ++a) {
      const std::size_t ia = owner_[idx(a)];
      for (std::size_t j = 0; j < sums_.size(); ++j) {
        const Label u = sums_[j] - sums_[ia];
        if (j == ia || u <= 0 || a + u > n_) continue;
        if (owner_[idx(a + u)] == j) moves.push_back(Move{a, a + u, 0});
      }
    }
    std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return moves;
  }

  void apply(Label a, Label b) {
    const std::size_t ia = owner_[idx(a)];
    const std::size_t ib = owner_[idx(b)];
    sums_[ia] += b - a;
    sums_[ib] -= b - a;
    owner_[idx(a)] = ib;
    owner_[idx(b)] = ia;
  }

  Partition materialize() const {
    std::vector<std::vector<Label>> blocks(sums_.size());
    for (Label x = 1; x <= n_; ++x) blocks[owner_[idx(x)]].push_back(x);
    return Partition::from_blocks(n_, std::move(blocks));
  }

 private:
  static std::size_t idx(Label x) { return static_cast<std::size_t>(x - 1); }

  Label n_;
  Label s_;
  std::vector<std::size_t> owner_;
  std::vector<Label> sums_;
};

// greedy_init output reordered so that slot i has the size of start's slot i.
Partition restart_point(const Partition& start, std::uint64_t seed) {
  const auto slot_sizes = start.block_sizes();
  const Instance inst(start.n(), slot_sizes);
  const Partition fresh = greedy_init(inst, seed);

  std::vector<std::vector<Label>> blocks(slot_sizes.size());
  std::vector<bool> used(slot_sizes.size(), false);
  for (std::size_t slot = 0; slot < slot_sizes.size(); ++slot) {
    for (std::size_t i = 0; i < fresh.k(); ++i) {
      if (!used[i] && static_cast<Label>(fresh.block(i).size()) == slot_sizes[slot]) {
        used[i] = true;
        blocks[slot].assign(fresh.block(i).begin(), fresh.block(i).end());
        break;
      }
    }
  }
  return Partition::from_blocks(start.n(), std::move(blocks));
}

}  // namespace

void SearchParams::validate() const {
  if (max_restarts < 0 || exact_node_budget < 0 || exact_cutoff_n < 0 ||
      (max_plateau_steps && *max_plateau_steps < 0)) {
    throw InvalidInputError("search parameters must be non-negative");
  }
}

LocalSearchResult local_search_run(const Partition& start, Label s,
                                   const SearchParams& params,
                                   const LocalSearchObserver& observer) {
  params.validate();
  const std::int64_t plateau_cap = params.plateau_steps_for(start.n());
  auto notify = [&](LocalSearchEvent::Kind kind, Label a, Label b, Label delta,
                    Label d) {
    if (observer) observer(LocalSearchEvent{kind, a, b, delta, d});
  };

  LocalSearchResult result{start, 0, Width::infinite(), {}};
  {
    Workspace w(start, s);
    result.best_deviation = w.deviation();
    result.best_width = w.width();
  }

  for (std::int64_t round = 0; round <= params.max_restarts; ++round) {
    if (result.best_deviation == 0) break;
    const std::uint64_t round_seed = params.seed + static_cast<std::uint64_t>(round);
    Workspace w(round == 0 ? start : restart_point(start, round_seed), s);
    Label d = w.deviation();
    if (round > 0) {
      ++result.stats.restarts;
      notify(LocalSearchEvent::Kind::kRestart, 0, 0, 0, d);
    }
    XorShift64Star rng(round_seed);
    std::int64_t plateau_used = 0;

    auto record_if_better = [&] {
      if (d > result.best_deviation) return;
      const Width wd = w.width();
      if (d < result.best_deviation || wd < result.best_width) {
        result.best = w.materialize();
        result.best_deviation = d;
        result.best_width = wd;
      }
    };
    record_if_better();

    while (d > 0) {
      if (auto move = w.best_improving()) {
        w.apply(move->a, move->b);
        d += move->delta;
        ++result.stats.improving_swaps;
        notify(LocalSearchEvent::Kind::kImprove, move->a, move->b, move->delta, d);
        record_if_better();
        continue;
      }
      if (plateau_used >= plateau_cap) break;
      const auto moves = w.zero_moves();
      if (moves.empty()) break;

      // Prefer the exchange leaving the smallest width, if it is smaller
      // than the current one; otherwise wander.
      const Width current = w.width();
      std::optional<Move> chosen;
      Width chosen_width = current;
      for (const Move& m : moves) {
        w.apply(m.a, m.b);
        const Width after = w.width();
        w.apply(m.a, m.b);
        if (after < chosen_width) {
          chosen = m;
          chosen_width = after;
        }
      }
      if (!chosen) chosen = moves[rng.below(moves.size())];

      w.apply(chosen->a, chosen->b);
      ++plateau_used;
      ++result.stats.plateau_swaps;
      notify(LocalSearchEvent::Kind::kPlateau, chosen->a, chosen->b, 0, d);
      record_if_better();
    }
  }
  return result;
}

Partition local_search(const Partition& start, Label s, const SearchParams& params) {
  return local_search_run(start, s, params).best;
}

}  // namespace dmlab
