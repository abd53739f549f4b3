#include "dynlabel/chain_solver.hpp"

#include <utility>

#include "dynlabel/oracle.hpp"

namespace dynlabel {

namespace {

// Below every doubled coordinate the library can see (|2c| < 2^41).
constexpr Coord kBeforeAll = -(Coord{1} << 42);

std::pair<Coord, Id> key(const Interval& iv) { return {iv.hi, iv.id}; }

}  // namespace

void ChainSolver::insert(const Interval& iv) {
  all_.insert(iv);
  last_queries_ = 0;

  // Greedy processes keys in (hi, id) order; decisions at smaller keys are
  // unaffected by the newcomer, so the chain prefix strictly before iv's key
  // stands.  iv joins iff it clears the last selected interval before it.
  std::optional<Interval> pred = sel_.pred_of(iv.hi, iv.id);
  if (pred && pred->hi > iv.lo) return;  // blocked: the chain is unchanged
  sel_.insert(iv);
  repair_from(iv);
}

void ChainSolver::erase(Id id) {
  std::optional<Interval> iv = all_.get(id);
  if (!iv) throw UnknownIdError("erase: unknown id");
  last_queries_ = 0;

  if (!sel_.contains(id)) {
    // An unselected interval is invisible to the greedy: it was rejected at
    // its key position and that rejection removed nothing after it.
    all_.erase(id);
    return;
  }
  std::optional<Interval> pred = sel_.pred_of(iv->hi, iv->id);
  sel_.erase(id);
  all_.erase(id);
  repair_from(pred);
}

// Re-derives the selected chain strictly after `cur` (whole line when empty)
// until it rejoins the old chain or the line ends.
void ChainSolver::repair_from(std::optional<Interval> cur) {
  std::size_t queries = 0;
  for (;;) {
    std::optional<Interval> next_sel =
        cur ? sel_.succ_of(cur->hi, cur->id) : sel_.first();
    std::optional<Interval> derived =
        cur ? all_.min_right_from(cur->hi) : all_.min_right_after(kBeforeAll);
    ++queries;

    // Old members keyed before the derived pick are no longer reachable.
    while (next_sel && (!derived || key(*next_sel) < key(*derived))) {
      sel_.erase(next_sel->id);
      next_sel = cur ? sel_.succ_of(cur->hi, cur->id) : sel_.first();
    }
    if (!derived) break;
    // Old and new chains agree from the derived pick on: the continuation
    // past a common member depends only on intervals with larger keys, which
    // this update did not disturb.
    if (next_sel && *next_sel == *derived) break;
    sel_.insert(*derived);
    cur = *derived;
  }
  last_queries_ = queries;
  if (queries > sel_.size() + 1)
    throw InvariantError("chain repair exceeded its omega+1 query bound");
}

void ChainSolver::check_chain() const {
  std::vector<Interval> expect = greedy_interval_chain(all_.collect());
  std::vector<Interval> got = sel_.collect();
  if (expect != got) throw InvariantError("maintained chain deviates from from-scratch greedy");
  all_.check_structure();
}

}  // namespace dynlabel
