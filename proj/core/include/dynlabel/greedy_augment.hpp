#ifndef DYNLABEL_GREEDY_AUGMENT_HPP
#define DYNLABEL_GREEDY_AUGMENT_HPP

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"
#include "dynlabel/range_index.hpp"

namespace dynlabel {

// Greedy augmentation wrapper: keeps a base approximate solver's solution and
// tops it up with "extras" — stored shapes the base discarded that are
// independent of everything currently reported.  The output is always the
// base solution plus the extras, so it inherits the base's size guarantee.
//
// After every update the wrapper diffs the base solution, evicts extras that
// now conflict, and greedily (ascending id) retries shapes whose center lies
// within Chebyshev distance 2S of the event shape or of any base-solution
// change.  That radius covers every shape whose conflict neighborhood a local
// change can reach, but the base may churn far from the event (the per-line
// solver reshuffles whole chains), so local repair is a heuristic only:
// maximality is restored on demand by full_remaximalize().
template <class Base>
class Augmented {
 public:
  static constexpr bool kRectBase = requires(Base& b, const Rect& r) { b.insert(r); };

  template <class... Args>
  explicit Augmented(Coord scale, Args&&... args)
      : scale_(scale), base_(scale, std::forward<Args>(args)...) {}

  SizeReport insert(const Square& s) { return insert(as_rect(s, scale_)); }

  SizeReport insert(const Rect& r) {
    std::vector<Id> before = base_.solution();
    if constexpr (kRectBase) {
      base_.insert(r);
    } else {
      if (r.w != scale_) throw Error("augmented base handles unit squares only");
      base_.insert(Square{r.id, r.x, r.y});
    }
    stored_.emplace(r.id, r);
    cand_index_.insert(r.id, r.x, r.y);
    widths_.insert(r.w);
    repair(r, delta(before, base_.solution()));
    return SizeReport{solution_size()};
  }

  SizeReport erase(Id id) {
    auto it = stored_.find(id);
    if (it == stored_.end()) throw UnknownIdError("erase: unknown id");
    const Rect gone = it->second;
    std::vector<Id> before = base_.solution();
    base_.erase(id);
    widths_.erase(widths_.find(gone.w));
    cand_index_.erase(id);
    if (extras_.erase(id) != 0) sol_index_.erase(id);
    stored_.erase(it);
    repair(gone, delta(before, base_.solution()));
    return SizeReport{solution_size()};
  }

  // Drops all extras and regrows them by one global greedy pass (ascending
  // id) over the discarded shapes; afterwards the output is maximal.
  SizeReport full_remaximalize() {
    for (Id id : extras_) sol_index_.erase(id);
    extras_.clear();
    for (const auto& [id, r] : stored_) {
      if (sol_index_.contains(id)) continue;  // base member
      if (!independent_of_members(r)) continue;
      extras_.insert(id);
      sol_index_.insert(id, r.x, r.y);
    }
    return SizeReport{solution_size()};
  }

  bool contains(Id id) const { return stored_.count(id) != 0; }
  bool in_solution(Id id) const { return sol_index_.contains(id); }
  std::size_t size() const { return stored_.size(); }
  std::size_t solution_size() const { return base_.solution_size() + extras_.size(); }

  std::vector<Id> solution() const {
    std::vector<Id> base_sol = base_.solution();
    std::vector<Id> out;
    out.reserve(base_sol.size() + extras_.size());
    std::merge(base_sol.begin(), base_sol.end(), extras_.begin(), extras_.end(),
               std::back_inserter(out));
    return out;
  }

  std::vector<Id> extras() const { return std::vector<Id>(extras_.begin(), extras_.end()); }
  const Base& base() const { return base_; }
  Coord scale() const { return scale_; }

  // Test hook: extras disjoint from and independent of the base solution,
  // output pairwise independent, both indexes consistent with the id maps.
  void check_invariants() const {
    base_.check_invariants();
    cand_index_.check_structure();
    sol_index_.check_structure();
    if (cand_index_.size() != stored_.size() || widths_.size() != stored_.size())
      throw InvariantError("augment: candidate index out of step with the stored shapes");
    std::vector<Id> base_sol = base_.solution();
    for (Id id : extras_) {
      if (std::binary_search(base_sol.begin(), base_sol.end(), id))
        throw InvariantError("augment: extra also reported by the base");
      if (stored_.count(id) == 0) throw InvariantError("augment: extra not stored");
    }
    if (sol_index_.size() != base_sol.size() + extras_.size())
      throw InvariantError("augment: solution index size mismatch");
    std::vector<Id> out = solution();
    for (Id id : out)
      if (!sol_index_.contains(id) || cand_index_.get(id)->x != stored_.at(id).x)
        throw InvariantError("augment: solution member missing from an index");
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (intersects_rect(stored_.at(out[i]), stored_.at(out[j]), scale_))
          throw InvariantError("augment: output not independent");
  }

 private:
  static Diff delta(const std::vector<Id>& before, const std::vector<Id>& after) {
    Diff d;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(d.added));
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(d.removed));
    return d;
  }

  // Open box cover of the closed conflict range of r against any member:
  // |dy| < S exactly; x overshoots to the widest stored shape and the caller
  // re-checks hits with the exact predicate.
  Box conflict_box(const Rect& r) const {
    Coord wmax = widths_.empty() ? scale_ : *widths_.rbegin();
    Coord hx = (r.w + wmax) / 2 + 1;
    return Box{r.x - hx, r.x + hx, r.y - scale_, r.y + scale_};
  }

  bool independent_of_members(const Rect& r) const {
    for (const RangeIndex::Point& p : sol_index_.report(conflict_box(r)))
      if (p.id != r.id && intersects_rect(r, stored_.at(p.id), scale_)) return false;
    return true;
  }

  void repair(const Rect& event, const Diff& diff) {
    // Mirror the base churn into the member index.  A newly reported id that
    // was an extra just graduates: its index entry is already there.
    for (Id id : diff.removed) sol_index_.erase(id);
    for (Id id : diff.added) {
      if (extras_.erase(id) != 0) continue;
      const Rect& r = stored_.at(id);
      sol_index_.insert(id, r.x, r.y);
    }
    // Extras must stay independent of the new base members.
    for (Id id : diff.added) {
      const Rect& a = stored_.at(id);
      for (const RangeIndex::Point& p : sol_index_.report(conflict_box(a))) {
        if (p.id == id || extras_.count(p.id) == 0) continue;
        if (!intersects_rect(a, stored_.at(p.id), scale_)) continue;
        extras_.erase(p.id);
        sol_index_.erase(p.id);
      }
    }
    // Retry every stored shape within the repair radius of a change.
    std::vector<Id> cands;
    auto gather = [&](Coord cx, Coord cy) {
      Coord rad = 2 * scale_ + 1;  // open box => closed Chebyshev-2S ball
      for (const RangeIndex::Point& p :
           cand_index_.report(Box{cx - rad, cx + rad, cy - rad, cy + rad}))
        cands.push_back(p.id);
    };
    gather(event.x, event.y);
    for (Id id : diff.added) gather(stored_.at(id).x, stored_.at(id).y);
    for (Id id : diff.removed)
      if (auto it = stored_.find(id); it != stored_.end()) gather(it->second.x, it->second.y);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (Id id : cands) {
      if (sol_index_.contains(id)) continue;
      const Rect& q = stored_.at(id);
      if (!independent_of_members(q)) continue;
      extras_.insert(id);
      sol_index_.insert(id, q.x, q.y);
    }
  }

  Coord scale_;
  Base base_;
  std::map<Id, Rect> stored_;    // ordered so the global greedy pass is by id
  std::set<Id> extras_;          // disjoint from the base solution
  RangeIndex cand_index_;        // all stored centers
  RangeIndex sol_index_;         // base solution + extras
  std::multiset<Coord> widths_;  // widest stored shape bounds the probe boxes
};

}  // namespace dynlabel

#endif
