#ifndef DYNLABEL_CHAIN_SOLVER_HPP
#define DYNLABEL_CHAIN_SOLVER_HPP

#include <optional>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/interval_index.hpp"

namespace dynlabel {

// Exact dynamic maximum independent set of open intervals on one line.
//
// The maintained chain always equals the from-scratch earliest-deadline
// greedy: scan by (hi, id), select whenever lo >= hi of the last selected.
// That greedy is optimal on interval graphs, so omega() is the exact Max-IS
// size at all times.  Updates repair the chain locally: an insertion can
// only change the chain from the new interval onward, a deletion only from
// the deleted member's predecessor onward, and the repair walks the new
// suffix one min-right query per selected member until it rejoins the old
// chain.  Cost O((omega'+1) log n) where omega' is the post-update chain
// length; the query count is asserted against that bound on every update.
class ChainSolver {
 public:
  void insert(const Interval& iv);  // DuplicateIdError on known id
  void erase(Id id);                // UnknownIdError on unknown id

  bool contains(Id id) const { return all_.contains(id); }
  bool selected(Id id) const { return sel_.contains(id); }
  std::optional<Interval> get(Id id) const { return all_.get(id); }

  std::size_t size() const { return all_.size(); }
  std::size_t omega() const { return sel_.size(); }
  bool empty() const { return all_.empty(); }

  std::vector<Interval> chain() const { return sel_.collect(); }  // selection order
  std::vector<Interval> collect() const { return all_.collect(); }

  // min-right queries issued by the most recent update (<= omega()+1).
  std::size_t last_queries() const { return last_queries_; }

  // Test hook: recomputes the greedy chain from scratch and compares;
  // throws InvariantError on any deviation.
  void check_chain() const;

 private:
  LeftTree all_;
  SolutionTree sel_;
  std::size_t last_queries_ = 0;

  void repair_from(std::optional<Interval> cur);
};

}  // namespace dynlabel

#endif
