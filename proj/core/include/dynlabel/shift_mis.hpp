#ifndef DYNLABEL_SHIFT_MIS_HPP
#define DYNLABEL_SHIFT_MIS_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "dynlabel/chain_solver.hpp"
#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// 2(1+1/k)-approximate dynamic maximum independent set of unit squares.
//
// Squares project per stabbing line to unit intervals.  On each line, k+1
// shifted groups are kept: group alpha discards the squares whose grid
// column is congruent to alpha (mod k+1), which cuts the line into runs of
// k consecutive surviving columns.  Each run (subgroup) is an independent
// interval problem whose Max-IS has at most k members, solved exactly by a
// ChainSolver; subgroups of one group never interact, so the group solution
// is their disjoint union.  Every line keeps the best of its k+1 groups,
// and the even/odd line pigeonhole from the grid algorithm picks the final
// family.  An update touches exactly k groups (one subgroup each), costing
// O(k^2 log n).
//
// Unit intervals make greedy-by-left-endpoint and greedy-by-right-endpoint
// identical (lo = hi - S doubles to a fixed offset), so the shared
// earliest-deadline ChainSolver is exactly the paper-facing left-to-right
// scan.
class ShiftMis {
 public:
  ShiftMis(Coord scale, std::int64_t kappa, int k);
  ShiftMis(const std::vector<Square>& squares, Coord scale, std::int64_t kappa, int k);

  SizeReport insert(const Square& s);  // DuplicateIdError, OutOfFrameError
  SizeReport erase(Id id);             // UnknownIdError

  bool contains(Id id) const { return where_.count(id) != 0; }
  std::size_t size() const { return where_.size(); }
  std::int64_t kappa() const { return kappa_; }
  int k() const { return k_; }

  std::size_t solution_size() const { return even_total_ >= odd_total_ ? even_total_ : odd_total_; }
  std::vector<Id> solution() const;  // winning parity, best group per line, sorted by id

  std::size_t last_groups_touched() const { return touched_; }

  // Test hook: every subgroup chain against from-scratch greedy, plus all
  // ledgers against recomputation.
  void check_invariants() const;

 private:
  struct Line {
    // groups[alpha-1]: subgroup index -> exact solver for that run of columns.
    std::vector<std::map<std::int64_t, ChainSolver>> groups;
    std::vector<std::size_t> msize;  // |M^alpha|: sum of subgroup chain sizes
    std::size_t c = 0;               // max over alpha, cached
  };

  Coord scale_;
  std::int64_t kappa_;
  int k_;
  std::unordered_map<std::int64_t, Line> lines_;
  std::unordered_map<Id, std::pair<GridPoint, Interval>> where_;
  std::size_t even_total_ = 0, odd_total_ = 0;
  std::size_t touched_ = 0;

  // Group alpha (1-based) discards column v iff v = alpha (mod k+1).
  bool discarded(std::int64_t v, int alpha) const {
    return v % (k_ + 1) == alpha % (k_ + 1);
  }
  std::int64_t subgroup_of(std::int64_t v, int alpha) const {
    return floor_div(v - alpha - 1, k_ + 1);
  }
  void reledger(std::int64_t u, Line& line);
};

}  // namespace dynlabel

#endif
