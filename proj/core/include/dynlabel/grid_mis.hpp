#ifndef DYNLABEL_GRID_MIS_HPP
#define DYNLABEL_GRID_MIS_HPP

#include <cstdint>
#include <list>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// Storage choice for the activity grid.  Buckets in a hash map keep memory
// O(live squares) with expected-O(1) updates; the dense flag switches to a
// flat kappa x kappa array (true worst-case O(1) cell access) for small
// frames where kappa^2 cells are affordable.
struct GridOptions {
  bool dense = false;
};

// 4-approximate dynamic maximum independent set of unit squares, O(1) update.
//
// Every square covers exactly one grid point (half-open rule).  Squares on
// the same point pairwise intersect, so one representative per active point
// is the most any solution takes from a point; points two apart in row or
// column index can never conflict.  Per row, the active odd columns and the
// active even columns each form an independent family -- keep the larger
// count.  Across rows the same parity split applies, leaving the larger of
// the even-row and odd-row totals: each halving costs a factor 2, hence 4.
// All of it is tracked by counters touched a constant number of times per
// update; only solution() walks the winning buckets.
class GridMis {
 public:
  GridMis(Coord scale, std::int64_t kappa, GridOptions opt = {});
  GridMis(const std::vector<Square>& squares, Coord scale, std::int64_t kappa,
          GridOptions opt = {});

  SizeReport insert(const Square& s);  // DuplicateIdError, OutOfFrameError
  SizeReport erase(Id id);             // UnknownIdError

  bool contains(Id id) const { return where_.count(id) != 0; }
  std::size_t size() const { return where_.size(); }
  std::int64_t kappa() const { return kappa_; }

  std::size_t solution_size() const { return even_total_ >= odd_total_ ? even_total_ : odd_total_; }
  std::vector<Id> solution() const;  // representatives of the winning parities, sorted by id

  // Counter mutations (parity counts, row maxima, parity totals) made by the
  // most recent update; constant by construction, never a function of kappa.
  std::size_t last_counter_touches() const { return touches_; }

  // Test hook: rebuilds every ledger from the buckets and compares.
  void check_invariants() const;

 private:
  struct Bucket {
    std::list<Id> order;  // oldest first; front is the representative
  };
  struct Loc {
    std::int64_t u = 0, v = 0;
    std::list<Id>::iterator it;
  };
  struct Row {
    std::set<std::int64_t> odd_cols, even_cols;  // active columns by parity
    std::size_t c = 0;                           // max(p, q), cached
  };
  struct CellHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
      std::uint64_t h = static_cast<std::uint64_t>(k.first) * 0x9E3779B97F4A7C15ull;
      h ^= static_cast<std::uint64_t>(k.second) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  Coord scale_;
  std::int64_t kappa_;
  bool dense_;
  std::vector<Bucket> flat_;  // dense mode: kappa^2 cells, index u*kappa+v
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, Bucket, CellHash> sparse_;
  std::unordered_map<Id, Loc> where_;
  std::unordered_map<std::int64_t, Row> rows_;
  std::size_t even_total_ = 0, odd_total_ = 0;  // winning-column sums per row parity
  std::size_t touches_ = 0;

  Bucket& bucket(std::int64_t u, std::int64_t v);
  const Bucket* peek(std::int64_t u, std::int64_t v) const;
  void drop_if_empty(std::int64_t u, std::int64_t v);
  void activate(std::int64_t u, std::int64_t v);
  void deactivate(std::int64_t u, std::int64_t v);
  void reledger(std::int64_t u, Row& row);
};

}  // namespace dynlabel

#endif
