#ifndef DYNLABEL_LINE_MIS_HPP
#define DYNLABEL_LINE_MIS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynlabel/chain_solver.hpp"
#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// 2-approximate dynamic maximum independent set of unit-height rectangles.
//
// Every rectangle is stabbed by exactly one horizontal grid line (half-open
// row rule), so the instance splits into per-line interval problems, each
// solved exactly by a ChainSolver on the doubled x-spans.  Rectangles on
// lines two apart can never meet vertically, hence all even-line chains
// together are independent, as are all odd-line chains; the larger of the
// two unions is kept as the solution, and by pigeonhole it holds at least
// half of any independent set.  One update touches exactly one line.
class LineMis {
 public:
  explicit LineMis(Coord scale) : scale_(scale) {}
  LineMis(const std::vector<Rect>& rects, Coord scale);

  SizeReport insert(const Rect& r);  // DuplicateIdError on known id
  SizeReport erase(Id id);           // UnknownIdError on unknown id

  bool contains(Id id) const { return where_.count(id) != 0; }
  std::size_t size() const { return where_.size(); }

  // max(sum of even-line chain sizes, sum of odd-line chain sizes), O(1).
  std::size_t solution_size() const { return even_total_ >= odd_total_ ? even_total_ : odd_total_; }
  std::vector<Id> solution() const;  // winning-parity chains, sorted by id

  // Exact Max-IS size over any single line (max chain length), O(1).
  std::size_t omega() const { return omegas_.empty() ? 0 : *omegas_.rbegin(); }

  // min-right queries issued by the most recent update on its line.
  std::size_t last_queries() const { return last_queries_; }

  const ChainSolver* line(std::int64_t j) const;  // nullptr if the line is empty

  // Test hook: per-line greedy equivalence plus aggregate consistency.
  void check_invariants() const;

 private:
  Coord scale_;
  std::map<std::int64_t, ChainSolver> lines_;
  std::unordered_map<Id, std::pair<std::int64_t, Rect>> where_;
  std::size_t even_total_ = 0, odd_total_ = 0;
  std::multiset<std::size_t> omegas_;  // one entry per nonempty line
  std::size_t last_queries_ = 0;

  void apply_delta(std::int64_t j, std::size_t before, std::size_t after);
};

}  // namespace dynlabel

#endif
