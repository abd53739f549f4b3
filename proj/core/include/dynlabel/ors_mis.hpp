#ifndef DYNLABEL_ORS_MIS_HPP
#define DYNLABEL_ORS_MIS_HPP

#include <set>
#include <unordered_map>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"
#include "dynlabel/range_index.hpp"

namespace dynlabel {

// Structural counters from the most recent update; each is bounded by a
// constant the update procedures guarantee (and assert).
struct OrsStats {
  std::size_t probe_hits = 0;  // insert: solution centers found in the 2S box (<= 4)
  std::size_t qx = 0;          // delete: solution centers found in the 4S box (<= 12)
  std::size_t corners = 0;     // delete: corners of the repair polygon (<= 28)
  std::size_t additions = 0;   // delete: members added by the repair (<= 4)
};

// Dynamic maximal independent set of unit squares via two center indexes.
//
// Two squares intersect iff either center lies in the open 2S-box around the
// other, so independence and maximality are point-location questions on the
// center sets.  `all` indexes every stored center, `sol` only the selected
// ones.  An insert probes `sol` with the newcomer's 2S box: empty means the
// square joins (at most 4 selected centers can ever fit such a box).  A
// member's deletion frees the part of its 2S box not covered by the 2S boxes
// of nearby members (all found in the 4S box, at most 12): that rectilinear
// polygon (at most 28 corners) is cut into vertical slabs, each slab asks
// `all` for a witness center, and every witness joins the solution and its
// box is subtracted until the polygon is exhausted -- at most 4 joiners fit.
// The solution is maximal again, without ever scanning the full set.
class OrsMis {
 public:
  explicit OrsMis(Coord scale) : scale_(scale) {}
  OrsMis(const std::vector<Square>& squares, Coord scale);  // greedy in ascending id

  Diff insert(const Square& s);  // DuplicateIdError on known id
  Diff erase(Id id);             // UnknownIdError on unknown id

  bool contains(Id id) const { return squares_.count(id) != 0; }
  bool in_solution(Id id) const { return members_.count(id) != 0; }
  std::size_t size() const { return squares_.size(); }
  std::size_t solution_size() const { return members_.size(); }
  std::vector<Id> solution() const { return std::vector<Id>(members_.begin(), members_.end()); }
  Coord scale() const { return scale_; }

  const OrsStats& last_stats() const { return stats_; }

  // Test hook: brute-force independence + maximality, index consistency.
  void check_invariants() const;

 private:
  Coord scale_;
  RangeIndex all_, sol_;
  std::unordered_map<Id, Square> squares_;
  std::set<Id> members_;
  OrsStats stats_;
};

}  // namespace dynlabel

#endif
