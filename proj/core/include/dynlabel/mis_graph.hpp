#ifndef DYNLABEL_MIS_GRAPH_HPP
#define DYNLABEL_MIS_GRAPH_HPP

#include <set>
#include <unordered_map>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// Baseline dynamic maximal independent set over unit squares.  The
// intersection graph is materialized explicitly: every vertex stores its
// neighbor list and a counter of how many neighbors currently sit in the
// solution.  A vertex is in the solution iff its counter is zero, so
// maximality is a local property.  Neighbor discovery is a deliberate O(n)
// scan -- this structure exists to be the index-free reference point the
// geometric solvers are compared against.
class GraphMis {
 public:
  explicit GraphMis(Coord scale) : scale_(scale) {}

  // Greedy build in ascending-id order; equivalent to inserting one by one.
  GraphMis(const std::vector<Square>& squares, Coord scale);

  Diff insert(const Square& s);  // DuplicateIdError on known id
  Diff erase(Id id);             // UnknownIdError on unknown id

  bool contains(Id id) const { return verts_.count(id) != 0; }
  bool in_solution(Id id) const;
  std::size_t size() const { return verts_.size(); }
  std::size_t solution_size() const { return members_.size(); }
  std::vector<Id> solution() const { return std::vector<Id>(members_.begin(), members_.end()); }
  Coord scale() const { return scale_; }

  // Test hook: recomputes every counter and the edge set from scratch and
  // checks independence + maximality; throws InvariantError on mismatch.
  void check_invariants() const;

 private:
  struct Vertex {
    Square sq;
    std::vector<Id> nbrs;      // ids of intersecting squares, unordered
    std::size_t counter = 0;   // |N(v) ∩ members|
    bool member = false;
  };

  Coord scale_;
  std::unordered_map<Id, Vertex> verts_;
  std::set<Id> members_;  // ordered: solution snapshots and promotions are deterministic
};

}  // namespace dynlabel

#endif
