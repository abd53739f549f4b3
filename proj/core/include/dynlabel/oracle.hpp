#ifndef DYNLABEL_ORACLE_HPP
#define DYNLABEL_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/geometry.hpp"
#include "dynlabel/interval_index.hpp"

namespace dynlabel {

// Outcome of checking a claimed solution against the stored set.
struct IsCheck {
  bool independent = false;
  bool maximal = false;
  std::string reason;  // first violation, empty when ok()
  bool ok() const { return independent && maximal; }
};

// Checks that `solution` (ids into `stored`) is pairwise non-intersecting and
// that no stored shape outside it is independent of all of it.
IsCheck verify_is(const std::vector<Rect>& stored, const std::vector<Id>& solution, Coord scale);

// Earliest-deadline greedy chain: scan by (hi, id), select whenever
// lo >= last selected hi.  Exact on interval graphs; returned in selection
// order, which the chain-equivalence oracles compare against.
std::vector<Interval> greedy_interval_chain(std::vector<Interval> items);

struct ExactResult {
  std::size_t size = 0;
  std::vector<Id> members;            // sorted by id
  std::uint64_t nodes_explored = 0;   // branch-and-bound search nodes
};

// Exact maximum independent set of an interval graph via the greedy chain.
ExactResult exact_interval_mis(std::vector<Interval> items);

struct ExactOptions {
  std::size_t cap = 300;            // CapExceededError beyond this many items
  std::vector<Id> hint;             // optional known independent set to seed the incumbent
  std::uint64_t node_budget = 0;    // abort the search past this many nodes (0 = unlimited)
};

// Exact maximum independent set of unit-height rectangles (squares included)
// via branch and bound: cascading degree-0/1 and domination reductions,
// connected-component decomposition, greedy clique-cover upper bounds in
// stabbing-line order, and max-degree branching.  Deterministic.
ExactResult exact_max_is(const std::vector<Rect>& items, Coord scale, const ExactOptions& opt = {});

}  // namespace dynlabel

#endif
