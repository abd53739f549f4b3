#ifndef DYNLABEL_INTERVAL_INDEX_HPP
#define DYNLABEL_INTERVAL_INDEX_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"

namespace dynlabel {

// Open interval (lo, hi) on a line, lo < hi.  Coordinates may be doubled
// upstream so that half-integer endpoints stay integral.
struct Interval {
  Id id = 0;
  Coord lo = 0;
  Coord hi = 0;
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

// Balanced search tree over intervals keyed by (lo, id).  Every node carries
// the minimum (hi, id) of its subtree, which turns "leftmost right endpoint
// among intervals starting right of p" into one root-to-leaf descent.
class LeftTree {
 public:
  struct Node;  // nameable by the implementation's file-local helpers

  LeftTree() = default;
  ~LeftTree();
  LeftTree(const LeftTree&) = delete;
  LeftTree& operator=(const LeftTree&) = delete;
  LeftTree(LeftTree&& other) noexcept;
  LeftTree& operator=(LeftTree&& other) noexcept;

  void insert(const Interval& iv);           // DuplicateIdError on known id
  void erase(Id id);                         // UnknownIdError on unknown id
  bool contains(Id id) const { return by_id_.count(id) != 0; }
  std::optional<Interval> get(Id id) const;

  // Minimizer of (hi, id) among intervals with lo > p; nullopt if none.
  std::optional<Interval> min_right_after(Coord p) const;
  // Same with lo >= p (exact for integer coordinates).
  std::optional<Interval> min_right_from(Coord p) const { return min_right_after(p - 1); }

  std::size_t size() const { return by_id_.size(); }
  bool empty() const { return by_id_.empty(); }
  std::vector<Interval> collect() const;  // in (lo, id) order
  void clear();

  // Test hook: walks the whole tree checking BST order, AVL balance and the
  // min-(hi, id) decoration; throws InvariantError on any mismatch.
  void check_structure() const;

 private:
  Node* root_ = nullptr;
  std::unordered_map<Id, Interval> by_id_;

  static Node* insert_rec(Node* n, const Interval& iv);
  static Node* erase_rec(Node* n, Coord lo, Id id);
  static void destroy(Node* n);
};

// Result of probing the selected set with a candidate interval (lo, hi).
struct GapProbe {
  std::optional<Interval> pred;  // selected interval with greatest hi < lo
  std::optional<Interval> succ;  // selected interval with least hi > hi
  bool same_gap = false;         // no selected right endpoint inside (lo, hi]
};

// Ordered set of currently selected intervals keyed by (hi, id).
class SolutionTree {
 public:
  void insert(const Interval& iv);  // DuplicateIdError on known id
  void erase(Id id);                // UnknownIdError on unknown id
  bool contains(Id id) const { return by_id_.count(id) != 0; }

  GapProbe gap_of(Coord lo, Coord hi) const;

  // Neighbours in (hi, id) key order around an arbitrary (hi, id) position.
  std::optional<Interval> pred_of(Coord hi, Id id) const;
  std::optional<Interval> succ_of(Coord hi, Id id) const;
  std::optional<Interval> first() const;

  std::size_t size() const { return by_key_.size(); }
  bool empty() const { return by_key_.empty(); }
  std::vector<Interval> collect() const;  // in (hi, id) order
  void clear();

 private:
  using Key = std::pair<Coord, Id>;
  std::map<Key, Interval> by_key_;
  std::unordered_map<Id, Coord> by_id_;  // id -> hi (to rebuild the key)
};

}  // namespace dynlabel

#endif
