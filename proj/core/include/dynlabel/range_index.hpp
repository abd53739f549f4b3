#ifndef DYNLABEL_RANGE_INDEX_HPP
#define DYNLABEL_RANGE_INDEX_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// Fully dynamic 2D point index over shape centers.  Two-level range tree:
// a weight-balanced primary tree keyed by (x, id) rebuilt scapegoat-style,
// where every node carries the (y, id)-ordered set of the live points in its
// subtree.  Deletions are lazy in the primary tree (dead nodes stay until a
// rebuild) but eager in the secondaries, so query answers never see them.
// Updates cost O(log^2 n) amortized, box queries O(log^2 n + k).
class RangeIndex {
 public:
  struct Node;  // nameable by the implementation's file-local helpers

  struct Point {
    Id id = 0;
    Coord x = 0;
    Coord y = 0;
  };

  RangeIndex() = default;
  ~RangeIndex();
  RangeIndex(const RangeIndex&) = delete;
  RangeIndex& operator=(const RangeIndex&) = delete;
  RangeIndex(RangeIndex&& other) noexcept;
  RangeIndex& operator=(RangeIndex&& other) noexcept;

  void insert(Id id, Coord x, Coord y);  // DuplicateIdError on known id
  void erase(Id id);                     // UnknownIdError on unknown id
  bool contains(Id id) const { return points_.count(id) != 0; }
  std::optional<Point> get(Id id) const;

  // Some live point strictly inside the open box, or nullopt.
  std::optional<Point> witness(const Box& box) const;
  // All live points strictly inside the open box, sorted by id.
  std::vector<Point> report(const Box& box) const;

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  void clear();

  // Test hook: validates BST order, subtree counts and that every node's
  // secondary equals the live points of its subtree; throws InvariantError.
  void check_structure() const;

 private:
  Node* root_ = nullptr;
  std::unordered_map<Id, std::pair<Coord, Coord>> points_;
  std::size_t structural_ = 0;  // live + lazily deleted nodes

  void rebuild_all();
  static void destroy(Node* n);
};

}  // namespace dynlabel

#endif
