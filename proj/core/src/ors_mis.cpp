#include "dynlabel/ors_mis.hpp"

#include <algorithm>

namespace dynlabel {

namespace {

// Closed integer box: the exact set of candidate centers inside a region.
// Empty iff a bound is crossed.
struct IBox {
  Coord xlo, xhi, ylo, yhi;
  bool empty() const { return xlo > xhi || ylo > yhi; }
};

// Integer centers strictly inside an open box.
IBox interior(const Box& b) { return IBox{b.xlo + 1, b.xhi - 1, b.ylo + 1, b.yhi - 1}; }

// Cuts `outer` minus the union of `holes` into disjoint closed boxes, one
// column of boxes per maximal x-strip on which the covering hole set is
// constant.  Everything is exact integer arithmetic.
std::vector<IBox> free_slabs(const IBox& outer, const std::vector<IBox>& holes) {
  std::vector<Coord> xs = {outer.xlo, outer.xhi + 1};
  for (const IBox& h : holes) {
    if (h.xlo > outer.xlo && h.xlo <= outer.xhi + 1) xs.push_back(h.xlo);
    if (h.xhi + 1 > outer.xlo && h.xhi + 1 <= outer.xhi + 1) xs.push_back(h.xhi + 1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<IBox> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Coord x0 = xs[i], x1 = xs[i + 1] - 1;  // strip [x0, x1]
    // Breakpoints include every hole edge, so a hole meeting the strip
    // covers its full width.
    std::vector<std::pair<Coord, Coord>> blocked;
    for (const IBox& h : holes)
      if (h.xlo <= x0 && h.xhi >= x1) blocked.emplace_back(h.ylo, h.yhi);
    std::sort(blocked.begin(), blocked.end());
    Coord y = outer.ylo;
    for (const auto& [blo, bhi] : blocked) {
      if (blo > y && y <= outer.yhi)
        out.push_back(IBox{x0, x1, y, std::min(blo - 1, outer.yhi)});
      if (bhi >= y) y = bhi + 1;
      if (y > outer.yhi) break;
    }
    if (y <= outer.yhi) out.push_back(IBox{x0, x1, y, outer.yhi});
  }
  return out;
}

// Corner count of (closure of the interior of) `outer` minus open `holes`:
// build the edge arrangement and classify every vertex by the membership
// pattern of its four incident faces.  Midpoints are kept doubled so the
// predicates stay integral.
std::size_t corner_count(const Box& outer, const std::vector<Box>& holes) {
  std::vector<Coord> xs = {outer.xlo, outer.xhi}, ys = {outer.ylo, outer.yhi};
  for (const Box& h : holes) {
    for (Coord c : {h.xlo, h.xhi})
      if (c > outer.xlo && c < outer.xhi) xs.push_back(c);
    for (Coord c : {h.ylo, h.yhi})
      if (c > outer.ylo && c < outer.yhi) ys.push_back(c);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const std::size_t fx = xs.size() - 1, fy = ys.size() - 1;
  std::vector<char> face(fx * fy, 0);
  for (std::size_t i = 0; i < fx; ++i) {
    for (std::size_t j = 0; j < fy; ++j) {
      const Coord mx2 = xs[i] + xs[i + 1], my2 = ys[j] + ys[j + 1];
      bool inside = true;
      for (const Box& h : holes)
        if (2 * h.xlo < mx2 && mx2 < 2 * h.xhi && 2 * h.ylo < my2 && my2 < 2 * h.yhi) {
          inside = false;
          break;
        }
      face[i * fy + j] = inside ? 1 : 0;
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> int {
    if (i >= fx || j >= fy) return 0;  // outside the outer box (unsigned wrap intended)
    return face[i * fy + j];
  };
  std::size_t corners = 0;
  for (std::size_t i = 0; i <= fx; ++i) {
    for (std::size_t j = 0; j <= fy; ++j) {
      const int a = at(i - 1, j - 1), b = at(i, j - 1), c = at(i - 1, j), d = at(i, j);
      const int cnt = a + b + c + d;
      if (cnt == 1 || cnt == 3) ++corners;
      else if (cnt == 2 && a == d) corners += 2;  // diagonal pinch
    }
  }
  return corners;
}

}  // namespace

OrsMis::OrsMis(const std::vector<Square>& squares, Coord scale) : scale_(scale) {
  std::vector<Square> order = squares;
  std::sort(order.begin(), order.end(), [](const Square& a, const Square& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i - 1].id == order[i].id) throw DuplicateIdError("duplicate id in build input");
  for (const Square& s : order) insert(s);
}

Diff OrsMis::insert(const Square& s) {
  if (squares_.count(s.id)) throw DuplicateIdError("insert: id already present");
  stats_ = OrsStats{};

  all_.insert(s.id, s.x, s.y);
  squares_.emplace(s.id, s);

  // Blockers are exactly the selected centers inside the newcomer's 2S box.
  const std::vector<RangeIndex::Point> hits = sol_.report(scaled_box(s, 2, scale_));
  stats_.probe_hits = hits.size();
  if (hits.size() > 4) throw InvariantError("more than 4 selected centers in a 2S box");

  Diff d;
  if (hits.empty()) {
    members_.insert(s.id);
    sol_.insert(s.id, s.x, s.y);
    d.added.push_back(s.id);
  }
  return d;
}

Diff OrsMis::erase(Id id) {
  auto it = squares_.find(id);
  if (it == squares_.end()) throw UnknownIdError("erase: unknown id");
  stats_ = OrsStats{};

  const Square gone = it->second;
  all_.erase(id);
  squares_.erase(it);

  Diff d;
  if (members_.count(id) == 0) return d;  // solution untouched
  members_.erase(id);
  sol_.erase(id);
  d.removed.push_back(id);

  // Members whose 2S box can reach into the freed 2S box all sit in the 4S box.
  const std::vector<RangeIndex::Point> qx = sol_.report(scaled_box(gone, 4, scale_));
  stats_.qx = qx.size();
  if (qx.size() > 12) throw InvariantError("more than 12 selected centers in a 4S box");

  const Box outer = scaled_box(gone, 2, scale_);
  std::vector<Box> holes;
  holes.reserve(qx.size() + 4);
  for (const RangeIndex::Point& p : qx)
    holes.push_back(scaled_box(Square{p.id, p.x, p.y}, 2, scale_));

  stats_.corners = corner_count(outer, holes);
  if (stats_.corners > 28) throw InvariantError("repair polygon exceeded 28 corners");

  // Fill the freed region greedily: any stored center inside it belongs to a
  // non-member (member centers keep pairwise distance >= S, so none lies in
  // the open 2S box of the departed member).  Each joiner blocks its own 2S
  // box; re-cut and repeat until no candidate is left.
  std::vector<IBox> int_holes;
  int_holes.reserve(holes.size() + 4);
  for (const Box& h : holes) int_holes.push_back(interior(h));
  for (;;) {
    bool found = false;
    for (const IBox& slab : free_slabs(interior(outer), int_holes)) {
      if (slab.empty()) continue;
      const Box probe{slab.xlo - 1, slab.xhi + 1, slab.ylo - 1, slab.yhi + 1};
      if (std::optional<RangeIndex::Point> w = all_.witness(probe)) {
        const Square joiner{w->id, w->x, w->y};
        members_.insert(joiner.id);
        sol_.insert(joiner.id, joiner.x, joiner.y);
        d.added.push_back(joiner.id);
        int_holes.push_back(interior(scaled_box(joiner, 2, scale_)));
        if (++stats_.additions > 4) throw InvariantError("repair added more than 4 members");
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  std::sort(d.added.begin(), d.added.end());
  return d;
}

void OrsMis::check_invariants() const {
  all_.check_structure();
  sol_.check_structure();
  if (all_.size() != squares_.size() || sol_.size() != members_.size())
    throw InvariantError("index sizes disagree with the id maps");
  for (const auto& [id, s] : squares_) {
    if (!all_.contains(id)) throw InvariantError("square missing from the full index");
    if (members_.count(id) != static_cast<std::size_t>(sol_.contains(id)))
      throw InvariantError("solution index disagrees with the member set");
  }
  for (Id a : members_) {
    const Square& sa = squares_.at(a);
    for (Id b : members_)
      if (a < b && intersects(sa, squares_.at(b), scale_))
        throw InvariantError("two members intersect");
  }
  for (const auto& [id, s] : squares_) {
    if (members_.count(id)) continue;
    bool blocked = false;
    for (Id m : members_)
      if (intersects(s, squares_.at(m), scale_)) {
        blocked = true;
        break;
      }
    if (!blocked) throw InvariantError("independent square left out of the solution");
  }
}

}  // namespace dynlabel
