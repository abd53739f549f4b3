#include "dynlabel/mis_graph.hpp"

#include <algorithm>

namespace dynlabel {

GraphMis::GraphMis(const std::vector<Square>& squares, Coord scale) : scale_(scale) {
  std::vector<Square> order = squares;
  std::sort(order.begin(), order.end(), [](const Square& a, const Square& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i - 1].id == order[i].id) throw DuplicateIdError("duplicate id in build input");
  for (const Square& s : order) insert(s);
}

Diff GraphMis::insert(const Square& s) {
  if (verts_.count(s.id)) throw DuplicateIdError("insert: id already present");

  Vertex v;
  v.sq = s;
  for (auto& [oid, ov] : verts_) {
    if (!intersects(s, ov.sq, scale_)) continue;
    v.nbrs.push_back(oid);
    ov.nbrs.push_back(s.id);
    if (ov.member) ++v.counter;
  }

  Diff d;
  if (v.counter == 0) {
    v.member = true;
    members_.insert(s.id);
    for (Id nid : v.nbrs) ++verts_[nid].counter;
    d.added.push_back(s.id);
  }
  verts_.emplace(s.id, std::move(v));
  return d;
}

Diff GraphMis::erase(Id id) {
  auto it = verts_.find(id);
  if (it == verts_.end()) throw UnknownIdError("erase: unknown id");

  Diff d;
  std::vector<Id> nbrs = std::move(it->second.nbrs);
  const bool was_member = it->second.member;

  // Unlink from every neighbor; if the departing square was selected, its
  // neighbors lose one blocker each.  Only those can newly reach zero.
  std::vector<Id> freed;
  for (Id nid : nbrs) {
    Vertex& nv = verts_[nid];
    nv.nbrs.erase(std::find(nv.nbrs.begin(), nv.nbrs.end(), id));
    if (was_member && --nv.counter == 0) freed.push_back(nid);
  }
  verts_.erase(it);
  if (was_member) {
    members_.erase(id);
    d.removed.push_back(id);
  }

  // Promote unblocked vertices in ascending-id order.  A promotion increments
  // its neighbors' counters, so later candidates must be re-checked.
  std::sort(freed.begin(), freed.end());
  for (Id fid : freed) {
    Vertex& fv = verts_[fid];
    if (fv.counter != 0) continue;
    fv.member = true;
    members_.insert(fid);
    for (Id nid : fv.nbrs) ++verts_[nid].counter;
    d.added.push_back(fid);
  }
  return d;
}

bool GraphMis::in_solution(Id id) const {
  auto it = verts_.find(id);
  if (it == verts_.end()) throw UnknownIdError("in_solution: unknown id");
  return it->second.member;
}

void GraphMis::check_invariants() const {
  for (const auto& [id, v] : verts_) {
    std::size_t cnt = 0;
    for (const auto& [oid, ov] : verts_) {
      if (oid == id) continue;
      const bool edge = intersects(v.sq, ov.sq, scale_);
      const bool listed = std::find(v.nbrs.begin(), v.nbrs.end(), oid) != v.nbrs.end();
      if (edge != listed) throw InvariantError("adjacency list disagrees with predicate");
      if (edge && ov.member) ++cnt;
    }
    if (cnt != v.counter) throw InvariantError("stale blocked counter");
    if (v.member != (members_.count(id) != 0)) throw InvariantError("member flag out of sync");
    if (v.member && v.counter != 0) throw InvariantError("selected vertex has a selected neighbor");
    if (!v.member && v.counter == 0) throw InvariantError("unblocked vertex left out of solution");
  }
  const auto flagged = std::count_if(verts_.begin(), verts_.end(),
                                     [](const auto& kv) { return kv.second.member; });
  if (members_.size() != static_cast<std::size_t>(flagged))
    throw InvariantError("member set size mismatch");
}

}  // namespace dynlabel
