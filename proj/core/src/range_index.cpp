#include "dynlabel/range_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace dynlabel {

namespace {
constexpr double kAlpha = 0.7;  // weight-balance parameter for scapegoat rebuilds
using YKey = std::pair<Coord, Id>;
}  // namespace

struct RangeIndex::Node {
  Point pt;
  bool alive = true;
  Node* left = nullptr;
  Node* right = nullptr;
  std::size_t total = 1;     // structural subtree size (dead included)
  std::set<YKey> sec;        // (y, id) of live points in this subtree

  explicit Node(const Point& p) : pt(p) { sec.insert({p.y, p.id}); }
};

namespace {

using Node = RangeIndex::Node;
using Point = RangeIndex::Point;

inline bool key_less(Coord x, Id id, const Point& b) {
  return x != b.x ? x < b.x : id < b.id;
}

void collect_alive(Node* n, std::vector<Point>& out) {
  if (!n) return;
  collect_alive(n->left, out);
  if (n->alive) out.push_back(n->pt);
  collect_alive(n->right, out);
}

void destroy_rec(Node* n) {
  if (!n) return;
  destroy_rec(n->left);
  destroy_rec(n->right);
  delete n;
}

// Builds a perfectly balanced subtree over pts[lo, hi) (sorted by (x, id)).
// Fills ybuf with the subtree's (y, id) keys in sorted order so each level's
// secondaries are constructed from sorted input in linear time.
Node* build_rec(const std::vector<Point>& pts, std::size_t lo, std::size_t hi,
                std::vector<YKey>& ybuf) {
  ybuf.clear();
  if (lo >= hi) return nullptr;
  std::size_t mid = lo + (hi - lo) / 2;
  Node* n = new Node(pts[mid]);
  n->sec.clear();
  std::vector<YKey> lbuf, rbuf;
  n->left = build_rec(pts, lo, mid, lbuf);
  n->right = build_rec(pts, mid + 1, hi, rbuf);
  n->total = hi - lo;
  ybuf.resize(n->total - 1);
  YKey own{pts[mid].y, pts[mid].id};
  std::merge(lbuf.begin(), lbuf.end(), rbuf.begin(), rbuf.end(), ybuf.begin());
  ybuf.insert(std::lower_bound(ybuf.begin(), ybuf.end(), own), own);
  n->sec = std::set<YKey>(ybuf.begin(), ybuf.end());
  return n;
}

Node* rebuild_subtree(Node* n) {
  std::vector<Point> pts;
  pts.reserve(n->total);
  collect_alive(n, pts);
  destroy_rec(n);
  std::vector<YKey> ybuf;
  return build_rec(pts, 0, pts.size(), ybuf);
}

// y-window probe of one secondary: first key with y strictly in (ylo, yhi).
inline const YKey* sec_witness(const std::set<YKey>& sec, Coord ylo, Coord yhi) {
  auto it = sec.upper_bound(YKey{ylo, std::numeric_limits<Id>::max()});
  if (it == sec.end() || it->first >= yhi) return nullptr;
  return &*it;
}

}  // namespace

RangeIndex::~RangeIndex() { destroy(root_); }

RangeIndex::RangeIndex(RangeIndex&& other) noexcept
    : root_(other.root_), points_(std::move(other.points_)), structural_(other.structural_) {
  other.root_ = nullptr;
  other.points_.clear();
  other.structural_ = 0;
}

RangeIndex& RangeIndex::operator=(RangeIndex&& other) noexcept {
  if (this != &other) {
    destroy(root_);
    root_ = other.root_;
    points_ = std::move(other.points_);
    structural_ = other.structural_;
    other.root_ = nullptr;
    other.points_.clear();
    other.structural_ = 0;
  }
  return *this;
}

void RangeIndex::destroy(Node* n) { destroy_rec(n); }

void RangeIndex::clear() {
  destroy_rec(root_);
  root_ = nullptr;
  points_.clear();
  structural_ = 0;
}

void RangeIndex::rebuild_all() {
  if (!root_) return;
  root_ = rebuild_subtree(root_);
  structural_ = points_.size();
}

void RangeIndex::insert(Id id, Coord x, Coord y) {
  if (points_.count(id)) throw DuplicateIdError("point id already present");
  points_.emplace(id, std::make_pair(x, y));
  ++structural_;

  Point p{id, x, y};
  if (!root_) {
    root_ = new Node(p);
    return;
  }
  // Descend to the attach position, updating counts and secondaries on the way.
  std::vector<Node**> path;
  Node** slot = &root_;
  while (*slot) {
    Node* n = *slot;
    path.push_back(slot);
    n->total += 1;
    n->sec.insert(YKey{y, id});
    slot = key_less(x, id, n->pt) ? &n->left : &n->right;
  }
  *slot = new Node(p);

  // Depth beyond the weight-balance bound pinpoints a scapegoat to rebuild.
  double limit = std::log(static_cast<double>(structural_)) / std::log(1.0 / kAlpha);
  if (static_cast<double>(path.size() + 1) > limit + 1.0) {
    std::size_t child_total = 1;
    for (std::size_t i = path.size(); i-- > 0;) {
      Node* n = *path[i];
      if (static_cast<double>(child_total) >
          kAlpha * static_cast<double>(n->total)) {
        // Rebuilding purges the subtree's dead nodes; every ancestor's
        // structural count carried them and must shed them too.
        const std::size_t before = n->total;
        Node* fresh = rebuild_subtree(n);
        *path[i] = fresh;
        const std::size_t delta = before - (fresh ? fresh->total : 0);
        structural_ -= delta;
        for (std::size_t j = 0; j < i; ++j) (*path[j])->total -= delta;
        return;
      }
      child_total = n->total;
    }
    rebuild_all();
  }
}

void RangeIndex::erase(Id id) {
  auto it = points_.find(id);
  if (it == points_.end()) throw UnknownIdError("point id not present");
  Coord x = it->second.first;
  Coord y = it->second.second;
  points_.erase(it);

  Node* n = root_;
  while (n) {
    n->sec.erase(YKey{y, id});
    if (n->pt.x == x && n->pt.id == id && n->alive) {
      n->alive = false;
      break;
    }
    // A dead twin of a re-inserted key sits above the live node (equal keys
    // descend right), so only the alive match terminates the walk.
    n = key_less(x, id, n->pt) ? n->left : n->right;
  }
  if (structural_ > 8 && points_.size() * 2 < structural_) rebuild_all();
}

std::optional<RangeIndex::Point> RangeIndex::get(Id id) const {
  auto it = points_.find(id);
  if (it == points_.end()) return std::nullopt;
  return Point{id, it->second.first, it->second.second};
}

namespace {

// Shared x-split walk.  `Emit` receives either a whole secondary known to be
// inside the x-window (canonical subtree) or a single node to test; it
// returns true to stop early (witness mode).
template <typename EmitSec, typename EmitNode>
bool walk_box(const Node* root, const Box& box, EmitSec emit_sec, EmitNode emit_node) {
  const Node* n = root;
  while (n) {
    if (n->pt.x <= box.xlo) {
      n = n->right;
    } else if (n->pt.x >= box.xhi) {
      n = n->left;
    } else {
      break;
    }
  }
  if (!n) return false;
  if (emit_node(n)) return true;
  // Left arm: everything here is x < split-x < xhi; peel off right children.
  for (const Node* l = n->left; l;) {
    if (l->pt.x <= box.xlo) {
      l = l->right;
    } else {
      if (emit_node(l)) return true;
      if (l->right && emit_sec(*l->right)) return true;
      l = l->left;
    }
  }
  // Right arm: everything here is x > split-x > xlo; peel off left children.
  for (const Node* r = n->right; r;) {
    if (r->pt.x >= box.xhi) {
      r = r->left;
    } else {
      if (emit_node(r)) return true;
      if (r->left && emit_sec(*r->left)) return true;
      r = r->right;
    }
  }
  return false;
}

}  // namespace

std::optional<RangeIndex::Point> RangeIndex::witness(const Box& box) const {
  std::optional<Point> found;
  auto emit_sec = [&](const Node& sub) {
    const YKey* k = sec_witness(sub.sec, box.ylo, box.yhi);
    if (!k) return false;
    auto it = points_.find(k->second);
    found = Point{k->second, it->second.first, it->second.second};
    return true;
  };
  auto emit_node = [&](const Node* n) {
    if (n->alive && box.contains(n->pt.x, n->pt.y)) {
      found = n->pt;
      return true;
    }
    return false;
  };
  walk_box(root_, box, emit_sec, emit_node);
  return found;
}

std::vector<RangeIndex::Point> RangeIndex::report(const Box& box) const {
  std::vector<Point> out;
  auto emit_sec = [&](const Node& sub) {
    auto it = sub.sec.upper_bound(YKey{box.ylo, std::numeric_limits<Id>::max()});
    for (; it != sub.sec.end() && it->first < box.yhi; ++it) {
      auto p = points_.find(it->second);
      out.push_back(Point{it->second, p->second.first, p->second.second});
    }
    return false;  // keep going
  };
  auto emit_node = [&](const Node* n) {
    if (n->alive && box.contains(n->pt.x, n->pt.y)) out.push_back(n->pt);
    return false;
  };
  walk_box(root_, box, emit_sec, emit_node);
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
  return out;
}

namespace {

struct NodeCheck {
  std::size_t total = 0;
  std::set<YKey> live;
};

NodeCheck check_rec(const Node* n, const Point* lo, const Point* hi) {
  if (!n) return {};
  auto lt = [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.id < b.id;
  };
  // Equality with the low bound is legal: re-inserting an erased key leaves
  // its dead twin as an ancestor the live node sits right of.
  if (lo && lt(n->pt, *lo)) throw InvariantError("range index: order violated");
  if (hi && !lt(n->pt, *hi)) throw InvariantError("range index: order violated");
  NodeCheck l = check_rec(n->left, lo, &n->pt);
  NodeCheck r = check_rec(n->right, &n->pt, hi);
  NodeCheck me;
  me.total = l.total + r.total + 1;
  if (me.total != n->total) throw InvariantError("range index: stale subtree count");
  me.live = std::move(l.live);
  me.live.merge(r.live);
  if (n->alive) me.live.insert(YKey{n->pt.y, n->pt.id});
  if (me.live != n->sec) throw InvariantError("range index: secondary out of sync");
  return me;
}

}  // namespace

void RangeIndex::check_structure() const {
  NodeCheck r = check_rec(root_, nullptr, nullptr);
  if (r.total != structural_) throw InvariantError("range index: structural count mismatch");
  if (r.live.size() != points_.size()) throw InvariantError("range index: live count mismatch");
}

}  // namespace dynlabel
