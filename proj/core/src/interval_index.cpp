#include "dynlabel/interval_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace dynlabel {

namespace {

// Lexicographic (hi, id) comparison of two intervals.
inline bool rightward_less(const Interval& a, const Interval& b) {
  return a.hi != b.hi ? a.hi < b.hi : a.id < b.id;
}

// Lexicographic (lo, id) key order of the left-endpoint tree.
inline bool key_less(Coord lo, Id id, const Interval& b) {
  return lo != b.lo ? lo < b.lo : id < b.id;
}

}  // namespace

struct LeftTree::Node {
  Interval iv;
  Node* left = nullptr;
  Node* right = nullptr;
  int height = 1;
  const Interval* best = nullptr;  // min (hi, id) over this subtree

  explicit Node(const Interval& i) : iv(i), best(&iv) {}
};

namespace {

using Node = LeftTree::Node;

inline int height(const Node* n) { return n ? n->height : 0; }

inline void pull(Node* n) {
  n->height = 1 + std::max(height(n->left), height(n->right));
  n->best = &n->iv;
  if (n->left && rightward_less(*n->left->best, *n->best)) n->best = n->left->best;
  if (n->right && rightward_less(*n->right->best, *n->best)) n->best = n->right->best;
}

inline Node* rotate_right(Node* n) {
  Node* l = n->left;
  n->left = l->right;
  l->right = n;
  pull(n);
  pull(l);
  return l;
}

inline Node* rotate_left(Node* n) {
  Node* r = n->right;
  n->right = r->left;
  r->left = n;
  pull(n);
  pull(r);
  return r;
}

inline Node* rebalance(Node* n) {
  pull(n);
  int bf = height(n->left) - height(n->right);
  if (bf > 1) {
    if (height(n->left->left) < height(n->left->right)) n->left = rotate_left(n->left);
    return rotate_right(n);
  }
  if (bf < -1) {
    if (height(n->right->right) < height(n->right->left)) n->right = rotate_right(n->right);
    return rotate_left(n);
  }
  return n;
}

// Detaches the (lo, id)-minimal node of the subtree; returns new subtree root.
Node* detach_min(Node* n, Node** out) {
  if (!n->left) {
    *out = n;
    return n->right;
  }
  n->left = detach_min(n->left, out);
  return rebalance(n);
}

}  // namespace

LeftTree::~LeftTree() { destroy(root_); }

LeftTree::LeftTree(LeftTree&& other) noexcept
    : root_(other.root_), by_id_(std::move(other.by_id_)) {
  other.root_ = nullptr;
  other.by_id_.clear();
}

LeftTree& LeftTree::operator=(LeftTree&& other) noexcept {
  if (this != &other) {
    destroy(root_);
    root_ = other.root_;
    by_id_ = std::move(other.by_id_);
    other.root_ = nullptr;
    other.by_id_.clear();
  }
  return *this;
}

void LeftTree::destroy(Node* n) {
  if (!n) return;
  destroy(n->left);
  destroy(n->right);
  delete n;
}

LeftTree::Node* LeftTree::insert_rec(Node* n, const Interval& iv) {
  if (!n) return new Node(iv);
  if (key_less(iv.lo, iv.id, n->iv))
    n->left = insert_rec(n->left, iv);
  else
    n->right = insert_rec(n->right, iv);
  return rebalance(n);
}

LeftTree::Node* LeftTree::erase_rec(Node* n, Coord lo, Id id) {
  if (n->iv.lo == lo && n->iv.id == id) {
    if (!n->left || !n->right) {
      Node* child = n->left ? n->left : n->right;
      delete n;
      return child;
    }
    Node* succ = nullptr;
    n->right = detach_min(n->right, &succ);
    succ->left = n->left;
    succ->right = n->right;
    delete n;
    return rebalance(succ);
  }
  if (key_less(lo, id, n->iv))
    n->left = erase_rec(n->left, lo, id);
  else
    n->right = erase_rec(n->right, lo, id);
  return rebalance(n);
}

void LeftTree::insert(const Interval& iv) {
  if (by_id_.count(iv.id)) throw DuplicateIdError("interval id already present");
  root_ = insert_rec(root_, iv);
  by_id_.emplace(iv.id, iv);
}

void LeftTree::erase(Id id) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw UnknownIdError("interval id not present");
  root_ = erase_rec(root_, it->second.lo, id);
  by_id_.erase(it);
}

std::optional<Interval> LeftTree::get(Id id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<Interval> LeftTree::min_right_after(Coord p) const {
  const Interval* best = nullptr;
  const Node* n = root_;
  while (n) {
    if (n->iv.lo > p) {
      // Node and everything to its right qualify; the right subtree is
      // summarized by its decoration, then continue into the left subtree
      // looking for further qualifying intervals.
      if (!best || rightward_less(n->iv, *best)) best = &n->iv;
      if (n->right && (!best || rightward_less(*n->right->best, *best))) best = n->right->best;
      n = n->left;
    } else {
      n = n->right;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::vector<Interval> LeftTree::collect() const {
  std::vector<Interval> out;
  out.reserve(by_id_.size());
  // Explicit stack in-order walk.
  std::vector<const Node*> stack;
  const Node* n = root_;
  while (n || !stack.empty()) {
    while (n) {
      stack.push_back(n);
      n = n->left;
    }
    n = stack.back();
    stack.pop_back();
    out.push_back(n->iv);
    n = n->right;
  }
  return out;
}

void LeftTree::clear() {
  destroy(root_);
  root_ = nullptr;
  by_id_.clear();
}

namespace {

struct CheckResult {
  int height = 0;
  std::size_t count = 0;
  const Interval* best = nullptr;
};

CheckResult check_rec(const Node* n, const Interval* lo_bound, const Interval* hi_bound) {
  if (!n) return {};
  auto lt = [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.id < b.id;
  };
  if (lo_bound && !lt(*lo_bound, n->iv)) throw InvariantError("left tree: order violated");
  if (hi_bound && !lt(n->iv, *hi_bound)) throw InvariantError("left tree: order violated");
  CheckResult l = check_rec(n->left, lo_bound, &n->iv);
  CheckResult r = check_rec(n->right, &n->iv, hi_bound);
  if (n->height != 1 + std::max(l.height, r.height))
    throw InvariantError("left tree: stale height");
  if (std::abs(l.height - r.height) > 1) throw InvariantError("left tree: unbalanced");
  const Interval* best = &n->iv;
  if (l.best && rightward_less(*l.best, *best)) best = l.best;
  if (r.best && rightward_less(*r.best, *best)) best = r.best;
  if (best->hi != n->best->hi || best->id != n->best->id)
    throw InvariantError("left tree: stale min-right decoration");
  return {n->height, l.count + r.count + 1, best};
}

}  // namespace

void LeftTree::check_structure() const {
  CheckResult r = check_rec(root_, nullptr, nullptr);
  if (r.count != by_id_.size()) throw InvariantError("left tree: size mismatch");
}

void SolutionTree::insert(const Interval& iv) {
  if (by_id_.count(iv.id)) throw DuplicateIdError("selected id already present");
  by_key_.emplace(Key{iv.hi, iv.id}, iv);
  by_id_.emplace(iv.id, iv.hi);
}

void SolutionTree::erase(Id id) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw UnknownIdError("selected id not present");
  by_key_.erase(Key{it->second, id});
  by_id_.erase(it);
}

GapProbe SolutionTree::gap_of(Coord lo, Coord hi) const {
  GapProbe out;
  // pred: greatest selected right endpoint strictly below lo.
  auto it = by_key_.lower_bound(Key{lo, 0});
  if (it != by_key_.begin()) {
    auto p = std::prev(it);
    if (p->second.hi < lo) out.pred = p->second;
  }
  // First selected right endpoint strictly above lo decides the gap test.
  auto after_lo = by_key_.upper_bound(Key{lo, std::numeric_limits<Id>::max()});
  out.same_gap = (after_lo == by_key_.end()) || (after_lo->second.hi > hi);
  // succ: least selected right endpoint strictly above hi.
  auto after_hi = by_key_.upper_bound(Key{hi, std::numeric_limits<Id>::max()});
  if (after_hi != by_key_.end()) out.succ = after_hi->second;
  return out;
}

std::optional<Interval> SolutionTree::pred_of(Coord hi, Id id) const {
  auto it = by_key_.lower_bound(Key{hi, id});
  if (it == by_key_.begin()) return std::nullopt;
  return std::prev(it)->second;
}

std::optional<Interval> SolutionTree::succ_of(Coord hi, Id id) const {
  auto it = by_key_.upper_bound(Key{hi, id});
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<Interval> SolutionTree::first() const {
  if (by_key_.empty()) return std::nullopt;
  return by_key_.begin()->second;
}

std::vector<Interval> SolutionTree::collect() const {
  std::vector<Interval> out;
  out.reserve(by_key_.size());
  for (const auto& [k, iv] : by_key_) out.push_back(iv);
  return out;
}

void SolutionTree::clear() {
  by_key_.clear();
  by_id_.clear();
}

}  // namespace dynlabel
