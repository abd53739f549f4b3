#include "dynlabel/grid_mis.hpp"

#include <algorithm>

namespace dynlabel {

namespace {
// Dense cells are materialized up front; past this the flat array stops
// being the cheap option it is meant to be.
constexpr std::int64_t kDenseKappaLimit = 1024;
}  // namespace

GridMis::GridMis(Coord scale, std::int64_t kappa, GridOptions opt)
    : scale_(scale), kappa_(kappa), dense_(opt.dense) {
  if (kappa_ <= 0) throw Error("grid: kappa must be positive");
  if (dense_) {
    if (kappa_ > kDenseKappaLimit) throw Error("grid: dense storage caps kappa at 1024");
    flat_.resize(static_cast<std::size_t>(kappa_ * kappa_));
  }
}

GridMis::GridMis(const std::vector<Square>& squares, Coord scale, std::int64_t kappa,
                 GridOptions opt)
    : GridMis(scale, kappa, opt) {
  for (const Square& s : squares) insert(s);
}

GridMis::Bucket& GridMis::bucket(std::int64_t u, std::int64_t v) {
  if (dense_) return flat_[static_cast<std::size_t>(u * kappa_ + v)];
  return sparse_[{u, v}];
}

const GridMis::Bucket* GridMis::peek(std::int64_t u, std::int64_t v) const {
  if (dense_) return &flat_[static_cast<std::size_t>(u * kappa_ + v)];
  auto it = sparse_.find({u, v});
  return it == sparse_.end() ? nullptr : &it->second;
}

void GridMis::drop_if_empty(std::int64_t u, std::int64_t v) {
  if (dense_) return;  // flat cells stay allocated
  auto it = sparse_.find({u, v});
  if (it != sparse_.end() && it->second.order.empty()) sparse_.erase(it);
}

// Row ledger after a column of `u` flipped activity: recompute the cached
// max and push its delta into the row-parity total.
void GridMis::reledger(std::int64_t u, Row& row) {
  const std::size_t c = std::max(row.odd_cols.size(), row.even_cols.size());
  if (c == row.c) return;
  std::size_t& total = (u & 1) ? odd_total_ : even_total_;
  total += c;
  total -= row.c;
  row.c = c;
  touches_ += 2;  // cached max + one parity total
}

void GridMis::activate(std::int64_t u, std::int64_t v) {
  Row& row = rows_[u];
  ((v & 1) ? row.odd_cols : row.even_cols).insert(v);
  ++touches_;
  reledger(u, row);
}

void GridMis::deactivate(std::int64_t u, std::int64_t v) {
  Row& row = rows_.at(u);
  ((v & 1) ? row.odd_cols : row.even_cols).erase(v);
  ++touches_;
  reledger(u, row);
  if (row.odd_cols.empty() && row.even_cols.empty()) rows_.erase(u);
}

SizeReport GridMis::insert(const Square& s) {
  if (where_.count(s.id)) throw DuplicateIdError("insert: id already present");
  const GridPoint g = grid_point_of(s, scale_);
  if (g.row < 0 || g.row >= kappa_ || g.col < 0 || g.col >= kappa_)
    throw OutOfFrameError("insert: grid point outside the kappa frame");
  touches_ = 0;

  Bucket& b = bucket(g.row, g.col);
  const bool was_empty = b.order.empty();
  b.order.push_back(s.id);
  where_.emplace(s.id, Loc{g.row, g.col, std::prev(b.order.end())});
  if (was_empty) activate(g.row, g.col);
  return SizeReport{solution_size()};
}

SizeReport GridMis::erase(Id id) {
  auto it = where_.find(id);
  if (it == where_.end()) throw UnknownIdError("erase: unknown id");
  touches_ = 0;

  const Loc loc = it->second;
  Bucket& b = bucket(loc.u, loc.v);
  b.order.erase(loc.it);  // a surviving front simply takes over as representative
  where_.erase(it);
  if (b.order.empty()) {
    deactivate(loc.u, loc.v);
    drop_if_empty(loc.u, loc.v);
  }
  return SizeReport{solution_size()};
}

std::vector<Id> GridMis::solution() const {
  const std::int64_t want = even_total_ >= odd_total_ ? 0 : 1;
  std::vector<Id> out;
  out.reserve(solution_size());
  for (const auto& [u, row] : rows_) {
    if ((u & 1) != want) continue;
    const auto& cols = row.odd_cols.size() >= row.even_cols.size() ? row.odd_cols : row.even_cols;
    for (std::int64_t v : cols) out.push_back(peek(u, v)->order.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void GridMis::check_invariants() const {
  // Rebuild activity from the authoritative id map.
  std::unordered_map<std::int64_t, Row> want_rows;
  for (const auto& [id, loc] : where_) {
    const Bucket* b = peek(loc.u, loc.v);
    if (!b || std::find(b->order.begin(), b->order.end(), id) == b->order.end())
      throw InvariantError("square missing from its bucket");
    Row& r = want_rows[loc.u];
    ((loc.v & 1) ? r.odd_cols : r.even_cols).insert(loc.v);
  }
  std::size_t even = 0, odd = 0;
  for (auto& [u, r] : want_rows) {
    r.c = std::max(r.odd_cols.size(), r.even_cols.size());
    ((u & 1) ? odd : even) += r.c;
  }
  if (even != even_total_ || odd != odd_total_) throw InvariantError("stale parity totals");
  if (want_rows.size() != rows_.size()) throw InvariantError("stale row ledger set");
  for (const auto& [u, r] : want_rows) {
    auto it = rows_.find(u);
    if (it == rows_.end() || it->second.odd_cols != r.odd_cols ||
        it->second.even_cols != r.even_cols || it->second.c != r.c)
      throw InvariantError("stale row ledger");
  }
  std::size_t bucketed = 0;
  if (dense_) {
    for (const Bucket& b : flat_) bucketed += b.order.size();
  } else {
    for (const auto& [k, b] : sparse_) {
      if (b.order.empty()) throw InvariantError("empty bucket kept alive");
      bucketed += b.order.size();
    }
  }
  if (bucketed != where_.size()) throw InvariantError("bucket contents disagree with the id map");
}

}  // namespace dynlabel
