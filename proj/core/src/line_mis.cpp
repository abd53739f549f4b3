#include "dynlabel/line_mis.hpp"

#include <algorithm>

namespace dynlabel {

namespace {

Interval span_interval(const Rect& r) {
  DoubledSpan s = doubled_span(r);
  return Interval{r.id, s.lo, s.hi};
}

}  // namespace

LineMis::LineMis(const std::vector<Rect>& rects, Coord scale) : scale_(scale) {
  for (const Rect& r : rects) insert(r);
}

SizeReport LineMis::insert(const Rect& r) {
  if (where_.count(r.id)) throw DuplicateIdError("insert: id already present");
  if (r.w <= 0) throw Error("insert: rectangle width must be positive");
  const std::int64_t j = line_of(r, scale_);
  ChainSolver& cs = lines_[j];
  const std::size_t before = cs.omega();
  cs.insert(span_interval(r));
  last_queries_ = cs.last_queries();
  where_.emplace(r.id, std::make_pair(j, r));
  apply_delta(j, before, cs.omega());
  return SizeReport{solution_size()};
}

SizeReport LineMis::erase(Id id) {
  auto it = where_.find(id);
  if (it == where_.end()) throw UnknownIdError("erase: unknown id");
  const std::int64_t j = it->second.first;
  ChainSolver& cs = lines_.at(j);
  const std::size_t before = cs.omega();
  cs.erase(id);
  last_queries_ = cs.last_queries();
  apply_delta(j, before, cs.omega());
  if (cs.empty()) lines_.erase(j);
  where_.erase(it);
  return SizeReport{solution_size()};
}

void LineMis::apply_delta(std::int64_t j, std::size_t before, std::size_t after) {
  if (before == after) return;
  std::size_t& total = (j & 1) ? odd_total_ : even_total_;
  total += after;
  total -= before;
  if (before != 0) omegas_.erase(omegas_.find(before));
  if (after != 0) omegas_.insert(after);
}

std::vector<Id> LineMis::solution() const {
  const int want = even_total_ >= odd_total_ ? 0 : 1;
  std::vector<Id> out;
  for (const auto& [j, cs] : lines_) {
    if (static_cast<int>(j & 1) != want) continue;
    for (const Interval& iv : cs.chain()) out.push_back(iv.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const ChainSolver* LineMis::line(std::int64_t j) const {
  auto it = lines_.find(j);
  return it == lines_.end() ? nullptr : &it->second;
}

void LineMis::check_invariants() const {
  std::size_t even = 0, odd = 0;
  std::multiset<std::size_t> oms;
  for (const auto& [j, cs] : lines_) {
    if (cs.empty()) throw InvariantError("empty line kept alive");
    cs.check_chain();
    ((j & 1) ? odd : even) += cs.omega();
    if (cs.omega() != 0) oms.insert(cs.omega());
  }
  if (even != even_total_ || odd != odd_total_) throw InvariantError("stale parity totals");
  if (oms != omegas_) throw InvariantError("stale per-line chain sizes");
  std::size_t stored = 0;
  for (const auto& [id, loc] : where_) {
    const ChainSolver* cs = line(loc.first);
    if (!cs || !cs->contains(id)) throw InvariantError("id missing from its line");
    ++stored;
  }
  std::size_t lined = 0;
  for (const auto& [j, cs] : lines_) lined += cs.size();
  if (stored != lined) throw InvariantError("line contents disagree with the id map");
}

}  // namespace dynlabel
