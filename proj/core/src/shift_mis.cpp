#include "dynlabel/shift_mis.hpp"

#include <algorithm>

namespace dynlabel {

namespace {

Interval unit_interval(const Square& s, Coord scale) {
  return Interval{s.id, 2 * s.x - scale, 2 * s.x + scale};
}

}  // namespace

ShiftMis::ShiftMis(Coord scale, std::int64_t kappa, int k)
    : scale_(scale), kappa_(kappa), k_(k) {
  if (kappa_ <= 0) throw Error("shifting: kappa must be positive");
  if (k_ < 1) throw Error("shifting: k must be at least 1");
}

ShiftMis::ShiftMis(const std::vector<Square>& squares, Coord scale, std::int64_t kappa, int k)
    : ShiftMis(scale, kappa, k) {
  for (const Square& s : squares) insert(s);
}

void ShiftMis::reledger(std::int64_t u, Line& line) {
  const std::size_t c = *std::max_element(line.msize.begin(), line.msize.end());
  if (c == line.c) return;
  std::size_t& total = (u & 1) ? odd_total_ : even_total_;
  total += c;
  total -= line.c;
  line.c = c;
}

SizeReport ShiftMis::insert(const Square& s) {
  if (where_.count(s.id)) throw DuplicateIdError("insert: id already present");
  const GridPoint g = grid_point_of(s, scale_);
  if (g.row < 0 || g.row >= kappa_ || g.col < 0 || g.col >= kappa_)
    throw OutOfFrameError("insert: grid point outside the kappa frame");

  Line& line = lines_[g.row];
  if (line.groups.empty()) {
    line.groups.resize(static_cast<std::size_t>(k_) + 1);
    line.msize.assign(static_cast<std::size_t>(k_) + 1, 0);
  }
  const Interval iv = unit_interval(s, scale_);
  touched_ = 0;
  for (int alpha = 1; alpha <= k_ + 1; ++alpha) {
    if (discarded(g.col, alpha)) continue;
    ChainSolver& cs = line.groups[static_cast<std::size_t>(alpha - 1)][subgroup_of(g.col, alpha)];
    const std::size_t before = cs.omega();
    cs.insert(iv);
    if (cs.omega() > static_cast<std::size_t>(k_))
      throw InvariantError("subgroup chain exceeded its k bound");
    line.msize[static_cast<std::size_t>(alpha - 1)] += cs.omega() - before;
    ++touched_;
  }
  if (touched_ != static_cast<std::size_t>(k_))
    throw InvariantError("square joined the wrong number of groups");
  reledger(g.row, line);
  where_.emplace(s.id, std::make_pair(g, iv));
  return SizeReport{solution_size()};
}

SizeReport ShiftMis::erase(Id id) {
  auto it = where_.find(id);
  if (it == where_.end()) throw UnknownIdError("erase: unknown id");
  const GridPoint g = it->second.first;

  Line& line = lines_.at(g.row);
  touched_ = 0;
  bool any_left = false;
  for (int alpha = 1; alpha <= k_ + 1; ++alpha) {
    auto& subgroups = line.groups[static_cast<std::size_t>(alpha - 1)];
    if (discarded(g.col, alpha)) {
      if (!subgroups.empty()) any_left = true;
      continue;
    }
    auto sit = subgroups.find(subgroup_of(g.col, alpha));
    if (sit == subgroups.end()) throw InvariantError("square absent from one of its k groups");
    ChainSolver& cs = sit->second;
    const std::size_t before = cs.omega();
    cs.erase(id);
    line.msize[static_cast<std::size_t>(alpha - 1)] -= before - cs.omega();
    ++touched_;
    if (cs.empty()) subgroups.erase(sit);
    if (!subgroups.empty()) any_left = true;
  }
  if (touched_ != static_cast<std::size_t>(k_))
    throw InvariantError("square left the wrong number of groups");
  reledger(g.row, line);
  if (!any_left) lines_.erase(g.row);
  where_.erase(it);
  return SizeReport{solution_size()};
}

std::vector<Id> ShiftMis::solution() const {
  const std::int64_t want = even_total_ >= odd_total_ ? 0 : 1;
  std::vector<Id> out;
  for (const auto& [u, line] : lines_) {
    if ((u & 1) != want) continue;
    // Best group, smallest alpha on ties.
    std::size_t best = 0;
    for (std::size_t a = 1; a < line.msize.size(); ++a)
      if (line.msize[a] > line.msize[best]) best = a;
    for (const auto& [m, cs] : line.groups[best])
      for (const Interval& iv : cs.chain()) out.push_back(iv.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ShiftMis::check_invariants() const {
  std::size_t even = 0, odd = 0;
  for (const auto& [u, line] : lines_) {
    if (line.groups.size() != static_cast<std::size_t>(k_) + 1)
      throw InvariantError("line missing its k+1 groups");
    for (int alpha = 1; alpha <= k_ + 1; ++alpha) {
      const auto& subgroups = line.groups[static_cast<std::size_t>(alpha - 1)];
      std::size_t total = 0;
      for (const auto& [m, cs] : subgroups) {
        if (cs.empty()) throw InvariantError("empty subgroup kept alive");
        cs.check_chain();
        if (cs.omega() > static_cast<std::size_t>(k_))
          throw InvariantError("subgroup chain exceeded its k bound");
        for (const Interval& iv : cs.collect()) {
          auto wit = where_.find(iv.id);
          if (wit == where_.end() || wit->second.first.row != u)
            throw InvariantError("interval on the wrong line");
          if (discarded(wit->second.first.col, alpha) ||
              subgroup_of(wit->second.first.col, alpha) != m)
            throw InvariantError("interval in the wrong subgroup");
        }
        total += cs.omega();
      }
      if (total != line.msize[static_cast<std::size_t>(alpha - 1)])
        throw InvariantError("stale group cardinality");
    }
    if (line.c != *std::max_element(line.msize.begin(), line.msize.end()))
      throw InvariantError("stale line maximum");
    ((u & 1) ? odd : even) += line.c;
  }
  if (even != even_total_ || odd != odd_total_) throw InvariantError("stale parity totals");
  for (const auto& [id, loc] : where_) {
    auto lit = lines_.find(loc.first.row);
    if (lit == lines_.end()) throw InvariantError("id on a dropped line");
    std::size_t hits = 0;
    for (int alpha = 1; alpha <= k_ + 1; ++alpha) {
      if (discarded(loc.first.col, alpha)) continue;
      const auto& subgroups = lit->second.groups[static_cast<std::size_t>(alpha - 1)];
      auto sit = subgroups.find(subgroup_of(loc.first.col, alpha));
      if (sit != subgroups.end() && sit->second.contains(id)) ++hits;
    }
    if (hits != static_cast<std::size_t>(k_))
      throw InvariantError("square absent from one of its k groups");
  }
}

}  // namespace dynlabel
