#include "dynlabel/oracle.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dynlabel/errors.hpp"

namespace dynlabel {

IsCheck verify_is(const std::vector<Rect>& stored, const std::vector<Id>& solution, Coord scale) {
  IsCheck out;
  std::unordered_map<Id, std::size_t> index;
  index.reserve(stored.size());
  for (std::size_t i = 0; i < stored.size(); ++i) index.emplace(stored[i].id, i);

  std::vector<std::size_t> sol;
  std::unordered_set<Id> sol_ids;
  sol.reserve(solution.size());
  for (Id id : solution) {
    auto it = index.find(id);
    if (it == index.end()) {
      out.reason = "solution references unknown id " + std::to_string(id);
      return out;
    }
    if (!sol_ids.insert(id).second) {
      out.reason = "solution repeats id " + std::to_string(id);
      return out;
    }
    sol.push_back(it->second);
  }

  for (std::size_t i = 0; i < sol.size(); ++i)
    for (std::size_t j = i + 1; j < sol.size(); ++j)
      if (intersects_rect(stored[sol[i]], stored[sol[j]], scale)) {
        std::ostringstream os;
        os << "members " << stored[sol[i]].id << " and " << stored[sol[j]].id << " intersect";
        out.reason = os.str();
        return out;
      }
  out.independent = true;

  for (const Rect& r : stored) {
    if (sol_ids.count(r.id)) continue;
    bool blocked = false;
    for (std::size_t k : sol)
      if (intersects_rect(r, stored[k], scale)) {
        blocked = true;
        break;
      }
    if (!blocked) {
      out.reason = "stored shape " + std::to_string(r.id) + " is independent of the whole solution";
      return out;
    }
  }
  out.maximal = true;
  return out;
}

std::vector<Interval> greedy_interval_chain(std::vector<Interval> items) {
  std::sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.id < b.id;
  });
  std::vector<Interval> chain;
  for (const Interval& iv : items)
    if (chain.empty() || iv.lo >= chain.back().hi) chain.push_back(iv);
  return chain;
}

ExactResult exact_interval_mis(std::vector<Interval> items) {
  ExactResult out;
  for (const Interval& iv : greedy_interval_chain(std::move(items))) out.members.push_back(iv.id);
  std::sort(out.members.begin(), out.members.end());
  out.size = out.members.size();
  return out;
}

namespace {

using Tag = std::int64_t;  // [0, n): input vertex; >= n: fold product

// Induced subproblem: local indices 0..nv-1 with clean adjacency lists and a
// tag identifying each vertex to the enclosing frame.
struct Sub {
  std::vector<Tag> tag;
  std::vector<std::vector<int>> adj;

  std::size_t nv() const { return tag.size(); }
};

// Branch-and-bound engine over one immutable input; search subproblems are
// explicit graph copies so that folding can rewrite them freely.
class ExactSolver {
 public:
  ExactSolver(const std::vector<Rect>& items, Coord scale, const ExactOptions& opt)
      : items_(items), scale_(scale), budget_(opt.node_budget) {
    n_ = static_cast<int>(items_.size());
    std::sort(items_.begin(), items_.end(),
              [](const Rect& a, const Rect& b) { return a.id < b.id; });
    line_.resize(n_);
    lo2_.resize(n_);
    hi2_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      line_[i] = line_of(items_[i], scale_);
      DoubledSpan sp = doubled_span(items_[i]);
      lo2_[i] = sp.lo;
      hi2_[i] = sp.hi;
    }
    build_adjacency();
    cover_rank_.resize(n_);
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (line_[a] != line_[b]) return line_[a] < line_[b];
      if (lo2_[a] != lo2_[b]) return lo2_[a] < lo2_[b];
      return items_[a].id < items_[b].id;
    });
    for (int r = 0; r < n_; ++r) cover_rank_[order[r]] = r;
    next_tag_ = n_;
    build_seeds(opt.hint);
  }

  ExactResult run() {
    Sub root;
    std::vector<int> back(n_, -1);
    for (int i = 0; i < n_; ++i)
      if (!dominated_[i]) {
        back[i] = static_cast<int>(root.tag.size());
        root.tag.push_back(i);
      }
    root.adj.resize(root.nv());
    for (int i = 0; i < n_; ++i) {
      if (back[i] < 0) continue;
      for (int w : adj_[i])
        if (back[w] >= 0) root.adj[back[i]].push_back(back[w]);
    }
    std::vector<Tag> members = solve(std::move(root), /*use_seeds=*/true, 0);
    ExactResult out;
    out.size = members.size();
    out.members.reserve(members.size());
    for (Tag t : members) out.members.push_back(items_[static_cast<int>(t)].id);
    std::sort(out.members.begin(), out.members.end());
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  std::vector<Rect> items_;
  Coord scale_;
  int n_ = 0;
  std::vector<std::vector<int>> adj_;  // input graph, domination survivors only
  std::vector<char> dominated_;
  std::vector<std::int64_t> line_;
  std::vector<Coord> lo2_, hi2_;
  std::vector<int> cover_rank_;
  std::vector<std::vector<Tag>> seeds_;  // independent sets of input vertices

  struct FoldRec {
    Tag z, v, u, w;  // z replaces {v,u,w}; z chosen -> {u,w}, else -> {v}
  };
  std::vector<FoldRec> folds_;
  Tag next_tag_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;

  void build_adjacency() {
    adj_.assign(n_, {});
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (intersects_rect(items_[i], items_[j], scale_)) {
          adj_[i].push_back(j);
          adj_[j].push_back(i);
        }
    // Domination: drop v whenever some neighbour u has N[u] subset of N[v].
    // Any maximum solution using v can swap v for u, so G - v keeps the size.
    dominated_.assign(n_, 0);
    bool changed = true;
    int passes = 0;
    std::vector<int> live_deg(n_, 0);
    while (changed && passes < 4) {
      changed = false;
      ++passes;
      for (int u = 0; u < n_; ++u) {
        live_deg[u] = 0;
        for (int w : adj_[u])
          if (!dominated_[w]) ++live_deg[u];
      }
      for (int u = 0; u < n_; ++u) {
        if (dominated_[u]) continue;
        for (int v : adj_[u]) {
          if (dominated_[v] || dominated_[u]) continue;
          if (live_deg[u] > live_deg[v]) continue;  // stale-high is a safe skip
          if (closed_subset(u, v)) {
            dominated_[v] = 1;
            changed = true;
          }
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      auto& a = adj_[i];
      a.erase(std::remove_if(a.begin(), a.end(), [&](int w) { return dominated_[w] != 0; }),
              a.end());
    }
  }

  // Is the live part of N[u] \ {v} contained in N[v]?  u and v are adjacent,
  // adjacency lists are sorted, so one merge scan suffices.
  bool closed_subset(int u, int v) const {
    const auto& au = adj_[u];
    const auto& av = adj_[v];
    std::size_t j = 0;
    for (int w : au) {
      if (w == v || dominated_[w]) continue;
      while (j < av.size() && (av[j] < w || dominated_[av[j]])) ++j;
      if (j >= av.size() || av[j] != w) return false;
      ++j;
    }
    return true;
  }

  void build_seeds(const std::vector<Id>& hint) {
    std::unordered_map<Id, int> by_id;
    for (int i = 0; i < n_; ++i) by_id.emplace(items_[i].id, i);
    std::vector<Tag> from_hint;
    {
      std::unordered_set<int> hint_set;
      for (Id id : hint) {
        auto it = by_id.find(id);
        if (it != by_id.end() && !dominated_[it->second]) hint_set.insert(it->second);
      }
      // Keep only pairwise-independent hint members (defensive: a stale hint
      // must never break exactness, only weaken the seed).
      for (int i = 0; i < n_; ++i) {
        if (!hint_set.count(i)) continue;
        bool ok = true;
        for (int w : adj_[i])
          if (hint_set.count(w)) {
            ok = false;
            break;
          }
        if (ok) from_hint.push_back(i);
      }
    }
    if (!from_hint.empty()) seeds_.push_back(std::move(from_hint));
    // Per-parity unions of stabbing-line chains are independent sets outright.
    for (int parity = 0; parity < 2; ++parity) {
      std::unordered_map<std::int64_t, std::vector<Interval>> per_line;
      for (int i = 0; i < n_; ++i) {
        if (dominated_[i]) continue;
        std::int64_t l = line_[i];
        if (((l % 2) + 2) % 2 != parity) continue;
        per_line[l].push_back(Interval{static_cast<Id>(i), lo2_[i], hi2_[i]});
      }
      std::vector<Tag> seed;
      for (auto& [l, ivs] : per_line)
        for (const Interval& iv : greedy_interval_chain(std::move(ivs)))
          seed.push_back(static_cast<Tag>(iv.id));
      std::sort(seed.begin(), seed.end());
      if (!seed.empty()) seeds_.push_back(std::move(seed));
    }
  }

  // ---- reductions ----

  // Exhaustive take/fold/dominate cascade.  Forced picks land in `taken` as
  // tags, fold records go on folds_, and `s` is compacted to the remainder.
  // Adjacency lists stay ascending throughout: entry lists are sorted and a
  // fold product always gets the largest index so far.
  void reduce(Sub& s, std::vector<Tag>& taken) {
    std::vector<char> alive(s.nv(), 1);
    std::vector<int> deg(s.nv(), 0);
    for (std::size_t v = 0; v < s.nv(); ++v) deg[v] = static_cast<int>(s.adj[v].size());

    auto kill = [&](int v) {
      alive[v] = 0;
      for (int w : s.adj[v])
        if (alive[w]) --deg[w];
    };
    auto live_neighbours = [&](int v) {
      std::vector<int> out;
      for (int w : s.adj[v])
        if (alive[w]) out.push_back(w);
      return out;
    };
    auto has_edge = [&](int a, int b) {
      const auto& list = s.adj[a].size() <= s.adj[b].size() ? s.adj[a] : s.adj[b];
      int want = s.adj[a].size() <= s.adj[b].size() ? b : a;
      for (int w : list)
        if (w == want) return true;
      return false;
    };
    // N[u] subset of N[v] over live vertices (u, v adjacent): merge scan.
    auto dominates = [&](int u, int v) {
      const auto& au = s.adj[u];
      const auto& av = s.adj[v];
      std::size_t j = 0;
      for (int w : au) {
        if (w == v || !alive[w]) continue;
        while (j < av.size() && (av[j] < w || !alive[av[j]])) ++j;
        if (j >= av.size() || av[j] != w) return false;
        ++j;
      }
      return true;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < s.nv(); ++v) {  // nv() grows as folds append
        if (!alive[v]) continue;
        int d = deg[v];
        if (d == 0) {
          taken.push_back(s.tag[v]);
          alive[v] = 0;
          changed = true;
        } else if (d == 1) {
          taken.push_back(s.tag[v]);
          int nb = live_neighbours(static_cast<int>(v))[0];
          alive[v] = 0;
          kill(nb);
          changed = true;
        } else if (d == 2) {
          auto nb = live_neighbours(static_cast<int>(v));
          int u = nb[0], w = nb[1];
          if (has_edge(u, w)) {
            // Triangle: v is simplicial, taking it is optimal.
            taken.push_back(s.tag[v]);
            kill(static_cast<int>(v));
            alive[v] = 0;
            kill(u);
            kill(w);
          } else {
            // Fold {v,u,w} into one new vertex z: alpha grows by exactly one,
            // z in the solution means take u and w, z out means take v.
            std::vector<int> zn;
            for (int x : s.adj[u])
              if (alive[x] && x != static_cast<int>(v)) zn.push_back(x);
            for (int x : s.adj[w])
              if (alive[x] && x != static_cast<int>(v)) zn.push_back(x);
            std::sort(zn.begin(), zn.end());
            zn.erase(std::unique(zn.begin(), zn.end()), zn.end());
            Tag ztag = next_tag_++;
            folds_.push_back(FoldRec{ztag, s.tag[v], s.tag[u], s.tag[w]});
            alive[v] = 0;
            --deg[u];
            --deg[w];  // drop v's contribution before killing u and w
            kill(u);
            kill(w);
            int z = static_cast<int>(s.nv());
            s.tag.push_back(ztag);
            s.adj.push_back(zn);
            alive.push_back(1);
            deg.push_back(static_cast<int>(zn.size()));
            for (int x : zn) {
              s.adj[x].push_back(z);
              ++deg[x];
            }
          }
          changed = true;
        } else {
          if (d <= 8) {
            // Simplicial vertex: live neighbourhood is a clique.
            auto nb = live_neighbours(static_cast<int>(v));
            bool clique = true;
            for (std::size_t a = 0; a < nb.size() && clique; ++a)
              for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (!has_edge(nb[a], nb[b])) {
                  clique = false;
                  break;
                }
            if (clique) {
              taken.push_back(s.tag[v]);
              alive[v] = 0;
              for (int x : nb) kill(x);
              changed = true;
              continue;
            }
          }
          if (d <= 32) {
            // Domination: any neighbour whose closed neighbourhood sits
            // inside ours makes us redundant.
            for (int u : s.adj[v]) {
              if (!alive[u] || deg[u] > d) continue;
              if (dominates(u, static_cast<int>(v))) {
                kill(static_cast<int>(v));
                changed = true;
                break;
              }
            }
          }
        }
      }
    }

    // Compact the survivors into a fresh Sub.
    std::vector<int> renum(s.nv(), -1);
    Sub out;
    for (std::size_t v = 0; v < s.nv(); ++v)
      if (alive[v]) {
        renum[v] = static_cast<int>(out.tag.size());
        out.tag.push_back(s.tag[v]);
      }
    out.adj.resize(out.nv());
    for (std::size_t v = 0; v < s.nv(); ++v) {
      if (!alive[v]) continue;
      auto& row = out.adj[renum[v]];
      for (int w : s.adj[v])
        if (alive[w]) row.push_back(renum[w]);
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    s = std::move(out);
  }

  // Rewrites `picked` through every fold record above `mark` (newest first)
  // and truncates the record stack back to `mark`.
  void expand(std::vector<Tag>& picked, std::size_t mark) {
    if (folds_.size() == mark) return;
    std::unordered_set<Tag> set(picked.begin(), picked.end());
    for (std::size_t i = folds_.size(); i-- > mark;) {
      const FoldRec& r = folds_[i];
      if (set.erase(r.z)) {
        set.insert(r.u);
        set.insert(r.w);
      } else {
        set.insert(r.v);
      }
    }
    folds_.resize(mark);
    picked.assign(set.begin(), set.end());
    std::sort(picked.begin(), picked.end());
  }

  // ---- bounds and incumbents ----

  // Clique partition: point-stabbing cliques per line for input vertices,
  // singletons for fold products.  Cliques on adjacent lines that conflict
  // all-pairs are then merged pairwise (their union is again a clique), which
  // is where purely per-line reasoning overshoots on dense clusters.
  std::size_t cover(const Sub& s) const {
    std::vector<int> real;
    std::size_t virt = 0;
    for (Tag t : s.tag) {
      if (t < n_)
        real.push_back(static_cast<int>(t));
      else
        ++virt;
    }
    std::sort(real.begin(), real.end(),
              [&](int a, int b) { return cover_rank_[a] < cover_rank_[b]; });
    struct Clique {
      std::int64_t line;
      Coord max_lo2, min_hi2;  // doubled x-spans
      Coord min_y, max_y;
      bool merged = false;
    };
    std::vector<Clique> cliques;
    for (int v : real) {
      Coord y = items_[v].y;
      if (cliques.empty() || line_[v] != cliques.back().line || lo2_[v] >= cliques.back().min_hi2) {
        cliques.push_back({line_[v], lo2_[v], hi2_[v], y, y, false});
      } else {
        Clique& c = cliques.back();
        c.max_lo2 = lo2_[v];  // input is lo2-ascending within a line
        c.min_hi2 = std::min(c.min_hi2, hi2_[v]);
        c.min_y = std::min(c.min_y, y);
        c.max_y = std::max(c.max_y, y);
      }
    }
    // Cliques arrive grouped by line in ascending (line, lo2) order.  Greedy
    // matching between consecutive lines; each merge removes one clique.
    std::size_t merges = 0;
    auto biclique = [&](const Clique& a, const Clique& b) {
      return a.max_lo2 < b.min_hi2 && b.max_lo2 < a.min_hi2 &&
             a.max_y - b.min_y < scale_ && b.max_y - a.min_y < scale_;
    };
    std::size_t line_start = 0;
    while (line_start < cliques.size()) {
      std::size_t line_end = line_start;
      while (line_end < cliques.size() && cliques[line_end].line == cliques[line_start].line)
        ++line_end;
      std::size_t next_end = line_end;
      bool adjacent = line_end < cliques.size() &&
                      cliques[line_end].line == cliques[line_start].line + 1;
      if (adjacent) {
        while (next_end < cliques.size() && cliques[next_end].line == cliques[line_end].line)
          ++next_end;
        std::size_t j = line_end;
        for (std::size_t i = line_start; i < line_end; ++i) {
          if (cliques[i].merged) continue;
          // Skip candidates entirely left of this clique's x-window; they
          // stay left of every later clique on this line too.
          while (j < next_end && cliques[j].min_hi2 <= cliques[i].max_lo2) ++j;
          for (std::size_t jj = j; jj < next_end && cliques[jj].max_lo2 < cliques[i].min_hi2;
               ++jj) {
            if (cliques[jj].merged) continue;
            if (biclique(cliques[i], cliques[jj])) {
              cliques[i].merged = cliques[jj].merged = true;
              ++merges;
              break;
            }
          }
        }
      }
      line_start = line_end;
    }
    return cliques.size() - merges + virt;
  }

  // Min-degree greedy independent set, deterministic via (degree, tag) order.
  std::vector<Tag> greedy(const Sub& s) const {
    std::vector<int> deg(s.nv());
    std::vector<char> alive(s.nv(), 1);
    using Entry = std::pair<int, std::pair<Tag, int>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> q;
    for (std::size_t v = 0; v < s.nv(); ++v) {
      deg[v] = static_cast<int>(s.adj[v].size());
      q.push({deg[v], {s.tag[v], static_cast<int>(v)}});
    }
    std::vector<Tag> out;
    while (!q.empty()) {
      auto [d, key] = q.top();
      q.pop();
      int v = key.second;
      if (!alive[v] || deg[v] != d) continue;
      out.push_back(s.tag[v]);
      alive[v] = 0;
      for (int w : s.adj[v]) {
        if (!alive[w]) continue;
        alive[w] = 0;
        for (int x : s.adj[w])
          if (alive[x]) q.push({--deg[x], {s.tag[x], x}});
      }
    }
    return out;
  }

  std::vector<Sub> split_components(const Sub& s) const {
    std::vector<Sub> comps;
    std::vector<int> comp_of(s.nv(), -1);
    int nc = 0;
    for (std::size_t start = 0; start < s.nv(); ++start) {
      if (comp_of[start] >= 0) continue;
      std::vector<int> bfs{static_cast<int>(start)};
      comp_of[start] = nc;
      for (std::size_t head = 0; head < bfs.size(); ++head)
        for (int w : s.adj[bfs[head]])
          if (comp_of[w] < 0) {
            comp_of[w] = nc;
            bfs.push_back(w);
          }
      ++nc;
    }
    if (nc == 1) return {};  // caller keeps s intact
    comps.resize(nc);
    std::vector<int> renum(s.nv(), -1);
    for (std::size_t v = 0; v < s.nv(); ++v) {
      Sub& c = comps[comp_of[v]];
      renum[v] = static_cast<int>(c.tag.size());
      c.tag.push_back(s.tag[v]);
      c.adj.emplace_back();
    }
    for (std::size_t v = 0; v < s.nv(); ++v)
      for (int w : s.adj[v]) comps[comp_of[v]].adj[renum[v]].push_back(renum[w]);
    return comps;
  }

  // Induced subgraph on the local indices NOT listed in `drop` (sorted).
  Sub minus(const Sub& s, const std::vector<int>& drop) const {
    std::vector<char> dead(s.nv(), 0);
    for (int v : drop) dead[v] = 1;
    Sub out;
    std::vector<int> renum(s.nv(), -1);
    for (std::size_t v = 0; v < s.nv(); ++v)
      if (!dead[v]) {
        renum[v] = static_cast<int>(out.tag.size());
        out.tag.push_back(s.tag[v]);
      }
    out.adj.resize(out.nv());
    for (std::size_t v = 0; v < s.nv(); ++v) {
      if (dead[v]) continue;
      for (int w : s.adj[v])
        if (!dead[w]) out.adj[renum[v]].push_back(renum[w]);
    }
    return out;
  }

  // ---- search ----

  // Independent set of `s` in entry tags.  Guaranteed maximum whenever
  // alpha(s) > need; when alpha(s) <= need the caller is about to discard the
  // result anyway, so any valid set may come back.
  std::vector<Tag> solve(Sub s, bool use_seeds, std::size_t need) {
    ++nodes_;
    if (budget_ && nodes_ > budget_) {
      std::ostringstream os;
      os << "exact solver search budget exceeded (" << budget_ << " nodes)";
      throw CapExceededError(os.str());
    }
    std::size_t mark = folds_.size();
    std::vector<Tag> picked;
    reduce(s, picked);
    if (s.nv() != 0) {
      std::size_t bank = picked.size() + (folds_.size() - mark);
      std::vector<Sub> comps = split_components(s);
      if (comps.empty()) {
        std::size_t sub_need = need > bank ? need - bank : 0;
        std::vector<Tag> part = solve_component(s, use_seeds, sub_need);
        picked.insert(picked.end(), part.begin(), part.end());
      } else {
        // Components must each be solved outright: a threshold cannot be
        // split among independent parts.
        for (Sub& c : comps) {
          std::vector<Tag> part = solve_component(c, use_seeds, 0);
          picked.insert(picked.end(), part.begin(), part.end());
        }
      }
    }
    expand(picked, mark);
    return picked;
  }

  // `c` is connected and irreducible: bound, then branch on max degree.
  std::vector<Tag> solve_component(const Sub& c, bool use_seeds, std::size_t need) {
    std::vector<Tag> best = greedy(c);
    if (use_seeds) {
      std::unordered_set<Tag> here(c.tag.begin(), c.tag.end());
      for (const auto& seed : seeds_) {
        std::vector<Tag> filtered;
        for (Tag t : seed)
          if (here.count(t)) filtered.push_back(t);
        if (filtered.size() > best.size()) best = std::move(filtered);
      }
    }
    std::size_t floor_size = std::max(best.size(), need);
    std::size_t ub = cover(c);
    if (ub <= floor_size) return best;

    int pivot = 0;
    std::size_t pivot_deg = 0;
    for (std::size_t v = 0; v < c.nv(); ++v) {
      std::size_t d = c.adj[v].size();
      if (d > pivot_deg || (d == pivot_deg && c.tag[v] < c.tag[pivot])) {
        pivot = static_cast<int>(v);
        pivot_deg = d;
      }
    }

    // Take the pivot: drop its closed neighbourhood.
    std::vector<int> closed = c.adj[pivot];
    closed.push_back(pivot);
    std::sort(closed.begin(), closed.end());
    Sub take = minus(c, closed);
    if (cover(take) + 1 > floor_size) {
      std::vector<Tag> cand = solve(std::move(take), false, floor_size - 1);
      cand.push_back(c.tag[pivot]);
      if (cand.size() > best.size()) best = std::move(cand);
      floor_size = std::max(floor_size, best.size());
    }
    // Leave the pivot out.
    if (ub > floor_size) {
      Sub skip = minus(c, {pivot});
      if (cover(skip) > floor_size) {
        std::vector<Tag> cand = solve(std::move(skip), false, floor_size);
        if (cand.size() > best.size()) best = std::move(cand);
      }
    }
    return best;
  }
};

}  // namespace

ExactResult exact_max_is(const std::vector<Rect>& items, Coord scale, const ExactOptions& opt) {
  if (items.size() > opt.cap) {
    std::ostringstream os;
    os << "exact solver cap exceeded: " << items.size() << " items, cap " << opt.cap;
    throw CapExceededError(os.str());
  }
  if (items.empty()) return {};
  ExactSolver solver(items, scale, opt);
  return solver.run();
}

}  // namespace dynlabel
