#include "dynlabel/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"
#include "dynlabel/greedy_augment.hpp"
#include "dynlabel/grid_mis.hpp"
#include "dynlabel/line_mis.hpp"
#include "dynlabel/mis_graph.hpp"
#include "dynlabel/ors_mis.hpp"
#include "dynlabel/shift_mis.hpp"

namespace dynlabel {

namespace {

Square to_square(const Rect& r, Coord s) {
  if (r.w != s) throw Error("this algorithm handles unit squares only");
  return Square{r.id, r.x, r.y};
}

class OrsAdapter final : public AnySolver {
 public:
  explicit OrsAdapter(Coord s) : s_(s), core_(s) {}
  void insert(const Rect& r) override { core_.insert(to_square(r, s_)); }
  void erase(Id id) override { core_.erase(id); }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  bool maximal_expected() const override { return true; }
  void check_internal() const override { core_.check_invariants(); }

 private:
  Coord s_;
  OrsMis core_;
};

class GraphAdapter final : public AnySolver {
 public:
  explicit GraphAdapter(Coord s) : s_(s), core_(s) {}
  void insert(const Rect& r) override { core_.insert(to_square(r, s_)); }
  void erase(Id id) override { core_.erase(id); }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  bool maximal_expected() const override { return true; }
  void check_internal() const override { core_.check_invariants(); }

 private:
  Coord s_;
  GraphMis core_;
};

class GridAdapter final : public AnySolver {
 public:
  GridAdapter(Coord s, std::int64_t kappa) : s_(s), core_(s, kappa) {}
  void insert(const Rect& r) override { core_.insert(to_square(r, s_)); }
  void erase(Id id) override { core_.erase(id); }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  void check_internal() const override { core_.check_invariants(); }

 private:
  Coord s_;
  GridMis core_;
};

class ShiftAdapter final : public AnySolver {
 public:
  ShiftAdapter(Coord s, std::int64_t kappa, int k) : s_(s), core_(s, kappa, k) {}
  void insert(const Rect& r) override { core_.insert(to_square(r, s_)); }
  void erase(Id id) override { core_.erase(id); }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  void check_internal() const override { core_.check_invariants(); }

 private:
  Coord s_;
  ShiftMis core_;
};

class LineAdapter final : public AnySolver {
 public:
  explicit LineAdapter(Coord s) : core_(s) {}
  void insert(const Rect& r) override { core_.insert(r); }
  void erase(Id id) override { core_.erase(id); }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  void check_internal() const override { core_.check_invariants(); }

 private:
  LineMis core_;
};

template <class Base>
class AugAdapter final : public AnySolver {
 public:
  template <class... Args>
  explicit AugAdapter(bool full, Coord s, Args&&... args)
      : core_(s, std::forward<Args>(args)...), full_(full) {}
  void insert(const Rect& r) override {
    core_.insert(r);
    if (full_) core_.full_remaximalize();
  }
  void erase(Id id) override {
    core_.erase(id);
    if (full_) core_.full_remaximalize();
  }
  std::size_t solution_size() const override { return core_.solution_size(); }
  std::vector<Id> solution() const override { return core_.solution(); }
  void check_internal() const override { core_.check_invariants(); }

 private:
  Augmented<Base> core_;
  bool full_;
};

// True when `size` satisfies the algorithm's worst-case bound against `opt`,
// in exact integer arithmetic.
bool bound_ok(const std::string& algo, int k, std::size_t size, std::size_t o) {
  if (o == 0) return true;
  if (algo == "line" || algo == "g-line") return 2 * size >= o;          // OPT/2
  if (algo == "grid-k" || algo == "g-grid-k")                            // OPT/(2(1+1/k))
    return 2 * static_cast<std::size_t>(k + 1) * size >= static_cast<std::size_t>(k) * o;
  return 4 * size >= o;  // mis-ors, mis-graph, grid, g-grid: OPT/4 (MIS packing)
}

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<Rect> live_vector(const std::map<Id, Rect>& live) {
  std::vector<Rect> out;
  out.reserve(live.size());
  for (const auto& [id, r] : live) out.push_back(r);
  return out;
}

// The static baseline: construct the algorithm from scratch over the live
// set.  Sequential insertion in id order is each algorithm's natural static
// build; mis-graph uses its batch constructor (sequential would square the
// adjacency scans it already does once).
std::size_t static_rebuild(const RunOptions& opt, Coord s, std::int64_t kappa,
                           const std::vector<Rect>& live) {
  if (opt.algo == "mis-graph") {
    std::vector<Square> sqs;
    sqs.reserve(live.size());
    for (const Rect& r : live) sqs.push_back(to_square(r, s));
    GraphMis fresh(sqs, s);
    return fresh.solution_size();
  }
  RunOptions stat = opt;
  stat.augment_full = false;  // one build, not a remaximalization per item
  std::unique_ptr<AnySolver> fresh = make_solver(stat, s, kappa);
  for (const Rect& r : live) fresh->insert(r);
  return fresh->solution_size();
}

}  // namespace

std::int64_t kappa_for(const Instance& inst, const Trace& trace) {
  Coord s = inst.scale();
  std::int64_t m = 0;
  auto feed = [&](const Rect& r) {
    GridPoint gp = grid_point_of(r.x, r.y, s);
    m = std::max({m, gp.row, gp.col});
  };
  for (const Rect& r : inst.items) feed(r);
  for (const TraceEvent& ev : trace.events)
    if (ev.op == 'I') feed(ev.item);
  return m + 5;  // headroom keeps the warmup scratch shape conflict-free, in frame
}

std::unique_ptr<AnySolver> make_solver(const RunOptions& opt, Coord scale, std::int64_t kappa) {
  const std::string& a = opt.algo;
  if (a == "grid-k" || a == "g-grid-k") {
    if (opt.k < 1) throw Error("the shifting parameter k must be at least 1");
  }
  if (a == "mis-ors") return std::make_unique<OrsAdapter>(scale);
  if (a == "mis-graph") return std::make_unique<GraphAdapter>(scale);
  if (a == "grid") return std::make_unique<GridAdapter>(scale, kappa);
  if (a == "grid-k") return std::make_unique<ShiftAdapter>(scale, kappa, opt.k);
  if (a == "line") return std::make_unique<LineAdapter>(scale);
  if (a == "g-grid")
    return std::make_unique<AugAdapter<GridMis>>(opt.augment_full, scale, kappa);
  if (a == "g-grid-k")
    return std::make_unique<AugAdapter<ShiftMis>>(opt.augment_full, scale, kappa, opt.k);
  if (a == "g-line") return std::make_unique<AugAdapter<LineMis>>(opt.augment_full, scale);
  throw UnknownAlgoError("unknown algorithm '" + a + "'");
}

RunResult run(const Instance& inst, const Trace& trace, const RunOptions& opt) {
  Coord s = inst.scale();
  std::int64_t kappa = kappa_for(inst, trace);
  std::unique_ptr<AnySolver> solver = make_solver(opt, s, kappa);
  std::map<Id, Rect> live;
  for (const Rect& r : inst.items) {
    solver->insert(r);
    live.emplace(r.id, r);
  }
  if (opt.warmup > 0) {
    // Conflict-free scratch shape: its grid cell is past every real center.
    Rect scratch{std::numeric_limits<Id>::max() - 1, (kappa - 2) * s, (kappa - 2) * s, s};
    for (std::size_t w = 0; w < opt.warmup; ++w) {
      solver->insert(scratch);
      solver->erase(scratch.id);
    }
  }

  RunResult res;
  res.algo = opt.algo;
  res.records.reserve(trace.events.size());
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& ev = trace.events[i];
    std::int64_t t0 = now_ns();
    if (ev.op == 'I')
      solver->insert(ev.item);
    else
      solver->erase(ev.item.id);
    std::int64_t t1 = now_ns();
    if (ev.op == 'I')
      live.emplace(ev.item.id, ev.item);
    else
      live.erase(ev.item.id);

    BenchRecord rec;
    rec.step = i;
    rec.op = ev.op;
    rec.solution_size = solver->solution_size();
    rec.update_ns = t1 - t0;
    if (opt.with_opt) {
      ExactResult ex = exact_max_is(live_vector(live), s, opt.oracle);
      rec.opt_size = static_cast<std::size_t>(ex.size);
      rec.ratio = ex.size == 0 ? 1.0
                               : static_cast<double>(rec.solution_size) /
                                     static_cast<double>(ex.size);
    }
    if (opt.recompute_baseline) {
      std::vector<Rect> lv = live_vector(live);
      std::int64_t r0 = now_ns();
      std::size_t sz = static_rebuild(opt, s, kappa, lv);
      std::int64_t r1 = now_ns();
      (void)sz;
      rec.recompute_ns = r1 - r0;
    }
    res.records.push_back(rec);
  }

  double sum = 0.0, sumsq = 0.0, rsum = 0.0;
  for (const BenchRecord& r : res.records) {
    sum += static_cast<double>(r.update_ns);
    sumsq += static_cast<double>(r.update_ns) * static_cast<double>(r.update_ns);
    if (r.recompute_ns) rsum += static_cast<double>(*r.recompute_ns);
  }
  if (!res.records.empty()) {
    double n = static_cast<double>(res.records.size());
    res.mean_update_ns = sum / n;
    double var = sumsq / n - res.mean_update_ns * res.mean_update_ns;
    res.stddev_update_ns = var > 0 ? std::sqrt(var) : 0.0;
    if (opt.recompute_baseline) res.mean_recompute_ns = rsum / n;
  } else if (opt.recompute_baseline) {
    res.mean_recompute_ns = 0.0;
  }
  return res;
}

std::string records_csv(const RunResult& result, const RunOptions& opt) {
  std::string out = "step,op,algo,solution_size,update_time_ns";
  if (opt.with_opt) out += ",opt_size,ratio";
  if (opt.recompute_baseline) out += ",recompute_time_ns";
  out += '\n';
  char buf[64];
  for (const BenchRecord& r : result.records) {
    out += std::to_string(r.step);
    out += ',';
    out += r.op;
    out += ',';
    out += result.algo;
    out += ',';
    out += std::to_string(r.solution_size);
    out += ',';
    out += std::to_string(r.update_ns);
    if (opt.with_opt) {
      out += ',';
      out += std::to_string(r.opt_size.value_or(0));
      std::snprintf(buf, sizeof buf, ",%.6f", r.ratio.value_or(0.0));
      out += buf;
    }
    if (opt.recompute_baseline) {
      out += ',';
      out += std::to_string(r.recompute_ns.value_or(0));
    }
    out += '\n';
  }
  std::snprintf(buf, sizeof buf, "# mean_update_ns,%.1f\n", result.mean_update_ns);
  out += buf;
  std::snprintf(buf, sizeof buf, "# stddev_update_ns,%.1f\n", result.stddev_update_ns);
  out += buf;
  if (result.mean_recompute_ns) {
    std::snprintf(buf, sizeof buf, "# mean_recompute_ns,%.1f\n", *result.mean_recompute_ns);
    out += buf;
  }
  return out;
}

VerifyResult verify(const Instance& inst, const Trace& trace, const RunOptions& opt) {
  std::unique_ptr<AnySolver> solver = make_solver(opt, inst.scale(), kappa_for(inst, trace));
  for (const Rect& r : inst.items) solver->insert(r);
  return verify_with(*solver, inst, trace, opt);
}

VerifyResult verify_with(AnySolver& solver, const Instance& inst, const Trace& trace,
                         const RunOptions& opt) {
  Coord s = inst.scale();
  std::map<Id, Rect> live;
  for (const Rect& r : inst.items) live.emplace(r.id, r);
  VerifyResult vr;
  vr.sizes.reserve(trace.events.size());
  auto fail = [&](std::size_t step, const std::string& why) {
    vr.ok = false;
    vr.steps = step;
    vr.message = "step " + std::to_string(step) + ": " + why;
    return vr;
  };
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& ev = trace.events[i];
    try {
      if (ev.op == 'I') {
        solver.insert(ev.item);
        live.emplace(ev.item.id, ev.item);
      } else {
        solver.erase(ev.item.id);
        live.erase(ev.item.id);
      }
      solver.check_internal();
    } catch (const InvariantError& e) {
      return fail(i, e.what());
    }
    std::vector<Id> sol = solver.solution();
    vr.sizes.push_back(solver.solution_size());
    if (sol.size() != solver.solution_size()) return fail(i, "reported size mismatch");
    std::vector<Rect> lv = live_vector(live);
    IsCheck chk = verify_is(lv, sol, s);
    if (!chk.independent) return fail(i, "solution not independent");
    if (solver.maximal_expected() && !chk.maximal) return fail(i, "solution not maximal");
    if (opt.with_opt) {
      ExactResult ex = exact_max_is(lv, s, opt.oracle);
      if (!bound_ok(opt.algo, opt.k, sol.size(), ex.size))
        return fail(i, "approximation bound violated");
    }
  }
  vr.ok = true;
  vr.steps = trace.events.size();
  vr.message = "OK, " + std::to_string(vr.steps) + " steps";
  return vr;
}

std::map<std::string, std::string> plot_series(const std::vector<std::string>& csv_texts) {
  std::map<std::string, std::string> out;
  for (const std::string& text : csv_texts) {
    std::size_t start = 0;
    bool saw_header = false;
    std::string columns;
    while (start < text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
      start = nl == std::string::npos ? text.size() : nl + 1;
      if (line.empty()) continue;
      if (line[0] == '#') continue;  // summary rows
      if (!saw_header) {
        if (line.rfind("step,op,algo,", 0) != 0)
          throw FormatError("records csv: bad header row");
        saw_header = true;
        columns = "step,op" + line.substr(std::string("step,op,algo").size());
        continue;
      }
      // fields: step,op,algo,rest... -> "step op rest..." grouped by algo
      std::size_t c1 = line.find(',');
      std::size_t c2 = line.find(',', c1 + 1);
      std::size_t c3 = line.find(',', c2 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
        throw FormatError("records csv: short data row");
      std::string algo = line.substr(c2 + 1, c3 - c2 - 1);
      std::string& dat = out[algo];
      if (dat.empty()) {
        std::string head = "# " + columns;
        for (char& c : head)
          if (c == ',') c = ' ';
        dat = head + '\n';
      }
      std::string row = line.substr(0, c2) + line.substr(c3);
      for (char& c : row)
        if (c == ',') c = ' ';
      dat += row + '\n';
    }
    if (!saw_header && !text.empty()) throw FormatError("records csv: missing header row");
  }
  return out;
}

}  // namespace dynlabel
