#ifndef DYNLABEL_RUNNER_HPP
#define DYNLABEL_RUNNER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/instance.hpp"
#include "dynlabel/oracle.hpp"

namespace dynlabel {

// Replay settings for one (trace, algorithm) run.
struct RunOptions {
  std::string algo = "mis-ors";  // mis-ors | mis-graph | grid | grid-k | line
                                 // | g-grid | g-grid-k | g-line
  int k = 2;                     // shifting parameter for grid-k / g-grid-k
  bool augment_full = false;     // g-*: full remaximalization after every update
  bool with_opt = false;         // per-step exact oracle column + bound checks
  bool recompute_baseline = false;  // per-step static-rebuild timing column
  std::size_t warmup = 0;           // untimed scratch update cycles before replay
  ExactOptions oracle;              // knobs for the with_opt solver
};

// Uniform dynamic-solver surface the harness replays against.
class AnySolver {
 public:
  virtual ~AnySolver() = default;
  virtual void insert(const Rect& r) = 0;
  virtual void erase(Id id) = 0;
  virtual std::size_t solution_size() const = 0;
  virtual std::vector<Id> solution() const = 0;  // sorted by id
  virtual bool maximal_expected() const { return false; }
  virtual void check_internal() const = 0;  // module invariants; InvariantError
};

// Frame bound covering every center in the instance and the trace inserts,
// with headroom for the warmup scratch shape.
std::int64_t kappa_for(const Instance& inst, const Trace& trace);

// UnknownAlgoError for names outside the list above; Error for bad k.
std::unique_ptr<AnySolver> make_solver(const RunOptions& opt, Coord scale, std::int64_t kappa);

struct BenchRecord {
  std::size_t step = 0;
  char op = 'I';
  std::size_t solution_size = 0;
  std::int64_t update_ns = 0;
  std::optional<std::size_t> opt_size;
  std::optional<double> ratio;
  std::optional<std::int64_t> recompute_ns;
};

struct RunResult {
  std::string algo;
  std::vector<BenchRecord> records;
  double mean_update_ns = 0.0;
  double stddev_update_ns = 0.0;
  std::optional<double> mean_recompute_ns;
};

// Replays the trace on a fresh solver pre-loaded with the instance; times the
// update call only.  Oracle and baseline work happen outside the timed span.
RunResult run(const Instance& inst, const Trace& trace, const RunOptions& opt);

// `step,op,algo,solution_size,update_time_ns[,opt_size,ratio][,recompute_time_ns]`
// plus `# mean/stddev` summary lines.
std::string records_csv(const RunResult& result, const RunOptions& opt);

struct VerifyResult {
  bool ok = false;
  std::size_t steps = 0;  // steps completed, or the failing step index
  std::string message;
  std::vector<std::size_t> sizes;  // per-step solution sizes (run parity)
};

// Replays asserting, after every step: module invariants, independence,
// maximality where the algorithm promises it, reported-size consistency, and
// (with_opt) the algorithm's approximation bound against the exact oracle.
VerifyResult verify(const Instance& inst, const Trace& trace, const RunOptions& opt);
// Injection point for tests: `solver` must already hold the instance.
VerifyResult verify_with(AnySolver& solver, const Instance& inst, const Trace& trace,
                         const RunOptions& opt);

// Groups record CSVs into per-algo whitespace-separated series keyed by algo.
std::map<std::string, std::string> plot_series(const std::vector<std::string>& csv_texts);

}  // namespace dynlabel

#endif
