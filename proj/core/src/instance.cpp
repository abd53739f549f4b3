#include "dynlabel/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "dynlabel/errors.hpp"

namespace dynlabel {

namespace {

double unit_open(std::mt19937_64& rng) {  // [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Center sampler for one GenSpec.  Consumption per draw is fixed (2 uniforms,
// or 4 for gaussian, plus 1 component coin for stream draws), so replaying
// the instance draws leaves the stream exactly where trace events continue.
class Sampler {
 public:
  Sampler(const GenSpec& spec, std::mt19937_64& rng) : spec_(spec), rng_(rng) {
    if (spec.model == GenSpec::Model::kGaussian)
      for (auto& m : means_)
        m = {unit_open(rng_) * spec.frame_w, unit_open(rng_) * spec.frame_h};
  }

  // Instance draw i of n: the mixture component comes from the index quota
  // (exactly 70% / 20% / 10%, rounded), not a coin, so counts are exact.
  std::pair<Coord, Coord> quota_center(std::size_t i, std::size_t n, Coord s) {
    return center(quota_component(i, n), s);
  }

  // Open-ended stream draw (trace insertions): weighted component coin.
  std::pair<Coord, Coord> stream_center(Coord s) {
    int comp = 0;
    if (spec_.model == GenSpec::Model::kGaussian) {
      double u = unit_open(rng_);
      comp = u < 0.7 ? 0 : (u < 0.9 ? 1 : 2);
    }
    return center(comp, s);
  }

 private:
  static int quota_component(std::size_t i, std::size_t n) {
    std::size_t n0 = static_cast<std::size_t>(std::llround(0.7 * static_cast<double>(n)));
    std::size_t n1 = static_cast<std::size_t>(std::llround(0.2 * static_cast<double>(n)));
    if (n0 + n1 > n) n1 = n - n0;
    return i < n0 ? 0 : (i < n0 + n1 ? 1 : 2);
  }

  double normal(double mean, double sigma) {
    double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = unit_open(rng_);
    return mean + sigma * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * std::numbers::pi * u2);
  }

  std::pair<Coord, Coord> center(int comp, Coord s) {
    double px, py;
    if (spec_.model == GenSpec::Model::kUniform) {
      px = unit_open(rng_) * spec_.frame_w;
      py = unit_open(rng_) * spec_.frame_h;
    } else {
      px = normal(means_[comp].first, 100.0);
      py = normal(means_[comp].second, 100.0);
      px = std::clamp(px, 0.0, spec_.frame_w);
      py = std::clamp(py, 0.0, spec_.frame_h);
    }
    double units = static_cast<double>(s) / spec_.square_px;
    return {static_cast<Coord>(std::llround(px * units)),
            static_cast<Coord>(std::llround(py * units))};
  }

  const GenSpec& spec_;
  std::mt19937_64& rng_;
  std::array<std::pair<double, double>, 3> means_{};
};

void check_scale_digits(int p) {
  if (p < 0 || p > 6) throw FormatError("scale must be between 0 and 6 decimal digits");
}

}  // namespace

Instance generate(const GenSpec& spec, int scale_digits,
                  std::array<std::size_t, 3>* component_counts) {
  check_scale_digits(scale_digits);
  Instance inst;
  inst.scale_digits = scale_digits;
  Coord s = inst.scale();
  std::mt19937_64 rng(spec.seed);
  Sampler sampler(spec, rng);
  if (component_counts) component_counts->fill(0);
  inst.items.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    auto [x, y] = sampler.quota_center(i, spec.n, s);
    inst.items.push_back(Rect{static_cast<Id>(i), x, y, s});
    if (component_counts && spec.model == GenSpec::Model::kGaussian) {
      std::size_t n0 = static_cast<std::size_t>(std::llround(0.7 * static_cast<double>(spec.n)));
      std::size_t n1 = static_cast<std::size_t>(std::llround(0.2 * static_cast<double>(spec.n)));
      if (n0 + n1 > spec.n) n1 = spec.n - n0;
      (*component_counts)[i < n0 ? 0 : (i < n0 + n1 ? 1 : 2)] += 1;
    } else if (component_counts) {
      (*component_counts)[0] += 1;
    }
  }
  return inst;
}

Trace make_trace(const GenSpec& spec, int scale_digits, TraceModel model, std::size_t N) {
  check_scale_digits(scale_digits);
  if (model == TraceModel::kDeleteOnly && N > spec.n)
    throw InfeasibleTraceError("deletion-only trace longer than the instance");
  Coord s = pow10_scale(scale_digits);
  std::mt19937_64 rng(spec.seed);
  Sampler sampler(spec, rng);
  std::vector<Id> live;
  live.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    (void)sampler.quota_center(i, spec.n, s);  // burn the instance draws
    live.push_back(static_cast<Id>(i));
  }
  Trace trace;
  trace.events.reserve(N);
  Id next = static_cast<Id>(spec.n);
  for (std::size_t step = 0; step < N; ++step) {
    bool ins = model == TraceModel::kInsertOnly;
    if (model == TraceModel::kMixed) {
      ins = rng() % 2 == 0;
      if (live.empty()) ins = true;  // nothing to delete: fall back to insert
    }
    if (ins) {
      auto [x, y] = sampler.stream_center(s);
      trace.events.push_back(TraceEvent{'I', Rect{next, x, y, s}});
      live.push_back(next++);
    } else {
      std::size_t at = rng() % live.size();
      Id id = live[at];
      live[at] = live.back();
      live.pop_back();
      trace.events.push_back(TraceEvent{'D', Rect{id, 0, 0, 0}});
    }
  }
  return trace;
}

Trace make_trace(const Instance& inst, TraceModel model, std::size_t N, std::uint64_t seed) {
  if (model != TraceModel::kDeleteOnly)
    throw InfeasibleTraceError(
        "a file-loaded instance has no generative model to sample insertions from");
  if (N > inst.items.size())
    throw InfeasibleTraceError("deletion-only trace longer than the instance");
  std::mt19937_64 rng(seed);
  std::vector<Id> live;
  live.reserve(inst.items.size());
  for (const Rect& r : inst.items) live.push_back(r.id);
  Trace trace;
  trace.events.reserve(N);
  for (std::size_t step = 0; step < N; ++step) {
    std::size_t at = rng() % live.size();
    Id id = live[at];
    live[at] = live.back();
    live.pop_back();
    trace.events.push_back(TraceEvent{'D', Rect{id, 0, 0, 0}});
  }
  return trace;
}

namespace {

std::string format_coord(Coord v, Coord s, int p) {
  std::string out;
  long long a = static_cast<long long>(v);
  if (a < 0) {
    out += '-';
    a = -a;
  }
  out += std::to_string(a / s);
  if (p > 0) {
    std::string frac = std::to_string(a % s);
    out += '.';
    out.append(static_cast<std::size_t>(p) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& why) {
  throw FormatError("line " + std::to_string(lineno) + ": " + why);
}

Coord parse_coord(const std::string& f, Coord s, int p, std::size_t lineno) {
  if (f.empty()) bad_line(lineno, "empty coordinate");
  std::size_t i = 0;
  bool neg = f[0] == '-';
  if (neg) i = 1;
  if (i >= f.size()) bad_line(lineno, "sign without digits");
  long long ip = 0;
  std::size_t digits = 0;
  for (; i < f.size() && f[i] != '.'; ++i) {
    if (f[i] < '0' || f[i] > '9') bad_line(lineno, "bad coordinate character");
    ip = ip * 10 + (f[i] - '0');
    if (++digits > 12) bad_line(lineno, "coordinate out of range");
  }
  long long frac = 0;
  if (i < f.size()) {  // fraction part
    ++i;
    std::size_t fd = 0;
    for (; i < f.size(); ++i) {
      if (f[i] < '0' || f[i] > '9') bad_line(lineno, "bad coordinate character");
      frac = frac * 10 + (f[i] - '0');
      ++fd;
    }
    if (fd == 0) bad_line(lineno, "trailing decimal point");
    if (fd > static_cast<std::size_t>(p))
      bad_line(lineno, "more fraction digits than the scale allows");
    for (std::size_t k = fd; k < static_cast<std::size_t>(p); ++k) frac *= 10;
  }
  long long v = ip * s + frac;
  if (neg) v = -v;
  if (!coord_in_range(v)) bad_line(lineno, "coordinate out of range");
  return v;
}

Id parse_id(const std::string& f, std::size_t lineno) {
  if (f.empty()) bad_line(lineno, "empty id");
  Id v = 0;
  for (char c : f) {
    if (c < '0' || c > '9') bad_line(lineno, "bad id character");
    v = v * 10 + static_cast<Id>(c - '0');
  }
  return v;
}

// Lines of `text`, tolerating a missing final newline; blank lines rejected
// by the callers' arity checks except a single trailing one.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::string out = "# dynlabel-instance v1 scale=" + std::to_string(inst.scale_digits) +
                    " mode=" + (inst.rects ? "rects" : "squares") + "\n";
  Coord s = inst.scale();
  for (const Rect& r : inst.items) {
    out += std::to_string(r.id);
    out += ',';
    out += format_coord(r.x, s, inst.scale_digits);
    out += ',';
    out += format_coord(r.y, s, inst.scale_digits);
    if (inst.rects) {
      out += ',';
      out += format_coord(r.w, s, inst.scale_digits);
    }
    out += '\n';
  }
  return out;
}

Instance parse_instance(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw FormatError("line 1: missing instance header");
  const std::string& h = lines[0];
  const std::string prefix = "# dynlabel-instance v1 scale=";
  if (h.rfind(prefix, 0) != 0) throw FormatError("line 1: bad instance header");
  std::size_t pos = prefix.size();
  std::size_t sp = h.find(' ', pos);
  if (sp == std::string::npos) throw FormatError("line 1: bad instance header");
  Instance inst;
  try {
    inst.scale_digits = std::stoi(h.substr(pos, sp - pos));
  } catch (const std::exception&) {
    throw FormatError("line 1: bad scale");
  }
  check_scale_digits(inst.scale_digits);
  std::string mode = h.substr(sp + 1);
  if (mode == "mode=squares")
    inst.rects = false;
  else if (mode == "mode=rects")
    inst.rects = true;
  else
    throw FormatError("line 1: bad mode");
  Coord s = inst.scale();
  std::size_t fields = inst.rects ? 4 : 3;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty() && ln + 1 == lines.size()) break;
    std::vector<std::string> f = split_fields(lines[ln]);
    if (f.size() != fields) bad_line(ln + 1, "wrong field count");
    Rect r;
    r.id = parse_id(f[0], ln + 1);
    r.x = parse_coord(f[1], s, inst.scale_digits, ln + 1);
    r.y = parse_coord(f[2], s, inst.scale_digits, ln + 1);
    r.w = inst.rects ? parse_coord(f[3], s, inst.scale_digits, ln + 1) : s;
    if (r.w <= 0) bad_line(ln + 1, "nonpositive width");
    inst.items.push_back(r);
  }
  return inst;
}

std::string serialize_trace(const Trace& trace, int scale_digits, bool rects) {
  check_scale_digits(scale_digits);
  Coord s = pow10_scale(scale_digits);
  std::string out = "# dynlabel-trace v1\n";
  for (const TraceEvent& ev : trace.events) {
    if (ev.op == 'D') {
      out += "D,";
      out += std::to_string(ev.item.id);
    } else {
      out += "I,";
      out += std::to_string(ev.item.id);
      out += ',';
      out += format_coord(ev.item.x, s, scale_digits);
      out += ',';
      out += format_coord(ev.item.y, s, scale_digits);
      if (rects) {
        out += ',';
        out += format_coord(ev.item.w, s, scale_digits);
      }
    }
    out += '\n';
  }
  return out;
}

Trace parse_trace(const std::string& text, int scale_digits, bool rects) {
  check_scale_digits(scale_digits);
  Coord s = pow10_scale(scale_digits);
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || lines[0] != "# dynlabel-trace v1")
    throw FormatError("line 1: bad trace header");
  Trace trace;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty() && ln + 1 == lines.size()) break;
    std::vector<std::string> f = split_fields(lines[ln]);
    if (f.empty()) bad_line(ln + 1, "empty row");
    if (f[0] == "D") {
      if (f.size() != 2) bad_line(ln + 1, "wrong field count for a delete");
      trace.events.push_back(TraceEvent{'D', Rect{parse_id(f[1], ln + 1), 0, 0, 0}});
    } else if (f[0] == "I") {
      if (f.size() != (rects ? 5u : 4u)) bad_line(ln + 1, "wrong field count for an insert");
      Rect r;
      r.id = parse_id(f[1], ln + 1);
      r.x = parse_coord(f[2], s, scale_digits, ln + 1);
      r.y = parse_coord(f[3], s, scale_digits, ln + 1);
      r.w = rects ? parse_coord(f[4], s, scale_digits, ln + 1) : s;
      if (r.w <= 0) bad_line(ln + 1, "nonpositive width");
      trace.events.push_back(TraceEvent{'I', r});
    } else {
      bad_line(ln + 1, "unknown op");
    }
  }
  return trace;
}

}  // namespace dynlabel
