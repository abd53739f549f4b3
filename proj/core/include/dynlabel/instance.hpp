#ifndef DYNLABEL_INSTANCE_HPP
#define DYNLABEL_INSTANCE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dynlabel/common.hpp"
#include "dynlabel/geometry.hpp"

namespace dynlabel {

// Synthetic instance generator settings.  Centers are sampled in a pixel
// frame and normalized by the square side, so one unit equals one square.
struct GenSpec {
  enum class Model { kUniform, kGaussian };

  Model model = Model::kUniform;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double frame_w = 1080.0;  // pixels, pre-normalization
  double frame_h = 720.0;
  double square_px = 30.0;
};

// A parsed instance: shapes with coordinates quantized to 10^-scale_digits
// units and stored scaled.  Squares-mode items carry w == scale().
struct Instance {
  int scale_digits = 3;
  bool rects = false;
  std::vector<Rect> items;

  Coord scale() const { return pow10_scale(scale_digits); }
};

enum class TraceModel { kInsertOnly, kDeleteOnly, kMixed };

struct TraceEvent {
  char op = 'I';  // 'I' inserts item; 'D' deletes item.id
  Rect item;
};

struct Trace {
  std::vector<TraceEvent> events;
};

// Deterministic per (model, n, seed).  The gaussian mixture draws its three
// means first (uniform in the frame), then assigns components by quota in
// index order — 70% / 20% / 10% exactly, rounded — and clamps samples to the
// frame.  Pass `component_counts` to observe the quota split.
Instance generate(const GenSpec& spec, int scale_digits = 3,
                  std::array<std::size_t, 3>* component_counts = nullptr);

// Events over the instance defined by `spec`: insertions sample fresh shapes
// by continuing the generator stream past the instance draws (so the triple
// (model, n, seed) pins the instance and every trace on it), deletions pick
// uniformly among live ids.  Deletion-only requires N <= n.
Trace make_trace(const GenSpec& spec, int scale_digits, TraceModel model, std::size_t N);

// Trace over a file-loaded instance with no known generative model: only
// deletion-only is possible (InfeasibleTraceError otherwise).
Trace make_trace(const Instance& inst, TraceModel model, std::size_t N, std::uint64_t seed);

// File formats (FormatError on any deviation):
//   instance: `# dynlabel-instance v1 scale=<p> mode=<squares|rects>`
//             then `id,x,y` rows (squares) or `id,x,y,w` rows (rects),
//             coordinates as plain decimals with at most p fraction digits.
//   trace:    `# dynlabel-trace v1` then `I,id,x,y[,w]` / `D,id` rows,
//             in the instance's scale and mode.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);
std::string serialize_trace(const Trace& trace, int scale_digits, bool rects);
Trace parse_trace(const std::string& text, int scale_digits, bool rects);

}  // namespace dynlabel

#endif
