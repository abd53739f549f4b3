#ifndef DYNLABEL_COMMON_HPP
#define DYNLABEL_COMMON_HPP

#include <cstdint>
#include <vector>

namespace dynlabel {

// Stable handle for a stored shape. Never reused within one structure's lifetime
// unless the caller re-inserts after a delete.
using Id = std::uint64_t;

// Integer coordinate. All inputs are pre-scaled by 10^p (see geometry.hpp);
// every coordinate handled by the library must satisfy |c| < 2^40 so that
// differences, doubled coordinates and box inflations stay far from overflow.
using Coord = std::int64_t;

// Net change of a maintained solution caused by one update.
struct Diff {
  std::vector<Id> added;
  std::vector<Id> removed;
};

// Cheap per-update outcome: the size of the maintained solution.
struct SizeReport {
  std::size_t size = 0;
};

}  // namespace dynlabel

#endif
