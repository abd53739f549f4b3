#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "dynlabel/errors.hpp"
#include "dynlabel/geometry.hpp"
#include "dynlabel/greedy_augment.hpp"
#include "dynlabel/grid_mis.hpp"
#include "dynlabel/line_mis.hpp"
#include "dynlabel/oracle.hpp"
#include "dynlabel/shift_mis.hpp"

using namespace dynlabel;

namespace {

constexpr Coord S = 1000;  // scale 10^3

Square sq(Id id, double x, double y) {
  return Square{id, Coord(std::llround(x * S)), Coord(std::llround(y * S))};
}

Rect rc(Id id, double x, double y, double w) {
  return Rect{id, Coord(std::llround(x * S)), Coord(std::llround(y * S)),
              Coord(std::llround(w * S))};
}

template <class Aug>
std::vector<Rect> stored_rects(const Aug&, const std::vector<Square>& live) {
  std::vector<Rect> out;
  for (const Square& s : live) out.push_back(as_rect(s, S));
  return out;
}

}  // namespace

TEST_CASE("augmented grid recovers a square the parity rule discards") {
  // A sits alone on row 1, B alone on row 2; they do not intersect.  The grid
  // keeps only the winning parity (rows 2 on the tie), but the wrapper adds A
  // back as an extra.
  Augmented<GridMis> g(S, 64);
  g.insert(sq(1, 1.2, 1.1));
  CHECK(g.solution() == std::vector<Id>{1});
  g.insert(sq(2, 1.3, 2.5));
  CHECK(g.base().solution() == std::vector<Id>{2});
  CHECK(g.solution() == std::vector<Id>{1, 2});
  CHECK(g.solution_size() == 2);
  CHECK(g.in_solution(1));
  CHECK(g.extras() == std::vector<Id>{1});
  g.check_invariants();
}

TEST_CASE("event with no base diff and no addable neighbor leaves the output alone") {
  Augmented<GridMis> g(S, 64);
  g.insert(sq(1, 1.2, 1.1));
  g.insert(sq(2, 3.3, 1.2));  // row 1 cols 1 and 3: odd rows win 2-0
  CHECK(g.solution() == std::vector<Id>{1, 2});
  // C lands on row 2 (losing parity, base diff empty) and overlaps square 1,
  // so the local greedy pass cannot add it either.
  g.insert(sq(3, 1.3, 2.05));
  CHECK(g.base().solution() == std::vector<Id>{1, 2});
  CHECK(g.solution() == std::vector<Id>{1, 2});
  CHECK(!g.in_solution(3));
  g.check_invariants();
}

TEST_CASE("a base member arriving on top of an extra evicts it") {
  Augmented<GridMis> g(S, 64);
  g.insert(sq(1, 1.2, 1.1));  // becomes the extra once row 2 wins
  g.insert(sq(2, 1.3, 2.5));
  REQUIRE(g.extras() == std::vector<Id>{1});
  // Two even columns on row 2 flip its representatives to {3, 4}; square 3
  // overlaps the extra square 1, which must go, and neither 1 nor 2 fits back.
  g.insert(sq(3, 1.9, 1.9));
  g.insert(sq(4, 3.9, 1.9));
  CHECK(g.base().solution() == std::vector<Id>{3, 4});
  CHECK(g.solution() == std::vector<Id>{3, 4});
  CHECK(!g.in_solution(1));
  CHECK(g.extras().empty());
  g.check_invariants();
  IsCheck chk = verify_is({as_rect(sq(1, 1.2, 1.1), S), as_rect(sq(2, 1.3, 2.5), S),
                           as_rect(sq(3, 1.9, 1.9), S), as_rect(sq(4, 3.9, 1.9), S)},
                          g.solution(), S);
  CHECK(chk.independent);
  CHECK(chk.maximal);
}

TEST_CASE("full remaximalization makes the output maximal") {
  Augmented<ShiftMis> g(S, 64, 2);
  std::mt19937_64 rng(7);
  std::vector<Square> live;
  for (Id id = 0; id < 120; ++id) {
    Square s{id, Coord(rng() % (20 * S)) + S, Coord(rng() % (20 * S)) + S};
    g.insert(s);
    live.push_back(s);
  }
  std::size_t local = g.solution_size();
  g.full_remaximalize();
  CHECK(g.solution_size() >= g.base().solution_size());
  g.check_invariants();
  IsCheck chk = verify_is(stored_rects(g, live), g.solution(), S);
  CHECK(chk.independent);
  CHECK(chk.maximal);
  (void)local;
}

TEST_CASE("errors propagate and leave the wrapper untouched") {
  Augmented<GridMis> g(S, 8);
  g.insert(sq(1, 1.2, 1.1));
  CHECK_THROWS_AS(g.insert(sq(1, 3.0, 3.0)), DuplicateIdError);
  CHECK_THROWS_AS(g.erase(99), UnknownIdError);
  CHECK_THROWS_AS(g.insert(sq(2, 500.0, 1.0)), OutOfFrameError);  // beyond kappa
  CHECK_THROWS_AS(g.insert(rc(3, 2.0, 2.0, 1.5)), Error);         // not a unit square
  CHECK(g.size() == 1);
  CHECK(g.solution() == std::vector<Id>{1});
  g.check_invariants();
}

TEST_CASE("rect base accepts widths and keeps independence") {
  Augmented<LineMis> g(S);
  g.insert(rc(1, 2.0, 1.0, 3.0));
  g.insert(rc(2, 5.0, 1.0, 2.0));   // touches rect 1 at x=3.5: independent
  g.insert(rc(3, 3.4, 1.0, 1.0));   // overlaps both on the same line
  CHECK(g.solution() == std::vector<Id>{1, 2});
  g.insert(rc(4, 3.4, 2.0, 1.0));   // next line up: free
  CHECK(g.solution_size() == 3);
  g.check_invariants();
  std::vector<Rect> all = {rc(1, 2.0, 1.0, 3.0), rc(2, 5.0, 1.0, 2.0), rc(3, 3.4, 1.0, 1.0),
                           rc(4, 3.4, 2.0, 1.0)};
  IsCheck chk = verify_is(all, g.solution(), S);
  CHECK(chk.independent);
  CHECK(chk.maximal);
}

TEST_CASE("deleting an extra or a blocked square frees its neighborhood") {
  Augmented<GridMis> g(S, 64);
  g.insert(sq(1, 1.2, 1.1));
  g.insert(sq(2, 1.3, 2.5));
  REQUIRE(g.extras() == std::vector<Id>{1});
  // Deleting the extra leaves the base solution and drops the extra cleanly.
  g.erase(1);
  CHECK(g.solution() == std::vector<Id>{2});
  g.check_invariants();
  // A square blocked only by an extra becomes addable once the extra leaves.
  g.insert(sq(5, 1.2, 1.1));   // extra again (row 1, tie lost)
  CHECK(g.solution() == std::vector<Id>{2, 5});
  // Same grid cell as 5 (row 1 keeps losing the tie), overlapping it.
  g.insert(sq(6, 1.25, 0.6));
  CHECK(!g.in_solution(6));
  CHECK(g.solution() == std::vector<Id>{2, 5});
  g.erase(5);
  CHECK(g.in_solution(6));     // local repair reached it via the event box
  CHECK(g.solution() == std::vector<Id>{2, 6});
  g.check_invariants();
}

namespace {

template <class Aug, class MakeSquare>
void churn_fuzz(Aug& g, MakeSquare make, std::uint64_t seed, int steps, bool full_every_32) {
  std::mt19937_64 rng(seed);
  std::vector<Square> live;
  Id next = 0;
  for (int step = 0; step < steps; ++step) {
    bool ins = live.empty() || live.size() > 140 ? live.empty() : (rng() % 100 < 58);
    if (ins) {
      Square s = make(next++, rng);
      g.insert(s);
      live.push_back(s);
    } else {
      std::size_t at = rng() % live.size();
      g.erase(live[at].id);
      live.erase(live.begin() + std::ptrdiff_t(at));
    }
    if (full_every_32 && step % 32 == 31) g.full_remaximalize();
    g.check_invariants();
    REQUIRE(g.solution_size() >= g.base().solution_size());
    std::vector<Rect> rects;
    for (const Square& s : live) rects.push_back(as_rect(s, S));
    IsCheck chk = verify_is(rects, g.solution(), S);
    REQUIRE(chk.independent);
    if (full_every_32 && step % 32 == 31) REQUIRE(chk.maximal);
  }
}

Square dense_square(Id id, std::mt19937_64& rng) {
  return Square{id, Coord(rng() % (12 * S)) + S, Coord(rng() % (12 * S)) + S};
}

}  // namespace

TEST_CASE("churn fuzz keeps every augmented variant sound") {
  SUBCASE("grid") {
    Augmented<GridMis> g(S, 64);
    churn_fuzz(g, dense_square, 11, 400, true);
  }
  SUBCASE("shifting k=2") {
    Augmented<ShiftMis> g(S, 64, 2);
    churn_fuzz(g, dense_square, 12, 400, true);
  }
  SUBCASE("line") {
    Augmented<LineMis> g(S);
    churn_fuzz(g, dense_square, 13, 400, true);
  }
}

TEST_CASE("augmentation preserves the base approximation bound") {
  // g-grid inherits the 4-approximation: output >= base >= OPT/4.
  std::mt19937_64 rng(99);
  Augmented<GridMis> g(S, 64);
  std::vector<Rect> rects;
  for (Id id = 0; id < 80; ++id) {
    Square s{id, Coord(rng() % (10 * S)) + S, Coord(rng() % (10 * S)) + S};
    g.insert(s);
    rects.push_back(as_rect(s, S));
  }
  ExactResult opt = exact_max_is(rects, S);
  CHECK(4 * g.base().solution_size() >= opt.size);
  CHECK(g.solution_size() >= g.base().solution_size());
  CHECK(g.solution_size() <= opt.size);
}

TEST_CASE("identical runs produce identical size sequences") {
  auto run = [](std::uint64_t seed) {
    Augmented<GridMis> g(S, 64);
    std::mt19937_64 rng(seed);
    std::vector<Id> live;
    std::vector<std::size_t> sizes;
    Id next = 0;
    for (int step = 0; step < 300; ++step) {
      if (live.empty() || rng() % 100 < 60) {
        Square s{next, Coord(rng() % (12 * S)) + S, Coord(rng() % (12 * S)) + S};
        g.insert(s);
        live.push_back(next++);
      } else {
        std::size_t at = rng() % live.size();
        g.erase(live[at]);
        live.erase(live.begin() + std::ptrdiff_t(at));
      }
      sizes.push_back(g.solution_size());
    }
    return sizes;
  };
  CHECK(run(4242) == run(4242));
}
