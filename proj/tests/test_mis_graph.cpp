#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "dynlabel/errors.hpp"
#include "dynlabel/mis_graph.hpp"
#include "dynlabel/oracle.hpp"

using namespace dynlabel;

namespace {

constexpr Coord S = 1000;  // scale 10^3 throughout

Square sq(Id id, double x, double y) {
  return Square{id, static_cast<Coord>(x * S), static_cast<Coord>(y * S)};
}

std::vector<Rect> live_rects(const std::vector<Square>& live) {
  std::vector<Rect> out;
  for (const Square& s : live) out.push_back(as_rect(s, S));
  return out;
}

}  // namespace

TEST_CASE("insert into empty state selects the square") {
  GraphMis g(S);
  Diff d = g.insert(sq(1, 0, 0));
  CHECK(d.added == std::vector<Id>{1});
  CHECK(d.removed.empty());
  CHECK(g.solution() == std::vector<Id>{1});
}

TEST_CASE("insert blocked by one member stays out") {
  GraphMis g(S);
  g.insert(sq(1, 0, 0));
  Diff d = g.insert(sq(2, 0.5, 0));
  CHECK(d.added.empty());
  CHECK(g.solution() == std::vector<Id>{1});
  // Blocked only by 1: deleting 1 promotes 2.
  Diff e = g.erase(1);
  CHECK(e.removed == std::vector<Id>{1});
  CHECK(e.added == std::vector<Id>{2});
}

TEST_CASE("insert blocked by two members needs both gone") {
  // 1 at x=0 and 3 at x=1.8 are independent; 2 at x=0.9 overlaps both.
  GraphMis g(S);
  g.insert(sq(1, 0, 0));
  g.insert(sq(3, 1.8, 0));
  Diff d = g.insert(sq(2, 0.9, 0));
  CHECK(d.added.empty());
  g.check_invariants();
  CHECK(g.erase(1).added.empty());  // still blocked by 3
  Diff e = g.erase(3);
  CHECK(e.added == std::vector<Id>{2});
}

TEST_CASE("deleting a non-member yields an empty diff") {
  GraphMis g(S);
  g.insert(sq(1, 0, 0));
  g.insert(sq(2, 0.5, 0));
  Diff d = g.erase(2);
  CHECK(d.added.empty());
  CHECK(d.removed.empty());
  CHECK(g.solution() == std::vector<Id>{1});
}

TEST_CASE("deleting a hub promotes all four independent neighbors in id order") {
  GraphMis g(S);
  g.insert(sq(10, 0, 0));
  // Chebyshev distance between any two of these is 1.8 >= 1: pairwise independent.
  g.insert(sq(11, 0.9, 0.9));
  g.insert(sq(12, -0.9, 0.9));
  g.insert(sq(13, 0.9, -0.9));
  g.insert(sq(14, -0.9, -0.9));
  CHECK(g.solution() == std::vector<Id>{10});
  Diff d = g.erase(10);
  CHECK(d.removed == std::vector<Id>{10});
  CHECK(d.added == std::vector<Id>{11, 12, 13, 14});
  g.check_invariants();
}

TEST_CASE("solution snapshots") {
  GraphMis fresh(S);
  CHECK(fresh.solution().empty());

  GraphMis built(std::vector<Square>{sq(1, 0, 0)}, S);
  CHECK(built.solution() == std::vector<Id>{1});

  GraphMis rt(S);
  rt.insert(sq(7, 2, 2));
  rt.erase(7);
  CHECK(rt.solution().empty());
  CHECK(rt.size() == 0);
}

TEST_CASE("build equals incremental inserts in ascending id order") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pos(0.0, 12.0);
  std::vector<Square> squares;
  for (Id id = 1; id <= 80; ++id) squares.push_back(sq(id, pos(rng), pos(rng)));

  GraphMis a(squares, S);
  GraphMis b(S);
  for (const Square& s : squares) b.insert(s);
  CHECK(a.solution() == b.solution());
  a.check_invariants();
}

TEST_CASE("duplicate and unknown ids are rejected") {
  GraphMis g(S);
  g.insert(sq(1, 0, 0));
  CHECK_THROWS_AS(g.insert(sq(1, 5, 5)), DuplicateIdError);
  CHECK_THROWS_AS(g.erase(99), UnknownIdError);
  CHECK_THROWS_AS(GraphMis(std::vector<Square>{sq(2, 0, 0), sq(2, 3, 3)}, S), DuplicateIdError);
}

TEST_CASE("random mixed updates keep counters exact and the set maximal") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.0, 8.0);
  std::uniform_int_distribution<int> coin(0, 1);

  GraphMis g(S);
  std::vector<Square> live;
  Id next = 1;
  for (int step = 0; step < 400; ++step) {
    if (live.empty() || coin(rng) == 0) {
      Square s = sq(next++, pos(rng), pos(rng));
      g.insert(s);
      live.push_back(s);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      std::size_t k = pick(rng);
      g.erase(live[k].id);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (step % 20 == 0) g.check_invariants();
    IsCheck chk = verify_is(live_rects(live), g.solution(), S);
    CHECK(chk.independent);
    CHECK(chk.maximal);
  }
}
