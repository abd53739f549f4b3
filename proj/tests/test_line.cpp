#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "dynlabel/chain_solver.hpp"
#include "dynlabel/errors.hpp"
#include "dynlabel/line_mis.hpp"
#include "dynlabel/oracle.hpp"

using namespace dynlabel;

namespace {

constexpr Coord S = 1000;

// Endpoints in tenths so the spec's decimal examples stay integral.
Interval iv(Id id, double lo, double hi) {
  return Interval{id, static_cast<Coord>(lo * 10), static_cast<Coord>(hi * 10)};
}

std::vector<Id> chain_ids(const ChainSolver& cs) {
  std::vector<Id> out;
  for (const Interval& i : cs.chain()) out.push_back(i.id);
  return out;
}

Rect rc(Id id, double x, double y, double w) {
  return Rect{id, static_cast<Coord>(x * S), static_cast<Coord>(y * S), static_cast<Coord>(w * S)};
}

Square sq(Id id, double x, double y) {
  return Square{id, static_cast<Coord>(x * S), static_cast<Coord>(y * S)};
}

}  // namespace

TEST_CASE("pairwise disjoint intervals are all selected") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 2.5, 5));
  cs.insert(iv(3, 5.5, 7));
  CHECK(cs.omega() == 3);
  CHECK(chain_ids(cs) == std::vector<Id>{1, 2, 3});
  cs.check_chain();
}

TEST_CASE("insertion can displace a selected interval without changing omega") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 2.5, 5));
  cs.insert(iv(3, 5.5, 7));
  cs.insert(iv(4, 2.1, 3.0));
  CHECK(cs.omega() == 3);
  CHECK(chain_ids(cs) == std::vector<Id>{1, 4, 3});
  CHECK(cs.selected(2) == false);
  CHECK(cs.contains(2));
  cs.check_chain();
}

TEST_CASE("insertion far to the right extends the chain") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 10, 11));
  CHECK(cs.omega() == 2);
  CHECK(chain_ids(cs) == std::vector<Id>{1, 2});
}

TEST_CASE("interval straddling a selected right endpoint is rejected") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 2.5, 5));
  cs.insert(iv(3, 0.5, 4));
  CHECK(cs.omega() == 2);
  CHECK(chain_ids(cs) == std::vector<Id>{1, 2});
  CHECK_FALSE(cs.selected(3));
  cs.check_chain();
}

TEST_CASE("deleting a selected interval lets a stored one take over") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 2.5, 5));
  cs.insert(iv(3, 5.5, 7));
  cs.insert(iv(4, 2.1, 3.0));  // displaces 2
  cs.erase(4);
  CHECK(chain_ids(cs) == std::vector<Id>{1, 2, 3});
  cs.check_chain();

  SUBCASE("deleting an unselected interval changes nothing") {
    cs.insert(iv(5, 2.1, 3.0));  // displaces 2 again
    cs.erase(2);
    CHECK(chain_ids(cs) == std::vector<Id>{1, 5, 3});
  }
  SUBCASE("deleting the last interval empties the chain") {
    cs.erase(1);
    cs.erase(2);
    cs.erase(3);
    CHECK(cs.omega() == 0);
    CHECK(cs.empty());
  }
}

TEST_CASE("touching intervals are independent (open endpoints)") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  cs.insert(iv(2, 2, 4));
  CHECK(cs.omega() == 2);
}

TEST_CASE("hi ties are resolved exactly like the from-scratch greedy") {
  // Selected (2,5) with id 9; the newcomer (0,5) with id 1 shares hi=5 but has
  // the smaller id, so the scratch greedy picks it first and 9 is displaced.
  ChainSolver cs;
  cs.insert(iv(9, 2, 5));
  cs.insert(iv(1, 0, 5));
  CHECK(chain_ids(cs) == std::vector<Id>{1});
  cs.check_chain();
}

TEST_CASE("duplicate and unknown interval ids are rejected") {
  ChainSolver cs;
  cs.insert(iv(1, 0, 2));
  CHECK_THROWS_AS(cs.insert(iv(1, 3, 4)), DuplicateIdError);
  CHECK_THROWS_AS(cs.erase(2), UnknownIdError);
}

TEST_CASE("fuzz: chain equals scratch greedy after every update") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> lo_d(0, 60);   // small range forces ties
  std::uniform_int_distribution<Coord> len_d(1, 12);
  std::uniform_int_distribution<int> coin(0, 2);

  ChainSolver cs;
  std::vector<Interval> live;
  Id next = 1;
  for (int step = 0; step < 600; ++step) {
    if (live.empty() || coin(rng) != 0) {
      Coord lo = lo_d(rng);
      Interval i{next++, lo, lo + len_d(rng)};
      cs.insert(i);
      live.push_back(i);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      std::size_t k = pick(rng);
      cs.erase(live[k].id);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
    }
    CHECK(cs.last_queries() <= cs.omega() + 1);
    cs.check_chain();  // throws on deviation
    ExactResult ex = exact_interval_mis(live);
    CHECK(cs.omega() == ex.size);
  }
}

TEST_CASE("line solver: single line selects all disjoint rects") {
  LineMis lm(S);
  lm.insert(rc(1, 1, 0, 2));     // span (0,2)
  lm.insert(rc(2, 3.75, 0, 2.5));  // span (2.5,5)
  lm.insert(rc(3, 6.25, 0, 1.5));  // span (5.5,7)
  CHECK(lm.solution_size() == 3);
  CHECK(lm.omega() == 3);
  CHECK(lm.solution() == std::vector<Id>{1, 2, 3});
  lm.check_invariants();
}

TEST_CASE("line solver: winning parity picks the larger union") {
  LineMis lm(S);
  // Line 1 (odd): three disjoint unit squares.
  lm.insert(rc(1, 0, 1, 1));
  lm.insert(rc(2, 2, 1, 1));
  lm.insert(rc(3, 4, 1, 1));
  // Line 2 (even): one rect.
  lm.insert(rc(4, 0, 2, 1));
  CHECK(lm.solution_size() == 3);
  CHECK(lm.solution() == std::vector<Id>{1, 2, 3});

  SUBCASE("tie prefers the even family") {
    lm.insert(rc(5, 2, 2, 1));
    lm.insert(rc(6, 4, 2, 1));
    CHECK(lm.solution_size() == 3);
    CHECK(lm.solution() == std::vector<Id>{4, 5, 6});
  }
  SUBCASE("empty state reports zero") {
    LineMis fresh(S);
    CHECK(fresh.solution_size() == 0);
    CHECK(fresh.solution().empty());
    CHECK(fresh.omega() == 0);
  }
}

TEST_CASE("line solver: solution is independent and 2-approximate") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> xd(0.0, 20.0);
  std::uniform_real_distribution<double> yd(0.0, 6.0);
  std::uniform_real_distribution<double> wd(0.5, 3.0);
  std::uniform_int_distribution<int> coin(0, 2);

  LineMis lm(S);
  std::vector<Rect> live;
  Id next = 1;
  for (int step = 0; step < 300; ++step) {
    if (live.empty() || coin(rng) != 0) {
      Rect r = rc(next++, xd(rng), yd(rng), 1.0);
      r.w = static_cast<Coord>(wd(rng) * S);
      lm.insert(r);
      live.push_back(r);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      std::size_t k = pick(rng);
      lm.erase(live[k].id);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
    }
    std::vector<Id> sol = lm.solution();
    CHECK(sol.size() == lm.solution_size());
    IsCheck chk = verify_is(live, sol, S);
    CHECK(chk.independent);  // approximation: maximality not required

    if (step % 25 == 0) {
      lm.check_invariants();
      ExactResult opt = exact_max_is(live, S, {});
      CHECK(2 * lm.solution_size() >= opt.size);
    }
  }
}

TEST_CASE("line solver: squares as unit-width rects round-trip") {
  LineMis lm(S);
  Square a = sq(1, 0, 0);
  lm.insert(as_rect(a, S));
  CHECK(lm.solution_size() == 1);
  lm.erase(1);
  CHECK(lm.solution_size() == 0);
  CHECK(lm.size() == 0);
  CHECK_THROWS_AS(lm.erase(1), UnknownIdError);
  lm.insert(as_rect(a, S));
  CHECK_THROWS_AS(lm.insert(as_rect(a, S)), DuplicateIdError);
}
