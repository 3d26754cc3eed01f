#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "rck/boxball.hpp"
#include "rck/loopschur.hpp"

using namespace rck;
using namespace rck::loopschur;

namespace {

LoopMonomial mono(std::vector<std::array<int, 3>> factors) {
  LoopMonomial m;
  for (auto [i, j, e] : factors) m.exponents[{i, j}] += e;
  return m;
}

std::vector<LoopMonomial> sorted(std::vector<LoopMonomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CrystalPath ctab_path(int c) {
  auto row = [](int o, int t, int th, int f) {
    std::vector<Letter> r;
    for (int i = 0; i < o; ++i) r.push_back(1);
    for (int i = 0; i < t; ++i) r.push_back(2);
    for (int i = 0; i < th; ++i) r.push_back(3);
    for (int i = 0; i < f; ++i) r.push_back(4);
    return Tableau({r});
  };
  return CrystalPath{Algebra::A, 3,
                     {row(3, 2, c, 3), row(3, 3, 1, 0), row(0, 3, 0, 2),
                      row(1, 0, 3, 3)}};
}

}  // namespace

TEST_CASE("the eight-term loop Schur polynomial") {
  auto poly = loop_schur({2, 1}, {}, 1, 3, 3);
  std::vector<LoopMonomial> expected = {
      mono({{1, 1, 1}, {1, 3, 1}, {2, 2, 1}}),
      mono({{1, 1, 1}, {2, 3, 1}, {2, 2, 1}}),
      mono({{1, 1, 1}, {2, 3, 1}, {3, 2, 1}}),
      mono({{1, 1, 1}, {3, 3, 1}, {2, 2, 1}}),
      mono({{1, 1, 1}, {1, 3, 1}, {3, 2, 1}}),
      mono({{2, 1, 1}, {2, 3, 1}, {3, 2, 1}}),
      mono({{1, 1, 1}, {3, 3, 1}, {3, 2, 1}}),
      mono({{2, 1, 1}, {3, 3, 1}, {3, 2, 1}})};
  CHECK(sorted(poly) == sorted(expected));
}

TEST_CASE("the seven-term cylindric polynomial drops one tableau") {
  auto poly = cylindric_loop_schur({2, 1}, {}, 1, 1, 3, 3);
  std::vector<LoopMonomial> expected = {
      mono({{1, 1, 1}, {1, 3, 1}, {2, 2, 1}}),
      mono({{1, 1, 1}, {2, 3, 1}, {2, 2, 1}}),
      mono({{1, 1, 1}, {2, 3, 1}, {3, 2, 1}}),
      mono({{1, 1, 1}, {1, 3, 1}, {3, 2, 1}}),
      mono({{2, 1, 1}, {2, 3, 1}, {3, 2, 1}}),
      mono({{1, 1, 1}, {3, 3, 1}, {3, 2, 1}}),
      mono({{2, 1, 1}, {3, 3, 1}, {3, 2, 1}})};
  CHECK(sorted(poly) == sorted(expected));
}

TEST_CASE("single row shapes give the elementary sum") {
  auto poly = loop_schur({1}, {}, 2, 4, 3);
  std::vector<LoopMonomial> expected;
  for (int i = 1; i <= 4; ++i) expected.push_back(mono({{i, 2, 1}}));
  CHECK(sorted(poly) == sorted(expected));
}

TEST_CASE("forgetting the residues recovers the Schur polynomial") {
  auto poly = loop_schur({2, 1}, {}, 1, 3, 3);
  // s_{2,1}(x1,x2,x3): monomial multiset by ordinary exponents
  std::map<std::vector<int>, int> got, want;
  for (auto& m : poly) {
    std::vector<int> e(3, 0);
    for (auto& [key, p] : m.exponents) e[key.first - 1] += p;
    got[e] += 1;
  }
  want[{2, 1, 0}] = 1;
  want[{2, 0, 1}] = 1;
  want[{1, 2, 0}] = 1;
  want[{1, 1, 1}] = 2;
  want[{1, 0, 2}] = 1;
  want[{0, 2, 1}] = 1;
  want[{0, 1, 2}] = 1;
  CHECK(got == want);
}

TEST_CASE("the one-term cylindric square") {
  auto poly = cylindric_loop_schur({2, 2, 2, 2}, {}, 2, 0, 4, 4);
  REQUIRE(poly.size() == 1);
  CHECK(poly[0] == mono({{1, 4, 1}, {1, 3, 1}, {2, 1, 1}, {2, 4, 1},
                         {3, 2, 1}, {3, 1, 1}, {4, 3, 1}, {4, 2, 1}}));
}

TEST_CASE("the fourteen-term cylindric polynomial") {
  auto poly = cylindric_loop_schur({2, 1, 1}, {}, 2, 0, 4, 4);
  CHECK(poly.size() == 14);
  auto plain = loop_schur({2, 1, 1}, {}, 0, 4, 4);
  CHECK(plain.size() == 15);
  // the excluded filling is [[1,4],[2],[3]]
  LoopMonomial excluded =
      mono({{1, 4, 1}, {4, 3, 1}, {2, 1, 1}, {3, 2, 1}});
  bool in_plain = false, in_cyl = false;
  for (auto& m : plain) in_plain |= m == excluded;
  for (auto& m : poly) in_cyl |= m == excluded;
  CHECK(in_plain);
  CHECK_FALSE(in_cyl);
}

TEST_CASE("narrow shapes: cylindric equals plain") {
  // lambda_1 < n - a: the cylinder copies never touch
  auto a = loop_schur({1, 1}, {}, 0, 3, 4);
  auto b = cylindric_loop_schur({1, 1}, {}, 2, 0, 3, 4);
  CHECK(sorted(a) == sorted(b));
}

TEST_CASE("monomial counts match the semistandard count") {
  // hook content formula at small sizes
  auto count = [](const Partition& shape, int letters) {
    double prod = 1;
    for (std::size_t i = 0; i < shape.rows(); ++i)
      for (int j = 1; j <= shape[i]; ++j) {
        int arm = shape[i] - j;
        int leg = 0;
        for (std::size_t r = i + 1; r < shape.rows(); ++r)
          if (shape[r] >= j) ++leg;
        int content = j - static_cast<int>(i) - 1;
        prod *= static_cast<double>(letters + content) / (arm + leg + 1);
      }
    return static_cast<long long>(prod + 0.5);
  };
  for (auto& [shape, letters] :
       std::vector<std::pair<Partition, int>>{{{2, 1}, 3},
                                              {{2, 2}, 3},
                                              {{3, 1}, 4},
                                              {{2, 1, 1}, 4}}) {
    auto poly = loop_schur(shape, {}, 0, letters, 5);
    CHECK(static_cast<long long>(poly.size()) == count(shape, letters));
  }
}

TEST_CASE("tropical evaluation") {
  auto single = mono({{1, 1, 2}, {2, 3, 1}});
  auto value = [](int i, int j) -> long long { return 10 * i + j; };
  CHECK(tropical_eval({single}, value) == 2 * 11 + 23);
  // trop(fg) = trop f + trop g on random assignments
  std::mt19937 rng(12);
  auto f = loop_schur({2}, {}, 0, 3, 3);
  auto g = loop_schur({1, 1}, {}, 1, 3, 3);
  std::vector<LoopMonomial> fg;
  for (auto& mf : f)
    for (auto& mg : g) {
      LoopMonomial m = mf;
      for (auto& [key, e] : mg.exponents) m.exponents[key] += e;
      fg.push_back(m);
    }
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::pair<int, int>, long long> assign;
    std::uniform_int_distribution<long long> val(0, 9);
    auto v = [&](int i, int j) -> long long {
      auto key = std::pair{i, j};
      if (!assign.count(key)) assign[key] = val(rng);
      return assign[key];
    };
    CHECK(tropical_eval(fg, v) == tropical_eval(f, v) + tropical_eval(g, v));
  }
}

TEST_CASE("staircase shapes") {
  CHECK(staircase(2, 0, 4, 4) == Partition{2, 2, 2, 2});
  CHECK(staircase(2, 1, 4, 4) == Partition{2, 1, 1});
  CHECK(staircase(2, 2, 4, 4) == Partition{});
  CHECK(staircase(1, 0, 4, 4) == Partition{3, 3, 3, 3});
  CHECK(staircase(1, 1, 4, 4) == Partition{3, 3, 2});
  CHECK(staircase(1, 2, 4, 4) == Partition{3, 1});
  CHECK(staircase(1, 3, 4, 4) == Partition{});
  // eventually empty
  for (int a = 1; a <= 3; ++a) {
    int i = 0;
    while (!staircase(a, i, 4, 5).empty()) {
      ++i;
      REQUIRE(i < 40);
    }
  }
  // independent boundary-walk oracle: start at the bottom-left cell and walk
  // the outer boundary right or up, removing at most n cells
  auto oracle_step = [](Partition p, int n) {
    if (p.empty()) return p;
    std::vector<int> rows(p.parts());
    std::vector<int> removed(rows.size(), 0);
    int r = static_cast<int>(rows.size()), c = 1;
    for (int t = 0; t < n; ++t) {
      removed[r - 1] += 1;
      if (rows[r - 1] >= c + 1) {
        ++c;  // the row continues to the right
      } else if (r > 1) {
        --r;  // move up along the boundary
      } else {
        break;  // reached the top right end of the rim
      }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] - removed[i] > 0) out.push_back(rows[i] - removed[i]);
    return Partition::sorted(std::move(out));
  };
  for (int n : {3, 4, 6})
    for (int a = 1; a < n; ++a)
      for (int L : {3, 4, 7}) {
        Partition cur = staircase(a, 0, n, L);
        int i = 0;
        while (!cur.empty() && i < 30) {
          Partition next = staircase(a, ++i, n, L);
          CHECK(next == oracle_step(cur, n));
          cur = next;
        }
      }
}

TEST_CASE("nu from tropical ratios: theorem case, exhaustive") {
  CHECK(loopschur::nu_from_tropical(boxball::parse_state("1111"), 1, 1) == 0);
  for (int rank : {1, 2}) {
    std::vector<CrystalPath> frontier{CrystalPath{Algebra::A, rank, {}}};
    int L = rank == 1 ? 6 : 4;
    for (int k = 0; k < L; ++k) {
      std::vector<CrystalPath> next;
      for (auto& p : frontier)
        for (int x = 1; x <= rank + 1; ++x) {
          CrystalPath q = p;
          q.factors.push_back(Tableau::single(x));
          next.push_back(q);
        }
      frontier = next;
    }
    int conjecture_mismatches = 0;
    for (auto& p : frontier) {
      auto rc = bijection::phi(p);
      Partition nu1 = rc.nu(1);
      for (std::size_t i = 1; i <= nu1.rows() + 1; ++i)
        CHECK(nu_from_tropical(p, 1, static_cast<int>(i)) ==
              nu1[i - 1]);
      if (rank == 2) {
        Partition nu2 = rc.nu(2);
        for (std::size_t i = 1; i <= nu2.rows() + 1; ++i)
          if (nu_from_tropical(p, 2, static_cast<int>(i)) != nu2[i - 1])
            ++conjecture_mismatches;  // reported, not failed
      }
    }
    if (conjecture_mismatches)
      MESSAGE("conjecture case mismatches: ", conjecture_mismatches);
    CHECK(conjecture_mismatches == 0);  // holds on these sizes
  }
}

TEST_CASE("the c-parameter family") {
  for (int c = 0; c <= 7; ++c) {
    auto p = ctab_path(c);
    auto rc = bijection::phi(p);
    std::vector<std::vector<std::pair<int, int>>> printed = {
        {{8, -2}, {8, -2}, {4, -1}},
        {{8, 4}, {4, 0}},
        {{8, -7}}};
    if (c >= 1) {
      printed[0][0] = {8 + c, -2};
      printed[0][1] = {8, std::min(c - 2, 2)};
      printed[2][0] = {8, std::min(-7 + c, -3)};
      if (c <= 4)
        printed[1] = {{8, 4 - 2 * c}, {4 + c, -c}};
      else
        printed[1] = {{4 + c, -c}, {8, -4}};
    }
    for (int a = 1; a <= 3; ++a) {
      REQUIRE(rc.strings(a).size() == printed[a - 1].size());
      std::multiset<std::pair<int, int>> got, want;
      for (auto& s : rc.strings(a)) got.insert({s.length, s.rigging});
      for (auto& pr : printed[a - 1]) want.insert(pr);
      CHECK(got == want);
    }
    // tropical ratios reproduce nu^(1) (theorem) and nu^(2) (conjecture)
    Partition nu1 = rc.nu(1), nu2 = rc.nu(2);
    for (std::size_t i = 1; i <= nu1.rows(); ++i)
      CHECK(nu_from_tropical(p, 1, static_cast<int>(i)) == nu1[i - 1]);
    for (std::size_t i = 1; i <= nu2.rows(); ++i)
      CHECK(nu_from_tropical(p, 2, static_cast<int>(i)) == nu2[i - 1]);
  }
}
