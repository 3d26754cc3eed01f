#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rck/rigged.hpp"
#include "rck/tableau.hpp"

using namespace rck;

namespace {

RiggedConfiguration make_a1(int chain, std::vector<RcString> strings) {
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(chain, 1));
  RiggedConfiguration x(Algebra::A, 1, mu);
  x.strings_mut(1) = std::move(strings);
  x.canonicalize();
  return x;
}

// Lascoux-Schutzenberger charge of a word with partition content; used as
// the independent oracle for the Kostka polynomials.
int ls_charge_word(Word w) {
  int charge = 0;
  while (!w.empty()) {
    int maxletter = 0;
    for (Letter x : w) maxletter = std::max(maxletter, x);
    std::vector<bool> used(w.size(), false);
    std::vector<int> taken;
    int pos = static_cast<int>(w.size());
    for (int want = 1; want <= maxletter; ++want) {
      bool found = false;
      for (int step = 0; step < static_cast<int>(w.size()); ++step) {
        --pos;
        if (pos < 0) pos += static_cast<int>(w.size());
        if (!used[pos] && w[pos] == want) {
          found = true;
          break;
        }
      }
      if (!found) break;
      used[pos] = true;
      taken.push_back(pos);
    }
    int idx = 0;
    for (std::size_t t = 1; t < taken.size(); ++t) {
      if (taken[t] > taken[t - 1]) ++idx;  // wrapped past the left end
      charge += idx;
    }
    Word rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!used[i]) rest.push_back(w[i]);
    w = rest;
  }
  return charge;
}

void ssyt_of_content(const Partition& shape, const Partition& content,
                     std::vector<Tableau>& out) {
  int rows = static_cast<int>(shape.rows());
  std::vector<std::vector<Letter>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(shape[i], 0);
  std::vector<int> remaining(content.rows());
  for (std::size_t i = 0; i < content.rows(); ++i) remaining[i] = content[i];
  int total = shape.size();
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == total) {
      out.push_back(Tableau(fill));
      return;
    }
    int seen = 0, i = 0;
    while (cell - seen >= shape[i]) seen += shape[i++];
    int j = cell - seen;
    int lo = 1;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= static_cast<int>(content.rows()); ++v) {
      if (remaining[v - 1] == 0) continue;
      fill[i][j] = v;
      --remaining[v - 1];
      self(self, cell + 1);
      ++remaining[v - 1];
      fill[i][j] = 0;
    }
  };
  rec(rec, 0);
}

std::map<int, long long> kostka_by_charge(const Partition& lambda,
                                          const Partition& mu) {
  std::vector<Tableau> tabs;
  ssyt_of_content(lambda, mu, tabs);
  std::map<int, long long> out;
  for (auto& t : tabs) out[ls_charge_word(t.row_word())] += 1;
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("vacancy numbers, rank 1") {
  std::vector<Partition> mu(1);
  mu[0] = Partition{2, 2};
  RiggedConfiguration x(Algebra::A, 1, mu);
  x.strings_mut(1) = {{2, 0}};
  CHECK(x.vacancy(1, 2) == 0);  // P_2((2,2),(2)) = 4 - 2*2

  RiggedConfiguration y(Algebra::A, 1, mu);
  y.strings_mut(1) = {{1, 0}, {1, 0}};
  CHECK(y.vacancy(1, 1) == -2);  // P_1((2,2),(1,1)) = 2 - 4 < 0
  CHECK_FALSE(y.is_highest_weight());

  RiggedConfiguration z(Algebra::A, 1, mu);
  CHECK(z.vacancy(1, 1) == 2);  // empty nu: only the mu columns count
  CHECK(z.vacancy(1, 5) == 4);
  CHECK(z.vacancy(1, 0) == 0);
}

TEST_CASE("enumerate_hw finds the three mu = (2,2) configurations") {
  std::vector<Partition> mu(1);
  mu[0] = Partition{2, 2};
  auto all = rc::enumerate_hw(Algebra::A, 1, mu);
  REQUIRE(all.size() == 3);
  CHECK(all[0].nu(1) == Partition{});
  CHECK(all[1].nu(1) == Partition{1});
  CHECK(all[1].strings(1)[0].rigging == 0);
  CHECK(all[2].nu(1) == Partition{2});
  CHECK(all[2].strings(1)[0].rigging == 0);
}

TEST_CASE("empty mu gives only the empty configuration") {
  auto all = rc::enumerate_hw(Algebra::A, 2, {});
  REQUIRE(all.size() == 1);
  CHECK(all[0].total_cells() == 0);
}

TEST_CASE("fermionic counting matches the crystal count, rank 1") {
  for (int L = 1; L <= 10; ++L) {
    std::vector<Partition> mu(1);
    mu[0] = Partition(std::vector<int>(L, 1));
    auto all = rc::enumerate_hw(Algebra::A, 1, mu);
    std::map<int, int> by_ell;
    for (auto& x : all) by_ell[x.total_cells()] += 1;
    std::map<int, int> words;
    for (int m = 0; m < (1 << L); ++m) {
      Word w;
      for (int i = 0; i < L; ++i) w.push_back((m >> i & 1) ? 2 : 1);
      if (is_yamanouchi(w))
        words[static_cast<int>(std::count(w.begin(), w.end(), 2))] += 1;
    }
    for (int ell = 0; ell <= L / 2; ++ell) {
      CHECK(by_ell[ell] == words[ell]);
      CHECK(by_ell[ell] == binom(L, ell) - binom(L, ell - 1));
    }
  }
}

TEST_CASE("flip is an involution fixing the shape") {
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(8, 1));
  for (auto& x : rc::enumerate_hw(Algebra::A, 1, mu)) {
    auto f = rc::flip(x);
    CHECK(rc::flip(f) == x);
    CHECK(f.nu(1) == x.nu(1));
  }
  // singular strings map to rigging 0 and back
  auto x = make_a1(6, {{2, 0}});
  int p = x.vacancy(1, 2);
  auto f = rc::flip(x);
  CHECK(f.strings(1)[0].rigging == p);
  CHECK(rc::flip(f).strings(1)[0].rigging == 0);
}

TEST_CASE("the printed f_1 chain on the eight-site path") {
  // Phi(1 1 2 1 1 3 2 1): nu1 = (2,1) riggings (2,1); nu2 = (1) rigging 0
  std::vector<Partition> mu(2);
  mu[0] = Partition(std::vector<int>(8, 1));
  RiggedConfiguration x(Algebra::A, 2, mu);
  x.strings_mut(1) = {{2, 2}, {1, 1}};
  x.strings_mut(2) = {{1, 0}};
  CHECK(x.vacancy(1, 2) == 3);
  CHECK(x.vacancy(1, 1) == 5);
  CHECK(x.vacancy(2, 1) == 0);
  REQUIRE(x.is_highest_weight());

  auto rows_of = [](const RiggedConfiguration& y, int a) {
    std::multiset<std::pair<int, int>> rows;
    for (auto& s : y.strings(a)) rows.insert({s.length, s.rigging});
    return rows;
  };

  auto s1 = rc::kashiwara(x, rc::Op::F, 1);
  REQUIRE(s1.has_value());
  CHECK(rows_of(*s1, 1) ==
        std::multiset<std::pair<int, int>>{{2, 0}, {1, -1}, {1, -1}});
  CHECK(rows_of(*s1, 2) == std::multiset<std::pair<int, int>>{{1, 1}});
  CHECK(s1->vacancy(1, 2) == 1);
  CHECK(s1->vacancy(1, 1) == 3);
  CHECK(s1->vacancy(2, 1) == 1);

  auto s2 = rc::kashiwara(*s1, rc::Op::F, 1);
  REQUIRE(s2.has_value());
  CHECK(rows_of(*s2, 1) ==
        std::multiset<std::pair<int, int>>{{2, -2}, {2, -2}, {1, -1}});
  CHECK(rows_of(*s2, 2) == std::multiset<std::pair<int, int>>{{1, 1}});
  CHECK(s2->vacancy(1, 2) == -1);
  CHECK(s2->vacancy(1, 1) == 3);

  auto s3 = rc::kashiwara(*s2, rc::Op::F, 1);
  REQUIRE(s3.has_value());
  CHECK(rows_of(*s3, 1) ==
        std::multiset<std::pair<int, int>>{{3, -3}, {2, -2}, {1, -1}});
  CHECK(s3->vacancy(1, 3) == -3);

  CHECK_FALSE(rc::kashiwara(*s3, rc::Op::F, 1).has_value());
}

TEST_CASE("e cancels f on rank 1 crystals") {
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(6, 1));
  for (auto& x : rc::enumerate_hw(Algebra::A, 1, mu)) {
    std::vector<RiggedConfiguration> layer{x};
    for (int depth = 0; depth < 4; ++depth) {
      std::vector<RiggedConfiguration> next;
      for (auto& y : layer) {
        auto f = rc::kashiwara(y, rc::Op::F, 1);
        if (!f) continue;
        auto e = rc::kashiwara(*f, rc::Op::E, 1);
        REQUIRE(e.has_value());
        CHECK(*e == y);
        CHECK(f->riggings_bounded());
        next.push_back(*f);
      }
      layer = next;
    }
    CHECK_FALSE(rc::kashiwara(x, rc::Op::E, 1).has_value());
  }
}

TEST_CASE("charge") {
  std::vector<Partition> mu(1);
  mu[0] = Partition{1, 1};
  RiggedConfiguration x(Algebra::A, 1, mu);
  x.strings_mut(1) = {{1, 0}};
  CHECK(rc::charge(x) == -1);  // 1 - min((1,1),(1)) + 0

  RiggedConfiguration empty(Algebra::A, 2, {Partition{2, 1}});
  CHECK(rc::charge(empty) == 0);
}

TEST_CASE("kostka polynomials match the charge oracle") {
  auto check = [](const Partition& lambda, const Partition& mu) {
    CHECK(rc::kostka(lambda, mu) == kostka_by_charge(lambda, mu));
  };
  CHECK(rc::kostka({2}, {1, 1}) == std::map<int, long long>{{1, 1}});
  CHECK(rc::kostka({2, 1}, {1, 1, 1}) ==
        std::map<int, long long>{{1, 1}, {2, 1}});
  CHECK(rc::kostka({2, 2}, {2, 2}) == std::map<int, long long>{{0, 1}});
  check({2}, {1, 1});
  check({2, 1}, {1, 1, 1});
  check({2, 2}, {1, 1, 1, 1});
  check({3, 1}, {1, 1, 1, 1});
  check({2, 2, 1}, {1, 1, 1, 1, 1});
  check({3, 2}, {2, 2, 1});
  check({3, 3}, {2, 2, 1, 1});
}

TEST_CASE("weight") {
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(5, 1));
  RiggedConfiguration x(Algebra::A, 1, mu);
  CHECK(rc::weight(x) == Partition{5});

  for (int N : {4, 6}) {
    std::vector<Partition> m(1);
    m[0] = Partition(std::vector<int>(N, 1));
    for (auto& y : rc::enumerate_hw(Algebra::A, 1, m)) {
      int ell = y.total_cells();
      Partition w = rc::weight(y);
      CHECK(w[0] == N - ell);
      if (ell > 0) CHECK(w[1] == ell);
    }
  }
}

TEST_CASE("kashiwara involution is an involution fixing shapes") {
  RiggedConfiguration x(Algebra::A, 2, {});
  x.strings_mut(1) = {{2, -1}, {1, 3}};
  x.strings_mut(2) = {{1, 0}};
  x.canonicalize();
  auto k = rc::kashiwara_involution(x);
  CHECK(k.nu(1) == x.nu(1));
  CHECK(k.nu(2) == x.nu(2));
  CHECK(rc::kashiwara_involution(k) == x);

  RiggedConfiguration empty(Algebra::A, 2, {});
  CHECK(rc::kashiwara_involution(empty) == empty);

  std::vector<Partition> mu(1);
  mu[0] = Partition{1};
  RiggedConfiguration bad(Algebra::A, 1, mu);
  CHECK_THROWS_AS(rc::kashiwara_involution(bad), std::invalid_argument);
}

TEST_CASE("B(infinity) mode walks down freely and cancels") {
  RiggedConfiguration start(Algebra::A, 2, {});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> color(1, 2);
  RiggedConfiguration cur = start;
  for (int step = 0; step < 30; ++step) {
    int a = color(rng);
    auto f = rc::kashiwara(cur, rc::Op::F, a, rc::Mode::Binf);
    REQUIRE(f.has_value());
    auto e = rc::kashiwara(*f, rc::Op::E, a, rc::Mode::Binf);
    REQUIRE(e.has_value());
    CHECK(*e == cur);
    CHECK(rc::kashiwara_involution(rc::kashiwara_involution(*f)) == *f);
    cur = *f;
  }
}
