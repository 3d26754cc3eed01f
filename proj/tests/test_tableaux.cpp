#include <doctest.h>

#include <random>

#include "rck/tableau.hpp"

using namespace rck;

TEST_CASE("q_count") {
  Partition p22{2, 2};
  CHECK(p22.q_count(2) == 4);
  CHECK(p22.q_count(1) == 2);
  CHECK(Partition{4, 3, 1}.q_count(2) == 5);
  CHECK(Partition{}.q_count(3) == 0);

  // monotone, stabilizes at |p| for k >= p_1
  Partition p{5, 3, 3, 1};
  int prev = 0;
  for (int k = 0; k <= 7; ++k) {
    int q = p.q_count(k);
    CHECK(q >= prev);
    prev = q;
  }
  CHECK(p.q_count(5) == p.size());
  CHECK(p.q_count(9) == p.size());
}

TEST_CASE("row insertion reproduces the worked example") {
  Tableau t({{3, 4}, {4, 5}, {5, 6}});
  Tableau y = row_insert(t, {2, 4, 1, 1});
  CHECK(y == Tableau({{1, 1, 4}, {2, 4}, {3, 5}, {4, 6}, {5}}));

  CHECK(row_insert(Tableau{}, {7}) == Tableau::single(7));
  CHECK(row_insert(Tableau{}, {3, 2, 1, 5, 4, 1}) ==
        Tableau({{1, 1}, {2, 4}, {3, 5}}));
}

TEST_CASE("row word") {
  CHECK(Tableau({{1, 1}, {2, 4}}).row_word() == Word{2, 4, 1, 1});
  CHECK(Tableau({{3, 5, 6}}).row_word() == Word{3, 5, 6});
  CHECK(Tableau({{1, 2}, {3}}).row_word() == Word{3, 1, 2});
}

TEST_CASE("inverse insertion inverts insertion") {
  // single cell
  auto [empty, letter] = inverse_row_insert(Tableau::single(9), 1, 1);
  CHECK(empty == Tableau{});
  CHECK(letter == 9);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letters(1, 4), lengths(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    int len = lengths(rng);
    for (int i = 0; i < len; ++i) w.push_back(letters(rng));
    Tableau t = row_insert(Tableau{}, w);
    REQUIRE(t.is_semistandard());
    Letter u = letters(rng);
    Tableau grown = t;
    auto [row, col] = row_insert_letter(grown, u);
    REQUIRE(grown.is_semistandard());
    auto [back, out] = inverse_row_insert(grown, row, col);
    CHECK(back == t);
    CHECK(out == u);
  }
}

TEST_CASE("insert then inverse over all small tableaux") {
  // exhaustive over tableaux of size <= 6 built from words over {1..4}
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letters(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    for (int i = 0; i < 6; ++i) w.push_back(letters(rng));
    Tableau t = row_insert(Tableau{}, w);
    Partition sh = t.shape();
    // remove each removable corner and reinsert
    for (std::size_t r = 0; r < sh.rows(); ++r) {
      int len = sh[r];
      if (r + 1 < sh.rows() && sh[r + 1] == len) continue;
      auto [shrunk, u] = inverse_row_insert(t, static_cast<int>(r) + 1, len);
      Tableau again = shrunk;
      row_insert_letter(again, u);
      CHECK(again == t);
    }
  }
}

TEST_CASE("yamanouchi") {
  CHECK(is_yamanouchi({}));
  CHECK(is_yamanouchi({1, 1, 2, 3, 1, 4, 2, 2, 3, 4}));
  CHECK_FALSE(is_yamanouchi({2, 1}));
  CHECK(is_yamanouchi({1, 2, 1, 2}));
  CHECK_FALSE(is_yamanouchi({1, 2, 2}));
}

TEST_CASE("text round trip") {
  Tableau t({{1, 1}, {2, -5}});
  CHECK(t.str() == "1,1/2,-5");
  CHECK(Tableau::parse("1,1/2,-5") == t);
  Tableau skew({{1, 1}, {2}}, Partition{2, 1});
  std::string s = skew.str();
  CHECK(Tableau::parse(s) == skew);
}

TEST_CASE("type D order treats n and n-bar as incomparable") {
  LetterOrder d = LetterOrder::type_d(3);
  CHECK(d.less(1, 2));
  CHECK(d.less(3, -2));
  CHECK(d.less(-3, -2));
  CHECK(d.less(2, 3));
  CHECK(d.incomparable(3, -3));
  CHECK_FALSE(d.less(3, -3));
  CHECK_FALSE(d.less(-3, 3));
}
