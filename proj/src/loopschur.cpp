#include "rck/loopschur.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace rck {

namespace loopschur {

namespace {

int residue(int value, int n) {  // 1..n representative
  int r = value % n;
  if (r <= 0) r += n;
  return r;
}

// Enumerates semistandard fillings of outer/inner with letters 1..L.  Cells
// are addressed by absolute (row, col); filling[row][col-1] is 0 outside.
void enumerate_ssyt(const Partition& outer, const Partition& inner, int L,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  int rows = static_cast<int>(outer.rows());
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(outer[i], 0);
  std::vector<std::pair<int, int>> cells;  // (row, col) 0-based, row-major
  for (int i = 0; i < rows; ++i)
    for (int j = inner[i]; j < outer[i]; ++j) cells.push_back({i, j});
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      emit(fill);
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j > inner[i] && j - 1 >= inner[i]) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0 && j < outer[i - 1] && j >= inner[i - 1])
      lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= L; ++v) {
      fill[i][j] = v;
      self(self, k + 1);
    }
    fill[i][j] = 0;
  };
  rec(rec, 0);
}

LoopMonomial weight_of(const std::vector<std::vector<int>>& fill,
                       const Partition& inner, int r, int n) {
  LoopMonomial m;
  for (std::size_t i = 0; i < fill.size(); ++i)
    for (std::size_t j = inner[i]; j < fill[i].size(); ++j) {
      int row = static_cast<int>(i) + 1, col = static_cast<int>(j) + 1;
      m.exponents[{fill[i][j], residue(row - col + r, n)}] += 1;
    }
  return m;
}

}  // namespace

std::vector<LoopMonomial> loop_schur(const Partition& outer,
                                     const Partition& inner, int r, int L,
                                     int n) {
  std::vector<LoopMonomial> out;
  enumerate_ssyt(outer, inner, L, [&](const std::vector<std::vector<int>>& f) {
    out.push_back(weight_of(f, inner, r, n));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LoopMonomial> cylindric_loop_schur(const Partition& outer,
                                               const Partition& inner, int a,
                                               int r, int L, int n) {
  if (a < 1 || a > n - 1)
    throw std::invalid_argument("cylindric_loop_schur: bad shift index");
  int down = a, left = n - a;
  // copies must not overlap
  for (std::size_t i = 0; i + down < outer.rows(); ++i)
    if (outer[i + down] - left > inner[i])
      throw std::invalid_argument("cylindric_loop_schur: copies overlap");

  int rows = static_cast<int>(outer.rows());
  auto in_shape = [&](int row, int col) {  // 1-based absolute coordinates
    // shift by copies: find the copy index k with row - k*down in 1..rows
    for (int k = -2; k <= 2; ++k) {
      int rr = row - k * down, cc = col + k * left;
      if (rr >= 1 && rr <= rows && cc >= inner[rr - 1] + 1 && cc <= outer[rr - 1])
        return std::pair{k, rr};
    }
    return std::pair{INT_MIN, 0};
  };

  std::vector<LoopMonomial> out;
  enumerate_ssyt(outer, inner, L, [&](const std::vector<std::vector<int>>& f) {
    auto value = [&](int row, int col) -> int {  // 0 when outside
      auto [k, rr] = in_shape(row, col);
      if (k == INT_MIN) return 0;
      int cc = col + k * left;
      return f[rr - 1][cc - 1];
    };
    // check semistandardness across one window of copies
    for (int k = -1; k <= 1; ++k) {
      for (int i = 0; i < rows; ++i) {
        int row = i + 1 + k * down;
        for (int j = inner[i] + 1; j <= outer[i]; ++j) {
          int col = j - k * left;
          int v = value(row, col);
          if (v == 0) continue;
          int right = value(row, col + 1);
          if (right != 0 && right < v) return;
          int below = value(row + 1, col);
          if (below != 0 && below <= v) return;
        }
      }
    }
    out.push_back(weight_of(f, inner, r, n));
  });
  std::sort(out.begin(), out.end());
  return out;
}

long long tropical_eval(
    const std::vector<LoopMonomial>& poly,
    const std::function<long long(int, int)>& value_of) {
  if (poly.empty()) throw std::invalid_argument("tropical_eval: zero polynomial");
  long long best = LLONG_MAX;
  for (auto& m : poly) {
    long long s = 0;
    for (auto& [key, e] : m.exponents) s += e * value_of(key.first, key.second);
    best = std::min(best, s);
  }
  return best;
}

Partition staircase(int a, int i, int n, int L) {
  if (a < 1 || a > n - 1) throw std::invalid_argument("staircase: bad a");
  std::vector<int> shape(L, n - a);
  Partition cur(shape);
  for (int step = 0; step < i && !cur.empty(); ++step) {
    // outer rim cells, one per diagonal, from the bottom-left corner
    std::vector<int> rows(cur.parts());
    int height = static_cast<int>(rows.size());
    std::vector<std::pair<int, int>> rim;  // (row, col) 1-based
    for (int r = height; r >= 1; --r)
      for (int c = 1; c <= rows[r - 1]; ++c)
        if (r == height || c >= rows[r])  // nothing below-right
          rim.push_back({r, c});
    std::sort(rim.begin(), rim.end(), [](auto& x, auto& y) {
      return x.second - x.first < y.second - y.first;
    });
    int take = std::min<int>(n, static_cast<int>(rim.size()));
    for (int t = 0; t < take; ++t) rows[rim[t].first - 1] -= 1;
    cur = Partition::sorted(std::move(rows));
  }
  return cur;
}

long long nu_from_tropical(const CrystalPath& path, int a, int i) {
  if (path.algebra != Algebra::A)
    throw std::invalid_argument("nu_from_tropical: type A paths only");
  for (auto& t : path.factors)
    if (t.rows().size() != 1)
      throw std::invalid_argument("nu_from_tropical: one-row factors only");
  int npaper = path.n + 1;  // letters 1..npaper
  int L = static_cast<int>(path.factors.size());
  if (a < 1 || a > npaper - 1)
    throw std::invalid_argument("nu_from_tropical: bad color");

  auto value_of = [&](int jvar, int res) -> long long {
    // x_j^{(m)} counts letter l with l = m - j + 1 (mod n) in factor L+1-j
    int letter = residue(res - jvar + 1, npaper);
    const Tableau& t = path.factors[L - jvar];
    long long c = 0;
    for (Letter x : t.rows()[0])
      if (x == letter) ++c;
    return c;
  };

  Partition lam_prev = staircase(a, i - 1, npaper, L);
  Partition lam_cur = staircase(a, i, npaper, L);
  auto top = cylindric_loop_schur(lam_prev, {}, a, 0, L, npaper);
  auto bottom = cylindric_loop_schur(lam_cur, {}, a, 0, L, npaper);
  return tropical_eval(top, value_of) - tropical_eval(bottom, value_of);
}

}  // namespace loopschur

}  // namespace rck
