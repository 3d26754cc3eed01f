#include "rck/boxball.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace rck {

namespace boxball {

namespace {

int carrier_width(const CrystalPath& path, int a, int l) {
  if (l != kInf) return l;
  RiggedConfiguration rcimg = bijection::phi(path);
  Partition nua = rcimg.nu(a);
  return std::max(1, nua[0]);
}

}  // namespace

CrystalPath evolve(const CrystalPath& path, int a, int l) {
  int width = carrier_width(path, a, l);
  CrystalPath out = path;
  if (path.algebra == Algebra::A) {
    Tableau carrier = crystal_a::classical_hw(a, width);
    for (auto& factor : out.factors) {
      auto res = crystal_a::combinatorial_r(carrier, factor);
      factor = res.left;
      carrier = res.right;
    }
    return out;
  }
  // Types D and C: one R step = bijection round trip on the pair.
  Tableau carrier = crystal_a::classical_hw(a, width);
  for (auto& factor : out.factors) {
    CrystalPath pair{path.algebra, path.n, {carrier, factor}};
    CrystalPath swapped = bijection::r_matrix_via_rc(pair);
    factor = swapped.factors[0];
    carrier = swapped.factors[1];
  }
  return out;
}

long long energy_sum(const CrystalPath& path, int a, int l) {
  if (path.algebra != Algebra::A)
    throw std::invalid_argument("energy_sum: type A only");
  if (l == 0) return 0;
  int width = carrier_width(path, a, l);
  Tableau carrier = crystal_a::classical_hw(a, width);
  long long total = 0;
  for (auto& factor : path.factors) {
    auto res = crystal_a::combinatorial_r(carrier, factor);
    total += res.energy;
    carrier = res.right;
  }
  return total;
}

long long local_increment(const CrystalPath& path, int k, int j, int a,
                          int l) {
  if (path.algebra != Algebra::A)
    throw std::invalid_argument("local_increment: type A only");
  if (k < 1 || k > static_cast<int>(path.factors.size()))
    throw std::invalid_argument("local_increment: bad factor");
  Partition sh = path.factors[k - 1].shape();
  int s = sh[0], r = static_cast<int>(sh.rows());
  if (j < 1 || j > s) throw std::invalid_argument("local_increment: bad column");

  auto piece = [&](int jlo) {
    // C_jlo = b_1 (x) ... (x) b_{k-1} (x) c_s (x) ... (x) c_jlo
    CrystalPath p{path.algebra, path.n, {}};
    for (int i = 0; i < k - 1; ++i) p.factors.push_back(path.factors[i]);
    for (int c = s; c >= jlo; --c) {
      std::vector<std::vector<Letter>> col(r);
      for (int row = 1; row <= r; ++row)
        col[row - 1] = {path.factors[k - 1].at(row, c)};
      p.factors.push_back(Tableau(std::move(col)));
    }
    return p;
  };
  auto e = [&](const CrystalPath& p, int depth) -> long long {
    if (depth == 0 || p.factors.empty()) return 0;
    return energy_sum(p, a, depth);
  };
  CrystalPath cj = piece(j);
  CrystalPath cj1 = piece(j + 1);
  return (e(cj, l) - e(cj, l - 1)) - (e(cj1, l) - e(cj1, l - 1));
}

long long tau(const RiggedConfiguration& rc, const std::vector<int>& nu0,
              int k, int d) {
  if (rc.algebra() != Algebra::A)
    throw std::invalid_argument("tau: type A only");
  int n = rc.rank();
  if (d < 0 || d > n + 1) throw std::invalid_argument("tau: bad d");
  if (k < 0 || k > static_cast<int>(nu0.size()))
    throw std::invalid_argument("tau: bad k");
  if (d == 0) {
    long long cells = 0;
    for (int i = 0; i < k; ++i) cells += nu0[i];
    return tau(rc, nu0, k, n + 1) - cells;
  }
  // all strings, all colors
  struct S {
    int color, length;
    long long rigging;
  };
  std::vector<S> strings;
  for (int a = 1; a <= n; ++a)
    for (auto& s : rc.strings(a))
      strings.push_back({a, s.length, s.rigging});
  std::vector<int> prefix(nu0.begin(), nu0.begin() + k);

  std::size_t g = strings.size();
  if (g > 24) throw std::invalid_argument("tau: too many strings");
  long long best = LLONG_MIN;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    std::vector<std::vector<int>> nu(n + 2);
    long long rig = 0;
    for (std::size_t i = 0; i < g; ++i)
      if (mask >> i & 1) {
        nu[strings[i].color].push_back(strings[i].length);
        rig += strings[i].rigging;
      }
    auto pair_min = [](const std::vector<int>& x, const std::vector<int>& y) {
      long long s = 0;
      for (int p : x)
        for (int q : y) s += std::min(p, q);
      return s;
    };
    long long c = rig;
    for (int a = 1; a <= n; ++a) {
      c += pair_min(nu[a], nu[a]);
      c -= pair_min(nu[a], nu[a + 1]);
    }
    c -= pair_min(prefix, nu[1]);
    long long val = -c;
    if (d <= n)
      for (int len : nu[d]) val -= len;
    best = std::max(best, val);
  }
  return best;
}

long long rho(const CrystalPath& path, int k, int d) {
  if (path.algebra != Algebra::A)
    throw std::invalid_argument("rho: type A only");
  auto balls_upto = [&](const CrystalPath& p, int letter_cap) {
    long long c = 0;
    for (int i = 0; i < k; ++i)
      for (auto& row : p.factors[i].rows())
        for (Letter x : row)
          if (x >= 2 && x <= letter_cap) ++c;
    return c;
  };
  long long total = balls_upto(path, d);
  CrystalPath cur = path;
  int guard = 0;
  while (true) {
    cur = evolve(cur, 1, kInf);
    long long balls = balls_upto(cur, path.n + 1);
    if (balls == 0) break;
    total += balls;
    if (++guard > 10000) throw std::runtime_error("rho: orbit did not clear");
  }
  return total;
}

long long letter_count_from_tau(const RiggedConfiguration& rc,
                                const std::vector<int>& nu0, int k, int d) {
  return tau(rc, nu0, k, d) - tau(rc, nu0, k - 1, d) - tau(rc, nu0, k, d - 1) +
         tau(rc, nu0, k - 1, d - 1);
}

std::string periodic_evolve(const std::string& state, int l) {
  int twos = static_cast<int>(std::count(state.begin(), state.end(), '2'));
  if (2 * twos > static_cast<int>(state.size()))
    throw std::invalid_argument("periodic_evolve: density exceeds 1/2");
  auto pass = [&](std::pair<int, int> carrier, const std::string& in) {
    std::string out = in;
    for (std::size_t i = 0; i < in.size(); ++i) {
      // R: (a,b) (x) (c,d) -> (c',d') (x) (a',b') on one-letter sites
      int a = carrier.first, b = carrier.second;
      int c = in[i] == '1' ? 1 : 0, dd = 1 - c;
      int shift = std::min(b, c) - std::min(a, dd);
      int cp = c - shift, dp = dd + shift;
      carrier = {a + shift, b - shift};
      out[i] = cp == 1 ? '1' : '2';
      (void)dp;
    }
    return std::pair{carrier, out};
  };
  auto [v, first] = pass({l, 0}, state);
  auto [v2, second] = pass(v, state);
  if (v2 != v) throw std::runtime_error("periodic_evolve: carrier not fixed");
  return second;
}

int highest_weight_cut(const std::string& state) {
  int L = static_cast<int>(state.size());
  for (int start = 0; start < L; ++start) {
    int bal = 0;
    bool ok = true;
    for (int i = 0; i < L && ok; ++i) {
      bal += state[(start + i) % L] == '1' ? 1 : -1;
      if (bal < 0) ok = false;
    }
    if (ok) return start;
  }
  throw std::invalid_argument("highest_weight_cut: no admissible cut");
}

std::vector<int> periodic_theta_state(const std::vector<int>& nu,
                                      const std::vector<long long>& riggings,
                                      int period) {
  int g = static_cast<int>(nu.size());
  if (g == 0) return std::vector<int>(period, 0);
  for (int i = 0; i + 1 < g; ++i)
    if (nu[i] >= nu[i + 1])
      throw std::invalid_argument("theta: lengths must be distinct ascending");

  std::vector<long long> p(g);
  for (int i = 0; i < g; ++i) {
    long long q = 0;
    for (int x : nu) q += std::min(x, nu[i]);
    p[i] = period - 2 * q;
    if (p[i] <= 0) throw std::invalid_argument("theta: nonpositive p_i");
  }
  std::vector<std::vector<long long>> A(g, std::vector<long long>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      A[i][j] = (i == j ? p[i] : 0) + 2 * std::min(nu[i], nu[j]);

  // doubled values keep everything integral: theta2(z2) = -min n'An + n'z2
  auto theta2 = [&](const std::vector<long long>& z2) {
    for (int box = 2;; box *= 2) {
      long long best = LLONG_MAX;
      std::vector<long long> argmin(g, 0);
      std::vector<long long> nvec(g, -box);
      while (true) {
        long long val = 0;
        for (int i = 0; i < g; ++i) {
          for (int j = 0; j < g; ++j) val += nvec[i] * A[i][j] * nvec[j];
          val += nvec[i] * z2[i];
        }
        if (val < best) {
          best = val;
          argmin = nvec;
        }
        int i = 0;
        while (i < g && nvec[i] == box) nvec[i++] = -box;
        if (i == g) break;
        ++nvec[i];
      }
      bool interior = true;
      for (long long v : argmin) interior &= std::abs(v) < box;
      if (interior) return -best;
    }
  };

  auto state_val = [&](int k, bool with_hinf) {
    std::vector<long long> z2(g);
    for (int i = 0; i < g; ++i) {
      z2[i] = 2 * riggings[i] - p[i] - 2LL * k * std::min(nu[i], 1);
      if (with_hinf) z2[i] += 2 * nu[i];
    }
    return theta2(z2);
  };

  std::vector<int> xs(period);
  for (int k = 1; k <= period; ++k) {
    long long v = state_val(k, false) - state_val(k - 1, false) -
                  state_val(k, true) + state_val(k - 1, true);
    if (v % 2) throw std::runtime_error("theta: odd doubled value");
    xs[k - 1] = static_cast<int>(v / 2);
  }
  return xs;
}

std::pair<BBBSite, BBBSite> whurl(const BBBSite& x, const BBBSite& y) {
  long long a = x.spaces, b = x.baskets, c = x.balls;
  long long d = y.spaces, e = y.baskets, f = y.balls;
  long long m1 = std::min({a + b, a + c, b + f});
  long long m2 = std::min({e + c, d + c, d + b});
  long long m3 = std::min({a + e, d + f, e + f});
  BBBSite xp{a - m1 + m2, b - m1 + m3, c - m2 + m3};
  BBBSite yp{d + m1 - m2, e + m1 - m3, f + m2 - m3};
  return {yp, xp};
}

std::vector<BBBSite> evolve_bbb(const std::vector<BBBSite>& state, int l) {
  long long width = l;
  if (l == kInf) {
    width = 1;
    for (auto& s : state) width += s.spaces + s.baskets + s.balls;
  }
  BBBSite carrier{width, 0, 0};
  std::vector<BBBSite> out;
  out.reserve(state.size());
  for (auto& site : state) {
    auto [sp, cp] = whurl(carrier, site);
    out.push_back(sp);
    carrier = cp;
  }
  return out;
}

CrystalPath parse_state(const std::string& text, int min_rank) {
  std::vector<std::vector<Letter>> factors;
  std::vector<Letter> cur;
  bool spaced = text.find(' ') != std::string::npos;
  for (char ch : text) {
    if (ch == ' ') {
      if (!cur.empty()) factors.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("parse_state: bad character");
    if (spaced)
      cur.push_back(ch - '0');
    else
      factors.push_back({ch - '0'});
  }
  if (!cur.empty()) factors.push_back(cur);
  if (factors.empty()) throw std::invalid_argument("parse_state: empty");
  int maxletter = 2;
  for (auto& f : factors)
    for (Letter x : f) maxletter = std::max(maxletter, x);
  CrystalPath p;
  p.algebra = Algebra::A;
  p.n = std::max(min_rank, maxletter - 1);
  for (auto& f : factors) p.factors.push_back(Tableau({f}));
  return p;
}

std::string state_str(const CrystalPath& path) {
  bool all_single = true;
  for (auto& f : path.factors) all_single &= f.cells() == 1;
  std::string s;
  for (std::size_t i = 0; i < path.factors.size(); ++i) {
    if (!all_single && i) s += " ";
    for (auto& row : path.factors[i].rows())
      for (Letter x : row) s += static_cast<char>('0' + x);
  }
  return s;
}

}  // namespace boxball

}  // namespace rck
