#include "rck/rigged.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rck {

std::string algebra_name(Algebra g) {
  switch (g) {
    case Algebra::A: return "A";
    case Algebra::D: return "D";
    case Algebra::C: return "C";
  }
  return "?";
}

Algebra algebra_from_name(const std::string& s) {
  if (s == "A") return Algebra::A;
  if (s == "D") return Algebra::D;
  if (s == "C") return Algebra::C;
  throw std::invalid_argument("unknown algebra " + s);
}

RiggedConfiguration::RiggedConfiguration(Algebra g, int n,
                                         std::vector<Partition> mu)
    : algebra_(g), n_(n), mu_(std::move(mu)), strings_(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  mu_.resize(n);
  if (g == Algebra::D && n < 4)
    throw std::invalid_argument("type D needs rank >= 4");
  if (g == Algebra::C && n < 2)
    throw std::invalid_argument("type C needs rank >= 2");
}

void RiggedConfiguration::set_mu(std::vector<Partition> mu) {
  mu.resize(n_);
  mu_ = std::move(mu);
}

Partition RiggedConfiguration::nu(int a) const {
  std::vector<int> rows;
  for (auto& s : strings_[a - 1]) rows.push_back(s.length);
  return Partition::sorted(std::move(rows));
}

int RiggedConfiguration::total_cells() const {
  int c = 0;
  for (auto& col : strings_)
    for (auto& s : col) c += s.length;
  return c;
}

int RiggedConfiguration::vacancy(int a, int l) const {
  if (a < 1 || a > n_) throw std::invalid_argument("vacancy: bad color");
  if (l == 0) return 0;
  auto q = [&](int color) {  // Q_l(nu^(color)), 0 outside 1..n
    if (color < 1 || color > n_) return 0;
    int s = 0;
    for (auto& row : strings_[color - 1]) s += std::min(row.length, l);
    return s;
  };
  auto qmu = [&](int idx) {
    return idx >= 0 && idx < n_ ? mu_[idx].q_count(l) : 0;
  };
  switch (algebra_) {
    case Algebra::A:
      // P_l^(a) = Q_l(mu^(a-1)) + Q_l(nu^(a-1)) - 2 Q_l(nu^(a)) + Q_l(nu^(a+1))
      return qmu(a - 1) + q(a - 1) - 2 * q(a) + q(a + 1);
    case Algebra::D: {
      int p = qmu(a - 1) - 2 * q(a);  // mu^(a) sits at index a-1
      if (a <= n_ - 3)
        p += q(a - 1) + q(a + 1);
      else if (a == n_ - 2)
        p += q(a - 1) + q(n_ - 1) + q(n_);
      else  // spinor nodes n-1, n
        p += q(n_ - 2);
      return p;
    }
    case Algebra::C:
      if (a == n_) return q(n_ - 1) - q(n_);
      return qmu(a - 1) + q(a - 1) - 2 * q(a) + q(a + 1);
  }
  return 0;
}

bool RiggedConfiguration::is_highest_weight() const {
  for (int a = 1; a <= n_; ++a)
    for (auto& s : strings_[a - 1]) {
      int p = vacancy(a, s.length);
      if (p < 0 || s.rigging < 0 || s.rigging > p) return false;
    }
  return true;
}

bool RiggedConfiguration::riggings_bounded() const {
  for (int a = 1; a <= n_; ++a)
    for (auto& s : strings_[a - 1])
      if (s.rigging > vacancy(a, s.length)) return false;
  return true;
}

void RiggedConfiguration::canonicalize() {
  for (auto& col : strings_)
    std::sort(col.begin(), col.end(), [](const RcString& x, const RcString& y) {
      return std::pair(x.length, x.rigging) > std::pair(y.length, y.rigging);
    });
}

RiggedConfiguration RiggedConfiguration::flipped() const {
  RiggedConfiguration out = *this;
  for (int a = 1; a <= n_; ++a)
    for (auto& s : out.strings_[a - 1])
      s.rigging = vacancy(a, s.length) - s.rigging;
  out.canonicalize();
  return out;
}

bool RiggedConfiguration::operator==(const RiggedConfiguration& o) const {
  return algebra_ == o.algebra_ && n_ == o.n_ && mu_ == o.mu_ &&
         strings_ == o.strings_;
}

bool RiggedConfiguration::operator<(const RiggedConfiguration& o) const {
  if (total_cells() != o.total_cells())
    return total_cells() < o.total_cells();
  return strings_ < o.strings_;
}

std::string RiggedConfiguration::pretty() const {
  std::ostringstream os;
  for (int a = 1; a <= n_; ++a) {
    os << "nu^(" << a << "):";
    if (strings_[a - 1].empty()) os << " (empty)";
    os << "\n";
    for (auto& s : strings_[a - 1]) {
      os << "  " << vacancy(a, s.length) << " |";
      for (int i = 0; i < s.length; ++i) os << "[]";
      os << " " << s.rigging << "\n";
    }
  }
  return os.str();
}

std::string RiggedConfiguration::str() const {
  std::ostringstream os;
  os << algebra_name(algebra_) << n_;
  for (int a = 1; a <= n_; ++a) {
    os << " |";
    for (auto& s : strings_[a - 1])
      os << " " << s.length << ":" << s.rigging;
  }
  return os.str();
}

namespace rc {

int a_diamond(Algebra g, int n) {
  switch (g) {
    case Algebra::A: return n;
    case Algebra::D: return n - 2;
    case Algebra::C: return n - 1;
  }
  return n;
}

namespace {

std::vector<int> dynkin_neighbors(Algebra g, int n, int a) {
  std::vector<int> nb;
  if (g == Algebra::D) {
    if (a <= n - 3) {
      if (a > 1) nb.push_back(a - 1);
      nb.push_back(a + 1);
    } else if (a == n - 2) {
      if (a > 1) nb.push_back(a - 1);
      nb.push_back(n - 1);
      nb.push_back(n);
    } else {
      nb.push_back(n - 2);
    }
  } else {
    if (a > 1) nb.push_back(a - 1);
    if (a < n) nb.push_back(a + 1);
  }
  return nb;
}

}  // namespace

std::vector<RiggedConfiguration> enumerate_hw(Algebra g, int n,
                                              const std::vector<Partition>& mu,
                                              int max_total_cells) {
  RiggedConfiguration base(g, n, mu);
  int total_mu = 0;
  for (auto& m : base.mu_all()) total_mu += m.size();

  std::vector<RiggedConfiguration> out;
  RiggedConfiguration cur = base;

  auto color_ok = [&](int c) {
    for (auto& s : cur.strings(c))
      if (cur.vacancy(c, s.length) < 0) return false;
    return true;
  };

  std::function<void(int, int)> fill_shapes = [&](int a, int used) {
    if (a > n) {
      for (int c = 1; c <= n; ++c)
        if (!color_ok(c)) return;
      // enumerate riggings group by group
      std::vector<std::pair<int, int>> groups;  // (color, length)
      for (int c = 1; c <= n; ++c) {
        auto& col = cur.strings(c);
        for (std::size_t i = 0; i < col.size(); ++i)
          if (i == 0 || col[i].length != col[i - 1].length)
            groups.push_back({c, col[i].length});
      }
      std::function<void(std::size_t)> fill_rig = [&](std::size_t gi) {
        if (gi == groups.size()) {
          RiggedConfiguration done = cur;
          done.canonicalize();
          out.push_back(done);
          return;
        }
        auto [c, len] = groups[gi];
        int p = cur.vacancy(c, len);
        auto& col = cur.strings_mut(c);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < col.size(); ++i)
          if (col[i].length == len) idx.push_back(i);
        std::function<void(std::size_t, int)> assign = [&](std::size_t k,
                                                           int hi) {
          if (k == idx.size()) {
            fill_rig(gi + 1);
            return;
          }
          for (int v = hi; v >= 0; --v) {
            col[idx[k]].rigging = v;
            assign(k + 1, v);
          }
        };
        assign(0, p);
      };
      fill_rig(0);
      return;
    }
    int budget = max_total_cells >= 0
                     ? max_total_cells - used
                     : (g == Algebra::A ? total_mu : 2 * total_mu);
    for (int size = 0; size <= budget; ++size) {
      for (auto& shape : partitions_of(size)) {
        if (g == Algebra::C && a == n) {
          bool even = true;
          for (int r : shape.parts()) even &= r % 2 == 0;
          if (!even) continue;
        }
        auto& col = cur.strings_mut(a);
        col.clear();
        for (int r : shape.parts()) col.push_back({r, 0});
        // prune: every color whose neighborhood is already fixed must have
        // nonnegative vacancies
        bool ok = true;
        for (int c = 1; c <= a && ok; ++c) {
          auto nb = dynkin_neighbors(g, n, c);
          bool ready = true;
          for (int b : nb) ready &= b <= a;
          if (ready) ok = color_ok(c);
        }
        if (ok) fill_shapes(a + 1, used + size);
      }
    }
    cur.strings_mut(a).clear();
  };

  fill_shapes(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

RiggedConfiguration flip(const RiggedConfiguration& x) { return x.flipped(); }

std::optional<RiggedConfiguration> kashiwara(const RiggedConfiguration& x,
                                             Op op, int a, Mode mode) {
  if (a < 1 || a > x.rank()) throw std::invalid_argument("bad color");
  if (mode == Mode::Binf)
    for (auto& m : x.mu_all())
      if (!m.empty())
        throw std::invalid_argument("B(infinity) mode requires empty mu");

  RiggedConfiguration y = x;
  auto& col = y.strings_mut(a);
  int xmin = 0;  // the virtual singular string (0,0) is always present
  for (auto& s : col) xmin = std::min(xmin, s.rigging);

  std::vector<std::vector<int>> oldp(x.rank());
  for (int c = 1; c <= x.rank(); ++c)
    for (auto& s : y.strings(c))
      oldp[c - 1].push_back(x.vacancy(c, s.length));

  int selected = -1;
  if (op == Op::E) {
    if (xmin == 0) return std::nullopt;
    int best_len = -1;
    for (std::size_t i = 0; i < col.size(); ++i)
      if (col[i].rigging == xmin &&
          (best_len < 0 || col[i].length < best_len)) {
        best_len = col[i].length;
        selected = static_cast<int>(i);
      }
    col[selected].length -= 1;
    col[selected].rigging = xmin + 1;
  } else {
    int best_len = -1;
    for (std::size_t i = 0; i < col.size(); ++i)
      if (col[i].rigging == xmin && col[i].length > best_len) {
        best_len = col[i].length;
        selected = static_cast<int>(i);
      }
    if (selected < 0) {  // the virtual string grows into (1, -1)
      col.push_back({0, 0});
      oldp[a - 1].push_back(0);
      selected = static_cast<int>(col.size()) - 1;
    }
    col[selected].length += 1;
    col[selected].rigging = xmin - 1;
  }

  // Every other string keeps its corigging.
  for (int c = 1; c <= x.rank(); ++c) {
    auto& strings = y.strings_mut(c);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      if (c == a && static_cast<int>(i) == selected) continue;
      strings[i].rigging += y.vacancy(c, strings[i].length) - oldp[c - 1][i];
    }
  }

  if (op == Op::E && col[selected].length == 0)
    col.erase(col.begin() + selected);

  if (mode == Mode::KR && op == Op::F && !y.riggings_bounded())
    return std::nullopt;
  y.canonicalize();
  return y;
}

long long charge(const RiggedConfiguration& x) {
  if (x.algebra() != Algebra::A)
    throw std::invalid_argument("charge: type A only");
  for (std::size_t b = 1; b < x.mu_all().size(); ++b)
    if (!x.mu(b).empty())
      throw std::invalid_argument("charge: one-row factors only");
  int n = x.rank();
  long long c = 0;
  for (int a = 1; a <= n; ++a) {
    Partition pa = x.nu(a);
    c += Partition::pairing(pa, pa);
    if (a < n) c -= Partition::pairing(pa, x.nu(a + 1));
    for (auto& s : x.strings(a)) c += s.rigging;
  }
  c -= Partition::pairing(x.mu(0), x.nu(1));
  return c;
}

std::map<int, long long> kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("kostka: |lambda| != |mu|");
  int n = std::max({2, static_cast<int>(lambda.rows()),
                    static_cast<int>(mu.rows())}) -
          1;
  std::vector<Partition> shapes(n);
  shapes[0] = mu;
  std::map<int, long long> out;
  long long nmu = mu.weighted_sum();
  for (auto& x : enumerate_hw(Algebra::A, n, shapes)) {
    if (weight(x) != lambda) continue;
    long long cc = charge(x) + Partition::pairing(mu, x.nu(1));
    out[static_cast<int>(nmu - cc)] += 1;
  }
  return out;
}

Partition weight(const RiggedConfiguration& x) {
  int n = x.rank();
  std::vector<long long> lam;
  if (x.algebra() == Algebra::A) {
    // lambda_a = sum_{b >= a-1} |mu^(b)| + |nu^(a-1)| - |nu^(a)|, a = 1..n+1
    for (int a = 1; a <= n + 1; ++a) {
      long long v = 0;
      for (int b = a - 1; b < n; ++b) v += x.mu(b).size();
      if (a >= 2) v += x.nu(a - 1).size();
      if (a <= n) v -= x.nu(a).size();
      lam.push_back(v);
    }
  } else {
    if (!is_stable(x))
      throw std::invalid_argument("weight: configuration is not stable");
    // lambda_a = sum_{b >= a} |mu^(b)| + |nu^(a-1)| - |nu^(a)|, a = 1..a_diamond
    int top = a_diamond(x.algebra(), n);
    for (int a = 1; a <= top; ++a) {
      long long v = 0;
      for (int b = a; b <= n; ++b) v += x.mu(b - 1).size();
      if (a >= 2) v += x.nu(a - 1).size();
      v -= x.nu(a).size();
      lam.push_back(v);
    }
  }
  std::vector<int> parts;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 0 || (i && lam[i] > lam[i - 1]))
      throw std::invalid_argument("weight: not a partition");
    if (lam[i] > 0) parts.push_back(static_cast<int>(lam[i]));
  }
  return Partition(std::move(parts));
}

bool is_stable(const RiggedConfiguration& x) {
  if (x.algebra() == Algebra::A) return true;
  int n = x.rank();
  int top = a_diamond(x.algebra(), n);
  Partition nutop = x.nu(top);
  if (x.algebra() == Algebra::D) {
    // vertical dominoes; the spinor nodes carry half of every column
    Partition columns = nutop.conjugate();
    std::vector<int> half;
    for (int h : columns.parts()) {
      if (h % 2) return false;
      half.push_back(h / 2);
    }
    Partition half_shape = Partition(half).conjugate();
    if (x.nu(n - 1) != half_shape || x.nu(n) != half_shape) return false;
    for (int a : {n - 1, n})
      for (auto& s : x.strings(a))
        if (s.rigging != 0 || x.vacancy(a, s.length) != 0) return false;
    return true;
  }
  // type C: horizontal dominoes; the long node repeats nu^(n-1)
  for (int r : nutop.parts())
    if (r % 2) return false;
  if (x.nu(n) != nutop) return false;
  for (auto& s : x.strings(n))
    if (s.rigging != 0 || x.vacancy(n, s.length) != 0) return false;
  return true;
}

RiggedConfiguration kashiwara_involution(const RiggedConfiguration& x) {
  for (auto& m : x.mu_all())
    if (!m.empty())
      throw std::invalid_argument(
          "kashiwara_involution: B(infinity) configurations only");
  return x.flipped();
}

}  // namespace rc

}  // namespace rck
