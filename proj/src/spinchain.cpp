#include "rck/spinchain.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rck {

namespace spinchain {

namespace {
const Complex I{0.0, 1.0};
}

Eigen::Matrix2cd pauli(char a) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (a) {
    case '1': m << 0, 1, 1, 0; break;
    case '2': m << 0, -I, I, 0; break;
    case '3': m << 1, 0, 0, -1; break;
    case '+': m << 0, 2, 0, 0; break;
    case '-': m << 0, 0, 2, 0; break;
    default: throw std::invalid_argument("pauli: unknown label");
  }
  return m;
}

SparseOp spin_embed(int N, int k, char a) {
  if (k < 1 || k > N) throw std::invalid_argument("spin_embed: bad site");
  Eigen::Matrix2cd m = pauli(a);
  long long dim = 1LL << N;
  long long mask = 1LL << (N - k);
  std::vector<Eigen::Triplet<Complex>> trip;
  for (long long i = 0; i < dim; ++i) {
    int bit = (i & mask) ? 1 : 0;  // 0 = up
    for (int to = 0; to < 2; ++to) {
      Complex v = m(to, bit);
      if (v != Complex{0, 0}) {
        long long j = to ? (i | mask) : (i & ~mask);
        trip.push_back({static_cast<int>(j), static_cast<int>(i), v});
      }
    }
  }
  SparseOp op(dim, dim);
  op.setFromTriplets(trip.begin(), trip.end());
  return op;
}

SparseOp hamiltonian(int N, double J) {
  long long dim = 1LL << N;
  SparseOp h(dim, dim);
  SparseOp id(dim, dim);
  id.setIdentity();
  for (int k = 1; k <= N; ++k) {
    int k2 = k == N ? 1 : k + 1;
    for (char a : {'1', '2', '3'})
      h = h + SparseOp(spin_embed(N, k, a) * spin_embed(N, k2, a));
    h = h - id;
  }
  return SparseOp(h * Complex{J / 4.0, 0});
}

SparseOp total_sz(int N) {
  long long dim = 1LL << N;
  SparseOp s(dim, dim);
  for (int k = 1; k <= N; ++k) s = s + spin_embed(N, k, '3');
  return SparseOp(s * Complex{0.5, 0});
}

SparseOp total_sp(int N) {
  long long dim = 1LL << N;
  SparseOp s(dim, dim);
  for (int k = 1; k <= N; ++k) s = s + spin_embed(N, k, '+');
  return s;
}

BlockOp lax(int N, int k, Complex lambda) {
  long long dim = 1LL << N;
  SparseOp id(dim, dim);
  id.setIdentity();
  BlockOp L;
  L.a = SparseOp(id * lambda) + SparseOp(spin_embed(N, k, '3') * (I / 2.0));
  L.d = SparseOp(id * lambda) - SparseOp(spin_embed(N, k, '3') * (I / 2.0));
  L.b = SparseOp(spin_embed(N, k, '-') * (I / 2.0));
  L.c = SparseOp(spin_embed(N, k, '+') * (I / 2.0));
  return L;
}

BlockOp transfer(int N, Complex lambda) {
  BlockOp t = lax(N, N, lambda);
  for (int k = N - 1; k >= 1; --k) {
    BlockOp L = lax(N, k, lambda);
    BlockOp r;
    r.a = SparseOp(t.a * L.a) + SparseOp(t.b * L.c);
    r.b = SparseOp(t.a * L.b) + SparseOp(t.b * L.d);
    r.c = SparseOp(t.c * L.a) + SparseOp(t.d * L.c);
    r.d = SparseOp(t.c * L.b) + SparseOp(t.d * L.d);
    t = r;
  }
  return t;
}

Vec vacuum(int N) {
  Vec v = Vec::Zero(1LL << N);
  v[0] = 1.0;
  return v;
}

namespace {

// local Lax actions; site bit mask
inline void site_actions(int N, int k, long long& mask) {
  mask = 1LL << (N - k);
}

}  // namespace

Vec apply_b(int N, Complex lambda, const Vec& v) {
  long long dim = 1LL << N;
  Vec u = Vec::Zero(dim);  // B_k v
  Vec w = v;               // D_k v
  for (int k = 1; k <= N; ++k) {
    long long mask;
    site_actions(N, k, mask);
    Vec nu(dim), nw(dim);
    for (long long i = 0; i < dim; ++i) {
      double s = (i & mask) ? -1.0 : 1.0;
      Complex a = lambda + (I / 2.0) * s;
      Complex d = lambda - (I / 2.0) * s;
      // b = (i/2) sigma^-, c = (i/2) sigma^+
      Complex bterm = (i & mask) ? I * w[i & ~mask] : Complex{0, 0};
      Complex cterm = (i & mask) ? Complex{0, 0} : I * u[i | mask];
      nu[i] = a * u[i] + bterm;
      nw[i] = cterm + d * w[i];
    }
    u.swap(nu);
    w.swap(nw);
  }
  return u;
}

Vec apply_trace(int N, Complex lambda, const Vec& v) {
  long long dim = 1LL << N;
  Vec p = v, q = Vec::Zero(dim);  // A_k v, C_k v
  Vec u = Vec::Zero(dim), w = v;  // B_k v, D_k v
  for (int k = 1; k <= N; ++k) {
    long long mask;
    site_actions(N, k, mask);
    Vec np(dim), nq(dim), nu(dim), nw(dim);
    for (long long i = 0; i < dim; ++i) {
      double s = (i & mask) ? -1.0 : 1.0;
      Complex a = lambda + (I / 2.0) * s;
      Complex d = lambda - (I / 2.0) * s;
      Complex bp = (i & mask) ? I * q[i & ~mask] : Complex{0, 0};
      Complex cp = (i & mask) ? Complex{0, 0} : I * p[i | mask];
      np[i] = a * p[i] + bp;
      nq[i] = cp + d * q[i];
      Complex bu = (i & mask) ? I * w[i & ~mask] : Complex{0, 0};
      Complex cu = (i & mask) ? Complex{0, 0} : I * u[i | mask];
      nu[i] = a * u[i] + bu;
      nw[i] = cu + d * w[i];
    }
    p.swap(np);
    q.swap(nq);
    u.swap(nu);
    w.swap(nw);
  }
  return p + w;
}

Vec bethe_vector(int N, const std::vector<Complex>& roots) {
  Vec v = vacuum(N);
  for (Complex l : roots) v = apply_b(N, l, v);
  return v;
}

namespace {

Complex pow_int(Complex z, int n) {
  Complex r{1, 0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

double bethe_residual(int N, const std::vector<Complex>& roots) {
  int ell = static_cast<int>(roots.size());
  double worst = 0;
  for (int k = 0; k < ell; ++k) {
    Complex lhs = pow_int(roots[k] + I / 2.0, N);
    Complex rhs = pow_int(roots[k] - I / 2.0, N);
    for (int j = 0; j < ell; ++j) {
      if (j == k) continue;
      lhs *= roots[k] - roots[j] - I;
      rhs *= roots[k] - roots[j] + I;
    }
    // Relative to the term sizes: near-singular quasi-solutions make both
    // sides vanish like eps^N and must not read as converged.  An exactly
    // singular set zeroes both sides identically, which does pass.
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

bool is_singular(const std::vector<Complex>& roots, double tol) {
  bool plus = false, minus = false;
  for (Complex l : roots) {
    if (std::abs(l - I / 2.0) < tol) plus = true;
    if (std::abs(l + I / 2.0) < tol) minus = true;
  }
  return plus && minus;
}

namespace {

// Splits a singular set into {i/2, -i/2} and the remainder.
std::vector<Complex> singular_rest(const std::vector<Complex>& roots,
                                   double tol = 1e-8) {
  std::vector<Complex> rest;
  bool plus = false, minus = false;
  for (Complex l : roots) {
    if (!plus && std::abs(l - I / 2.0) < tol) {
      plus = true;
      continue;
    }
    if (!minus && std::abs(l + I / 2.0) < tol) {
      minus = true;
      continue;
    }
    rest.push_back(l);
  }
  if (!plus || !minus)
    throw std::invalid_argument("expected a singular root set");
  return rest;
}

}  // namespace

Complex energy(double J, const std::vector<Complex>& roots) {
  if (is_singular(roots)) {
    Complex e{-J, 0};
    for (Complex l : singular_rest(roots))
      e -= (J / 2.0) / (l * l + 0.25);
    return e;
  }
  Complex e{0, 0};
  for (Complex l : roots) e -= (J / 2.0) / (l * l + 0.25);
  return e;
}

bool nw_condition(int N, const std::vector<Complex>& roots, double tol) {
  Complex prod{-1, 0};
  for (Complex l : singular_rest(roots))
    prod *= (l + I / 2.0) / (l - I / 2.0);
  return std::abs(pow_int(prod, N) - Complex{1, 0}) < tol;
}

Complex regularization_constant(int N, const std::vector<Complex>& roots) {
  Complex c = 2.0 * pow_int(I, N + 1);
  for (Complex l : singular_rest(roots))
    c *= (l + 3.0 * I / 2.0) / (l - I / 2.0);
  return c;
}

namespace {

// Vector-valued polynomial in epsilon, truncated at fixed degree.
struct PolyVec {
  std::vector<Vec> coeff;  // coeff[m] multiplies epsilon^m
};

// Applies B(lambda(eps)) where lambda is a scalar polynomial in eps.
PolyVec apply_b_poly(int N, const std::vector<Complex>& lambda,
                     const PolyVec& v) {
  long long dim = 1LL << N;
  int D = static_cast<int>(v.coeff.size()) - 1;
  auto zero = [&] {
    PolyVec p;
    p.coeff.assign(D + 1, Vec::Zero(dim));
    return p;
  };
  PolyVec u = zero(), w = v;

  auto scale_acc = [&](PolyVec& out, const PolyVec& in, long long i,
                       const std::vector<Complex>& poly, Complex shift) {
    // out[i] += (poly(eps) + shift) * in[i]
    for (int m = 0; m <= D; ++m) {
      Complex acc = shift * in.coeff[m][i];
      for (int t = 0; t <= m && t < static_cast<int>(poly.size()); ++t)
        acc += poly[t] * in.coeff[m - t][i];
      out.coeff[m][i] += acc;
    }
  };

  for (int k = 1; k <= N; ++k) {
    long long mask = 1LL << (N - k);
    PolyVec nu = zero(), nw = zero();
    for (long long i = 0; i < dim; ++i) {
      double s = (i & mask) ? -1.0 : 1.0;
      scale_acc(nu, u, i, lambda, (I / 2.0) * s);   // a * u
      scale_acc(nw, w, i, lambda, -(I / 2.0) * s);  // d * w
      if (i & mask)
        for (int m = 0; m <= D; ++m)
          nu.coeff[m][i] += I * w.coeff[m][i & ~mask];  // b * w
      else
        for (int m = 0; m <= D; ++m)
          nw.coeff[m][i] += I * u.coeff[m][i | mask];  // c * u
    }
    u = std::move(nu);
    w = std::move(nw);
  }
  return u;
}

}  // namespace

Vec regularized_bethe_vector(int N, const std::vector<Complex>& roots) {
  std::vector<Complex> rest = singular_rest(roots);
  Complex c = regularization_constant(N, roots);
  Vec base = vacuum(N);
  for (Complex l : rest) base = apply_b(N, l, base);

  int D = N + 1;
  PolyVec state;
  state.coeff.assign(D + 1, Vec::Zero(1LL << N));
  state.coeff[0] = base;

  std::vector<Complex> lam_minus{-I / 2.0, 1.0};  // -i/2 + eps
  state = apply_b_poly(N, lam_minus, state);
  std::vector<Complex> lam_plus(N + 1, Complex{0, 0});  // i/2 + eps + c eps^N
  lam_plus[0] = I / 2.0;
  lam_plus[1] = 1.0;
  lam_plus[N] = c;
  state = apply_b_poly(N, lam_plus, state);

  double scale = 0;
  for (auto& v : state.coeff) scale = std::max(scale, v.norm());
  double low = 0;
  for (int m = 0; m < N; ++m) low = std::max(low, state.coeff[m].norm());
  Vec psi = state.coeff[N];
  if (scale == 0 || psi.norm() < 1e-9 * scale || low > 1e-6 * scale)
    throw std::invalid_argument(
        "regularized_bethe_vector: limit does not exist "
        "(Nepomechie-Wang condition violated or numerics failed)");
  return psi;
}

Complex arctan_cut(Complex z) {
  return (std::log(Complex{1, 0} + I * z) - std::log(Complex{1, 0} - I * z)) /
         (2.0 * I);
}

QuantumNumberReport quantum_numbers(int N, const std::vector<Complex>& roots) {
  int ell = static_cast<int>(roots.size());
  QuantumNumberReport rep;
  for (int k = 0; k < ell; ++k) {
    double re = roots[k].real(), im = std::abs(roots[k].imag());
    if (std::abs(re) < 1e-12 && im > 1.0 - 1e-9)
      throw std::invalid_argument("quantum_numbers: root on a branch cut");
    Complex sum{0, 0};
    for (int j = 0; j < ell; ++j)
      if (j != k) sum += arctan_cut(roots[k] - roots[j]);
    Complex jk =
        (N / (2.0 * M_PI)) * (2.0 * arctan_cut(2.0 * roots[k]) - (2.0 / N) * sum);
    rep.j.push_back(jk.real());
  }
  // strings: cluster by real part, then stack vertically
  std::vector<int> order(ell);
  for (int i = 0; i < ell; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (roots[a].real() != roots[b].real())
      return roots[a].real() < roots[b].real();
    return roots[a].imag() < roots[b].imag();
  });
  for (int idx : order) {
    bool placed = false;
    for (auto& s : rep.strings) {
      if (std::abs(roots[idx].real() - s.center) < 0.5) {
        s.members.push_back(idx);
        placed = true;
        break;
      }
    }
    if (!placed) {
      StringGroup g;
      g.members = {idx};
      g.center = roots[idx].real();
      rep.strings.push_back(g);
    }
  }
  for (auto& s : rep.strings) {
    double total = 0, re = 0;
    for (int idx : s.members) {
      total += rep.j[idx];
      re += roots[idx].real();
    }
    s.j_string = total;
    s.center = re / static_cast<double>(s.members.size());
  }
  return rep;
}

std::vector<RiggedConfiguration> physical_singular_predictor(int N, int ell) {
  if (N % 2 != 0)
    throw std::invalid_argument(
        "physical_singular_predictor: even N only (odd lengths are sporadic)");
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(N, 1));
  std::vector<RiggedConfiguration> out;
  for (auto& x : rc::enumerate_hw(Algebra::A, 1, mu)) {
    if (x.total_cells() != ell) continue;
    if (!(x.flipped() == x)) continue;
    int even_rows = 0;
    for (auto& s : x.strings(1))
      if (s.length % 2 == 0) ++even_rows;
    if (even_rows % 2 == 1) out.push_back(x);
  }
  return out;
}

namespace {

using Roots = std::vector<Complex>;

// Pole-cleared Bethe system and its Jacobian.
void system_full(int N, const Roots& l, Eigen::VectorXcd& F,
                 Eigen::MatrixXcd& Jm) {
  int ell = static_cast<int>(l.size());
  F.resize(ell);
  Jm.setZero(ell, ell);
  for (int k = 0; k < ell; ++k) {
    Complex p = pow_int(l[k] + I / 2.0, N), q = pow_int(l[k] - I / 2.0, N);
    Complex dp = Complex(N, 0) * pow_int(l[k] + I / 2.0, N - 1);
    Complex dq = Complex(N, 0) * pow_int(l[k] - I / 2.0, N - 1);
    Complex prodm{1, 0}, prodp{1, 0};
    for (int j = 0; j < ell; ++j) {
      if (j == k) continue;
      prodm *= l[k] - l[j] - I;
      prodp *= l[k] - l[j] + I;
    }
    F[k] = p * prodm - q * prodp;
    Complex sm{0, 0}, sp{0, 0};
    for (int j = 0; j < ell; ++j) {
      if (j == k) continue;
      Complex pm{1, 0}, pp{1, 0};
      for (int j2 = 0; j2 < ell; ++j2) {
        if (j2 == k || j2 == j) continue;
        pm *= l[k] - l[j2] - I;
        pp *= l[k] - l[j2] + I;
      }
      Jm(k, j) = -p * pm + q * pp;
      sm += pm;
      sp += pp;
    }
    Jm(k, k) = dp * prodm + p * sm - dq * prodp - q * sp;
  }
}

// Reduced system for the remainder of a singular set {i/2, -i/2, l_3, ...}.
void system_reduced(int N, const Roots& l, Eigen::VectorXcd& F,
                    Eigen::MatrixXcd& Jm) {
  int m = static_cast<int>(l.size());
  F.resize(m);
  Jm.setZero(m, m);
  for (int k = 0; k < m; ++k) {
    Complex ap = pow_int(l[k] + I / 2.0, N - 1) * (l[k] - 3.0 * I / 2.0);
    Complex aq = pow_int(l[k] - I / 2.0, N - 1) * (l[k] + 3.0 * I / 2.0);
    Complex dap = Complex(N - 1, 0) * pow_int(l[k] + I / 2.0, N - 2) *
                      (l[k] - 3.0 * I / 2.0) +
                  pow_int(l[k] + I / 2.0, N - 1);
    Complex daq = Complex(N - 1, 0) * pow_int(l[k] - I / 2.0, N - 2) *
                      (l[k] + 3.0 * I / 2.0) +
                  pow_int(l[k] - I / 2.0, N - 1);
    Complex prodm{1, 0}, prodp{1, 0};
    for (int j = 0; j < m; ++j) {
      if (j == k) continue;
      prodm *= l[k] - l[j] - I;
      prodp *= l[k] - l[j] + I;
    }
    F[k] = ap * prodm - aq * prodp;
    Complex sm{0, 0}, sp{0, 0};
    for (int j = 0; j < m; ++j) {
      if (j == k) continue;
      Complex pm{1, 0}, pp{1, 0};
      for (int j2 = 0; j2 < m; ++j2) {
        if (j2 == k || j2 == j) continue;
        pm *= l[k] - l[j2] - I;
        pp *= l[k] - l[j2] + I;
      }
      Jm(k, j) = -ap * pm + aq * pp;
      sm += pm;
      sp += pp;
    }
    Jm(k, k) = dap * prodm + ap * sm - daq * prodp - aq * sp;
  }
}

template <typename System>
bool newton(System&& sys, Roots& l, int iters = 120) {
  int m = static_cast<int>(l.size());
  if (m == 0) return true;
  Eigen::VectorXcd F;
  Eigen::MatrixXcd Jm;
  for (int it = 0; it < iters; ++it) {
    sys(l, F, Jm);
    double fn = F.norm();
    if (!std::isfinite(fn)) return false;
    Eigen::VectorXcd step = Jm.fullPivLu().solve(-F);
    double sn = step.norm();
    if (!std::isfinite(sn)) return false;
    if (sn > 2.0) step *= 2.0 / sn;
    for (int i = 0; i < m; ++i) l[i] += step[i];
    if (sn < 1e-14) return true;
  }
  return false;
}

Roots sorted_roots(Roots r) {
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > 1e-7) return a.real() < b.real();
    return a.imag() < b.imag() - 1e-7;
  });
  return r;
}

bool same_roots(const Roots& a, const Roots& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (Complex x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(x - b[j]) < 1e-6) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Bethe-Takahashi string-center equations: the centers of the strings of a
// configuration solve N theta_n(x_a) = 2 pi I_a + sum Theta_{nm}(x_a - x_b)
// with I_a = J_a - P_a/2.  A damped fixed point gives excellent seeds.
std::vector<double> takahashi_centers(int N,
                                      const std::vector<int>& lengths,
                                      const std::vector<double>& qnums) {
  auto theta = [](int n, double x) { return 2 * std::atan(2 * x / n); };
  auto big_theta = [&](int n, int m, double x) {
    double s = 0;
    int lo = std::abs(n - m);
    if (lo > 0) s += theta(lo, x);
    for (int k = lo + 2; k <= n + m - 2; k += 2) s += 2 * theta(k, x);
    s += theta(n + m, x);
    return s;
  };
  int g = static_cast<int>(lengths.size());
  std::vector<double> x(g);
  for (int a = 0; a < g; ++a)
    x[a] = 0.1 * qnums[a] + 0.01 * a;  // mild spread to break symmetry
  auto dtheta = [](int n, double y) { return 4.0 * n / (n * n + 4 * y * y); };
  auto dbig = [&](int n, int m, double y) {
    double s = 0;
    int lo = std::abs(n - m);
    if (lo > 0) s += dtheta(lo, y);
    for (int k = lo + 2; k <= n + m - 2; k += 2) s += 2 * dtheta(k, y);
    s += dtheta(n + m, y);
    return s;
  };
  // damped Newton on the real center equations
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd F(g);
    Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(g, g);
    for (int a = 0; a < g; ++a) {
      double f = N * theta(lengths[a], x[a]) - 2 * M_PI * qnums[a];
      Jm(a, a) = N * dtheta(lengths[a], x[a]);
      for (int b = 0; b < g; ++b) {
        if (b == a) continue;
        f -= big_theta(lengths[a], lengths[b], x[a] - x[b]);
        double d = dbig(lengths[a], lengths[b], x[a] - x[b]);
        Jm(a, a) -= d;
        Jm(a, b) += d;
      }
      F[a] = f;
    }
    if (F.norm() < 1e-13) break;
    Eigen::VectorXd step = Jm.fullPivLu().solve(-F);
    double sn = step.norm();
    if (!std::isfinite(sn)) break;
    if (sn > 1.0) step *= 1.0 / sn;
    for (int a = 0; a < g; ++a) x[a] += step[a];
  }
  return x;
}

std::vector<Roots> rc_seed_patterns(int N, int ell) {
  std::vector<Partition> mu(1);
  mu[0] = Partition(std::vector<int>(N, 1));
  std::vector<Roots> seeds;
  std::mt19937 rng(1931);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  for (auto& x : rc::enumerate_hw(Algebra::A, 1, mu)) {
    if (x.total_cells() != ell) continue;
    std::vector<int> lengths;
    std::vector<double> qnums;
    {
      // same-length riggings form a multiset; the string quantum numbers are
      // the distinct half-integers J - P/2 + (m-1)/2 - position
      auto strings = x.strings(1);  // sorted by decreasing (length, rigging)
      std::size_t i = 0;
      while (i < strings.size()) {
        std::size_t j = i;
        while (j < strings.size() && strings[j].length == strings[i].length)
          ++j;
        int m = static_cast<int>(j - i);
        double p = x.vacancy(1, strings[i].length);
        for (int t = 0; t < m; ++t) {
          lengths.push_back(strings[i + t].length);
          qnums.push_back(strings[i + t].rigging - p / 2.0 +
                          (m - 1) / 2.0 - t);
        }
        i = j;
      }
    }
    auto centers = takahashi_centers(N, lengths, qnums);
    const double deflections[] = {0.0, 0.005, 0.02, 0.06, 0.12};
    for (double eps : deflections)
      for (int noisy = 0; noisy < (eps == 0.0 ? 1 : 2); ++noisy) {
        Roots r;
        for (std::size_t i = 0; i < lengths.size(); ++i) {
          double center = centers[i] + (noisy ? jitter(rng) * 0.3 : 0.0);
          for (int b = 0; b < lengths[i]; ++b) {
            double im = (lengths[i] - 1) / 2.0 - b;
            double wobble = noisy ? jitter(rng) * 0.2 : 0.0;
            r.push_back(
                Complex{center + eps * im * im + wobble, im * (1.0 - eps)});
          }
        }
        seeds.push_back(r);
      }
  }
  return seeds;
}

}  // namespace

std::vector<BetheSolution> solve_bethe(int N, int ell, SeedMode mode,
                                       int random_restarts) {
  std::vector<BetheSolution> out;
  if (ell == 0) {
    BetheSolution s;
    s.N = N;
    s.ell = 0;
    s.regular = true;
    out.push_back(s);
    return out;
  }

  std::vector<Roots> found;
  auto classify_and_store = [&](Roots r) {
    for (Complex x : r)
      if (std::abs(x) > 0.75 * N + 3) return;  // runaway quasi-solution
    r = sorted_roots(std::move(r));
    for (auto& f : found)
      if (same_roots(f, r)) return;
    double res = bethe_residual(N, r);
    if (res > 1e-9) return;
    found.push_back(r);
    // closure under the negation/conjugation group
    for (int mask = 1; mask < 4; ++mask) {
      Roots extra;
      for (Complex x : r) {
        Complex y = mask & 1 ? -x : x;
        extra.push_back(mask & 2 ? std::conj(y) : y);
      }
      extra = sorted_roots(std::move(extra));
      bool dup = false;
      for (auto& f : found) dup |= same_roots(f, extra);
      if (!dup && bethe_residual(N, extra) < 1e-9) found.push_back(extra);
    }
  };

  auto full = [&](const Roots& l, Eigen::VectorXcd& F, Eigen::MatrixXcd& J) {
    system_full(N, l, F, J);
  };
  auto reduced = [&](const Roots& l, Eigen::VectorXcd& F,
                     Eigen::MatrixXcd& J) { system_reduced(N, l, F, J); };

  if (mode != SeedMode::Random) {
    for (auto seed : rc_seed_patterns(N, ell)) {
      Roots r = seed;
      if (newton(full, r)) classify_and_store(r);
      // singular candidates: pull out one vertical pair as {+-i/2}
      if (ell >= 2) {
        Roots rest(seed.begin() + 2, seed.end());
        if (newton(reduced, rest)) {
          Roots whole{I / 2.0, -I / 2.0};
          whole.insert(whole.end(), rest.begin(), rest.end());
          classify_and_store(whole);
        }
      }
    }
  }
  if (mode != SeedMode::RC) {
    std::mt19937 rng(20160907);
    std::uniform_real_distribution<double> ur(-0.35 * N, 0.35 * N),
        ui(-(0.55 * ell + 0.4), 0.55 * ell + 0.4);
    for (int t = 0; t < random_restarts; ++t) {
      Roots r;
      for (int i = 0; i < ell; ++i) r.push_back(Complex{ur(rng), ui(rng)});
      if (newton(full, r)) classify_and_store(r);
      if (ell >= 2) {
        Roots rest;
        for (int i = 0; i + 2 < ell; ++i)
          rest.push_back(Complex{ur(rng), ui(rng)});
        if (newton(reduced, rest)) {
          Roots whole{I / 2.0, -I / 2.0};
          whole.insert(whole.end(), rest.begin(), rest.end());
          classify_and_store(whole);
        }
      }
    }
  }

  for (auto& r : found) {
    BetheSolution s;
    s.roots = r;
    s.N = N;
    s.ell = ell;
    s.residual = bethe_residual(N, r);
    double mind = 1e9;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j)
        mind = std::min(mind, std::abs(r[i] - r[j]));
    s.non_distinct = mind < 1e-8;
    s.singular = is_singular(r);
    if (s.singular) s.physical_singular = nw_condition(N, r, 1e-7);
    s.regular = !s.singular && !s.non_distinct;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const BetheSolution& a,
                                       const BetheSolution& b) {
    auto key = [](const BetheSolution& s) {
      std::vector<std::pair<double, double>> k;
      for (Complex x : s.roots) k.push_back({x.real(), x.imag()});
      return k;
    };
    return key(a) < key(b);
  });
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

AuditReport completeness_audit(int N, double tol) {
  AuditReport rep;
  rep.N = N;
  SparseOp H = hamiltonian(N, 1.0);
  for (int ell = 0; ell <= N / 2; ++ell) {
    AuditRow row;
    row.ell = ell;
    row.expected = binomial(N, ell) - binomial(N, ell - 1);
    std::vector<BetheSolution> sols;
    for (int restarts : {400, 1600, 6400, 25600}) {
      sols = solve_bethe(N, ell, SeedMode::Both, restarts);
      int good = 0;
      for (auto& s : sols) good += s.regular || s.physical_singular;
      if (good >= row.expected) break;
    }
    std::vector<Vec> vectors;
    double worst = 0;
    for (auto& s : sols) {
      Vec psi;
      if (s.regular)
        psi = bethe_vector(N, s.roots);
      else if (s.physical_singular)
        psi = regularized_bethe_vector(N, s.roots);
      else
        continue;
      if (s.regular) ++row.regular;
      if (s.physical_singular) ++row.physical_singular;
      Complex e = energy(1.0, s.roots);
      Vec resid = H * psi - e * psi;
      worst = std::max(worst, resid.norm() / psi.norm());
      vectors.push_back(psi / psi.norm());
    }
    row.max_eigen_residual = worst;
    if (!vectors.empty()) {
      Eigen::MatrixXcd M(vectors[0].size(), vectors.size());
      for (std::size_t i = 0; i < vectors.size(); ++i) M.col(i) = vectors[i];
      Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
      qr.setThreshold(1e-7);
      row.rank = static_cast<int>(qr.rank());
    }
    row.counts_match =
        row.regular + row.physical_singular == row.expected &&
        row.rank == row.regular + row.physical_singular && worst < tol;
    rep.all_match &= row.counts_match;
    rep.rows.push_back(row);
  }
  return rep;
}

SparseOp xxz_hamiltonian(int N, Complex q) {
  if (q == Complex{0, 0}) throw std::invalid_argument("xxz: q must be nonzero");
  long long dim = 1LL << N;
  SparseOp h(dim, dim);
  SparseOp id(dim, dim);
  id.setIdentity();
  Complex qq = (q + 1.0 / q) / 2.0;
  for (int k = 1; k < N; ++k) {
    h = h + SparseOp(spin_embed(N, k, '1') * spin_embed(N, k + 1, '1'));
    h = h + SparseOp(spin_embed(N, k, '2') * spin_embed(N, k + 1, '2'));
    h = h +
        SparseOp(SparseOp(spin_embed(N, k, '3') * spin_embed(N, k + 1, '3') -
                          id) *
                 qq);
  }
  SparseOp boundary =
      SparseOp(spin_embed(N, 1, '3') - spin_embed(N, N, '3'));
  h = h - SparseOp(boundary * ((q - 1.0 / q) / 2.0));
  return h;
}

SparseOp tl_generator(int N, int k, Complex q) {
  if (k < 1 || k >= N) throw std::invalid_argument("tl_generator: bad site");
  long long dim = 1LL << N;
  SparseOp id(dim, dim);
  id.setIdentity();
  SparseOp e(dim, dim);
  e = e - SparseOp(SparseOp(spin_embed(N, k, '1') * spin_embed(N, k + 1, '1')) *
                   Complex{0.5, 0});
  e = e - SparseOp(SparseOp(spin_embed(N, k, '2') * spin_embed(N, k + 1, '2')) *
                   Complex{0.5, 0});
  e = e - SparseOp(SparseOp(spin_embed(N, k, '3') * spin_embed(N, k + 1, '3') -
                            id) *
                   ((q + 1.0 / q) / 4.0));
  e = e + SparseOp(SparseOp(spin_embed(N, k, '3') - spin_embed(N, k + 1, '3')) *
                   ((q - 1.0 / q) / 4.0));
  return e;
}

namespace {

// Polynomials over Z[i] with int64 coefficients.
struct GaussPoly {
  std::vector<std::pair<long long, long long>> c;  // (re, im) per degree
};

GaussPoly gp_mul(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, {0, 0});
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      auto [ar, ai] = a.c[i];
      auto [br, bi] = b.c[j];
      r.c[i + j].first += ar * br - ai * bi;
      r.c[i + j].second += ar * bi + ai * br;
    }
  return r;
}

}  // namespace

std::vector<long long> singular_family_polynomial(int N) {
  if (N < 4) throw std::invalid_argument("singular_family_polynomial: N >= 4");
  // G(v) = (v+i)^(N-2) (v-2i)(v-3i) - (v-i)^(N-2) (v+2i)(v+3i), v = 2 lambda.
  auto lin = [](long long re, long long im) {
    GaussPoly p;
    p.c = {{re, im}, {1, 0}};
    return p;
  };
  GaussPoly plus = lin(0, 1), minus = lin(0, -1);
  GaussPoly a{{{1, 0}}}, b{{{1, 0}}};
  for (int t = 0; t < N - 2; ++t) {
    a = gp_mul(a, plus);
    b = gp_mul(b, minus);
  }
  a = gp_mul(gp_mul(a, lin(0, -2)), lin(0, -3));
  b = gp_mul(gp_mul(b, lin(0, 2)), lin(0, 3));
  GaussPoly g;
  g.c.assign(std::max(a.c.size(), b.c.size()), {0, 0});
  for (std::size_t i = 0; i < g.c.size(); ++i) {
    if (i < a.c.size()) {
      g.c[i].first += a.c[i].first;
      g.c[i].second += a.c[i].second;
    }
    if (i < b.c.size()) {
      g.c[i].first -= b.c[i].first;
      g.c[i].second -= b.c[i].second;
    }
  }
  // G is odd with purely imaginary coefficients: G = i sum d_k v^(2k+1).
  std::vector<long long> out;
  for (std::size_t deg = 1; deg < g.c.size(); deg += 2) {
    if (g.c[deg].first != 0)
      throw std::logic_error("singular polynomial: unexpected real part");
    out.push_back(g.c[deg].second);
  }
  for (std::size_t deg = 0; deg < g.c.size(); deg += 2)
    if (g.c[deg].first != 0 || g.c[deg].second != 0)
      throw std::logic_error("singular polynomial: not odd");
  // substitute v^2 = 4 xi
  long long power = 1;
  for (auto& coefficient : out) {
    coefficient *= power;
    power *= 4;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  // primitive form with a positive leading coefficient
  long long content = 0;
  for (long long coefficient : out)
    content = std::gcd(content, std::abs(coefficient));
  if (content > 1)
    for (auto& coefficient : out) coefficient /= content;
  if (out.back() < 0)
    for (auto& coefficient : out) coefficient = -coefficient;
  return out;
}

std::vector<double> real_roots(const std::vector<long long>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> z(deg), c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c[i] = Complex(static_cast<double>(coeffs[i]), 0);
  for (int i = 0; i < deg; ++i)
    z[i] = std::pow(Complex{0.4, 0.9}, i + 1);
  for (int it = 0; it < 600; ++it) {
    double moved = 0;
    for (int i = 0; i < deg; ++i) {
      Complex num = c[deg];
      for (int d = deg - 1; d >= 0; --d) num = num * z[i] + c[d];
      Complex den = c[deg];
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      Complex step = num / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  std::vector<double> out;
  for (Complex r : z)
    if (std::abs(r.imag()) < 1e-7) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spinchain

}  // namespace rck
