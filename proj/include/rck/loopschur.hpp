#pragma once

#include <functional>
#include <map>
#include <vector>

#include "rck/bijection.hpp"
#include "rck/partition.hpp"

namespace rck {

namespace loopschur {

/// Monomial in the variables x_i^{(j)}, i = 1..L, j in Z/nZ stored as 1..n.
struct LoopMonomial {
  std::map<std::pair<int, int>, int> exponents;  // (i, residue) -> power
  bool operator==(const LoopMonomial&) const = default;
  bool operator<(const LoopMonomial& o) const { return exponents < o.exponents; }
};

/// Loop Schur function s^{(r)}_{outer/inner} with letters 1..L and residues
/// mod n: one monomial per semistandard tableau, cell (i,j) contributing
/// x_{T(i,j)}^{(i-j+r)}.
std::vector<LoopMonomial> loop_schur(const Partition& outer,
                                     const Partition& inner, int r, int L,
                                     int n);

/// Cylindric variant D_a(outer/inner): only tableaux whose extension by the
/// shift (a rows down, n-a columns left) stays semistandard contribute.
std::vector<LoopMonomial> cylindric_loop_schur(const Partition& outer,
                                               const Partition& inner, int a,
                                               int r, int L, int n);

/// Tropicalization: min over monomials of the exponent-weighted sums.
long long tropical_eval(
    const std::vector<LoopMonomial>& poly,
    const std::function<long long(int, int)>& value_of);

/// The staircase shape lambda(a, i): starts as (n-a)^L, then repeatedly
/// removes up to n outer-rim cells starting from the bottom-left cell.
Partition staircase(int a, int i, int n, int L);

/// nu_i^(a) from the tropical ratio of cylindric loop Schur functions at the
/// path coordinates (type A, one-row factors).  A theorem for a = 1, a
/// conjecture otherwise (see conjectural()).
long long nu_from_tropical(const CrystalPath& path, int a, int i);

inline bool conjectural(int a) { return a > 1; }

}  // namespace loopschur

}  // namespace rck
