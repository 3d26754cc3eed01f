#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rck/tableau.hpp"

namespace rck {

/// Tensor product of type A_n^(1) KR-crystal elements.  Factors are
/// rectangular semistandard tableaux over 1..n+1; the leftmost factor is
/// factors[0].  Kashiwara's tensor-product convention throughout.
struct PathA {
  std::vector<Tableau> factors;
  int n = 1;

  bool operator==(const PathA& o) const = default;
  std::string str() const;
  static PathA parse(const std::string& text, int n);
};

namespace crystal_a {

/// Classical highest weight element of B^{r,s}: row i filled with letter i.
Tableau classical_hw(int r, int s);

bool valid_element(const Tableau& t, int n);

/// All of B^{r,s} for rank n (rectangular SSYT over 1..n+1), in a fixed
/// deterministic order.
std::vector<Tableau> elements(int r, int s, int n);

enum class Op { E, F };

/// Signature-rule action of e~_a / f~_a on a path; nullopt encodes 0.
std::optional<PathA> kashiwara(const PathA& p, Op op, int a);

int eps(const Tableau& t, int a, int n);
int phi(const Tableau& t, int a, int n);

struct RResult {
  Tableau left;    // element of B^{r',s'}
  Tableau right;   // element of B^{r,s}
  int energy = 0;  // H(b (x) b')
};

/// Combinatorial R-matrix B^{r,s} (x) B^{r',s'} -> B^{r',s'} (x) B^{r,s}
/// computed by Schensted insertion and reverse insertion, together with the
/// energy H(b (x) b').
RResult combinatorial_r(const Tableau& b, const Tableau& bprime);

struct AffineElement {
  Tableau element;
  int mode = 0;
  bool operator==(const AffineElement& o) const = default;
};

/// R on Aff(B) (x) Aff(B'): modes shift by -/+ H(b (x) b').
std::pair<AffineElement, AffineElement> affine_r(const AffineElement& x,
                                                 const AffineElement& y);

}  // namespace crystal_a

}  // namespace rck
