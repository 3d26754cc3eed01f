#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rck/rigged.hpp"
#include "rck/tableau.hpp"

namespace rck {

/// Tensor product of KR-crystal elements for the bijection; factors[0] is the
/// leftmost factor.  Type A letters are 1..n+1; types D and C use 1..n with
/// negatives for barred letters.
struct CrystalPath {
  Algebra algebra = Algebra::A;
  int n = 1;
  std::vector<Tableau> factors;

  bool operator==(const CrystalPath&) const = default;
  std::string str() const;
};

namespace bijection {

/// One delta application: the consumed column position and what it removed.
struct DeltaStep {
  int height = 0;          // color the pass started from
  int width = 0;           // width of the mu row being consumed
  Letter letter = 0;       // emitted letter (negative = barred)
  std::vector<std::array<int, 3>> boxes;  // (color, old length, boxes taken)
};

using Trace = std::vector<DeltaStep>;

/// A mu-row pick for phi_inverse: factor height and width.
struct FactorPick {
  int height = 1;
  int width = 1;
};

/// The rigged configuration bijection, path -> (nu, J).  Supports type A
/// tensor products of B^{r,s} (r <= n), type D with r <= n-2, and type C
/// (B^{1,1})^{(x) L}.
RiggedConfiguration phi(const CrystalPath& path, Trace* trace = nullptr);

/// Inverse bijection.  Factors are extracted right to left: the first pick
/// becomes the rightmost factor of the result.  When order is empty a
/// canonical order (tallest then widest first) is used.
CrystalPath phi_inverse(const RiggedConfiguration& rc,
                        std::vector<FactorPick> order = {},
                        Trace* trace = nullptr);

/// Picks that phi_inverse needs to reproduce the factors of `path` in their
/// original order.
std::vector<FactorPick> order_of(const CrystalPath& path);

/// Combinatorial R as Phi^{-1} o Phi with permuted factor order.  new_order
/// maps output slots to input factor indices; empty means reversal.
CrystalPath r_matrix_via_rc(const CrystalPath& path,
                            std::vector<int> new_order = {});

/// The bijection with rigging and corigging roles exchanged throughout.
RiggedConfiguration lusztig_phi(const CrystalPath& path);

/// Result of the Psi bijection: the type-A-like configuration together with
/// the Littlewood-Richardson recording tableau (skew, inner shape lambda).
struct PsiResult {
  RiggedConfiguration rc;
  Tableau recording;
  Partition lambda, mu, eta;
};

/// Psi on a stable configuration; requires the Eq-style rank condition
/// a_diamond >= len(wt) + len(nu^(a_diamond)).
PsiResult psi(const RiggedConfiguration& rc);

/// Inverse of psi: rebuilds the stable configuration from the image and the
/// recording tableau.
RiggedConfiguration psi_inverse(const RiggedConfiguration& rc,
                                const Tableau& recording);

/// True if t is a Littlewood-Richardson tableau: semistandard skew with
/// Yamanouchi row word.
bool is_lr_tableau(const Tableau& t);

}  // namespace bijection

}  // namespace rck
