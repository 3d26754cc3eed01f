#pragma once

#include <optional>
#include <vector>

#include "rck/bijection.hpp"
#include "rck/rigged.hpp"
#include "rck/tableau.hpp"

namespace rck {

namespace crystal_d {

/// Letter crystal of the D_n vector representation plus the affine 0-arrows.
/// Letters are 1..n and -1..-n (barred).
Letter f_letter(Letter x, int a, int n);  // 0 when the arrow is absent
Letter e_letter(Letter x, int a, int n);
int phi_letter(Letter x, int a, int n);
int eps_letter(Letter x, int a, int n);

std::vector<Letter> letters(int n);  // 1..n, -n..-1 in crystal order

enum class Op { E, F };

/// Signature-rule action on a type D path; a = 0 is supported on paths of
/// B^{1,1} factors only.
std::optional<CrystalPath> kashiwara(const CrystalPath& p, Op op, int a);

int eps(const Tableau& t, int a, int n);
int phi(const Tableau& t, int a, int n);

/// KR tableau of the classical highest weight element u_lambda of B^{r,s}:
/// the Kashiwara-Nakashima tableau of lambda with its gaps filled.
Tableau fill(int r, int s, int n, const Partition& lambda);

/// Plus-minus diagram: column heights (weakly decreasing, same parity as r)
/// with per-column sign content.
struct PmDiagram {
  struct Column {
    int height = 0;
    bool plus = false, minus = false;
  };
  std::vector<Column> columns;

  /// Parses tokens like "8:- 6:+- 4:. 2:+- 0:." (height:signs).
  static PmDiagram parse(const std::string& text);
  std::string str() const;
};

/// Rigged configuration of the {2..n}-highest element indexed by a
/// plus-minus diagram of B^{r,s}.
RiggedConfiguration pm_to_rc(const PmDiagram& diagram, int r, int s, int n);

}  // namespace crystal_d

}  // namespace rck
