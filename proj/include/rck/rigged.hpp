#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rck/partition.hpp"

namespace rck {

enum class Algebra { A, D, C };

std::string algebra_name(Algebra g);
Algebra algebra_from_name(const std::string& s);

/// One string of a rigged configuration: a row of nu^(a) with its rigging.
struct RcString {
  int length = 0;
  int rigging = 0;
  bool operator==(const RcString&) const = default;
  auto operator<=>(const RcString&) const = default;
};

/// Rigged configuration for A_n^(1), D_n^(1) or C_n^(1).
///
/// mu holds the tensor-shape multiplicity data.  Indexing differs by type,
/// following the respective definitions: for type A, mu[a] is mu^(a) with
/// a = 0..n-1 and a row of length l in mu^(a) stands for a factor B^{a+1,l};
/// for types D and C, mu[a-1] is mu^(a) with a = 1..n and a row of length l
/// in mu^(a) stands for a factor B^{a,l}.  The vacancy formulas below are
/// per-type and keep these conventions verbatim.
class RiggedConfiguration {
public:
  RiggedConfiguration() = default;
  RiggedConfiguration(Algebra g, int n, std::vector<Partition> mu);

  Algebra algebra() const { return algebra_; }
  int rank() const { return n_; }

  const Partition& mu(int a_index) const { return mu_[a_index]; }
  const std::vector<Partition>& mu_all() const { return mu_; }
  void set_mu(std::vector<Partition> mu);

  /// Strings of color a (1-based); kept sorted by decreasing (length,
  /// rigging) whenever the value is canonical.
  const std::vector<RcString>& strings(int a) const {
    return strings_[a - 1];
  }
  std::vector<RcString>& strings_mut(int a) { return strings_[a - 1]; }

  Partition nu(int a) const;
  int total_cells() const;

  /// Vacancy number P_l^(a).
  int vacancy(int a, int l) const;

  bool is_highest_weight() const;
  /// J <= P for every string (holds for every KR-crystal image).
  bool riggings_bounded() const;

  void canonicalize();

  /// kappa: every rigging -> vacancy - rigging.
  RiggedConfiguration flipped() const;

  bool operator==(const RiggedConfiguration& o) const;
  bool operator<(const RiggedConfiguration& o) const;

  std::string pretty() const;  // vacancy left, rigging right of each row
  std::string str() const;     // compact one-line form

private:
  Algebra algebra_ = Algebra::A;
  int n_ = 1;
  std::vector<Partition> mu_;
  std::vector<std::vector<RcString>> strings_;
};

namespace rc {

/// All highest-weight rigged configurations for the given shape data, in a
/// deterministic graded-lexicographic order.  If max_total_cells >= 0 the
/// search is restricted to configurations with at most that many cells;
/// otherwise a per-type bound derived from mu is used.
std::vector<RiggedConfiguration> enumerate_hw(Algebra g, int n,
                                              const std::vector<Partition>& mu,
                                              int max_total_cells = -1);

RiggedConfiguration flip(const RiggedConfiguration& x);

enum class Mode { KR, Binf };
enum class Op { E, F };

/// Kashiwara operators on rigged configurations.  In KR mode f returns
/// nullopt when a rigging would exceed its vacancy; in B(infinity) mode
/// (empty mu) f never vanishes.
std::optional<RiggedConfiguration> kashiwara(const RiggedConfiguration& x,
                                             Op op, int a,
                                             Mode mode = Mode::KR);

/// Charge of a type A rigged configuration in the one-row-factors setting
/// (mu^(0) plays the role of nu^(0); all higher mu empty).
long long charge(const RiggedConfiguration& x);

/// Kostka-Foulkes polynomial K_{lambda,mu}(q) as exponent -> coefficient.
/// Computed as sum of q^{n(mu) - cc} over highest-weight type A rigged
/// configurations of weight lambda with mu^(0) = mu, where cc is the
/// cocharge statistic charge() + min(mu, nu^(1)).  This normalization is
/// the one matching K_{(2),(11)} = q and K_{(21),(111)} = q + q^2.
std::map<int, long long> kostka(const Partition& lambda, const Partition& mu);

/// Classical weight.  Valid for every type A configuration; types D and C
/// require a stable configuration.
Partition weight(const RiggedConfiguration& x);

/// Stability in the sense of the diamond classification: the configuration
/// at the last A-like node is tileable by the type's unit and the nodes
/// beyond it carry the forced tail.
bool is_stable(const RiggedConfiguration& x);

/// Index of the last A-like Dynkin node (n for A, n-2 for D, n-1 for C).
int a_diamond(Algebra g, int n);

/// Swap rigging and corigging of every string; B(infinity) configurations
/// only (empty mu).
RiggedConfiguration kashiwara_involution(const RiggedConfiguration& x);

}  // namespace rc

}  // namespace rck
