#pragma once

#include <string>
#include <vector>

#include "rck/bijection.hpp"
#include "rck/crystal_a.hpp"
#include "rck/rigged.hpp"

namespace rck {

namespace boxball {

/// Infinite carrier width marker for T^{a,infinity}.
inline constexpr int kInf = -1;

/// Box-ball time evolution T^{a,l} by a left-to-right carrier pass.  Type A
/// paths use the insertion R-matrix; type D paths go through the bijection.
CrystalPath evolve(const CrystalPath& path, int a, int l);

/// E^{a,l}(b): sum of the energies collected along the carrier pass.  Type A
/// only.
long long energy_sum(const CrystalPath& path, int a, int l);

/// Number of boxes added to column l of nu^(a) when the bijection processes
/// column j of factor k (1-based; columns counted from the left).
long long local_increment(const CrystalPath& path, int k, int j, int a, int l);

/// Ultradiscrete tau function tau_{k,d} for a type A configuration whose
/// nu^(0) rows are given in path order (not necessarily sorted); d ranges
/// over 0..n+1.
long long tau(const RiggedConfiguration& rc, const std::vector<int>& nu0,
              int k, int d);

/// Ball-counting functional rho_{k,d} over the T^{1,infinity} orbit.
long long rho(const CrystalPath& path, int k, int d);

/// x_{k,d} = tau_{k,d} - tau_{k-1,d} - tau_{k,d-1} + tau_{k-1,d-1}: the
/// number of letters d in factor k of the inverse bijection image.
long long letter_count_from_tau(const RiggedConfiguration& rc,
                                const std::vector<int>& nu0, int k, int d);

// --- periodic system, A_1 states as strings of '1' and '2' ---

std::string periodic_evolve(const std::string& state, int l);

/// Rotation of the state that satisfies the highest-weight (prefix) rule.
int highest_weight_cut(const std::string& state);

/// x(k) for k = 1..L from the ultradiscrete theta function, given the
/// distinct soliton lengths nu (ascending), their riggings, and the period.
std::vector<int> periodic_theta_state(const std::vector<int>& nu,
                                      const std::vector<long long>& riggings,
                                      int period);

// --- box-basket-ball system ---

struct BBBSite {
  long long spaces = 0, baskets = 0, balls = 0;
  bool operator==(const BBBSite&) const = default;
};

/// The whurl relation R: x (x) y -> y' (x) x'.
std::pair<BBBSite, BBBSite> whurl(const BBBSite& x, const BBBSite& y);

/// Carrier evolution T_l of the box-basket-ball system; l = kInf for the
/// full carrier.
std::vector<BBBSite> evolve_bbb(const std::vector<BBBSite>& state, int l);

// --- compact text forms ---

/// Parses "22211112111111" or "1 2 23 124 3" into a type A path of one-row
/// factors (rank = largest letter - 1, at least min_rank).
CrystalPath parse_state(const std::string& text, int min_rank = 1);
std::string state_str(const CrystalPath& path);

}  // namespace boxball

}  // namespace rck
