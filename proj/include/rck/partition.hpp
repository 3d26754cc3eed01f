#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rck {

/// Integer partition: weakly decreasing list of positive parts.  The empty
/// partition is allowed and prints as "-".
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate();
  }

  /// Builds from an arbitrary list of nonnegative entries: zeros are dropped
  /// and the rest sorted decreasingly.
  static Partition sorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  std::size_t rows() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Number of cells in the leftmost k columns: sum_i min(p_i, k).
  int q_count(int k) const {
    if (k < 0) throw std::invalid_argument("q_count: negative column index");
    int s = 0;
    for (int p : parts_) s += std::min(p, k);
    return s;
  }

  /// Column heights (conjugate partition).
  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.assign(parts_[0], 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
  }

  bool contains(const Partition& inner) const {
    for (std::size_t i = 0; i < inner.rows(); ++i)
      if ((*this)[i] < inner.parts_[i]) return false;
    return true;
  }

  /// min(lambda, mu) = sum_{i,j} min(lambda_i, mu_j).
  static long long pairing(const Partition& a, const Partition& b) {
    long long s = 0;
    for (int p : a.parts_)
      for (int q : b.parts_) s += std::min(p, q);
    return s;
  }

  /// n(mu) = sum_i (i-1) mu_i.
  long long weighted_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      s += static_cast<long long>(i) * parts_[i];
    return s;
  }

  void push_row(int len) {
    if (len <= 0) throw std::invalid_argument("push_row: nonpositive part");
    parts_.push_back(len);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  /// Removes one row of the given length; throws if absent.
  void remove_row(int len) {
    auto it = std::find(parts_.begin(), parts_.end(), len);
    if (it == parts_.end())
      throw std::invalid_argument("remove_row: no row of length " +
                                  std::to_string(len));
    parts_.erase(it);
  }

  bool operator==(const Partition& o) const = default;
  auto operator<=>(const Partition& o) const = default;

  std::string str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

private:
  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("Partition: parts must decrease weakly");
    }
  }

  std::vector<int> parts_;
};

/// All partitions of n with parts bounded by max_part (0 = unbounded).
std::vector<Partition> partitions_of(int n, int max_part = 0);

}  // namespace rck
