#pragma once

// Integer partitions, constrained enumeration, and the factorial constants
// attached to them.

#include <compare>
#include <optional>
#include <vector>

#include "tpschur/errors.hpp"
#include "tpschur/scalar.hpp"

namespace tpschur {

/// Weakly decreasing tuple of positive integers. Stored without trailing
/// zeros; operations taking a width zero-pad on the fly.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// |lambda|, the sum of the parts.
  int size() const { return size_; }
  /// l(lambda), the number of (positive) parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// l-th part, 1-based, zero beyond length().
  int part(int l) const {
    return (l >= 1 && l <= length()) ? parts_[l - 1] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Constraints carving finite pieces out of the set of all partitions.
/// even_type_n = n keeps exactly those lambda with lambda_l + n - l even for
/// every l = 1..n (parts beyond the length count as zero).
struct PartitionFilter {
  std::optional<int> max_size;
  std::optional<int> max_length;
  std::optional<int> max_part;
  std::optional<int> even_type_n;

  bool admits(const Partition& lambda) const;
  /// True when the admitted set is provably finite (a size bound, or both a
  /// length and a part bound, or a degenerate zero bound).
  bool is_finite() const;
};

/// All partitions passing the filter, graded order: ascending |lambda|,
/// lexicographically descending within a grade. Throws DomainError when the
/// filter admits an infinite set.
std::vector<Partition> enumerate(const PartitionFilter& filter);

/// The grade |lambda| = k slice of enumerate(), in the same order. Always
/// finite; the filter's max_size still applies.
std::vector<Partition> partitions_of(int k, const PartitionFilter& filter);

/// C_lambda = prod_{m=1..j} (lambda_m + j - m)! with lambda zero-padded to
/// width j. Requires l(lambda) <= j.
Integer c_lambda(const Partition& lambda, int width);

/// (lambda_1 + j - 1, lambda_2 + j - 2, ..., lambda_j); strictly decreasing,
/// bijective with partitions of length <= j.
std::vector<int> staircase_indices(const Partition& lambda, int width);

}  // namespace tpschur
