#include "tpschur/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace tpschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

bool passes_even_type(const Partition& lambda, int n) {
  for (int l = 1; l <= n; ++l) {
    if ((lambda.part(l) + n - l) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool PartitionFilter::admits(const Partition& lambda) const {
  if (max_size && lambda.size() > *max_size) return false;
  if (max_length && lambda.length() > *max_length) return false;
  if (max_part && lambda.part(1) > *max_part) return false;
  if (even_type_n && !passes_even_type(lambda, *even_type_n)) return false;
  return true;
}

bool PartitionFilter::is_finite() const {
  if (max_size) return true;
  if (max_length && max_part) return true;
  if (max_length && *max_length == 0) return true;
  if (max_part && *max_part == 0) return true;
  return false;
}

namespace {

// Partitions of k, largest part first, descending lexicographic order.
void generate_grade(int k, int largest, int slots, const PartitionFilter& filter,
                    std::vector<int>& current, std::vector<Partition>& out) {
  if (k == 0) {
    Partition lambda(current);
    if (!filter.even_type_n || filter.admits(lambda)) out.push_back(std::move(lambda));
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(k, largest); p >= 1; --p) {
    // remaining slots at value p must still be able to reach k
    if (static_cast<long long>(p) * slots < k) break;
    current.push_back(p);
    generate_grade(k - p, p, slots - 1, filter, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k, const PartitionFilter& filter) {
  std::vector<Partition> out;
  if (k < 0) return out;
  if (filter.max_size && k > *filter.max_size) return out;
  int slots = filter.max_length ? std::min(*filter.max_length, k) : k;
  int largest = filter.max_part ? std::min(*filter.max_part, k) : k;
  if (k == 0) {
    Partition empty;
    if (filter.admits(empty)) out.push_back(empty);
    return out;
  }
  std::vector<int> current;
  generate_grade(k, largest, slots, filter, current, out);
  return out;
}

std::vector<Partition> enumerate(const PartitionFilter& filter) {
  if (!filter.is_finite())
    throw DomainError("partition filter admits an infinite set; bound max_size or both max_length and max_part");
  long long bound = std::numeric_limits<int>::max();
  if (filter.max_size) bound = *filter.max_size;
  if (filter.max_length && filter.max_part)
    bound = std::min(bound, static_cast<long long>(*filter.max_length) * *filter.max_part);
  if ((filter.max_length && *filter.max_length == 0) || (filter.max_part && *filter.max_part == 0))
    bound = 0;
  std::vector<Partition> out;
  for (int k = 0; k <= bound; ++k) {
    auto grade = partitions_of(k, filter);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

Integer c_lambda(const Partition& lambda, int width) {
  if (width < 1) throw DomainError("c_lambda: width must be positive");
  if (lambda.length() > width)
    throw DomainError("c_lambda: partition has more than width = " + std::to_string(width) + " parts");
  Integer product(1);
  for (int m = 1; m <= width; ++m) {
    product *= factorial(static_cast<unsigned>(lambda.part(m) + width - m));
  }
  return product;
}

std::vector<int> staircase_indices(const Partition& lambda, int width) {
  if (width < 1) throw DomainError("staircase_indices: width must be positive");
  if (lambda.length() > width)
    throw DomainError("staircase_indices: partition has more than width = " + std::to_string(width) + " parts");
  std::vector<int> indices(width);
  for (int m = 1; m <= width; ++m) indices[m - 1] = lambda.part(m) + width - m;
  return indices;
}

}  // namespace tpschur
