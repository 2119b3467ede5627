#pragma once

// Vandermonde products and Schur polynomial evaluation. Two independent
// algorithms are kept side by side: the bialternant determinant ratio and
// the semistandard-tableau monomial sum. They cross-validate each other in
// the test suites.
//
// Convention: vandermonde(x) = prod_{i<j} (x_j - x_i) = det(x_j^{i-1}),
// positive on increasing sequences. All expansion identities in this
// library are stated and verified against this convention.

#include <functional>

#include "tpschur/linalg.hpp"
#include "tpschur/partition.hpp"

namespace tpschur {

/// prod_{i<j} (x_j - x_i); 1 for a single node.
template <typename Scalar>
Scalar vandermonde(const NodeSequence<Scalar>& x) {
  Scalar v(1);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) v *= x[j] - x[i];
  return v;
}

/// Schur polynomial s_lambda(x) as the bialternant determinant ratio
/// det(x_j^{lambda_i + n - i}) / det(x_j^{n - i}). Requires pairwise
/// distinct nodes; returns 0 without computing when l(lambda) > n.
template <typename Scalar>
Scalar schur_bialternant(const Partition& lambda, const NodeSequence<Scalar>& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return Scalar(0);
  if (n == 0) return Scalar(1);
  Matrix<Scalar> numerator(n, n), denominator(n, n);
  for (int r = 0; r < n; ++r) {
    const auto pad = static_cast<unsigned long>(n - 1 - r);
    const auto exponent = static_cast<unsigned long>(lambda.part(r + 1)) + pad;
    for (int c = 0; c < n; ++c) {
      numerator(r, c) = pow_n(x[c], exponent);
      denominator(r, c) = pow_n(x[c], pad);
    }
  }
  Scalar den = determinant(std::move(denominator));
  if (den == 0) throw DomainError("schur_bialternant: repeated nodes (use schur_tableaux)");
  return determinant(std::move(numerator)) / den;
}

struct TableauxGuard {
  int max_weight = 25;  // bound on |lambda|
  int max_vars = 8;     // bound on the number of nodes
};

/// Schur polynomial as the monomial sum over semistandard Young tableaux of
/// shape lambda with entries in {1..n}. Defined for repeated or zero nodes.
template <typename Scalar>
Scalar schur_tableaux(const Partition& lambda, const NodeSequence<Scalar>& x,
                      const TableauxGuard& guard = {}) {
  const int n = static_cast<int>(x.size());
  if (lambda.size() > guard.max_weight)
    throw ResourceError("schur_tableaux: |lambda| = " + std::to_string(lambda.size()) +
                        " exceeds guard " + std::to_string(guard.max_weight));
  if (n > guard.max_vars)
    throw ResourceError("schur_tableaux: " + std::to_string(n) + " nodes exceed guard " +
                        std::to_string(guard.max_vars));
  if (lambda.length() > n) return Scalar(0);
  if (lambda.empty()) return Scalar(1);

  const int rows = lambda.length();
  std::vector<std::vector<int>> tableau(rows);
  for (int r = 0; r < rows; ++r) tableau[r].resize(lambda.parts()[r]);

  Scalar total(0);
  // rows weakly increase left to right, columns strictly increase downward
  std::function<void(int, int, const Scalar&)> fill = [&](int r, int c, const Scalar& monomial) {
    if (r == rows) {
      total += monomial;
      return;
    }
    if (c == static_cast<int>(tableau[r].size())) {
      fill(r + 1, 0, monomial);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
    if (r > 0 && c < static_cast<int>(tableau[r - 1].size()))
      lo = std::max(lo, tableau[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      tableau[r][c] = v;
      fill(r, c + 1, monomial * x[v - 1]);
    }
  };
  fill(0, 0, Scalar(1));
  return total;
}

/// Elementwise alpha * x; homogeneity partner of the Schur evaluators.
template <typename Scalar>
NodeSequence<Scalar> scale_nodes(const Scalar& alpha, NodeSequence<Scalar> x) {
  for (auto& value : x) value *= alpha;
  return x;
}

}  // namespace tpschur
