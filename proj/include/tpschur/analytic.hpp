#pragma once

// Analytic function systems represented by their derivative sequences at 0.
// The infinite Wronskian W_f = (f_j^{(i-1)}(0)) is never materialized;
// entries are produced lazily from the streams and cached.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpschur/linalg.hpp"
#include "tpschur/partition.hpp"
#include "tpschur/symfunc.hpp"

namespace tpschur {

/// Radius of convergence; either finite positive or infinite.
template <typename Scalar>
struct Radius {
  bool is_infinite = true;
  Scalar value{0};

  static Radius infinite() { return Radius{true, Scalar(0)}; }
  static Radius finite(Scalar r) {
    if (r <= 0) throw DomainError("radius of convergence must be positive");
    return Radius{false, std::move(r)};
  }
  bool contains(const Scalar& x) const { return is_infinite || abs(x) < value; }
  Radius scaled_down(const Scalar& factor) const {  // radius of x -> f(factor*x)
    if (is_infinite || factor == 0) return *this;
    return finite(value / abs(factor));
  }
};

/// One analytic function, held as the sequence f^(k)(0) plus convergence
/// metadata. Streams are immutable values; the derivative cache is shared
/// between copies and internally synchronized.
template <typename Scalar>
class CoefficientStream {
 public:
  using DerivFn = std::function<Scalar(int)>;
  using ClosedFn = std::function<Scalar(const Scalar&)>;

  CoefficientStream() = default;
  CoefficientStream(std::string name, DerivFn derivs, Radius<Scalar> radius,
                    ClosedFn closed_form = nullptr)
      : state_(std::make_shared<State>(State{std::move(name), std::move(derivs),
                                             std::move(radius), std::move(closed_form),
                                             {}, {}, {}})) {}

  /// f^(k)(0), cached.
  Scalar deriv(int k) const {
    if (k < 0) throw DomainError("derivative order must be nonnegative");
    State& st = *state_;
    std::lock_guard<std::mutex> lock(st.mutex);
    while (static_cast<int>(st.cache.size()) <= k)
      st.cache.push_back(st.derivs(static_cast<int>(st.cache.size())));
    return st.cache[k];
  }

  const Radius<Scalar>& radius() const { return state_->radius; }
  const std::string& name() const { return state_->name; }

  bool has_closed_form() const { return static_cast<bool>(state_->closed_form); }
  Scalar eval_closed(const Scalar& t) const {
    if (!has_closed_form()) throw DomainError("stream '" + name() + "' has no closed form");
    return state_->closed_form(t);
  }

  /// Partial Maclaurin sum: sum_{k=0..order} f^(k)(0) t^k / k!.
  Scalar eval_series(const Scalar& t, int order) const {
    if (order < 0) throw DomainError("series order must be nonnegative");
    Scalar sum(0), power(1);
    for (int k = 0; k <= order; ++k) {
      Scalar d = deriv(k);
      if (d != 0) sum += d * power / Scalar(factorial(static_cast<unsigned>(k)));
      power *= t;
    }
    return sum;
  }

  /// Closed form when available, else the partial sum to `order`.
  Scalar evaluate(const Scalar& t, int order) const {
    return has_closed_form() ? eval_closed(t) : eval_series(t, order);
  }

  /// The k-th derivative function as a stream: derivs'(m) = derivs(m + k).
  CoefficientStream shifted(int k) const {
    if (k < 0) throw DomainError("shift must be nonnegative");
    if (k == 0) return *this;
    CoefficientStream self = *this;
    std::string name = state_->name + "^(" + std::to_string(k) + ")";
    return CoefficientStream(std::move(name), [self, k](int m) { return self.deriv(m + k); },
                             state_->radius);
  }

  /// Derivative list of a custom stream, when this was built from one.
  const std::optional<std::vector<Scalar>>& custom_derivs() const { return state_->custom; }

 private:
  struct State {
    std::string name;
    DerivFn derivs;
    Radius<Scalar> radius;
    ClosedFn closed_form;
    std::optional<std::vector<Scalar>> custom;
    std::vector<Scalar> cache;
    std::mutex mutex;
  };
  std::shared_ptr<State> state_;

  template <typename S>
  friend CoefficientStream<S> custom_stream(std::vector<S>);
};

/// Builtin streams with exact derivative sequences. Closed-form evaluation
/// is attached where the scalar kind supports it: the geometric family is
/// rational and works in both modes, the transcendental ones (exp, trig,
/// hyperbolic) only in float mode.
template <typename Scalar>
CoefficientStream<Scalar> builtin_stream(const std::string& name) {
  using Stream = CoefficientStream<Scalar>;
  auto fact = [](int k) { return Scalar(factorial(static_cast<unsigned>(k))); };
  if (name == "exp") {
    typename Stream::ClosedFn closed = nullptr;
    if constexpr (!is_exact_v<Scalar>) closed = [](const Scalar& t) { return exp(t); };
    return Stream(name, [](int) { return Scalar(1); }, Radius<Scalar>::infinite(), closed);
  }
  if (name == "geometric") {  // 1/(1-x)
    return Stream(name, fact, Radius<Scalar>::finite(Scalar(1)), [](const Scalar& t) {
      if (t == 1) throw DomainError("geometric stream: pole at t = 1");
      return Scalar(1) / (Scalar(1) - t);
    });
  }
  if (name == "geometric_even") {  // 1/(1-x^2)
    return Stream(name, [fact](int k) { return k % 2 == 0 ? fact(k) : Scalar(0); },
                  Radius<Scalar>::finite(Scalar(1)), [](const Scalar& t) {
                    if (t == 1 || t == -1) throw DomainError("geometric_even stream: pole at t = +-1");
                    return Scalar(1) / (Scalar(1) - t * t);
                  });
  }
  if (name == "lorentz") {  // 1/(1+x^2)
    return Stream(name,
                  [fact](int k) {
                    if (k % 2 != 0) return Scalar(0);
                    Scalar v = fact(k);
                    return (k / 2) % 2 == 0 ? v : Scalar(-v);
                  },
                  Radius<Scalar>::finite(Scalar(1)),
                  [](const Scalar& t) { return Scalar(1) / (Scalar(1) + t * t); });
  }
  auto trig = [&](auto closed_impl, auto deriv_impl) {
    typename Stream::ClosedFn closed = nullptr;
    if constexpr (!is_exact_v<Scalar>) closed = closed_impl;
    return Stream(name, deriv_impl, Radius<Scalar>::infinite(), closed);
  };
  if (name == "cos")
    return trig([](const Scalar& t) { return cos(t); },
                [](int k) {
                  if (k % 2 != 0) return Scalar(0);
                  return (k / 2) % 2 == 0 ? Scalar(1) : Scalar(-1);
                });
  if (name == "sin")
    return trig([](const Scalar& t) { return sin(t); },
                [](int k) {
                  if (k % 2 == 0) return Scalar(0);
                  return ((k - 1) / 2) % 2 == 0 ? Scalar(1) : Scalar(-1);
                });
  if (name == "cosh")
    return trig([](const Scalar& t) { return cosh(t); },
                [](int k) { return k % 2 == 0 ? Scalar(1) : Scalar(0); });
  if (name == "sinh")
    return trig([](const Scalar& t) { return sinh(t); },
                [](int k) { return k % 2 != 0 ? Scalar(1) : Scalar(0); });
  throw DomainError("unknown builtin stream: " + name);
}

/// Stream defined by a finite derivative list (a polynomial); exact Horner
/// closed form in both modes.
template <typename Scalar>
CoefficientStream<Scalar> custom_stream(std::vector<Scalar> derivs) {
  std::vector<Scalar> coefficients(derivs.size());  // derivs[k] / k!
  for (size_t k = 0; k < derivs.size(); ++k)
    coefficients[k] = derivs[k] / Scalar(factorial(static_cast<unsigned>(k)));
  auto horner = [coefficients](const Scalar& t) {
    Scalar value(0);
    for (size_t k = coefficients.size(); k-- > 0;) value = value * t + coefficients[k];
    return value;
  };
  auto list = std::make_shared<std::vector<Scalar>>(std::move(derivs));
  CoefficientStream<Scalar> stream(
      "custom", [list](int k) { return k < static_cast<int>(list->size()) ? (*list)[k] : Scalar(0); },
      Radius<Scalar>::infinite(), horner);
  stream.state_->custom = *list;
  return stream;
}

enum class SystemFlavor { general, dilation, polynomial };

inline const char* flavor_name(SystemFlavor f) {
  switch (f) {
    case SystemFlavor::general: return "general";
    case SystemFlavor::dilation: return "dilation";
    case SystemFlavor::polynomial: return "polynomial";
  }
  return "?";
}

/// Ordered tuple of coefficient streams; immutable after construction.
/// Three flavors:
///   general    — arbitrary streams, domain = smallest stream radius,
///   dilation   — f_i(x) = f(a_i x) for a base stream f and increasing
///                positive a, domain (-R/a_n, R/a_n),
///   polynomial — p_i(x) = sum_j A(i,j) x^(j-1) for an n x n coefficient
///                matrix A, entire.
template <typename Scalar>
class FunctionSystem {
 public:
  static FunctionSystem general(std::vector<CoefficientStream<Scalar>> streams) {
    if (streams.empty()) throw DomainError("function system must be nonempty");
    FunctionSystem system;
    system.flavor_ = SystemFlavor::general;
    system.streams_ = std::move(streams);
    system.radius_ = Radius<Scalar>::infinite();
    for (const auto& stream : system.streams_) {
      const auto& r = stream.radius();
      if (r.is_infinite) continue;
      if (system.radius_.is_infinite || r.value < system.radius_.value) system.radius_ = r;
    }
    return system;
  }

  static FunctionSystem dilation(CoefficientStream<Scalar> base, NodeSequence<Scalar> a) {
    if (a.empty()) throw DomainError("dilation system needs at least one parameter");
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] <= 0) throw DomainError("dilation parameters must be positive");
      if (i + 1 < a.size() && !(a[i] < a[i + 1]))
        throw DomainError("dilation parameters must be strictly increasing");
    }
    FunctionSystem system;
    system.flavor_ = SystemFlavor::dilation;
    system.base_ = base;
    system.dilation_ = a;
    system.radius_ = base.radius().scaled_down(a.back());
    for (size_t i = 0; i < a.size(); ++i) {
      Scalar ai = a[i];
      typename CoefficientStream<Scalar>::ClosedFn closed = nullptr;
      if (base.has_closed_form())
        closed = [base, ai](const Scalar& t) { return base.eval_closed(ai * t); };
      system.streams_.emplace_back(
          base.name() + "(a" + std::to_string(i + 1) + " x)",
          [base, ai](int k) { return pow_n(ai, static_cast<unsigned long>(k)) * base.deriv(k); },
          base.radius().scaled_down(ai), closed);
    }
    return system;
  }

  static FunctionSystem polynomial(Matrix<Scalar> coefficients) {
    if (coefficients.rows() == 0 || coefficients.rows() != coefficients.cols())
      throw DomainError("polynomial system needs a square nonempty coefficient matrix");
    FunctionSystem system;
    system.flavor_ = SystemFlavor::polynomial;
    system.coefficients_ = coefficients;
    system.radius_ = Radius<Scalar>::infinite();
    const int n = static_cast<int>(coefficients.rows());
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> row(n);
      for (int j = 0; j < n; ++j) row[j] = coefficients(i, j);
      auto horner = [row](const Scalar& t) {
        Scalar value(0);
        for (size_t k = row.size(); k-- > 0;) value = value * t + row[k];
        return value;
      };
      system.streams_.emplace_back(
          "p" + std::to_string(i + 1),
          [row, n](int k) {
            return k < n ? Scalar(factorial(static_cast<unsigned>(k))) * row[k] : Scalar(0);
          },
          Radius<Scalar>::infinite(), horner);
    }
    return system;
  }

  int size() const { return static_cast<int>(streams_.size()); }
  SystemFlavor flavor() const { return flavor_; }
  const std::vector<CoefficientStream<Scalar>>& streams() const { return streams_; }

  const CoefficientStream<Scalar>& base_stream() const {
    require_flavor(SystemFlavor::dilation);
    return base_;
  }
  const NodeSequence<Scalar>& dilation_parameters() const {
    require_flavor(SystemFlavor::dilation);
    return dilation_;
  }
  const Matrix<Scalar>& coefficient_matrix() const {
    require_flavor(SystemFlavor::polynomial);
    return coefficients_;
  }

  /// Domain of validity is |x| < domain_radius().
  const Radius<Scalar>& domain_radius() const { return radius_; }
  bool in_domain(const Scalar& x) const { return radius_.contains(x); }

  /// f_j(x), 1-based j; closed form when the stream has one, else the
  /// partial Maclaurin sum to eval_order.
  Scalar evaluate(int j, const Scalar& x, int eval_order) const {
    if (j < 1 || j > size()) throw DomainError("function index out of range");
    return streams_[j - 1].evaluate(x, eval_order);
  }

  /// The k-th derivative system (streams re-indexed by k); general flavor.
  FunctionSystem shifted(int k) const {
    std::vector<CoefficientStream<Scalar>> shifted_streams;
    shifted_streams.reserve(streams_.size());
    for (const auto& stream : streams_) shifted_streams.push_back(stream.shifted(k));
    return general(std::move(shifted_streams));
  }

 private:
  FunctionSystem() = default;
  void require_flavor(SystemFlavor expected) const {
    if (flavor_ != expected)
      throw DomainError(std::string("operation requires a ") + flavor_name(expected) + " system");
  }

  SystemFlavor flavor_ = SystemFlavor::general;
  std::vector<CoefficientStream<Scalar>> streams_;
  CoefficientStream<Scalar> base_;
  NodeSequence<Scalar> dilation_;
  Matrix<Scalar> coefficients_;
  Radius<Scalar> radius_;
};

/// Entry (row, col) of the infinite Wronskian W_f, 1-based:
/// f_col^{(row-1)}(0).
template <typename Scalar>
Scalar wronskian_entry(const FunctionSystem<Scalar>& system, int row, int col) {
  if (row < 1) throw DomainError("wronskian_entry: row must be positive");
  if (col < 1 || col > system.size()) throw DomainError("wronskian_entry: column out of range");
  return system.streams()[col - 1].deriv(row - 1);
}

/// Initial minor W^t_f[i, lambda] at explicit width: with j = max(l(lambda),
/// width), the determinant over transposed-Wronskian rows i-j+1..i (function
/// indices) and columns lambda_j+1, lambda_{j-1}+2, ..., lambda_1+j
/// (derivative orders lambda_j, lambda_{j-1}+1, ..., lambda_1+j-1).
template <typename Scalar>
Scalar wronskian_initial_minor(const FunctionSystem<Scalar>& system, int i,
                               const Partition& lambda, int width) {
  const int j = std::max(lambda.length(), width);
  if (j < 1 || j > i || i > system.size())
    throw DomainError("wronskian_initial_minor: need 1 <= j <= i <= n");
  Matrix<Scalar> block(j, j);
  for (int r = 0; r < j; ++r) {
    const auto& stream = system.streams()[i - j + r];
    for (int m = 0; m < j; ++m) {
      block(r, m) = stream.deriv(lambda.part(j - m) + m);
    }
  }
  return determinant(std::move(block));
}

/// F_lambda = prod_{l=1..j} f^{(lambda_l + j - l)}(0): the derivative
/// product over the staircase indices of lambda at width j.
template <typename Scalar>
Scalar f_lambda(const CoefficientStream<Scalar>& stream, const Partition& lambda, int width) {
  Scalar product(1);
  for (int index : staircase_indices(lambda, width)) {
    product *= stream.deriv(index);
    if (product == 0) break;
  }
  return product;
}

}  // namespace tpschur
