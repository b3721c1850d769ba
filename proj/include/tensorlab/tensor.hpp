#ifndef TENSORLAB_TENSOR_HPP
#define TENSORLAB_TENSOR_HPP

/// \file tensor.hpp
/// Product vectors, sets of product vectors, and dense tensors.
///
/// Modes are 0-based in code. Dense tensors are stored row-major with mode 0
/// varying slowest. A ProductVector is always kept in canonical form: every
/// factor after the first has leading nonzero coordinate 1 and the overall
/// scalar lives in factor 0, so two product vectors are equal as tensors iff
/// they compare equal structurally.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tensorlab/combinatorics.hpp"
#include "tensorlab/linalg.hpp"

namespace tensorlab {

inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 20;

class ModeSignature {
 public:
  ModeSignature() = default;
  explicit ModeSignature(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error(Errc::SchemaError, "a mode signature needs at least one mode", "dims");
    std::size_t total = 1;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      if (dims_[j] == 0)
        throw Error(Errc::SchemaError, "mode dimensions must be positive", "dims[" + std::to_string(j) + "]");
      if (total > kMaxTensorEntries / dims_[j])
        throw Error(Errc::TensorTooLarge, "product of dims exceeds 2^20", "dims");
      total *= dims_[j];
    }
  }

  std::size_t modes() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t j) const { return dims_.at(j); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  /// Number of dense entries.
  std::size_t size() const noexcept {
    std::size_t total = 1;
    for (auto d : dims_) total *= d;
    return total;
  }

  ModeSignature without(std::size_t j) const {
    auto d = dims_;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(j));
    return ModeSignature(std::move(d));
  }

  friend bool operator==(const ModeSignature&, const ModeSignature&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Lexicographic comparison of vectors by canonical coordinates.
template <class S>
int compare_lex(const Vector<S>& a, const Vector<S>& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return -1;
    if (b(i) < a(i)) return 1;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

template <ExactScalar S>
class ProductVector {
 public:
  using Scalar = S;

  /// Normalizes the factors; throws ZeroFactor if any factor vanishes.
  explicit ProductVector(std::vector<Vector<S>> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::SchemaError, "a product vector needs at least one factor");
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (factors_[j].size() == 0)
        throw Error(Errc::SchemaError, "empty factor", "factor " + std::to_string(j));
      if (is_zero(factors_[j]))
        throw Error(Errc::ZeroFactor, "factor " + std::to_string(j) + " is the zero vector",
                    "factor " + std::to_string(j));
    }
    normalize();
  }

  std::size_t modes() const noexcept { return factors_.size(); }
  const Vector<S>& factor(std::size_t j) const { return factors_.at(j); }
  const std::vector<Vector<S>>& factors() const noexcept { return factors_; }

  ModeSignature signature() const {
    std::vector<std::size_t> d;
    d.reserve(factors_.size());
    for (const auto& f : factors_) d.push_back(static_cast<std::size_t>(f.size()));
    return ModeSignature(std::move(d));
  }

  ProductVector scaled(const S& c) const {
    if (c.is_zero()) throw Error(Errc::ZeroFactor, "scaling a product vector by zero");
    ProductVector out = *this;
    out.factors_[0] *= c;
    return out;
  }

  ProductVector operator-() const { return scaled(-S(1)); }

  friend bool operator==(const ProductVector& a, const ProductVector& b) { return a.factors_ == b.factors_; }

  /// Canonical lexicographic order over the concatenated factor coordinates.
  friend bool operator<(const ProductVector& a, const ProductVector& b) {
    const std::size_t m = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t j = 0; j < m; ++j) {
      int c = compare_lex(a.factors_[j], b.factors_[j]);
      if (c != 0) return c < 0;
    }
    return a.factors_.size() < b.factors_.size();
  }

 private:
  void normalize() {
    for (std::size_t j = 1; j < factors_.size(); ++j) {
      const S lead = factors_[j](leading_index(factors_[j]));
      if (lead == S(1)) continue;
      factors_[j] *= S(1) / lead;
      factors_[0] *= lead;
    }
  }

  std::vector<Vector<S>> factors_;
};

template <ExactScalar S>
class ProductVectorSet {
 public:
  using Scalar = S;

  explicit ProductVectorSet(std::vector<ProductVector<S>> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw Error(Errc::SchemaError, "a product-vector set needs at least one vector", "vectors");
    const auto sig = vectors_.front().signature();
    for (std::size_t a = 1; a < vectors_.size(); ++a)
      if (vectors_[a].signature() != sig)
        throw Error(Errc::SignatureMismatch, "vectors do not share a mode signature",
                    "vectors[" + std::to_string(a) + "]");
  }

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t modes() const noexcept { return vectors_.front().modes(); }
  ModeSignature signature() const { return vectors_.front().signature(); }

  const ProductVector<S>& operator[](std::size_t a) const { return vectors_[a]; }
  const ProductVector<S>& at(std::size_t a) const {
    if (a >= vectors_.size())
      throw Error(Errc::IndexOutOfRange, "vector index " + std::to_string(a + 1) + " out of range");
    return vectors_[a];
  }
  const std::vector<ProductVector<S>>& vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  /// The factors x_{a,j} for a fixed mode j.
  std::vector<Vector<S>> mode_factors(std::size_t j) const {
    std::vector<Vector<S>> out;
    out.reserve(vectors_.size());
    for (const auto& x : vectors_) out.push_back(x.factor(j));
    return out;
  }

  friend bool operator==(const ProductVectorSet&, const ProductVectorSet&) = default;

 private:
  std::vector<ProductVector<S>> vectors_;
};

template <ExactScalar S>
class DenseTensor {
 public:
  using Scalar = S;

  DenseTensor() = default;
  DenseTensor(ModeSignature sig, Vector<S> entries) : sig_(std::move(sig)), entries_(std::move(entries)) {
    if (static_cast<std::size_t>(entries_.size()) != sig_.size())
      throw Error(Errc::SchemaError, "entry count does not match the product of dims", "entries");
  }

  static DenseTensor zeros(const ModeSignature& sig) {
    return DenseTensor(sig, Vector<S>::Zero(static_cast<Index>(sig.size())));
  }

  const ModeSignature& signature() const noexcept { return sig_; }
  const Vector<S>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.size()); }
  const S& operator[](std::size_t i) const { return entries_(static_cast<Index>(i)); }

  bool is_zero() const { return tensorlab::is_zero(entries_); }

  DenseTensor& operator+=(const DenseTensor& o) {
    check_same(o);
    entries_ += o.entries_;
    return *this;
  }
  DenseTensor& operator-=(const DenseTensor& o) {
    check_same(o);
    entries_ -= o.entries_;
    return *this;
  }
  DenseTensor& operator*=(const S& c) {
    entries_ *= c;
    return *this;
  }
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(const S& c, DenseTensor a) { return a *= c; }
  DenseTensor operator-() const { return DenseTensor(sig_, -entries_); }

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.sig_ == b.sig_ && a.entries_ == b.entries_;
  }

 private:
  void check_same(const DenseTensor& o) const {
    if (sig_ != o.sig_) throw Error(Errc::SignatureMismatch, "tensors with different signatures");
  }

  ModeSignature sig_;
  Vector<S> entries_;
};

// ---------------------------------------------------------------------------
// Operations

/// Dense form of x_1 ⊗ ... ⊗ x_m.
template <ExactScalar S>
DenseTensor<S> expand_product(const ProductVector<S>& x) {
  Vector<S> acc = x.factor(0);
  for (std::size_t j = 1; j < x.modes(); ++j) {
    const auto& f = x.factor(j);
    Vector<S> next(acc.size() * f.size());
    for (Index i = 0; i < acc.size(); ++i) next.segment(i * f.size(), f.size()) = acc(i) * f;
    acc = std::move(next);
  }
  return DenseTensor<S>(x.signature(), std::move(acc));
}

/// Sum of x_a over the subset; the empty sum is the zero tensor.
template <ExactScalar S>
DenseTensor<S> sum_set(const ProductVectorSet<S>& s, const IndexSet& subset) {
  auto out = DenseTensor<S>::zeros(s.signature());
  for (auto a : subset) out += expand_product(s.at(a));
  return out;
}

template <ExactScalar S>
DenseTensor<S> sum_set(const ProductVectorSet<S>& s) {
  auto out = DenseTensor<S>::zeros(s.signature());
  for (const auto& x : s) out += expand_product(x);
  return out;
}

/// Mode-j flattening: dims[j] rows, columns ordered lexicographically in the
/// remaining modes (earlier modes slower).
template <ExactScalar S>
Matrix<S> unfold(const DenseTensor<S>& t, std::size_t j) {
  const auto& dims = t.signature().dims();
  if (j >= dims.size()) throw Error(Errc::IndexOutOfRange, "mode " + std::to_string(j + 1) + " out of range");
  std::size_t inner = 1;
  for (std::size_t k = j + 1; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t dj = dims[j];
  const std::size_t outer = t.size() / (dj * inner);
  Matrix<S> out(static_cast<Index>(dj), static_cast<Index>(outer * inner));
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t r = 0; r < dj; ++r)
      for (std::size_t i = 0; i < inner; ++i)
        out(static_cast<Index>(r), static_cast<Index>(o * inner + i)) = t[(o * dj + r) * inner + i];
  return out;
}

/// x with factor j removed (x_{a∖j}), renormalized.
template <ExactScalar S>
ProductVector<S> drop_mode(const ProductVector<S>& x, std::size_t j) {
  if (x.modes() == 1) throw Error(Errc::LastMode, "cannot drop the only mode");
  if (j >= x.modes()) throw Error(Errc::IndexOutOfRange, "mode " + std::to_string(j + 1) + " out of range");
  auto f = x.factors();
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
  return ProductVector<S>(std::move(f));
}

/// dim span{x_{a,j} : a} for each mode j.
template <ExactScalar S>
std::vector<std::size_t> span_dims(const ProductVectorSet<S>& s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.modes(); ++j) {
    const auto f = s.mode_factors(j);
    out.push_back(static_cast<std::size_t>(span_dimension<S>(f)));
  }
  return out;
}

/// Largest mode-unfolding rank; a lower bound on tensor rank.
template <ExactScalar S>
std::size_t flattening_rank(const DenseTensor<S>& t) {
  Index best = 0;
  for (std::size_t j = 0; j < t.signature().modes(); ++j) best = std::max(best, matrix_rank(unfold(t, j)));
  return static_cast<std::size_t>(best);
}

/// Factor recovery for a rank-one tensor: returns the canonical product
/// vector equal to t, or nullopt if t is zero or some unfolding has rank > 1.
template <ExactScalar S>
std::optional<ProductVector<S>> as_product(const DenseTensor<S>& t) {
  const Index first = leading_index(t.entries());
  if (first < 0) return std::nullopt;
  const std::size_t m = t.signature().modes();
  std::vector<Vector<S>> factors;
  factors.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix<S> u = unfold(t, j);
    if (matrix_rank(u) > 1) return std::nullopt;
    for (Index c = 0; c < u.cols(); ++c) {
      if (!is_zero(u.col(c))) {
        factors.push_back(u.col(c));
        break;
      }
    }
  }
  ProductVector<S> x(std::move(factors));
  const auto e = expand_product(x);
  const S scale = t[static_cast<std::size_t>(first)] / e[static_cast<std::size_t>(first)];
  return x.scaled(scale);
}

template <ExactScalar S>
bool is_product(const DenseTensor<S>& t) {
  if (t.is_zero()) return false;
  for (std::size_t j = 0; j < t.signature().modes(); ++j)
    if (matrix_rank(unfold(t, j)) > 1) return false;
  return true;
}

/// Matrix whose column a is the vectorized expansion of x_a.
template <ExactScalar S>
Matrix<S> expansion_matrix(const ProductVectorSet<S>& s) {
  Matrix<S> out(static_cast<Index>(s.signature().size()), static_cast<Index>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a) out.col(static_cast<Index>(a)) = expand_product(s[a]).entries();
  return out;
}

/// Standard basis vector e_i in F^d.
template <ExactScalar S>
Vector<S> basis_vector(std::size_t d, std::size_t i) {
  Vector<S> v = Vector<S>::Zero(static_cast<Index>(d));
  v(static_cast<Index>(i)) = S(1);
  return v;
}

template <ExactScalar S>
Vector<S> make_vector(std::initializer_list<long long> values) {
  Vector<S> v(static_cast<Index>(values.size()));
  Index i = 0;
  for (auto x : values) v(i++) = S(x);
  return v;
}

}  // namespace tensorlab

#endif  // TENSORLAB_TENSOR_HPP
