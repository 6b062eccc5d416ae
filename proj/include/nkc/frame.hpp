#pragma once

#include "nkc/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nkc {

// Constant-coefficient combination of frame fields E_1..E_dim.
class FrameVector {
 public:
  FrameVector() = default;
  explicit FrameVector(std::size_t dim) : c_(dim) {}
  explicit FrameVector(std::vector<Scalar> components) : c_(std::move(components)) {}

  static FrameVector basis(std::size_t dim, std::size_t i);

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& components() const { return c_; }

  bool is_zero() const;
  // Frame rendering, e.g. "-2/3*E2" or "(1+lambda)*E3-E1"; "0" for the zero vector.
  std::string str() const;

  FrameVector operator-() const;
  FrameVector& operator+=(const FrameVector& o);
  FrameVector& operator-=(const FrameVector& o);
  FrameVector& operator*=(const Scalar& s);

  friend FrameVector operator+(FrameVector a, const FrameVector& b) { return a += b; }
  friend FrameVector operator-(FrameVector a, const FrameVector& b) { return a -= b; }
  friend FrameVector operator*(const Scalar& s, FrameVector v) { return v *= s; }
  friend bool operator==(const FrameVector& a, const FrameVector& b);

 private:
  std::vector<Scalar> c_;
};

bool is_zero(const FrameVector& v);

// Orthonormal-frame inner product sum_i x^i y^i.
Scalar dot(const FrameVector& x, const FrameVector& y);

// Linear map on frame components: (A X)^r = sum_c A(r,c) X^c.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::size_t dim) : dim_(dim), m_(dim * dim) {}

  static Endomorphism identity(std::size_t dim);
  // X -> v * w(X), with w given by its dual vector.
  static Endomorphism outer(const FrameVector& v, const FrameVector& w);
  static Endomorphism from_columns(const std::vector<FrameVector>& columns);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }

  FrameVector apply(const FrameVector& v) const;
  FrameVector column(std::size_t c) const;
  Endomorphism transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Endomorphism& operator+=(const Endomorphism& o);
  Endomorphism& operator-=(const Endomorphism& o);
  Endomorphism scaled(const Scalar& s) const;

  friend Endomorphism operator+(Endomorphism a, const Endomorphism& b) { return a += b; }
  friend Endomorphism operator-(Endomorphism a, const Endomorphism& b) { return a -= b; }
  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b);
  friend bool operator==(const Endomorphism& a, const Endomorphism& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> m_;
};

struct StructureConstant {
  std::size_t i;  // 0-based, i < j
  std::size_t j;
  std::size_t k;
  Scalar coeff;  // [E_i, E_j] gets coeff * E_k
};

// Homogeneous manifold presented by an orthonormal frame with constant
// structure constants [E_i, E_j] = c_ij^k E_k.
class FrameManifold {
 public:
  // Sparse upper-triangular constants, extended by antisymmetry.
  FrameManifold(std::size_t dim, ParamSpace params, const std::vector<StructureConstant>& constants);

  // Raw dim^3 array indexed (i*dim + j)*dim + k, taken as-is (no antisymmetrization).
  static FrameManifold from_full(std::size_t dim, ParamSpace params, std::vector<Scalar> constants);

  std::size_t dim() const { return dim_; }
  std::size_t n() const { return (dim_ - 1) / 2; }
  const ParamSpace& params() const { return params_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  FrameVector basis(std::size_t i) const { return FrameVector::basis(dim_, i); }
  FrameVector zero() const;

  FrameVector bracket(const FrameVector& x, const FrameVector& y) const;
  Scalar inner(const FrameVector& x, const FrameVector& y) const { return dot(x, y); }

  // (L_xi A)(X) = [xi, A X] - A [xi, X], column by column on frame fields.
  Endomorphism lie_derive_endo(const FrameVector& xi, const Endomorphism& a) const;

  // Upper-triangular nonzero constants in (i, j, k) order.
  std::vector<StructureConstant> sparse_constants() const;

  friend bool operator==(const FrameManifold& a, const FrameManifold& b);

 private:
  FrameManifold(std::size_t dim, ParamSpace params, std::vector<Scalar> c, int);

  std::size_t dim_;
  ParamSpace params_;
  std::vector<Scalar> c_;
};

class VerificationReport;

// Antisymmetry and Jacobi checks on the structure constants.
VerificationReport validate_frame(const FrameManifold& m);

}  // namespace nkc
