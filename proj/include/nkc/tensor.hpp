#pragma once

#include "nkc/frame.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nkc {

enum class ConnectionKind { levi_civita, tanaka_webster };

std::string to_string(ConnectionKind k);

// Frame connection coefficients: nabla_{E_i} E_j = gamma(i, j, k) E_k.
class Connection {
 public:
  Connection(std::size_t dim, ConnectionKind kind, std::vector<FrameVector> table);

  std::size_t dim() const { return dim_; }
  ConnectionKind kind() const { return kind_; }

  const FrameVector& on_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim_ + j][k]; }

  // nabla_X Y for constant-coefficient X, Y.
  FrameVector covariant(const FrameVector& x, const FrameVector& y) const;
  // (nabla_X A) Y = nabla_X (A Y) - A nabla_X Y.
  FrameVector nabla_endo(const Endomorphism& a, const FrameVector& x, const FrameVector& y) const;
  // (nabla_X w)(Y) = -w(nabla_X Y) for a constant covector w.
  Scalar nabla_covector(const FrameVector& w, const FrameVector& x, const FrameVector& y) const;
  // (nabla_X g)(Y, Z) for the orthonormal frame metric.
  Scalar nabla_metric(const FrameVector& x, const FrameVector& y, const FrameVector& z) const;

  friend bool operator==(const Connection& a, const Connection& b);

 private:
  std::size_t dim_;
  ConnectionKind kind_;
  std::vector<FrameVector> table_;
};

// R(E_i, E_j) E_k = R_ijk^l E_l, raised last index.
class Curvature4Tensor {
 public:
  Curvature4Tensor() = default;
  explicit Curvature4Tensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim, FrameVector(dim)) {}

  std::size_t dim() const { return dim_; }
  const FrameVector& on_basis(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  FrameVector& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  FrameVector apply(const FrameVector& x, const FrameVector& y, const FrameVector& z) const;
  // R_ijkl = g(R(E_i, E_j) E_k, E_l).
  const Scalar& lowered(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return on_basis(i, j, k)[l];
  }
  bool is_zero() const;

 private:
  std::size_t dim_ = 0;
  std::vector<FrameVector> data_;
};

class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::size_t dim) : dim_(dim), m_(dim * dim) {}

  static BilinearForm metric(std::size_t dim);
  // w (x) w for a covector given by its dual vector.
  static BilinearForm tensor_square(const FrameVector& w);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }

  Scalar apply(const FrameVector& x, const FrameVector& y) const;
  bool is_symmetric() const;
  bool is_zero() const;
  // Row-major rendering "[[a,b],[c,d]]".
  std::string str() const;

  BilinearForm& operator+=(const BilinearForm& o);
  BilinearForm& operator-=(const BilinearForm& o);
  BilinearForm scaled(const Scalar& s) const;
  friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
  friend BilinearForm operator-(BilinearForm a, const BilinearForm& b) { return a -= b; }
  friend bool operator==(const BilinearForm& a, const BilinearForm& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> m_;
};

// Koszul formula on an orthonormal constant-structure frame:
// 2 Gamma_ij^k = c_ij^k - c_jk^i + c_ki^j. Throws InternalError if the
// result is not metric-compatible and torsion-free.
Connection levi_civita(const FrameManifold& m);

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on frame fields.
Curvature4Tensor riemann(const FrameManifold& m, const Connection& conn);

// S_jl = sum_i R_jiil.
BilinearForm ricci(const Curvature4Tensor& r);
Scalar scalar_curvature(const BilinearForm& s);

}  // namespace nkc
