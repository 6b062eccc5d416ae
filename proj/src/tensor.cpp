#include "nkc/tensor.hpp"

#include "nkc/error.hpp"

namespace nkc {

std::string to_string(ConnectionKind k) {
  return k == ConnectionKind::levi_civita ? "levi_civita" : "tanaka_webster";
}

Connection::Connection(std::size_t dim, ConnectionKind kind, std::vector<FrameVector> table)
    : dim_(dim), kind_(kind), table_(std::move(table)) {
  if (table_.size() != dim_ * dim_) throw DomainError("connection table must have dim^2 entries");
  for (const auto& v : table_) {
    if (v.size() != dim_) throw DomainError("connection table entry has wrong dimension");
  }
}

FrameVector Connection::covariant(const FrameVector& x, const FrameVector& y) const {
  FrameVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      out += (x[i] * y[j]) * on_basis(i, j);
    }
  }
  return out;
}

FrameVector Connection::nabla_endo(const Endomorphism& a, const FrameVector& x, const FrameVector& y) const {
  return covariant(x, a.apply(y)) - a.apply(covariant(x, y));
}

Scalar Connection::nabla_covector(const FrameVector& w, const FrameVector& x, const FrameVector& y) const {
  return -dot(w, covariant(x, y));
}

Scalar Connection::nabla_metric(const FrameVector& x, const FrameVector& y, const FrameVector& z) const {
  return -(dot(covariant(x, y), z) + dot(y, covariant(x, z)));
}

bool operator==(const Connection& a, const Connection& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.table_.size(); ++i) {
    if (!(a.table_[i] == b.table_[i])) return false;
  }
  return true;
}

FrameVector Curvature4Tensor::apply(const FrameVector& x, const FrameVector& y, const FrameVector& z) const {
  FrameVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        out += (xy * z[k]) * on_basis(i, j, k);
      }
    }
  }
  return out;
}

bool Curvature4Tensor::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

BilinearForm BilinearForm::metric(std::size_t dim) {
  BilinearForm g(dim);
  for (std::size_t i = 0; i < dim; ++i) g(i, i) = Scalar(1);
  return g;
}

BilinearForm BilinearForm::tensor_square(const FrameVector& w) {
  BilinearForm f(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) f(i, j) = w[i] * w[j];
  }
  return f;
}

Scalar BilinearForm::apply(const FrameVector& x, const FrameVector& y) const {
  Scalar out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || (*this)(i, j).is_zero()) continue;
      out += x[i] * (*this)(i, j) * y[j];
    }
  }
  return out;
}

bool BilinearForm::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool BilinearForm::is_zero() const {
  for (const auto& s : m_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string BilinearForm::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < dim_; ++j) out += (j ? "," : "") + (*this)(i, j).str();
    out += "]";
  }
  return out + "]";
}

BilinearForm& BilinearForm::operator+=(const BilinearForm& o) {
  if (o.dim_ != dim_) throw DomainError("bilinear form dimension mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

BilinearForm& BilinearForm::operator-=(const BilinearForm& o) {
  if (o.dim_ != dim_) throw DomainError("bilinear form dimension mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

BilinearForm BilinearForm::scaled(const Scalar& s) const {
  BilinearForm out = *this;
  for (auto& x : out.m_) x *= s;
  return out;
}

bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.dim_ == b.dim_ && (a - b).is_zero(); }

Connection levi_civita(const FrameManifold& m) {
  const std::size_t d = m.dim();
  const Rational half(1, 2);
  std::vector<FrameVector> table(d * d, FrameVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        table[i * d + j][k] = (m.c(i, j, k) - m.c(j, k, i) + m.c(k, i, j)).scaled(half);
      }
    }
  }
  Connection conn(d, ConnectionKind::levi_civita, std::move(table));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!(conn.gamma(i, j, k) + conn.gamma(i, k, j)).is_zero()) {
          throw InternalError("Levi-Civita connection is not metric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
        if (!(conn.gamma(i, j, k) - conn.gamma(j, i, k) - m.c(i, j, k)).is_zero()) {
          throw InternalError("Levi-Civita connection has torsion at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
      }
    }
  }
  return conn;
}

Curvature4Tensor riemann(const FrameManifold& m, const Connection& conn) {
  const std::size_t d = m.dim();
  Curvature4Tensor r(d);
  for (std::size_t i = 0; i < d; ++i) {
    FrameVector ei = m.basis(i);
    for (std::size_t j = 0; j < d; ++j) {
      FrameVector ej = m.basis(j);
      FrameVector bij = m.bracket(ei, ej);
      for (std::size_t k = 0; k < d; ++k) {
        FrameVector ek = m.basis(k);
        r.at(i, j, k) = conn.covariant(ei, conn.on_basis(j, k)) - conn.covariant(ej, conn.on_basis(i, k)) -
                        conn.covariant(bij, ek);
      }
    }
  }
  return r;
}

BilinearForm ricci(const Curvature4Tensor& r) {
  const std::size_t d = r.dim();
  BilinearForm s(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      Scalar sum;
      for (std::size_t i = 0; i < d; ++i) sum += r.lowered(j, i, i, l);
      s(j, l) = sum;
    }
  }
  return s;
}

Scalar scalar_curvature(const BilinearForm& s) {
  Scalar tau;
  for (std::size_t j = 0; j < s.dim(); ++j) tau += s(j, j);
  return tau;
}

}  // namespace nkc
