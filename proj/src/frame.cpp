#include "nkc/frame.hpp"

#include "nkc/error.hpp"
#include "nkc/report.hpp"

namespace nkc {

FrameVector FrameVector::basis(std::size_t dim, std::size_t i) {
  FrameVector v(dim);
  v[i] = Scalar(1);
  return v;
}

bool FrameVector::is_zero() const {
  for (const auto& s : c_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string FrameVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Scalar& s = c_[i];
    if (s.is_zero()) continue;
    std::string basis = "E" + std::to_string(i + 1);
    std::string term;
    if (s == Scalar(1)) {
      term = basis;
    } else if (s == Scalar(-1)) {
      term = "-" + basis;
    } else if (s.terms().size() == 1) {
      term = s.str() + "*" + basis;
    } else {
      term = "(" + s.str() + ")*" + basis;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

FrameVector FrameVector::operator-() const {
  FrameVector out = *this;
  for (auto& s : out.c_) s = -s;
  return out;
}

FrameVector& FrameVector::operator+=(const FrameVector& o) {
  if (o.size() != size()) throw DomainError("frame vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FrameVector& FrameVector::operator-=(const FrameVector& o) {
  if (o.size() != size()) throw DomainError("frame vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FrameVector& FrameVector::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator==(const FrameVector& a, const FrameVector& b) { return a.size() == b.size() && (a - b).is_zero(); }

bool is_zero(const FrameVector& v) { return v.is_zero(); }

Scalar dot(const FrameVector& x, const FrameVector& y) {
  if (x.size() != y.size()) throw DomainError("frame vector dimension mismatch");
  Scalar out;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
  return out;
}

Endomorphism Endomorphism::identity(std::size_t dim) {
  Endomorphism a(dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = Scalar(1);
  return a;
}

Endomorphism Endomorphism::outer(const FrameVector& v, const FrameVector& w) {
  Endomorphism a(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) a(r, c) = v[r] * w[c];
  }
  return a;
}

Endomorphism Endomorphism::from_columns(const std::vector<FrameVector>& columns) {
  Endomorphism a(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != columns.size()) throw DomainError("endomorphism column has wrong length");
    for (std::size_t r = 0; r < columns.size(); ++r) a(r, c) = columns[c][r];
  }
  return a;
}

FrameVector Endomorphism::apply(const FrameVector& v) const {
  if (v.size() != dim_) throw DomainError("endomorphism applied to vector of wrong dimension");
  FrameVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

FrameVector Endomorphism::column(std::size_t c) const {
  FrameVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

Endomorphism Endomorphism::transpose() const {
  Endomorphism t(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Endomorphism::trace() const {
  Scalar out;
  for (std::size_t i = 0; i < dim_; ++i) out += (*this)(i, i);
  return out;
}

bool Endomorphism::is_zero() const {
  for (const auto& s : m_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Endomorphism& Endomorphism::operator+=(const Endomorphism& o) {
  if (o.dim_ != dim_) throw DomainError("endomorphism dimension mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Endomorphism& Endomorphism::operator-=(const Endomorphism& o) {
  if (o.dim_ != dim_) throw DomainError("endomorphism dimension mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

Endomorphism Endomorphism::scaled(const Scalar& s) const {
  Endomorphism out = *this;
  for (auto& x : out.m_) x *= s;
  return out;
}

Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
  if (a.dim_ != b.dim_) throw DomainError("endomorphism dimension mismatch");
  Endomorphism out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t c = 0; c < a.dim_; ++c) {
      Scalar s;
      for (std::size_t k = 0; k < a.dim_; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.dim_ == b.dim_ && (a - b).is_zero(); }

FrameManifold::FrameManifold(std::size_t dim, ParamSpace params, std::vector<Scalar> c, int)
    : dim_(dim), params_(std::move(params)), c_(std::move(c)) {
  if (dim_ == 0 || dim_ % 2 == 0) throw DomainError("frame dimension must be odd and positive");
  if (c_.size() != dim_ * dim_ * dim_) throw DomainError("structure constant array must have dim^3 entries");
}

FrameManifold::FrameManifold(std::size_t dim, ParamSpace params, const std::vector<StructureConstant>& constants)
    : FrameManifold(dim, std::move(params), std::vector<Scalar>(dim * dim * dim), 0) {
  for (const auto& sc : constants) {
    if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_) throw DomainError("structure constant index out of range");
    if (sc.i >= sc.j) throw DomainError("structure constants must be given with i < j");
    c_[(sc.i * dim_ + sc.j) * dim_ + sc.k] += sc.coeff;
    c_[(sc.j * dim_ + sc.i) * dim_ + sc.k] -= sc.coeff;
  }
}

FrameManifold FrameManifold::from_full(std::size_t dim, ParamSpace params, std::vector<Scalar> constants) {
  return FrameManifold(dim, std::move(params), std::move(constants), 0);
}

FrameVector FrameManifold::zero() const { return FrameVector(dim_); }

FrameVector FrameManifold::bracket(const FrameVector& x, const FrameVector& y) const {
  FrameVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& cijk = c(i, j, k);
        if (!cijk.is_zero()) out[k] += xy * cijk;
      }
    }
  }
  return out;
}

Endomorphism FrameManifold::lie_derive_endo(const FrameVector& xi, const Endomorphism& a) const {
  std::vector<FrameVector> cols;
  cols.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    FrameVector ek = basis(k);
    cols.push_back(bracket(xi, a.apply(ek)) - a.apply(bracket(xi, ek)));
  }
  return Endomorphism::from_columns(cols);
}

std::vector<StructureConstant> FrameManifold::sparse_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c(i, j, k).is_zero()) out.push_back({i, j, k, c(i, j, k)});
      }
    }
  }
  return out;
}

bool operator==(const FrameManifold& a, const FrameManifold& b) {
  if (a.dim_ != b.dim_ || !(a.params_ == b.params_)) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

VerificationReport validate_frame(const FrameManifold& m) {
  VerificationReport report;
  const std::size_t d = m.dim();
  report.add(scan_scalars("frame.antisymmetry", d, 3, [&](std::span<const std::size_t> t) {
    return m.c(t[0], t[1], t[2]) + m.c(t[1], t[0], t[2]);
  }));
  report.add(scan_vectors("frame.jacobi", d, 3, [&](std::span<const std::size_t> t) {
    FrameVector a = m.basis(t[0]), b = m.basis(t[1]), c = m.basis(t[2]);
    return m.bracket(m.bracket(a, b), c) + m.bracket(m.bracket(b, c), a) + m.bracket(m.bracket(c, a), b);
  }));
  return report;
}

}  // namespace nkc
