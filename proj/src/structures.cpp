#include "prelie/structures.hpp"

#include <sstream>

namespace prelie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1L);
  return v;
}

Vec add(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimMismatch, "vector lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimMismatch, "vector lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Scalar &s, const Vec &a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = s * a[i];
  return r;
}

bool all_zero(const Vec &a) {
  for (const auto &x : a)
    if (!x.is_zero())
      return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = Scalar(1L);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimMismatch, "matrix shapes differ");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimMismatch, "matrix shapes differ");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorCode::DimMismatch, "matrix product shapes differ");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = at(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero())
          r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const Scalar &s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = s * data_[i];
  return r;
}

bool Matrix::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Matrix::operator==(const Matrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Tensor3 Tensor3::operator+(const Tensor3 &o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] += o.data_[i];
  return r;
}

Tensor3 Tensor3::operator-(const Tensor3 &o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] -= o.data_[i];
  return r;
}

Tensor3 Tensor3::scaled(const Scalar &s) const {
  Tensor3 r = *this;
  for (auto &x : r.data_)
    x = s * x;
  return r;
}

bool Tensor3::operator==(const Tensor3 &o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && data_ == o.data_;
}

Representation::Representation(std::size_t n, std::size_t m)
    : alg_dim(n), rep_dim(m), rho(n, Matrix(m, m)), phi(n, Matrix(m, m)) {}

namespace {

template <class M>
const typename M::mapped_type &lookup(const M &map, const std::string &name,
                                      const char *kind) {
  auto it = map.find(name);
  if (it == map.end())
    throw Error(ErrorCode::MissingMember,
                std::string("bundle has no ") + kind + " '" + name + "'");
  return it->second;
}

} // namespace

const AlgebraStructure &Bundle::require_alg() const {
  if (!alg)
    throw Error(ErrorCode::MissingMember, "bundle has no multiplication (mul)");
  return *alg;
}

const CoalgebraStructure &Bundle::require_coalg() const {
  if (!coalg)
    throw Error(ErrorCode::MissingMember, "bundle has no comultiplication (comul)");
  return *coalg;
}

const LinearOperator &Bundle::op(const std::string &n) const { return lookup(operators, n, "operator"); }
const BilinearForm &Bundle::form(const std::string &n) const { return lookup(forms, n, "form"); }
const TensorElement &Bundle::tensor(const std::string &n) const { return lookup(tensors, n, "tensor"); }
const Representation &Bundle::rep(const std::string &n) const { return lookup(reps, n, "representation"); }
const Corepresentation &Bundle::corep(const std::string &n) const {
  return lookup(coreps, n, "corepresentation");
}
const AlgebraStructure &Bundle::algebra(const std::string &n) const {
  return lookup(algebras, n, "auxiliary algebra");
}
const CoalgebraStructure &Bundle::coalgebra(const std::string &n) const {
  return lookup(coalgebras, n, "auxiliary coalgebra");
}

bool Bundle::operator==(const Bundle &o) const {
  return dim == o.dim && ring == o.ring && basis == o.basis && alg == o.alg &&
         coalg == o.coalg && operators == o.operators && forms == o.forms &&
         tensors == o.tensors && reps == o.reps && coreps == o.coreps &&
         algebras == o.algebras && coalgebras == o.coalgebras &&
         assumptions == o.assumptions;
}

namespace {

template <class B, class F> void visit_all(B &b, F &&fn) {
  auto mat = [&](auto &m) {
    for (auto &x : m.data())
      fn(x);
  };
  if (b.alg)
    mat(b.alg->c);
  if (b.coalg)
    mat(b.coalg->d);
  for (auto &[_, v] : b.operators)
    mat(v.mat);
  for (auto &[_, v] : b.forms)
    mat(v.mat);
  for (auto &[_, v] : b.tensors)
    mat(v.mat);
  for (auto &[_, v] : b.reps) {
    for (auto &m : v.rho)
      mat(m);
    for (auto &m : v.phi)
      mat(m);
  }
  for (auto &[_, v] : b.coreps) {
    mat(v.xi);
    mat(v.eta);
  }
  for (auto &[_, v] : b.algebras)
    mat(v.c);
  for (auto &[_, v] : b.coalgebras)
    mat(v.d);
  for (auto &a : b.assumptions)
    fn(a);
}

} // namespace

void for_each_scalar(Bundle &b, const std::function<void(Scalar &)> &fn) { visit_all(b, fn); }

void for_each_scalar(const Bundle &b, const std::function<void(const Scalar &)> &fn) {
  visit_all(b, fn);
}

bool is_numeric(const Bundle &b) {
  bool ok = true;
  for_each_scalar(b, [&](const Scalar &s) { ok = ok && s.is_constant(); });
  return ok;
}

Bundle substitute(const Bundle &b, const std::map<std::string, Rational> &values) {
  std::map<std::size_t, Rational> idx;
  for (const auto &[name, v] : values) {
    auto i = b.ring.index_of(name);
    if (!i)
      throw Error(ErrorCode::UnknownParam, "unknown parameter '" + name + "'");
    idx[*i] = v;
  }
  Bundle out = b;
  for_each_scalar(out, [&](Scalar &s) { s = s.substitute(idx); });
  return out;
}

void validate(const Bundle &b) {
  std::size_t n = b.dim;
  auto need = [](bool ok, const std::string &what) {
    if (!ok)
      throw Error(ErrorCode::DimMismatch, what);
  };
  if (b.alg)
    need(b.alg->dim == n && b.alg->c.dim0() == n && b.alg->c.dim1() == n && b.alg->c.dim2() == n,
         "mul shape does not match dim");
  if (b.coalg)
    need(b.coalg->dim == n && b.coalg->d.dim0() == n, "comul shape does not match dim");
  for (const auto &[k, v] : b.forms)
    need(v.mat.rows() == n && v.mat.cols() == n, "form '" + k + "' is not dim x dim");
  for (const auto &[k, v] : b.tensors)
    need(v.mat.rows() == n && v.mat.cols() == n, "tensor '" + k + "' is not dim x dim");
  for (const auto &[k, v] : b.reps) {
    need(v.rho.size() == v.alg_dim && v.phi.size() == v.alg_dim,
         "representation '" + k + "' has wrong family size");
    for (const auto &m : v.rho)
      need(m.rows() == v.rep_dim && m.cols() == v.rep_dim, "representation '" + k + "' matrix shape");
    for (const auto &m : v.phi)
      need(m.rows() == v.rep_dim && m.cols() == v.rep_dim, "representation '" + k + "' matrix shape");
  }
  for (const auto &[k, v] : b.coreps) {
    std::size_t w = v.coalg_dim * v.corep_dim;
    need(v.xi.rows() == v.corep_dim && v.xi.cols() == w && v.eta.rows() == v.corep_dim &&
             v.eta.cols() == w,
         "corepresentation '" + k + "' shape");
  }
  for (const auto &a : b.assumptions)
    if (a.is_zero())
      throw Error(ErrorCode::InvalidInput, "assumption is identically zero");
}

Vec mul_apply(const AlgebraStructure &A, const Vec &x, const Vec &y) {
  std::size_t n = A.dim;
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimMismatch, "mul_apply: vector length differs from dim");
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!A.c.at(i, j, k).is_zero())
          r[k] += xy * A.c.at(i, j, k);
    }
  }
  return r;
}

Matrix comul_apply(const CoalgebraStructure &C, const Vec &x) {
  std::size_t n = C.dim;
  if (x.size() != n)
    throw Error(ErrorCode::DimMismatch, "comul_apply: vector length differs from dim");
  Matrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero())
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!C.d.at(k, i, j).is_zero())
          r.at(i, j) += x[k] * C.d.at(k, i, j);
  }
  return r;
}

Vec apply(const Matrix &F, const Vec &x) {
  if (x.size() != F.rows())
    throw Error(ErrorCode::DimMismatch, "apply: vector length differs from operator input");
  Vec r(F.cols());
  for (std::size_t i = 0; i < F.rows(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < F.cols(); ++j)
      if (!F.at(i, j).is_zero())
        r[j] += x[i] * F.at(i, j);
  }
  return r;
}

Vec apply(const LinearOperator &F, const Vec &x) { return apply(F.mat, x); }

Matrix flip(const Matrix &t) {
  if (t.rows() != t.cols())
    throw Error(ErrorCode::DimMismatch, "flip needs a square tensor");
  return t.transpose();
}

Matrix tensor_apply(const Matrix &F, const Matrix &G, const Matrix &T) {
  // F^T T G in matrix terms.
  return F.transpose() * T * G;
}

LinearOperator compose(const LinearOperator &G, const LinearOperator &F) {
  return LinearOperator(F.mat * G.mat);
}

LinearOperator left_mult(const AlgebraStructure &A, const Vec &x) {
  std::size_t n = A.dim;
  LinearOperator L(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!A.c.at(i, j, k).is_zero())
          L.mat.at(j, k) += x[i] * A.c.at(i, j, k);
  }
  return L;
}

LinearOperator right_mult(const AlgebraStructure &A, const Vec &x) {
  std::size_t n = A.dim;
  LinearOperator R(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!A.c.at(j, i, k).is_zero())
          R.mat.at(j, k) += x[i] * A.c.at(j, i, k);
  }
  return R;
}

Scalar pair(const BilinearForm &w, const Vec &x, const Vec &y) {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !w.mat.at(i, j).is_zero())
        s += x[i] * w.mat.at(i, j) * y[j];
  }
  return s;
}

Scalar determinant(const Matrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimMismatch, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  Matrix a = m;
  Scalar det(1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n)
      return Scalar();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero())
        continue;
      Scalar f = a.at(r, col) / a.at(col, col);
      for (std::size_t j = col; j < n; ++j)
        a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n)
      return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    Scalar p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / p;
      inv.at(col, j) = inv.at(col, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero())
        continue;
      Scalar f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Tensor3 comul_left(const CoalgebraStructure &C, const Matrix &T) {
  std::size_t n = C.dim, m = T.cols();
  Tensor3 r(n, n, m);
  for (std::size_t a = 0; a < T.rows(); ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Scalar &t = T.at(a, b);
      if (t.is_zero())
        continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!C.d.at(a, p, q).is_zero())
            r.at(p, q, b) += t * C.d.at(a, p, q);
    }
  return r;
}

Tensor3 comul_right(const CoalgebraStructure &C, const Matrix &T) {
  std::size_t n = C.dim, m = T.rows();
  Tensor3 r(m, n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < T.cols(); ++b) {
      const Scalar &t = T.at(a, b);
      if (t.is_zero())
        continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!C.d.at(b, p, q).is_zero())
            r.at(a, p, q) += t * C.d.at(b, p, q);
    }
  return r;
}

Tensor3 swap12(const Tensor3 &T) {
  Tensor3 r(T.dim1(), T.dim0(), T.dim2());
  for (std::size_t i = 0; i < T.dim0(); ++i)
    for (std::size_t j = 0; j < T.dim1(); ++j)
      for (std::size_t k = 0; k < T.dim2(); ++k)
        r.at(j, i, k) = T.at(i, j, k);
  return r;
}

Matrix action_matrix(const std::vector<Matrix> &family, const Vec &x) {
  if (x.size() != family.size())
    throw Error(ErrorCode::DimMismatch, "action: element length differs from family size");
  std::size_t m = family.empty() ? 0 : family[0].rows();
  Matrix r(m, m);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      r = r + family[i].scaled(x[i]);
  return r;
}

Vec act(const std::vector<Matrix> &family, const Vec &x, const Vec &v) {
  if (x.size() != family.size())
    throw Error(ErrorCode::DimMismatch, "action: element length differs from family size");
  std::size_t m = v.size();
  Vec r(m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    const Matrix &M = family[i];
    for (std::size_t a = 0; a < m; ++a) {
      if (v[a].is_zero())
        continue;
      Scalar xv = x[i] * v[a];
      for (std::size_t b = 0; b < m; ++b)
        if (!M.at(a, b).is_zero())
          r[b] += xv * M.at(a, b);
    }
  }
  return r;
}

Matrix coact(const Matrix &xi, std::size_t n, std::size_t m, const Vec &v) {
  if (v.size() != m || xi.rows() != m || xi.cols() != n * m)
    throw Error(ErrorCode::DimMismatch, "coaction shape mismatch");
  Matrix r(n, m);
  for (std::size_t a = 0; a < m; ++a) {
    if (v[a].is_zero())
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < m; ++b)
        if (!xi.at(a, i * m + b).is_zero())
          r.at(i, b) += v[a] * xi.at(a, i * m + b);
  }
  return r;
}

} // namespace prelie
