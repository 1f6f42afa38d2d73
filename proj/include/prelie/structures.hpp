#pragma once

#include "prelie/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
Vec add(const Vec &a, const Vec &b);
Vec sub(const Vec &a, const Vec &b);
Vec scale(const Scalar &s, const Vec &a);
bool all_zero(const Vec &a);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar &at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> &data() { return data_; }
  const std::vector<Scalar> &data() const { return data_; }

  Matrix transpose() const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator*(const Matrix &o) const;
  Matrix scaled(const Scalar &s) const;
  bool is_zero() const;
  bool operator==(const Matrix &o) const;
  bool operator!=(const Matrix &o) const { return !(*this == o); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Rank-3 array with independent extents.
class Tensor3 {
public:
  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c)
      : a_(a), b_(b), c_(c), data_(a * b * c) {}
  std::size_t dim0() const { return a_; }
  std::size_t dim1() const { return b_; }
  std::size_t dim2() const { return c_; }
  Scalar &at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * b_ + j) * c_ + k]; }
  const Scalar &at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * b_ + j) * c_ + k];
  }
  std::vector<Scalar> &data() { return data_; }
  const std::vector<Scalar> &data() const { return data_; }
  Tensor3 operator+(const Tensor3 &o) const;
  Tensor3 operator-(const Tensor3 &o) const;
  Tensor3 scaled(const Scalar &s) const;
  bool operator==(const Tensor3 &o) const;

private:
  std::size_t a_ = 0, b_ = 0, c_ = 0;
  std::vector<Scalar> data_;
};

// e_i o e_j = sum_k c(i,j,k) e_k
struct AlgebraStructure {
  std::size_t dim = 0;
  Tensor3 c;
  AlgebraStructure() = default;
  explicit AlgebraStructure(std::size_t n) : dim(n), c(n, n, n) {}
  bool operator==(const AlgebraStructure &o) const { return dim == o.dim && c == o.c; }
};

// Delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j
struct CoalgebraStructure {
  std::size_t dim = 0;
  Tensor3 d;
  CoalgebraStructure() = default;
  explicit CoalgebraStructure(std::size_t n) : dim(n), d(n, n, n) {}
  bool operator==(const CoalgebraStructure &o) const { return dim == o.dim && d == o.d; }
};

// F(e_i) = sum_j mat(i,j) e_j; row vectors act on the left: (F x) = x * mat.
struct LinearOperator {
  Matrix mat;
  LinearOperator() = default;
  explicit LinearOperator(Matrix m) : mat(std::move(m)) {}
  LinearOperator(std::size_t in, std::size_t out) : mat(in, out) {}
  static LinearOperator identity(std::size_t n) { return LinearOperator(Matrix::identity(n)); }
  std::size_t dim_in() const { return mat.rows(); }
  std::size_t dim_out() const { return mat.cols(); }
  bool operator==(const LinearOperator &o) const { return mat == o.mat; }
};

// omega(e_i, e_j) = mat(i,j)
struct BilinearForm {
  Matrix mat;
  BilinearForm() = default;
  explicit BilinearForm(Matrix m) : mat(std::move(m)) {}
  explicit BilinearForm(std::size_t n) : mat(n, n) {}
  std::size_t dim() const { return mat.rows(); }
  bool operator==(const BilinearForm &o) const { return mat == o.mat; }
};

// r = sum mat(i,j) e_i (x) e_j
struct TensorElement {
  Matrix mat;
  TensorElement() = default;
  explicit TensorElement(Matrix m) : mat(std::move(m)) {}
  explicit TensorElement(std::size_t n) : mat(n, n) {}
  std::size_t dim() const { return mat.rows(); }
  bool operator==(const TensorElement &o) const { return mat == o.mat; }
};

// rho(e_i)(f_a) = sum_b rho[i](a,b) f_b, same for phi.
struct Representation {
  std::size_t alg_dim = 0, rep_dim = 0;
  std::vector<Matrix> rho, phi;
  Representation() = default;
  Representation(std::size_t n, std::size_t m);
  bool operator==(const Representation &o) const {
    return alg_dim == o.alg_dim && rep_dim == o.rep_dim && rho == o.rho && phi == o.phi;
  }
};

// xi(f_a) = sum_{i,b} xi(a, i*m+b) e_i (x) f_b, same for eta.
struct Corepresentation {
  std::size_t coalg_dim = 0, corep_dim = 0;
  Matrix xi, eta;
  Corepresentation() = default;
  Corepresentation(std::size_t n, std::size_t m) : coalg_dim(n), corep_dim(m), xi(m, n * m), eta(m, n * m) {}
  bool operator==(const Corepresentation &o) const {
    return coalg_dim == o.coalg_dim && corep_dim == o.corep_dim && xi == o.xi && eta == o.eta;
  }
};

struct Bundle {
  std::size_t dim = 0;
  ParamRing ring;
  std::vector<std::string> basis;
  std::optional<AlgebraStructure> alg;
  std::optional<CoalgebraStructure> coalg;
  std::map<std::string, LinearOperator> operators;
  std::map<std::string, BilinearForm> forms;
  std::map<std::string, TensorElement> tensors;
  std::map<std::string, Representation> reps;
  std::map<std::string, Corepresentation> coreps;
  std::map<std::string, AlgebraStructure> algebras;
  std::map<std::string, CoalgebraStructure> coalgebras;
  std::vector<Scalar> assumptions;

  const AlgebraStructure &require_alg() const;
  const CoalgebraStructure &require_coalg() const;
  const LinearOperator &op(const std::string &name) const;
  const BilinearForm &form(const std::string &name) const;
  const TensorElement &tensor(const std::string &name) const;
  const Representation &rep(const std::string &name) const;
  const Corepresentation &corep(const std::string &name) const;
  const AlgebraStructure &algebra(const std::string &name) const;
  const CoalgebraStructure &coalgebra(const std::string &name) const;

  bool operator==(const Bundle &o) const;
};

// Visits every Scalar stored in the bundle, assumptions included.
void for_each_scalar(Bundle &b, const std::function<void(Scalar &)> &fn);
void for_each_scalar(const Bundle &b, const std::function<void(const Scalar &)> &fn);
bool is_numeric(const Bundle &b);
Bundle substitute(const Bundle &b, const std::map<std::string, Rational> &values);
// Checks shapes against dim and throws DIM_MISMATCH on disagreement.
void validate(const Bundle &b);

// Primitives; all assume row-vector conventions documented above.
Vec mul_apply(const AlgebraStructure &A, const Vec &x, const Vec &y);
Matrix comul_apply(const CoalgebraStructure &C, const Vec &x);
Vec apply(const LinearOperator &F, const Vec &x);
Vec apply(const Matrix &F, const Vec &x);
Matrix flip(const Matrix &t);
// (F (x) G)(T)(i,j) = sum_{a,b} T(a,b) F(a,i) G(b,j)
Matrix tensor_apply(const Matrix &F, const Matrix &G, const Matrix &T);
// G after F, i.e. x -> G(F(x)).
LinearOperator compose(const LinearOperator &G, const LinearOperator &F);
LinearOperator left_mult(const AlgebraStructure &A, const Vec &x);
LinearOperator right_mult(const AlgebraStructure &A, const Vec &x);
Scalar pair(const BilinearForm &w, const Vec &x, const Vec &y);
Scalar determinant(const Matrix &m);
std::optional<Matrix> inverse(const Matrix &m);

// (Delta (x) id)(T) and (id (x) Delta)(T) for T in A (x) A.
Tensor3 comul_left(const CoalgebraStructure &C, const Matrix &T);
Tensor3 comul_right(const CoalgebraStructure &C, const Matrix &T);
Tensor3 swap12(const Tensor3 &T);

// rho(x) v for a family of matrices indexed by the acting basis.
Vec act(const std::vector<Matrix> &family, const Vec &x, const Vec &v);
Matrix action_matrix(const std::vector<Matrix> &family, const Vec &x);
// xi(v) as an n x m matrix X(i,b).
Matrix coact(const Matrix &xi, std::size_t n, std::size_t m, const Vec &v);

} // namespace prelie
