#include "prelie/constructors.hpp"

namespace prelie {

namespace {

void same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b)
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": dimensions differ");
}

Matrix direct_sum(const Matrix &a, const Matrix &b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

} // namespace

CoalgebraStructure delta_from_r(const AlgebraStructure &A, const TensorElement &r) {
  std::size_t n = A.dim;
  same_dim(r.mat.rows(), n, "delta_from_r");
  same_dim(r.mat.cols(), n, "delta_from_r");
  CoalgebraStructure C(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Scalar s;
        for (std::size_t i = 0; i < n; ++i) {
          if (!r.mat.at(i, q).is_zero() && !A.c.at(k, i, p).is_zero())
            s += r.mat.at(i, q) * A.c.at(k, i, p);
          if (!r.mat.at(p, i).is_zero())
            s += r.mat.at(p, i) * (A.c.at(k, i, q) - A.c.at(i, k, q));
        }
        C.d.at(k, p, q) = s;
      }
  return C;
}

AlgebraStructure circ_from_omega(const CoalgebraStructure &C, const BilinearForm &w) {
  std::size_t n = C.dim;
  same_dim(w.dim(), n, "circ_from_omega");
  AlgebraStructure A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        Scalar s;
        for (std::size_t q = 0; q < n; ++q) {
          if (!C.d.at(i, p, q).is_zero())
            s += C.d.at(i, p, q) * w.mat.at(q, j);
          if (!C.d.at(j, p, q).is_zero())
            s += C.d.at(j, p, q) * w.mat.at(i, q);
          if (!C.d.at(j, q, p).is_zero())
            s -= C.d.at(j, q, p) * w.mat.at(i, q);
        }
        A.c.at(i, j, p) = s;
      }
  return A;
}

LinearOperator nijenhuis_from_pairing(const AlgebraStructure &A, const BilinearForm &w,
                                      const TensorElement &r) {
  same_dim(w.dim(), A.dim, "nijenhuis_from_pairing");
  same_dim(r.dim(), A.dim, "nijenhuis_from_pairing");
  return LinearOperator(w.mat * r.mat);
}

LinearOperator conijenhuis_from_pairing(const CoalgebraStructure &C, const TensorElement &r,
                                        const BilinearForm &w) {
  same_dim(w.dim(), C.dim, "conijenhuis_from_pairing");
  same_dim(r.dim(), C.dim, "conijenhuis_from_pairing");
  return LinearOperator((r.mat * w.mat).transpose());
}

LinearOperator r_sharp(const TensorElement &r) { return LinearOperator(r.mat); }

bool nondegenerate(const TensorElement &r) { return !determinant(r.mat).is_zero(); }

BilinearForm omega_from_r(const TensorElement &r) {
  auto inv = inverse(r.mat);
  if (!inv)
    throw Error(ErrorCode::NotInvertible, "r is degenerate");
  return BilinearForm(*inv);
}

Representation regular_representation(const AlgebraStructure &A) {
  std::size_t n = A.dim;
  Representation R(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        R.rho[i].at(j, k) = A.c.at(i, j, k);
        R.phi[i].at(j, k) = A.c.at(j, i, k);
      }
  return R;
}

Representation dual_representation(const Representation &rep) {
  Representation R(rep.alg_dim, rep.rep_dim);
  for (std::size_t i = 0; i < rep.alg_dim; ++i) {
    Matrix pt = rep.phi[i].transpose();
    R.rho[i] = pt - rep.rho[i].transpose();
    R.phi[i] = pt;
  }
  return R;
}

Corepresentation coregular_corepresentation(const CoalgebraStructure &C) {
  std::size_t n = C.dim;
  Corepresentation R(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        R.xi.at(j, i * n + k) = C.d.at(k, i, j);
        R.eta.at(j, i * n + k) = C.d.at(k, j, i);
      }
  return R;
}

AlgebraStructure dual_algebra(const CoalgebraStructure &C) {
  std::size_t n = C.dim;
  AlgebraStructure A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        A.c.at(i, j, k) = C.d.at(k, i, j);
  return A;
}

CoalgebraStructure dual_coalgebra(const AlgebraStructure &A) {
  std::size_t n = A.dim;
  CoalgebraStructure C(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        C.d.at(k, i, j) = A.c.at(i, j, k);
  return C;
}

ProductBundle semidirect_product(const AlgebraStructure &A, const LinearOperator &N,
                                 const Representation &rep, const LinearOperator &alpha,
                                 const ParamRing &ring) {
  std::size_t n = A.dim, m = rep.rep_dim;
  same_dim(rep.alg_dim, n, "semidirect_product");
  same_dim(N.dim_in(), n, "semidirect_product");
  same_dim(alpha.dim_in(), m, "semidirect_product");
  AlgebraStructure P(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        P.c.at(i, j, k) = A.c.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        P.c.at(i, n + a, n + b) = rep.rho[i].at(a, b);
        P.c.at(n + a, i, n + b) = rep.phi[i].at(a, b);
      }
  ProductBundle out;
  out.ambient.dim = n + m;
  out.ambient.ring = ring;
  out.ambient.alg = P;
  out.ambient.operators["N"] = LinearOperator(direct_sum(N.mat, alpha.mat));
  out.first = {0, n};
  out.second = {n, n + m};
  return out;
}

ProductBundle matched_pair_product(const AlgebraStructure &A, const LinearOperator &NA,
                                   const AlgebraStructure &H, const LinearOperator &NH,
                                   const Representation &onH, const Representation &onA,
                                   const ParamRing &ring) {
  std::size_t n = A.dim, h = H.dim;
  same_dim(onH.alg_dim, n, "matched_pair_product");
  same_dim(onH.rep_dim, h, "matched_pair_product");
  same_dim(onA.alg_dim, h, "matched_pair_product");
  same_dim(onA.rep_dim, n, "matched_pair_product");
  AlgebraStructure P(n + h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        P.c.at(i, j, k) = A.c.at(i, j, k);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t c = 0; c < h; ++c)
        P.c.at(n + a, n + b, n + c) = H.c.at(a, b, c);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      // h_a o e_j = rho_H(h_a) e_j + phi_A(e_j) h_a
      for (std::size_t k = 0; k < n; ++k)
        P.c.at(n + a, j, k) = onA.rho[a].at(j, k);
      for (std::size_t b = 0; b < h; ++b)
        P.c.at(n + a, j, n + b) = onH.phi[j].at(a, b);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < h; ++b) {
      // e_i o h_b = phi_H(h_b) e_i + rho_A(e_i) h_b
      for (std::size_t k = 0; k < n; ++k)
        P.c.at(i, n + b, k) = onA.phi[b].at(i, k);
      for (std::size_t c = 0; c < h; ++c)
        P.c.at(i, n + b, n + c) = onH.rho[i].at(b, c);
    }
  ProductBundle out;
  out.ambient.dim = n + h;
  out.ambient.ring = ring;
  out.ambient.alg = P;
  out.ambient.operators["N"] = LinearOperator(direct_sum(NA.mat, NH.mat));
  out.first = {0, n};
  out.second = {n, n + h};
  return out;
}

CoalgebraStructure coalgebra_pencil(const CoalgebraStructure &C1, const CoalgebraStructure &C2,
                                    const Scalar &s, const Scalar &t) {
  same_dim(C1.dim, C2.dim, "coalgebra_pencil");
  CoalgebraStructure C(C1.dim);
  C.d = C1.d.scaled(s) + C2.d.scaled(t);
  return C;
}

AlgebraStructure central_extension(const AlgebraStructure &A, const BilinearForm &w) {
  std::size_t n = A.dim;
  same_dim(w.dim(), n, "central_extension");
  AlgebraStructure E(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        E.c.at(i, j, k) = A.c.at(i, j, k);
      E.c.at(i, j, n) = w.mat.at(i, j);
    }
  return E;
}

Bundle induced_lie_bialgebra(const Bundle &b) {
  const AlgebraStructure &A = b.require_alg();
  const CoalgebraStructure &C = b.require_coalg();
  std::size_t n = A.dim;
  Bundle out = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.alg->c.at(i, j, k) = A.c.at(i, j, k) - A.c.at(j, i, k);
        out.coalg->d.at(k, i, j) = C.d.at(k, i, j) - C.d.at(k, j, i);
      }
  return out;
}

OOperatorLift lift_o_operator_to_r(const AlgebraStructure &A, const LinearOperator &N,
                                   const Representation &rep, const LinearOperator &alpha,
                                   const LinearOperator &beta, const LinearOperator &S,
                                   const LinearOperator &T, const ParamRing &ring) {
  std::size_t n = A.dim, m = rep.rep_dim;
  same_dim(T.dim_in(), m, "lift_o_operator_to_r");
  same_dim(T.dim_out(), n, "lift_o_operator_to_r");
  same_dim(beta.dim_in(), m, "lift_o_operator_to_r");
  same_dim(S.dim_in(), n, "lift_o_operator_to_r");
  OOperatorLift out;
  out.product = semidirect_product(A, N, dual_representation(rep),
                                   LinearOperator(beta.mat.transpose()), ring);
  out.product.ambient.operators["S"] = LinearOperator(direct_sum(S.mat, alpha.mat.transpose()));
  TensorElement r(n + m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      r.mat.at(j, n + a) = T.mat.at(a, j);
      r.mat.at(n + a, j) = T.mat.at(a, j);
    }
  out.product.ambient.tensors["r"] = r;
  out.r = r;
  return out;
}

Matrix pi_apply(const PiDescriptor &pi, const Matrix &m) {
  switch (pi.family) {
  case PiFamily::Scale:
    return m.scaled(pi.theta);
  case PiFamily::Reflect:
    return Matrix::identity(m.rows()).scaled(pi.theta) - m;
  case PiFamily::Invert: {
    auto inv = inverse(m);
    if (!inv)
      throw Error(ErrorCode::NotInvertible, "operator is not invertible");
    return inv->scaled(pi.theta);
  }
  }
  return m;
}

OOperatorLift lift_o_operator_to_r_pi(const AlgebraStructure &A, const LinearOperator &N,
                                      const Representation &rep, const LinearOperator &alpha,
                                      const LinearOperator &T, const PiDescriptor &pi,
                                      const ParamRing &ring) {
  return lift_o_operator_to_r(A, N, rep, alpha, LinearOperator(pi_apply(pi, alpha.mat)),
                              LinearOperator(pi_apply(pi, N.mat)), T, ring);
}

} // namespace prelie
