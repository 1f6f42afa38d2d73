#pragma once

#include "prelie/laws.hpp"

#include <utility>

namespace prelie {

// Ambient structure on a direct sum; ranges are [begin, end) basis indices.
struct ProductBundle {
  Bundle ambient;
  std::pair<std::size_t, std::size_t> first, second;
};

// Delta_r(x) = sum x.a_i (x) b_i + a_i (x) x.b_i - a_i (x) b_i.x
CoalgebraStructure delta_from_r(const AlgebraStructure &A, const TensorElement &r);
// x o y = x_(1) w(x_(2), y) + y_(1) w(x, y_(2)) - w(x, y_(1)) y_(2)
AlgebraStructure circ_from_omega(const CoalgebraStructure &C, const BilinearForm &w);
// N(x) = sum w(x, a_i) b_i, i.e. the matrix product w * r.
LinearOperator nijenhuis_from_pairing(const AlgebraStructure &A, const BilinearForm &w,
                                      const TensorElement &r);
// S(x) = sum a_i w(b_i, x)
LinearOperator conijenhuis_from_pairing(const CoalgebraStructure &C, const TensorElement &r,
                                        const BilinearForm &w);
LinearOperator r_sharp(const TensorElement &r);
bool nondegenerate(const TensorElement &r);
// Throws NOT_INVERTIBLE.
BilinearForm omega_from_r(const TensorElement &r);

Representation regular_representation(const AlgebraStructure &A);
// (rho* - phi*, -phi*) on the dual module.
Representation dual_representation(const Representation &rep);
// Transpose of the regular representation of the dual algebra.
Corepresentation coregular_corepresentation(const CoalgebraStructure &C);
// Multiplication on A* dual to the comultiplication, and conversely.
AlgebraStructure dual_algebra(const CoalgebraStructure &C);
CoalgebraStructure dual_coalgebra(const AlgebraStructure &A);

// (x+u) o (y+v) = xy + rho(x)v + phi(y)u with operator N + alpha ("N").
ProductBundle semidirect_product(const AlgebraStructure &A, const LinearOperator &N,
                                 const Representation &rep, const LinearOperator &alpha,
                                 const ParamRing &ring = {});
// onH: A acting on H; onA: H acting on A. Operator "N" is N_A + N_H.
ProductBundle matched_pair_product(const AlgebraStructure &A, const LinearOperator &NA,
                                   const AlgebraStructure &H, const LinearOperator &NH,
                                   const Representation &onH, const Representation &onA,
                                   const ParamRing &ring = {});
CoalgebraStructure coalgebra_pencil(const CoalgebraStructure &C1, const CoalgebraStructure &C2,
                                    const Scalar &s, const Scalar &t);
// x * y = x o y + w(x, y) c on A + Kc.
AlgebraStructure central_extension(const AlgebraStructure &A, const BilinearForm &w);
// Commutator bracket and antisymmetrized cobracket; operators carried over.
Bundle induced_lie_bialgebra(const Bundle &b);

struct OOperatorLift {
  ProductBundle product;
  TensorElement r;
};
// Ambient: A with the dual rep on V*, operator "N" = N + beta^T, "S" = S + alpha^T;
// tensor "r" = T + tau(T).
OOperatorLift lift_o_operator_to_r(const AlgebraStructure &A, const LinearOperator &N,
                                   const Representation &rep, const LinearOperator &alpha,
                                   const LinearOperator &beta, const LinearOperator &S,
                                   const LinearOperator &T, const ParamRing &ring = {});
// Pi(t) applied to an operator; invert throws NOT_INVERTIBLE.
Matrix pi_apply(const PiDescriptor &pi, const Matrix &m);
// beta = Pi(alpha), S = Pi(N).
OOperatorLift lift_o_operator_to_r_pi(const AlgebraStructure &A, const LinearOperator &N,
                                      const Representation &rep, const LinearOperator &alpha,
                                      const LinearOperator &T, const PiDescriptor &pi,
                                      const ParamRing &ring = {});

} // namespace prelie
