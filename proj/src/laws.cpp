#include "prelie/laws.hpp"

#include "prelie/parse.hpp"

#include <algorithm>
#include <cctype>

namespace prelie {

namespace {

struct LawRow {
  LawId id;
  const char *name;
  const char *reads;
};

const LawRow kLaws[] = {
    {LawId::PreLie, "PRE_LIE", "mul"},
    {LawId::PreLieCo, "PRE_LIE_CO", "comul"},
    {LawId::PreLieBialg, "PRE_LIE_BIALG", "mul, comul"},
    {LawId::SEquation, "S_EQUATION", "mul, tensor r"},
    {LawId::CoSEquation, "CO_S_EQUATION", "comul, form omega"},
    {LawId::PseudoHessian, "PSEUDO_HESSIAN", "mul, form omega"},
    {LawId::PseudoHessianCo, "PSEUDO_HESSIAN_CO", "comul, tensor r"},
    {LawId::Nijenhuis, "NIJENHUIS", "mul, operator N"},
    {LawId::CoNijenhuis, "CO_NIJENHUIS", "comul, operator S"},
    {LawId::Rep, "REP", "mul, rep"},
    {LawId::NijRep, "NIJ_REP", "mul, operator N, rep, operator alpha"},
    {LawId::Corep, "COREP", "comul, corep"},
    {LawId::AdmissibleS, "ADMISSIBLE_S", "mul, operators N, S"},
    {LawId::AdmissibleBeta, "ADMISSIBLE_BETA", "mul, operator N, rep, operator beta"},
    {LawId::AdmissibleNStar, "ADMISSIBLE_NSTAR", "comul, operators N, S"},
    {LawId::NijPreLieBialg, "NIJ_PRE_LIE_BIALG", "mul, comul, operators N, S"},
    {LawId::MatchedPair, "MATCHED_PAIR",
     "mul, operator N, algebra H, operator N_H, reps A_on_H, H_on_A"},
    {LawId::OOperatorWeak, "O_OPERATOR_WEAK", "mul, operators N, T, alpha, rep"},
    {LawId::OOperator, "O_OPERATOR", "mul, operators N, T, alpha, rep"},
    {LawId::SNijSEquation, "S_NIJ_S_EQUATION", "mul, tensor r, operators N, S"},
    {LawId::PencilCompat, "PENCIL_COMPAT", "comul, coalgebra delta [, coreps corep, corep2]"},
    {LawId::PencilMorphism, "PENCIL_MORPHISM",
     "comul, coalgebra delta, operators S, theta, coreps corep, corep2"},
    {LawId::PiAdmissible, "PI_ADMISSIBLE", "mul, operators N, alpha, rep; Pi descriptor"},
    {LawId::Balanced, "BALANCED", "mul, comul"},
    {LawId::LieAlg, "LIE_ALG", "mul"},
    {LawId::LieCo, "LIE_CO", "comul"},
    {LawId::LieBialg, "LIE_BIALG", "mul, comul"},
    {LawId::NijLieBialg, "NIJ_LIE_BIALG", "mul, comul, operators N, S"},
    {LawId::Commutative, "COMMUTATIVE", "mul"},
    {LawId::Cocommutative, "COCOMMUTATIVE", "comul"},
    {LawId::SymmetricForm, "SYMMETRIC_FORM", "form omega"},
    {LawId::SymmetricTensor, "SYMMETRIC_TENSOR", "tensor r"},
};

const LawRow &row(LawId id) {
  for (const auto &r : kLaws)
    if (r.id == id)
      return r;
  throw Error(ErrorCode::UnknownLaw, "unknown law id");
}

std::string normalize_name(const std::string &s) {
  std::string out;
  for (char ch : s) {
    if (ch == '-')
      out += '_';
    else
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residual collection

class Sink {
public:
  Sink(Residual &r, bool stop) : res_(r), stop_(stop) {}

  bool done() const { return stop_ && !res_.entries.empty(); }

  void scalar(const std::string &clause, std::vector<std::size_t> in, const Scalar &s) {
    if (!s.is_zero())
      push(clause, std::move(in), {}, s);
  }
  void vec(const std::string &clause, const std::vector<std::size_t> &in, const Vec &v) {
    for (std::size_t k = 0; k < v.size() && !done(); ++k)
      if (!v[k].is_zero())
        push(clause, in, {k}, v[k]);
  }
  void mat(const std::string &clause, const std::vector<std::size_t> &in, const Matrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) {
          if (done())
            return;
          push(clause, in, {i, j}, m.at(i, j));
        }
  }
  void ten(const std::string &clause, const std::vector<std::size_t> &in, const Tensor3 &t) {
    for (std::size_t i = 0; i < t.dim0(); ++i)
      for (std::size_t j = 0; j < t.dim1(); ++j)
        for (std::size_t k = 0; k < t.dim2(); ++k)
          if (!t.at(i, j, k).is_zero()) {
            if (done())
              return;
            push(clause, in, {i, j, k}, t.at(i, j, k));
          }
  }

  std::string prefix;

private:
  void push(const std::string &clause, std::vector<std::size_t> in, std::vector<std::size_t> out,
            const Scalar &s) {
    if (done())
      return;
    res_.entries.push_back({prefix + clause, std::move(in), std::move(out), s});
  }
  Residual &res_;
  bool stop_;
};

// Runs fn with the sink prefix temporarily set to "NAME:".
template <class F> void nested(Sink &s, LawId law, F &&fn) {
  if (s.done())
    return;
  std::string saved = s.prefix;
  s.prefix = saved + law_name(law) + ":";
  fn();
  s.prefix = saved;
}

Vec mv(const AlgebraStructure &A, const Vec &x, const Vec &y) { return mul_apply(A, x, y); }
Vec ap(const Matrix &F, const Vec &x) { return apply(F, x); }
Vec neg(const Vec &v) { return scale(Scalar(-1L), v); }
Vec sum(std::initializer_list<Vec> vs) {
  auto it = vs.begin();
  Vec out = *it++;
  for (; it != vs.end(); ++it)
    out = add(out, *it);
  return out;
}
Matrix tp(const Matrix &F, const Matrix &G, const Matrix &T) { return tensor_apply(F, G, T); }
Tensor3 cyc_sum(const Tensor3 &T) {
  std::size_t n = T.dim0();
  Tensor3 r(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r.at(i, j, k) = T.at(i, j, k) + T.at(k, i, j) + T.at(j, k, i);
  return r;
}

void need_square(const Matrix &m, std::size_t n, const std::string &what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimMismatch, what + " must be " + std::to_string(n) + "x" +
                                            std::to_string(n));
}

void need_rep(const Representation &r, std::size_t n, std::size_t m_or_0, const std::string &what) {
  if (r.alg_dim != n)
    throw Error(ErrorCode::DimMismatch, what + ": acting dimension differs from the algebra");
  if (m_or_0 && r.rep_dim != m_or_0)
    throw Error(ErrorCode::DimMismatch, what + ": module dimension mismatch");
}

// (1 (x) G) F (v): sum_b F(v)(i,b) G(f_b)(j,k)
Tensor3 chain(const Matrix &F, const Matrix &G, std::size_t n, std::size_t m, const Vec &v) {
  Matrix X = coact(F, n, m, v);
  Tensor3 r(n, n, m);
  for (std::size_t b = 0; b < m; ++b) {
    Matrix Gb = coact(G, n, m, basis_vec(m, b));
    for (std::size_t i = 0; i < n; ++i) {
      if (X.at(i, b).is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (!Gb.at(j, k).is_zero())
            r.at(i, j, k) += X.at(i, b) * Gb.at(j, k);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Individual laws

void pre_lie(const AlgebraStructure &A, Sink &s) {
  std::size_t n = A.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (s.done())
          return;
        Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        Vec r = sum({mv(A, mv(A, x, y), z), neg(mv(A, x, mv(A, y, z))), neg(mv(A, mv(A, y, x), z)),
                     mv(A, y, mv(A, x, z))});
        s.vec("associator", {i, j, k}, r);
      }
}

void pre_lie_co(const CoalgebraStructure &C, Sink &s) {
  std::size_t n = C.dim;
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Matrix D = comul_apply(C, basis_vec(n, i));
    Tensor3 t1 = comul_left(C, D), t2 = comul_right(C, D);
    s.ten("coassociator", {i}, t1 - t2 - swap12(t1) + swap12(t2));
  }
}

void pre_lie_bialg(const AlgebraStructure &A, const CoalgebraStructure &C, Sink &s) {
  std::size_t n = A.dim;
  if (C.dim != n)
    throw Error(ErrorCode::DimMismatch, "mul and comul dimensions differ");
  Matrix I = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Matrix Dx = comul_apply(C, x), Dy = comul_apply(C, y);
      Matrix Dxy = comul_apply(C, mv(A, x, y)), Dyx = comul_apply(C, mv(A, y, x));
      Matrix Lx = left_mult(A, x).mat, Ly = left_mult(A, y).mat;
      Matrix Rx = right_mult(A, x).mat, Ry = right_mult(A, y).mat;
      Matrix b1 = Dxy - Dyx -
                  (tp(Lx, I, Dy) + tp(I, Lx, Dy) - tp(I, Rx, Dy) - tp(Ly, I, Dx) - tp(I, Ly, Dx) +
                   tp(I, Ry, Dx));
      s.mat("compat1", {i, j}, b1);
      Matrix b2 = Dxy - Dxy.transpose() -
                  (tp(I, Ry, Dx) + tp(I, Lx, Dy) - tp(Lx, I, Dy).transpose() -
                   tp(I, Ry, Dx).transpose() - tp(I, Lx, Dy).transpose() + tp(Lx, I, Dy));
      s.mat("compat2", {i, j}, b2);
    }
}

void s_equation(const AlgebraStructure &A, const Matrix &r, Sink &s) {
  std::size_t n = A.dim;
  need_square(r, n, "tensor r");
  Tensor3 T(n, n, n);
  for (std::size_t P = 0; P < n; ++P)
    for (std::size_t Q = 0; Q < n; ++Q) {
      if (r.at(P, Q).is_zero())
        continue;
      for (std::size_t S = 0; S < n; ++S)
        for (std::size_t U = 0; U < n; ++U) {
          if (r.at(S, U).is_zero())
            continue;
          Scalar rr = r.at(P, Q) * r.at(S, U);
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar &qs = A.c.at(Q, S, m), &qu = A.c.at(Q, U, m);
            const Scalar &ps = A.c.at(P, S, m), &uq = A.c.at(U, Q, m);
            if (!qs.is_zero())
              T.at(P, m, U) += rr * qs;
            if (!qu.is_zero())
              T.at(P, S, m) += rr * qu;
            if (!ps.is_zero())
              T.at(m, Q, U) -= rr * ps;
            if (!uq.is_zero())
              T.at(P, S, m) -= rr * uq;
          }
        }
    }
  s.ten("s-equation", {}, T);
}

void co_s_equation(const CoalgebraStructure &C, const Matrix &w, Sink &s) {
  std::size_t n = C.dim;
  need_square(w, n, "form omega");
  std::vector<Matrix> D(n);
  for (std::size_t i = 0; i < n; ++i)
    D[i] = comul_apply(C, basis_vec(n, i));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (s.done())
          return;
        Scalar t;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (!D[y].at(a, b).is_zero())
              t += D[y].at(a, b) * w.at(x, a) * w.at(b, z);
            if (!D[z].at(a, b).is_zero())
              t += D[z].at(a, b) * (w.at(x, a) * w.at(y, b) - w.at(y, a) * w.at(x, b));
            if (!D[x].at(a, b).is_zero())
              t -= D[x].at(a, b) * w.at(a, y) * w.at(b, z);
          }
        s.scalar("co-s-equation", {x, y, z}, t);
      }
}

void symmetric(const Matrix &m, const std::string &clause, Sink &s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      s.scalar(clause, {i, j}, m.at(i, j) - m.at(j, i));
}

void pseudo_hessian(const AlgebraStructure &A, const Matrix &w, Sink &s) {
  std::size_t n = A.dim;
  need_square(w, n, "form omega");
  symmetric(w, "symmetry", s);
  BilinearForm W(w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (s.done())
          return;
        Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        Scalar t = pair(W, mv(A, x, y), z) - pair(W, x, mv(A, y, z)) - pair(W, mv(A, y, x), z) +
                   pair(W, y, mv(A, x, z));
        s.scalar("cocycle", {i, j, k}, t);
      }
}

void pseudo_hessian_co(const CoalgebraStructure &C, const Matrix &r, Sink &s) {
  need_square(r, C.dim, "tensor r");
  symmetric(r, "symmetry", s);
  Tensor3 t1 = comul_left(C, r), t2 = comul_right(C, r);
  s.ten("cocycle", {}, t1 - t2 - swap12(t1) + swap12(t2));
}

void nijenhuis(const AlgebraStructure &A, const Matrix &N, Sink &s) {
  std::size_t n = A.dim;
  need_square(N, n, "operator N");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec Nx = ap(N, x), Ny = ap(N, y);
      Vec r = sum({mv(A, Nx, Ny), ap(N, ap(N, mv(A, x, y))), neg(ap(N, mv(A, Nx, y))),
                   neg(ap(N, mv(A, x, Ny)))});
      s.vec("nijenhuis", {i, j}, r);
    }
}

void co_nijenhuis(const CoalgebraStructure &C, const Matrix &S, Sink &s) {
  std::size_t n = C.dim;
  need_square(S, n, "operator S");
  Matrix I = Matrix::identity(n);
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Vec x = basis_vec(n, i), Sx = ap(S, x);
    Matrix DSx = comul_apply(C, Sx);
    Matrix r = tp(S, S, comul_apply(C, x)) + comul_apply(C, ap(S, Sx)) - tp(S, I, DSx) -
               tp(I, S, DSx);
    s.mat("co-nijenhuis", {i}, r);
  }
}

void rep_law(const AlgebraStructure &A, const Representation &R, Sink &s) {
  std::size_t n = A.dim, m = R.rep_dim;
  need_rep(R, n, 0, "rep");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a) {
        if (s.done())
          return;
        Vec x = basis_vec(n, i), y = basis_vec(n, j), v = basis_vec(m, a);
        Vec r1 = sum({act(R.rho, sub(mv(A, x, y), mv(A, y, x)), v), neg(act(R.rho, x, act(R.rho, y, v))),
                      act(R.rho, y, act(R.rho, x, v))});
        s.vec("rho", {i, j, a}, r1);
        Vec r2 = sum({act(R.phi, mv(A, x, y), v), neg(act(R.rho, x, act(R.phi, y, v))),
                      act(R.phi, y, act(R.rho, x, v)), neg(act(R.phi, y, act(R.phi, x, v)))});
        s.vec("phi", {i, j, a}, r2);
      }
}

void nij_rep(const AlgebraStructure &A, const Matrix &N, const Representation &R, const Matrix &al,
             Sink &s) {
  std::size_t n = A.dim, m = R.rep_dim;
  need_rep(R, n, 0, "rep");
  need_square(N, n, "operator N");
  need_square(al, m, "operator alpha");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), v = basis_vec(m, a), Nx = ap(N, x), av = ap(al, v);
      for (int which = 0; which < 2; ++which) {
        const auto &F = which == 0 ? R.rho : R.phi;
        Vec r = sum({act(F, Nx, av), ap(al, ap(al, act(F, x, v))), neg(ap(al, act(F, Nx, v))),
                     neg(ap(al, act(F, x, av)))});
        s.vec(which == 0 ? "rho" : "phi", {i, a}, r);
      }
    }
}

void corep_law(const CoalgebraStructure &C, const Corepresentation &cr, Sink &s) {
  std::size_t n = C.dim, m = cr.corep_dim;
  if (cr.coalg_dim != n)
    throw Error(ErrorCode::DimMismatch, "corep: coalgebra dimension differs");
  for (std::size_t a = 0; a < m && !s.done(); ++a) {
    Vec v = basis_vec(m, a);
    Tensor3 t = comul_left(C, coact(cr.xi, n, m, v));
    Tensor3 xx = chain(cr.xi, cr.xi, n, m, v);
    s.ten("xi", {a}, t - swap12(t) - swap12(xx) + xx);
    Tensor3 u = comul_left(C, coact(cr.eta, n, m, v));
    Tensor3 r = u - (swap12(chain(cr.eta, cr.xi, n, m, v)) - chain(cr.xi, cr.eta, n, m, v) +
                     chain(cr.eta, cr.eta, n, m, v));
    s.ten("eta", {a}, r);
  }
}

void admissible_s(const AlgebraStructure &A, const Matrix &N, const Matrix &S, Sink &s) {
  std::size_t n = A.dim;
  need_square(N, n, "operator N");
  need_square(S, n, "operator S");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec Nx = ap(N, x), Ny = ap(N, y), Sx = ap(S, x), Sy = ap(S, y);
      Vec r1 = sum({ap(S, mv(A, Nx, y)), mv(A, x, ap(S, Sy)), neg(mv(A, Nx, Sy)),
                    neg(ap(S, mv(A, x, Sy)))});
      s.vec("left", {i, j}, r1);
      Vec r2 = sum({ap(S, mv(A, x, Ny)), mv(A, ap(S, Sx), y), neg(mv(A, Sx, Ny)),
                    neg(ap(S, mv(A, Sx, y)))});
      s.vec("right", {i, j}, r2);
    }
}

void admissible_beta(const AlgebraStructure &A, const Matrix &N, const Representation &R,
                     const Matrix &be, Sink &s) {
  std::size_t n = A.dim, m = R.rep_dim;
  need_rep(R, n, 0, "rep");
  need_square(N, n, "operator N");
  need_square(be, m, "operator beta");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), v = basis_vec(m, a), Nx = ap(N, x), bv = ap(be, v);
      for (int which = 0; which < 2; ++which) {
        const auto &F = which == 0 ? R.rho : R.phi;
        Vec r = sum({ap(be, act(F, Nx, v)), act(F, x, ap(be, bv)), neg(act(F, Nx, bv)),
                     neg(ap(be, act(F, x, bv)))});
        s.vec(which == 0 ? "rho" : "phi", {i, a}, r);
      }
    }
}

void admissible_nstar(const CoalgebraStructure &C, const Matrix &N, const Matrix &S, Sink &s) {
  std::size_t n = C.dim;
  need_square(N, n, "operator N");
  need_square(S, n, "operator S");
  Matrix I = Matrix::identity(n), N2 = N * N;
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Vec x = basis_vec(n, i);
    Matrix D = comul_apply(C, x), DN = comul_apply(C, ap(N, x));
    s.mat("left", {i}, tp(I, S, DN) + tp(N2, I, D) - tp(N, S, D) - tp(N, I, DN));
    s.mat("right", {i}, tp(S, I, DN) + tp(I, N2, D) - tp(S, N, D) - tp(I, N, DN));
  }
}

// H-side members of a matched pair.
struct Side {
  const AlgebraStructure &alg;
  const Matrix &N;
};

void matched_pair_cross(const Side &A, const Side &H, const Representation &onH,
                        const Representation &onA, const char *c1, const char *c2, Sink &s) {
  // onH: A acts on H (rho_A, phi_A); onA: H acts on A (rho_H, phi_H).
  std::size_t n = A.alg.dim, h = H.alg.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) {
        if (s.done())
          return;
        Vec x = basis_vec(n, i), ea = basis_vec(h, a), eb = basis_vec(h, b);
        auto rA = [&](const Vec &u, const Vec &w) { return act(onH.rho, u, w); };
        auto pA = [&](const Vec &u, const Vec &w) { return act(onH.phi, u, w); };
        auto rH = [&](const Vec &u, const Vec &w) { return act(onA.rho, u, w); };
        auto pH = [&](const Vec &u, const Vec &w) { return act(onA.phi, u, w); };
        auto mH = [&](const Vec &u, const Vec &w) { return mv(H.alg, u, w); };
        Vec r1 = sum({rA(x, mH(ea, eb)), rA(sub(rH(ea, x), pH(ea, x)), eb),
                      neg(mH(sub(rA(x, ea), pA(x, ea)), eb)), neg(pA(pH(eb, x), ea)),
                      neg(mH(ea, rA(x, eb)))});
        s.vec(c1, {i, a, b}, r1);
        Vec r2 = sum({pA(x, sub(mH(ea, eb), mH(eb, ea))), neg(pA(rH(eb, x), ea)),
                      pA(rH(ea, x), eb), neg(mH(ea, pA(x, eb))), mH(eb, pA(x, ea))});
        s.vec(c2, {i, a, b}, r2);
      }
}

void matched_pair(const Bundle &B, Sink &s) {
  const AlgebraStructure &A = B.require_alg();
  const AlgebraStructure &H = B.algebra("H");
  const Matrix &NA = B.op("N").mat;
  const Matrix &NH = B.op("N_H").mat;
  const Representation &onH = B.rep("A_on_H");
  const Representation &onA = B.rep("H_on_A");
  need_rep(onH, A.dim, H.dim, "rep A_on_H");
  need_rep(onA, H.dim, A.dim, "rep H_on_A");
  const std::string saved = s.prefix;
  auto part = [&](const char *side, LawId law, auto fn) {
    s.prefix = saved + side + ":" + law_name(law) + ":";
    fn();
  };
  part("A", LawId::PreLie, [&] { pre_lie(A, s); });
  part("A", LawId::Nijenhuis, [&] { nijenhuis(A, NA, s); });
  part("H", LawId::PreLie, [&] { pre_lie(H, s); });
  part("H", LawId::Nijenhuis, [&] { nijenhuis(H, NH, s); });
  part("A_on_H", LawId::Rep, [&] { rep_law(A, onH, s); });
  part("A_on_H", LawId::NijRep, [&] { nij_rep(A, NA, onH, NH, s); });
  part("H_on_A", LawId::Rep, [&] { rep_law(H, onA, s); });
  part("H_on_A", LawId::NijRep, [&] { nij_rep(H, NH, onA, NA, s); });
  s.prefix = saved;
  matched_pair_cross({A, NA}, {H, NH}, onH, onA, "cross1", "cross2", s);
  matched_pair_cross({H, NH}, {A, NA}, onA, onH, "cross3", "cross4", s);
}

void o_operator_weak(const AlgebraStructure &A, const Matrix &N, const Representation &R,
                     const Matrix &al, const Matrix &T, Sink &s) {
  std::size_t n = A.dim, m = R.rep_dim;
  need_rep(R, n, 0, "rep");
  need_square(N, n, "operator N");
  need_square(al, m, "operator alpha");
  if (T.rows() != m || T.cols() != n)
    throw Error(ErrorCode::DimMismatch, "operator T must be rep_dim x dim");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (s.done())
        return;
      Vec u = basis_vec(m, a), v = basis_vec(m, b), Tu = ap(T, u), Tv = ap(T, v);
      Vec r = sub(mv(A, Tu, Tv), ap(T, add(act(R.rho, Tu, v), act(R.phi, Tv, u))));
      s.vec("o-operator", {a, b}, r);
    }
  s.mat("intertwine", {}, T * N - al * T);
}

void s_nij_tail(const Matrix &r, const Matrix &N, const Matrix &S, Sink &s) {
  std::size_t n = r.rows();
  need_square(N, n, "operator N");
  need_square(S, n, "operator S");
  Matrix I = Matrix::identity(n);
  s.mat("s-nijenhuis", {}, tp(S, I, r) - tp(I, N, r));
}

void pencil_compat(const CoalgebraStructure &C, const CoalgebraStructure &Dl, Sink &s) {
  std::size_t n = C.dim;
  if (Dl.dim != n)
    throw Error(ErrorCode::DimMismatch, "coalgebra delta dimension differs");
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Vec x = basis_vec(n, i);
    Matrix D = comul_apply(C, x), d = comul_apply(Dl, x);
    Tensor3 M1 = comul_left(Dl, D), M2 = comul_left(C, d);
    Tensor3 M3 = comul_right(Dl, D), M4 = comul_right(C, d);
    Tensor3 P = M1 + M2 - M3 - M4;
    s.ten("compat", {i}, P - swap12(P));
  }
}

Corepresentation corep_sum(const Corepresentation &a, const Corepresentation &b) {
  Corepresentation r = a;
  r.xi = a.xi + b.xi;
  r.eta = a.eta + b.eta;
  return r;
}

CoalgebraStructure coalg_sum(const CoalgebraStructure &a, const CoalgebraStructure &b) {
  CoalgebraStructure r = a;
  r.d = a.d + b.d;
  return r;
}

Tensor3 corep_part(const CoalgebraStructure &C, const Corepresentation &cr, std::size_t a, bool eta) {
  Residual tmp;
  Sink s(tmp, false);
  corep_law(C, cr, s);
  std::size_t n = C.dim, m = cr.corep_dim;
  Tensor3 t(n, n, m);
  for (const auto &e : tmp.entries)
    if (e.input[0] == a && (e.clause == "eta") == eta)
      t.at(e.output[0], e.output[1], e.output[2]) = e.value;
  return t;
}

// Cross term of the corep axioms along the pencil: F(1+2) - F(1) - F(2).
void pencil_corep(const CoalgebraStructure &C, const CoalgebraStructure &Dl,
                  const Corepresentation &c1, const Corepresentation &c2, Sink &s) {
  if (c1.corep_dim != c2.corep_dim || c1.coalg_dim != c2.coalg_dim)
    throw Error(ErrorCode::DimMismatch, "corep and corep2 shapes differ");
  CoalgebraStructure Cs = coalg_sum(C, Dl);
  Corepresentation cs = corep_sum(c1, c2);
  for (std::size_t a = 0; a < c1.corep_dim && !s.done(); ++a)
    for (int e = 0; e < 2; ++e) {
      Tensor3 t = corep_part(Cs, cs, a, e) - corep_part(C, c1, a, e) - corep_part(Dl, c2, a, e);
      s.ten(e ? "corep-eta" : "corep-xi", {a}, t);
    }
}

void pencil_morphism(const Bundle &B, Sink &s) {
  const CoalgebraStructure &C = B.require_coalg();
  const CoalgebraStructure &Dl = B.coalgebra("delta");
  const Matrix &S = B.op("S").mat;
  const Matrix &th = B.op("theta").mat;
  const Corepresentation &c1 = B.corep("corep");
  const Corepresentation &c2 = B.corep("corep2");
  std::size_t n = C.dim, m = c1.corep_dim;
  need_square(S, n, "operator S");
  need_square(th, m, "operator theta");
  if (c2.corep_dim != m || c1.coalg_dim != n || c2.coalg_dim != n)
    throw Error(ErrorCode::DimMismatch, "corep and corep2 shapes differ");
  Matrix I = Matrix::identity(n), Im = Matrix::identity(m);
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Vec x = basis_vec(n, i), Sx = ap(S, x);
    Matrix D = comul_apply(C, x);
    s.mat("morph1", {i}, comul_apply(Dl, Sx) - tp(S, S, D));
    s.mat("morph2", {i}, comul_apply(C, Sx) + comul_apply(Dl, x) - tp(I, S, D) - tp(S, I, D));
  }
  for (std::size_t a = 0; a < m && !s.done(); ++a) {
    Vec v = basis_vec(m, a), tv = ap(th, v);
    const Matrix *P[2][2] = {{&c1.xi, &c2.xi}, {&c1.eta, &c2.eta}};
    const char *names[2][2] = {{"morph3", "morph4"}, {"morph5", "morph6"}};
    for (int k = 0; k < 2; ++k) {
      Matrix X = coact(*P[k][0], n, m, v);
      s.mat(names[k][0], {a}, coact(*P[k][1], n, m, tv) - tp(S, th, X));
      s.mat(names[k][1], {a},
            coact(*P[k][0], n, m, tv) + coact(*P[k][1], n, m, v) - tp(I, th, X) - tp(S, Im, X));
    }
  }
}

void pi_admissible(const Bundle &B, const PiDescriptor &pi, Sink &s) {
  const AlgebraStructure &A = B.require_alg();
  const Matrix &N = B.op("N").mat;
  const Matrix &al = B.op("alpha").mat;
  const Representation &R = B.rep("rep");
  std::size_t n = A.dim, m = R.rep_dim;
  need_rep(R, n, 0, "rep");
  need_square(N, n, "operator N");
  need_square(al, m, "operator alpha");
  const Scalar &th = pi.theta;
  if (pi.family == PiFamily::Scale && th != Scalar(1L) && th != Scalar(-1L))
    throw Error(ErrorCode::InvalidInput, "scale family needs theta = 1 or -1");
  if (pi.family != PiFamily::Scale && th.is_zero())
    throw Error(ErrorCode::InvalidInput, "theta must be nonzero");
  if (pi.family == PiFamily::Invert) {
    if (determinant(N).is_zero())
      throw Error(ErrorCode::NotInvertible, "operator N is not invertible");
    if (determinant(al).is_zero())
      throw Error(ErrorCode::NotInvertible, "operator alpha is not invertible");
  }
  Scalar one_th = Scalar(1L) + th;
  auto N1 = [&](const Vec &x) { return ap(N, x); };
  auto N2 = [&](const Vec &x) { return ap(N, ap(N, x)); };
  auto a1 = [&](const Vec &v) { return ap(al, v); };
  auto a2 = [&](const Vec &v) { return ap(al, ap(al, v)); };
  auto m_ = [&](const Vec &x, const Vec &y) { return mv(A, x, y); };
  const char *fam = pi_family_name(pi.family);
  auto cl = [&](int k) { return std::string(fam) + "-" + std::to_string(k); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec r1, r2;
      switch (pi.family) {
      case PiFamily::Scale:
        r1 = sum({m_(x, N2(y)), scale(th, N2(m_(x, y))), neg(scale(one_th, N1(m_(x, N1(y)))))});
        r2 = sum({m_(N2(x), y), scale(th, N2(m_(x, y))), neg(scale(one_th, N1(m_(N1(x), y))))});
        break;
      case PiFamily::Reflect:
        r1 = sum({m_(x, N2(y)), scale(th, N1(m_(x, y))), neg(N2(m_(x, y))),
                  neg(scale(th, m_(x, N1(y))))});
        r2 = sum({m_(N2(x), y), scale(th, N1(m_(x, y))), neg(N2(m_(x, y))),
                  neg(scale(th, m_(N1(x), y)))});
        break;
      case PiFamily::Invert:
        r1 = sub(N1(add(scale(th, m_(x, y)), m_(x, N2(y)))),
                 add(scale(th, m_(x, N1(y))), N2(m_(x, N1(y)))));
        r2 = sub(N1(add(scale(th, m_(x, y)), m_(N2(x), y))),
                 add(scale(th, m_(N1(x), y)), N2(m_(N1(x), y))));
        break;
      }
      s.vec(cl(1), {i, j}, r1);
      s.vec(cl(2), {i, j}, r2);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), v = basis_vec(m, a);
      for (int w = 0; w < 2; ++w) {
        const auto &F = w == 0 ? R.rho : R.phi;
        auto f = [&](const Vec &u, const Vec &z) { return act(F, u, z); };
        Vec ra, rb;
        switch (pi.family) {
        case PiFamily::Scale:
          ra = sum({f(x, a2(v)), scale(th, a2(f(x, v))), neg(scale(one_th, a1(f(x, a1(v)))))});
          rb = sum({f(N2(x), v), scale(th, a2(f(x, v))), neg(scale(one_th, a1(f(N1(x), v))))});
          break;
        case PiFamily::Reflect:
          ra = sum({f(x, a2(v)), scale(th, a1(f(x, v))), neg(a2(f(x, v))), neg(scale(th, f(x, a1(v))))});
          rb = sum({f(N2(x), v), scale(th, a1(f(x, v))), neg(a2(f(x, v))), neg(scale(th, f(N1(x), v)))});
          break;
        case PiFamily::Invert:
          ra = sub(a1(add(scale(th, f(x, v)), f(x, a2(v)))),
                   add(scale(th, f(x, a1(v))), a2(f(x, a1(v)))));
          rb = sub(a1(add(scale(th, f(x, v)), f(N2(x), v))),
                   add(scale(th, f(N1(x), v)), a2(f(N1(x), v))));
          break;
        }
        s.vec(cl(3 + w), {i, a}, ra);
        s.vec(cl(5 + w), {i, a}, rb);
      }
    }
}

void balanced(const AlgebraStructure &A, const CoalgebraStructure &C, Sink &s) {
  std::size_t n = A.dim;
  if (C.dim != n)
    throw Error(ErrorCode::DimMismatch, "mul and comul dimensions differ");
  Matrix I = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Matrix Dx = comul_apply(C, x), Dy = comul_apply(C, y);
      Matrix Rx = right_mult(A, x).mat, Ry = right_mult(A, y).mat;
      Matrix a = tp(Ry, I, Dx), b = tp(Rx, I, Dy);
      s.mat("balanced", {i, j}, a + b.transpose() - b - a.transpose());
    }
}

void lie_alg(const AlgebraStructure &A, Sink &s) {
  std::size_t n = A.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      s.vec("antisymmetry", {i, j}, add(mv(A, x, y), mv(A, y, x)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (s.done())
          return;
        Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        s.vec("jacobi", {i, j, k}, sum({mv(A, x, mv(A, y, z)), mv(A, y, mv(A, z, x)), mv(A, z, mv(A, x, y))}));
      }
}

void lie_co(const CoalgebraStructure &C, Sink &s) {
  std::size_t n = C.dim;
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Matrix D = comul_apply(C, basis_vec(n, i));
    s.mat("antisymmetry", {i}, D + D.transpose());
    s.ten("cojacobi", {i}, cyc_sum(comul_right(C, D)));
  }
}

void lie_cocycle(const AlgebraStructure &A, const CoalgebraStructure &C, Sink &s) {
  std::size_t n = A.dim;
  if (C.dim != n)
    throw Error(ErrorCode::DimMismatch, "mul and comul dimensions differ");
  Matrix I = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Matrix Dx = comul_apply(C, x), Dy = comul_apply(C, y);
      Matrix Lx = left_mult(A, x).mat, Ly = left_mult(A, y).mat;
      Matrix r = comul_apply(C, mv(A, x, y)) - tp(Lx, I, Dy) - tp(I, Lx, Dy) + tp(Ly, I, Dx) +
                 tp(I, Ly, Dx);
      s.mat("cocycle", {i, j}, r);
    }
}

void nij_lie_extra(const AlgebraStructure &A, const CoalgebraStructure &C, const Matrix &N,
                   const Matrix &S, Sink &s) {
  std::size_t n = A.dim;
  need_square(N, n, "operator N");
  need_square(S, n, "operator S");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.done())
        return;
      Vec x = basis_vec(n, i), y = basis_vec(n, j), Nx = ap(N, x), Sy = ap(S, y);
      Vec r = sum({ap(S, mv(A, Nx, y)), mv(A, x, ap(S, Sy)), neg(mv(A, Nx, Sy)), neg(ap(S, mv(A, x, Sy)))});
      s.vec("admissible1", {i, j}, r);
    }
  Matrix I = Matrix::identity(n), N2 = N * N;
  for (std::size_t i = 0; i < n && !s.done(); ++i) {
    Vec x = basis_vec(n, i);
    Matrix D = comul_apply(C, x), DN = comul_apply(C, ap(N, x));
    s.mat("admissible2", {i}, tp(S, I, DN) + tp(I, N2, D) - tp(S, N, D) - tp(I, N, DN));
  }
}

void commutative(const AlgebraStructure &A, Sink &s) {
  std::size_t n = A.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      s.vec("commutative", {i, j}, sub(mv(A, x, y), mv(A, y, x)));
    }
}

void cocommutative(const CoalgebraStructure &C, Sink &s) {
  for (std::size_t i = 0; i < C.dim && !s.done(); ++i) {
    Matrix D = comul_apply(C, basis_vec(C.dim, i));
    s.mat("cocommutative", {i}, D - D.transpose());
  }
}

void run(LawId law, const Bundle &B, const CheckOptions &opts, Sink &s) {
  switch (law) {
  case LawId::PreLie:
    return pre_lie(B.require_alg(), s);
  case LawId::PreLieCo:
    return pre_lie_co(B.require_coalg(), s);
  case LawId::PreLieBialg:
    return pre_lie_bialg(B.require_alg(), B.require_coalg(), s);
  case LawId::SEquation:
    return s_equation(B.require_alg(), B.tensor("r").mat, s);
  case LawId::CoSEquation:
    return co_s_equation(B.require_coalg(), B.form("omega").mat, s);
  case LawId::PseudoHessian:
    return pseudo_hessian(B.require_alg(), B.form("omega").mat, s);
  case LawId::PseudoHessianCo:
    return pseudo_hessian_co(B.require_coalg(), B.tensor("r").mat, s);
  case LawId::Nijenhuis:
    return nijenhuis(B.require_alg(), B.op("N").mat, s);
  case LawId::CoNijenhuis:
    return co_nijenhuis(B.require_coalg(), B.op("S").mat, s);
  case LawId::Rep:
    return rep_law(B.require_alg(), B.rep("rep"), s);
  case LawId::NijRep:
    return nij_rep(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("alpha").mat, s);
  case LawId::Corep:
    return corep_law(B.require_coalg(), B.corep("corep"), s);
  case LawId::AdmissibleS:
    return admissible_s(B.require_alg(), B.op("N").mat, B.op("S").mat, s);
  case LawId::AdmissibleBeta:
    return admissible_beta(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("beta").mat, s);
  case LawId::AdmissibleNStar:
    return admissible_nstar(B.require_coalg(), B.op("N").mat, B.op("S").mat, s);
  case LawId::NijPreLieBialg:
    for (LawId l : {LawId::PreLie, LawId::PreLieCo, LawId::PreLieBialg, LawId::Nijenhuis,
                    LawId::CoNijenhuis, LawId::AdmissibleS, LawId::AdmissibleNStar})
      nested(s, l, [&] { run(l, B, opts, s); });
    return;
  case LawId::MatchedPair:
    return matched_pair(B, s);
  case LawId::OOperatorWeak:
    return o_operator_weak(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("alpha").mat,
                           B.op("T").mat, s);
  case LawId::OOperator:
    for (LawId l : {LawId::OOperatorWeak, LawId::Rep, LawId::NijRep})
      nested(s, l, [&] { run(l, B, opts, s); });
    return;
  case LawId::SNijSEquation: {
    const Matrix &r = B.tensor("r").mat;
    s_equation(B.require_alg(), r, s);
    return s_nij_tail(r, B.op("N").mat, B.op("S").mat, s);
  }
  case LawId::PencilCompat: {
    const CoalgebraStructure &C = B.require_coalg();
    const CoalgebraStructure &Dl = B.coalgebra("delta");
    pencil_compat(C, Dl, s);
    if (B.coreps.count("corep") && B.coreps.count("corep2"))
      pencil_corep(C, Dl, B.corep("corep"), B.corep("corep2"), s);
    return;
  }
  case LawId::PencilMorphism:
    return pencil_morphism(B, s);
  case LawId::PiAdmissible:
    if (!opts.pi)
      throw Error(ErrorCode::InvalidInput, "PI_ADMISSIBLE needs a Pi descriptor");
    check_pi(*opts.pi);
    return pi_admissible(B, *opts.pi, s);
  case LawId::Balanced:
    return balanced(B.require_alg(), B.require_coalg(), s);
  case LawId::LieAlg:
    return lie_alg(B.require_alg(), s);
  case LawId::LieCo:
    return lie_co(B.require_coalg(), s);
  case LawId::LieBialg:
    nested(s, LawId::LieAlg, [&] { lie_alg(B.require_alg(), s); });
    nested(s, LawId::LieCo, [&] { lie_co(B.require_coalg(), s); });
    return lie_cocycle(B.require_alg(), B.require_coalg(), s);
  case LawId::NijLieBialg:
    for (LawId l : {LawId::LieBialg, LawId::Nijenhuis, LawId::CoNijenhuis})
      nested(s, l, [&] { run(l, B, opts, s); });
    return nij_lie_extra(B.require_alg(), B.require_coalg(), B.op("N").mat, B.op("S").mat, s);
  case LawId::Commutative:
    return commutative(B.require_alg(), s);
  case LawId::Cocommutative:
    return cocommutative(B.require_coalg(), s);
  case LawId::SymmetricForm:
    return symmetric(B.form("omega").mat, "symmetry", s);
  case LawId::SymmetricTensor:
    return symmetric(B.tensor("r").mat, "symmetry", s);
  }
}

} // namespace

const std::vector<LawId> &all_laws() {
  static const std::vector<LawId> v = [] {
    std::vector<LawId> out;
    for (const auto &r : kLaws)
      out.push_back(r.id);
    return out;
  }();
  return v;
}

const char *law_name(LawId law) { return row(law).name; }
const char *law_reads(LawId law) { return row(law).reads; }

const std::vector<ProfileAlias> &profile_aliases() {
  static const std::vector<ProfileAlias> t = {
      {"prelie", {LawId::PreLie}},
      {"prelie-co", {LawId::PreLieCo}},
      {"prelie-bialg", {LawId::PreLie, LawId::PreLieCo, LawId::PreLieBialg}},
      {"s-eq", {LawId::SEquation}},
      {"co-s-eq", {LawId::CoSEquation}},
      {"pseudo-hessian", {LawId::PseudoHessian}},
      {"nijenhuis", {LawId::Nijenhuis}},
      {"co-nijenhuis", {LawId::CoNijenhuis}},
      {"nij-prelie-bialg",
       {LawId::PreLie, LawId::PreLieCo, LawId::PreLieBialg, LawId::Nijenhuis, LawId::CoNijenhuis,
        LawId::AdmissibleS, LawId::AdmissibleNStar}},
      {"lie-bialg", {LawId::LieBialg}},
      {"nij-lie-bialg", {LawId::NijLieBialg}},
      {"balanced", {LawId::Balanced}},
      {"o-operator", {LawId::OOperator}},
      {"s-nij-s-eq", {LawId::SNijSEquation}},
      {"matched-pair", {LawId::MatchedPair}},
      {"pi", {LawId::PiAdmissible}},
  };
  return t;
}

std::optional<LawId> law_from_name(const std::string &name) {
  std::string key = normalize_name(name);
  for (const auto &r : kLaws)
    if (key == r.name)
      return r.id;
  for (const auto &a : profile_aliases())
    if (a.laws.size() == 1 && key == normalize_name(a.alias))
      return a.laws[0];
  return std::nullopt;
}

std::vector<LawId> resolve_profile(const std::string &spec) {
  std::vector<LawId> out;
  auto push = [&](LawId l) {
    if (std::find(out.begin(), out.end(), l) == out.end())
      out.push_back(l);
  };
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string tok = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) {
      bool found = false;
      std::string key = normalize_name(tok);
      for (const auto &a : profile_aliases())
        if (key == normalize_name(a.alias)) {
          for (LawId l : a.laws)
            push(l);
          found = true;
          break;
        }
      if (!found) {
        auto l = law_from_name(tok);
        if (!l)
          throw Error(ErrorCode::UnknownLaw, "unknown law '" + tok + "'");
        push(*l);
      }
    }
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

const char *pi_family_name(PiFamily f) {
  switch (f) {
  case PiFamily::Scale: return "scale";
  case PiFamily::Reflect: return "reflect";
  case PiFamily::Invert: return "invert";
  }
  return "?";
}

void check_pi(const PiDescriptor &pi) {
  if (pi.family == PiFamily::Scale && pi.theta != Scalar(1L) && pi.theta != Scalar(-1L))
    throw Error(ErrorCode::InvalidInput, "scale family needs theta = 1 or -1");
  if (pi.family != PiFamily::Scale && pi.theta.is_zero())
    throw Error(ErrorCode::InvalidInput, "theta must be nonzero");
}

PiDescriptor parse_pi(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::InvalidInput, "Pi descriptor must be family:theta");
  std::string fam = text.substr(0, colon);
  PiDescriptor d;
  if (fam == "scale")
    d.family = PiFamily::Scale;
  else if (fam == "reflect")
    d.family = PiFamily::Reflect;
  else if (fam == "invert")
    d.family = PiFamily::Invert;
  else
    throw Error(ErrorCode::InvalidInput, "unknown Pi family '" + fam + "'");
  d.theta = Scalar(parse_rational(text.substr(colon + 1)));
  check_pi(d);
  return d;
}

bool Residual::passes() const {
  for (const auto &e : entries)
    if (!e.value.is_zero())
      return false;
  return true;
}

Residual check(LawId law, const Bundle &b, const CheckOptions &opts) {
  Residual r;
  r.law = law;
  Sink s(r, opts.stop_at_first);
  run(law, b, opts, s);
  return r;
}

bool passes(LawId law, const Bundle &b, const CheckOptions &opts) {
  CheckOptions o = opts;
  o.stop_at_first = true;
  return check(law, b, o).passes();
}

std::map<LawId, Residual> check_composite(const Bundle &b, const std::vector<LawId> &profile,
                                          const CheckOptions &opts) {
  std::map<LawId, Residual> out;
  for (LawId l : profile)
    out[l] = check(l, b, opts);
  return out;
}

Residual corep_literal(const CoalgebraStructure &C, const Corepresentation &cr) {
  Residual r;
  r.law = LawId::Corep;
  Sink s(r, false);
  std::size_t n = C.dim, m = cr.corep_dim;
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = basis_vec(m, a);
    Tensor3 t = comul_left(C, coact(cr.xi, n, m, v));
    Tensor3 xe = chain(cr.xi, cr.eta, n, m, v);
    s.ten("xi", {a}, t - swap12(t) - (xe - swap12(xe)));
    Tensor3 u = comul_left(C, coact(cr.eta, n, m, v));
    Tensor3 ex = chain(cr.eta, cr.xi, n, m, v), ee = chain(cr.eta, cr.eta, n, m, v);
    s.ten("eta", {a}, u - (xe - swap12(ex) + swap12(ee)));
  }
  return r;
}

} // namespace prelie
