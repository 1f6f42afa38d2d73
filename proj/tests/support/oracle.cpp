#include "oracle.hpp"

#include <map>
#include <memory>
#include <set>

namespace oracle {

using namespace prelie;

namespace {

Q q(const Scalar &s) { return s.constant_value(); }

V operator+(V a, const V &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}
V operator-(V a, const V &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}
V operator*(const Q &s, V a) {
  for (auto &x : a)
    x *= s;
  return a;
}

V unit(std::size_t n, std::size_t i) {
  V v(n, Q(0));
  v[i] = 1;
  return v;
}

V outer(const V &a, const V &b) {
  V r;
  r.reserve(a.size() * b.size());
  for (const auto &x : a)
    for (const auto &y : b)
      r.push_back(x * y);
  return r;
}

using Map = std::function<V(const V &)>;
const Map id = [](const V &x) { return x; };

struct Alg {
  std::size_t n = 0;
  V c;
  explicit Alg(const AlgebraStructure &A) : n(A.dim) {
    for (const auto &s : A.c.data())
      c.push_back(q(s));
  }
  V operator()(const V &x, const V &y) const {
    V z(n, Q(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q xy = x[i] * y[j];
        if (xy == 0)
          continue;
        for (std::size_t k = 0; k < n; ++k)
          z[k] += xy * c[(i * n + j) * n + k];
      }
    return z;
  }
  Map left(const V &x) const {
    return [this, x](const V &y) { return (*this)(x, y); };
  }
  Map right(const V &x) const {
    return [this, x](const V &y) { return (*this)(y, x); };
  }
};

struct Coalg {
  std::size_t n = 0;
  V d;
  explicit Coalg(const CoalgebraStructure &C) : n(C.dim) {
    for (const auto &s : C.d.data())
      d.push_back(q(s));
  }
  V operator()(const V &x) const {
    V t(n * n, Q(0));
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] != 0)
        for (std::size_t ij = 0; ij < n * n; ++ij)
          t[ij] += x[k] * d[k * n * n + ij];
    return t;
  }
};

struct Op {
  std::size_t r = 0, c = 0;
  V m;
  explicit Op(const Matrix &M) : r(M.rows()), c(M.cols()) {
    for (const auto &s : M.data())
      m.push_back(q(s));
  }
  V operator()(const V &x) const {
    V y(c, Q(0));
    for (std::size_t i = 0; i < r; ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; j < c; ++j)
          y[j] += x[i] * m[i * c + j];
    return y;
  }
  Map map() const {
    return [this](const V &x) { return (*this)(x); };
  }
};

struct Form {
  std::size_t n;
  V w;
  explicit Form(const Matrix &M) : n(M.rows()) {
    for (const auto &s : M.data())
      w.push_back(q(s));
  }
  Q operator()(const V &x, const V &y) const {
    Q t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t += x[i] * y[j] * w[i * n + j];
    return t;
  }
};

struct Action {
  std::size_t n, m;
  std::vector<Op> mats;
  Action(const std::vector<Matrix> &fam, std::size_t m_) : n(fam.size()), m(m_) {
    for (const auto &M : fam)
      mats.emplace_back(M);
  }
  V operator()(const V &x, const V &v) const {
    V r(m, Q(0));
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0)
        r = r + x[i] * mats[i](v);
    return r;
  }
};

struct Coaction {
  std::size_t n, m;
  V xi;
  Coaction(const Matrix &M, std::size_t n_, std::size_t m_) : n(n_), m(m_) {
    for (const auto &s : M.data())
      xi.push_back(q(s));
  }
  // n x m
  V operator()(const V &v) const {
    V t(n * m, Q(0));
    for (std::size_t a = 0; a < m; ++a)
      if (v[a] != 0)
        for (std::size_t k = 0; k < n * m; ++k)
          t[k] += v[a] * xi[a * n * m + k];
    return t;
  }
};

// (F (x) G) T for T of shape r x c.
V map2(const V &T, std::size_t r, std::size_t c, const Map &F, const Map &G) {
  V out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const Q &t = T[i * c + j];
      if (t == 0)
        continue;
      V term = t * outer(F(unit(r, i)), G(unit(c, j)));
      out = out.empty() ? term : out + term;
    }
  if (out.empty())
    out = V(F(unit(r, 0)).size() * G(unit(c, 0)).size(), Q(0));
  return out;
}

// Sum over i,j of T_ij  f(e_i) (x) e_j  where f(e_i) is already a flat tensor.
V expand_first(const V &T, std::size_t r, std::size_t c, const std::function<V(const V &)> &f) {
  V out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      V term = T[i * c + j] * outer(f(unit(r, i)), unit(c, j));
      out = out.empty() ? term : out + term;
    }
  return out;
}

V expand_second(const V &T, std::size_t r, std::size_t c, const std::function<V(const V &)> &f) {
  V out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      V term = T[i * c + j] * outer(unit(r, i), f(unit(c, j)));
      out = out.empty() ? term : out + term;
    }
  return out;
}

V transpose(const V &T, std::size_t r, std::size_t c) {
  V out(T.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      out[j * r + i] = T[i * c + j];
  return out;
}

V swap12(const V &T, std::size_t a, std::size_t b, std::size_t c) {
  V out(T.size());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        out[(j * a + i) * c + k] = T[(i * b + j) * c + k];
  return out;
}

// (1 (x) G) F(v)
V chain(const Coaction &F, const Coaction &G, const V &v) {
  return expand_second(F(v), F.n, F.m, [&](const V &w) { return G(w); });
}

Map compose(Map f, Map g) {
  return [f, g](const V &x) { return f(g(x)); };
}

using Clauses = std::vector<Clause>;

void add_prefixed(Clauses &out, const std::string &prefix, Clauses in) {
  for (auto &c : in) {
    c.name = prefix + c.name;
    out.push_back(std::move(c));
  }
}

Clause make(std::string name, std::vector<std::size_t> in, std::vector<std::size_t> out,
            std::function<V(const std::vector<V> &)> f, bool tri = false) {
  return Clause{std::move(name), std::move(in), std::move(out), tri, std::move(f)};
}

Clause scalar_clause(std::string name, std::vector<std::size_t> in, std::function<Q(const std::vector<V> &)> f,
                     bool tri = false) {
  return make(std::move(name), std::move(in), {}, [f](const std::vector<V> &a) { return V{f(a)}; }, tri);
}

Clauses pre_lie(const AlgebraStructure &As) {
  auto A = std::make_shared<Alg>(As);
  std::size_t n = A->n;
  return {make("associator", {n, n, n}, {n}, [A](const std::vector<V> &a) {
    const auto &m = *A;
    const V &x = a[0], &y = a[1], &z = a[2];
    return m(m(x, y), z) - m(x, m(y, z)) - m(m(y, x), z) + m(y, m(x, z));
  })};
}

V coassoc_defect(const Coalg &D, const V &T, std::size_t n) {
  V t1 = expand_first(T, n, n, D);
  V t2 = expand_second(T, n, n, D);
  return t1 - t2 - swap12(t1, n, n, n) + swap12(t2, n, n, n);
}

Clauses pre_lie_co(const CoalgebraStructure &Cs) {
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = D->n;
  return {make("coassociator", {n}, {n, n, n},
               [D, n](const std::vector<V> &a) { return coassoc_defect(*D, (*D)(a[0]), n); })};
}

Clauses pre_lie_bialg(const AlgebraStructure &As, const CoalgebraStructure &Cs) {
  auto A = std::make_shared<Alg>(As);
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = A->n;
  auto terms = [A, D, n](const V &x, const V &y, int which) {
    const auto &m = *A;
    const auto &d = *D;
    V Dx = d(x), Dy = d(y), Dxy = d(m(x, y));
    if (which == 1) {
      V rhs = map2(Dy, n, n, m.left(x), id) + map2(Dy, n, n, id, m.left(x)) - map2(Dy, n, n, id, m.right(x)) -
              map2(Dx, n, n, m.left(y), id) - map2(Dx, n, n, id, m.left(y)) + map2(Dx, n, n, id, m.right(y));
      return Dxy - d(m(y, x)) - rhs;
    }
    V a = map2(Dx, n, n, id, m.right(y)), b = map2(Dy, n, n, id, m.left(x)), c = map2(Dy, n, n, m.left(x), id);
    V rhs = a + b - transpose(c, n, n) - transpose(a, n, n) - transpose(b, n, n) + c;
    return Dxy - transpose(Dxy, n, n) - rhs;
  };
  return {make("compat1", {n, n}, {n, n}, [terms](const std::vector<V> &a) { return terms(a[0], a[1], 1); }),
          make("compat2", {n, n}, {n, n}, [terms](const std::vector<V> &a) { return terms(a[0], a[1], 2); })};
}

V s_eq_tensor(const Alg &m, const V &r, std::size_t n) {
  // r = sum a_i (x) b_i with a_i = e_P scaled by r_PQ, b_i = e_Q.
  V out(n * n * n, Q(0));
  for (std::size_t P = 0; P < n; ++P)
    for (std::size_t Qi = 0; Qi < n; ++Qi) {
      Q r1 = r[P * n + Qi];
      if (r1 == 0)
        continue;
      V ai = r1 * unit(n, P), bi = unit(n, Qi);
      for (std::size_t S = 0; S < n; ++S)
        for (std::size_t U = 0; U < n; ++U) {
          Q r2 = r[S * n + U];
          if (r2 == 0)
            continue;
          V aj = r2 * unit(n, S), bj = unit(n, U);
          out = out + outer(outer(ai, m(bi, aj)), bj) + outer(outer(ai, aj), m(bi, bj)) -
                outer(outer(m(ai, aj), bi), bj) - outer(outer(ai, aj), m(bj, bi));
        }
    }
  return out;
}

Clauses s_equation(const AlgebraStructure &As, const Matrix &R) {
  auto A = std::make_shared<Alg>(As);
  auto r = std::make_shared<Op>(R);
  std::size_t n = A->n;
  return {make("s-equation", {}, {n, n, n}, [A, r, n](const std::vector<V> &) { return s_eq_tensor(*A, r->m, n); })};
}

Clauses co_s_equation(const CoalgebraStructure &Cs, const Matrix &W) {
  auto D = std::make_shared<Coalg>(Cs);
  auto w = std::make_shared<Form>(W);
  std::size_t n = D->n;
  return {scalar_clause("co-s-equation", {n, n, n}, [D, w, n](const std::vector<V> &a) -> Q {
    const V &x = a[0], &y = a[1], &z = a[2];
    Q t = 0;
    auto sweedler = [&](const V &u, auto f) {
      V T = (*D)(u);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (T[i * n + j] != 0)
            t += T[i * n + j] * f(unit(n, i), unit(n, j));
    };
    const Form &W = *w;
    sweedler(y, [&](const V &y1, const V &y2) -> Q { return W(x, y1) * W(y2, z); });
    sweedler(z, [&](const V &z1, const V &z2) -> Q { return W(x, z1) * W(y, z2) - W(y, z1) * W(x, z2); });
    sweedler(x, [&](const V &x1, const V &x2) -> Q { return -W(x1, y) * W(x2, z); });
    return t;
  })};
}

Clause symmetry(const Matrix &M) {
  auto w = std::make_shared<Form>(M);
  std::size_t n = w->n;
  return scalar_clause("symmetry", {n, n}, [w](const std::vector<V> &a) -> Q {
    return (*w)(a[0], a[1]) - (*w)(a[1], a[0]);
  }, true);
}

Clauses pseudo_hessian(const AlgebraStructure &As, const Matrix &W) {
  auto A = std::make_shared<Alg>(As);
  auto w = std::make_shared<Form>(W);
  std::size_t n = A->n;
  return {symmetry(W), scalar_clause("cocycle", {n, n, n}, [A, w](const std::vector<V> &a) -> Q {
            const auto &m = *A;
            const auto &f = *w;
            const V &x = a[0], &y = a[1], &z = a[2];
            return f(m(x, y), z) - f(x, m(y, z)) - f(m(y, x), z) + f(y, m(x, z));
          })};
}

Clauses pseudo_hessian_co(const CoalgebraStructure &Cs, const Matrix &R) {
  auto D = std::make_shared<Coalg>(Cs);
  auto r = std::make_shared<Op>(R);
  std::size_t n = D->n;
  return {symmetry(R), make("cocycle", {}, {n, n, n},
                            [D, r, n](const std::vector<V> &) { return coassoc_defect(*D, r->m, n); })};
}

Clauses nijenhuis(const AlgebraStructure &As, const Matrix &Nm, const std::string &name = "nijenhuis") {
  auto A = std::make_shared<Alg>(As);
  auto N = std::make_shared<Op>(Nm);
  std::size_t n = A->n;
  return {make(name, {n, n}, {n}, [A, N](const std::vector<V> &a) {
    const auto &m = *A;
    const auto &f = *N;
    const V &x = a[0], &y = a[1];
    return m(f(x), f(y)) + f(f(m(x, y))) - f(m(f(x), y)) - f(m(x, f(y)));
  })};
}

Clauses co_nijenhuis(const CoalgebraStructure &Cs, const Matrix &Sm) {
  auto D = std::make_shared<Coalg>(Cs);
  auto S = std::make_shared<Op>(Sm);
  std::size_t n = D->n;
  return {make("co-nijenhuis", {n}, {n, n}, [D, S, n](const std::vector<V> &a) {
    const auto &d = *D;
    Map s = S->map();
    const V &x = a[0];
    V DSx = d(s(x));
    return map2(d(x), n, n, s, s) + d(s(s(x))) - map2(DSx, n, n, s, id) - map2(DSx, n, n, id, s);
  })};
}

Clauses rep_law(const AlgebraStructure &As, const Representation &R) {
  auto A = std::make_shared<Alg>(As);
  auto rho = std::make_shared<Action>(R.rho, R.rep_dim), phi = std::make_shared<Action>(R.phi, R.rep_dim);
  std::size_t n = A->n, m = R.rep_dim;
  return {make("rho", {n, n, m}, {m},
               [A, rho](const std::vector<V> &a) {
                 const auto &l = *rho;
                 const V &x = a[0], &y = a[1], &v = a[2];
                 return l((*A)(x, y) - (*A)(y, x), v) - l(x, l(y, v)) + l(y, l(x, v));
               }),
          make("phi", {n, n, m}, {m}, [A, rho, phi](const std::vector<V> &a) {
            const auto &l = *rho;
            const auto &r = *phi;
            const V &x = a[0], &y = a[1], &v = a[2];
            return r((*A)(x, y), v) - l(x, r(y, v)) + r(y, l(x, v)) - r(y, r(x, v));
          })};
}

Clauses nij_rep(const AlgebraStructure &As, const Matrix &Nm, const Representation &R, const Matrix &Am) {
  auto N = std::make_shared<Op>(Nm);
  auto al = std::make_shared<Op>(Am);
  std::size_t n = As.dim, m = R.rep_dim;
  Clauses out;
  for (int w = 0; w < 2; ++w) {
    auto F = std::make_shared<Action>(w == 0 ? R.rho : R.phi, m);
    out.push_back(make(w == 0 ? "rho" : "phi", {n, m}, {m}, [N, al, F](const std::vector<V> &a) {
      const auto &f = *F;
      const auto &p = *al;
      const V &x = a[0], &v = a[1];
      V Nx = (*N)(x);
      return f(Nx, p(v)) + p(p(f(x, v))) - p(f(Nx, v)) - p(f(x, p(v)));
    }));
  }
  return out;
}

Clauses corep_law(const CoalgebraStructure &Cs, const Corepresentation &cr) {
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = Cs.dim, m = cr.corep_dim;
  auto xi = std::make_shared<Coaction>(cr.xi, n, m), eta = std::make_shared<Coaction>(cr.eta, n, m);
  auto DL = [D, n, m](const V &T) { return expand_first(T, n, m, *D); };
  return {make("xi", {m}, {n, n, m},
               [=](const std::vector<V> &a) {
                 const V &v = a[0];
                 V t = DL((*xi)(v)), xx = chain(*xi, *xi, v);
                 return t - swap12(t, n, n, m) - swap12(xx, n, n, m) + xx;
               }),
          make("eta", {m}, {n, n, m}, [=](const std::vector<V> &a) {
            const V &v = a[0];
            V u = DL((*eta)(v));
            return u - (swap12(chain(*eta, *xi, v), n, n, m) - chain(*xi, *eta, v) + chain(*eta, *eta, v));
          })};
}

Clause admissible_left(const std::string &name, const AlgebraStructure &As, const Matrix &Nm, const Matrix &Sm) {
  auto A = std::make_shared<Alg>(As);
  auto N = std::make_shared<Op>(Nm), S = std::make_shared<Op>(Sm);
  std::size_t n = As.dim;
  return make(name, {n, n}, {n}, [A, N, S](const std::vector<V> &a) {
    const auto &m = *A;
    const auto &s = *S;
    const V &x = a[0], &y = a[1];
    V Nx = (*N)(x);
    return s(m(Nx, y)) + m(x, s(s(y))) - m(Nx, s(y)) - s(m(x, s(y)));
  });
}

Clauses admissible_s(const AlgebraStructure &As, const Matrix &Nm, const Matrix &Sm) {
  auto A = std::make_shared<Alg>(As);
  auto N = std::make_shared<Op>(Nm), S = std::make_shared<Op>(Sm);
  std::size_t n = As.dim;
  return {admissible_left("left", As, Nm, Sm), make("right", {n, n}, {n}, [A, N, S](const std::vector<V> &a) {
            const auto &m = *A;
            const auto &s = *S;
            const V &x = a[0], &y = a[1];
            V Ny = (*N)(y), Sx = s(x);
            return s(m(x, Ny)) + m(s(Sx), y) - m(Sx, Ny) - s(m(Sx, y));
          })};
}

Clauses admissible_beta(const AlgebraStructure &As, const Matrix &Nm, const Representation &R, const Matrix &Bm) {
  auto N = std::make_shared<Op>(Nm), be = std::make_shared<Op>(Bm);
  std::size_t n = As.dim, m = R.rep_dim;
  Clauses out;
  for (int w = 0; w < 2; ++w) {
    auto F = std::make_shared<Action>(w == 0 ? R.rho : R.phi, m);
    out.push_back(make(w == 0 ? "rho" : "phi", {n, m}, {m}, [N, be, F](const std::vector<V> &a) {
      const auto &f = *F;
      const auto &b = *be;
      const V &x = a[0], &v = a[1];
      V Nx = (*N)(x);
      return b(f(Nx, v)) + f(x, b(b(v))) - f(Nx, b(v)) - b(f(x, b(v)));
    }));
  }
  return out;
}

Clause nstar_right(const std::string &name, const CoalgebraStructure &Cs, const Matrix &Nm, const Matrix &Sm) {
  auto D = std::make_shared<Coalg>(Cs);
  auto N = std::make_shared<Op>(Nm), S = std::make_shared<Op>(Sm);
  std::size_t n = Cs.dim;
  return make(name, {n}, {n, n}, [D, N, S, n](const std::vector<V> &a) {
    Map nn = N->map(), s = S->map(), n2 = compose(nn, nn);
    const V &x = a[0];
    V Dx = (*D)(x), DN = (*D)(nn(x));
    return map2(DN, n, n, s, id) + map2(Dx, n, n, id, n2) - map2(Dx, n, n, s, nn) - map2(DN, n, n, id, nn);
  });
}

Clauses admissible_nstar(const CoalgebraStructure &Cs, const Matrix &Nm, const Matrix &Sm) {
  auto D = std::make_shared<Coalg>(Cs);
  auto N = std::make_shared<Op>(Nm), S = std::make_shared<Op>(Sm);
  std::size_t n = Cs.dim;
  return {make("left", {n}, {n, n},
               [D, N, S, n](const std::vector<V> &a) {
                 Map nn = N->map(), s = S->map(), n2 = compose(nn, nn);
                 const V &x = a[0];
                 V Dx = (*D)(x), DN = (*D)(nn(x));
                 return map2(DN, n, n, id, s) + map2(Dx, n, n, n2, id) - map2(Dx, n, n, nn, s) -
                        map2(DN, n, n, nn, id);
               }),
          nstar_right("right", Cs, Nm, Sm)};
}

Clauses cross(const AlgebraStructure &As, const AlgebraStructure &Hs, const Representation &onH,
              const Representation &onA, const char *c1, const char *c2) {
  auto H = std::make_shared<Alg>(Hs);
  std::size_t n = As.dim, h = Hs.dim;
  auto rA = std::make_shared<Action>(onH.rho, h), pA = std::make_shared<Action>(onH.phi, h);
  auto rH = std::make_shared<Action>(onA.rho, n), pH = std::make_shared<Action>(onA.phi, n);
  return {make(c1, {n, h, h}, {h},
               [=](const std::vector<V> &a) {
                 const auto &mH = *H;
                 const V &x = a[0], &p = a[1], &r = a[2];
                 return (*rA)(x, mH(p, r)) + (*rA)((*rH)(p, x) - (*pH)(p, x), r) -
                        mH((*rA)(x, p) - (*pA)(x, p), r) - (*pA)((*pH)(r, x), p) - mH(p, (*rA)(x, r));
               }),
          make(c2, {n, h, h}, {h}, [=](const std::vector<V> &a) {
            const auto &mH = *H;
            const V &x = a[0], &p = a[1], &r = a[2];
            return (*pA)(x, mH(p, r) - mH(r, p)) - (*pA)((*rH)(r, x), p) + (*pA)((*rH)(p, x), r) -
                   mH(p, (*pA)(x, r)) + mH(r, (*pA)(x, p));
          })};
}

Clauses o_operator_weak(const AlgebraStructure &As, const Matrix &Nm, const Representation &R, const Matrix &Am,
                        const Matrix &Tm) {
  auto A = std::make_shared<Alg>(As);
  auto N = std::make_shared<Op>(Nm), al = std::make_shared<Op>(Am), T = std::make_shared<Op>(Tm);
  auto rho = std::make_shared<Action>(R.rho, R.rep_dim), phi = std::make_shared<Action>(R.phi, R.rep_dim);
  std::size_t n = As.dim, m = R.rep_dim;
  return {make("o-operator", {m, m}, {n},
               [=](const std::vector<V> &a) {
                 const auto &t = *T;
                 const V &u = a[0], &v = a[1];
                 V Tu = t(u), Tv = t(v);
                 return (*A)(Tu, Tv) - t((*rho)(Tu, v) + (*phi)(Tv, u));
               }),
          make("intertwine", {}, {m, n}, [=](const std::vector<V> &) {
            V out;
            for (std::size_t b = 0; b < m; ++b) {
              V e = unit(m, b);
              V row = (*N)((*T)(e)) - (*T)((*al)(e));
              out.insert(out.end(), row.begin(), row.end());
            }
            return out;
          })};
}

Clauses pencil_compat(const CoalgebraStructure &Cs, const CoalgebraStructure &Ds) {
  auto C = std::make_shared<Coalg>(Cs), D = std::make_shared<Coalg>(Ds);
  std::size_t n = Cs.dim;
  return {make("compat", {n}, {n, n, n}, [C, D, n](const std::vector<V> &a) {
    const V &x = a[0];
    V Cx = (*C)(x), Dx = (*D)(x);
    V P = expand_first(Cx, n, n, *D) + expand_first(Dx, n, n, *C) - expand_second(Cx, n, n, *D) -
          expand_second(Dx, n, n, *C);
    return P - swap12(P, n, n, n);
  })};
}

Clauses pencil_corep(const CoalgebraStructure &Cs, const CoalgebraStructure &Ds, const Corepresentation &c1,
                     const Corepresentation &c2) {
  CoalgebraStructure sum(Cs.dim);
  sum.d = Cs.d + Ds.d;
  Corepresentation cs = c1;
  cs.xi = c1.xi + c2.xi;
  cs.eta = c1.eta + c2.eta;
  Clauses all = corep_law(sum, cs), one = corep_law(Cs, c1), two = corep_law(Ds, c2);
  Clauses out;
  for (int k = 0; k < 2; ++k) {
    auto f0 = all[k].eval, f1 = one[k].eval, f2 = two[k].eval;
    Clause c = all[k];
    c.name = k ? "corep-eta" : "corep-xi";
    c.eval = [f0, f1, f2](const std::vector<V> &a) { return f0(a) - f1(a) - f2(a); };
    out.push_back(c);
  }
  return out;
}

Clauses pencil_morphism(const Bundle &B) {
  auto C = std::make_shared<Coalg>(B.require_coalg());
  auto Dl = std::make_shared<Coalg>(B.coalgebra("delta"));
  auto S = std::make_shared<Op>(B.op("S").mat), th = std::make_shared<Op>(B.op("theta").mat);
  const auto &cr1 = B.corep("corep");
  const auto &cr2 = B.corep("corep2");
  std::size_t n = C->n, m = cr1.corep_dim;
  Clauses out;
  out.push_back(make("morph1", {n}, {n, n}, [=](const std::vector<V> &a) {
    Map s = S->map();
    return (*Dl)(s(a[0])) - map2((*C)(a[0]), n, n, s, s);
  }));
  out.push_back(make("morph2", {n}, {n, n}, [=](const std::vector<V> &a) {
    Map s = S->map();
    V Dx = (*C)(a[0]);
    return (*C)(s(a[0])) + (*Dl)(a[0]) - map2(Dx, n, n, id, s) - map2(Dx, n, n, s, id);
  }));
  const char *names[2][2] = {{"morph3", "morph4"}, {"morph5", "morph6"}};
  for (int k = 0; k < 2; ++k) {
    auto P1 = std::make_shared<Coaction>(k ? cr1.eta : cr1.xi, n, m);
    auto P2 = std::make_shared<Coaction>(k ? cr2.eta : cr2.xi, n, m);
    out.push_back(make(names[k][0], {m}, {n, m}, [=](const std::vector<V> &a) {
      const V &v = a[0];
      return (*P2)((*th)(v)) - map2((*P1)(v), n, m, S->map(), th->map());
    }));
    out.push_back(make(names[k][1], {m}, {n, m}, [=](const std::vector<V> &a) {
      const V &v = a[0];
      V X = (*P1)(v);
      return (*P1)((*th)(v)) + (*P2)(v) - map2(X, n, m, id, th->map()) - map2(X, n, m, S->map(), id);
    }));
  }
  return out;
}

Clauses pi_admissible(const Bundle &B, const PiDescriptor &pi) {
  auto A = std::make_shared<Alg>(B.require_alg());
  auto N = std::make_shared<Op>(B.op("N").mat), al = std::make_shared<Op>(B.op("alpha").mat);
  const auto &R = B.rep("rep");
  std::size_t n = A->n, m = R.rep_dim;
  Q th = pi.theta.constant_value();
  PiFamily fam = pi.family;
  std::string base = pi_family_name(fam);
  // Generic shape: P(u, w) bilinear, left/right operators L1 (on the slot
  // carrying the operator) and M1 (the outer operator).
  auto family = [fam, th](const std::function<V(const V &, const V &)> &P, const Map &inner, const Map &outer,
                          const V &u, const V &w, bool slot_left) {
    Map in2 = compose(inner, inner), out2 = compose(outer, outer);
    auto Pin = [&](const Map &f) { return slot_left ? P(f(u), w) : P(u, f(w)); };
    switch (fam) {
    case PiFamily::Scale:
      return Pin(in2) + th * out2(P(u, w)) - (Q(1) + th) * outer(Pin(inner));
    case PiFamily::Reflect:
      return Pin(in2) + th * outer(P(u, w)) - out2(P(u, w)) - th * Pin(inner);
    case PiFamily::Invert:
      return outer(th * P(u, w) + Pin(in2)) - (th * Pin(inner) + out2(Pin(inner)));
    }
    return V();
  };
  Clauses out;
  auto mul = [A](const V &x, const V &y) { return (*A)(x, y); };
  out.push_back(make(base + "-1", {n, n}, {n}, [=](const std::vector<V> &a) {
    return family(mul, N->map(), N->map(), a[0], a[1], false);
  }));
  out.push_back(make(base + "-2", {n, n}, {n}, [=](const std::vector<V> &a) {
    return family(mul, N->map(), N->map(), a[0], a[1], true);
  }));
  for (int w = 0; w < 2; ++w) {
    auto F = std::make_shared<Action>(w == 0 ? R.rho : R.phi, m);
    auto act = [F](const V &x, const V &v) { return (*F)(x, v); };
    out.push_back(make(base + "-" + std::to_string(3 + w), {n, m}, {m}, [=](const std::vector<V> &a) {
      return family(act, al->map(), al->map(), a[0], a[1], false);
    }));
    out.push_back(make(base + "-" + std::to_string(5 + w), {n, m}, {m}, [=](const std::vector<V> &a) {
      return family(act, N->map(), al->map(), a[0], a[1], true);
    }));
  }
  return out;
}

Clauses balanced(const AlgebraStructure &As, const CoalgebraStructure &Cs) {
  auto A = std::make_shared<Alg>(As);
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = As.dim;
  return {make("balanced", {n, n}, {n, n}, [A, D, n](const std::vector<V> &a) {
    const V &x = a[0], &y = a[1];
    V p = map2((*D)(x), n, n, A->right(y), id), q2 = map2((*D)(y), n, n, A->right(x), id);
    return p + transpose(q2, n, n) - q2 - transpose(p, n, n);
  })};
}

Clauses lie_alg(const AlgebraStructure &As) {
  auto A = std::make_shared<Alg>(As);
  std::size_t n = As.dim;
  return {make("antisymmetry", {n, n}, {n}, [A](const std::vector<V> &a) {
            return (*A)(a[0], a[1]) + (*A)(a[1], a[0]);
          }, true),
          make("jacobi", {n, n, n}, {n}, [A](const std::vector<V> &a) {
            const auto &m = *A;
            const V &x = a[0], &y = a[1], &z = a[2];
            return m(x, m(y, z)) + m(y, m(z, x)) + m(z, m(x, y));
          })};
}

Clauses lie_co(const CoalgebraStructure &Cs) {
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = Cs.dim;
  return {make("antisymmetry", {n}, {n, n},
               [D, n](const std::vector<V> &a) {
                 V Dx = (*D)(a[0]);
                 return Dx + transpose(Dx, n, n);
               }),
          make("cojacobi", {n}, {n, n, n}, [D, n](const std::vector<V> &a) {
            V T = expand_second((*D)(a[0]), n, n, *D);
            V out(T.size());
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                  out[(i * n + j) * n + k] =
                      T[(i * n + j) * n + k] + T[(k * n + i) * n + j] + T[(j * n + k) * n + i];
            return out;
          })};
}

Clause lie_cocycle(const AlgebraStructure &As, const CoalgebraStructure &Cs) {
  auto A = std::make_shared<Alg>(As);
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = As.dim;
  return make("cocycle", {n, n}, {n, n}, [A, D, n](const std::vector<V> &a) {
    const V &x = a[0], &y = a[1];
    V Dx = (*D)(x), Dy = (*D)(y);
    Map lx = A->left(x), ly = A->left(y);
    return (*D)((*A)(x, y)) - map2(Dy, n, n, lx, id) - map2(Dy, n, n, id, lx) + map2(Dx, n, n, ly, id) +
           map2(Dx, n, n, id, ly);
  });
}

Clauses commutative(const AlgebraStructure &As) {
  auto A = std::make_shared<Alg>(As);
  std::size_t n = As.dim;
  return {make("commutative", {n, n}, {n}, [A](const std::vector<V> &a) {
    return (*A)(a[0], a[1]) - (*A)(a[1], a[0]);
  }, true)};
}

Clauses cocommutative(const CoalgebraStructure &Cs) {
  auto D = std::make_shared<Coalg>(Cs);
  std::size_t n = Cs.dim;
  return {make("cocommutative", {n}, {n, n}, [D, n](const std::vector<V> &a) {
    V Dx = (*D)(a[0]);
    return Dx - transpose(Dx, n, n);
  })};
}

std::string pfx(LawId l) { return std::string(law_name(l)) + ":"; }

} // namespace

std::vector<Clause> clauses(LawId law, const Bundle &B, const CheckOptions &opts) {
  Clauses out;
  auto cat = [&](Clauses c) { add_prefixed(out, "", std::move(c)); };
  switch (law) {
  case LawId::PreLie:
    return pre_lie(B.require_alg());
  case LawId::PreLieCo:
    return pre_lie_co(B.require_coalg());
  case LawId::PreLieBialg:
    return pre_lie_bialg(B.require_alg(), B.require_coalg());
  case LawId::SEquation:
    return s_equation(B.require_alg(), B.tensor("r").mat);
  case LawId::CoSEquation:
    return co_s_equation(B.require_coalg(), B.form("omega").mat);
  case LawId::PseudoHessian:
    return pseudo_hessian(B.require_alg(), B.form("omega").mat);
  case LawId::PseudoHessianCo:
    return pseudo_hessian_co(B.require_coalg(), B.tensor("r").mat);
  case LawId::Nijenhuis:
    return nijenhuis(B.require_alg(), B.op("N").mat);
  case LawId::CoNijenhuis:
    return co_nijenhuis(B.require_coalg(), B.op("S").mat);
  case LawId::Rep:
    return rep_law(B.require_alg(), B.rep("rep"));
  case LawId::NijRep:
    return nij_rep(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("alpha").mat);
  case LawId::Corep:
    return corep_law(B.require_coalg(), B.corep("corep"));
  case LawId::AdmissibleS:
    return admissible_s(B.require_alg(), B.op("N").mat, B.op("S").mat);
  case LawId::AdmissibleBeta:
    return admissible_beta(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("beta").mat);
  case LawId::AdmissibleNStar:
    return admissible_nstar(B.require_coalg(), B.op("N").mat, B.op("S").mat);
  case LawId::NijPreLieBialg:
    for (LawId l : {LawId::PreLie, LawId::PreLieCo, LawId::PreLieBialg, LawId::Nijenhuis, LawId::CoNijenhuis,
                    LawId::AdmissibleS, LawId::AdmissibleNStar})
      add_prefixed(out, pfx(l), clauses(l, B, opts));
    return out;
  case LawId::MatchedPair: {
    const auto &A = B.require_alg();
    const auto &H = B.algebra("H");
    const auto &NA = B.op("N").mat;
    const auto &NH = B.op("N_H").mat;
    const auto &onH = B.rep("A_on_H");
    const auto &onA = B.rep("H_on_A");
    add_prefixed(out, "A:PRE_LIE:", pre_lie(A));
    add_prefixed(out, "A:NIJENHUIS:", nijenhuis(A, NA));
    add_prefixed(out, "H:PRE_LIE:", pre_lie(H));
    add_prefixed(out, "H:NIJENHUIS:", nijenhuis(H, NH));
    add_prefixed(out, "A_on_H:REP:", rep_law(A, onH));
    add_prefixed(out, "A_on_H:NIJ_REP:", nij_rep(A, NA, onH, NH));
    add_prefixed(out, "H_on_A:REP:", rep_law(H, onA));
    add_prefixed(out, "H_on_A:NIJ_REP:", nij_rep(H, NH, onA, NA));
    cat(cross(A, H, onH, onA, "cross1", "cross2"));
    cat(cross(H, A, onA, onH, "cross3", "cross4"));
    return out;
  }
  case LawId::OOperatorWeak:
    return o_operator_weak(B.require_alg(), B.op("N").mat, B.rep("rep"), B.op("alpha").mat, B.op("T").mat);
  case LawId::OOperator:
    for (LawId l : {LawId::OOperatorWeak, LawId::Rep, LawId::NijRep})
      add_prefixed(out, pfx(l), clauses(l, B, opts));
    return out;
  case LawId::SNijSEquation: {
    std::size_t n = B.dim;
    cat(s_equation(B.require_alg(), B.tensor("r").mat));
    auto r = std::make_shared<Op>(B.tensor("r").mat);
    auto N = std::make_shared<Op>(B.op("N").mat), S = std::make_shared<Op>(B.op("S").mat);
    out.push_back(make("s-nijenhuis", {}, {n, n}, [r, N, S, n](const std::vector<V> &) {
      return map2(r->m, n, n, S->map(), id) - map2(r->m, n, n, id, N->map());
    }));
    return out;
  }
  case LawId::PencilCompat:
    cat(pencil_compat(B.require_coalg(), B.coalgebra("delta")));
    if (B.coreps.count("corep") && B.coreps.count("corep2"))
      cat(pencil_corep(B.require_coalg(), B.coalgebra("delta"), B.corep("corep"), B.corep("corep2")));
    return out;
  case LawId::PencilMorphism:
    return pencil_morphism(B);
  case LawId::PiAdmissible:
    return pi_admissible(B, *opts.pi);
  case LawId::Balanced:
    return balanced(B.require_alg(), B.require_coalg());
  case LawId::LieAlg:
    return lie_alg(B.require_alg());
  case LawId::LieCo:
    return lie_co(B.require_coalg());
  case LawId::LieBialg:
    add_prefixed(out, pfx(LawId::LieAlg), lie_alg(B.require_alg()));
    add_prefixed(out, pfx(LawId::LieCo), lie_co(B.require_coalg()));
    out.push_back(lie_cocycle(B.require_alg(), B.require_coalg()));
    return out;
  case LawId::NijLieBialg:
    for (LawId l : {LawId::LieBialg, LawId::Nijenhuis, LawId::CoNijenhuis})
      add_prefixed(out, pfx(l), clauses(l, B, opts));
    out.push_back(admissible_left("admissible1", B.require_alg(), B.op("N").mat, B.op("S").mat));
    out.push_back(nstar_right("admissible2", B.require_coalg(), B.op("N").mat, B.op("S").mat));
    return out;
  case LawId::Commutative:
    return commutative(B.require_alg());
  case LawId::Cocommutative:
    return cocommutative(B.require_coalg());
  case LawId::SymmetricForm:
    return {symmetry(B.form("omega").mat)};
  case LawId::SymmetricTensor:
    return {symmetry(B.tensor("r").mat)};
  }
  return out;
}

namespace {

Q pair_out(const V &f, const std::vector<std::size_t> &dims, const std::vector<V> &covecs) {
  Q total = 0;
  std::size_t k = dims.size();
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = k; p-- > 0;) {
      idx[p] = rem % dims[p];
      rem /= dims[p];
    }
    if (f[flat] == 0)
      continue;
    Q t = f[flat];
    for (std::size_t p = 0; p < k; ++p)
      t *= covecs[p][idx[p]];
    total += t;
  }
  return total;
}

} // namespace

Q oracle_value(const Clause &c, const std::vector<V> &args, const std::vector<V> &covecs) {
  if (!c.triangular)
    return pair_out(c.eval(args), c.out_dims, covecs);
  std::size_t n = c.in_dims[0];
  Q total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Q w = args[0][i] * args[1][j];
      if (w != 0)
        total += w * pair_out(c.eval({unit(n, i), unit(n, j)}), c.out_dims, covecs);
    }
  return total;
}

Q residual_value(const Residual &r, const Clause &c, const std::vector<V> &args, const std::vector<V> &covecs) {
  Q total = 0;
  for (const auto &e : r.entries) {
    if (e.clause != c.name)
      continue;
    Q t = e.value.constant_value();
    for (std::size_t p = 0; p < e.input.size(); ++p)
      t *= args.at(p).at(e.input[p]);
    for (std::size_t p = 0; p < e.output.size(); ++p)
      t *= covecs.at(p).at(e.output[p]);
    total += t;
  }
  return total;
}

V random_vec(std::mt19937 &rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  V v(n);
  for (auto &x : v)
    x = d(rng);
  return v;
}

Agreement compare(LawId law, const Bundle &b, std::mt19937 &rng, std::size_t samples, const CheckOptions &opts) {
  Agreement ag;
  Residual res = check(law, b, opts);
  Clauses table = clauses(law, b, opts);
  std::set<std::string> known;
  for (const auto &c : table)
    known.insert(c.name);
  std::set<std::string> unknown;
  for (const auto &e : res.entries)
    if (!known.count(e.clause))
      unknown.insert(e.clause);
  ag.unknown_clauses.assign(unknown.begin(), unknown.end());
  for (std::size_t s = 0; s < samples; ++s)
    for (const auto &c : table) {
      std::vector<V> args, covecs;
      for (auto d : c.in_dims)
        args.push_back(random_vec(rng, d));
      for (auto d : c.out_dims)
        covecs.push_back(random_vec(rng, d));
      Q o = oracle_value(c, args, covecs), r = residual_value(res, c, args, covecs);
      ++ag.samples;
      if (o != 0)
        ag.oracle_all_zero = false;
      if (o != r) {
        if (!ag.mismatches)
          ag.first_mismatch = c.name + ": oracle " + o.get_str() + " vs residual " + r.get_str();
        ++ag.mismatches;
      }
    }
  return ag;
}

} // namespace oracle
