#include "prelie/fixtures.hpp"

#include "prelie/parse.hpp"

#include <functional>

namespace prelie {

namespace {

using Rows = std::vector<std::vector<const char *>>;

// Dim-2 bundle on basis {e, f}; index 0 is e, 1 is f.
class Draft {
public:
  explicit Draft(std::vector<std::string> params) {
    b_.dim = 2;
    b_.ring = ParamRing(std::move(params));
    b_.basis = {"e", "f"};
  }
  Draft &mul(std::size_t i, std::size_t j, std::size_t k, const char *t) {
    if (!b_.alg)
      b_.alg = AlgebraStructure(2);
    b_.alg->c.at(i, j, k) = s(t);
    return *this;
  }
  Draft &comul(std::size_t k, std::size_t i, std::size_t j, const char *t) {
    if (!b_.coalg)
      b_.coalg = CoalgebraStructure(2);
    b_.coalg->d.at(k, i, j) = s(t);
    return *this;
  }
  Draft &zero_comul() {
    b_.coalg = CoalgebraStructure(2);
    return *this;
  }
  Draft &op(const std::string &name, const Rows &rows) {
    b_.operators[name] = LinearOperator(mat(rows));
    return *this;
  }
  Draft &form(const std::string &name, const Rows &rows) {
    b_.forms[name] = BilinearForm(mat(rows));
    return *this;
  }
  Draft &assume(const char *t) {
    b_.assumptions.push_back(s(t));
    return *this;
  }
  Bundle done() const { return b_; }

private:
  Scalar s(const char *t) const { return parse_scalar(t, b_.ring); }
  Matrix mat(const Rows &rows) const {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m.at(i, j) = s(rows[i][j]);
    return m;
  }
  Bundle b_;
};

// f o e = -e, f o f = lam f
Draft ex_alg(std::vector<std::string> params, const char *lam) {
  Draft d(std::move(params));
  d.mul(1, 0, 0, "-1").mul(1, 1, 1, lam);
  return d;
}

Draft coalg1(std::vector<std::string> params) {
  Draft d(std::move(params));
  d.comul(0, 0, 0, "l").comul(1, 1, 1, "p");
  return d;
}

Draft coalg2(std::vector<std::string> params) {
  Draft d(std::move(params));
  d.comul(0, 0, 0, "l").comul(0, 0, 1, "l").comul(1, 1, 0, "l").comul(1, 1, 1, "l");
  return d;
}

// [e,f] = e
Draft lie(std::vector<std::string> params) {
  Draft d(std::move(params));
  d.mul(0, 1, 0, "1").mul(1, 0, 0, "-1");
  return d;
}

const Rows kOmegaA = {{"0", "l3"}, {"l3", "l2"}};
const Rows kOmegaB = {{"0", "0"}, {"0", "l2"}};
const Rows kNA1 = {{"k2*l3", "0"}, {"k1*l3 + k2*l2", "k2*l3"}};

struct Entry {
  FixtureInfo info;
  std::function<Bundle()> make;
};

const std::vector<Entry> &entries() {
  using L = LawId;
  static const std::vector<Entry> t = {
      {{"ExAlg", "pre-Lie algebra f.e = -e, f.f = l f (assumes l+1 != 0)", {L::PreLie}},
       [] { return ex_alg({"l"}, "l").assume("l + 1").done(); }},
      {{"ExOmegaA", "ExAlg at l=1 with pseudo-Hessian form [[0,l3],[l3,l2]]",
        {L::PreLie, L::PseudoHessian}},
       [] { return ex_alg({"l2", "l3"}, "1").form("omega", kOmegaA).done(); }},
      {{"ExOmegaB", "ExAlg with pseudo-Hessian form [[0,0],[0,l2]]", {L::PreLie, L::PseudoHessian}},
       [] { return ex_alg({"l", "l2"}, "l").form("omega", kOmegaB).done(); }},
      {{"ExCoalg1", "pre-Lie coalgebra D(e) = l e(x)e, D(f) = p f(x)f", {L::PreLieCo}},
       [] { return coalg1({"l", "p"}).done(); }},
      {{"ExCoalg2", "pre-Lie coalgebra D(e) = l(e(x)e + e(x)f), D(f) = l(f(x)e + f(x)f)",
        {L::PreLieCo}},
       [] { return coalg2({"l"}).done(); }},
      {{"ExOmega1a", "ExCoalg1 with co-S solution diag(v, k)",
        {L::PreLieCo, L::SymmetricForm, L::CoSEquation}},
       [] { return coalg1({"l", "p", "v", "k"}).form("omega", {{"v", "0"}, {"0", "k"}}).done(); }},
      {{"ExOmega1b", "ExCoalg1 with co-S solution [[p^2 v/l^2, p v/l],[p v/l, v]] (assumes l != 0)",
        {L::PreLieCo, L::SymmetricForm, L::CoSEquation}},
       [] {
         return coalg1({"l", "p", "v"})
             .form("omega", {{"p^2*v/l^2", "p*v/l"}, {"p*v/l", "v"}})
             .assume("l")
             .done();
       }},
      {{"ExOmega2a", "ExCoalg2 with co-S solution [[0,0],[0,v]]",
        {L::PreLieCo, L::SymmetricForm, L::CoSEquation}},
       [] { return coalg2({"l", "v"}).form("omega", {{"0", "0"}, {"0", "v"}}).done(); }},
      {{"ExOmega2b", "ExCoalg2 with co-S solution [[v,k],[k,k^2/v]] (assumes v != 0)",
        {L::PreLieCo, L::SymmetricForm, L::CoSEquation}},
       [] {
         return coalg2({"l", "v", "k"})
             .form("omega", {{"v", "k"}, {"k", "k^2/v"}})
             .assume("v")
             .done();
       }},
      {{"ExNijA1", "Nijenhuis N(e) = k2 l3 e, N(f) = (k1 l3 + k2 l2)e + k2 l3 f on ExOmegaA",
        {L::PseudoHessian, L::Nijenhuis}},
       [] { return ex_alg({"k1", "k2", "l2", "l3"}, "1").form("omega", kOmegaA).op("N", kNA1).assume("k2").done(); }},
      {{"ExNijA2", "Nijenhuis N(e) = 0, N(f) = k3 l2 f on ExOmegaA", {L::PseudoHessian, L::Nijenhuis}},
       [] {
         return ex_alg({"k3", "l2", "l3"}, "1")
             .form("omega", kOmegaA)
             .op("N", {{"0", "0"}, {"0", "k3*l2"}})
             .assume("k3")
             .done();
       }},
      {{"ExNijA3", "Nijenhuis N(e) = 0, N(f) = k1 l3 e on ExOmegaA", {L::PseudoHessian, L::Nijenhuis}},
       [] {
         return ex_alg({"k1", "l2", "l3"}, "1")
             .form("omega", kOmegaA)
             .op("N", {{"0", "0"}, {"k1*l3", "0"}})
             .assume("k1")
             .done();
       }},
      {{"ExNijB1", "Nijenhuis N(e) = 0, N(f) = k3 l2 f on ExOmegaB", {L::PseudoHessian, L::Nijenhuis}},
       [] {
         return ex_alg({"l", "k3", "l2"}, "l")
             .form("omega", kOmegaB)
             .op("N", {{"0", "0"}, {"0", "k3*l2"}})
             .assume("k3")
             .done();
       }},
      {{"ExNijB2", "Nijenhuis N(e) = 0, N(f) = k2 l2 e on ExOmegaB at l=1",
        {L::PseudoHessian, L::Nijenhuis}},
       [] {
         return ex_alg({"k2", "l2"}, "1")
             .form("omega", kOmegaB)
             .op("N", {{"0", "0"}, {"k2*l2", "0"}})
             .assume("k2")
             .done();
       }},
      {{"ExBialgI", "Nijenhuis pre-Lie bialgebra at l=1: D(e) = k2 e(x)e, D(f) = -2k1 e(x)e - k2 e(x)f, S = N",
        {L::NijPreLieBialg, L::Balanced}},
       [] {
         return ex_alg({"k1", "k2", "l2", "l3"}, "1")
             .comul(0, 0, 0, "k2")
             .comul(1, 0, 0, "-2*k1")
             .comul(1, 0, 1, "-k2")
             .op("N", kNA1)
             .op("S", kNA1)
             .done();
       }},
      {{"ExBialgII", "Nijenhuis pre-Lie bialgebra D(e) = k3 f(x)e, D(f) = l k3 f(x)f",
        {L::NijPreLieBialg, L::Balanced}},
       [] {
         return ex_alg({"l", "k3", "l2"}, "l")
             .comul(0, 1, 0, "k3")
             .comul(1, 1, 1, "l*k3")
             .op("N", {{"0", "0"}, {"0", "k3*l2"}})
             .op("S", {{"k3*l2", "0"}, {"0", "k3*l2"}})
             .done();
       }},
      {{"ExBialgIII", "Nijenhuis pre-Lie bialgebra D(e) = 0, D(f) = -2k1 e(x)e, S(f) = theta f",
        {L::NijPreLieBialg, L::Balanced}},
       [] {
         return ex_alg({"l", "k1", "l3", "theta"}, "l")
             .comul(1, 0, 0, "-2*k1")
             .op("N", {{"0", "0"}, {"0", "k1*l3"}})
             .op("S", {{"0", "0"}, {"0", "theta"}})
             .done();
       }},
      {{"ExLieBialgI", "Nijenhuis Lie bialgebra [e,f] = e, d(f) = k2(f(x)e - e(x)f), S = N",
        {L::NijLieBialg}},
       [] {
         return lie({"k1", "k2", "l2", "l3"})
             .comul(1, 1, 0, "k2")
             .comul(1, 0, 1, "-k2")
             .op("N", kNA1)
             .op("S", kNA1)
             .done();
       }},
      {{"ExLieBialgII", "Nijenhuis Lie bialgebra [e,f] = e, d(e) = k3(f(x)e - e(x)f)", {L::NijLieBialg}},
       [] {
         return lie({"k3", "l2"})
             .comul(0, 1, 0, "k3")
             .comul(0, 0, 1, "-k3")
             .op("N", {{"0", "0"}, {"0", "k3*l2"}})
             .op("S", {{"k3*l2", "0"}, {"0", "k3*l2"}})
             .done();
       }},
      {{"ExLieBialgIII", "Nijenhuis Lie bialgebra [e,f] = e, d = 0, S(f) = theta f", {L::NijLieBialg}},
       [] {
         return lie({"k1", "l3", "theta"})
             .zero_comul()
             .op("N", {{"0", "0"}, {"0", "k1*l3"}})
             .op("S", {{"0", "0"}, {"0", "theta"}})
             .done();
       }},
  };
  return t;
}

const Entry &find(const std::string &name) {
  for (const auto &e : entries())
    if (e.info.name == name)
      return e;
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

} // namespace

const std::vector<FixtureInfo> &fixture_catalog() {
  static const std::vector<FixtureInfo> v = [] {
    std::vector<FixtureInfo> out;
    for (const auto &e : entries())
      out.push_back(e.info);
    return out;
  }();
  return v;
}

const FixtureInfo &fixture_info(const std::string &name) { return find(name).info; }

Bundle fixture(const std::string &name, const std::map<std::string, Rational> &bindings) {
  Bundle b = find(name).make();
  return bindings.empty() ? b : substitute(b, bindings);
}

} // namespace prelie
