#include "prelie/structure_file.hpp"

#include "prelie/parse.hpp"

#include <fstream>
#include <sstream>

namespace prelie {

namespace {

class Reader {
public:
  explicit Reader(const ParamRing &ring) : ring_(ring) {}

  Scalar scalar(const Json &v, const std::string &path) const {
    if (v.is_number_integer())
      return Scalar(Rational(v.get<long>()));
    if (!v.is_string())
      throw Error(ErrorCode::InvalidInput, path + ": expected an expression string");
    std::string text = v.get<std::string>();
    try {
      return parse_scalar(text, ring_);
    } catch (const Error &e) {
      std::string msg = path + ": " + e.what();
      if (e.position())
        throw Error(e.code(), msg, *e.position(), e.expected());
      throw Error(e.code(), msg);
    }
  }

  Matrix matrix(const Json &v, std::size_t rows, std::size_t cols, const std::string &path) const {
    if (!v.is_array() || v.size() != rows)
      throw Error(ErrorCode::DimMismatch, path + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Json &row = v[i];
      if (!row.is_array() || row.size() != cols)
        throw Error(ErrorCode::DimMismatch, path + "[" + std::to_string(i + 1) + "]: expected " +
                                                std::to_string(cols) + " entries");
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = scalar(row[j], path + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
    return m;
  }

  // Dense rows of unknown width: the first row fixes it.
  Matrix matrix_any(const Json &v, const std::string &path) const {
    if (!v.is_array() || v.empty() || !v[0].is_array())
      throw Error(ErrorCode::InvalidInput, path + ": expected a nonempty array of rows");
    return matrix(v, v.size(), v[0].size(), path);
  }

  Tensor3 sparse(const Json &v, std::size_t n, const std::string &path) const {
    if (!v.is_array())
      throw Error(ErrorCode::InvalidInput, path + ": expected an array of [i,j,k,expr]");
    Tensor3 t(n, n, n);
    std::vector<bool> seen(n * n * n, false);
    for (std::size_t e = 0; e < v.size(); ++e) {
      std::string at = path + "[" + std::to_string(e + 1) + "]";
      const Json &row = v[e];
      if (!row.is_array() || row.size() != 4)
        throw Error(ErrorCode::InvalidInput, at + ": expected [i,j,k,expr]");
      std::size_t idx[3];
      for (int p = 0; p < 3; ++p) {
        if (!row[p].is_number_integer())
          throw Error(ErrorCode::InvalidInput, at + ": indices must be integers");
        long x = row[p].get<long>();
        if (x < 1 || static_cast<std::size_t>(x) > n)
          throw Error(ErrorCode::DimMismatch, at + ": index " + std::to_string(x) + " outside 1.." +
                                                  std::to_string(n));
        idx[p] = static_cast<std::size_t>(x - 1);
      }
      std::size_t flat = (idx[0] * n + idx[1]) * n + idx[2];
      if (seen[flat])
        throw Error(ErrorCode::InvalidInput, at + ": duplicate entry");
      seen[flat] = true;
      t.at(idx[0], idx[1], idx[2]) = scalar(row[3], at);
    }
    return t;
  }

private:
  const ParamRing &ring_;
};

std::size_t get_dim(const Json &doc, const char *key, const std::string &path) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 0)
    throw Error(ErrorCode::InvalidInput, path + ": missing or invalid \"" + key + "\"");
  return doc[key].get<std::size_t>();
}

const Json &object_at(const Json &doc, const char *key) {
  const Json &v = doc[key];
  if (!v.is_object())
    throw Error(ErrorCode::InvalidInput, std::string("\"") + key + "\" must be an object");
  return v;
}

Json sparse_to_json(const Tensor3 &t, const ParamRing &ring) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!t.at(i, j, k).is_zero())
          arr.push_back(Json::array({i + 1, j + 1, k + 1, t.at(i, j, k).render(ring)}));
  return arr;
}

} // namespace

Bundle bundle_from_json(const Json &doc) {
  if (!doc.is_object())
    throw Error(ErrorCode::InvalidInput, "structure file must be a JSON object");
  Bundle b;
  b.dim = get_dim(doc, "dim", "root");
  std::vector<std::string> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_array())
      throw Error(ErrorCode::InvalidInput, "\"params\" must be an array of names");
    for (const auto &p : doc["params"]) {
      if (!p.is_string())
        throw Error(ErrorCode::InvalidInput, "\"params\" must be an array of names");
      params.push_back(p.get<std::string>());
    }
  }
  b.ring = ParamRing(params);
  Reader rd(b.ring);
  std::size_t n = b.dim;
  if (doc.contains("basis")) {
    const Json &bs = doc["basis"];
    if (!bs.is_array() || bs.size() != n)
      throw Error(ErrorCode::DimMismatch, "\"basis\" must list dim names");
    for (const auto &x : bs)
      b.basis.push_back(x.get<std::string>());
  }
  if (doc.contains("assumptions")) {
    std::size_t k = 0;
    for (const auto &a : doc["assumptions"])
      b.assumptions.push_back(rd.scalar(a, "assumptions[" + std::to_string(++k) + "]"));
  }
  if (doc.contains("mul")) {
    AlgebraStructure A(n);
    A.c = rd.sparse(doc["mul"], n, "mul");
    b.alg = A;
  }
  if (doc.contains("comul")) {
    CoalgebraStructure C(n);
    C.d = rd.sparse(doc["comul"], n, "comul");
    b.coalg = C;
  }
  if (doc.contains("operators"))
    for (const auto &[name, v] : object_at(doc, "operators").items())
      b.operators[name] = LinearOperator(rd.matrix_any(v, "operators." + name));
  if (doc.contains("forms"))
    for (const auto &[name, v] : object_at(doc, "forms").items())
      b.forms[name] = BilinearForm(rd.matrix(v, n, n, "forms." + name));
  if (doc.contains("tensors"))
    for (const auto &[name, v] : object_at(doc, "tensors").items())
      b.tensors[name] = TensorElement(rd.matrix(v, n, n, "tensors." + name));
  if (doc.contains("reps"))
    for (const auto &[name, v] : object_at(doc, "reps").items()) {
      std::string path = "reps." + name;
      std::size_t an = get_dim(v, "alg_dim", path), m = get_dim(v, "rep_dim", path);
      Representation R(an, m);
      for (const char *key : {"rho", "phi"}) {
        if (!v.contains(key))
          continue;
        const Json &fam = v[key];
        if (!fam.is_array() || fam.size() != an)
          throw Error(ErrorCode::DimMismatch, path + "." + key + ": expected alg_dim matrices");
        for (std::size_t i = 0; i < an; ++i)
          (key[0] == 'r' ? R.rho : R.phi)[i] =
              rd.matrix(fam[i], m, m, path + "." + key + "[" + std::to_string(i + 1) + "]");
      }
      b.reps[name] = R;
    }
  if (doc.contains("coreps"))
    for (const auto &[name, v] : object_at(doc, "coreps").items()) {
      std::string path = "coreps." + name;
      std::size_t cn = get_dim(v, "coalg_dim", path), m = get_dim(v, "corep_dim", path);
      Corepresentation R(cn, m);
      if (v.contains("xi"))
        R.xi = rd.matrix(v["xi"], m, cn * m, path + ".xi");
      if (v.contains("eta"))
        R.eta = rd.matrix(v["eta"], m, cn * m, path + ".eta");
      b.coreps[name] = R;
    }
  if (doc.contains("algebras"))
    for (const auto &[name, v] : object_at(doc, "algebras").items()) {
      std::size_t an = get_dim(v, "dim", "algebras." + name);
      AlgebraStructure A(an);
      if (v.contains("mul"))
        A.c = rd.sparse(v["mul"], an, "algebras." + name + ".mul");
      b.algebras[name] = A;
    }
  if (doc.contains("coalgebras"))
    for (const auto &[name, v] : object_at(doc, "coalgebras").items()) {
      std::size_t cn = get_dim(v, "dim", "coalgebras." + name);
      CoalgebraStructure C(cn);
      if (v.contains("comul"))
        C.d = rd.sparse(v["comul"], cn, "coalgebras." + name + ".comul");
      b.coalgebras[name] = C;
    }
  validate(b);
  return b;
}

Json mul_to_json(const AlgebraStructure &A, const ParamRing &ring) { return sparse_to_json(A.c, ring); }

Json comul_to_json(const CoalgebraStructure &C, const ParamRing &ring) {
  return sparse_to_json(C.d, ring);
}

Json matrix_to_json(const Matrix &m, const ParamRing &ring) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).render(ring));
    rows.push_back(row);
  }
  return rows;
}

Json rep_to_json(const Representation &r, const ParamRing &ring) {
  Json out;
  out["alg_dim"] = r.alg_dim;
  out["rep_dim"] = r.rep_dim;
  Json rho = Json::array(), phi = Json::array();
  for (const auto &m : r.rho)
    rho.push_back(matrix_to_json(m, ring));
  for (const auto &m : r.phi)
    phi.push_back(matrix_to_json(m, ring));
  out["rho"] = rho;
  out["phi"] = phi;
  return out;
}

Json corep_to_json(const Corepresentation &c, const ParamRing &ring) {
  Json out;
  out["coalg_dim"] = c.coalg_dim;
  out["corep_dim"] = c.corep_dim;
  out["xi"] = matrix_to_json(c.xi, ring);
  out["eta"] = matrix_to_json(c.eta, ring);
  return out;
}

Json bundle_to_json(const Bundle &b) {
  Json doc;
  doc["dim"] = b.dim;
  doc["params"] = b.ring.names();
  if (!b.basis.empty())
    doc["basis"] = b.basis;
  if (!b.assumptions.empty()) {
    Json a = Json::array();
    for (const auto &s : b.assumptions)
      a.push_back(s.render(b.ring));
    doc["assumptions"] = a;
  }
  if (b.alg)
    doc["mul"] = mul_to_json(*b.alg, b.ring);
  if (b.coalg)
    doc["comul"] = comul_to_json(*b.coalg, b.ring);
  auto section = [&](const char *key, const auto &map, auto enc) {
    if (map.empty())
      return;
    Json obj = Json::object();
    for (const auto &[name, v] : map)
      obj[name] = enc(v);
    doc[key] = obj;
  };
  section("operators", b.operators, [&](const LinearOperator &o) { return matrix_to_json(o.mat, b.ring); });
  section("forms", b.forms, [&](const BilinearForm &f) { return matrix_to_json(f.mat, b.ring); });
  section("tensors", b.tensors, [&](const TensorElement &t) { return matrix_to_json(t.mat, b.ring); });
  section("reps", b.reps, [&](const Representation &r) { return rep_to_json(r, b.ring); });
  section("coreps", b.coreps, [&](const Corepresentation &c) { return corep_to_json(c, b.ring); });
  section("algebras", b.algebras, [&](const AlgebraStructure &A) {
    Json o;
    o["dim"] = A.dim;
    o["mul"] = mul_to_json(A, b.ring);
    return o;
  });
  section("coalgebras", b.coalgebras, [&](const CoalgebraStructure &C) {
    Json o;
    o["dim"] = C.dim;
    o["comul"] = comul_to_json(C, b.ring);
    return o;
  });
  return doc;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::Io, "'" + path + "' is not valid JSON: " + e.what(), e.byte, {});
  }
}

void write_json_file(const std::string &path, const Json &doc) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

Bundle load_structure(const std::string &path) { return bundle_from_json(read_json_file(path)); }

void save_structure(const std::string &path, const Bundle &b) { write_json_file(path, bundle_to_json(b)); }

} // namespace prelie
