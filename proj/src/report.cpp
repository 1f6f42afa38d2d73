#include "prelie/report.hpp"

#include "prelie/fixtures.hpp"

#include <sstream>

namespace prelie {

const char *tool_version() { return "prelie-forge 0.3.0"; }

bool CheckReport::pass() const {
  for (const auto &r : results)
    if (!r.passes())
      return false;
  return true;
}

CheckReport make_check_report(const Bundle &b, const std::vector<LawId> &laws, const Provenance &prov,
                              const CheckOptions &opts) {
  CheckReport rep;
  rep.prov = prov;
  rep.ring = b.ring;
  for (const auto &a : b.assumptions)
    rep.assumptions.push_back(a.render(b.ring) + " != 0");
  for (LawId law : laws)
    rep.results.push_back(check(law, b, opts));
  return rep;
}

namespace {

std::string one_based(const std::vector<std::size_t> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + ")";
}

Json one_based_json(const std::vector<std::size_t> &v) {
  Json a = Json::array();
  for (auto x : v)
    a.push_back(x + 1);
  return a;
}

void header(std::ostringstream &os, const Provenance &p) {
  os << "# " << tool_version() << "\n";
  os << "# file: " << (p.file.empty() ? "-" : p.file) << "\n";
  os << "# profile: " << (p.profile.empty() ? "-" : p.profile) << "\n";
}

Json header_json(const Provenance &p) {
  Json h;
  h["tool"] = tool_version();
  h["file"] = p.file;
  h["profile"] = p.profile;
  return h;
}

std::string laws_list(const std::vector<LawId> &laws) {
  std::string s;
  for (std::size_t i = 0; i < laws.size(); ++i)
    s += (i ? "," : "") + std::string(law_name(laws[i]));
  return s;
}

const char *verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

} // namespace

std::string render_text(const CheckReport &r) {
  std::ostringstream os;
  header(os, r.prov);
  for (const auto &a : r.assumptions)
    os << "# assume: " << a << "\n";
  for (const auto &res : r.results) {
    os << law_name(res.law) << ": " << verdict(res.passes());
    if (!res.passes())
      os << " (" << res.entries.size() << " nonzero)";
    os << "\n";
    for (const auto &e : res.entries)
      os << "  " << e.clause << " " << one_based(e.input) << " -> " << one_based(e.output) << ": "
         << e.value.render(r.ring) << "\n";
  }
  os << "verdict: " << verdict(r.pass()) << "\n";
  return os.str();
}

Json render_json(const CheckReport &r) {
  Json j;
  j["provenance"] = header_json(r.prov);
  j["assumptions"] = r.assumptions;
  Json laws = Json::array();
  for (const auto &res : r.results) {
    Json l;
    l["law"] = law_name(res.law);
    l["verdict"] = verdict(res.passes());
    Json entries = Json::array();
    for (const auto &e : res.entries) {
      Json x;
      x["clause"] = e.clause;
      x["input"] = one_based_json(e.input);
      x["output"] = one_based_json(e.output);
      x["value"] = e.value.render(r.ring);
      entries.push_back(x);
    }
    l["residual"] = entries;
    laws.push_back(l);
  }
  j["laws"] = laws;
  j["verdict"] = verdict(r.pass());
  return j;
}

namespace {

const Matrix &hit_member(const Bundle &b, const SearchReport &r) {
  switch (r.kind) {
  case UnknownKind::Operator:
    return b.op(r.member).mat;
  case UnknownKind::SymmetricTensor:
    return b.tensor(r.member).mat;
  case UnknownKind::Form:
    break;
  }
  return b.form(r.member).mat;
}

std::string matrix_text(const Matrix &m, const ParamRing &ring) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      s += (j ? ", " : "") + m.at(i, j).render(ring);
    s += "]";
  }
  return s + "]";
}

} // namespace

std::string render_text(const SearchReport &r, const Provenance &prov, const ParamRing &ring) {
  std::ostringstream os;
  header(os, prov);
  os << "# laws: " << laws_list(r.laws) << "\n";
  os << "unknown: " << unknown_kind_name(r.kind) << " " << r.member << "\n";
  os << "enumerated: " << r.total << "\n";
  os << "hits: " << r.hits.size() << "\n";
  for (std::size_t i = 0; i < r.hits.size(); ++i)
    os << "  #" << r.hit_indices[i] << " " << r.member << " = " << matrix_text(hit_member(r.hits[i], r), ring)
       << "\n";
  return os.str();
}

Json render_json(const SearchReport &r, const Provenance &prov, const ParamRing &ring) {
  Json j;
  j["provenance"] = header_json(prov);
  Json laws = Json::array();
  for (LawId l : r.laws)
    laws.push_back(law_name(l));
  j["laws"] = laws;
  j["unknown"] = unknown_kind_name(r.kind);
  j["member"] = r.member;
  j["enumerated"] = r.total;
  Json hits = Json::array();
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    Json h;
    h["index"] = r.hit_indices[i];
    h["value"] = matrix_to_json(hit_member(r.hits[i], r), ring);
    hits.push_back(h);
  }
  j["hits"] = hits;
  return j;
}

std::string render_text(const SweepReport &r) {
  std::ostringstream os;
  os << "# " << tool_version() << "\n";
  for (const auto &row : r.rows) {
    const ParamRing &ring = fixture(row.fixture).ring;
    os << row.fixture << " [" << laws_list(row.profile) << "]: " << verdict(row.pass) << "\n";
    for (const auto &[law, v] : row.verdicts) {
      if (v.pass)
        continue;
      os << "  " << law_name(law) << ":";
      for (const auto &f : v.factors)
        os << " " << f.render(ring) << ";";
      os << "\n";
    }
  }
  os << "verdict: " << verdict(r.all_pass()) << "\n";
  return os.str();
}

Json render_json(const SweepReport &r) {
  Json j;
  j["tool"] = tool_version();
  Json rows = Json::array();
  for (const auto &row : r.rows) {
    const ParamRing &ring = fixture(row.fixture).ring;
    Json x;
    x["fixture"] = row.fixture;
    Json laws = Json::object();
    for (const auto &[law, v] : row.verdicts) {
      Json l;
      l["verdict"] = verdict(v.pass);
      Json f = Json::array();
      for (const auto &s : v.factors)
        f.push_back(s.render(ring));
      l["factors"] = f;
      laws[law_name(law)] = l;
    }
    x["laws"] = laws;
    x["verdict"] = verdict(row.pass);
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["verdict"] = verdict(r.all_pass());
  return j;
}

} // namespace prelie
