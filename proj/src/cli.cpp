#include "prelie/cli.hpp"

#include "prelie/constructors.hpp"
#include "prelie/fixtures.hpp"
#include "prelie/parse.hpp"
#include "prelie/report.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>

namespace prelie {

std::string fixture_file_stem(const std::string &name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    bool upper = std::isupper(static_cast<unsigned char>(c));
    if (i > 0 && upper) {
      char prev = name[i - 1];
      if (std::islower(static_cast<unsigned char>(prev)) || std::isdigit(static_cast<unsigned char>(prev)))
        out += '_';
    }
    out += c;
  }
  // Lower-case every token except roman numerals.
  std::string res;
  std::size_t start = 0;
  while (start <= out.size()) {
    std::size_t end = out.find('_', start);
    if (end == std::string::npos)
      end = out.size();
    std::string tok = out.substr(start, end - start);
    bool roman = !tok.empty() && tok.find_first_not_of("IVX") == std::string::npos;
    if (!roman)
      for (auto &ch : tok)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    res += (res.empty() ? "" : "_") + tok;
    start = end + 1;
  }
  return res;
}

namespace {

std::map<std::string, Rational> parse_bindings(const std::vector<std::string> &binds) {
  std::map<std::string, Rational> out;
  for (const auto &b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::InvalidInput, "binding '" + b + "' is not name=value");
    out[b.substr(0, eq)] = parse_rational(b.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> parse_args(const std::vector<std::string> &args) {
  std::map<std::string, std::string> out;
  for (const auto &a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::InvalidInput, "argument '" + a + "' is not key=value");
    out[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return out;
}

std::vector<Rational> parse_entries(const std::string &text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos)
      end = text.size();
    out.push_back(parse_rational(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

void report_error(std::ostream &err, const Error &e) {
  err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
  if (e.position()) {
    err << "  at offset " << *e.position();
    if (!e.expected().empty()) {
      err << ", expected one of:";
      for (const auto &x : e.expected())
        err << " " << x;
    }
    err << "\n";
  }
}

struct CheckCmd {
  std::string file, laws, format = "text", pi;
  std::vector<std::string> binds;
};

struct ConstructCmd {
  std::string file, op, out;
  std::vector<std::string> args;
};

struct SearchCmd {
  std::string file, laws, unknown = "operator", entries = "-1,0,1", member, format = "text", pi;
  std::vector<std::string> binds;
  bool allow_empty = false, symmetric = false;
  unsigned workers = 1;
};

struct FixturesCmd {
  bool list = false, sweep = false;
  std::vector<std::string> emit;
  std::string emit_all, format = "text";
};

CheckOptions options_with_pi(const std::string &pi) {
  CheckOptions o;
  if (!pi.empty())
    o.pi = parse_pi(pi);
  return o;
}

Bundle load_bound(const std::string &file, const std::vector<std::string> &binds) {
  Bundle b = load_structure(file);
  auto values = parse_bindings(binds);
  return values.empty() ? b : substitute(b, values);
}

int do_check(const CheckCmd &c, std::ostream &out) {
  Bundle b = load_bound(c.file, c.binds);
  auto laws = resolve_profile(c.laws);
  CheckReport rep = make_check_report(b, laws, {c.file, c.laws}, options_with_pi(c.pi));
  if (c.format == "json")
    out << render_json(rep).dump(2) << "\n";
  else
    out << render_text(rep);
  return rep.pass() ? 0 : 1;
}

Json product_doc(const ProductBundle &p) {
  Json doc = bundle_to_json(p.ambient);
  doc["summands"] = Json::array({Json::array({p.first.first + 1, p.first.second}),
                                 Json::array({p.second.first + 1, p.second.second})});
  return doc;
}

int do_construct(const ConstructCmd &c, std::ostream &out) {
  Json doc = read_json_file(c.file);
  Bundle b = bundle_from_json(doc);
  auto args = parse_args(c.args);
  auto arg = [&](const std::string &key, const std::string &def) {
    auto it = args.find(key);
    return it == args.end() ? def : it->second;
  };
  const ParamRing &ring = b.ring;
  const std::string &op = c.op;
  std::string name = arg("name", "");
  auto put = [&](const char *section, const std::string &def, Json value) {
    doc[section][name.empty() ? def : name] = std::move(value);
  };

  if (op == "delta-from-r") {
    auto C = delta_from_r(b.require_alg(), b.tensor(arg("r", "r")));
    if (name.empty())
      doc["comul"] = comul_to_json(C, ring);
    else
      doc["coalgebras"][name] = Json{{"dim", C.dim}, {"comul", comul_to_json(C, ring)}};
  } else if (op == "circ-from-omega") {
    auto A = circ_from_omega(b.require_coalg(), b.form(arg("omega", "omega")));
    if (name.empty())
      doc["mul"] = mul_to_json(A, ring);
    else
      doc["algebras"][name] = Json{{"dim", A.dim}, {"mul", mul_to_json(A, ring)}};
  } else if (op == "nijenhuis-from-pairing") {
    auto N = nijenhuis_from_pairing(b.require_alg(), b.form(arg("omega", "omega")), b.tensor(arg("r", "r")));
    put("operators", "N", matrix_to_json(N.mat, ring));
  } else if (op == "conijenhuis-from-pairing") {
    auto S = conijenhuis_from_pairing(b.require_coalg(), b.tensor(arg("r", "r")), b.form(arg("omega", "omega")));
    put("operators", "S", matrix_to_json(S.mat, ring));
  } else if (op == "omega-from-r") {
    put("forms", "omega", matrix_to_json(omega_from_r(b.tensor(arg("r", "r"))).mat, ring));
  } else if (op == "pencil") {
    Scalar s = parse_scalar(arg("s", "1"), ring), t = parse_scalar(arg("t", "1"), ring);
    auto C = coalgebra_pencil(b.require_coalg(), b.coalgebra(arg("delta2", "delta")), s, t);
    if (name.empty())
      doc["comul"] = comul_to_json(C, ring);
    else
      doc["coalgebras"][name] = Json{{"dim", C.dim}, {"comul", comul_to_json(C, ring)}};
  } else if (op == "semidirect") {
    auto p = semidirect_product(b.require_alg(), b.op(arg("N", "N")), b.rep(arg("rep", "rep")),
                                b.op(arg("alpha", "alpha")), ring);
    doc = product_doc(p);
  } else if (op == "matched-pair") {
    auto p = matched_pair_product(b.require_alg(), b.op(arg("N", "N")), b.algebra(arg("H", "H")),
                                  b.op(arg("N_H", "N_H")), b.rep(arg("on_H", "A_on_H")),
                                  b.rep(arg("on_A", "H_on_A")), ring);
    doc = product_doc(p);
  } else if (op == "central-extension") {
    Bundle e;
    e.dim = b.dim + 1;
    e.ring = ring;
    e.alg = central_extension(b.require_alg(), b.form(arg("omega", "omega")));
    e.assumptions = b.assumptions;
    doc = bundle_to_json(e);
  } else if (op == "induce-lie") {
    doc = bundle_to_json(induced_lie_bialgebra(b));
  } else if (op == "lift-o-operator") {
    OOperatorLift lift;
    const auto &A = b.require_alg();
    const auto &N = b.op(arg("N", "N"));
    const auto &rep = b.rep(arg("rep", "rep"));
    const auto &alpha = b.op(arg("alpha", "alpha"));
    const auto &T = b.op(arg("T", "T"));
    if (args.count("pi"))
      lift = lift_o_operator_to_r_pi(A, N, rep, alpha, T, parse_pi(args.at("pi")), ring);
    else
      lift = lift_o_operator_to_r(A, N, rep, alpha, b.op(arg("beta", "beta")), b.op(arg("S", "S")), T, ring);
    doc = product_doc(lift.product);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown construction '" + op + "'");
  }
  // Validate what we are about to write.
  bundle_from_json(doc);
  if (c.out.empty() || c.out == "-")
    out << doc.dump(2) << "\n";
  else
    write_json_file(c.out, doc);
  return 0;
}

int do_search(const SearchCmd &c, std::ostream &out) {
  Bundle b = load_bound(c.file, c.binds);
  GridSpec spec;
  if (c.unknown == "operator")
    spec.kind = UnknownKind::Operator;
  else if (c.unknown == "symmetric-tensor")
    spec.kind = UnknownKind::SymmetricTensor;
  else if (c.unknown == "form")
    spec.kind = UnknownKind::Form;
  else
    throw Error(ErrorCode::InvalidInput, "unknown kind '" + c.unknown + "'");
  spec.entries = parse_entries(c.entries);
  spec.member = c.member;
  spec.symmetric = c.symmetric;
  spec.workers = c.workers == 0 ? 1 : c.workers;
  if (const char *cap = std::getenv("PRELIE_FORGE_MAX_GRID")) {
    try {
      spec.cap = std::stoull(cap);
    } catch (const std::exception &) {
      throw Error(ErrorCode::InvalidInput, std::string("PRELIE_FORGE_MAX_GRID='") + cap + "' is not a count");
    }
  }
  auto laws = resolve_profile(c.laws);
  SearchReport rep = grid_search(b, spec, laws, options_with_pi(c.pi));
  Provenance prov{c.file, c.laws};
  if (c.format == "json")
    out << render_json(rep, prov, b.ring).dump(2) << "\n";
  else
    out << render_text(rep, prov, b.ring);
  return rep.hits.empty() && !c.allow_empty ? 1 : 0;
}

int do_fixtures(const FixturesCmd &c, std::ostream &out) {
  if (c.list) {
    for (const auto &f : fixture_catalog()) {
      std::string prof;
      for (LawId l : f.profile)
        prof += (prof.empty() ? "" : ",") + std::string(law_name(l));
      out << f.name << "  [" << prof << "]  " << f.summary << "\n";
    }
  }
  auto emit = [&](const std::string &name, const std::string &dir) {
    Bundle b = fixture(name);
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) / (fixture_file_stem(name) + ".json")).string();
    save_structure(path, b);
    out << "wrote " << path << "\n";
  };
  if (!c.emit.empty()) {
    if (c.emit.size() != 2)
      throw Error(ErrorCode::InvalidInput, "--emit takes NAME DIR");
    emit(c.emit[0], c.emit[1]);
  }
  if (!c.emit_all.empty())
    for (const auto &f : fixture_catalog())
      emit(f.name, c.emit_all);
  if (c.sweep) {
    SweepReport rep = classify_dim2_prelie_fixtures();
    if (c.format == "json")
      out << render_json(rep).dump(2) << "\n";
    else
      out << render_text(rep);
    return rep.all_pass() ? 0 : 1;
  }
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact checker for pre-Lie (co/bi)algebra structures", "prelie-forge"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CheckCmd chk;
  auto *check = app.add_subcommand("check", "check a structure file against a law profile");
  check->add_option("file", chk.file, "structure file")->required();
  check->add_option("--laws", chk.laws, "comma-separated laws or profile aliases")->required();
  check->add_option("--format", chk.format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--pi", chk.pi, "pi descriptor, e.g. scale:1");
  check->add_option("--bind", chk.binds, "name=value");

  ConstructCmd con;
  auto *construct = app.add_subcommand("construct", "build derived structures");
  construct->add_option("file", con.file)->required();
  construct->add_option("--op", con.op)->required()->check(CLI::IsMember(
      {"delta-from-r", "circ-from-omega", "nijenhuis-from-pairing", "conijenhuis-from-pairing", "semidirect",
       "matched-pair", "pencil", "central-extension", "induce-lie", "lift-o-operator", "omega-from-r"}));
  construct->add_option("--arg,--args", con.args, "key=value (member names, name, s, t, pi)");
  construct->add_option("--out", con.out, "output file (default stdout)");

  SearchCmd sea;
  auto *search = app.add_subcommand("search", "enumerate a grid of candidate members");
  search->add_option("file", sea.file)->required();
  search->add_option("--unknown", sea.unknown)->check(CLI::IsMember({"operator", "symmetric-tensor", "form"}));
  search->add_option("--entries", sea.entries, "comma-separated rationals");
  search->add_option("--laws", sea.laws)->required();
  search->add_option("--member", sea.member, "member name of the unknown");
  search->add_flag("--symmetric", sea.symmetric, "forms: enumerate symmetric forms only");
  search->add_option("--bind", sea.binds, "name=value");
  search->add_option("--pi", sea.pi);
  search->add_flag("--allow-empty", sea.allow_empty, "exit 0 with no hits");
  search->add_option("--workers", sea.workers);
  search->add_option("--format", sea.format)->check(CLI::IsMember({"text", "json"}));

  FixturesCmd fix;
  auto *fixtures = app.add_subcommand("fixtures", "built-in example structures");
  fixtures->add_flag("--list", fix.list);
  fixtures->add_option("--emit", fix.emit, "NAME DIR")->expected(2);
  fixtures->add_option("--emit-all", fix.emit_all, "DIR");
  fixtures->add_flag("--sweep", fix.sweep, "check every fixture against its profile");
  fixtures->add_option("--format", fix.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion &) {
    out << tool_version() << "\n";
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed())
      return do_check(chk, out);
    if (construct->parsed())
      return do_construct(con, out);
    if (search->parsed())
      return do_search(sea, out);
    return do_fixtures(fix, out);
  } catch (const Error &e) {
    report_error(err, e);
    return 2;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: IO_ERROR: " << e.what() << "\n";
    return 2;
  }
}

} // namespace prelie
