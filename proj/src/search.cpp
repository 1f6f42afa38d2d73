#include "prelie/search.hpp"

#include "prelie/fixtures.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace prelie {

namespace {

struct Slot {
  std::size_t i, j;
};

Matrix &target(Bundle &b, const GridSpec &spec, const std::string &name) {
  switch (spec.kind) {
  case UnknownKind::Operator:
    return b.operators[name].mat;
  case UnknownKind::SymmetricTensor:
    return b.tensors[name].mat;
  case UnknownKind::Form:
    return b.forms[name].mat;
  }
  throw Error(ErrorCode::InvalidInput, "bad unknown kind");
}

std::string member_of(const GridSpec &spec) {
  return spec.member.empty() ? default_member(spec.kind) : spec.member;
}

// Shape of the unknown: an existing member fixes it, else dim x dim.
std::pair<std::size_t, std::size_t> shape(const Bundle &b, const GridSpec &spec) {
  std::string name = member_of(spec);
  if (spec.kind == UnknownKind::Operator) {
    auto it = b.operators.find(name);
    if (it != b.operators.end())
      return {it->second.mat.rows(), it->second.mat.cols()};
  }
  return {b.dim, b.dim};
}

bool upper_only(const GridSpec &spec) {
  return spec.kind == UnknownKind::SymmetricTensor || (spec.kind == UnknownKind::Form && spec.symmetric);
}

std::vector<Slot> slots(const Bundle &b, const GridSpec &spec) {
  auto [rows, cols] = shape(b, spec);
  std::vector<Slot> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = upper_only(spec) ? i : 0; j < cols; ++j)
      out.push_back({i, j});
  return out;
}

// Writes candidate idx into m; symmetric kinds mirror the upper triangle.
void fill(Matrix &m, const std::vector<Slot> &sl, const std::vector<Scalar> &vals, std::size_t idx,
          bool mirror) {
  std::size_t base = vals.size();
  for (std::size_t p = sl.size(); p-- > 0;) {
    const Scalar &v = vals[idx % base];
    idx /= base;
    m.at(sl[p].i, sl[p].j) = v;
    if (mirror)
      m.at(sl[p].j, sl[p].i) = v;
  }
}

std::size_t grid_size(std::size_t base, std::size_t free, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < free; ++k) {
    if (total > cap / base)
      throw Error(ErrorCode::GridTooLarge, std::to_string(base) + "^" + std::to_string(free) +
                                               " candidates exceed the cap of " +
                                               std::to_string(cap));
    total *= base;
  }
  if (total > cap)
    throw Error(ErrorCode::GridTooLarge, "grid exceeds the cap of " + std::to_string(cap));
  return total;
}

} // namespace

const char *unknown_kind_name(UnknownKind k) {
  switch (k) {
  case UnknownKind::Operator: return "operator";
  case UnknownKind::SymmetricTensor: return "symmetric-tensor";
  case UnknownKind::Form: return "form";
  }
  return "?";
}

std::string default_member(UnknownKind k) {
  switch (k) {
  case UnknownKind::Operator: return "N";
  case UnknownKind::SymmetricTensor: return "r";
  case UnknownKind::Form: return "omega";
  }
  return "";
}

std::size_t free_entries(const Bundle &tmpl, const GridSpec &spec) { return slots(tmpl, spec).size(); }

Bundle grid_candidate(const Bundle &tmpl, const GridSpec &spec, std::size_t idx) {
  Bundle b = tmpl;
  std::string name = member_of(spec);
  auto [rows, cols] = shape(tmpl, spec);
  Matrix &m = target(b, spec, name);
  m = Matrix(rows, cols);
  std::vector<Scalar> vals(spec.entries.begin(), spec.entries.end());
  fill(m, slots(tmpl, spec), vals, idx, upper_only(spec));
  return b;
}

SearchReport grid_search(const Bundle &tmpl, const GridSpec &spec, const std::vector<LawId> &laws,
                         const CheckOptions &opts) {
  if (spec.entries.empty())
    throw Error(ErrorCode::InvalidInput, "entry set is empty");
  if (!is_numeric(tmpl))
    throw Error(ErrorCode::SymbolicTemplate, "template has unbound parameters; bind them first");
  if (opts.pi && !opts.pi->theta.is_constant())
    throw Error(ErrorCode::SymbolicTemplate, "Pi descriptor theta must be numeric");
  std::vector<Slot> sl = slots(tmpl, spec);
  std::size_t total = grid_size(spec.entries.size(), sl.size(), spec.cap);
  std::string name = member_of(spec);
  auto [rows, cols] = shape(tmpl, spec);
  std::vector<Scalar> vals(spec.entries.begin(), spec.entries.end());
  CheckOptions o = opts;
  o.stop_at_first = true;

  unsigned workers = std::max(1u, spec.workers);
  if (workers > total)
    workers = static_cast<unsigned>(std::max<std::size_t>(1, total));
  std::vector<std::vector<std::size_t>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      Bundle b = tmpl;
      Matrix &m = target(b, spec, name);
      m = Matrix(rows, cols);
      for (std::size_t idx = w; idx < total; idx += workers) {
        fill(m, sl, vals, idx, upper_only(spec));
        bool ok = true;
        for (LawId l : laws)
          if (!passes(l, b, o)) {
            ok = false;
            break;
          }
        if (ok)
          found[w].push_back(idx);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (auto &t : pool)
      t.join();
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  SearchReport rep;
  rep.laws = laws;
  rep.member = name;
  rep.kind = spec.kind;
  rep.total = total;
  for (auto &f : found)
    rep.hit_indices.insert(rep.hit_indices.end(), f.begin(), f.end());
  std::sort(rep.hit_indices.begin(), rep.hit_indices.end());
  for (std::size_t idx : rep.hit_indices)
    rep.hits.push_back(grid_candidate(tmpl, spec, idx));
  return rep;
}

std::map<LawId, FamilyVerdict> verify_family(const Bundle &b, const std::vector<LawId> &laws,
                                             const CheckOptions &opts) {
  std::map<LawId, FamilyVerdict> out;
  for (LawId l : laws) {
    Residual r = check(l, b, opts);
    FamilyVerdict v;
    for (const auto &e : r.entries) {
      if (e.value.is_zero())
        continue;
      v.pass = false;
      if (std::find(v.factors.begin(), v.factors.end(), e.value) == v.factors.end())
        v.factors.push_back(e.value);
    }
    out[l] = std::move(v);
  }
  return out;
}

bool SweepReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.pass; });
}

SweepReport classify_dim2_prelie_fixtures() {
  SweepReport rep;
  for (const auto &info : fixture_catalog()) {
    SweepRow row;
    row.fixture = info.name;
    row.profile = info.profile;
    row.verdicts = verify_family(fixture(info.name), info.profile);
    for (const auto &[_, v] : row.verdicts)
      row.pass = row.pass && v.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace prelie
