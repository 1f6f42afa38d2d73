#pragma once

#include "prelie/laws.hpp"

#include <map>
#include <string>
#include <vector>

namespace prelie {

enum class UnknownKind { Operator, SymmetricTensor, Form };

const char *unknown_kind_name(UnknownKind k);

struct GridSpec {
  std::vector<Rational> entries = {Rational(-1), Rational(0), Rational(1)};
  UnknownKind kind = UnknownKind::Operator;
  // Empty: "N", "r" or "omega" by kind.
  std::string member;
  // Forms only; symmetric tensors are always enumerated on the upper triangle.
  bool symmetric = false;
  std::size_t cap = 10'000'000;
  unsigned workers = 1;
};

struct SearchReport {
  std::vector<LawId> laws;
  std::string member;
  UnknownKind kind = UnknownKind::Operator;
  std::size_t total = 0;
  // Enumeration indices of the hits, ascending.
  std::vector<std::size_t> hit_indices;
  std::vector<Bundle> hits;
};

std::string default_member(UnknownKind k);
// Number of free entries for the unknown of this template.
std::size_t free_entries(const Bundle &tmpl, const GridSpec &spec);
// The candidate with enumeration index idx (row-major, first entry slowest).
Bundle grid_candidate(const Bundle &tmpl, const GridSpec &spec, std::size_t idx);
// Throws GRID_TOO_LARGE, SYMBOLIC_TEMPLATE.
SearchReport grid_search(const Bundle &tmpl, const GridSpec &spec, const std::vector<LawId> &laws,
                         const CheckOptions &opts = {});

struct FamilyVerdict {
  bool pass = true;
  // Distinct nonzero residual values.
  std::vector<Scalar> factors;
};

std::map<LawId, FamilyVerdict> verify_family(const Bundle &b, const std::vector<LawId> &laws,
                                             const CheckOptions &opts = {});

struct SweepRow {
  std::string fixture;
  std::vector<LawId> profile;
  std::map<LawId, FamilyVerdict> verdicts;
  bool pass = true;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool all_pass() const;
};

// Every catalog fixture against its asserted profile.
SweepReport classify_dim2_prelie_fixtures();

} // namespace prelie
