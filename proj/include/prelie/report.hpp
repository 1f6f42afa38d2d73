#pragma once

#include "prelie/search.hpp"
#include "prelie/structure_file.hpp"

#include <string>

namespace prelie {

const char *tool_version();

struct Provenance {
  std::string file;
  std::string profile;
};

struct CheckReport {
  Provenance prov;
  ParamRing ring;
  // Rendered "expr != 0" lines; annotations only.
  std::vector<std::string> assumptions;
  std::vector<Residual> results;
  bool pass() const;
};

CheckReport make_check_report(const Bundle &b, const std::vector<LawId> &laws, const Provenance &prov,
                              const CheckOptions &opts = {});

// Indices are printed 1-based in both renderings.
std::string render_text(const CheckReport &r);
Json render_json(const CheckReport &r);

std::string render_text(const SearchReport &r, const Provenance &prov, const ParamRing &ring);
Json render_json(const SearchReport &r, const Provenance &prov, const ParamRing &ring);

std::string render_text(const SweepReport &r);
Json render_json(const SweepReport &r);

} // namespace prelie
