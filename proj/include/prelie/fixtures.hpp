#pragma once

#include "prelie/laws.hpp"

#include <map>
#include <string>
#include <vector>

namespace prelie {

struct FixtureInfo {
  std::string name;
  std::string summary;
  // Laws the source example asserts for this data.
  std::vector<LawId> profile;
};

const std::vector<FixtureInfo> &fixture_catalog();
const FixtureInfo &fixture_info(const std::string &name);
// Throws UNKNOWN_FIXTURE; bindings go through substitute().
Bundle fixture(const std::string &name, const std::map<std::string, Rational> &bindings = {});

} // namespace prelie
