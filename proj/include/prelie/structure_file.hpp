#pragma once

#include "prelie/structures.hpp"

#include <json.hpp>

#include <string>

namespace prelie {

using Json = nlohmann::ordered_json;

// Throws PARSE_ERROR (with member path and offset), DIM_MISMATCH, INVALID_INPUT.
Bundle bundle_from_json(const Json &doc);
Json bundle_to_json(const Bundle &b);

// Throws IO_ERROR when the file cannot be read or is not JSON.
Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &doc);
Bundle load_structure(const std::string &path);
void save_structure(const std::string &path, const Bundle &b);

// Member encoders; used to append derived members to an existing document.
Json mul_to_json(const AlgebraStructure &A, const ParamRing &ring);
Json comul_to_json(const CoalgebraStructure &C, const ParamRing &ring);
Json matrix_to_json(const Matrix &m, const ParamRing &ring);
Json rep_to_json(const Representation &r, const ParamRing &ring);
Json corep_to_json(const Corepresentation &c, const ParamRing &ring);

} // namespace prelie
