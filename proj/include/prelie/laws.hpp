#pragma once

#include "prelie/structures.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

enum class LawId {
  PreLie,
  PreLieCo,
  PreLieBialg,
  SEquation,
  CoSEquation,
  PseudoHessian,
  PseudoHessianCo,
  Nijenhuis,
  CoNijenhuis,
  Rep,
  NijRep,
  Corep,
  AdmissibleS,
  AdmissibleBeta,
  AdmissibleNStar,
  NijPreLieBialg,
  MatchedPair,
  OOperatorWeak,
  OOperator,
  SNijSEquation,
  PencilCompat,
  PencilMorphism,
  PiAdmissible,
  Balanced,
  LieAlg,
  LieCo,
  LieBialg,
  NijLieBialg,
  Commutative,
  Cocommutative,
  SymmetricForm,
  SymmetricTensor,
};

const std::vector<LawId> &all_laws();
// Upper-case identifier, e.g. "PRE_LIE".
const char *law_name(LawId law);
// One-line summary of the members the law reads.
const char *law_reads(LawId law);
// Accepts LAW_NAME, law-name and the short aliases of the profile table.
std::optional<LawId> law_from_name(const std::string &name);
// Comma-separated list; profile aliases may expand to several laws.
// Throws UNKNOWN_LAW.
std::vector<LawId> resolve_profile(const std::string &spec);

struct ProfileAlias {
  const char *alias;
  std::vector<LawId> laws;
};
const std::vector<ProfileAlias> &profile_aliases();

enum class PiFamily { Scale, Reflect, Invert };

// Pi(t) = theta*t, -t + theta, theta/t respectively.
struct PiDescriptor {
  PiFamily family = PiFamily::Scale;
  Scalar theta = Scalar(1L);
};
// "scale:1", "reflect:2", "invert:-1/2". Throws INVALID_INPUT.
PiDescriptor parse_pi(const std::string &text);
// Theta must be +-1 for scale and nonzero otherwise. Throws INVALID_INPUT.
void check_pi(const PiDescriptor &pi);
const char *pi_family_name(PiFamily f);

struct CheckOptions {
  std::optional<PiDescriptor> pi;
  // Stop after the first nonzero entry (used by search).
  bool stop_at_first = false;
};

// Indices are 0-based internally; reports print them 1-based.
struct ResidualEntry {
  std::string clause;
  std::vector<std::size_t> input;
  std::vector<std::size_t> output;
  Scalar value;
};

struct Residual {
  LawId law = LawId::PreLie;
  std::vector<ResidualEntry> entries;
  bool passes() const;
};

Residual check(LawId law, const Bundle &b, const CheckOptions &opts = {});
bool passes(LawId law, const Bundle &b, const CheckOptions &opts = {});
std::map<LawId, Residual> check_composite(const Bundle &b, const std::vector<LawId> &profile,
                                          const CheckOptions &opts = {});

// Literal transcription of the corepresentation axioms, with eta applied to
// the V-components of xi as printed. Not used by COREP; kept for comparison.
Residual corep_literal(const CoalgebraStructure &C, const Corepresentation &cr);

} // namespace prelie
