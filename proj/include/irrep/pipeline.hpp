// End-to-end procedure: decide existence of an irreducible n-dimensional
// representation, construct a concrete one, verify candidate points.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrep/genmat.hpp"
#include "irrep/lift.hpp"
#include "irrep/presentation.hpp"

namespace irrep {

enum class Decision { Exists, NotExists, Unknown };

std::string decision_str(Decision d);

struct CandidateRecord {
  std::string descriptor;
  Membership verdict = Membership::Unknown;
  GroebnerStats stats;
};

struct DecisionReport {
  Decision status = Decision::Unknown;
  std::string field;
  std::string strategy;
  std::uint32_t n = 1;
  std::vector<std::string> hints;
  std::optional<std::string> witness_descriptor;
  std::optional<Polynomial> witness;      // over the representation ring
  std::uint64_t enumerated = 0;           // descriptors considered
  std::uint64_t tested = 0;               // radical-membership runs
  std::uint64_t skipped_zero = 0;
  std::uint64_t skipped_dedup = 0;
  GroebnerStats rel_basis_stats;
  std::vector<CandidateRecord> candidates;
  double wall_seconds = 0;
  std::vector<std::string> notes;
};

struct DecideOptions {
  Strategy strategy = Strategy::Trace;
  Budget budget;
  bool ch_prune = true;
  std::uint64_t det_cap = 1000000;
};

DecisionReport decide(const Presentation& pres, const DecideOptions& opt);

struct RepresentationPoint {
  std::uint32_t n = 1;
  FieldSpec field;
  std::vector<std::string> gens;
  ExtensionTower tower;
  std::vector<Mat<TowerElem>> mats;             // one per generator
  std::optional<std::string> witness_descriptor;
  std::optional<TowerElem> witness_value;
};

enum class ConstructStatus { Ok, Failed, Unknown };

struct ConstructResult {
  ConstructStatus status = ConstructStatus::Unknown;
  RepresentationPoint point;  // valid when status == Ok
  std::uint32_t attempts = 0;
  std::uint64_t seed = 0;
  GroebnerStats grevlex_stats, lex_stats;
  std::vector<std::string> notes;
};

struct ConstructOptions {
  Budget budget;
  std::uint64_t seed = 0;
  std::uint32_t max_retries = 32;
};

// y is the witness polynomial over the representation ring of pres; the
// constructed point satisfies every relation exactly and makes y invertible
ConstructResult construct(const Presentation& pres, const Polynomial& y,
                          const ConstructOptions& opt,
                          const std::optional<std::string>& witness_descriptor = std::nullopt);

struct VerificationReport {
  bool relations_hold = false;
  std::optional<std::size_t> failed_relation;   // first failing relation index
  std::optional<std::pair<std::uint32_t, std::uint32_t>> failed_entry;
  std::string failed_value;                     // entry value when a relation fails
  std::uint32_t rank = 0;
  std::uint32_t full_rank = 0;                  // n^2
  bool irreducible = false;
  std::optional<std::string> witness_descriptor;
  std::string witness_value;
  bool witness_invertible = false;
  std::vector<std::string> notes;
};

// ch_prune must match the setting the witness descriptor was produced under,
// since descriptors index the pruned word set
VerificationReport verify(const Presentation& pres, const RepresentationPoint& point,
                          bool ch_prune = true);

// true iff every generator of rel vanishes at the point and y is invertible
bool certify_by_point(const Polynomial& y, const RelIdeal& rel, const RepresentationPoint& point);

}  // namespace irrep
