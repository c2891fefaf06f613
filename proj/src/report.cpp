#include "irrep/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace irrep {

namespace {

using nlohmann::json;

json stats_json(const GroebnerStats& s) {
  return json{{"spairs", s.spairs_processed},
              {"reductions_to_zero", s.reductions_to_zero},
              {"max_degree", s.max_degree},
              {"basis_size", s.basis_size},
              {"wall_seconds", s.wall_seconds},
              {"budget_exhausted", s.budget_exhausted},
              {"exhausted_reason", s.exhausted_reason}};
}

std::string stats_line(const GroebnerStats& s) {
  std::ostringstream out;
  out << s.spairs_processed << " s-pairs, basis " << s.basis_size << ", max degree "
      << s.max_degree << ", " << s.wall_seconds << " s";
  if (s.budget_exhausted) out << " (budget: " << s.exhausted_reason << ")";
  return out.str();
}

std::string construct_status_str(ConstructStatus s) {
  switch (s) {
    case ConstructStatus::Ok: return "ok";
    case ConstructStatus::Failed: return "failed";
    case ConstructStatus::Unknown: return "unknown";
  }
  return "unknown";
}

// level polynomial rendered over the tower below it, in the variable "t"
std::string level_str(const ExtensionTower& tw, std::size_t level) {
  ExtensionTower sub(tw.field);
  sub.levels.assign(tw.levels.begin(), tw.levels.begin() + (level - 1));
  return up_str(sub, tw.levels[level - 1].minpoly, "t");
}

json point_json(const RepresentationPoint& pt) {
  json tower = json::array();
  for (std::size_t i = 1; i <= pt.tower.height(); ++i)
    tower.push_back(json{{"name", pt.tower.levels[i - 1].name}, {"polynomial", level_str(pt.tower, i)}});
  json matrices = json::array();
  for (std::size_t l = 0; l < pt.mats.size(); ++l) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < pt.n; ++i) {
      json row = json::array();
      for (std::uint32_t j = 0; j < pt.n; ++j) row.push_back(pt.tower.str(pt.mats[l].at(i, j)));
      rows.push_back(row);
    }
    matrices.push_back(json{{"generator", pt.gens[l]}, {"rows", rows}});
  }
  json w = nullptr;
  if (pt.witness_descriptor) {
    w = json{{"descriptor", *pt.witness_descriptor}};
    w["value"] = pt.witness_value ? json(pt.tower.str(*pt.witness_value)) : json(nullptr);
  }
  return json{{"dimension", pt.n},
              {"field", pt.field.str()},
              {"tower", tower},
              {"matrices", matrices},
              {"witness", w}};
}

void point_text(std::ostream& out, const RepresentationPoint& pt) {
  for (std::size_t i = 1; i <= pt.tower.height(); ++i)
    out << "tower: " << pt.tower.levels[i - 1].name << " = " << level_str(pt.tower, i) << "\n";
  for (std::size_t l = 0; l < pt.mats.size(); ++l) {
    out << "matrix " << pt.gens[l] << ": [";
    for (std::uint32_t i = 0; i < pt.n; ++i) {
      if (i) out << ", ";
      out << "[";
      for (std::uint32_t j = 0; j < pt.n; ++j) {
        if (j) out << ", ";
        out << pt.tower.str(pt.mats[l].at(i, j));
      }
      out << "]";
    }
    out << "]\n";
  }
  if (pt.witness_descriptor) {
    out << "witness: " << *pt.witness_descriptor;
    if (pt.witness_value) out << " = " << pt.tower.str(*pt.witness_value);
    out << "\n";
  }
}

}  // namespace

std::string decision_json(const DecisionReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates)
    cands.push_back(json{{"descriptor", c.descriptor},
                         {"verdict", membership_str(c.verdict)},
                         {"stats", stats_json(c.stats)}});
  json w = nullptr;
  if (r.witness_descriptor) {
    w = json{{"descriptor", *r.witness_descriptor}};
    w["polynomial"] = r.witness ? json(r.witness->str()) : json(nullptr);
  }
  json j{{"kind", "decision"},
         {"status", decision_str(r.status)},
         {"field", r.field},
         {"strategy", r.strategy},
         {"dimension", r.n},
         {"hints", r.hints},
         {"witness", w},
         {"counts",
          json{{"enumerated", r.enumerated},
               {"tested", r.tested},
               {"skipped_zero", r.skipped_zero},
               {"skipped_dedup", r.skipped_dedup}}},
         {"relation_basis", stats_json(r.rel_basis_stats)},
         {"candidates", cands},
         {"wall_seconds", r.wall_seconds},
         {"notes", r.notes}};
  return j.dump(2) + "\n";
}

std::string decision_text(const DecisionReport& r) {
  std::ostringstream out;
  out << "status: " << decision_str(r.status) << "\n";
  out << "field: " << r.field << "\n";
  out << "strategy: " << r.strategy << "\n";
  out << "dimension: " << r.n << "\n";
  for (const auto& h : r.hints) out << "hint: " << h << "\n";
  if (r.witness_descriptor) {
    out << "witness: " << *r.witness_descriptor << "\n";
    if (r.witness) out << "witness polynomial: " << r.witness->str() << "\n";
  }
  out << "counts: enumerated " << r.enumerated << ", tested " << r.tested << ", skipped zero "
      << r.skipped_zero << ", skipped dedup " << r.skipped_dedup << "\n";
  out << "relation basis: " << stats_line(r.rel_basis_stats) << "\n";
  for (const auto& c : r.candidates)
    out << "candidate " << c.descriptor << ": " << membership_str(c.verdict) << " ("
        << stats_line(c.stats) << ")\n";
  out << "wall seconds: " << r.wall_seconds << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string construct_json(const ConstructResult& r) {
  json j{{"kind", "construct"},
         {"status", construct_status_str(r.status)},
         {"attempts", r.attempts},
         {"seed", r.seed},
         {"grevlex", stats_json(r.grevlex_stats)},
         {"lex", stats_json(r.lex_stats)},
         {"point", r.status == ConstructStatus::Ok ? point_json(r.point) : json(nullptr)},
         {"notes", r.notes}};
  return j.dump(2) + "\n";
}

std::string construct_text(const ConstructResult& r) {
  std::ostringstream out;
  out << "status: " << construct_status_str(r.status) << "\n";
  out << "attempts: " << r.attempts << "\n";
  out << "seed: " << r.seed << "\n";
  out << "grevlex basis: " << stats_line(r.grevlex_stats) << "\n";
  out << "lex basis: " << stats_line(r.lex_stats) << "\n";
  if (r.status == ConstructStatus::Ok) point_text(out, r.point);
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string verification_json(const VerificationReport& r) {
  json fe = nullptr;
  if (r.failed_entry) fe = json::array({r.failed_entry->first, r.failed_entry->second});
  json w = nullptr;
  if (r.witness_descriptor)
    w = json{{"descriptor", *r.witness_descriptor},
             {"value", r.witness_value},
             {"invertible", r.witness_invertible}};
  json j{{"kind", "verification"},
         {"relations_hold", r.relations_hold},
         {"failed_relation", r.failed_relation ? json(*r.failed_relation) : json(nullptr)},
         {"failed_entry", fe},
         {"failed_value", r.relations_hold ? json(nullptr) : json(r.failed_value)},
         {"rank", r.rank},
         {"full_rank", r.full_rank},
         {"irreducible", r.irreducible},
         {"witness", w},
         {"notes", r.notes}};
  return j.dump(2) + "\n";
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "relations hold: " << (r.relations_hold ? "yes" : "no") << "\n";
  if (!r.relations_hold && r.failed_relation)
    out << "failed relation: #" << (*r.failed_relation + 1) << " at entry ("
        << r.failed_entry->first << ", " << r.failed_entry->second << ") = " << r.failed_value
        << "\n";
  out << "span rank: " << r.rank << " of " << r.full_rank << "\n";
  out << "irreducible: " << (r.irreducible ? "yes" : "no") << "\n";
  if (r.witness_descriptor) {
    out << "witness: " << *r.witness_descriptor << " = " << r.witness_value
        << (r.witness_invertible ? " (invertible)" : " (not invertible)") << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace irrep
