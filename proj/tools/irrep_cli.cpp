// Command-line driver: decide / construct / verify / print.
// Exit codes: 0 Exists or verified ok, 1 NotExists, 2 Unknown, 3 usage or
// parse error, 4 construction failed, 5 reducible, 6 a relation fails.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "irrep/expr.hpp"
#include "irrep/pipeline.hpp"
#include "irrep/point_io.hpp"
#include "irrep/report.hpp"

using namespace irrep;

namespace {

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 3;
}

std::optional<std::string> read_file(const std::string& path, std::string* err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *err = "cannot open '" + path + "'";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<FieldSpec> parse_field(const std::string& s) {
  if (s == "QQ") return FieldSpec::QQ();
  if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')') {
    try {
      std::size_t used = 0;
      std::string digits = s.substr(3, s.size() - 4);
      unsigned long long p = std::stoull(digits, &used);
      if (used != digits.size() || !is_prime_u64(p)) return std::nullopt;
      return FieldSpec::GF(p);
    } catch (...) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Scalar convert_scalar(const Scalar& c, const FieldSpec& f) {
  if (c.is_rational_form()) return Scalar::from_mpq(c.rat(), f);
  return Scalar::of_int((long)c.res_value(), f);
}

// re-coerce relation coefficients into the override field
Presentation with_field(const Presentation& p, const FieldSpec& f) {
  if (p.field.p == f.p) return p;
  Presentation q = p;
  q.field = f;
  q.relations.clear();
  for (const auto& r : p.relations) {
    NcPolynomial::TermVec ts;
    for (const auto& [w, c] : r.terms()) ts.emplace_back(w, convert_scalar(c, f));
    q.relations.push_back(NcPolynomial::from_terms(f, r.ngens(), std::move(ts)));
  }
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide, construct and verify irreducible matrix representations "
               "of finitely presented algebras"};
  app.require_subcommand(1);

  std::string file, point_file, out_file, strategy = "trace", field_str;
  std::uint64_t budget_spairs = 0, seed = 0;
  double budget_seconds = 0;
  bool json = false, no_ch = false;

  auto add_common = [&](CLI::App* c, bool with_search) {
    c->add_option("file", file, "presentation file")->required();
    c->add_flag("--json", json, "emit the JSON report");
    c->add_flag("--no-ch-prune", no_ch, "keep words with a letter repeated n times in a row");
    if (with_search) {
      c->add_option("--strategy", strategy, "trace | det | commutator (default trace)");
      c->add_option("--budget-spairs", budget_spairs, "max S-pairs per basis run, 0 = unlimited");
      c->add_option("--budget-seconds", budget_seconds, "wall-clock budget in seconds, 0 = unlimited");
      c->add_option("--field", field_str, "override the presentation field (QQ or GF(p))");
    }
  };

  CLI::App* cd = app.add_subcommand("decide", "decide existence of an irreducible representation");
  add_common(cd, true);
  CLI::App* cc = app.add_subcommand("construct", "decide, then construct a representation");
  add_common(cc, true);
  cc->add_option("--seed", seed, "seed for free-variable specialization");
  cc->add_option("-o,--out", out_file, "write the constructed point file here");
  CLI::App* cv = app.add_subcommand("verify", "verify a point against a presentation");
  add_common(cv, false);
  cv->add_option("--point", point_file, "point file")->required();
  CLI::App* cp = app.add_subcommand("print", "re-emit the presentation canonically");
  cp->add_option("file", file, "presentation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    std::string err;
    auto text = read_file(file, &err);
    if (!text) return fail(err);
    Presentation pres = parse_presentation(*text);
    if (!field_str.empty()) {
      auto f = parse_field(field_str);
      if (!f) return fail("bad --field '" + field_str + "' (expected QQ or GF(p), p prime)");
      pres = with_field(pres, *f);
    }
    Budget budget{budget_spairs, 0, budget_seconds};

    if (app.got_subcommand(cp)) {
      std::cout << print_presentation(pres);
      return 0;
    }

    if (app.got_subcommand(cv)) {
      auto ptext = read_file(point_file, &err);
      if (!ptext) return fail(err);
      RepresentationPoint pt = parse_point(*ptext, pres);
      VerificationReport rep = verify(pres, pt, !no_ch);
      std::cout << (json ? verification_json(rep) : verification_text(rep));
      if (!rep.relations_hold) return 6;
      return rep.irreducible ? 0 : 5;
    }

    auto st = strategy_from(strategy);
    if (!st) return fail("bad --strategy '" + strategy + "' (expected trace, det or commutator)");
    DecideOptions dopt{*st, budget, !no_ch, 1000000};
    DecisionReport drep = decide(pres, dopt);

    if (app.got_subcommand(cd) || drep.status != Decision::Exists) {
      std::cout << (json ? decision_json(drep) : decision_text(drep));
      switch (drep.status) {
        case Decision::Exists: return 0;
        case Decision::NotExists: return 1;
        case Decision::Unknown: return 2;
      }
      return 2;
    }

    ConstructOptions copts{budget, seed, 32};
    ConstructResult crep = construct(pres, *drep.witness, copts, drep.witness_descriptor);
    std::cout << (json ? construct_json(crep) : construct_text(crep));
    if (crep.status == ConstructStatus::Ok && !out_file.empty()) {
      std::ofstream o(out_file);
      if (!o) return fail("cannot write '" + out_file + "'");
      o << print_point(crep.point);
    }
    if (crep.status == ConstructStatus::Ok) return 0;
    return crep.status == ConstructStatus::Failed ? 4 : 2;
  } catch (const irrep::ParseError& e) {
    return fail(e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}
