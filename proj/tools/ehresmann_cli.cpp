/*
 *   Copyright 2026 The ehresmann authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: check, iso and rep pipelines over a semigroup read
// from JSON or generated from a zoo spec.
//
// Exit codes: 0 pass, 1 verified failure (the report carries a witness),
// 2 input error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ehresmann/ehresmann.hpp"

namespace {

  using namespace ehresmann;

  constexpr int exit_pass    = 0;
  constexpr int exit_failure = 1;
  constexpr int exit_input   = 2;

  struct RunConfig {
    std::string              command;
    std::string              input_path;
    std::string              zoo_spec;
    std::string              order = "r";
    std::string              report_path;
    std::string              category_path;
    unsigned                 workers     = 1;
    std::optional<std::size_t> semilattice;

    Order order_choice() const {
      return order == "l" ? Order::left : Order::right;
    }

    Json to_json() const {
      Json j;
      j["command"] = command;
      if (!zoo_spec.empty()) {
        j["zoo"] = zoo_spec;
      } else {
        j["input"] = input_path;
      }
      j["order"]   = order;
      j["workers"] = workers;
      if (semilattice) {
        j["semilattice"] = *semilattice;
      }
      return j;
    }
  };

  // Raised for problems with the input itself (exit 2).
  struct InputError {
    Error error;
  };

  Json error_json(Error const& e) {
    return Json{{"kind", to_string(e.kind())},
                {"message", e.what()},
                {"witness", e.witness()}};
  }

  struct Loaded {
    FiniteSemigroup    semigroup;
    std::vector<Index> semilattice;
    // Set when the zoo generator already derived the structure.
    std::optional<EhresmannStructure> structure;
  };

  Loaded load(RunConfig const& cfg) {
    try {
      if (!cfg.zoo_spec.empty()) {
        auto es = from_zoo_spec(cfg.zoo_spec);
        return Loaded{es.semigroup(), es.semilattice(), std::move(es)};
      }
      auto in = read_semigroup_file(cfg.input_path);
      if (in.semilattice) {
        return Loaded{std::move(in.semigroup), *in.semilattice, std::nullopt};
      }
      auto const candidates = maximal_subsemilattices(in.semigroup);
      if (!cfg.semilattice || *cfg.semilattice >= candidates.size()) {
        std::string list;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          list += "\n  " + std::to_string(i) + ": "
                  + Json(candidates[i]).dump();
        }
        throw Error(ErrorKind::bad_parameter,
                    "input has no \"E\"; choose a maximal subsemilattice with "
                    "--semilattice K:"
                        + list);
      }
      return Loaded{std::move(in.semigroup), candidates[*cfg.semilattice],
                    std::nullopt};
    } catch (Error const& e) {
      throw InputError{e};
    }
  }

  std::string classification(bool left, bool right) {
    if (left && right) {
      return "restriction";
    }
    if (left) {
      return "left restriction";
    }
    if (right) {
      return "right restriction";
    }
    return "neither left nor right restriction";
  }

  Json restriction_witness(RestrictionCheck const& r) {
    if (r.witness) {
      return Json{{"a", r.witness->first}, {"e", r.witness->second}};
    }
    return nullptr;
  }

  Json pair_or_null(std::optional<std::pair<Index, Index>> const& p) {
    return p ? Json::array({p->first, p->second}) : Json(nullptr);
  }

  // Returns the exit code; fills j.
  int cmd_check(EhresmannStructure const& es, Json& j, std::ostream& out) {
    auto const left  = is_left_restriction(es);
    auto const right = is_right_restriction(es);
    auto const label = classification(left.holds, right.holds);
    j["classification"] = {{"e_ehresmann", true},
                           {"left_restriction", left.holds},
                           {"right_restriction", right.holds},
                           {"label", label}};
    j["restriction_witnesses"] = {{"left", restriction_witness(left)},
                                  {"right", restriction_witness(right)}};
    auto const variety = check_variety(es);
    j["variety"]       = to_json(variety);

    auto const oc = order_containment(es);
    j["order_containment"] = {{"l_in_r", oc.l_in_r},
                              {"r_in_l", oc.r_in_l},
                              {"l_not_in_r", pair_or_null(oc.l_not_in_r)},
                              {"r_not_in_l", pair_or_null(oc.r_not_in_l)},
                              {"consistent", oc.consistent()}};

    auto const c      = build_category(es);
    auto const axioms = verify_axioms(c);
    j["axioms"]       = to_json(axioms);
    bool const round_trip
        = rebuild_semigroup(c).semigroup() == es.semigroup();
    j["round_trip"] = round_trip;

    bool const passed = variety.passed() && oc.consistent()
                        && axioms.passed() && round_trip;
    j["passed"] = passed;

    out << "E-Ehresmann: yes (" << es.size() << " elements, |E| = "
        << es.semilattice().size() << ")\n"
        << "classification: " << label << "\n";
    if (left.witness) {
      auto [a, e] = *left.witness;
      out << "  not left restriction: a = " << es.name(a)
          << ", e = " << es.name(e) << "\n";
    }
    if (right.witness) {
      auto [a, e] = *right.witness;
      out << "  not right restriction: a = " << es.name(a)
          << ", e = " << es.name(e) << "\n";
    }
    out << "variety identities: " << (variety.passed() ? "pass" : "FAIL")
        << "\ncategory axioms: " << (axioms.passed() ? "pass" : "FAIL")
        << "\nround trip S(C(S)) = S: " << (round_trip ? "pass" : "FAIL")
        << "\n";
    return passed ? exit_pass : exit_failure;
  }

  int cmd_iso(EhresmannStructure const& es,
              RunConfig const&          cfg,
              Json&                     j,
              std::ostream&             out) {
    auto const r   = verify_isomorphism(es, cfg.order_choice(), cfg.workers);
    Json const rep = to_json(r, es);
    for (auto const& [k, v] : rep.items()) {
      j[k] = v;
    }
    out << "order: " << cfg.order << (r.theorem_applies ? "" : " (theorem does not apply)")
        << "\nbijection (psi phi = id, phi psi = id): "
        << (r.bijection() ? "pass" : "FAIL") << "\nhomomorphism: "
        << r.pairs_checked << " basis pairs checked, "
        << r.case1_failures.size() << " case-1 and "
        << r.case2_failures.size() << " case-2 failures\n";
    if (r.witness) {
      auto const& w    = *r.witness;
      auto const  name = [&](Index x) { return es.name(x); };
      out << "first failing pair: a = " << es.name(w.a)
          << ", b = " << es.name(w.b) << ", ab = " << es.name(w.ab) << "\n"
          << "  phi(a)       = " << format(w.phi_a, name) << "\n"
          << "  phi(b)       = " << format(w.phi_b, name) << "\n"
          << "  phi(ab)      = " << format(w.phi_ab, name) << "\n"
          << "  phi(a)phi(b) = " << format(w.phi_a_phi_b, name) << "\n";
    }
    return r.passed() ? exit_pass : exit_failure;
  }

  int cmd_rep(EhresmannStructure const& es, Json& j, std::ostream& out) {
    auto const c   = build_category(es);
    auto const reg = reg_E(es);
    auto const ei  = is_EI(es, c);
    bool       ok  = ei.criteria_agree()
              && invertible_morphisms(es, c) == invertible_morphisms_by_search(c);

    j["reg_e_size"] = reg.size();
    j["reg_e"]      = reg.elements;
    j["is_EI"]      = ei.is_ei;

    std::optional<RadicalSpan> span;
    std::size_t                radical_dim = 0;
    if (ei.is_ei) {
      span        = radical_span(es, c);
      radical_dim = span->dimension();
      ok          = ok && span->passed();
    } else {
      radical_dim
          = radical_oracle(StructureConstants::from_category(c)).dimension;
    }
    j["radical_dim"] = radical_dim;

    auto const image   = semisimple_image_data(es, c);
    bool const applies = image.within_theorem();
    bool const check   = applies && image.passed();
    if (applies) {
      ok = ok && image.passed();
    }
    j["semisimple_check"] = check;
    if (!applies) {
      j["semisimple_gate"] = (!image.left_restriction && !image.right_restriction)
                                 ? "not restriction"
                                 : "not EI";
    } else {
      j["semisimple_gate"] = nullptr;
    }
    j["ei_details"]        = to_json(ei);
    j["radical"]           = span ? to_json(*span) : Json(nullptr);
    j["semisimple_image"]  = to_json(image);
    j["quotient_dimension"] = es.size() - image.radical_dimension;
    j["passed"]            = ok;

    out << "|Reg_E(S)| = " << reg.size() << "\nEI: " << (ei.is_ei ? "yes" : "no")
        << "\ndim Rad(QC) = " << radical_dim
        << "\ndim Rad(QS) = " << image.radical_dimension << "\nsemisimple image: ";
    if (applies) {
      out << (image.passed() ? "pass" : "FAIL") << "\n";
    } else {
      out << "precondition not met (" << j["semisimple_gate"].get<std::string>()
          << "), raw data only: projected rank " << image.projected_rank
          << " of " << image.reg_e_size << "\n";
    }
    return ok ? exit_pass : exit_failure;
  }

  void write_file(std::string const& path, std::string const& text) {
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) {
      throw InputError{
          Error(ErrorKind::bad_parameter, "cannot write " + path)};
    }
    f << text;
  }

  int run(RunConfig const& cfg) {
    Json j;
    j["schema_version"] = schema_version;
    j["config"]         = cfg.to_json();
    int code            = exit_pass;
    std::ostringstream summary;
    try {
      auto loaded = load(cfg);
      j["semigroup"] = {{"size", loaded.semigroup.size()},
                        {"E", loaded.semilattice}};
      std::optional<EhresmannStructure> es = std::move(loaded.structure);
      try {
        if (!es) {
          es = derive_structure(loaded.semigroup, loaded.semilattice);
        }
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::bad_parameter) {
          throw InputError{e};
        }
        j["e_ehresmann"] = false;
        j["error"]       = error_json(e);
        j["passed"]      = false;
        summary << "not E-Ehresmann: " << to_string(e.kind()) << ": "
                << e.what() << "\n";
        code = exit_failure;
      }
      if (es) {
        j["e_ehresmann"] = true;
        if (!cfg.category_path.empty()) {
          write_file(cfg.category_path, dump(category_json(build_category(*es))));
        }
        try {
          if (cfg.command == "check") {
            code = cmd_check(*es, j, summary);
          } else if (cfg.command == "iso") {
            code = cmd_iso(*es, cfg, j, summary);
          } else {
            code = cmd_rep(*es, j, summary);
          }
        } catch (Error const& e) {
          j["error"]  = error_json(e);
          j["passed"] = false;
          summary << "verification error: " << to_string(e.kind()) << ": "
                  << e.what() << "\n";
          code = exit_failure;
        }
      }
    } catch (InputError const& e) {
      std::cerr << "input error: " << to_string(e.error.kind()) << ": "
                << e.error.what() << "\n";
      if (!e.error.witness().empty()) {
        std::cerr << "witness: " << Json(e.error.witness()).dump() << "\n";
      }
      return exit_input;
    }
    if (!cfg.report_path.empty()) {
      try {
        write_file(cfg.report_path, dump(j));
      } catch (InputError const& e) {
        std::cerr << "input error: " << e.error.what() << "\n";
        return exit_input;
      }
    }
    if (cfg.report_path != "-") {
      std::cout << summary.str();
    }
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite E-Ehresmann semigroups: classification, category "
               "algebra isomorphism, representation theory"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    auto* in  = sub->add_option("--input", cfg.input_path,
                               "semigroup JSON file");
    auto* zoo = sub->add_option("--zoo", cfg.zoo_spec,
                                "zoo spec: pt:N, b:N, t:N, z:N, op:N, "
                                "chain:K, six, ssl:chainK:G1,...");
    in->excludes(zoo);
    zoo->excludes(in);
    sub->add_option("--order", cfg.order, "natural order for phi/psi")
        ->check(CLI::IsMember({"r", "l"}));
    sub->add_option("--report", cfg.report_path,
                    "write the JSON report here ('-' for stdout)");
    sub->add_option("--workers", cfg.workers, "threads for pair sweeps")
        ->check(CLI::Range(1U, 256U));
    sub->add_option("--emit-category", cfg.category_path,
                    "write the category JSON here");
    sub->add_option("--semilattice", cfg.semilattice,
                    "index of the maximal subsemilattice to use as E when the "
                    "input has none");
  };
  add_common(app.add_subcommand("check", "classify and verify the structure"));
  add_common(app.add_subcommand("iso", "verify the algebra isomorphism"));
  add_common(app.add_subcommand("rep", "Reg_E, EI, radical, semisimple image"));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.input_path.empty() == cfg.zoo_spec.empty()) {
    std::cerr << "input error: give exactly one of --input and --zoo\n";
    return exit_input;
  }
  try {
    return run(cfg);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
