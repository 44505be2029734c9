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

// JSON interchange for semigroups, categories and reports.
//
// Semigroup:  {"n": int, "table": [[int]], "E": [int], "names": [string]}
//             with table[i][j] = i*j; "E" and "names" are optional.
// Category:   {"objects": [int], "dom": [int], "cod": [int],
//              "leq_r": [[int,int]], "leq_l": [[int,int]]}
// All objects are written with keys in a fixed order, so equal inputs give
// byte-identical output.

#ifndef EHRESMANN_IO_HPP_
#define EHRESMANN_IO_HPP_

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "category.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "relation.hpp"
#include "rep_theory.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "structure.hpp"

namespace ehresmann {

  using Json = nlohmann::ordered_json;

  //! Version of every report layout written by this header.
  inline constexpr int schema_version = 1;

  struct SemigroupInput {
    FiniteSemigroup                   semigroup;
    std::optional<std::vector<Index>> semilattice;
  };

  namespace detail {
    [[noreturn]] inline void malformed(std::string const& what) {
      throw Error(ErrorKind::malformed_input, what);
    }

    inline std::vector<Index> index_array(Json const&        j,
                                          char const*        field,
                                          std::size_t        n) {
      if (!j.is_array()) {
        malformed(std::string("\"") + field + "\" must be an array");
      }
      std::vector<Index> out;
      for (auto const& x : j) {
        if (!x.is_number_integer()) {
          malformed(std::string("\"") + field
                    + "\" must contain integers only");
        }
        auto const v = x.get<long long>();
        if (v < 0 || static_cast<unsigned long long>(v) >= n) {
          throw Error(ErrorKind::out_of_range,
                      std::string("\"") + field + "\" entry "
                          + std::to_string(v) + " outside [0, "
                          + std::to_string(n) + ")",
                      {static_cast<std::size_t>(v < 0 ? n : v)});
        }
        out.push_back(static_cast<Index>(v));
      }
      return out;
    }

    inline Json pair_list(Relation const& r) {
      Json out = Json::array();
      for (auto [a, b] : r.pairs()) {
        out.push_back(Json::array({a, b}));
      }
      return out;
    }
  }  // namespace detail

  //! Throws malformed_input for structural problems, and whatever
  //! FiniteSemigroup::validate throws for bad tables.
  inline SemigroupInput parse_semigroup(Json const& j) {
    if (!j.is_object()) {
      detail::malformed("top level must be a JSON object");
    }
    for (auto const& [key, value] : j.items()) {
      if (key != "n" && key != "table" && key != "E" && key != "names") {
        detail::malformed("unknown field \"" + key + "\"");
      }
    }
    if (!j.contains("n") || !j["n"].is_number_integer()
        || j["n"].get<long long>() <= 0) {
      detail::malformed("\"n\" must be a positive integer");
    }
    auto const n = static_cast<std::size_t>(j["n"].get<long long>());
    if (!j.contains("table") || !j["table"].is_array()) {
      detail::malformed("\"table\" must be an array of rows");
    }
    if (j["table"].size() != n) {
      detail::malformed("\"table\" has " + std::to_string(j["table"].size())
                        + " rows, expected " + std::to_string(n));
    }
    std::vector<std::vector<Index>> table;
    for (auto const& row : j["table"]) {
      if (!row.is_array() || row.size() != n) {
        detail::malformed("every row of \"table\" must have " + std::to_string(n)
                          + " entries");
      }
      table.push_back(detail::index_array(row, "table", n));
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
      if (!j["names"].is_array() || j["names"].size() != n) {
        detail::malformed("\"names\" must be an array of n strings");
      }
      for (auto const& x : j["names"]) {
        if (!x.is_string()) {
          detail::malformed("\"names\" must contain strings only");
        }
        names.push_back(x.get<std::string>());
      }
    }
    SemigroupInput in{FiniteSemigroup::validate(table, std::move(names)),
                      std::nullopt};
    if (j.contains("E")) {
      in.semilattice = detail::index_array(j["E"], "E", n);
    }
    return in;
  }

  inline SemigroupInput parse_semigroup(std::string const& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      detail::malformed(std::string("invalid JSON: ") + e.what());
    }
    return parse_semigroup(j);
  }

  inline SemigroupInput read_semigroup_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      detail::malformed("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_semigroup(buf.str());
  }

  inline Json to_json(FiniteSemigroup const&                   s,
                      std::optional<std::vector<Index>> const& e = {}) {
    Json j;
    j["n"]     = s.size();
    j["table"] = s.table();
    if (e) {
      j["E"] = *e;
    }
    if (!s.names().empty()) {
      j["names"] = s.names();
    }
    return j;
  }

  inline Json to_json(EhresmannStructure const& es) {
    return to_json(es.semigroup(), es.semilattice());
  }

  inline Json category_json(EhresmannCategory const& c) {
    Json j;
    j["objects"] = c.objects();
    j["dom"]     = c.dom_map();
    j["cod"]     = c.cod_map();
    j["leq_r"]   = detail::pair_list(c.leq_r());
    j["leq_l"]   = detail::pair_list(c.leq_l());
    return j;
  }

  inline Json to_json(VerificationReport const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks()) {
      Json x;
      x["name"]    = c.name;
      x["passed"]  = c.passed;
      x["witness"] = c.witness;
      if (!c.detail.empty()) {
        x["detail"] = c.detail;
      }
      checks.push_back(std::move(x));
    }
    Json j;
    j["subject"] = r.subject();
    j["passed"]  = r.passed();
    j["checks"]  = std::move(checks);
    return j;
  }

  //! Rational coefficients as strings ("1", "-3/2"), keyed by basis name.
  template <typename Names>
  Json to_json(AlgebraElement const& u, Names&& name) {
    Json terms = Json::array();
    for (auto const& [x, c] : u.terms()) {
      terms.push_back(Json{{"index", x}, {"name", name(x)},
                           {"coefficient", to_string(c)}});
    }
    return Json{{"basis", to_string(u.basis())},
                {"text", format(u, name)},
                {"terms", std::move(terms)}};
  }

  inline Json to_json(IsomorphismReport const& r, EhresmannStructure const& es) {
    auto const name  = [&](Index x) { return es.name(x); };
    auto       pairs = [](std::vector<IndexPair> const& v) {
      Json out = Json::array();
      for (auto [a, b] : v) {
        out.push_back(Json::array({a, b}));
      }
      return out;
    };
    Json j;
    j["order"]           = to_string(r.order);
    j["theorem_applies"] = r.theorem_applies;
    j["bijection"]       = r.bijection();
    j["psi_phi_identity"] = r.psi_phi_identity;
    j["phi_psi_identity"] = r.phi_psi_identity;
    j["bijection_failure"] =
        r.bijection_failure ? Json(*r.bijection_failure) : Json(nullptr);
    // Checking basis pairs suffices: both sides are bilinear.
    j["homomorphism"]       = r.homomorphism();
    j["homomorphism_scope"] = "basis pairs";
    j["pairs_checked"]      = r.pairs_checked;
    j["case1_pairs"]        = r.case1_pairs;
    j["case2_pairs"]        = r.case2_pairs;
    j["hom_case1_failures"] = pairs(r.case1_failures);
    j["hom_case2_failures"] = pairs(r.case2_failures);
    if (r.witness) {
      auto const& w = *r.witness;
      j["witness_expansion"] = Json{
          {"a", w.a},
          {"b", w.b},
          {"ab", w.ab},
          {"a_name", es.name(w.a)},
          {"b_name", es.name(w.b)},
          {"ab_name", es.name(w.ab)},
          {"phi_a", to_json(w.phi_a, name)},
          {"phi_b", to_json(w.phi_b, name)},
          {"phi_ab", to_json(w.phi_ab, name)},
          {"phi_a_phi_b", to_json(w.phi_a_phi_b, name)}};
    } else {
      j["witness_expansion"] = nullptr;
    }
    j["passed"] = r.passed();
    return j;
  }

  inline Json to_json(EIReport const& r) {
    auto opt = [](std::optional<Index> const& x) {
      return x ? Json(*x) : Json(nullptr);
    };
    Json j;
    j["is_EI"]                       = r.is_ei;
    j["non_invertible_endomorphism"] = opt(r.non_invertible_endomorphism);
    j["h_tilde_criterion"]           = r.h_tilde_criterion;
    j["h_tilde_witness"]             = opt(r.h_tilde_witness);
    j["endomorphism_orders"]         = r.endomorphism_orders;
    j["e_maximal_semilattice"]       = r.e_maximal_semilattice;
    j["extending_idempotent"]        = opt(r.extending_idempotent);
    j["object_iso_classes"]          = r.object_iso_classes;
    j["d_classes_of_e"]              = r.d_classes_of_e;
    j["is_groupoid"]                 = r.is_groupoid;
    j["inverse_with_e_full"]         = r.inverse_with_e_full;
    j["criteria_agree"]              = r.criteria_agree();
    return j;
  }

  inline Json to_json(RadicalSpan const& r) {
    Json j;
    j["non_invertible"]   = r.non_invertible;
    j["dimension"]        = r.dimension();
    j["oracle_dimension"] = r.oracle_dimension;
    j["oracle_in_span"]   = r.oracle_in_span;
    j["two_sided_ideal"]  = r.two_sided_ideal;
    j["nilpotency_index"] = r.nilpotency_index;
    j["passed"]           = r.passed();
    return j;
  }

  inline Json to_json(SemisimpleImage const& r) {
    Json j;
    j["left_restriction"]     = r.left_restriction;
    j["right_restriction"]    = r.right_restriction;
    j["EI"]                   = r.ei;
    j["outside_theorem"]      = !r.within_theorem();
    j["order"]                = to_string(r.order);
    j["semigroup_dimension"]  = r.semigroup_dimension;
    j["reg_e_size"]           = r.reg_e_size;
    j["radical_dimension"]    = r.radical_dimension;
    j["projected_rank"]       = r.projected_rank;
    j["psi_into_reg_e"]       = r.psi_into_reg_e;
    j["dimension_matches"]    = r.dimension_matches();
    j["projection_full_rank"] = r.projection_full_rank();
    return j;
  }

  //! Canonical text: two-space indentation, trailing newline.
  inline std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace ehresmann

#endif  // EHRESMANN_IO_HPP_
