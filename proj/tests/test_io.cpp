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

#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::test;

namespace {
  ErrorKind parse_kind(std::string const& text) {
    try {
      parse_semigroup(text);
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("accepted: " << text);
    return ErrorKind::internal_inconsistency;
  }
}  // namespace

TEST_CASE("parse the interchange format", "[io]") {
  auto const in = parse_semigroup(std::string(
      R"({"n": 2, "table": [[0, 1], [1, 0]], "E": [0], "names": ["e", "g"]})"));
  CHECK(in.semigroup.size() == 2);
  CHECK(in.semigroup(1, 1) == 0);
  REQUIRE(in.semilattice);
  CHECK(*in.semilattice == std::vector<Index>{0});
  CHECK(in.semigroup.name(1) == "g");

  auto const bare = parse_semigroup(std::string(R"({"n":1,"table":[[0]]})"));
  CHECK_FALSE(bare.semilattice);
  CHECK(bare.semigroup.name(0) == "0");
}

TEST_CASE("malformed input is rejected", "[io]") {
  CHECK(parse_kind("not json") == ErrorKind::malformed_input);
  CHECK(parse_kind("[1,2]") == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"table":[[0]]})") == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":0,"table":[]})") == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":2,"table":[[0,0]]})")
        == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":2,"table":[[0,0],[0]]})")
        == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":1,"table":[["0"]]})")
        == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":1,"table":[[0]],"names":["a","b"]})")
        == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":1,"table":[[0]],"extra":1})")
        == ErrorKind::malformed_input);
  CHECK(parse_kind(R"({"n":2,"table":[[0,2],[0,0]]})")
        == ErrorKind::out_of_range);
  CHECK(parse_kind(R"({"n":1,"table":[[0]],"E":[1]})")
        == ErrorKind::out_of_range);
  CHECK(parse_kind(R"({"n":1,"table":[[-1]]})") == ErrorKind::out_of_range);
  // 0 0 = 1, 1 0 = 0: (0 0) 0 = 0 but 0 (0 0) = 0 1 = 1.
  CHECK(parse_kind(R"({"n":2,"table":[[1,1],[0,0]]})")
        == ErrorKind::not_associative);
}

TEST_CASE("zoo members survive a JSON round trip", "[io]") {
  for (auto const& es : zoo_members()) {
    auto const text = dump(to_json(es));
    auto const in   = parse_semigroup(text);
    CHECK(in.semigroup == es.semigroup());
    CHECK(in.semigroup.names() == es.semigroup().names());
    REQUIRE(in.semilattice);
    CHECK(*in.semilattice == es.semilattice());
    CHECK(dump(to_json(in.semigroup, in.semilattice)) == text);
  }
}

TEST_CASE("category dump", "[io]") {
  auto const six = six_element_example();
  auto const j   = category_json(build_category(six));
  std::vector<std::string> keys;
  for (auto const& [k, v] : j.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"objects", "dom", "cod", "leq_r",
                                         "leq_l"});
  CHECK(j["objects"] == Json::array({0, 4, 5}));
  CHECK(j["dom"] == Json(six.plus_map()));
  CHECK(j["cod"] == Json(six.star_map()));
  CHECK(j["leq_r"].size() == six.leq_r().count());
  for (auto const& p : j["leq_l"]) {
    CHECK(six.leq_l()(p[0].get<std::size_t>(), p[1].get<std::size_t>()));
  }
}

TEST_CASE("isomorphism report JSON", "[io]") {
  auto const b2 = b_n(2);
  auto const j  = to_json(verify_isomorphism(b2), b2);
  CHECK(j["bijection"] == true);
  CHECK(j["hom_case1_failures"].empty());
  CHECK(j["hom_case2_failures"][0] == Json::array({3, 1}));
  auto const& w = j["witness_expansion"];
  CHECK(w["a_name"] == "{(1,1),(1,2)}");
  CHECK(w["b_name"] == "{(1,1)}");
  CHECK(w["phi_a"]["text"] == "C(∅) + C({(1,1),(1,2)})");
  CHECK(w["phi_b"]["text"] == "C(∅) + C({(1,1)})");
  CHECK(w["phi_ab"]["text"] == "C(∅) + C({(1,1)})");
  CHECK(w["phi_a_phi_b"]["text"] == "C(∅)");
  CHECK(w["phi_a"]["terms"][0]["coefficient"] == "1");
  CHECK(dump(j) == dump(to_json(verify_isomorphism(b2, Order::right, 4), b2)));

  auto const pt = pt_n(2);
  auto const k  = to_json(verify_isomorphism(pt), pt);
  CHECK(k["witness_expansion"].is_null());
  CHECK(k["passed"] == true);
}

TEST_CASE("verification report JSON", "[io]") {
  VerificationReport r("demo");
  r.add("first", true);
  r.add("second", false, {1, 2}, "detail");
  auto const j = to_json(r);
  CHECK(j["subject"] == "demo");
  CHECK(j["passed"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["witness"] == Json::array({1, 2}));
  CHECK(j["checks"][1]["detail"] == "detail");
  CHECK_FALSE(j["checks"][0].contains("detail"));
}
