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

#include <set>

#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::test;

namespace {
  // a S^1 as a set, by direct multiplication.
  std::set<Index> right_ideal(FiniteSemigroup const& s, Index a) {
    std::set<Index> out{a};
    for (Index x = 0; x < s.size(); ++x) {
      out.insert(s(a, x));
    }
    return out;
  }

  std::set<Index> left_ideal(FiniteSemigroup const& s, Index a) {
    std::set<Index> out{a};
    for (Index x = 0; x < s.size(); ++x) {
      out.insert(s(x, a));
    }
    return out;
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::internal_inconsistency;
  }
}  // namespace

TEST_CASE("validate accepts small known tables", "[semigroup]") {
  auto const trivial = FiniteSemigroup::validate({{0}});
  CHECK(trivial.size() == 1);
  CHECK(trivial(0, 0) == 0);

  auto const lz = FiniteSemigroup::validate({{0, 0}, {1, 1}});
  CHECK(lz(0, 1) == 0);
  CHECK(lz(1, 0) == 1);

  auto const z2 = FiniteSemigroup::validate({{0, 1}, {1, 0}});
  CHECK(z2(1, 1) == 0);
  CHECK(identity(z2) == Index(0));
}

TEST_CASE("validate rejects malformed tables", "[semigroup]") {
  CHECK(kind_of([] { FiniteSemigroup::validate({}); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { FiniteSemigroup::validate({{0, 0}, {0}}); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { FiniteSemigroup::validate({{0}}, {"a", "b"}); })
        == ErrorKind::malformed_input);
  try {
    FiniteSemigroup::validate({{0, 1}, {2, 0}});
    FAIL("accepted an out of range entry");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::out_of_range);
    CHECK(e.witness() == std::vector<std::size_t>{1, 0, 2});
  }
}

TEST_CASE("associativity failures carry a genuine first triple",
          "[semigroup][property]") {
  std::size_t rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t const n = uniform(2, 5);
    auto const        t = random_table(n);
    std::optional<std::array<std::size_t, 3>> first;
    for (std::size_t i = 0; i < n && !first; ++i) {
      for (std::size_t j = 0; j < n && !first; ++j) {
        for (std::size_t k = 0; k < n && !first; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            first = std::array<std::size_t, 3>{i, j, k};
          }
        }
      }
    }
    if (!first) {
      CHECK_NOTHROW(FiniteSemigroup::validate(t));
      continue;
    }
    ++rejected;
    try {
      FiniteSemigroup::validate(t);
      FAIL("accepted a non-associative table");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::not_associative);
      auto const& w = e.witness();
      REQUIRE(w.size() == 3);
      CHECK(t[t[w[0]][w[1]]][w[2]] != t[w[0]][t[w[1]][w[2]]]);
      CHECK(std::array<std::size_t, 3>{w[0], w[1], w[2]} == *first);
    }
  }
  CHECK(rejected > 300);
}

TEST_CASE("idempotents", "[semigroup]") {
  auto const z2 = FiniteSemigroup::validate({{0, 1}, {1, 0}});
  CHECK(idempotents(z2) == std::vector<Index>{0});
  CHECK(idempotents(left_zero(4)).size() == 4);
  CHECK(idempotents(b_n(2).semigroup()).size() == 11);
  CHECK(idempotents(pt_n(2).semigroup()).size() == 6);
  CHECK(idempotents(pt_n(3).semigroup()).size() == 23);
}

TEST_CASE("Green's relations of a group are universal", "[semigroup]") {
  auto const g = green(cyclic_group(5));
  for (Index a = 0; a < 5; ++a) {
    for (Index b = 0; b < 5; ++b) {
      CHECK(g.r_related(a, b));
      CHECK(g.l_related(a, b));
      CHECK(g.h_related(a, b));
      CHECK(g.d_related(a, b));
    }
  }
}

TEST_CASE("Green's relations of a left zero semigroup", "[semigroup]") {
  auto const g = green(left_zero(4));
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      // ab = a: aS = {a} while Sa = S.
      CHECK(g.r_related(a, b) == (a == b));
      CHECK(g.l_related(a, b));
      CHECK(g.d_related(a, b));
    }
  }
}

TEST_CASE("Green's relations agree with principal ideals", "[semigroup]") {
  for (auto const& es : zoo_members()) {
    auto const& s = es.semigroup();
    auto const  g = green(s);
    for (Index a = 0; a < s.size(); ++a) {
      auto const ra = right_ideal(s, a);
      auto const la = left_ideal(s, a);
      for (Index b = 0; b < s.size(); ++b) {
        bool const r = ra == right_ideal(s, b);
        bool const l = la == left_ideal(s, b);
        CHECK(g.r_related(a, b) == r);
        CHECK(g.l_related(a, b) == l);
        CHECK(g.h_related(a, b) == (r && l));
        bool d = false;
        for (Index c = 0; c < s.size() && !d; ++c) {
          d = g.r_related(a, c) && g.l_related(c, b);
        }
        CHECK(g.d_related(a, b) == d);
      }
    }
  }
}

TEST_CASE("Green's R and L on PT_2 are kernel and image", "[semigroup]") {
  auto const  pt = pt_n(2);
  auto const& s  = pt.semigroup();
  auto const  g  = green(s);
  auto const  vecs = detail::image_vectors(2, 3);
  auto kernel = [&](Index a) {
    // Pairs of defined points with equal images, plus the domain.
    auto const& v = vecs[a];
    return std::tuple{v[0] != 2, v[1] != 2, v[0] != 2 && v[0] == v[1]};
  };
  auto image = [&](Index a) {
    std::set<Index> im;
    for (auto x : vecs[a]) {
      if (x != 2) {
        im.insert(x);
      }
    }
    return im;
  };
  for (Index a = 0; a < 9; ++a) {
    for (Index b = 0; b < 9; ++b) {
      CHECK(g.r_related(a, b) == (kernel(a) == kernel(b)));
      CHECK(g.l_related(a, b) == (image(a) == image(b)));
    }
  }
}

TEST_CASE("Green's classes are invariant under relabelling",
          "[semigroup][property]") {
  auto same = [](std::vector<std::size_t> const& x,
                 std::vector<std::size_t> const& y,
                 std::vector<Index> const&       p) {
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < x.size(); ++b) {
        if ((x[a] == x[b]) != (y[p[a]] == y[p[b]])) {
          return false;
        }
      }
    }
    return true;
  };
  for (auto const& spec : {"pt:2", "b:2", "six", "op:3", "t:2"}) {
    auto const  es = from_zoo_spec(spec);
    auto const& s  = es.semigroup();
    for (int trial = 0; trial < 5; ++trial) {
      auto const p  = random_permutation(s.size());
      auto const t  = conjugate(s, p);
      auto const gs = green(s);
      auto const gt = green(t);
      CHECK(same(gs.r_class, gt.r_class, p));
      CHECK(same(gs.l_class, gt.l_class, p));
      CHECK(same(gs.h_class, gt.h_class, p));
      CHECK(same(gs.d_class, gt.d_class, p));
    }
  }
}

TEST_CASE("Green's relations of a commutative band are trivial",
          "[semigroup]") {
  for (auto const& s : {union_lattice(3), chain_semilattice(5)}) {
    auto const g = green(s);
    for (Index a = 0; a < s.size(); ++a) {
      for (Index b = 0; b < s.size(); ++b) {
        CHECK(g.r_related(a, b) == (a == b));
        CHECK(g.l_related(a, b) == (a == b));
        CHECK(g.h_related(a, b) == (a == b));
        CHECK(g.d_related(a, b) == (a == b));
      }
    }
  }
}

TEST_CASE("subsemilattice test", "[semigroup]") {
  auto const b2 = b_n(2);
  std::vector<Index> const single{0};
  CHECK(is_subsemilattice(b2.semigroup(), single));
  CHECK(is_subsemilattice(b2.semigroup(), b2.semilattice()));
  CHECK(b2.semilattice()
        == std::vector<Index>{0, b_index(2, {{1, 1}}), b_index(2, {{2, 2}}),
                              b_index(2, {{1, 1}, {2, 2}})});

  std::vector<Index> const with_non_idempotent{0, b_index(2, {{1, 2}})};
  CHECK_FALSE(is_subsemilattice(b2.semigroup(), with_non_idempotent));
  // Left zero idempotents do not commute.
  std::vector<Index> const noncommuting{0, 1};
  CHECK_FALSE(is_subsemilattice(left_zero(2), noncommuting));
  // {[1,1], [2,2]} in T_2 commute? No: [1,1][2,2] = [2,2].
  std::vector<Index> const constants{0, 3};
  CHECK_FALSE(is_subsemilattice(t_n(2), constants));
}

TEST_CASE("opposite and direct product", "[semigroup]") {
  for (auto const& es : zoo_members()) {
    CHECK(opposite(opposite(es.semigroup())) == es.semigroup());
  }
  auto const t2 = t_n(2);
  auto const p  = direct_product(t2, opposite(t2));
  CHECK(p.size() == 16);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).size() == 6);
  CHECK_FALSE(p.associativity_failure());

  // The six pairs (1,1), (2,1), (1,2), (2,2), (1,id), (id,1).
  std::vector<Index> const six{0, 12, 3, 15, 1, 4};
  auto const               sub = subsemigroup(p, six);
  CHECK(sub.size() == 6);
  CHECK_FALSE(sub.associativity_failure());
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(six[sub(Index(i), Index(j))] == p(six[i], six[j]));
    }
  }

  std::vector<Index> const not_closed{4, 1};
  try {
    subsemigroup(p, not_closed);
    FAIL("accepted a non-closed subset");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_closed);
    auto const& w = e.witness();
    REQUIRE(w.size() == 2);
    Index const prod = p(Index(w[0]), Index(w[1]));
    CHECK(std::find(not_closed.begin(), not_closed.end(), prod)
          == not_closed.end());
  }
}

TEST_CASE("inverse semigroups and maximal subsemilattices", "[semigroup]") {
  CHECK(is_inverse_semigroup(cyclic_group(3)));
  CHECK(is_inverse_semigroup(chain_semilattice(3)));
  CHECK_FALSE(is_inverse_semigroup(pt_n(2).semigroup()));
  CHECK_FALSE(is_inverse_semigroup(left_zero(2)));

  auto const lz = maximal_subsemilattices(left_zero(3));
  CHECK(lz == std::vector<std::vector<Index>>{{0}, {1}, {2}});

  auto const pt     = pt_n(2);
  auto const maxima = maximal_subsemilattices(pt.semigroup());
  CHECK(std::find(maxima.begin(), maxima.end(), pt.semilattice())
        != maxima.end());
  for (auto const& m : maxima) {
    CHECK(is_subsemilattice(pt.semigroup(), m));
    for (auto e : idempotents(pt.semigroup())) {
      if (std::find(m.begin(), m.end(), e) != m.end()) {
        continue;
      }
      auto extended = m;
      extended.push_back(e);
      CHECK_FALSE(is_subsemilattice(pt.semigroup(), extended));
    }
  }
}
