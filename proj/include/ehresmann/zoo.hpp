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

// Generators for the standard example semigroups, each with its
// distinguished semilattice.
//
// Functions and relations compose left to right: in PT_n, (st)(x) = t(s(x)).
// Enumeration orders are fixed:
//  - PT_n and T_n: image vectors [f(1), ..., f(n)] in lexicographic order,
//    with "undefined" (printed "-") after every point;
//  - B_n: relations as bitmasks, pair (i, j) at bit (i-1) n + (j-1), in
//    increasing mask order;
//  - strong semilattices: by semilattice element, then by monoid element.

#ifndef EHRESMANN_ZOO_HPP_
#define EHRESMANN_ZOO_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "relation.hpp"
#include "semigroup.hpp"
#include "structure.hpp"

namespace ehresmann {

  namespace detail {
    inline void require_range(std::string_view what,
                              std::size_t      n,
                              std::size_t      lo,
                              std::size_t      hi) {
      if (n < lo || n > hi) {
        throw Error(ErrorKind::bad_parameter,
                    std::string(what) + " needs " + std::to_string(lo)
                        + " <= n <= " + std::to_string(hi) + ", got "
                        + std::to_string(n),
                    {n});
      }
    }

    inline std::size_t ipow(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

    // Image vectors over {0, ..., k-1}^n in lexicographic order; value n
    // means "undefined" when partial.
    inline std::vector<std::vector<Index>> image_vectors(std::size_t n,
                                                         std::size_t k) {
      std::size_t const               count = ipow(k, n);
      std::vector<std::vector<Index>> out(count, std::vector<Index>(n));
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t r = i;
        for (std::size_t p = n; p-- > 0;) {
          out[i][p] = Index(r % k);
          r /= k;
        }
      }
      return out;
    }

    inline std::size_t vector_index(std::vector<Index> const& v,
                                    std::size_t               k) {
      std::size_t r = 0;
      for (auto x : v) {
        r = r * k + x;
      }
      return r;
    }

    inline std::string map_name(std::vector<Index> const& v, std::size_t n) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += i == 0 ? "" : ",";
        s += v[i] == n ? std::string("-") : std::to_string(v[i] + 1);
      }
      return s + "]";
    }

    // Left-to-right composition of (partial) maps on n points.
    inline FiniteSemigroup maps_semigroup(std::size_t n, bool partial) {
      std::size_t const k     = partial ? n + 1 : n;
      auto const        elems = image_vectors(n, k);
      std::size_t const m     = elems.size();
      std::vector<Index>       flat(m * m);
      std::vector<std::string> names;
      std::vector<Index>       prod(n);
      for (std::size_t a = 0; a < m; ++a) {
        names.push_back(map_name(elems[a], n));
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t x = 0; x < n; ++x) {
            Index const y = elems[a][x];
            prod[x]       = y == n ? Index(n) : elems[b][y];
          }
          flat[a * m + b] = Index(vector_index(prod, k));
        }
      }
      return FiniteSemigroup(TrustedTable{}, m, std::move(flat),
                             std::move(names));
    }

    inline std::vector<Index> partial_identities(std::size_t n) {
      std::vector<Index> out;
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<Index> v(n);
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = ((mask >> i) & 1U) ? Index(i) : Index(n);
        }
        out.push_back(Index(vector_index(v, n + 1)));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  //! All partial functions on n points, 1 <= n <= 5; E = partial identities.
  inline EhresmannStructure pt_n(std::size_t n) {
    detail::require_range("pt_n", n, 1, 5);
    return derive_structure(detail::maps_semigroup(n, true),
                            detail::partial_identities(n));
  }

  //! All total functions on n points, 1 <= n <= 5.
  inline FiniteSemigroup t_n(std::size_t n) {
    detail::require_range("t_n", n, 1, 5);
    return detail::maps_semigroup(n, false);
  }

  //! All binary relations on n points, 1 <= n <= 3 (B_4 has 65536 elements);
  //! E = partial identities.
  inline EhresmannStructure b_n(std::size_t n) {
    detail::require_range("b_n", n, 1, 3);
    std::size_t const        bits = n * n;
    std::size_t const        m    = std::size_t(1) << bits;
    std::vector<Index>       flat(m * m);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) {
      std::string name;
      for (std::size_t p = 0; p < bits; ++p) {
        if ((a >> p) & 1U) {
          name += name.empty() ? "{" : ",";
          name += "(" + std::to_string(p / n + 1) + ","
                  + std::to_string(p % n + 1) + ")";
        }
      }
      names.push_back(name.empty() ? "∅" : name + "}");
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t ab = 0;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (!((a >> (x * n + y)) & 1U)) {
              continue;
            }
            for (std::size_t z = 0; z < n; ++z) {
              if ((b >> (y * n + z)) & 1U) {
                ab |= std::size_t(1) << (x * n + z);
              }
            }
          }
        }
        flat[a * m + b] = Index(ab);
      }
    }
    std::vector<Index> e;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::size_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
          r |= std::size_t(1) << (i * n + i);
        }
      }
      e.push_back(Index(r));
    }
    return derive_structure(
        FiniteSemigroup(detail::TrustedTable{}, m, std::move(flat),
                        std::move(names)),
        e);
  }

  //! Z/m under addition.
  inline FiniteSemigroup cyclic_group(std::size_t m) {
    detail::require_range("cyclic_group", m, 1, 4096);
    std::vector<Index>       flat(m * m);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < m; ++b) {
        flat[a * m + b] = Index((a + b) % m);
      }
    }
    return FiniteSemigroup(detail::TrustedTable{}, m, std::move(flat),
                           std::move(names));
  }

  //! The chain 0 > 1 > ... > k-1 as a semilattice (product = max index).
  inline FiniteSemigroup chain_semilattice(std::size_t k) {
    detail::require_range("chain_semilattice", k, 1, 4096);
    std::vector<Index>       flat(k * k);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < k; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < k; ++b) {
        flat[a * k + b] = Index(std::max(a, b));
      }
    }
    return FiniteSemigroup(detail::TrustedTable{}, k, std::move(flat),
                           std::move(names));
  }

  //! A monoid with E = {1}. Throws not_a_monoid if M has no identity.
  inline EhresmannStructure monoid_as_trivial_E(FiniteSemigroup m) {
    auto const one = identity(m);
    if (!one) {
      throw Error(ErrorKind::not_a_monoid, "semigroup has no identity");
    }
    std::vector<Index> const e{*one};
    return derive_structure(std::move(m), e);
  }

  //! A semilattice with E = all of it.
  inline EhresmannStructure semilattice_as_E(FiniteSemigroup y) {
    std::vector<Index> e(y.size());
    for (Index i = 0; i < y.size(); ++i) {
      e[i] = i;
    }
    return derive_structure(std::move(y), e);
  }

  //! phi_{alpha, beta} : M_alpha -> M_beta for beta <= alpha, as the image of
  //! each element of M_alpha.
  using ConnectingMaps = std::map<std::pair<Index, Index>, std::vector<Index>>;

  //! Identity on each M_alpha, everything else sent to the identity.
  inline ConnectingMaps
  trivial_connecting_maps(FiniteSemigroup const&              y,
                          std::vector<FiniteSemigroup> const& monoids) {
    ConnectingMaps maps;
    for (Index a = 0; a < y.size(); ++a) {
      for (Index b = 0; b < y.size(); ++b) {
        if (y(a, b) != b) {
          continue;
        }
        auto const one = identity(monoids[b]);
        if (!one) {
          throw Error(ErrorKind::not_a_monoid,
                      "component " + std::to_string(b) + " has no identity",
                      {b});
        }
        std::vector<Index> image(monoids[a].size(), *one);
        if (a == b) {
          for (Index x = 0; x < image.size(); ++x) {
            image[x] = x;
          }
        }
        maps[{a, b}] = std::move(image);
      }
    }
    return maps;
  }

  //! The strong semilattice [Y; M_alpha; phi_{alpha,beta}], with
  //! a b = phi_{alpha, alpha beta}(a) phi_{beta, alpha beta}(b) and
  //! E = { 1_alpha }. Throws incompatible_maps with witness (alpha, beta,
  //! gamma) if phi_{alpha,alpha} is not the identity (alpha, alpha, alpha),
  //! a map is missing or not a monoid morphism (alpha, beta, element), or
  //! phi_{beta,gamma} phi_{alpha,beta} != phi_{alpha,gamma}.
  inline EhresmannStructure
  strong_semilattice(FiniteSemigroup const&              y,
                     std::vector<FiniteSemigroup> const& monoids,
                     ConnectingMaps const&               maps) {
    std::size_t const k = y.size();
    if (monoids.size() != k) {
      throw Error(ErrorKind::bad_parameter,
                  "need one monoid per semilattice element");
    }
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        if (y(a, a) != a || y(a, b) != y(b, a)) {
          throw Error(ErrorKind::bad_parameter, "Y is not a semilattice",
                      {a, b});
        }
      }
    }
    std::vector<Index>       one(k);
    std::vector<std::size_t> offset(k + 1, 0);
    for (Index a = 0; a < k; ++a) {
      auto const id = identity(monoids[a]);
      if (!id) {
        throw Error(ErrorKind::not_a_monoid,
                    "component " + std::to_string(a) + " has no identity",
                    {a});
      }
      one[a]        = *id;
      offset[a + 1] = offset[a] + monoids[a].size();
    }
    auto phi = [&](Index a, Index b) -> std::vector<Index> const& {
      auto it = maps.find({a, b});
      if (it == maps.end() || it->second.size() != monoids[a].size()) {
        throw Error(ErrorKind::incompatible_maps,
                    "missing or mis-sized connecting map "
                        + std::to_string(a) + " -> " + std::to_string(b),
                    {a, b, b});
      }
      return it->second;
    };
    for (Index a = 0; a < k; ++a) {
      auto const& id = phi(a, a);
      for (Index x = 0; x < id.size(); ++x) {
        if (id[x] != x) {
          throw Error(ErrorKind::incompatible_maps,
                      "phi_{a,a} is not the identity", {a, a, a});
        }
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        if (y(a, b) != b) {
          continue;
        }
        auto const& f = phi(a, b);
        auto const& ma = monoids[a];
        auto const& mb = monoids[b];
        if (f[one[a]] != one[b]) {
          throw Error(ErrorKind::incompatible_maps,
                      "connecting map does not preserve the identity",
                      {a, b, one[a]});
        }
        for (Index x = 0; x < ma.size(); ++x) {
          if (f[x] >= mb.size()) {
            throw Error(ErrorKind::incompatible_maps,
                        "connecting map value out of range", {a, b, x});
          }
        }
        for (Index x = 0; x < ma.size(); ++x) {
          for (Index z = 0; z < ma.size(); ++z) {
            if (f[ma(x, z)] != mb(f[x], f[z])) {
              throw Error(ErrorKind::incompatible_maps,
                          "connecting map is not a homomorphism", {a, b, x});
            }
          }
        }
      }
    }
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        for (Index c = 0; c < k; ++c) {
          if (y(a, b) != b || y(b, c) != c) {
            continue;
          }
          auto const& ab = phi(a, b);
          auto const& bc = phi(b, c);
          auto const& ac = phi(a, c);
          for (Index x = 0; x < ab.size(); ++x) {
            if (bc[ab[x]] != ac[x]) {
              throw Error(ErrorKind::incompatible_maps,
                          "connecting maps do not compose", {a, b, c});
            }
          }
        }
      }
    }
    std::size_t const        n = offset[k];
    std::vector<Index>       comp(n), local(n);
    std::vector<std::string> names;
    for (Index a = 0; a < k; ++a) {
      for (Index x = 0; x < monoids[a].size(); ++x) {
        comp[offset[a] + x]  = a;
        local[offset[a] + x] = x;
        names.push_back(y.name(a) + ":" + monoids[a].name(x));
      }
    }
    std::vector<Index> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Index const a = comp[i], b = comp[j], g = y(a, b);
        Index const u = phi(a, g)[local[i]];
        Index const v = phi(b, g)[local[j]];
        flat[i * n + j] = Index(offset[g] + monoids[g](u, v));
      }
    }
    std::vector<Index> e;
    for (Index a = 0; a < k; ++a) {
      e.push_back(Index(offset[a] + one[a]));
    }
    return derive_structure(
        FiniteSemigroup(detail::TrustedTable{}, n, std::move(flat),
                        std::move(names)),
        e);
  }

  //! The six-element subsemigroup of T_2 x T_2^op on
  //!   (1,1), (2,1), (1,2), (2,2), (1,id), (id,1)   (indices 0..5),
  //! where k is the constant map to k; E = {(1,1), (1,id), (id,1)}.
  inline EhresmannStructure six_element_example() {
    auto const t2 = t_n(2);
    auto const p  = direct_product(t2, opposite(t2));
    // T_2 indices: [1,1] = 0, [1,2] = 1 (id), [2,1] = 2, [2,2] = 3.
    auto pair = [](Index a, Index b) { return Index(a * 4 + b); };
    std::vector<Index> const elems{pair(0, 0), pair(3, 0), pair(0, 3),
                                   pair(3, 3), pair(0, 1), pair(1, 0)};
    auto const sub = subsemigroup(p, elems);
    std::vector<std::string> names{"(1,1)", "(2,1)",  "(1,2)",
                                   "(2,2)", "(1,id)", "(id,1)"};
    std::vector<Index> const e{0, 4, 5};
    return derive_structure(
        FiniteSemigroup(detail::TrustedTable{}, 6,
                        std::vector<Index>(sub.flat_table().begin(),
                                           sub.flat_table().end()),
                        std::move(names)),
        e);
  }

  //! The elements of PT_n satisfying \p keep, which must form a
  //! (2,1,1)-subalgebra: closed under the product, t -> 1_dom(t) and
  //! t -> 1_im(t). Throws not_closed with witness (op, a, b), op 0 for the
  //! product, 1 for +, 2 for *.
  template <typename Pred>
  EhresmannStructure pt_subalgebra(std::size_t n, Pred&& keep) {
    auto const          pt = pt_n(n);
    auto const          vecs = detail::image_vectors(n, n + 1);
    std::vector<Index>  elems;
    std::vector<bool>   member(pt.size(), false);
    for (Index a = 0; a < pt.size(); ++a) {
      if (keep(vecs[a])) {
        elems.push_back(a);
        member[a] = true;
      }
    }
    for (auto a : elems) {
      if (!member[pt.plus(a)]) {
        throw Error(ErrorKind::not_closed, "not closed under +", {1, a, a});
      }
      if (!member[pt.star(a)]) {
        throw Error(ErrorKind::not_closed, "not closed under *", {2, a, a});
      }
      for (auto b : elems) {
        if (!member[pt.product(a, b)]) {
          throw Error(ErrorKind::not_closed, "not closed under product",
                      {0, a, b});
        }
      }
    }
    auto               sub = subsemigroup(pt.semigroup(), elems);
    std::vector<Index> e;
    for (Index i = 0; i < elems.size(); ++i) {
      if (pt.in_semilattice(elems[i])) {
        e.push_back(i);
      }
    }
    return derive_structure(std::move(sub), e);
  }

  //! Order-preserving partial maps of a poset on n points: x <= y with both
  //! defined implies f(x) <= f(y).
  inline EhresmannStructure order_preserving_pt(std::size_t        n,
                                                FinitePoset const& order) {
    if (order.size() != n) {
      throw Error(ErrorKind::bad_parameter, "poset must have n points");
    }
    return pt_subalgebra(n, [&](std::vector<Index> const& f) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          if (order.leq(x, y) && f[x] != n && f[y] != n
              && !order.leq(f[x], f[y])) {
            return false;
          }
        }
      }
      return true;
    });
  }

  //! 1 < 2 < ... < n.
  inline FinitePoset chain_poset(std::size_t n) {
    Relation r(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        r.set(a, b);
      }
    }
    return FinitePoset(std::move(r));
  }

  inline EhresmannStructure order_preserving_pt(std::size_t n) {
    return order_preserving_pt(n, chain_poset(n));
  }

  namespace detail {
    inline std::size_t parse_count(std::string_view text,
                                   std::string_view spec) {
      std::size_t v     = 0;
      auto const [p, e] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (e != std::errc() || p != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::bad_parameter,
                    "bad number '" + std::string(text) + "' in zoo spec '"
                        + std::string(spec) + "'");
      }
      return v;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return out;
    }
  }  // namespace detail

  //! Compact zoo specs:
  //!   pt:N   partial maps          b:N     binary relations
  //!   t:N    total maps, E = {1}   z:N     cyclic group, E = {0}
  //!   op:N   order-preserving partial maps of the N-chain
  //!   chain:K  the K-chain semilattice, E = all
  //!   six    the six-element subsemigroup of T_2 x T_2^op
  //!   ssl:chainK:G1,...,GK  strong semilattice over the K-chain (top
  //!          first) of groups zM (or t1 for the trivial monoid) with
  //!          trivial connecting maps.
  inline EhresmannStructure from_zoo_spec(std::string_view spec) {
    auto const parts = detail::split(spec, ':');
    auto       bad   = [&]() {
      return Error(ErrorKind::bad_parameter,
                   "unknown zoo spec '" + std::string(spec) + "'");
    };
    std::string_view const family = parts[0];
    if (family == "six" && parts.size() == 1) {
      return six_element_example();
    }
    if (family == "ssl" && parts.size() == 3) {
      if (parts[1].substr(0, 5) != "chain") {
        throw bad();
      }
      std::size_t const k      = detail::parse_count(parts[1].substr(5), spec);
      auto const        groups = detail::split(parts[2], ',');
      if (k == 0 || groups.size() != k) {
        throw Error(ErrorKind::bad_parameter,
                    "ssl spec needs one monoid per chain element");
      }
      auto const                   y = chain_semilattice(k);
      std::vector<FiniteSemigroup> monoids;
      for (auto g : groups) {
        if (g.size() > 1 && (g[0] == 'z' || g[0] == 't')) {
          std::size_t const m = detail::parse_count(g.substr(1), spec);
          if (g[0] == 't' && m != 1) {
            throw bad();
          }
          monoids.push_back(cyclic_group(m));
        } else {
          throw bad();
        }
      }
      return strong_semilattice(y, monoids,
                                trivial_connecting_maps(y, monoids));
    }
    if (parts.size() != 2) {
      throw bad();
    }
    std::size_t const n = detail::parse_count(parts[1], spec);
    if (family == "pt") {
      return pt_n(n);
    }
    if (family == "b") {
      return b_n(n);
    }
    if (family == "t") {
      return monoid_as_trivial_E(t_n(n));
    }
    if (family == "z") {
      return monoid_as_trivial_E(cyclic_group(n));
    }
    if (family == "op") {
      detail::require_range("op", n, 1, 5);
      return order_preserving_pt(n);
    }
    if (family == "chain") {
      return semilattice_as_E(chain_semilattice(n));
    }
    throw bad();
  }

  //! Zoo members used by the sweeping tests, all E-Ehresmann.
  inline std::vector<std::string> const& zoo_catalogue() {
    static std::vector<std::string> const specs{
        "pt:1",  "pt:2", "pt:3", "b:1",     "b:2",
        "six",   "op:3", "t:2",  "z:2",     "z:3",
        "chain:3", "ssl:chain2:z2,z3", "ssl:chain3:z2,t1,z3"};
    return specs;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_ZOO_HPP_
