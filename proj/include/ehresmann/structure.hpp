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

// A finite semigroup S with a distinguished subsemilattice E: the relations
// R~_E, L~_E, H~_E, the unary maps a -> a+ and a -> a*, the natural partial
// orders, the variety identities and the left/right restriction conditions.

#ifndef EHRESMANN_STRUCTURE_HPP_
#define EHRESMANN_STRUCTURE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "semigroup.hpp"

namespace ehresmann {

  //! Which natural partial order to use: a <=_r b iff a = a+ b, a <=_l b iff
  //! a = b a*.
  enum class Order { right, left };

  constexpr char const* to_string(Order o) noexcept {
    return o == Order::right ? "r" : "l";
  }

  struct TildePartitions {
    std::vector<std::size_t> r;
    std::vector<std::size_t> l;
    std::vector<std::size_t> h;
  };

  namespace detail {
    inline std::vector<Index> sorted_unique(std::span<Index const> e) {
      std::vector<Index> v(e.begin(), e.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    inline void require_subsemilattice(FiniteSemigroup const& s,
                                       std::span<Index const> e) {
      if (e.empty() || !is_subsemilattice(s, e)) {
        throw Error(ErrorKind::not_subsemilattice,
                    "E must be a nonempty commutative subsemigroup of "
                    "idempotents");
      }
    }

    // For each a, the bit vector over positions of E of those e with e a = a
    // (left == true) or a e = a.
    inline std::vector<std::vector<bool>>
    identity_sets(FiniteSemigroup const& s,
                  std::vector<Index> const& e,
                  bool                      left) {
      std::vector<std::vector<bool>> out(s.size(),
                                         std::vector<bool>(e.size(), false));
      for (Index a = 0; a < s.size(); ++a) {
        for (std::size_t i = 0; i < e.size(); ++i) {
          out[a][i] = left ? s(e[i], a) == a : s(a, e[i]) == a;
        }
      }
      return out;
    }
  }  // namespace detail

  //! a R~_E b iff a and b have the same left identities in E; dually for
  //! L~_E; H~_E = R~_E & L~_E.
  inline TildePartitions tilde_relations(FiniteSemigroup const& s,
                                         std::span<Index const> e_in) {
    detail::require_subsemilattice(s, e_in);
    auto const      e = detail::sorted_unique(e_in);
    TildePartitions t;
    t.r = partition_from_keys(detail::identity_sets(s, e, true));
    t.l = partition_from_keys(detail::identity_sets(s, e, false));
    std::vector<std::pair<std::size_t, std::size_t>> rl(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      rl[a] = {t.r[a], t.l[a]};
    }
    t.h = partition_from_keys(rl);
    return t;
  }

  class EhresmannStructure;
  EhresmannStructure derive_structure(FiniteSemigroup s,
                                      std::span<Index const> e);

  //! An E-Ehresmann semigroup with its unary operations and both natural
  //! partial orders materialised. Only derive_structure creates these, so
  //! every instance satisfies the defining conditions.
  class EhresmannStructure {
   public:
    FiniteSemigroup const& semigroup() const noexcept {
      return _s;
    }

    std::size_t size() const noexcept {
      return _s.size();
    }

    Index product(Index a, Index b) const noexcept {
      return _s(a, b);
    }

    //! E, sorted.
    std::vector<Index> const& semilattice() const noexcept {
      return _e;
    }

    bool in_semilattice(Index a) const noexcept {
      return _in_e[a];
    }

    //! e <= f in E, i.e. e f = e.
    bool semilattice_leq(Index e, Index f) const noexcept {
      return _s(e, f) == e;
    }

    Index plus(Index a) const noexcept {
      return _plus[a];
    }

    Index star(Index a) const noexcept {
      return _star[a];
    }

    std::vector<Index> const& plus_map() const noexcept {
      return _plus;
    }

    std::vector<Index> const& star_map() const noexcept {
      return _star;
    }

    Relation const& leq_r() const noexcept {
      return _leq_r;
    }

    Relation const& leq_l() const noexcept {
      return _leq_l;
    }

    Relation const& leq(Order o) const noexcept {
      return o == Order::right ? _leq_r : _leq_l;
    }

    std::string name(Index a) const {
      return _s.name(a);
    }

   private:
    friend EhresmannStructure derive_structure(FiniteSemigroup,
                                               std::span<Index const>);

    EhresmannStructure() = default;

    FiniteSemigroup    _s;
    std::vector<Index> _e;
    std::vector<bool>  _in_e;
    std::vector<Index> _plus;
    std::vector<Index> _star;
    Relation           _leq_r;
    Relation           _leq_l;
  };

  //! Builds the E-Ehresmann structure on (S, E), or throws:
  //!  - not_subsemilattice if E is not a subsemilattice;
  //!  - class_without_idempotent (witness: first element of the class) or
  //!    class_with_two_idempotents (witness: element, e, f) if some R~_E or
  //!    L~_E class does not meet E exactly once;
  //!  - congruence_fails (witness: side, a, b; side 0 is (ab)+ = (ab+)+,
  //!    side 1 is (ab)* = (a*b)*) for the lexicographically first failure.
  inline EhresmannStructure derive_structure(FiniteSemigroup        s,
                                             std::span<Index const> e_in) {
    detail::require_subsemilattice(s, e_in);
    EhresmannStructure es;
    es._e = detail::sorted_unique(e_in);
    es._in_e.assign(s.size(), false);
    for (auto x : es._e) {
      es._in_e[x] = true;
    }
    std::size_t const n     = s.size();
    auto const        tilde = tilde_relations(s, es._e);

    auto representatives = [&](std::vector<std::size_t> const& classes,
                               char const*                     which) {
      std::size_t const        none = n;
      std::vector<std::size_t> rep(n, none);
      for (auto x : es._e) {
        auto& r = rep[classes[x]];
        if (r != none) {
          throw Error(ErrorKind::class_with_two_idempotents,
                      std::string(which) + " class of " + s.name(x)
                          + " contains " + s.name(Index(r)) + " and "
                          + s.name(x),
                      {x, r, x});
        }
        r = x;
      }
      std::vector<Index> out(n);
      for (Index a = 0; a < n; ++a) {
        if (rep[classes[a]] == none) {
          throw Error(ErrorKind::class_without_idempotent,
                      std::string(which) + " class of " + s.name(a)
                          + " contains no element of E",
                      {a});
        }
        out[a] = Index(rep[classes[a]]);
      }
      return out;
    };
    es._plus = representatives(tilde.r, "R~_E");
    es._star = representatives(tilde.l, "L~_E");

    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (es._plus[s(a, b)] != es._plus[s(a, es._plus[b])]) {
          throw Error(ErrorKind::congruence_fails,
                      "(ab)+ != (ab+)+ for a=" + s.name(a)
                          + ", b=" + s.name(b),
                      {0, a, b});
        }
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (es._star[s(a, b)] != es._star[s(es._star[a], b)]) {
          throw Error(ErrorKind::congruence_fails,
                      "(ab)* != (a*b)* for a=" + s.name(a)
                          + ", b=" + s.name(b),
                      {1, a, b});
        }
      }
    }

    es._leq_r = Relation(n);
    es._leq_l = Relation(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (s(es._plus[a], b) == a) {
          es._leq_r.set(a, b);
        }
        if (s(b, es._star[a]) == a) {
          es._leq_l.set(a, b);
        }
      }
    }
    es._s = std::move(s);
    return es;
  }

  //! Evaluates the thirteen identities defining E-Ehresmann semigroups as
  //! (2,1,1)-algebras on the given unary maps, by exhaustive sweep. Each
  //! identity becomes one check whose witness is its first failing instance.
  inline VerificationReport check_variety(FiniteSemigroup const& s,
                                          std::span<Index const> plus,
                                          std::span<Index const> star) {
    std::size_t const n = s.size();
    if (plus.size() != n || star.size() != n) {
      throw Error(ErrorKind::malformed_input,
                  "unary maps must have one entry per element");
    }
    for (Index a = 0; a < n; ++a) {
      if (plus[a] >= n || star[a] >= n) {
        throw Error(ErrorKind::out_of_range, "unary map value out of range",
                    {a});
      }
    }
    VerificationReport report("variety");
    auto p = [&](Index x) { return plus[x]; };
    auto t = [&](Index x) { return star[x]; };
    auto m = [&](Index x, Index y) { return s(x, y); };

    auto unary = [&](char const* name, auto&& holds) {
      for (Index x = 0; x < n; ++x) {
        if (!holds(x)) {
          report.add(name, false, {x});
          return;
        }
      }
      report.add(name, true);
    };
    auto binary = [&](char const* name, auto&& holds) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          if (!holds(x, y)) {
            report.add(name, false, {x, y});
            return;
          }
        }
      }
      report.add(name, true);
    };

    unary("x+x=x", [&](Index x) { return m(p(x), x) == x; });
    binary("(x+y+)+=x+y+",
           [&](Index x, Index y) { return p(m(p(x), p(y))) == m(p(x), p(y)); });
    binary("x+y+=y+x+",
           [&](Index x, Index y) { return m(p(x), p(y)) == m(p(y), p(x)); });
    binary("x+(xy)+=(xy)+",
           [&](Index x, Index y) { return m(p(x), p(m(x, y))) == p(m(x, y)); });
    binary("(xy)+=(xy+)+",
           [&](Index x, Index y) { return p(m(x, y)) == p(m(x, p(y))); });
    unary("xx*=x", [&](Index x) { return m(x, t(x)) == x; });
    binary("(x*y*)*=x*y*",
           [&](Index x, Index y) { return t(m(t(x), t(y))) == m(t(x), t(y)); });
    binary("x*y*=y*x*",
           [&](Index x, Index y) { return m(t(x), t(y)) == m(t(y), t(x)); });
    binary("(xy)*y*=(xy)*",
           [&](Index x, Index y) { return m(t(m(x, y)), t(y)) == t(m(x, y)); });
    binary("(xy)*=(x*y)*",
           [&](Index x, Index y) { return t(m(x, y)) == t(m(t(x), y)); });
    if (auto w = s.associativity_failure()) {
      report.add("x(yz)=(xy)z", false, {(*w)[0], (*w)[1], (*w)[2]});
    } else {
      report.add("x(yz)=(xy)z", true);
    }
    unary("(x+)*=x+", [&](Index x) { return t(p(x)) == p(x); });
    unary("(x*)+=x*", [&](Index x) { return p(t(x)) == t(x); });
    return report;
  }

  inline VerificationReport check_variety(EhresmannStructure const& es) {
    return check_variety(es.semigroup(), es.plus_map(), es.star_map());
  }

  //! Outcome of a restriction test; witness is the first failing (a, e).
  struct RestrictionCheck {
    bool                                   holds = true;
    std::optional<std::pair<Index, Index>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! a e = (a e)+ a for all a in S, e in E.
  inline RestrictionCheck is_left_restriction(EhresmannStructure const& es) {
    for (Index a = 0; a < es.size(); ++a) {
      for (auto e : es.semilattice()) {
        Index const ae = es.product(a, e);
        if (ae != es.product(es.plus(ae), a)) {
          return {false, std::pair{a, e}};
        }
      }
    }
    return {};
  }

  //! e a = a (e a)* for all a in S, e in E.
  inline RestrictionCheck is_right_restriction(EhresmannStructure const& es) {
    for (Index a = 0; a < es.size(); ++a) {
      for (auto e : es.semilattice()) {
        Index const ea = es.product(e, a);
        if (ea != es.product(a, es.star(ea))) {
          return {false, std::pair{a, e}};
        }
      }
    }
    return {};
  }

  struct OrderContainment {
    bool                                   left_restriction  = false;
    bool                                   right_restriction = false;
    bool                                   l_in_r            = false;
    bool                                   r_in_l            = false;
    std::optional<std::pair<Index, Index>> l_not_in_r;  // a <=_l b, not <=_r
    std::optional<std::pair<Index, Index>> r_not_in_l;  // a <=_r b, not <=_l

    //! Left restriction forces <=_l in <=_r, right restriction the reverse.
    bool consistent() const noexcept {
      return (!left_restriction || l_in_r) && (!right_restriction || r_in_l);
    }
  };

  inline OrderContainment order_containment(EhresmannStructure const& es) {
    OrderContainment oc;
    oc.left_restriction  = is_left_restriction(es).holds;
    oc.right_restriction = is_right_restriction(es).holds;
    auto to_index = [](auto const& w) -> std::optional<std::pair<Index, Index>> {
      if (!w) {
        return std::nullopt;
      }
      return std::pair{Index(w->first), Index(w->second)};
    };
    oc.l_not_in_r = to_index(es.leq_l().first_not_in(es.leq_r()));
    oc.r_not_in_l = to_index(es.leq_r().first_not_in(es.leq_l()));
    oc.l_in_r     = !oc.l_not_in_r;
    oc.r_in_l     = !oc.r_not_in_l;
    return oc;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_STRUCTURE_HPP_
