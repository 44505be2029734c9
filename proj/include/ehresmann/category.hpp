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

// The Ehresmann category C(S) of an E-Ehresmann semigroup, its restrictions
// and co-restrictions, exhaustive verification of the category-with-order and
// Ehresmann category axioms, and the reverse construction S(C).
//
// Morphisms share the index space of the semigroup: morphism x is C(x) and
// S(x) is x. Composition is only exposed on composable pairs.

#ifndef EHRESMANN_CATEGORY_HPP_
#define EHRESMANN_CATEGORY_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "structure.hpp"

namespace ehresmann {

  class EhresmannCategory;
  EhresmannCategory build_category(EhresmannStructure const& es);

  class EhresmannCategory {
   public:
    std::size_t morphism_count() const noexcept {
      return _s.size();
    }

    std::vector<Index> const& objects() const noexcept {
      return _objects;
    }

    bool is_object(Index x) const noexcept {
      return _is_object[x];
    }

    Index dom(Index x) const noexcept {
      return _dom[x];
    }

    Index cod(Index x) const noexcept {
      return _cod[x];
    }

    std::vector<Index> const& dom_map() const noexcept {
      return _dom;
    }

    std::vector<Index> const& cod_map() const noexcept {
      return _cod;
    }

    bool composable(Index x, Index y) const noexcept {
      return _cod[x] == _dom[y];
    }

    std::optional<Index> compose(Index x, Index y) const noexcept {
      if (!composable(x, y)) {
        return std::nullopt;
      }
      return _s(x, y);
    }

    //! Meet of two objects in the object semilattice.
    Index meet(Index e, Index f) const noexcept {
      return _s(e, f);
    }

    //! e <= f in the object semilattice.
    bool object_leq(Index e, Index f) const noexcept {
      return meet(e, f) == e;
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

    std::string name(Index x) const {
      return _s.name(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _s.names();
    }

    //! (e | x): the restriction of x to an object e <= dom(x), realised as
    //! the product e x and cross-checked against its characterisation
    //! dom((e|x)) = e and (e|x) <=_r x.
    Index restriction(Index e, Index x) const {
      if (!is_object(e) || !object_leq(e, _dom[x])) {
        throw Error(ErrorKind::not_below_domain,
                    name(e) + " is not an object below dom(" + name(x) + ")",
                    {e, x});
      }
      Index const y = _s(e, x);
      if (_dom[y] != e || !_leq_r(y, x)) {
        throw Error(ErrorKind::restriction_mismatch,
                    "product " + name(e) + "*" + name(x)
                        + " is not the restriction",
                    {e, x, y});
      }
      return y;
    }

    //! (x | e) for an object e <= cod(x), realised as x e and cross-checked.
    Index corestriction(Index x, Index e) const {
      if (!is_object(e) || !object_leq(e, _cod[x])) {
        throw Error(ErrorKind::not_below_range,
                    name(e) + " is not an object below cod(" + name(x) + ")",
                    {x, e});
      }
      Index const y = _s(x, e);
      if (_cod[y] != e || !_leq_l(y, x)) {
        throw Error(ErrorKind::restriction_mismatch,
                    "product " + name(x) + "*" + name(e)
                        + " is not the co-restriction",
                    {x, e, y});
      }
      return y;
    }

    //! The same category with both orders replaced. Used to exercise the
    //! axiom checker on perturbed data.
    EhresmannCategory with_orders(Relation leq_r, Relation leq_l) const {
      EhresmannCategory c = *this;
      c._leq_r            = std::move(leq_r);
      c._leq_l            = std::move(leq_l);
      return c;
    }

   private:
    friend EhresmannCategory build_category(EhresmannStructure const&);

    EhresmannCategory() = default;

    FiniteSemigroup    _s;
    std::vector<Index> _objects;
    std::vector<bool>  _is_object;
    std::vector<Index> _dom;
    std::vector<Index> _cod;
    Relation           _leq_r;
    Relation           _leq_l;
  };

  //! Objects E, one morphism a : a+ -> a* per element, C(a) C(b) = C(ab)
  //! whenever a* = b+, orders inherited from S.
  inline EhresmannCategory build_category(EhresmannStructure const& es) {
    EhresmannCategory c;
    c._s       = es.semigroup();
    c._objects = es.semilattice();
    c._is_object.assign(es.size(), false);
    for (auto e : c._objects) {
      c._is_object[e] = true;
    }
    c._dom   = es.plus_map();
    c._cod   = es.star_map();
    c._leq_r = es.leq_r();
    c._leq_l = es.leq_l();
    return c;
  }

  inline Index restriction(EhresmannCategory const& c, Index e, Index x) {
    return c.restriction(e, x);
  }

  inline Index corestriction(EhresmannCategory const& c, Index x, Index e) {
    return c.corestriction(x, e);
  }

  namespace detail {
    // Restrictions and co-restrictions located purely from the orders, as
    // the unique y <=_r x with dom(y) = e (resp. y <=_l x with cod(y) = e).
    class OrderRestrictions {
     public:
      explicit OrderRestrictions(EhresmannCategory const& c) : _c(c) {
        std::size_t const n = c.morphism_count();
        _down_r.resize(n);
        _down_l.resize(n);
        for (auto const& [a, b] : c.leq_r().pairs()) {
          _down_r[b].push_back(Index(a));
        }
        for (auto const& [a, b] : c.leq_l().pairs()) {
          _down_l[b].push_back(Index(a));
        }
      }

      //! Number of y <=_r x with dom(y) = e, and the first one.
      std::pair<std::size_t, Index> restrictions(Index e, Index x) const {
        std::size_t count = 0;
        Index       first = 0;
        for (auto y : _down_r[x]) {
          if (_c.dom(y) == e && count++ == 0) {
            first = y;
          }
        }
        return {count, first};
      }

      std::pair<std::size_t, Index> corestrictions(Index x, Index e) const {
        std::size_t count = 0;
        Index       first = 0;
        for (auto y : _down_l[x]) {
          if (_c.cod(y) == e && count++ == 0) {
            first = y;
          }
        }
        return {count, first};
      }

      std::optional<Index> restriction(Index e, Index x) const {
        auto [count, y] = restrictions(e, x);
        return count == 1 ? std::optional<Index>(y) : std::nullopt;
      }

      std::optional<Index> corestriction(Index x, Index e) const {
        auto [count, y] = corestrictions(x, e);
        return count == 1 ? std::optional<Index>(y) : std::nullopt;
      }

     private:
      EhresmannCategory const&        _c;
      std::vector<std::vector<Index>> _down_r;
      std::vector<std::vector<Index>> _down_l;
    };

    inline std::vector<std::size_t> w(std::initializer_list<Index> xs) {
      return std::vector<std::size_t>(xs.begin(), xs.end());
    }
  }  // namespace detail

  //! Exhaustive check of the category laws, CO1-CO3 for both orders and
  //! EC2-EC8. Every check is evaluated from the category data alone: the
  //! orders, dom/cod, composition of composable pairs and the object meet.
  inline VerificationReport verify_axioms(EhresmannCategory const& c) {
    using detail::w;
    VerificationReport report("ehresmann-category");
    std::size_t const  n = c.morphism_count();
    auto const&        objects = c.objects();

    std::vector<std::vector<Index>> by_dom(n);
    for (Index x = 0; x < n; ++x) {
      by_dom[c.dom(x)].push_back(x);
    }

    {
      std::optional<std::vector<std::size_t>> bad;
      for (Index x = 0; x < n && !bad; ++x) {
        for (auto y : by_dom[c.cod(x)]) {
          Index const xy = *c.compose(x, y);
          if (c.dom(xy) != c.dom(x) || c.cod(xy) != c.cod(y)) {
            bad = w({x, y});
            break;
          }
        }
      }
      report.add("composite dom/cod", !bad, bad.value_or(w({})));
    }
    {
      std::optional<std::vector<std::size_t>> bad;
      for (auto e : objects) {
        if (c.dom(e) != e || c.cod(e) != e) {
          bad = w({e});
          break;
        }
      }
      for (Index x = 0; x < n && !bad; ++x) {
        auto const l = c.compose(c.dom(x), x);
        auto const r = c.compose(x, c.cod(x));
        if (!l || *l != x || !r || *r != x) {
          bad = w({x});
        }
      }
      report.add("identities", !bad, bad.value_or(w({})));
    }

    for (Order o : {Order::right, Order::left}) {
      Relation const&   leq    = c.leq(o);
      std::string const suffix = std::string("[") + to_string(o) + "]";
      auto const        pairs  = leq.pairs();

      {
        std::vector<std::size_t> wit;
        if (auto a = leq.reflexivity_failure()) {
          wit = {*a};
        } else if (auto b = leq.antisymmetry_failure()) {
          wit = {b->first, b->second};
        } else if (auto t = leq.transitivity_failure()) {
          wit = {(*t)[0], (*t)[1], (*t)[2]};
        }
        report.add("partial order" + suffix, wit.empty(), wit);
      }
      {
        std::optional<std::vector<std::size_t>> bad;
        for (auto const& [x, y] : pairs) {
          if (!leq(c.dom(x), c.dom(y)) || !leq(c.cod(x), c.cod(y))) {
            bad = w({Index(x), Index(y)});
            break;
          }
        }
        report.add("CO1" + suffix, !bad, bad.value_or(w({})));
      }
      {
        std::optional<std::vector<std::size_t>> bad;
        for (std::size_t i = 0; i < pairs.size() && !bad; ++i) {
          auto const [x, y] = pairs[i];
          for (auto u : by_dom[c.cod(x)]) {
            for (auto v : leq.row(u)) {
              if (!c.composable(Index(y), Index(v))) {
                continue;
              }
              Index const xu = *c.compose(Index(x), u);
              Index const yv = *c.compose(Index(y), Index(v));
              if (!leq(xu, yv)) {
                bad = w({Index(x), Index(y), u, Index(v)});
                break;
              }
            }
            if (bad) {
              break;
            }
          }
        }
        report.add("CO2" + suffix, !bad, bad.value_or(w({})));
      }
      {
        std::optional<std::vector<std::size_t>> bad;
        for (auto const& [x, y] : pairs) {
          if (x != y && c.dom(x) == c.dom(y) && c.cod(x) == c.cod(y)) {
            bad = w({Index(x), Index(y)});
            break;
          }
        }
        report.add("CO3" + suffix, !bad, bad.value_or(w({})));
      }
    }

    detail::OrderRestrictions const res(c);
    {
      std::optional<std::vector<std::size_t>> bad;
      for (Index x = 0; x < n && !bad; ++x) {
        for (auto e : objects) {
          if (c.leq_r()(e, c.dom(x)) && res.restrictions(e, x).first != 1) {
            bad = w({e, x});
            break;
          }
        }
      }
      report.add("EC2", !bad, bad.value_or(w({})));
    }
    {
      std::optional<std::vector<std::size_t>> bad;
      for (Index x = 0; x < n && !bad; ++x) {
        for (auto e : objects) {
          if (c.leq_l()(e, c.cod(x)) && res.corestrictions(x, e).first != 1) {
            bad = w({x, e});
            break;
          }
        }
      }
      report.add("EC3", !bad, bad.value_or(w({})));
    }
    {
      std::optional<std::vector<std::size_t>> bad;
      for (auto e : objects) {
        for (auto f : objects) {
          if (c.leq_r()(e, f) != c.leq_l()(e, f)) {
            bad = w({e, f});
            break;
          }
        }
        if (bad) {
          break;
        }
      }
      report.add("EC4", !bad, bad.value_or(w({})));
    }
    {
      // The declared meet is the greatest lower bound under <=_r.
      std::optional<std::vector<std::size_t>> bad;
      auto const&                             r = c.leq_r();
      for (auto e : objects) {
        for (auto f : objects) {
          Index const m  = c.meet(e, f);
          bool        ok = c.is_object(m) && r(m, e) && r(m, f);
          for (auto g : objects) {
            if (ok && r(g, e) && r(g, f) && !r(g, m)) {
              ok = false;
            }
          }
          if (!ok) {
            bad = w({e, f});
            break;
          }
        }
        if (bad) {
          break;
        }
      }
      report.add("EC5", !bad, bad.value_or(w({})));
    }
    {
      Relation const rl = c.leq_r().then(c.leq_l());
      Relation const lr = c.leq_l().then(c.leq_r());
      std::optional<std::pair<std::size_t, std::size_t>> diff
          = rl.first_not_in(lr);
      if (!diff) {
        diff = lr.first_not_in(rl);
      }
      report.add("EC6", !diff,
                 diff ? std::vector<std::size_t>{diff->first, diff->second}
                      : std::vector<std::size_t>{});
    }
    {
      std::optional<std::vector<std::size_t>> bad;
      for (auto const& [x, y] : c.leq_r().pairs()) {
        for (auto f : objects) {
          auto const a = res.corestriction(Index(x), c.meet(c.cod(Index(x)), f));
          auto const b = res.corestriction(Index(y), c.meet(c.cod(Index(y)), f));
          if (!a || !b || !c.leq_r()(*a, *b)) {
            bad = w({Index(x), Index(y), f});
            break;
          }
        }
        if (bad) {
          break;
        }
      }
      report.add("EC7", !bad, bad.value_or(w({})));
    }
    {
      std::optional<std::vector<std::size_t>> bad;
      for (auto const& [x, y] : c.leq_l().pairs()) {
        for (auto f : objects) {
          auto const a = res.restriction(c.meet(c.dom(Index(x)), f), Index(x));
          auto const b = res.restriction(c.meet(c.dom(Index(y)), f), Index(y));
          if (!a || !b || !c.leq_l()(*a, *b)) {
            bad = w({Index(x), Index(y), f});
            break;
          }
        }
        if (bad) {
          break;
        }
      }
      report.add("EC8", !bad, bad.value_or(w({})));
    }
    return report;
  }

  //! S(C): the morphisms with the pseudo-product
  //!   x . y = (x | cod(x) & dom(y)) (cod(x) & dom(y) | y),
  //! E the identity morphisms, x+ = dom(x) and x* = cod(x). Restrictions are
  //! located through the orders, so the rebuilt table depends only on the
  //! category data.
  inline EhresmannStructure rebuild_semigroup(EhresmannCategory const& c) {
    std::size_t const             n = c.morphism_count();
    detail::OrderRestrictions const res(c);
    std::vector<Index>            flat(n * n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        Index const m  = c.meet(c.cod(x), c.dom(y));
        auto const  xr = res.corestriction(x, m);
        auto const  yr = res.restriction(m, y);
        if (!xr || !yr || !c.composable(*xr, *yr)) {
          throw Error(ErrorKind::precondition_not_met,
                      "pseudo-product undefined for " + c.name(x) + ", "
                          + c.name(y),
                      {x, y});
        }
        flat[std::size_t(x) * n + y] = *c.compose(*xr, *yr);
      }
    }
    FiniteSemigroup s(detail::TrustedTable{}, n, std::move(flat), c.names());
    EhresmannStructure es = derive_structure(std::move(s), c.objects());
    if (es.plus_map() != c.dom_map() || es.star_map() != c.cod_map()) {
      throw Error(ErrorKind::internal_inconsistency,
                  "rebuilt unary operations differ from dom/cod");
    }
    return es;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_CATEGORY_HPP_
