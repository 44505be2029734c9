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

// Representation-theoretic consequences: invertible morphisms, Reg_E(S), the
// EI condition, the radical of category and semigroup algebras over Q, and the
// maximal semisimple image.
//
// Radicals are computed over Q only. In characteristic zero the Jacobson
// radical of a finite-dimensional algebra is the kernel of the trace form
// (x, y) -> tr(L_{xy}) of the left regular representation, which is what
// radical_oracle computes.

#ifndef EHRESMANN_REP_THEORY_HPP_
#define EHRESMANN_REP_THEORY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "category.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "semigroup.hpp"
#include "structure.hpp"

namespace ehresmann {

  //! { a | a+ R a and a L a* }.
  inline std::vector<Index> invertible_morphisms(EhresmannStructure const& es,
                                                 GreenData const& g) {
    std::vector<Index> out;
    for (Index a = 0; a < es.size(); ++a) {
      if (g.r_related(a, es.plus(a)) && g.l_related(a, es.star(a))) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline std::vector<Index> invertible_morphisms(EhresmannStructure const& es,
                                                 EhresmannCategory const&) {
    return invertible_morphisms(es, green(es.semigroup()));
  }

  //! Morphisms x with a two-sided inverse y: x y = dom(x), y x = cod(x).
  //! Independent of Green's relations.
  inline std::vector<Index>
  invertible_morphisms_by_search(EhresmannCategory const& c) {
    std::vector<Index> out;
    std::size_t const  n = c.morphism_count();
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        auto const xy = c.compose(x, y);
        auto const yx = c.compose(y, x);
        if (xy && yx && *xy == c.dom(x) && *yx == c.cod(x)) {
          out.push_back(x);
          break;
        }
      }
    }
    return out;
  }

  //! Reg_E(S) together with a -> a^{-1}, the inverse with a a^{-1} = a+ and
  //! a^{-1} a = a*.
  struct RegESet {
    std::vector<Index>                elements;
    std::vector<std::optional<Index>> inverse;  // indexed by element of S

    bool contains(Index a) const noexcept {
      return inverse[a].has_value();
    }

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  //! Reg_E(S), verified to be an inverse subsemigroup whose idempotents are
  //! exactly E and which is a down-set for <=_r and <=_l. A failed
  //! verification contradicts the theory and is raised as not_closed or
  //! internal_inconsistency.
  inline RegESet reg_E(EhresmannStructure const& es) {
    auto const        g = green(es.semigroup());
    std::size_t const n = es.size();
    RegESet           reg;
    reg.elements = invertible_morphisms(es, g);
    reg.inverse.assign(n, std::nullopt);
    std::vector<bool> member(n, false);
    for (auto a : reg.elements) {
      member[a] = true;
    }
    for (auto a : reg.elements) {
      for (auto b : reg.elements) {
        if (!member[es.product(a, b)]) {
          throw Error(ErrorKind::not_closed,
                      "Reg_E(S) is not closed: " + es.name(a) + "*"
                          + es.name(b),
                      {a, b});
        }
      }
    }
    for (auto a : reg.elements) {
      std::vector<Index> inverses;
      for (auto b : reg.elements) {
        if (es.product(es.product(a, b), a) == a
            && es.product(es.product(b, a), b) == b) {
          inverses.push_back(b);
        }
      }
      if (inverses.size() != 1) {
        throw Error(ErrorKind::internal_inconsistency,
                    es.name(a) + " has " + std::to_string(inverses.size())
                        + " inverses in Reg_E(S)",
                    {a});
      }
      Index const b = inverses.front();
      if (es.product(a, b) != es.plus(a) || es.product(b, a) != es.star(a)) {
        throw Error(ErrorKind::internal_inconsistency,
                    "inverse of " + es.name(a) + " does not realise a+ and a*",
                    {a, b});
      }
      reg.inverse[a] = b;
      if (is_idempotent(es.semigroup(), a) != es.in_semilattice(a)) {
        throw Error(ErrorKind::internal_inconsistency,
                    "idempotents of Reg_E(S) differ from E at " + es.name(a),
                    {a});
      }
    }
    for (auto e : es.semilattice()) {
      if (!member[e]) {
        throw Error(ErrorKind::internal_inconsistency,
                    "E is not contained in Reg_E(S)", {e});
      }
    }
    for (Order o : {Order::right, Order::left}) {
      for (auto const& [b, a] : es.leq(o).pairs()) {
        if (member[a] && !member[b]) {
          throw Error(ErrorKind::internal_inconsistency,
                      "Reg_E(S) is not a down-set at " + es.name(Index(b)),
                      {b, a});
        }
      }
    }
    return reg;
  }

  //! EI status and the related characterisations, each computed two ways
  //! where a second route exists.
  struct EIReport {
    //! Every endomorphism monoid is a group (direct test).
    bool is_ei = true;
    //! First endomorphism without an inverse in its endomorphism monoid.
    std::optional<Index> non_invertible_endomorphism;
    //! H~_E class of e equals its H class for every e in E.
    bool h_tilde_criterion = true;
    std::optional<Index> h_tilde_witness;
    //! Orders of the endomorphism monoids, one per object in E order.
    std::vector<std::size_t> endomorphism_orders;

    //! No idempotent outside E commutes with all of E.
    bool e_maximal_semilattice = true;
    std::optional<Index> extending_idempotent;

    //! Objects grouped by isomorphism in C, and by D restricted to E.
    std::vector<std::vector<Index>> object_iso_classes;
    std::vector<std::vector<Index>> d_classes_of_e;

    bool is_groupoid            = false;
    bool inverse_with_e_full    = false;

    bool criteria_agree() const noexcept {
      return is_ei == h_tilde_criterion
             && object_iso_classes == d_classes_of_e
             && is_groupoid == inverse_with_e_full;
    }
  };

  inline EIReport is_EI(EhresmannStructure const& es,
                        EhresmannCategory const&  c) {
    EIReport          r;
    std::size_t const n = es.size();
    auto const&       s = es.semigroup();
    auto const        g = green(s);

    for (auto e : es.semilattice()) {
      std::vector<Index> endo;
      for (Index a = 0; a < n; ++a) {
        if (c.dom(a) == e && c.cod(a) == e) {
          endo.push_back(a);
        }
      }
      r.endomorphism_orders.push_back(endo.size());
      for (auto a : endo) {
        bool invertible = false;
        for (auto b : endo) {
          if (*c.compose(a, b) == e && *c.compose(b, a) == e) {
            invertible = true;
            break;
          }
        }
        r.is_ei = r.is_ei && invertible;
      }
    }
    for (auto e : es.semilattice()) {
      for (Index a = 0; a < n; ++a) {
        bool const in_tilde = es.plus(a) == e && es.star(a) == e;
        if (in_tilde != g.h_related(a, e)) {
          if (r.h_tilde_criterion) {
            r.h_tilde_criterion = false;
            r.h_tilde_witness   = a;
          }
        }
      }
    }
    if (!r.is_ei) {
      // Smallest index among the non-invertible endomorphisms.
      for (Index a = 0; a < n; ++a) {
        if (c.dom(a) == c.cod(a)) {
          bool invertible = false;
          for (Index b = 0; b < n && !invertible; ++b) {
            auto const ab = c.compose(a, b);
            auto const ba = c.compose(b, a);
            invertible = ab && ba && *ab == c.dom(a) && *ba == c.dom(a);
          }
          if (!invertible) {
            r.non_invertible_endomorphism = a;
            break;
          }
        }
      }
    }

    for (auto f : idempotents(s)) {
      if (es.in_semilattice(f)) {
        continue;
      }
      bool commutes = true;
      for (auto e : es.semilattice()) {
        commutes = commutes && s(e, f) == s(f, e);
      }
      if (commutes) {
        r.e_maximal_semilattice = false;
        r.extending_idempotent  = f;
        break;
      }
    }

    auto const         inv = invertible_morphisms_by_search(c);
    std::vector<bool>  is_inv(n, false);
    for (auto x : inv) {
      is_inv[x] = true;
    }
    detail::UnionFind iso(n);
    for (Index x = 0; x < n; ++x) {
      if (is_inv[x]) {
        iso.unite(c.dom(x), c.cod(x));
      }
    }
    std::map<std::size_t, std::vector<Index>> by_root, by_d;
    for (auto e : es.semilattice()) {
      by_root[iso.find(e)].push_back(e);
      by_d[g.d_class[e]].push_back(e);
    }
    for (auto& [k, v] : by_root) {
      r.object_iso_classes.push_back(v);
    }
    for (auto& [k, v] : by_d) {
      r.d_classes_of_e.push_back(v);
    }
    std::sort(r.object_iso_classes.begin(), r.object_iso_classes.end());
    std::sort(r.d_classes_of_e.begin(), r.d_classes_of_e.end());

    r.is_groupoid = inv.size() == n;
    r.inverse_with_e_full
        = is_inverse_semigroup(s) && idempotents(s) == es.semilattice();
    return r;
  }

  //! A finite-dimensional algebra by structure constants:
  //! b_i b_j = sum_k c_{ij}^k b_k.
  class StructureConstants {
   public:
    using Vector = std::vector<std::pair<Index, Rational>>;

    explicit StructureConstants(std::size_t dim)
        : _dim(dim), _products(dim * dim) {}

    std::size_t dimension() const noexcept {
      return _dim;
    }

    Vector const& product(Index i, Index j) const noexcept {
      return _products[std::size_t(i) * _dim + j];
    }

    void set_product(Index i, Index j, Vector v) {
      _products[std::size_t(i) * _dim + j] = std::move(v);
    }

    static StructureConstants from_semigroup(FiniteSemigroup const& s) {
      StructureConstants sc(s.size());
      for (Index i = 0; i < s.size(); ++i) {
        for (Index j = 0; j < s.size(); ++j) {
          sc.set_product(i, j, {{s(i, j), Rational(1)}});
        }
      }
      return sc;
    }

    static StructureConstants from_category(EhresmannCategory const& c) {
      StructureConstants sc(c.morphism_count());
      for (Index i = 0; i < c.morphism_count(); ++i) {
        for (Index j = 0; j < c.morphism_count(); ++j) {
          if (auto ij = c.compose(i, j)) {
            sc.set_product(i, j, {{*ij, Rational(1)}});
          }
        }
      }
      return sc;
    }

   private:
    std::size_t         _dim;
    std::vector<Vector> _products;
  };

  struct RadicalResult {
    std::size_t    dimension = 0;
    RationalMatrix basis;  // coordinate vectors of a basis of Rad(A)
  };

  //! Rad(A) = { x | tr(L_{xy}) = 0 for all y }, valid over Q. Builds the Gram
  //! matrix T[i][j] = tr(L_{b_i b_j}) and returns its exact nullspace.
  inline RadicalResult radical_oracle(StructureConstants const& sc) {
    std::size_t const     d = sc.dimension();
    std::vector<Rational> trace(d, Rational(0));
    for (Index k = 0; k < d; ++k) {
      for (Index m = 0; m < d; ++m) {
        for (auto const& [t, coef] : sc.product(k, m)) {
          if (t == m) {
            trace[k] += coef;
          }
        }
      }
    }
    RationalMatrix gram(d, std::vector<Rational>(d, Rational(0)));
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        for (auto const& [k, coef] : sc.product(i, j)) {
          gram[i][j] += coef * trace[k];
        }
      }
    }
    // The trace form is symmetric, so the right nullspace is the radical.
    RadicalResult r;
    r.basis     = nullspace(gram, d);
    r.dimension = r.basis.size();
    return r;
  }

  struct RadicalSpan {
    std::vector<Index> non_invertible;
    std::size_t        oracle_dimension = 0;
    //! Every oracle basis vector is supported on the non-invertible
    //! morphisms; with equal dimensions the two subspaces coincide.
    bool               oracle_in_span = false;
    bool               two_sided_ideal = false;
    //! Least k with I^k = 0, or 0 if no such k <= dim + 1.
    std::size_t        nilpotency_index = 0;

    std::size_t dimension() const noexcept {
      return non_invertible.size();
    }

    bool matches_oracle() const noexcept {
      return oracle_dimension == dimension() && oracle_in_span;
    }

    bool passed() const noexcept {
      return matches_oracle() && two_sided_ideal && nilpotency_index > 0;
    }
  };

  //! For an EI category over Q, the span of the non-invertible morphisms,
  //! checked against the trace-form oracle, for the ideal property, and for
  //! nilpotency. Throws not_ei otherwise.
  inline RadicalSpan radical_span(EhresmannStructure const& es,
                                  EhresmannCategory const&  c) {
    auto const ei = is_EI(es, c);
    if (!ei.is_ei) {
      throw Error(ErrorKind::not_ei,
                  "category is not EI: endomorphism "
                      + c.name(*ei.non_invertible_endomorphism)
                      + " is not invertible",
                  {*ei.non_invertible_endomorphism});
    }
    std::size_t const n = c.morphism_count();
    RadicalSpan       rs;
    std::vector<bool> invertible(n, false);
    for (auto x : invertible_morphisms_by_search(c)) {
      invertible[x] = true;
    }
    for (Index x = 0; x < n; ++x) {
      if (!invertible[x]) {
        rs.non_invertible.push_back(x);
      }
    }

    auto const oracle   = radical_oracle(StructureConstants::from_category(c));
    rs.oracle_dimension = oracle.dimension;
    rs.oracle_in_span   = true;
    for (auto const& v : oracle.basis) {
      for (Index x = 0; x < n; ++x) {
        if (sgn(v[x]) != 0 && invertible[x]) {
          rs.oracle_in_span = false;
        }
      }
    }

    rs.two_sided_ideal = true;
    for (auto m : rs.non_invertible) {
      for (Index x = 0; x < n; ++x) {
        auto const xm = c.compose(x, m);
        auto const mx = c.compose(m, x);
        if ((xm && invertible[*xm]) || (mx && invertible[*mx])) {
          rs.two_sided_ideal = false;
        }
      }
    }

    // The ideal is spanned by basis elements, so I^k is spanned by the
    // composites of k composable non-invertible morphisms.
    std::vector<bool> power(n, false);
    for (auto m : rs.non_invertible) {
      power[m] = true;
    }
    for (std::size_t k = 1; k <= n + 1; ++k) {
      if (std::none_of(power.begin(), power.end(), [](bool b) { return b; })) {
        rs.nilpotency_index = k;
        break;
      }
      std::vector<bool> next(n, false);
      for (Index p = 0; p < n; ++p) {
        if (!power[p]) {
          continue;
        }
        for (auto m : rs.non_invertible) {
          if (auto pm = c.compose(p, m)) {
            next[*pm] = true;
          }
        }
      }
      power = std::move(next);
    }
    return rs;
  }

  //! Raw data and verdicts for the maximal semisimple image of QS.
  struct SemisimpleImage {
    bool        left_restriction  = false;
    bool        right_restriction = false;
    bool        ei                = false;
    Order       order             = Order::right;
    std::size_t semigroup_dimension = 0;
    std::size_t reg_e_size          = 0;
    std::size_t radical_dimension   = 0;  // dim Rad(QS), by the oracle
    //! rank of Reg_E(S) in QS / Rad(QS).
    std::size_t projected_rank = 0;
    //! psi(C(a)) lies in Q Reg_E(S) for every invertible a.
    bool psi_into_reg_e = false;

    bool within_theorem() const noexcept {
      return (left_restriction || right_restriction) && ei;
    }

    bool dimension_matches() const noexcept {
      return radical_dimension + reg_e_size == semigroup_dimension;
    }

    bool projection_full_rank() const noexcept {
      return projected_rank == reg_e_size;
    }

    bool passed() const noexcept {
      return dimension_matches() && projection_full_rank() && psi_into_reg_e;
    }
  };

  //! Computes the semisimple-image data without asserting the hypotheses.
  //! The order is <=_r when S is left restriction and <=_l when it is only
  //! right restriction.
  inline SemisimpleImage semisimple_image_data(EhresmannStructure const& es,
                                               EhresmannCategory const&  c) {
    SemisimpleImage out;
    out.left_restriction    = is_left_restriction(es).holds;
    out.right_restriction   = is_right_restriction(es).holds;
    out.ei                  = is_EI(es, c).is_ei;
    out.order               = (!out.left_restriction && out.right_restriction)
                                  ? Order::left
                                  : Order::right;
    std::size_t const n     = es.size();
    out.semigroup_dimension = n;

    auto const g       = green(es.semigroup());
    auto const reg     = invertible_morphisms(es, g);
    out.reg_e_size     = reg.size();
    auto const radical = radical_oracle(
        StructureConstants::from_semigroup(es.semigroup()));
    out.radical_dimension = radical.dimension;

    RationalMatrix rows = radical.basis;
    for (auto a : reg) {
      std::vector<Rational> v(n, Rational(0));
      v[a] = 1;
      rows.push_back(std::move(v));
    }
    std::size_t const combined = rank(std::move(rows));
    out.projected_rank         = combined - radical.dimension;

    std::vector<bool> member(n, false);
    for (auto a : reg) {
      member[a] = true;
    }
    AlgebraMaps const maps(es, out.order);
    out.psi_into_reg_e = true;
    for (auto a : reg) {
      for (auto const& [y, coef] : maps.psi(a).terms()) {
        if (!member[y]) {
          out.psi_into_reg_e = false;
        }
      }
    }
    return out;
  }

  //! As semisimple_image_data, but requires S to be left or right
  //! restriction and C to be EI; throws precondition_not_met (witness 0 for
  //! restriction, 1 for EI) otherwise.
  inline SemisimpleImage semisimple_image_check(EhresmannStructure const& es,
                                                EhresmannCategory const&  c) {
    auto out = semisimple_image_data(es, c);
    if (!out.left_restriction && !out.right_restriction) {
      throw Error(ErrorKind::precondition_not_met,
                  "not restriction: S is neither left nor right restriction",
                  {0});
    }
    if (!out.ei) {
      throw Error(ErrorKind::precondition_not_met,
                  "not EI: the category has a non-invertible endomorphism",
                  {1});
    }
    return out;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_REP_THEORY_HPP_
