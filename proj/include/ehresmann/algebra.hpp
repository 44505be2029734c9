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

// Semigroup and category algebras over Q, the maps
//   phi(a) = sum_{b <= a} C(b),   psi(x) = sum_{y <= x} mu(y, x) S(y),
// and their verification as mutually inverse algebra isomorphisms.

#ifndef EHRESMANN_ALGEBRA_HPP_
#define EHRESMANN_ALGEBRA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "category.hpp"
#include "error.hpp"
#include "poset.hpp"
#include "rational.hpp"
#include "structure.hpp"

namespace ehresmann {

  enum class Basis { semigroup, category };

  constexpr char const* to_string(Basis b) noexcept {
    return b == Basis::semigroup ? "semigroup" : "category";
  }

  //! A finite Q-linear combination of basis elements. Zero coefficients are
  //! never stored, so equality is coefficient equality.
  class AlgebraElement {
   public:
    using Terms = std::map<Index, Rational>;

    explicit AlgebraElement(Basis basis = Basis::semigroup) : _basis(basis) {}

    static AlgebraElement basis_element(Basis b, Index x) {
      AlgebraElement u(b);
      u._terms.emplace(x, Rational(1));
      return u;
    }

    Basis basis() const noexcept {
      return _basis;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    Rational coefficient(Index x) const {
      auto it = _terms.find(x);
      return it == _terms.end() ? Rational(0) : it->second;
    }

    void add_term(Index x, Rational const& c) {
      if (sgn(c) == 0) {
        return;
      }
      auto [it, inserted] = _terms.emplace(x, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
          _terms.erase(it);
        }
      }
    }

    AlgebraElement& operator+=(AlgebraElement const& that) {
      require_same_basis(that);
      for (auto const& [x, c] : that._terms) {
        add_term(x, c);
      }
      return *this;
    }

    AlgebraElement& operator-=(AlgebraElement const& that) {
      require_same_basis(that);
      for (auto const& [x, c] : that._terms) {
        add_term(x, -c);
      }
      return *this;
    }

    AlgebraElement& operator*=(Rational const& k) {
      if (sgn(k) == 0) {
        _terms.clear();
        return *this;
      }
      for (auto& [x, c] : _terms) {
        c *= k;
      }
      return *this;
    }

    friend AlgebraElement operator+(AlgebraElement u, AlgebraElement const& v) {
      return u += v;
    }

    friend AlgebraElement operator-(AlgebraElement u, AlgebraElement const& v) {
      return u -= v;
    }

    friend AlgebraElement operator*(Rational const& k, AlgebraElement u) {
      return u *= k;
    }

    friend bool operator==(AlgebraElement const& u, AlgebraElement const& v) {
      return u._basis == v._basis && u._terms == v._terms;
    }

    void require_same_basis(AlgebraElement const& that) const {
      if (_basis != that._basis) {
        throw Error(ErrorKind::basis_mismatch,
                    std::string("cannot combine ") + to_string(_basis)
                        + " and " + to_string(that._basis) + " elements");
      }
    }

   private:
    Basis _basis;
    Terms _terms;
  };

  //! Bilinear extension of the semigroup product.
  inline AlgebraElement mul_semigroup(FiniteSemigroup const& s,
                                      AlgebraElement const&  u,
                                      AlgebraElement const&  v) {
    if (u.basis() != Basis::semigroup || v.basis() != Basis::semigroup) {
      throw Error(ErrorKind::basis_mismatch,
                  "semigroup product needs semigroup-basis operands");
    }
    AlgebraElement out(Basis::semigroup);
    for (auto const& [a, x] : u.terms()) {
      for (auto const& [b, y] : v.terms()) {
        out.add_term(s(a, b), x * y);
      }
    }
    return out;
  }

  inline AlgebraElement mul_semigroup(EhresmannStructure const& es,
                                      AlgebraElement const&     u,
                                      AlgebraElement const&     v) {
    return mul_semigroup(es.semigroup(), u, v);
  }

  //! Bilinear extension of x . y = xy if cod(x) = dom(y), 0 otherwise.
  inline AlgebraElement mul_category(EhresmannCategory const& c,
                                     AlgebraElement const&    u,
                                     AlgebraElement const&    v) {
    if (u.basis() != Basis::category || v.basis() != Basis::category) {
      throw Error(ErrorKind::basis_mismatch,
                  "category product needs category-basis operands");
    }
    AlgebraElement out(Basis::category);
    for (auto const& [x, p] : u.terms()) {
      for (auto const& [y, q] : v.terms()) {
        if (auto xy = c.compose(x, y)) {
          out.add_term(*xy, p * q);
        }
      }
    }
    return out;
  }

  //! Renders e.g. "C({(1,1)}) + C(∅)" for category elements and
  //! "[1,2] - [1,-]" for semigroup elements; terms in index order.
  template <typename Names>
  std::string format(AlgebraElement const& u, Names&& name) {
    if (u.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [x, c] : u.terms()) {
      std::string const label = u.basis() == Basis::category
                                    ? "C(" + name(x) + ")"
                                    : name(x);
      Rational const    mag   = abs(c);
      if (first) {
        out += sgn(c) < 0 ? "-" : "";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      if (mag != 1) {
        out += to_string(mag) + "*";
      }
      out += label;
      first = false;
    }
    return out;
  }

  //! phi and psi for one choice of natural partial order. Both maps are
  //! tabulated on basis elements at construction.
  class AlgebraMaps {
   public:
    explicit AlgebraMaps(EhresmannStructure const& es,
                         Order                     order = Order::right)
        : _order(order), _poset(order_poset(es, order)), _mu(moebius(_poset)) {
      std::size_t const n = es.size();
      _phi.reserve(n);
      _psi.reserve(n);
      for (Index a = 0; a < n; ++a) {
        AlgebraElement p(Basis::category);
        for (auto b : _poset.down_set(a)) {
          p.add_term(b, Rational(1));
        }
        _phi.push_back(std::move(p));
        AlgebraElement q(Basis::semigroup);
        for (auto const& [y, m] : _mu.below(a)) {
          q.add_term(y, m);
        }
        _psi.push_back(std::move(q));
      }
    }

    Order order() const noexcept {
      return _order;
    }

    FinitePoset const& poset() const noexcept {
      return _poset;
    }

    MoebiusCache const& moebius_function() const noexcept {
      return _mu;
    }

    AlgebraElement const& phi(Index a) const {
      return _phi[a];
    }

    AlgebraElement const& psi(Index x) const {
      return _psi[x];
    }

    AlgebraElement phi(AlgebraElement const& u) const {
      return apply(u, Basis::semigroup, _phi, Basis::category);
    }

    AlgebraElement psi(AlgebraElement const& x) const {
      return apply(x, Basis::category, _psi, Basis::semigroup);
    }

   private:
    static AlgebraElement apply(AlgebraElement const&              u,
                                Basis                              from,
                                std::vector<AlgebraElement> const& table,
                                Basis                              to) {
      if (u.basis() != from) {
        throw Error(ErrorKind::basis_mismatch,
                    std::string("expected a ") + to_string(from)
                        + "-basis element");
      }
      AlgebraElement out(to);
      for (auto const& [x, c] : u.terms()) {
        for (auto const& [y, d] : table[x].terms()) {
          out.add_term(y, c * d);
        }
      }
      return out;
    }

    Order                       _order;
    FinitePoset                 _poset;
    MoebiusCache                _mu;
    std::vector<AlgebraElement> _phi;
    std::vector<AlgebraElement> _psi;
  };

  inline AlgebraElement phi(AlgebraMaps const& maps, AlgebraElement const& u) {
    return maps.phi(u);
  }

  inline AlgebraElement psi(AlgebraMaps const& maps, AlgebraElement const& x) {
    return maps.psi(x);
  }

  //! Full expansion of one homomorphism test phi(ab) =? phi(a) phi(b).
  struct WitnessExpansion {
    Index          a = 0;
    Index          b = 0;
    Index          ab = 0;
    AlgebraElement phi_a{Basis::category};
    AlgebraElement phi_b{Basis::category};
    AlgebraElement phi_ab{Basis::category};
    AlgebraElement phi_a_phi_b{Basis::category};
  };

  using IndexPair = std::pair<Index, Index>;

  struct IsomorphismReport {
    Order       order           = Order::right;
    bool        theorem_applies = false;
    bool        psi_phi_identity = true;
    bool        phi_psi_identity = true;
    std::optional<Index> bijection_failure;
    std::size_t pairs_checked = 0;
    std::size_t case1_pairs   = 0;  // a* = b+
    std::size_t case2_pairs   = 0;  // a* != b+
    std::vector<IndexPair> case1_failures;
    std::vector<IndexPair> case2_failures;
    //! Expansion of the lexicographically first failing pair.
    std::optional<WitnessExpansion> witness;

    bool bijection() const noexcept {
      return psi_phi_identity && phi_psi_identity;
    }

    bool homomorphism() const noexcept {
      return case1_failures.empty() && case2_failures.empty();
    }

    bool passed() const noexcept {
      return bijection() && homomorphism();
    }
  };

  inline WitnessExpansion expand_pair(EhresmannCategory const& c,
                                      AlgebraMaps const&       maps,
                                      EhresmannStructure const& es,
                                      Index                    a,
                                      Index                    b) {
    WitnessExpansion w;
    w.a           = a;
    w.b           = b;
    w.ab          = es.product(a, b);
    w.phi_a       = maps.phi(a);
    w.phi_b       = maps.phi(b);
    w.phi_ab      = maps.phi(w.ab);
    w.phi_a_phi_b = mul_category(c, w.phi_a, w.phi_b);
    return w;
  }

  //! Checks psi(phi(a)) = a and phi(psi(x)) = x on every basis element, and
  //! phi(ab) = phi(a) phi(b) on every basis pair; by bilinearity the basis
  //! pairs decide the homomorphism property on the whole algebra. The pair
  //! sweep is split by rows over \p workers threads; failure lists come back
  //! sorted, so the result does not depend on the worker count.
  inline IsomorphismReport verify_isomorphism(EhresmannStructure const& es,
                                              Order    order   = Order::right,
                                              unsigned workers = 1) {
    IsomorphismReport report;
    report.order           = order;
    report.theorem_applies = order == Order::right
                                 ? is_left_restriction(es).holds
                                 : is_right_restriction(es).holds;
    auto const        c    = build_category(es);
    AlgebraMaps const maps(es, order);
    std::size_t const n = es.size();

    for (Index a = 0; a < n; ++a) {
      auto const basis_s = AlgebraElement::basis_element(Basis::semigroup, a);
      auto const basis_c = AlgebraElement::basis_element(Basis::category, a);
      if (maps.psi(maps.phi(basis_s)) != basis_s) {
        report.psi_phi_identity = false;
      }
      if (maps.phi(maps.psi(basis_c)) != basis_c) {
        report.phi_psi_identity = false;
      }
      if (!report.bijection() && !report.bijection_failure) {
        report.bijection_failure = a;
      }
    }

    workers = std::max(1U, workers);
    struct Partial {
      std::size_t            case1 = 0, case2 = 0;
      std::vector<IndexPair> fail1, fail2;
    };
    std::vector<Partial> partial(workers);
    auto sweep = [&](unsigned k) {
      Partial& out = partial[k];
      for (Index a = k; a < n; a += workers) {
        for (Index b = 0; b < n; ++b) {
          bool const case1 = es.star(a) == es.plus(b);
          (case1 ? out.case1 : out.case2)++;
          auto const lhs = maps.phi(es.product(a, b));
          auto const rhs = mul_category(c, maps.phi(a), maps.phi(b));
          if (lhs != rhs) {
            (case1 ? out.fail1 : out.fail2).emplace_back(a, b);
          }
        }
      }
    };
    if (workers == 1) {
      sweep(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned k = 0; k < workers; ++k) {
        threads.emplace_back(sweep, k);
      }
    }
    for (auto& p : partial) {
      report.case1_pairs += p.case1;
      report.case2_pairs += p.case2;
      report.case1_failures.insert(report.case1_failures.end(),
                                   p.fail1.begin(), p.fail1.end());
      report.case2_failures.insert(report.case2_failures.end(),
                                   p.fail2.begin(), p.fail2.end());
    }
    std::sort(report.case1_failures.begin(), report.case1_failures.end());
    std::sort(report.case2_failures.begin(), report.case2_failures.end());
    report.pairs_checked = report.case1_pairs + report.case2_pairs;

    std::optional<IndexPair> first;
    for (auto const* list : {&report.case1_failures, &report.case2_failures}) {
      if (!list->empty() && (!first || list->front() < *first)) {
        first = list->front();
      }
    }
    if (first) {
      report.witness = expand_pair(c, maps, es, first->first, first->second);
    }
    return report;
  }

  //! sum_{e in E} C(e), the identity of the category algebra.
  inline AlgebraElement unit(EhresmannStructure const& es) {
    AlgebraElement u(Basis::category);
    for (auto e : es.semilattice()) {
      u.add_term(e, Rational(1));
    }
    return u;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_ALGEBRA_HPP_
