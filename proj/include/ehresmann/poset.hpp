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

// Finite posets, the Moebius function by its defining interval recursion, and
// Moebius inversion of down-set sums.

#ifndef EHRESMANN_POSET_HPP_
#define EHRESMANN_POSET_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "category.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "relation.hpp"
#include "structure.hpp"

namespace ehresmann {

  class FinitePoset {
   public:
    FinitePoset() = default;

    //! Throws not_partial_order if leq is not reflexive (witness x),
    //! antisymmetric (witness a, b) or transitive (witness a, b, c).
    explicit FinitePoset(Relation leq) : _leq(std::move(leq)) {
      if (auto x = _leq.reflexivity_failure()) {
        throw Error(ErrorKind::not_partial_order,
                    "not reflexive at " + std::to_string(*x), {*x});
      }
      if (auto ab = _leq.antisymmetry_failure()) {
        throw Error(ErrorKind::not_partial_order,
                    "not antisymmetric at (" + std::to_string(ab->first) + ","
                        + std::to_string(ab->second) + ")",
                    {ab->first, ab->second});
      }
      if (auto abc = _leq.transitivity_failure()) {
        auto [a, b, c] = *abc;
        throw Error(ErrorKind::not_partial_order,
                    "not transitive at (" + std::to_string(a) + ","
                        + std::to_string(b) + "," + std::to_string(c) + ")",
                    {a, b, c});
      }
      std::size_t const m = _leq.size();
      _down.resize(m);
      _up.resize(m);
      for (auto const& [a, b] : _leq.pairs()) {
        _down[b].push_back(Index(a));
        _up[a].push_back(Index(b));
      }
      // Elements with smaller down-sets first: a linear extension.
      _linear.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        _linear[i] = Index(i);
      }
      std::stable_sort(_linear.begin(), _linear.end(), [&](Index a, Index b) {
        return _down[a].size() < _down[b].size();
      });
    }

    std::size_t size() const noexcept {
      return _leq.size();
    }

    bool leq(Index a, Index b) const noexcept {
      return _leq(a, b);
    }

    bool less(Index a, Index b) const noexcept {
      return a != b && _leq(a, b);
    }

    Relation const& relation() const noexcept {
      return _leq;
    }

    //! { y | y <= x }, increasing by index.
    std::vector<Index> const& down_set(Index x) const noexcept {
      return _down[x];
    }

    //! { y | x <= y }, increasing by index.
    std::vector<Index> const& up_set(Index x) const noexcept {
      return _up[x];
    }

    //! Every element appears after all elements strictly below it.
    std::vector<Index> const& linear_extension() const noexcept {
      return _linear;
    }

   private:
    Relation                        _leq;
    std::vector<std::vector<Index>> _down;
    std::vector<std::vector<Index>> _up;
    std::vector<Index>              _linear;
  };

  //! mu(x, y) for every comparable pair x <= y, stored per upper element y
  //! as (x, mu(x, y)) sorted by x.
  class MoebiusCache {
   public:
    MoebiusCache() = default;

    explicit MoebiusCache(std::size_t m) : _by_upper(m) {}

    //! mu(x, y); zero when x is not below y.
    Rational operator()(Index x, Index y) const {
      auto const& col = _by_upper[y];
      auto it = std::lower_bound(
          col.begin(), col.end(), x,
          [](auto const& entry, Index key) { return entry.first < key; });
      return (it != col.end() && it->first == x) ? it->second : Rational(0);
    }

    //! (x, mu(x, y)) for all x <= y.
    std::vector<std::pair<Index, Rational>> const&
    below(Index y) const noexcept {
      return _by_upper[y];
    }

    std::size_t size() const noexcept {
      return _by_upper.size();
    }

    void set(Index x, Index y, Rational value) {
      auto& col = _by_upper[y];
      auto  it  = std::lower_bound(
          col.begin(), col.end(), x,
          [](auto const& entry, Index key) { return entry.first < key; });
      if (it != col.end() && it->first == x) {
        it->second = std::move(value);
      } else {
        col.emplace(it, x, std::move(value));
      }
    }

   private:
    std::vector<std::vector<std::pair<Index, Rational>>> _by_upper;
  };

  //! mu(x, x) = 1 and mu(x, y) = -sum_{x <= z < y} mu(x, z), evaluated for
  //! each x over its up-set in a linear extension.
  inline MoebiusCache moebius(FinitePoset const& p) {
    std::size_t const     m = p.size();
    MoebiusCache          cache(m);
    std::vector<Rational> row(m);
    std::vector<bool>     above(m);
    for (Index x = 0; x < m; ++x) {
      std::fill(above.begin(), above.end(), false);
      for (auto y : p.up_set(x)) {
        above[y] = true;
      }
      for (auto y : p.linear_extension()) {
        if (!above[y]) {
          continue;
        }
        if (y == x) {
          row[y] = 1;
        } else {
          Rational sum = 0;
          for (auto z : p.down_set(y)) {
            if (z != y && above[z]) {
              sum += row[z];
            }
          }
          row[y] = -sum;
        }
        cache.set(x, y, row[y]);
      }
    }
    return cache;
  }

  //! g(x) = sum_{y <= x} f(y).
  inline std::vector<Rational> sum_down(FinitePoset const&        p,
                                        std::span<Rational const> f) {
    std::vector<Rational> g(p.size(), Rational(0));
    for (Index x = 0; x < p.size(); ++x) {
      for (auto y : p.down_set(x)) {
        g[x] += f[y];
      }
    }
    return g;
  }

  //! f(x) = sum_{y <= x} mu(y, x) g(y).
  inline std::vector<Rational> invert(FinitePoset const&        p,
                                      MoebiusCache const&       mu,
                                      std::span<Rational const> g) {
    std::vector<Rational> f(p.size(), Rational(0));
    for (Index x = 0; x < p.size(); ++x) {
      for (auto const& [y, m] : mu.below(x)) {
        f[x] += m * g[y];
      }
    }
    return f;
  }

  inline std::vector<Rational> invert(FinitePoset const&        p,
                                      std::span<Rational const> g) {
    return invert(p, moebius(p), g);
  }

  //! (S, <=_r) or (S, <=_l).
  inline FinitePoset order_poset(EhresmannStructure const& es,
                                 Order                     o = Order::right) {
    return FinitePoset(es.leq(o));
  }

  inline FinitePoset order_poset(EhresmannCategory const& c,
                                 Order                    o = Order::right) {
    return FinitePoset(c.leq(o));
  }

}  // namespace ehresmann

#endif  // EHRESMANN_POSET_HPP_
