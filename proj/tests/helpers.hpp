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

#ifndef EHRESMANN_TESTS_HELPERS_HPP_
#define EHRESMANN_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ehresmann/ehresmann.hpp"

namespace ehresmann::test {

  using Table = std::vector<std::vector<Index>>;

  inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261018);
    return gen;
  }

  inline std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
  }

  inline Table random_table(std::size_t n) {
    Table t(n, std::vector<Index>(n));
    for (auto& row : t) {
      for (auto& x : row) {
        x = Index(uniform(0, n - 1));
      }
    }
    return t;
  }

  inline Table left_zero_table(std::size_t k) {
    Table t(k, std::vector<Index>(k));
    for (Index i = 0; i < k; ++i) {
      std::fill(t[i].begin(), t[i].end(), i);
    }
    return t;
  }

  inline FiniteSemigroup left_zero(std::size_t k) {
    return FiniteSemigroup::validate(left_zero_table(k));
  }

  // Subsets of {0, ..., bits-1} under union; a commutative band.
  inline FiniteSemigroup union_lattice(std::size_t bits) {
    std::size_t const n = std::size_t(1) << bits;
    Table             t(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        t[a][b] = a | b;
      }
    }
    return FiniteSemigroup::validate(t);
  }

  inline std::vector<Index> random_permutation(std::size_t n) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), Index(0));
    std::shuffle(p.begin(), p.end(), rng());
    return p;
  }

  // The table of S relabelled by a -> p[a].
  inline FiniteSemigroup conjugate(FiniteSemigroup const&    s,
                                   std::vector<Index> const& p) {
    std::size_t const n = s.size();
    Table             t(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        t[p[a]][p[b]] = p[s(a, b)];
      }
    }
    return FiniteSemigroup::validate(t);
  }

  // Random partial order on m points: random edges consistent with a random
  // linear order, then transitive closure.
  inline FinitePoset random_poset(std::size_t m, double density) {
    auto const                  order = random_permutation(m);
    Relation                    r(m);
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < m; ++i) {
      r.set(i, i);
      for (std::size_t j = i + 1; j < m; ++j) {
        if (edge(rng())) {
          r.set(order[i], order[j]);
        }
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (r(i, k) && r(k, j)) {
            r.set(i, j);
          }
        }
      }
    }
    return FinitePoset(r);
  }

  inline Rational random_rational() {
    auto const num = static_cast<long>(uniform(0, 40)) - 20;
    auto const den = static_cast<long>(uniform(1, 9));
    Rational   q(num, den);
    q.canonicalize();
    return q;
  }

  inline AlgebraElement random_element(Basis basis, std::size_t n,
                                       std::size_t terms) {
    AlgebraElement u(basis);
    for (std::size_t i = 0; i < terms; ++i) {
      u.add_term(Index(uniform(0, n - 1)), random_rational());
    }
    return u;
  }

  inline std::vector<EhresmannStructure> const& zoo_members() {
    static std::vector<EhresmannStructure> const members = [] {
      std::vector<EhresmannStructure> out;
      for (auto const& spec : zoo_catalogue()) {
        out.push_back(from_zoo_spec(spec));
      }
      return out;
    }();
    return members;
  }

  // Index of the partial map with the given 1-based images (0 = undefined).
  inline Index pt_index(std::vector<Index> const& images) {
    std::size_t const n = images.size();
    std::size_t       r = 0;
    for (auto x : images) {
      r = r * (n + 1) + (x == 0 ? n : x - 1);
    }
    return Index(r);
  }

  // Index of the relation with the given 1-based pairs in B_n.
  inline Index b_index(std::size_t n,
                       std::vector<std::pair<Index, Index>> const& pairs) {
    std::size_t r = 0;
    for (auto [i, j] : pairs) {
      r |= std::size_t(1) << ((i - 1) * n + (j - 1));
    }
    return Index(r);
  }

}  // namespace ehresmann::test

#endif  // EHRESMANN_TESTS_HELPERS_HPP_
