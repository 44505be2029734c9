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

// Finite semigroups given by a dense multiplication table, with validation,
// idempotents, Green's relations and the usual constructions (opposite,
// direct product, subsemigroups).

#ifndef EHRESMANN_SEMIGROUP_HPP_
#define EHRESMANN_SEMIGROUP_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ehresmann {

  //! Elements of every finite structure are dense indices 0, ..., n-1.
  using Index = std::uint32_t;

  class FiniteSemigroup;

  namespace detail {
    struct TrustedTable {};
  }  // namespace detail

  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! Checks that \p table is a nonempty square array of indices in range
    //! and that the product it defines is associative. Throws Error with
    //! kind out_of_range (witness (i, j, entry)) or not_associative (witness:
    //! the lexicographically first failing triple (i, j, k)).
    static FiniteSemigroup
    validate(std::vector<std::vector<Index>> const& table,
             std::vector<std::string>               names = {}) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw Error(ErrorKind::malformed_input, "empty multiplication table");
      }
      if (!names.empty() && names.size() != n) {
        throw Error(ErrorKind::malformed_input,
                    "expected " + std::to_string(n) + " names, got "
                        + std::to_string(names.size()));
      }
      std::vector<Index> flat;
      flat.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
          throw Error(ErrorKind::malformed_input,
                      "row " + std::to_string(i) + " has length "
                          + std::to_string(table[i].size()),
                      {i});
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (table[i][j] >= n) {
            throw Error(ErrorKind::out_of_range,
                        "entry table[" + std::to_string(i) + "]["
                            + std::to_string(j)
                            + "] = " + std::to_string(table[i][j]),
                        {i, j, table[i][j]});
          }
          flat.push_back(table[i][j]);
        }
      }
      FiniteSemigroup s(detail::TrustedTable{}, n, std::move(flat),
                        std::move(names));
      if (auto w = s.associativity_failure()) {
        auto [i, j, k] = *w;
        throw Error(ErrorKind::not_associative,
                    "(" + std::to_string(i) + "*" + std::to_string(j) + ")*"
                        + std::to_string(k) + " != " + std::to_string(i)
                        + "*(" + std::to_string(j) + "*" + std::to_string(k)
                        + ")",
                    {i, j, k});
      }
      return s;
    }

    //! For generators whose tables are associative by construction. The
    //! table is row-major with n*n entries.
    FiniteSemigroup(detail::TrustedTable,
                    std::size_t              n,
                    std::vector<Index>       flat,
                    std::vector<std::string> names = {})
        : _n(n), _table(std::move(flat)), _names(std::move(names)) {}

    std::size_t size() const noexcept {
      return _n;
    }

    Index operator()(Index a, Index b) const noexcept {
      return _table[std::size_t(a) * _n + b];
    }

    std::string name(Index a) const {
      return _names.empty() ? std::to_string(a) : _names[a];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<std::vector<Index>> table() const {
      std::vector<std::vector<Index>> out(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        out[i].assign(_table.begin() + i * _n, _table.begin() + (i + 1) * _n);
      }
      return out;
    }

    std::span<Index const> flat_table() const noexcept {
      return _table;
    }

    //! Table equality; names are display data only.
    bool operator==(FiniteSemigroup const& that) const noexcept {
      return _n == that._n && _table == that._table;
    }

    std::optional<std::array<Index, 3>> associativity_failure() const {
      for (Index i = 0; i < _n; ++i) {
        for (Index j = 0; j < _n; ++j) {
          Index const ij = (*this)(i, j);
          for (Index k = 0; k < _n; ++k) {
            if ((*this)(ij, k) != (*this)(i, (*this)(j, k))) {
              return std::array<Index, 3>{i, j, k};
            }
          }
        }
      }
      return std::nullopt;
    }

   private:
    std::size_t              _n = 0;
    std::vector<Index>       _table;
    std::vector<std::string> _names;
  };

  inline bool is_idempotent(FiniteSemigroup const& s, Index a) {
    return s(a, a) == a;
  }

  inline std::vector<Index> idempotents(FiniteSemigroup const& s) {
    std::vector<Index> out;
    for (Index a = 0; a < s.size(); ++a) {
      if (is_idempotent(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  //! The two-sided identity, if there is one.
  inline std::optional<Index> identity(FiniteSemigroup const& s) {
    for (Index e = 0; e < s.size(); ++e) {
      bool ok = true;
      for (Index a = 0; a < s.size() && ok; ++a) {
        ok = s(e, a) == a && s(a, e) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  //! Relabels arbitrary keys as class ids 0, 1, ... in order of first
  //! occurrence.
  template <typename Key>
  std::vector<std::size_t> partition_from_keys(std::vector<Key> const& keys) {
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t>   out;
    out.reserve(keys.size());
    for (auto const& k : keys) {
      auto [it, inserted] = ids.emplace(k, ids.size());
      out.push_back(it->second);
    }
    return out;
  }

  //! Class-id vectors (ids numbered by first occurrence) of Green's
  //! relations.
  struct GreenData {
    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> h_class;
    std::vector<std::size_t> d_class;

    bool r_related(Index a, Index b) const {
      return r_class[a] == r_class[b];
    }
    bool l_related(Index a, Index b) const {
      return l_class[a] == l_class[b];
    }
    bool h_related(Index a, Index b) const {
      return h_class[a] == h_class[b];
    }
    bool d_related(Index a, Index b) const {
      return d_class[a] == d_class[b];
    }
  };

  namespace detail {
    using Bitset = std::vector<std::uint64_t>;

    inline void set_bit(Bitset& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace detail

  //! R and L by equality of the principal ideals aS^1 and S^1a, H = R & L,
  //! D = the join of R and L (which on a finite semigroup is R o L).
  inline GreenData green(FiniteSemigroup const& s) {
    std::size_t const          n     = s.size();
    std::size_t const          words = (n + 63) / 64;
    std::vector<detail::Bitset> right(n, detail::Bitset(words, 0));
    std::vector<detail::Bitset> left(n, detail::Bitset(words, 0));
    for (Index a = 0; a < n; ++a) {
      detail::set_bit(right[a], a);
      detail::set_bit(left[a], a);
      for (Index x = 0; x < n; ++x) {
        detail::set_bit(right[a], s(a, x));
        detail::set_bit(left[a], s(x, a));
      }
    }
    GreenData g;
    g.r_class = partition_from_keys(right);
    g.l_class = partition_from_keys(left);
    std::vector<std::pair<std::size_t, std::size_t>> rl(n);
    for (std::size_t a = 0; a < n; ++a) {
      rl[a] = {g.r_class[a], g.l_class[a]};
    }
    g.h_class = partition_from_keys(rl);
    // Join of R and L: merge each element with the first member of its R- and
    // L-class.
    detail::UnionFind        uf(n);
    std::vector<std::size_t> first_r(n, n), first_l(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      auto& fr = first_r[g.r_class[a]];
      auto& fl = first_l[g.l_class[a]];
      if (fr == n) {
        fr = a;
      }
      if (fl == n) {
        fl = a;
      }
      uf.unite(a, fr);
      uf.unite(a, fl);
    }
    std::vector<std::size_t> roots(n);
    for (std::size_t a = 0; a < n; ++a) {
      roots[a] = uf.find(a);
    }
    g.d_class = partition_from_keys(roots);
    return g;
  }

  //! E is closed under the product, consists of idempotents, and is
  //! commutative.
  inline bool is_subsemilattice(FiniteSemigroup const& s,
                                std::span<Index const> e) {
    std::vector<bool> member(s.size(), false);
    for (auto x : e) {
      if (x >= s.size() || !is_idempotent(s, x)) {
        return false;
      }
      member[x] = true;
    }
    for (auto x : e) {
      for (auto y : e) {
        if (!member[s(x, y)] || s(x, y) != s(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  inline FiniteSemigroup opposite(FiniteSemigroup const& s) {
    std::size_t const  n = s.size();
    std::vector<Index> flat(n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        flat[std::size_t(i) * n + j] = s(j, i);
      }
    }
    return FiniteSemigroup(detail::TrustedTable{}, n, std::move(flat),
                           s.names());
  }

  //! Componentwise product; the pair (a, b) has index a * |T| + b.
  inline FiniteSemigroup direct_product(FiniteSemigroup const& s,
                                        FiniteSemigroup const& t) {
    std::size_t const        m = s.size(), k = t.size(), n = m * k;
    std::vector<Index>       flat(n * n);
    std::vector<std::string> names;
    for (Index x = 0; x < n; ++x) {
      Index const a = x / k, b = x % k;
      names.push_back("(" + s.name(a) + "," + t.name(b) + ")");
      for (Index y = 0; y < n; ++y) {
        Index const c = y / k, d = y % k;
        flat[std::size_t(x) * n + y] = Index(s(a, c) * k + t(b, d));
      }
    }
    return FiniteSemigroup(detail::TrustedTable{}, n, std::move(flat),
                           std::move(names));
  }

  //! The subsemigroup on \p elements (kept in the given order, which becomes
  //! the new indexing). Throws not_closed with witness (a, b) if some product
  //! leaves the set.
  inline FiniteSemigroup subsemigroup(FiniteSemigroup const& s,
                                      std::span<Index const> elements) {
    std::vector<std::int64_t> pos(s.size(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] >= s.size() || pos[elements[i]] != -1) {
        throw Error(ErrorKind::bad_parameter,
                    "subset entries must be distinct indices in range",
                    {elements[i]});
      }
      pos[elements[i]] = std::int64_t(i);
    }
    std::size_t const        n = elements.size();
    std::vector<Index>       flat(n * n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(s.name(elements[i]));
      for (std::size_t j = 0; j < n; ++j) {
        auto const p = pos[s(elements[i], elements[j])];
        if (p < 0) {
          throw Error(ErrorKind::not_closed,
                      "product " + s.name(elements[i]) + "*"
                          + s.name(elements[j]) + " leaves the subset",
                      {elements[i], elements[j]});
        }
        flat[i * n + j] = Index(p);
      }
    }
    return FiniteSemigroup(detail::TrustedTable{}, n, std::move(flat),
                           std::move(names));
  }

  //! A semigroup in which every element is regular and idempotents commute.
  inline bool is_inverse_semigroup(FiniteSemigroup const& s) {
    auto const e = idempotents(s);
    for (auto x : e) {
      for (auto y : e) {
        if (s(x, y) != s(y, x)) {
          return false;
        }
      }
    }
    for (Index a = 0; a < s.size(); ++a) {
      bool regular = false;
      for (Index b = 0; b < s.size() && !regular; ++b) {
        regular = s(s(a, b), a) == a;
      }
      if (!regular) {
        return false;
      }
    }
    return true;
  }

  //! Maximal subsemilattices of S, each sorted, listed in lexicographic
  //! order. These are exactly the maximal cliques of the commuting graph on
  //! E(S): a clique is closed under products, since ef commutes with
  //! everything e and f commute with.
  inline std::vector<std::vector<Index>>
  maximal_subsemilattices(FiniteSemigroup const& s) {
    auto const idem = idempotents(s);
    if (idem.size() > 64) {
      throw Error(ErrorKind::bad_parameter,
                  "maximal subsemilattice enumeration supports at most 64 "
                  "idempotents, found "
                      + std::to_string(idem.size()));
    }
    std::size_t const          m = idem.size();
    std::vector<std::uint64_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && s(idem[i], idem[j]) == s(idem[j], idem[i])) {
          adj[i] |= std::uint64_t(1) << j;
        }
      }
    }
    std::vector<std::uint64_t> cliques;
    // Bron-Kerbosch with pivoting.
    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p,
                  std::uint64_t x) -> void {
      if (p == 0 && x == 0) {
        cliques.push_back(r);
        return;
      }
      std::size_t const pivot = std::countr_zero(p | x);
      std::uint64_t     cand  = p & ~adj[pivot];
      while (cand != 0) {
        std::size_t const   v   = std::countr_zero(cand);
        std::uint64_t const bit = std::uint64_t(1) << v;
        self(self, r | bit, p & adj[v], x & adj[v]);
        p &= ~bit;
        x |= bit;
        cand &= cand - 1;
      }
    };
    std::uint64_t const all = m == 64 ? ~std::uint64_t(0)
                                      : (std::uint64_t(1) << m) - 1;
    bk(bk, 0, all, 0);
    std::vector<std::vector<Index>> out;
    for (auto c : cliques) {
      std::vector<Index> members;
      for (std::size_t i = 0; i < m; ++i) {
        if ((c >> i) & 1U) {
          members.push_back(idem[i]);
        }
      }
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_SEMIGROUP_HPP_
