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

#ifndef EHRESMANN_RELATION_HPP_
#define EHRESMANN_RELATION_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ehresmann {

  //! Dense binary relation on {0, ..., n-1}, stored as one bitset per row.
  class Relation {
   public:
    Relation() = default;

    explicit Relation(std::size_t n)
        : _n(n), _words((n + 63) / 64), _bits(n * _words, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(std::size_t a, std::size_t b) const noexcept {
      return (_bits[a * _words + b / 64] >> (b % 64)) & 1U;
    }

    void set(std::size_t a, std::size_t b, bool value = true) noexcept {
      std::uint64_t const mask = std::uint64_t(1) << (b % 64);
      if (value) {
        _bits[a * _words + b / 64] |= mask;
      } else {
        _bits[a * _words + b / 64] &= ~mask;
      }
    }

    //! Pairs (a, b) with a R b, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t a = 0; a < _n; ++a) {
        for (auto b : row(a)) {
          out.emplace_back(a, b);
        }
      }
      return out;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _bits) {
        c += std::popcount(w);
      }
      return c;
    }

    //! { b | a R b } in increasing order.
    std::vector<std::size_t> row(std::size_t a) const {
      std::vector<std::size_t> out;
      for (std::size_t w = 0; w < _words; ++w) {
        std::uint64_t bits = _bits[a * _words + w];
        while (bits != 0) {
          out.push_back(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
      return out;
    }

    //! { a | a R b } in increasing order.
    std::vector<std::size_t> column(std::size_t b) const {
      std::vector<std::size_t> out;
      for (std::size_t a = 0; a < _n; ++a) {
        if ((*this)(a, b)) {
          out.push_back(a);
        }
      }
      return out;
    }

    //! Relational composition: a (R;S) c iff a R b and b S c for some b.
    Relation then(Relation const& other) const {
      Relation out(_n);
      for (std::size_t a = 0; a < _n; ++a) {
        std::uint64_t* dst = &out._bits[a * _words];
        for (auto b : row(a)) {
          std::uint64_t const* src = &other._bits[b * _words];
          for (std::size_t w = 0; w < _words; ++w) {
            dst[w] |= src[w];
          }
        }
      }
      return out;
    }

    bool operator==(Relation const&) const = default;

    //! First a with not a R a.
    std::optional<std::size_t> reflexivity_failure() const {
      for (std::size_t a = 0; a < _n; ++a) {
        if (!(*this)(a, a)) {
          return a;
        }
      }
      return std::nullopt;
    }

    //! First a < b with a R b and b R a.
    std::optional<std::pair<std::size_t, std::size_t>>
    antisymmetry_failure() const {
      for (std::size_t a = 0; a < _n; ++a) {
        for (auto b : row(a)) {
          if (b > a && (*this)(b, a)) {
            return std::pair{a, b};
          }
        }
      }
      return std::nullopt;
    }

    //! First (a, b, c) with a R b, b R c but not a R c.
    std::optional<std::array<std::size_t, 3>> transitivity_failure() const {
      for (std::size_t a = 0; a < _n; ++a) {
        for (auto b : row(a)) {
          for (auto c : row(b)) {
            if (!(*this)(a, c)) {
              return std::array<std::size_t, 3>{a, b, c};
            }
          }
        }
      }
      return std::nullopt;
    }

    bool is_partial_order() const {
      return !reflexivity_failure() && !antisymmetry_failure()
             && !transitivity_failure();
    }

    //! First (a, b) in this but not in other.
    std::optional<std::pair<std::size_t, std::size_t>>
    first_not_in(Relation const& other) const {
      for (std::size_t a = 0; a < _n; ++a) {
        for (auto b : row(a)) {
          if (!other(a, b)) {
            return std::pair{a, b};
          }
        }
      }
      return std::nullopt;
    }

   private:
    std::size_t                _n     = 0;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _bits;
  };

}  // namespace ehresmann

#endif  // EHRESMANN_RELATION_HPP_
