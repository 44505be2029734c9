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

// Exact rational scalars and the small amount of dense linear algebra over Q
// that the library needs (rank, reduced row echelon form, nullspace).

#ifndef EHRESMANN_RATIONAL_HPP_
#define EHRESMANN_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ehresmann {

  using Rational = mpq_class;

  inline std::string to_string(Rational const& q) {
    return q.get_str();
  }

  inline bool is_integer(Rational const& q) {
    return q.get_den() == 1;
  }

  using RationalMatrix = std::vector<std::vector<Rational>>;

  //! Result of Gauss-Jordan elimination: the reduced matrix and the pivot
  //! column of each nonzero row. Pivoting picks the first nonzero entry by
  //! row index, so the output is deterministic.
  struct EchelonForm {
    RationalMatrix           rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept {
      return pivots.size();
    }
  };

  inline EchelonForm reduced_row_echelon(RationalMatrix m) {
    EchelonForm out;
    if (m.empty()) {
      return out;
    }
    std::size_t const rows = m.size();
    std::size_t const cols = m[0].size();
    std::size_t       r    = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && sgn(m[p][c]) == 0) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      std::swap(m[p], m[r]);
      Rational const inv = 1 / m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] *= inv;
      }
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(m[i][c]) == 0) {
          continue;
        }
        Rational const factor = m[i][c];
        for (std::size_t j = c; j < cols; ++j) {
          if (sgn(m[r][j]) != 0) {
            m[i][j] -= factor * m[r][j];
          }
        }
      }
      out.pivots.push_back(c);
      ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
  }

  inline std::size_t rank(RationalMatrix m) {
    return reduced_row_echelon(std::move(m)).rank();
  }

  //! Basis of { x | m x = 0 }, one vector per free column, in increasing order
  //! of the free column.
  inline RationalMatrix nullspace(RationalMatrix const& m, std::size_t cols) {
    EchelonForm const        ef = reduced_row_echelon(m);
    std::vector<bool>        is_pivot(cols, false);
    for (auto c : ef.pivots) {
      is_pivot[c] = true;
    }
    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> v(cols, Rational(0));
      v[free] = 1;
      for (std::size_t i = 0; i < ef.rows.size(); ++i) {
        v[ef.pivots[i]] = -ef.rows[i][free];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

}  // namespace ehresmann

#endif  // EHRESMANN_RATIONAL_HPP_
