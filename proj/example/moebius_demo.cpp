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

// Moebius function of the subset lattice of {1,2,3}, and inversion of a
// function summed over down-sets.

#include <iostream>

#include "ehresmann/ehresmann.hpp"

int main() {
  using namespace ehresmann;
  std::size_t const n = 8;
  Relation          subset(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == a) {
        subset.set(a, b);
      }
    }
  }
  FinitePoset const p(subset);
  auto const        mu = moebius(p);
  std::cout << "mu(A, {1,2,3}):";
  for (std::size_t a = 0; a < n; ++a) {
    std::cout << " " << to_string(mu(a, n - 1));
  }
  std::cout << "\n";

  std::vector<Rational> f(n);
  for (std::size_t a = 0; a < n; ++a) {
    f[a] = Rational(int(a) + 1, 3);
  }
  auto const g    = sum_down(p, f);
  auto const back = invert(p, mu, g);
  std::cout << "g({1,2,3}) = " << to_string(g[n - 1]) << "\n"
            << "inversion recovers f: " << (back == f ? "yes" : "no") << "\n";
  return back == f ? 0 : 1;
}
