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

// Reproduces the failure of phi to be multiplicative on the monoid of binary
// relations on two points, where E is the set of partial identities.

#include <iostream>

#include "ehresmann/ehresmann.hpp"

int main() {
  using namespace ehresmann;
  auto const b2 = b_n(2);
  auto const c  = build_category(b2);
  auto const name = [&](Index x) { return b2.name(x); };

  // Bit (i-1)*2 + (j-1) encodes the pair (i, j).
  Index const a = 0b0011;  // {(1,1),(1,2)}
  Index const b = 0b0001;  // {(1,1)}
  AlgebraMaps const maps(b2, Order::right);
  auto const w = expand_pair(c, maps, b2, a, b);

  std::cout << "a = " << b2.name(a) << ", b = " << b2.name(b)
            << ", ab = " << b2.name(w.ab) << "\n"
            << "phi(a)       = " << format(w.phi_a, name) << "\n"
            << "phi(b)       = " << format(w.phi_b, name) << "\n"
            << "phi(ab)      = " << format(w.phi_ab, name) << "\n"
            << "phi(a)phi(b) = " << format(w.phi_a_phi_b, name) << "\n";

  auto const r = verify_isomorphism(b2);
  std::cout << "bijection: " << (r.bijection() ? "yes" : "no") << "\n"
            << "failing pairs: " << r.case1_failures.size() << " with a* = b+, "
            << r.case2_failures.size() << " otherwise\n";

  auto const pt3 = pt_n(3);
  auto const ok  = verify_isomorphism(pt3, Order::right, 4);
  std::cout << "PT_3: " << ok.pairs_checked << " pairs, "
            << (ok.passed() ? "isomorphism verified" : "FAILED") << "\n";
  return w.phi_ab == w.phi_a_phi_b ? 1 : 0;
}
