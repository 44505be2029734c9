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

#ifndef EHRESMANN_EHRESMANN_HPP_
#define EHRESMANN_EHRESMANN_HPP_

#include "algebra.hpp"
#include "category.hpp"
#include "error.hpp"
#include "io.hpp"
#include "poset.hpp"
#include "rational.hpp"
#include "relation.hpp"
#include "rep_theory.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "structure.hpp"
#include "zoo.hpp"

#endif  // EHRESMANN_EHRESMANN_HPP_
