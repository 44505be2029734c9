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

#ifndef EHRESMANN_ERROR_HPP_
#define EHRESMANN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ehresmann {

  enum class ErrorKind {
    malformed_input,
    out_of_range,
    not_associative,
    not_subsemilattice,
    not_partial_order,
    class_without_idempotent,
    class_with_two_idempotents,
    congruence_fails,
    not_below_domain,
    not_below_range,
    restriction_mismatch,
    basis_mismatch,
    not_closed,
    not_a_monoid,
    incompatible_maps,
    not_ei,
    precondition_not_met,
    bad_parameter,
    internal_inconsistency
  };

  constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::malformed_input: return "MalformedInput";
      case ErrorKind::out_of_range: return "OutOfRange";
      case ErrorKind::not_associative: return "NotAssociative";
      case ErrorKind::not_subsemilattice: return "NotSubsemilattice";
      case ErrorKind::not_partial_order: return "NotPartialOrder";
      case ErrorKind::class_without_idempotent: return "ClassWithoutIdempotent";
      case ErrorKind::class_with_two_idempotents:
        return "ClassWithTwoIdempotents";
      case ErrorKind::congruence_fails: return "CongruenceFails";
      case ErrorKind::not_below_domain: return "NotBelowDomain";
      case ErrorKind::not_below_range: return "NotBelowRange";
      case ErrorKind::restriction_mismatch: return "RestrictionMismatch";
      case ErrorKind::basis_mismatch: return "BasisMismatch";
      case ErrorKind::not_closed: return "NotClosed";
      case ErrorKind::not_a_monoid: return "NotAMonoid";
      case ErrorKind::incompatible_maps: return "IncompatibleMaps";
      case ErrorKind::not_ei: return "NotEI";
      case ErrorKind::precondition_not_met: return "PreconditionNotMet";
      case ErrorKind::bad_parameter: return "BadParameter";
      case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    }
    return "Unknown";
  }

  //! Every failure raised by the library. The witness holds the element
  //! indices (or other small integers) that certify the failure, e.g. the
  //! triple (i, j, k) for a non-associative table.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what,
          std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind),
          _witness(std::move(witness)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::size_t> _witness;
  };

}  // namespace ehresmann

#endif  // EHRESMANN_ERROR_HPP_
