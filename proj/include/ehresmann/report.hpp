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

#ifndef EHRESMANN_REPORT_HPP_
#define EHRESMANN_REPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ehresmann {

  //! One named check. A failing check carries the first witness found in
  //! lexicographic index order.
  struct Check {
    std::string              name;
    bool                     passed = true;
    std::vector<std::size_t> witness;
    std::string              detail;
  };

  class VerificationReport {
   public:
    VerificationReport() = default;

    explicit VerificationReport(std::string subject)
        : _subject(std::move(subject)) {}

    Check& add(std::string              name,
               bool                     passed,
               std::vector<std::size_t> witness = {},
               std::string              detail  = {}) {
      _checks.push_back(
          Check{std::move(name), passed, std::move(witness), std::move(detail)});
      return _checks.back();
    }

    void append(VerificationReport const& other) {
      _checks.insert(_checks.end(), other._checks.begin(),
                     other._checks.end());
    }

    std::string const& subject() const noexcept {
      return _subject;
    }

    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }

    bool passed() const noexcept {
      return std::all_of(_checks.begin(), _checks.end(),
                         [](Check const& c) { return c.passed; });
    }

    Check const* find(std::string_view name) const noexcept {
      for (auto const& c : _checks) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }

    std::vector<Check> failures() const {
      std::vector<Check> out;
      std::copy_if(_checks.begin(), _checks.end(), std::back_inserter(out),
                   [](Check const& c) { return !c.passed; });
      return out;
    }

   private:
    std::string        _subject;
    std::vector<Check> _checks;
  };

}  // namespace ehresmann

#endif  // EHRESMANN_REPORT_HPP_
