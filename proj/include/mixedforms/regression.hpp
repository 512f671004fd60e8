#pragma once

// Fixture corpus of published data and the checker behind verify-paper.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mixedforms/forms.hpp"

namespace mixedforms {

enum class FixtureCheck { Universal, Exceptions, Max, Verdict };

struct Fixture {
  std::string id;
  MixedForm form;
  FixtureCheck check = FixtureCheck::Universal;
  std::vector<std::uint64_t> values;               // exceptions, or the single max
  std::map<std::string, std::string> verdict;      // universal / asymptotic / almost
  std::string source;
};

/// Parses the corpus format; throws std::invalid_argument with the line
/// number on malformed input.
std::vector<Fixture> parse_fixtures(std::string_view text);

/// The corpus compiled into the library.
std::string_view builtin_fixture_text();

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

/// Checks one fixture with sieves up to bound.
FixtureResult check_fixture(const Fixture& fixture, std::uint64_t bound);

/// Checks every fixture on `jobs` worker threads. Results come back sorted
/// by id, independent of scheduling.
std::vector<FixtureResult> check_fixtures(const std::vector<Fixture>& fixtures, std::uint64_t bound, unsigned jobs);

}  // namespace mixedforms
