#include "mixedforms/regression.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mixedforms/classify.hpp"

namespace mixedforms {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

Fixture parse_record(std::string_view line) {
  const auto fields = split(line, '|');
  if (fields.size() != 5) throw std::invalid_argument("expected 5 '|'-separated fields");
  Fixture f;
  f.id = std::string(fields[0]);
  if (f.id.empty()) throw std::invalid_argument("empty id");

  std::vector<std::string_view> form_parts;
  for (auto part : split(fields[1], ' ')) {
    if (!part.empty()) form_parts.push_back(part);
  }
  if (form_parts.size() != 4) throw std::invalid_argument("form must be 'kind a b c'");
  f.form = MixedForm::make(parse_kind(form_parts[0]), to_u64(form_parts[1]), to_u64(form_parts[2]),
                           to_u64(form_parts[3]));

  const auto check = fields[2];
  const auto expected = fields[3];
  if (check == "universal") {
    f.check = FixtureCheck::Universal;
  } else if (check == "exceptions") {
    f.check = FixtureCheck::Exceptions;
    if (!expected.empty() && expected != "-") {
      for (auto v : split(expected, ',')) f.values.push_back(to_u64(v));
    }
    std::sort(f.values.begin(), f.values.end());
  } else if (check == "max") {
    f.check = FixtureCheck::Max;
    f.values.push_back(to_u64(expected));
  } else if (check == "verdict") {
    f.check = FixtureCheck::Verdict;
    for (auto pair : split(expected, ' ')) {
      if (pair.empty()) continue;
      const auto eq = pair.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("verdict entries must be key=value");
      const std::string key(pair.substr(0, eq));
      const std::string value(pair.substr(eq + 1));
      if (key != "universal" && key != "asymptotic" && key != "almost") {
        throw std::invalid_argument("unknown verdict key '" + key + "'");
      }
      f.verdict[key] = value;
    }
    if (f.verdict.empty()) throw std::invalid_argument("verdict record without expectations");
  } else {
    throw std::invalid_argument("unknown check '" + std::string(check) + "'");
  }
  f.source = std::string(fields[4]);
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<Fixture> parse_fixtures(std::string_view text) {
  std::vector<Fixture> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_record(line));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

FixtureResult check_fixture(const Fixture& fixture, std::uint64_t bound) {
  FixtureResult r{fixture.id, false, {}};
  switch (fixture.check) {
    case FixtureCheck::Universal: {
      const bool listed = classify_universal(fixture.form);
      const auto exc = exceptional_set(fixture.form, bound).exceptions;
      r.passed = listed && exc.empty();
      r.detail = "listed=" + yes_no(listed) + " exceptions<=" + std::to_string(bound) + ": " + join(exc);
      break;
    }
    case FixtureCheck::Exceptions: {
      const auto exc = exceptional_set(fixture.form, bound).exceptions;
      std::vector<std::uint64_t> expected;
      for (auto v : fixture.values) {
        if (v <= bound) expected.push_back(v);
      }
      r.passed = exc == expected;
      r.detail = "expected " + join(expected) + ", computed " + join(exc);
      break;
    }
    case FixtureCheck::Max: {
      const std::uint64_t value = fixture.values.front();
      if (value > bound) {
        r.detail = "bound " + std::to_string(bound) + " is below the stated maximum " + std::to_string(value);
        break;
      }
      const auto exc = exceptional_set(fixture.form, bound).exceptions;
      const bool present = std::binary_search(exc.begin(), exc.end(), value);
      const std::uint64_t largest = exc.empty() ? 0 : exc.back();
      r.passed = present && largest == value;
      r.detail = "stated max " + std::to_string(value) + (present ? " is" : " is not") +
                 " an exception; largest computed exception " + std::to_string(largest);
      break;
    }
    case FixtureCheck::Verdict: {
      const Classification c = classify(fixture.form);
      const std::map<std::string, std::string> got{
          {"universal", yes_no(c.universal)},
          {"asymptotic", yes_no(c.asymptotically_universal)},
          {"almost", std::string(verdict_tag(c.almost_universal.value))}};
      r.passed = true;
      std::ostringstream detail;
      for (const auto& [key, want] : fixture.verdict) {
        const auto& have = got.at(key);
        if (have != want) r.passed = false;
        detail << key << '=' << have << (have == want ? "" : " (expected " + want + ")") << ' ';
      }
      r.detail = std::string(trim(detail.str()));
      break;
    }
  }
  return r;
}

std::vector<FixtureResult> check_fixtures(const std::vector<Fixture>& fixtures, std::uint64_t bound, unsigned jobs) {
  std::vector<FixtureResult> results(fixtures.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < fixtures.size(); i = next++) results[i] = check_fixture(fixtures[i], bound);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
  }
  std::sort(results.begin(), results.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return results;
}

}  // namespace mixedforms
