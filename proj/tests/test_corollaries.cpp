#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "mixedforms/corollaries.hpp"

using namespace mixedforms;

namespace {

Verdict verdict_of(std::string_view pattern, std::vector<std::uint64_t> params) {
  const auto v = corollary_predicate(pattern, params);
  REQUIRE(v.has_value());
  return v->value;
}

}  // namespace

TEST_CASE("every family has a unique pattern and builds forms of its kind") {
  const auto& families = corollary_families();
  REQUIRE(families.size() >= 20);
  for (const auto& fam : families) {
    CHECK(find_corollary(fam.pattern).pattern == fam.pattern);
    std::vector<std::uint64_t> params(fam.params.size(), 1);
    CHECK(corollary_form(fam.pattern, params).kind == fam.kind);
  }
  CHECK_THROWS_AS(find_corollary("no-such-pattern"), std::invalid_argument);
}

TEST_CASE("forms built from parameters") {
  CHECK(corollary_form("ax2+y2+Tz", {11}) == MixedForm::make(Kind::TwoSquaresOneTri, 11, 1, 1));
  CHECK(corollary_form("x2+y2+mTz", {10}) == MixedForm::make(Kind::TwoSquaresOneTri, 1, 1, 10));
  CHECK(corollary_form("2^kx2+2^ly2+mTz", {3, 1, 5}) == MixedForm::make(Kind::TwoSquaresOneTri, 8, 2, 5));
  CHECK(corollary_form("2^kTx+2^kTy+mTz", {3, 1}) == MixedForm::make(Kind::ThreeTri, 8, 8, 1));
  CHECK(corollary_form("2^kx2+2^(k+1)Ty+mTz", {3, 1}) == MixedForm::make(Kind::OneSquareTwoTri, 8, 16, 1));
  CHECK_THROWS_AS(corollary_form("ax2+y2+Tz", {}), std::invalid_argument);
  CHECK_THROWS_AS(corollary_form("ax2+y2+Tz", {0}), std::invalid_argument);
  CHECK_THROWS_AS(corollary_form("2^kTx+2^kTy+mTz", {40, 1}), std::invalid_argument);
}

TEST_CASE("single-coefficient criteria") {
  CHECK(verdict_of("ax2+y2+Tz", {11}) == Verdict::Yes);
  CHECK(verdict_of("ax2+y2+Tz", {12}) == Verdict::Yes);
  CHECK(verdict_of("x2+y2+mTz", {10}) == Verdict::Yes);
  CHECK(verdict_of("2x2+y2+mTz", {11}) == Verdict::Yes);
}

TEST_CASE("8(T_x+T_y)+mT_z and its square form are never almost universal") {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    const auto v = corollary_predicate("2^kx2+2^(k+1)Ty+mTz", {3, m});
    if (v) CHECK(v->value == Verdict::No);
    const auto w = corollary_predicate("2^kTx+2^kTy+mTz", {3, m});
    if (w) CHECK(w->value == Verdict::No);
  }
  CHECK(verdict_of("2^kx2+2^(k+1)Ty+mTz", {3, 1}) == Verdict::No);
  CHECK(verdict_of("2^kTx+2^kTy+mTz", {1, 5}) == Verdict::Yes);
  CHECK(verdict_of("2^kTx+2^kTy+mTz", {1, 3}) == Verdict::No);
  CHECK_FALSE(corollary_predicate("2^kTx+2^kTy+mTz", {2, 5}).has_value());
}

TEST_CASE("carve-outs are reported as unknown") {
  const auto a = corollary_predicate("x2+Ty+mTz", {16});
  REQUIRE(a.has_value());
  CHECK(a->value == Verdict::Unknown);
  CHECK(a->gap_tag == std::optional<std::string>("x2+Ty+mTz:v2(m)=4"));

  const auto b = corollary_predicate("x2+2Ty+mTz", {8});
  REQUIRE(b.has_value());
  CHECK(b->value == Verdict::Unknown);

  const auto c = corollary_predicate("Tx+Ty+mTz", {8});
  REQUIRE(c.has_value());
  CHECK(c->value == Verdict::Unknown);

  const auto d = corollary_predicate("aTx+2Ty+Tz", {16 * 3});
  REQUIRE(d.has_value());
  CHECK(d->value == Verdict::Unknown);
  CHECK(verdict_of("aTx+2Ty+Tz", {16}) == Verdict::Yes);
  CHECK(verdict_of("aTx+2Ty+Tz", {16 * 5}) == Verdict::No);
}

TEST_CASE("criteria agree with the classifier on small parameters") {
  for (const auto& fam : corollary_families()) {
    if (fam.params.size() != 1) continue;
    for (std::uint64_t x = 1; x <= 300; ++x) {
      const auto predicted = corollary_predicate(fam.pattern, {x});
      if (!predicted) continue;
      INFO(fam.pattern << " " << x);
      CHECK(classify_almost(corollary_form(fam.pattern, {x})).value.value == predicted->value);
    }
  }
}
