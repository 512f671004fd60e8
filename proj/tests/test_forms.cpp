#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "mixedforms/arith.hpp"
#include "mixedforms/forms.hpp"

using namespace mixedforms;

namespace {

constexpr Kind kAllKinds[] = {Kind::TwoSquaresOneTri, Kind::OneSquareTwoTri, Kind::ThreeTri};

// Per-n brute force that shares no code with the sieve.
bool naive_represents(const MixedForm& f, std::uint64_t n) {
  for (std::int64_t x = 0; evaluate(f, x, 0, 0) <= n; ++x) {
    for (std::int64_t y = 0; evaluate(f, x, y, 0) <= n; ++y) {
      for (std::int64_t z = 0; evaluate(f, x, y, z) <= n; ++z) {
        if (evaluate(f, x, y, z) == n) return true;
      }
    }
  }
  return false;
}

std::uint64_t brute_local_count(const std::array<std::uint64_t, 3>& q, std::uint64_t n, std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      for (std::uint64_t z = 0; z < m; ++z) {
        if ((q[0] * x * x + q[1] * y * y + q[2] * z * z) % m == n % m) ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("form construction and rendering") {
  CHECK_THROWS_AS(MixedForm::make(Kind::ThreeTri, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(MixedForm::make(Kind::ThreeTri, 1, 1, (std::uint64_t{1} << 32) + 1), std::invalid_argument);
  CHECK(to_string(MixedForm::make(Kind::TwoSquaresOneTri, 2, 5, 4)) == "2x^2+5y^2+4T_z");
  CHECK(parse_kind("stt") == Kind::OneSquareTwoTri);
  CHECK_THROWS(parse_kind("xyz"));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(MixedForm::make(Kind::TwoSquaresOneTri, 1, 1, 1), 0, 0, 0) == 0);
  CHECK(evaluate(MixedForm::make(Kind::ThreeTri, 1, 1, 1), 1, 1, 1) == 3);
  CHECK(evaluate(MixedForm::make(Kind::TwoSquaresOneTri, 2, 5, 4), 1, 1, 2) == 19);
  // T_t = T_{-t-1}
  CHECK(evaluate(MixedForm::make(Kind::ThreeTri, 1, 1, 1), -3, 0, 0) == 3);
  CHECK_THROWS(evaluate(MixedForm::make(Kind::ThreeTri, 1, 1, 1), 1 << 21, 0, 0));
}

TEST_CASE("represents") {
  CHECK_FALSE(represents(MixedForm::make(Kind::TwoSquaresOneTri, 2, 5, 4), 1359));
  CHECK_FALSE(represents(MixedForm::make(Kind::TwoSquaresOneTri, 1, 2, 3), 23));
  CHECK(represents(MixedForm::make(Kind::TwoSquaresOneTri, 1, 2, 3), 24));
  for (Kind k : kAllKinds) CHECK(represents(MixedForm::make(k, 7, 11, 13), 0));
}

TEST_CASE("exceptional set examples") {
  CHECK(exceptional_set(MixedForm::make(Kind::TwoSquaresOneTri, 1, 2, 3), 10'000).exceptions ==
        std::vector<std::uint64_t>{23});
  CHECK(exceptional_set(MixedForm::make(Kind::ThreeTri, 1, 1, 1), 1000).exceptions.empty());
  CHECK(exceptional_set(MixedForm::make(Kind::OneSquareTwoTri, 2, 5, 1), 10'000).exceptions ==
        std::vector<std::uint64_t>{4});
  const auto r = exceptional_set(MixedForm::make(Kind::ThreeTri, 1, 1, 1), 10);
  CHECK(r.complete_below_bound);
  CHECK(r.bound == 10);
  CHECK_FALSE(r.caveat.empty());
  CHECK_THROWS_AS(exceptional_set(MixedForm::make(Kind::ThreeTri, 1, 1, 1), kMaxSieveBound + 1), std::length_error);
}

TEST_CASE("sieve agrees with per-n search on random forms") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20;) {
    const std::uint64_t a = 1 + rng() % 23, b = 1 + rng() % 23, c = 1 + rng() % 23;
    if (a + b + c > 25) continue;
    ++i;
    const MixedForm f = MixedForm::make(kAllKinds[rng() % 3], a, b, c);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      if (!naive_represents(f, n)) naive.push_back(n);
    }
    INFO(to_string(f));
    CHECK(exceptional_set(f, 2000).exceptions == naive);
  }
}

TEST_CASE("sieve result does not depend on worker count") {
  const MixedForm f = MixedForm::make(Kind::TwoSquaresOneTri, 2, 2, 13);
  const auto one = exceptional_set(f, 100'000, 1).exceptions;
  for (unsigned jobs : {2u, 3u, 8u}) CHECK(exceptional_set(f, 100'000, jobs).exceptions == one);
}

TEST_CASE("associated quadratic forms") {
  const auto sst = associated_quadratic(MixedForm::make(Kind::TwoSquaresOneTri, 2, 5, 4));
  CHECK(sst.coefficients == std::array<std::uint64_t, 3>{16, 40, 4});
  CHECK(sst.parity == std::array<Parity, 3>{Parity::Any, Parity::Any, Parity::Odd});
  CHECK(sst.offset == 4);
  CHECK(sst.scale == 8);

  const auto stt = associated_quadratic(MixedForm::make(Kind::OneSquareTwoTri, 1, 1, 1));
  CHECK(stt.coefficients == std::array<std::uint64_t, 3>{8, 1, 1});
  CHECK(stt.parity == std::array<Parity, 3>{Parity::Any, Parity::Odd, Parity::Odd});
  CHECK(stt.offset == 2);

  const auto ttt = associated_quadratic(MixedForm::make(Kind::ThreeTri, 1, 1, 1));
  CHECK(ttt.coefficients == std::array<std::uint64_t, 3>{1, 1, 1});
  CHECK(ttt.parity == std::array<Parity, 3>{Parity::Odd, Parity::Odd, Parity::Odd});
  CHECK(ttt.offset == 3);
}

TEST_CASE("restricted counts") {
  DiagonalQuadratic odd{{1, 1, 1}, {Parity::Odd, Parity::Odd, Parity::Odd}, 0, 8};
  CHECK(restricted_count(odd, 3) == 8);
  CHECK(restricted_count(odd, 0) == 0);
  DiagonalQuadratic any{{1, 1, 1}, {Parity::Any, Parity::Any, Parity::Any}, 0, 8};
  CHECK(restricted_count(any, 1) == 6);
  CHECK(restricted_count(any, 0) == 1);
  // r_3(25) = 30
  CHECK(restricted_count(any, 25) == 30);
  CHECK(restricted_solvable({1, 1, 1}, {Parity::Odd, Parity::Odd, Parity::Odd}, 3));
  CHECK_FALSE(restricted_solvable({1, 1, 1}, {Parity::Odd, Parity::Odd, Parity::Odd}, 5));
}

TEST_CASE("representation reduces to the associated quadratic form") {
  for (Kind kind : kAllKinds) {
    for (std::uint64_t a = 1; a <= 12; ++a) {
      for (std::uint64_t b = 1; a + b <= 12; ++b) {
        for (std::uint64_t c = 1; a + b + c <= 12; ++c) {
          const MixedForm f = MixedForm::make(kind, a, b, c);
          const DiagonalQuadratic q = associated_quadratic(f);
          for (std::uint64_t n = 0; n <= 500; ++n) {
            REQUIRE(represents(f, n) == (restricted_count(q, q.scale * n + q.offset) > 0));
          }
        }
      }
    }
  }
}

TEST_CASE("x^2+2T_y and T_x+T_y represent the same integers") {
  // A huge third coefficient keeps the third slot at zero below the bound.
  const auto square_form = exceptional_set(MixedForm::make(Kind::OneSquareTwoTri, 1, 2, 1'000'000), 10'000);
  const auto tri_form = exceptional_set(MixedForm::make(Kind::ThreeTri, 1, 1, 1'000'000), 10'000);
  CHECK(square_form.exceptions == tri_form.exceptions);
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    bool lhs = false, rhs = false;
    for (std::uint64_t y = 0; triangular(y) * 2 <= n && !lhs; ++y) lhs = is_square(n - 2 * triangular(y));
    for (std::uint64_t x = 0; triangular(x) <= n && !rhs; ++x) rhs = is_triangular(n - triangular(x));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("exceptional sets are invariant under slot symmetry") {
  const std::uint64_t bound = 5000;
  for (std::uint64_t a = 1; a <= 6; ++a) {
    for (std::uint64_t b = 1; b <= 6; ++b) {
      for (std::uint64_t c = 1; c <= 6; ++c) {
        CHECK(exceptional_set(MixedForm::make(Kind::TwoSquaresOneTri, a, b, c), bound).exceptions ==
              exceptional_set(MixedForm::make(Kind::TwoSquaresOneTri, b, a, c), bound).exceptions);
        CHECK(exceptional_set(MixedForm::make(Kind::OneSquareTwoTri, a, b, c), bound).exceptions ==
              exceptional_set(MixedForm::make(Kind::OneSquareTwoTri, a, c, b), bound).exceptions);
        const auto base = exceptional_set(MixedForm::make(Kind::ThreeTri, a, b, c), bound).exceptions;
        std::array<std::uint64_t, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        do {
          CHECK(exceptional_set(MixedForm::make(Kind::ThreeTri, v[0], v[1], v[2]), bound).exceptions == base);
        } while (std::next_permutation(v.begin(), v.end()));
      }
    }
  }
}

TEST_CASE("local counts") {
  CHECK(local_count({1, 1, 3}, 1, 3, 1) == 12);
  CHECK(local_count({1, 1, 1}, 0, 3, 1) >= 1);
  CHECK_THROWS_AS(local_count({1, 1, 1}, 0, 9, 1), std::invalid_argument);
  CHECK_THROWS(local_count({1, 1, 1}, 0, 1009, 2));

  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned k : {1u, 2u}) {
      std::uint64_t m = k == 1 ? p : p * p;
      const auto table = local_count_table({1, 2, 5}, p, k);
      REQUIRE(table.size() == m);
      for (std::uint64_t n = 0; n < m; ++n) CHECK(table[n] == brute_local_count({1, 2, 5}, n, m));
    }
  }
}

TEST_CASE("local counts are invariant under scaling by a square prime to the modulus") {
  for (unsigned k : {1u, 2u}) {
    const std::uint64_t qk = k == 1 ? 3 : 9;
    for (std::uint64_t n = 0; n < qk; ++n) CHECK(local_count({1, 1, 10}, n * 49, 3, k) == local_count({1, 1, 10}, n, 3, k));
  }
  CHECK(local_count({1, 1, 10}, 3 * 25, 5, 2) == brute_local_count({1, 1, 10}, 75, 25));
}
