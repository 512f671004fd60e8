#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "mixedforms/arith.hpp"
#include "mixedforms/twoadic.hpp"

using namespace mixedforms;

namespace {

constexpr std::int64_t kReps[] = {1, 3, 5, 7, 2, 6, 10, 14};

}  // namespace

TEST_CASE("square classes") {
  CHECK(square_class(9) == square_class(1));
  CHECK(square_class(14) == SquareClass{1, 7});
  CHECK(square_class(-1) == square_class(7));
  CHECK(square_class(4 * 3) == square_class(3));
  CHECK(square_class(-8) == square_class(14));
  CHECK_THROWS(square_class(0));
  for (unsigned i = 0; i < 8; ++i) {
    CHECK(SquareClass::from_index(i).index() == i);
    CHECK(square_class(SquareClass::from_index(i).representative()) == SquareClass::from_index(i));
  }
}

TEST_CASE("class multiplication") {
  for (std::int64_t x : kReps) CHECK(class_mul(square_class(1), square_class(x)) == square_class(x));
  CHECK(class_mul(square_class(2), square_class(2)) == square_class(1));
  CHECK(class_mul(square_class(3), square_class(5)) == square_class(7));
  for (std::int64_t x : kReps) {
    for (std::int64_t y : kReps) CHECK(class_mul(square_class(x), square_class(y)) == square_class(x * y));
  }
}

TEST_CASE("norm groups") {
  const ImaginaryField gauss = imaginary_field(1);
  const ImaginaryField root2 = imaginary_field(2);
  CHECK(gauss.tag == FieldTag::Gaussian);
  CHECK(root2.tag == FieldTag::RootMinusTwo);
  CHECK(imaginary_field(4).tag == FieldTag::Gaussian);
  CHECK(imaginary_field(18).tag == FieldTag::RootMinusTwo);
  CHECK(imaginary_field(3).tag == FieldTag::Other);
  CHECK(norm_group(gauss) == SquareClassSet::of({1, 5, 2, 10}));
  CHECK(norm_group(root2) == SquareClassSet::of({1, 3, 2, 6}));
  CHECK_THROWS_AS(norm_group(imaginary_field(3)), std::invalid_argument);
  for (const auto& k : {gauss, root2}) {
    CHECK(norm_group(k).is_subgroup());
    CHECK(norm_group(k).size() == 4);
  }
  // N_2(Q(sqrt(-d))) is the kernel of the Hilbert symbol against -d.
  CHECK(norm_group(gauss) == hilbert_kernel(-1));
  CHECK(norm_group(root2) == hilbert_kernel(-2));
}

TEST_CASE("binary spinor norm examples") {
  CHECK(binary_spinor_norm(1, 2) == SquareClassSet::of({1, 5}));
  CHECK(binary_spinor_norm(3, 4) == SquareClassSet::of({1, 3, 5, 7}));
  CHECK(binary_spinor_norm(7, 6) == SquareClassSet::of({1, 7}));
  CHECK_THROWS_AS(binary_spinor_norm(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(binary_spinor_norm(1, 0), std::invalid_argument);
}

TEST_CASE("binary spinor norms are subgroups of order dividing 8") {
  for (std::int64_t alpha : {1, 3, 5, 7}) {
    for (unsigned r = 1; r <= 10; ++r) {
      const SquareClassSet s = binary_spinor_norm(alpha, r);
      CHECK(s.is_subgroup());
      CHECK(s.contains(square_class(1)));
      CHECK(8 % s.size() == 0);
      if (r == 1 || r == 3) CHECK(s.size() >= 4);
    }
  }
}

TEST_CASE("<c', 2b'> lies in N_2(Q(sqrt(-2))) exactly when b' = c' mod 8") {
  const SquareClassSet root2 = norm_group(imaginary_field(2));
  for (std::int64_t b : {1, 3, 5, 7}) {
    for (std::int64_t c : {1, 3, 5, 7}) {
      const SquareClassSet theta = binary_spinor_norm((b * c) % 8, 1);
      CHECK(theta.subset_of(root2) == (b == c));
    }
  }
}

TEST_CASE("generated subgroups") {
  CHECK(generated_subgroup(SquareClassSet::of({3, 5})) == SquareClassSet::of({1, 3, 5, 7}));
  CHECK(generated_subgroup(SquareClassSet::of({2})) == SquareClassSet::of({1, 2}));
  CHECK(generated_subgroup(SquareClassSet()) == SquareClassSet::of({1}));
  CHECK(generated_subgroup(SquareClassSet::of({3, 2, 5})) == SquareClassSet::everything());
}

TEST_CASE("lattice normalization") {
  const Lattice2 l = Lattice2::make({3, 5, 1}, {4, 2, 7});
  CHECK(l.exponents == std::array<unsigned, 3>{0, 2, 5});
  CHECK(l.units == std::array<unsigned, 3>{5, 3, 1});
  CHECK(l.shift == 2);
  CHECK(l.r() == 2);
  CHECK(l.s() == 5);
  CHECK_THROWS(Lattice2::make({2, 1, 1}, {0, 0, 0}));
}

TEST_CASE("ternary spinor norms") {
  const SpinorNorm a = ternary_spinor_norm(Lattice2::make({1, 3, 1}, {0, 1, 6}));
  CHECK(a.kind == SpinorKind::Set);
  CHECK(a.set.is_subgroup());
  CHECK(binary_spinor_norm(3, 1).subset_of(a.set));

  CHECK(ternary_spinor_norm(Lattice2::make({1, 1, 1}, {0, 2, 3})).kind == SpinorKind::FullGroup);
  CHECK(ternary_spinor_norm(Lattice2::make({1, 1, 1}, {0, 0, 1})).kind == SpinorKind::Indeterminate);
  CHECK(ternary_spinor_norm(Lattice2::make({1, 1, 1}, {0, 0, 6})).kind == SpinorKind::Set);
}

TEST_CASE("ternary spinor norm is deterministic") {
  for (std::int64_t u : {1, 3, 5, 7}) {
    for (int r = 0; r <= 7; ++r) {
      for (int s = r; s <= 9; ++s) {
        const Lattice2 l = Lattice2::make({1, u, 1}, {0, r, s});
        const SpinorNorm first = ternary_spinor_norm(l);
        CHECK(ternary_spinor_norm(l) == first);
        if (first.kind == SpinorKind::Set) CHECK(first.set.is_subgroup());
      }
    }
  }
}

TEST_CASE("spinor exception conditions") {
  const ImaginaryField gauss = imaginary_field(1);
  CHECK(schulze_pillot_check(Lattice2::make({1, 1, 1}, {0, 2, 6}), 0, gauss) == SpinorCheck::ConditionsHold);
  // r odd and v2(t) >= r - 3, with r + s = v2(t) mod 2.
  CHECK(schulze_pillot_check(Lattice2::make({1, 1, 1}, {0, 3, 4}), 1, gauss) == SpinorCheck::ConditionsFail);
  // r even and v2(t) >= r - 4, with r + s != v2(t) mod 2.
  CHECK(schulze_pillot_check(Lattice2::make({1, 1, 1}, {0, 4, 6}), 1, gauss) == SpinorCheck::ConditionsFail);
}
