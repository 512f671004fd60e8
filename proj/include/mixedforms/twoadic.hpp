#pragma once

// Square classes of Q_2^x, local norm groups at 2, spinor norms of
// diagonal 2-adic lattices, and the 2-adic primitive spinor exception
// conditions for ternary diagonal forms.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mixedforms {

/// An element of Q_2^x / (Q_2^x)^2: valuation parity and unit mod 8.
struct SquareClass {
  unsigned val_parity = 0;  // 0 or 1
  unsigned unit = 1;        // 1, 3, 5 or 7

  /// 0..7, ordered as the representatives 1, 3, 5, 7, 2, 6, 10, 14.
  unsigned index() const { return val_parity * 4 + unit / 2; }
  static SquareClass from_index(unsigned i) { return {i / 4, 2 * (i % 4) + 1}; }
  /// 1, 3, 5, 7, 2, 6, 10 or 14.
  std::int64_t representative() const { return static_cast<std::int64_t>(unit) << val_parity; }

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Throws std::invalid_argument for 0.
SquareClass square_class(std::int64_t value);
SquareClass class_mul(SquareClass s, SquareClass t);

/// A subset of the eight square classes as a bit mask.
class SquareClassSet {
 public:
  constexpr SquareClassSet() = default;
  constexpr explicit SquareClassSet(std::uint8_t mask) : mask_(mask) {}

  static SquareClassSet of(std::initializer_list<std::int64_t> values);
  static constexpr SquareClassSet everything() { return SquareClassSet(0xFF); }

  std::uint8_t mask() const { return mask_; }
  bool contains(SquareClass s) const { return (mask_ >> s.index()) & 1; }
  void insert(SquareClass s) { mask_ |= static_cast<std::uint8_t>(1u << s.index()); }
  unsigned size() const;
  bool empty() const { return mask_ == 0; }
  bool subset_of(SquareClassSet other) const { return (mask_ & ~other.mask_) == 0; }
  /// Contains the class of 1 and is closed under class_mul.
  bool is_subgroup() const;
  std::vector<SquareClass> members() const;
  /// Representatives in ascending index order, e.g. "{1,5,2,10}".
  std::string to_string() const;

  SquareClassSet operator|(SquareClassSet o) const { return SquareClassSet(mask_ | o.mask_); }
  friend bool operator==(const SquareClassSet&, const SquareClassSet&) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Smallest subgroup containing every member of s.
SquareClassSet generated_subgroup(SquareClassSet s);

/// {gamma : (gamma, d)_2 = 1} for nonzero d.
SquareClassSet hilbert_kernel(std::int64_t d);

enum class FieldTag { Gaussian, RootMinusTwo, Other };

/// Q(sqrt(-d)) for a squarefree radicand d.
struct ImaginaryField {
  FieldTag tag = FieldTag::Other;
  std::uint64_t radicand = 0;

  friend bool operator==(const ImaginaryField&, const ImaginaryField&) = default;
};

/// Q(sqrt(-n)) classified by SF(n): Q(i) for SF(n) = 1, Q(sqrt(-2)) for
/// SF(n) = 2, Other otherwise.
ImaginaryField imaginary_field(std::uint64_t n);

/// Local norms at 2: {1,5,2,10} for Q(i), {1,3,2,6} for Q(sqrt(-2)).
/// Throws std::invalid_argument for any other field.
SquareClassSet norm_group(const ImaginaryField& field);

/// Spinor norms of <1, 2^r alpha> over Z_2 for odd alpha and r >= 1.
/// Throws std::invalid_argument for even alpha or r = 0.
SquareClassSet binary_spinor_norm(std::int64_t alpha, unsigned r);

/// Diagonal lattice <u1 2^e1, u2 2^e2, u3 2^e3> over Z_2, stored with
/// exponents ascending and e1 = 0. Since spinor norms are unchanged by
/// scaling, the common power of 2 is divided out.
struct Lattice2 {
  std::array<unsigned, 3> units{1, 1, 1};    // odd residues mod 8
  std::array<unsigned, 3> exponents{0, 0, 0};
  std::array<int, 3> permutation{0, 1, 2};   // input slot of each stored slot
  int shift = 0;                             // power of 2 divided out

  /// Normalizes arbitrary (possibly negative) exponents. Units are reduced
  /// mod 8 and must be odd.
  static Lattice2 make(std::array<std::int64_t, 3> units, std::array<int, 3> exponents);

  unsigned r() const { return exponents[1]; }
  unsigned s() const { return exponents[2]; }
};

enum class SpinorKind { Set, FullGroup, Indeterminate };

struct SpinorNorm {
  SpinorKind kind = SpinorKind::Indeterminate;
  SquareClassSet set;  // meaningful when kind == Set

  friend bool operator==(const SpinorNorm&, const SpinorNorm&) = default;
};

/// All of Q_2^x when {r, s-r} meets {1,3} and {r, s, s-r} meets {2,4}.
/// Otherwise, for 0 < r < s or (s >= 5 and r in {0, s}), the subgroup
/// generated by the spinor norms of the three binary sublattices. Any other
/// configuration, or a unimodular binary sublattice other than <1,1>, is
/// Indeterminate.
SpinorNorm ternary_spinor_norm(const Lattice2& lattice);

enum class SpinorCheck { ConditionsHold, ConditionsFail, Indeterminate };

/// Evaluates whether t, given through v2(t), satisfies the 2-adic
/// primitive spinor exception conditions for the lattice <c', 2^r b', 2^s a'>
/// with respect to the field K. The caller is responsible for having
/// established theta(L) inside N_2(K). ConditionsFail means the conditions
/// are not satisfied. Sub-results that are Indeterminate propagate only when
/// they decide the outcome.
SpinorCheck schulze_pillot_check(const Lattice2& lattice, unsigned t_valuation, const ImaginaryField& field);

}  // namespace mixedforms
