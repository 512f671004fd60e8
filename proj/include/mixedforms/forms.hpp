#pragma once

// The three mixed families ax^2+by^2+cT_z, ax^2+bT_y+cT_z, aT_x+bT_y+cT_z:
// evaluation, representation tests, exceptional-set sieving, and the
// diagonal quadratic forms they reduce to.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mixedforms {

enum class Kind {
  TwoSquaresOneTri,  // a x^2 + b y^2 + c T_z
  OneSquareTwoTri,   // a x^2 + b T_y + c T_z
  ThreeTri,          // a T_x + b T_y + c T_z
};

/// Short CLI tag: "sst", "stt" or "ttt".
std::string_view kind_tag(Kind kind);
/// Parses a CLI tag; throws std::invalid_argument on anything else.
Kind parse_kind(std::string_view tag);

inline constexpr std::uint64_t kMaxCoefficient = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxRepresentTarget = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kMaxSieveBound = 10'000'000;
inline constexpr std::int64_t kMaxEvalArgument = std::int64_t{1} << 20;

enum class SlotShape { Square, Triangular };

struct MixedForm {
  Kind kind = Kind::TwoSquaresOneTri;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t c = 1;

  /// Validating constructor: coefficients must lie in [1, 2^32].
  static MixedForm make(Kind kind, std::uint64_t a, std::uint64_t b, std::uint64_t c);

  std::array<std::uint64_t, 3> coefficients() const { return {a, b, c}; }
  SlotShape shape(int slot) const;

  friend bool operator==(const MixedForm&, const MixedForm&) = default;
};

/// Human-readable rendering, e.g. "2x^2+5y^2+4T_z".
std::string to_string(const MixedForm& form);

/// T_t = t(t+1)/2.
constexpr std::uint64_t triangular(std::uint64_t t) { return t * (t + 1) / 2; }

/// Value of the form at (x, y, z). Arguments are bounded by 2^20 in absolute
/// value; results that do not fit in 64 bits throw std::overflow_error.
std::uint64_t evaluate(const MixedForm& form, std::int64_t x, std::int64_t y, std::int64_t z);

/// Direct search for an integral solution of form(x, y, z) = n, n <= 2^40.
bool represents(const MixedForm& form, std::uint64_t n);

struct ExceptionalSetReport {
  MixedForm form;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> exceptions;  // ascending, all <= bound
  bool complete_below_bound = true;
  std::string caveat;
};

/// Every n <= bound not represented by the form, by bit sieve. Work is split
/// over `jobs` threads (>= 1). Throws std::length_error if bound > 10^7.
ExceptionalSetReport exceptional_set(const MixedForm& form, std::uint64_t bound, unsigned jobs = 1);

enum class Parity { Any, Odd };

/// Q(x,y,z) = alpha x^2 + beta y^2 + gamma z^2 with per-variable parity
/// constraints, such that form represents n iff Q represents 8n + offset
/// under the constraints.
struct DiagonalQuadratic {
  std::array<std::uint64_t, 3> coefficients{};
  std::array<Parity, 3> parity{Parity::Any, Parity::Any, Parity::Any};
  std::uint64_t offset = 0;
  std::uint64_t scale = 8;

  friend bool operator==(const DiagonalQuadratic&, const DiagonalQuadratic&) = default;
};

DiagonalQuadratic associated_quadratic(const MixedForm& form);

/// Number of integer triples (signs counted separately) meeting the parity
/// constraints with Q(x,y,z) = n.
std::uint64_t restricted_count(const DiagonalQuadratic& q, std::uint64_t n);

/// True iff at least one such triple exists. Same search as restricted_count
/// but stops at the first hit.
bool restricted_solvable(const std::array<std::uint64_t, 3>& coefficients,
                         const std::array<Parity, 3>& parity, std::uint64_t n);

inline constexpr std::uint64_t kMaxLocalModulus = 1'000'000;

/// Number of (x,y,z) in (Z/p^k)^3 with Q(x,y,z) = n (mod p^k). p must be
/// prime and p^k <= 10^6.
std::uint64_t local_count(const std::array<std::uint64_t, 3>& coefficients, std::uint64_t n,
                          std::uint64_t p, unsigned k);

/// local_count for every residue n mod p^k at once; entry n holds the count.
std::vector<std::uint64_t> local_count_table(const std::array<std::uint64_t, 3>& coefficients,
                                             std::uint64_t p, unsigned k);

}  // namespace mixedforms
