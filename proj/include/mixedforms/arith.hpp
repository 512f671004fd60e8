#pragma once

// Exact 64-bit integer number theory: valuations, odd and squarefree parts,
// factorization, quadratic residues, Jacobi symbols and the 2-adic Hilbert
// symbol.

#include <cstdint>
#include <vector>

namespace mixedforms {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted by prime, strictly increasing.
using Factorization = std::vector<PrimePower>;

inline constexpr std::uint64_t kMaxFactorInput = (std::uint64_t{1} << 63) - 1;

/// Largest k with 2^k | n. Throws std::invalid_argument for n = 0.
unsigned v2(std::uint64_t n);

/// n / 2^{v2(n)}.
std::uint64_t odd_part(std::uint64_t n);

/// Product of the primes dividing n to an odd power.
std::uint64_t squarefree_part(std::uint64_t n);

/// Squarefree part of a product, computed factor by factor so the product
/// itself never has to fit in 64 bits. Throws std::overflow_error when the
/// result does not.
std::uint64_t squarefree_part_of_product(const std::vector<std::uint64_t>& factors);

bool is_prime(std::uint64_t n);

/// Complete factorization of 1 <= n <= 2^63 - 1. Trial division up to 10^6,
/// then deterministic Miller-Rabin and Brent's rho on the cofactor.
Factorization factorize(std::uint64_t n);

/// Odd primes dividing n, ascending.
std::vector<std::uint64_t> odd_prime_divisors(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);
/// True iff n = t(t+1)/2 for some t >= 0.
bool is_triangular(std::uint64_t n);

/// a mod m in [0, m).
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a R m: gcd(a, m) = 1 and x^2 = a (mod m) is solvable. m = 1 gives true.
bool is_qr(std::int64_t a, std::uint64_t m);

/// Same relation for a value given by its residue mod m.
bool is_qr_residue(std::uint64_t a_mod_m, std::uint64_t m);

/// Jacobi symbol (a/m) for odd m >= 1. Throws std::invalid_argument on even m.
int jacobi(std::int64_t a, std::uint64_t m);

/// 2-adic Hilbert symbol (a, b)_2. Throws std::invalid_argument on zero input.
int hilbert2(std::int64_t a, std::int64_t b);

}  // namespace mixedforms
