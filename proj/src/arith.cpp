#include "mixedforms/arith.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mixedforms {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n is odd, composite, and has no factor
// below the trial-division limit.
std::uint64_t rho_split(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = rho_split(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

unsigned v2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("v2: valuation of 0 is infinite");
  return static_cast<unsigned>(std::countr_zero(n));
}

std::uint64_t odd_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("odd_part: zero has no odd part");
  return n >> std::countr_zero(n);
}

std::uint64_t squarefree_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero input");
  std::uint64_t sf = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) sf *= p;
  }
  return sf;
}

std::uint64_t squarefree_part_of_product(const std::vector<std::uint64_t>& factors) {
  std::map<std::uint64_t, unsigned> exponents;
  for (std::uint64_t f : factors) {
    if (f == 0) throw std::invalid_argument("squarefree_part_of_product: zero factor");
    for (const auto& [p, e] : factorize(f)) exponents[p] += e;
  }
  u128 sf = 1;
  for (const auto& [p, e] : exponents) {
    if (e % 2 == 0) continue;
    sf *= p;
    if (sf > kMaxFactorInput) throw std::overflow_error("squarefree part exceeds 63 bits");
  }
  return static_cast<std::uint64_t>(sf);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a + 1) avoids negating INT64_MIN.
  std::uint64_t neg = static_cast<std::uint64_t>(-(a + 1)) % m;
  return (m - 1 - neg) % m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  if (n > kMaxFactorInput) throw std::invalid_argument("factorize: input exceeds 2^63 - 1");
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (n <= kTrialLimit * kTrialLimit || is_prime(n)) {
      // Below 10^12 a cofactor without small divisors is prime.
      out.push_back({n, 1});
    } else {
      std::map<std::uint64_t, unsigned> large;
      factor_large(n, large);
      for (const auto& [p, e] : large) out.push_back({p, e});
    }
  }
  return out;
}

std::vector<std::uint64_t> odd_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (const auto& pe : factorize(n)) {
    if (pe.prime != 2) primes.push_back(pe.prime);
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n;
}

bool is_triangular(std::uint64_t n) {
  // T_t = n forces t^2 < 2n < (t+1)^2, so t = floor(sqrt(2n)).
  if (n > kMaxFactorInput) throw std::invalid_argument("is_triangular: input exceeds 2^63 - 1");
  std::uint64_t t = isqrt(2 * n);
  return static_cast<u128>(t) * (t + 1) / 2 == n;
}

bool is_qr_residue(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("is_qr: modulus must be positive");
  if (m == 1) return true;
  a %= m;
  if (std::gcd(a, m) != 1) return false;
  for (const auto& [p, e] : factorize(m)) {
    if (p == 2) {
      if (e == 2 && a % 4 != 1) return false;
      if (e >= 3 && a % 8 != 1) return false;
    } else if (jacobi(static_cast<std::int64_t>(a % p), p) != 1) {
      return false;
    }
  }
  return true;
}

bool is_qr(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("is_qr: modulus must be positive");
  return is_qr_residue(mod_reduce(a, m), m);
}

int jacobi(std::int64_t a_signed, std::uint64_t m) {
  if (m % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd");
  std::uint64_t a = mod_reduce(a_signed, m);
  int sign = 1;
  while (a != 0) {
    unsigned tz = static_cast<unsigned>(std::countr_zero(a));
    a >>= tz;
    if ((tz & 1) && (m % 8 == 3 || m % 8 == 5)) sign = -sign;
    if (a % 4 == 3 && m % 4 == 3) sign = -sign;
    std::swap(a, m);
    a %= m;
  }
  return m == 1 ? sign : 0;
}

int hilbert2(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert2: arguments must be nonzero");
  auto split = [](std::int64_t x) {
    std::uint64_t mag = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
    unsigned val = v2(mag);
    std::uint64_t unit = (mag >> val) % 8;
    if (x < 0) unit = (8 - unit) % 8;
    return std::pair<unsigned, std::uint64_t>{val, unit};
  };
  auto [alpha, u] = split(a);
  auto [beta, v] = split(b);
  auto eps = [](std::uint64_t w) { return static_cast<unsigned>(w % 4 == 3); };
  auto omega = [](std::uint64_t w) { return static_cast<unsigned>(w == 3 || w == 5); };
  unsigned exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace mixedforms
