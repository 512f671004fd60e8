#include "mixedforms/local.hpp"

#include <algorithm>
#include <array>

#include "mixedforms/arith.hpp"

namespace mixedforms {

namespace {

// Does -xy R p hold at the odd prime p? Works on residues so x*y never
// has to fit in 64 bits.
bool minus_product_is_residue(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  const std::uint64_t prod = mul_mod(x % p, y % p, p);
  if (prod == 0) return false;
  return jacobi(static_cast<std::int64_t>(p - prod), p) == 1;
}

// Primes p | odd_part(z) at which -xy is not a square unit mod p.
void collect_failures(std::uint64_t x, std::uint64_t y, std::uint64_t z, std::vector<std::uint64_t>& out) {
  for (std::uint64_t p : odd_prime_divisors(odd_part(z))) {
    if (!minus_product_is_residue(x, y, p)) out.push_back(p);
  }
}

}  // namespace

OddLocalResult odd_locally_universal(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  OddLocalResult result;
  collect_failures(a, b, c, result.failing_primes);
  collect_failures(a, c, b, result.failing_primes);
  collect_failures(b, c, a, result.failing_primes);
  auto& fp = result.failing_primes;
  std::sort(fp.begin(), fp.end());
  fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
  result.holds = fp.empty();
  return result;
}

bool odd_locally_universal_at(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t p) {
  const std::array<std::array<std::uint64_t, 3>, 3> conditions{{{a, b, c}, {a, c, b}, {b, c, a}}};
  for (const auto& [x, y, z] : conditions) {
    if (z % p == 0 && !minus_product_is_residue(x, y, p)) return false;
  }
  return true;
}

bool two_adic_ok(const MixedForm& form) {
  switch (form.kind) {
    case Kind::TwoSquaresOneTri: {
      if (form.c % 4 != 0) return true;
      const bool four_exactly = v2(form.c) == 2;
      return four_exactly && v2(form.a) + v2(form.b) == 1;
    }
    case Kind::OneSquareTwoTri:
      return form.b % 4 != 0 || form.c % 4 != 0;
    case Kind::ThreeTri:
      return true;
  }
  return true;
}

unsigned vf(const MixedForm& form) {
  switch (form.kind) {
    case Kind::TwoSquaresOneTri:
      return v2(form.c);
    case Kind::OneSquareTwoTri:
      return v2(form.b + form.c);
    case Kind::ThreeTri:
      return v2(form.a + form.b + form.c);
  }
  return 0;
}

LocalReport local_report(const MixedForm& form) {
  const auto q = associated_quadratic(form);
  const auto odd = odd_locally_universal(q.coefficients[0], q.coefficients[1], q.coefficients[2]);
  LocalReport report;
  report.odd_condition_holds = odd.holds;
  report.failing_odd_primes = odd.failing_primes;
  report.two_adic_holds = two_adic_ok(form);
  report.vf = vf(form);
  return report;
}

}  // namespace mixedforms
