#include "mixedforms/corollaries.hpp"

#include <stdexcept>

#include "mixedforms/arith.hpp"

namespace mixedforms {

namespace {

using Params = std::vector<std::uint64_t>;
using Result = std::optional<TriState>;

TriState from_bool(bool almost) { return almost ? TriState::yes() : TriState::no(); }

template <typename Pred>
bool odd_primes_all(std::uint64_t n, Pred accept) {
  for (std::uint64_t p : odd_prime_divisors(n)) {
    if (!accept(p)) return false;
  }
  return true;
}

// Every prime divisor, 2 included.
template <typename Pred>
bool primes_all(std::uint64_t n, Pred accept) {
  return (n % 2 == 1 || accept(std::uint64_t{2})) && odd_primes_all(n, accept);
}

bool one_mod_four(std::uint64_t p) { return p % 4 == 1; }
bool one_three_mod_eight(std::uint64_t p) { return p % 8 == 1 || p % 8 == 3; }
bool twelfth_even(std::uint64_t p) { return (p / 12) % 2 == 0; }

bool squarefree(std::uint64_t n) { return squarefree_part(n) == n; }

// -x R m' for x > 0; product kept small by working mod m'.
bool minus_residue(std::uint64_t x, std::uint64_t m) {
  const std::uint64_t mo = odd_part(m);
  if (mo == 1) return true;
  return is_qr_residue(mo - x % mo, mo);
}

std::uint64_t pow2(std::uint64_t k) {
  if (k > 32) throw std::invalid_argument("exponent too large: coefficients are limited to 2^32");
  return std::uint64_t{1} << k;
}

struct Entry {
  CorollaryFamily family;
  MixedForm (*form)(const Params&);
  Result (*predicate)(const Params&);
};

MixedForm sst(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return MixedForm::make(Kind::TwoSquaresOneTri, a, b, c);
}
MixedForm stt(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return MixedForm::make(Kind::OneSquareTwoTri, a, b, c);
}
MixedForm ttt(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return MixedForm::make(Kind::ThreeTri, a, b, c); }

// 2ax^2 + 2by^2 + cz^2 pattern with c odd.
Result four_c_tri(const Params& p) {
  const std::uint64_t a = p[0], b = p[1], c = p[2];
  if (c % 2 == 0) return std::nullopt;
  const bool two_exact = v2(a) + v2(b) == 1;
  const bool r1 = is_qr_residue((c - mul_mod(a % c, b % c, c)) % c, c);
  const bool r2 = minus_residue(mul_mod(2 * (a % odd_part(b)), c % odd_part(b), odd_part(b)), b);
  const bool r3 = minus_residue(mul_mod(2 * (b % odd_part(a)), c % odd_part(a), odd_part(a)), a);
  return from_bool(two_exact && r1 && r2 && r3);
}

// Hypothesis shared by the four (a, b) patterns with b odd.
bool has_three_mod_four_prime(std::uint64_t a, std::uint64_t b) {
  auto any3 = [](std::uint64_t n) {
    for (std::uint64_t q : odd_prime_divisors(squarefree_part(n))) {
      if (q % 4 == 3) return true;
    }
    return false;
  };
  return any3(odd_part(a)) || any3(b);
}

Result ab_pattern(const Params& p, std::uint64_t two_factor) {
  const std::uint64_t a = p[0], b = p[1];
  if (b % 2 == 0 || !has_three_mod_four_prime(a, b)) return std::nullopt;
  const bool r1 = b == 1 || is_qr_residue((b - mul_mod(two_factor, a % b, b)) % b, b);
  const bool r2 = minus_residue(b, a);
  return from_bool(r1 && r2);
}

// Exponent-pair pattern 2^k x^2 + 2^l y^2 + m T_z.
Result two_powers(const Params& p) {
  const std::uint64_t k = p[0], l = p[1], m = p[2];
  if (l < 1 || k < l) return std::nullopt;
  const bool asymptotic = (k - l) % 2 == 0 ? primes_all(m, one_mod_four) : primes_all(m, one_three_mod_eight);
  if (!asymptotic) return TriState::no();
  return from_bool(squarefree(m) || (k % 2 == 0 && l == 1));
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries{
      {{"ax2+y2+Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 1, 1); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_three_mod_eight)); }},
      {{"ax2+2y2+2Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2, 2); },
       [](const Params& p) -> Result { return from_bool(primes_all(p[0], one_three_mod_eight)); }},
      {{"ax2+2y2+Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2, 1); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_mod_four)); }},
      {{"ax2+y2+2Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 1, 2); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_mod_four)); }},
      {{"ax2+Ty+Tz", {"a"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(p[0], 1, 1); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_mod_four)); }},
      {{"ax2+2y2+4Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2, 4); },
       [](const Params& p) -> Result { return from_bool(primes_all(p[0], one_mod_four)); }},
      {{"ax2+2Ty+2Tz", {"a"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(p[0], 2, 2); },
       [](const Params& p) -> Result { return from_bool(primes_all(p[0], one_mod_four)); }},
      {{"ax2+4y2+2Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 4, 2); },
       [](const Params& p) -> Result { return from_bool(p[0] % 8 == 1 && primes_all(p[0], one_mod_four)); }},
      {{"ax2+3y2+Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 3, 1); },
       [](const Params& p) -> Result { return from_bool(p[0] % 3 == 1 && odd_primes_all(p[0], twelfth_even)); }},
      {{"ax2+y2+3Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 1, 3); },
       [](const Params& p) -> Result { return from_bool(p[0] % 3 == 2 && odd_primes_all(p[0], twelfth_even)); }},
      {{"ax2+2y2+6Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2, 6); },
       [](const Params& p) -> Result { return from_bool(p[0] % 6 == 1 && primes_all(p[0], twelfth_even)); }},
      {{"ax2+6y2+2Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 6, 2); },
       [](const Params& p) -> Result { return from_bool(p[0] % 6 == 5 && primes_all(p[0], twelfth_even)); }},
      {{"x2+y2+mTz", {"m"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(1, 1, p[0]); },
       [](const Params& p) -> Result { return from_bool(p[0] % 4 != 0 && odd_primes_all(p[0], one_mod_four)); }},
      {{"2x2+y2+mTz", {"m"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(2, 1, p[0]); },
       [](const Params& p) -> Result {
         return from_bool(p[0] % 8 != 0 && odd_primes_all(p[0], one_three_mod_eight));
       }},
      {{"4^kx2+y2+mTz", {"k", "m"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(pow2(2 * p[0]), 1, p[1]); },
       [](const Params& p) -> Result {
         if (p[0] < 1) return std::nullopt;
         const std::uint64_t m = p[1];
         const bool ok = m % 4 != 0 && minus_residue(1, m) && (v2(m) != 1 || squarefree(m));
         return from_bool(ok);
       }},
      {{"2*4^kx2+y2+mTz", {"k", "m"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(pow2(2 * p[0] + 1), 1, p[1]); },
       [](const Params& p) -> Result {
         if (p[0] < 1) return std::nullopt;
         const std::uint64_t m = p[1];
         const bool ok = m % 4 != 0 && minus_residue(2, m) && (m % 8 != 1 || squarefree(m));
         return from_bool(ok);
       }},
      {{"2^kx2+2^ly2+mTz", {"k", "l", "m"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(pow2(p[0]), pow2(p[1]), p[2]); }, two_powers},
      {{"ax2+by2+4cTz", {"a", "b", "c"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], p[1], 4 * p[2]); }, four_c_tri},
      {{"ax2+2cy2+4cTz", {"a", "c"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2 * p[1], 4 * p[1]); },
       [](const Params& p) -> Result {
         if (p[1] % 2 == 0) return std::nullopt;
         return from_bool(p[1] == 1 && primes_all(p[0], one_mod_four));
       }},
      {{"ax2+by2+2Tz", {"a", "b"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], p[1], 2); },
       [](const Params& p) { return ab_pattern(p, 1); }},
      {{"ax2+y2+2bTz", {"a", "b"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 1, 2 * p[1]); },
       [](const Params& p) { return ab_pattern(p, 1); }},
      {{"ax2+2y2+bTz", {"a", "b"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2, p[1]); },
       [](const Params& p) { return ab_pattern(p, 2); }},
      {{"ax2+2by2+Tz", {"a", "b"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 2 * p[1], 1); },
       [](const Params& p) { return ab_pattern(p, 2); }},
      {{"ax2+216y2+Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 216, 1); },
       [](const Params& p) -> Result {
         const std::uint64_t a = p[0];
         if (a % 2 == 1 || v2(a) % 2 == 1) return std::nullopt;
         if (!odd_primes_all(a, [](std::uint64_t q) { return q % 3 == 1; })) return std::nullopt;
         const auto sf_primes = odd_prime_divisors(squarefree_part(odd_part(a)));
         unsigned nineteen = 0;
         bool all = true;
         for (std::uint64_t q : sf_primes) {
           if (q % 24 == 19) ++nineteen;
           else if (q % 24 != 1) all = false;
         }
         return from_bool(!(all && nineteen % 2 == 1));
       }},
      {{"ax2+250y2+Tz", {"a"}, Kind::TwoSquaresOneTri},
       [](const Params& p) { return sst(p[0], 250, 1); },
       [](const Params& p) -> Result {
         const std::uint64_t a = p[0];
         if (a % 2 == 1 || v2(a) % 2 == 0) return std::nullopt;
         const std::uint64_t ao = odd_part(a);
         if (ao % 10 != 1 && ao % 10 != 9) return std::nullopt;
         if (!odd_primes_all(ao, [](std::uint64_t q) { return (q / 10) % 2 == 0; })) return std::nullopt;
         const bool not_almost = (ao % 40 == 21 || ao % 40 == 29) &&
                                 odd_primes_all(squarefree_part(ao), [](std::uint64_t q) {
                                   return q % 20 == 1 || q % 20 == 9;
                                 });
         return from_bool(!not_almost);
       }},
      {{"ax2+2Ty+Tz", {"a"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(p[0], 2, 1); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_three_mod_eight)); }},
      {{"ax2+4Ty+Tz", {"a"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(p[0], 4, 1); },
       [](const Params& p) -> Result { return from_bool(odd_primes_all(p[0], one_mod_four)); }},
      {{"x2+Ty+mTz", {"m"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(1, 1, p[0]); },
       [](const Params& p) -> Result {
         const std::uint64_t m = p[0];
         const unsigned v = v2(m);
         const bool primes = odd_primes_all(m, one_three_mod_eight);
         const bool sufficient = primes && (odd_part(m) % 8 == 3 || v < 4 || v % 2 == 1);
         if (sufficient) return TriState::yes();
         // Outside the carve-out the converse holds; inside it, a failing
         // prime condition already rules out asymptotic universality.
         if (v != 4 || !primes) return TriState::no();
         return TriState::unknown("x2+Ty+mTz:v2(m)=4");
       }},
      {{"2^kx2+2^kTy+mTz", {"k", "m"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(pow2(p[0]), pow2(p[0]), p[1]); },
       [](const Params& p) -> Result {
         const std::uint64_t k = p[0], m = p[1];
         if (k < 1) return std::nullopt;
         if (k == 3 && m % 8 == 1) return TriState::no();
         if (k == 3 || k == 4) return std::nullopt;
         return from_bool((k == 1 || k == 2) && primes_all(m, one_three_mod_eight));
       }},
      {{"x2+2Ty+mTz", {"m"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(1, 2, p[0]); },
       [](const Params& p) -> Result {
         const std::uint64_t m = p[0];
         const unsigned v = v2(m);
         const bool primes = odd_primes_all(m, one_mod_four);
         if (v == 3) return primes ? TriState::unknown("x2+2Ty+mTz:v2(m)=3") : TriState::no();
         return from_bool(primes && !(v >= 5 && v % 2 == 1));
       }},
      {{"Tx+Ty+mTz", {"m"}, Kind::ThreeTri},
       [](const Params& p) { return ttt(1, 1, p[0]); },
       [](const Params& p) -> Result {
         const std::uint64_t m = p[0];
         const unsigned v = v2(m);
         const bool primes = odd_primes_all(m, one_mod_four);
         if (v == 3) return primes ? TriState::unknown("Tx+Ty+mTz:v2(m)=3") : TriState::no();
         return from_bool(primes && !(v >= 5 && v % 2 == 1));
       }},
      {{"2^kx2+2^(k+1)Ty+mTz", {"k", "m"}, Kind::OneSquareTwoTri},
       [](const Params& p) { return stt(pow2(p[0]), pow2(p[0] + 1), p[1]); },
       [](const Params& p) -> Result {
         const std::uint64_t k = p[0];
         if (k < 1 || k == 2) return std::nullopt;
         return from_bool(k == 1 && primes_all(p[1], one_mod_four));
       }},
      {{"2^kTx+2^kTy+mTz", {"k", "m"}, Kind::ThreeTri},
       [](const Params& p) { return ttt(pow2(p[0]), pow2(p[0]), p[1]); },
       [](const Params& p) -> Result {
         const std::uint64_t k = p[0];
         if (k < 1 || k == 2) return std::nullopt;
         return from_bool(k == 1 && primes_all(p[1], one_mod_four));
       }},
      {{"aTx+2Ty+Tz", {"a"}, Kind::ThreeTri},
       [](const Params& p) { return ttt(p[0], 2, 1); },
       [](const Params& p) -> Result {
         const std::uint64_t a = p[0];
         const unsigned v = v2(a);
         const bool primes = odd_primes_all(a, one_three_mod_eight);
         const bool sufficient = primes && (odd_part(a) % 8 == 1 || v < 4 || v % 2 == 1);
         if (sufficient) return TriState::yes();
         if (v != 4 || !primes) return TriState::no();
         return TriState::unknown("aTx+2Ty+Tz:v2(a)=4");
       }},
  };
  return entries;
}

const Entry& find_entry(std::string_view pattern) {
  for (const auto& e : table()) {
    if (e.family.pattern == pattern) return e;
  }
  throw std::invalid_argument("unknown corollary pattern '" + std::string(pattern) + "'");
}

void check_params(const Entry& e, const Params& params) {
  if (params.size() != e.family.params.size()) {
    throw std::invalid_argument("pattern '" + std::string(e.family.pattern) + "' takes " +
                                std::to_string(e.family.params.size()) + " parameters");
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    // Exponent parameters may be zero; coefficients may not.
    const auto name = e.family.params[i];
    if (name != "k" && name != "l" && params[i] == 0) {
      throw std::invalid_argument("parameter " + std::string(name) + " must be positive");
    }
  }
}

}  // namespace

const std::vector<CorollaryFamily>& corollary_families() {
  static const std::vector<CorollaryFamily> families = [] {
    std::vector<CorollaryFamily> out;
    for (const auto& e : table()) out.push_back(e.family);
    return out;
  }();
  return families;
}

const CorollaryFamily& find_corollary(std::string_view pattern) { return find_entry(pattern).family; }

MixedForm corollary_form(std::string_view pattern, const std::vector<std::uint64_t>& params) {
  const Entry& e = find_entry(pattern);
  check_params(e, params);
  return e.form(params);
}

std::optional<TriState> corollary_predicate(std::string_view pattern, const std::vector<std::uint64_t>& params) {
  const Entry& e = find_entry(pattern);
  check_params(e, params);
  return e.predicate(params);
}

}  // namespace mixedforms
