#pragma once

// Local solvability: the residue conditions at odd primes for diagonal
// ternary forms, the 2-adic side conditions of each family, and v_f.

#include <cstdint>
#include <vector>

#include "mixedforms/forms.hpp"

namespace mixedforms {

struct OddLocalResult {
  bool holds = true;
  std::vector<std::uint64_t> failing_primes;  // ascending, no repeats
};

/// -ab R c', -ac R b' and -bc R a' for the diagonal form ax^2+by^2+cz^2.
/// A failing prime is an odd p dividing one of a', b', c' at which the
/// corresponding Legendre symbol is not 1.
OddLocalResult odd_locally_universal(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// The same conditions restricted to the single odd prime p.
bool odd_locally_universal_at(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t p);

/// The family's 2-adic clause: 4 does not divide c, or 4 || c and 2 || ab
/// (two squares); 4 does not divide b or c (one square); always true for
/// three triangular slots.
bool two_adic_ok(const MixedForm& form);

/// v2(c), v2(b+c) or v2(a+b+c) by family.
unsigned vf(const MixedForm& form);

struct LocalReport {
  bool odd_condition_holds = true;
  std::vector<std::uint64_t> failing_odd_primes;
  bool two_adic_holds = true;
  unsigned vf = 0;
};

/// Odd condition evaluated on the associated quadratic form's coefficients,
/// which is the residue list of the family's asymptotic criterion.
LocalReport local_report(const MixedForm& form);

}  // namespace mixedforms
