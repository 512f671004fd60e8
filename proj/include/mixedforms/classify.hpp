#pragma once

// Decision procedures for universality, asymptotic universality and almost
// universality of the three mixed families.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedforms/forms.hpp"

namespace mixedforms {

enum class Verdict { Yes, No, Unknown };

std::string_view verdict_tag(Verdict v);  // "yes", "no", "unknown"

/// Yes, No, or Unknown with a tag naming the undecided region.
struct TriState {
  Verdict value = Verdict::Unknown;
  std::optional<std::string> gap_tag;  // set iff value == Unknown

  static TriState yes() { return {Verdict::Yes, std::nullopt}; }
  static TriState no() { return {Verdict::No, std::nullopt}; }
  static TriState unknown(std::string tag) { return {Verdict::Unknown, std::move(tag)}; }

  friend bool operator==(const TriState&, const TriState&) = default;
};

/// One evaluated clause: a stable label, the operands it used, the result.
struct TraceEntry {
  std::string clause;
  std::string inputs;
  bool outcome = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using Trace = std::vector<TraceEntry>;

struct NormalizedForm {
  MixedForm form;
  std::array<int, 3> permutation{0, 1, 2};  // normalized slot i holds input slot permutation[i]
};

/// Reorders symmetric slots so that v2(a) >= v2(b) (two squares),
/// v2(b) >= v2(c) (one square) or v2(a) >= v2(b) >= v2(c) (three triangular).
/// Ties go to the larger coefficient first, which puts the smaller odd
/// coefficient in slot c for three triangular slots.
NormalizedForm normalize(const MixedForm& form);

struct AsymptoticResult {
  bool value = false;
  Trace trace;
};

AsymptoticResult classify_asymptotic(const MixedForm& form);

/// Does sum coefficients[i] * x_i^2 = target have a solution with the given
/// parities? Exhaustive over |x_i| <= sqrt(target / coefficients[i]).
bool condition3_solvable(const std::array<std::uint64_t, 3>& coefficients, const std::array<Parity, 3>& parity,
                         std::uint64_t target);

struct AlmostResult {
  TriState value;
  Trace trace;
};

AlmostResult classify_almost(const MixedForm& form);

/// Membership in the family's complete list of universal forms, up to slot
/// symmetry.
bool classify_universal(const MixedForm& form);

/// The universal coefficient vectors of a family in canonical slot order.
const std::vector<std::array<std::uint64_t, 3>>& universal_list(Kind kind);

struct Classification {
  MixedForm form;
  NormalizedForm normalized;
  bool universal = false;
  bool asymptotically_universal = false;
  TriState almost_universal;
  Trace trace;
  std::vector<std::string> notes;  // annotations that never affect verdicts
};

Classification classify(const MixedForm& form);

}  // namespace mixedforms
