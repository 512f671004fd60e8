#pragma once

// Closed-form almost-universality criteria for one-parameter and
// two-parameter subfamilies. They are evaluated directly from their own
// statements and serve as an independent cross-check on classify().

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixedforms/classify.hpp"
#include "mixedforms/forms.hpp"

namespace mixedforms {

/// A subfamily is named by its pattern, e.g. "ax2+y2+Tz" or
/// "2^kx2+2^ly2+mTz"; params follow the letters in the order they appear.
struct CorollaryFamily {
  std::string_view pattern;
  std::vector<std::string_view> params;
  Kind kind;
};

const std::vector<CorollaryFamily>& corollary_families();

/// Throws std::invalid_argument for an unknown pattern.
const CorollaryFamily& find_corollary(std::string_view pattern);

/// The member of the subfamily with these parameters. Throws
/// std::invalid_argument on wrong arity, out-of-range exponents, or zero.
MixedForm corollary_form(std::string_view pattern, const std::vector<std::uint64_t>& params);

/// The criterion's verdict, or nullopt when the parameters fall outside the
/// criterion's hypotheses. Unknown is returned only inside a carve-out the
/// criterion leaves open.
std::optional<TriState> corollary_predicate(std::string_view pattern, const std::vector<std::uint64_t>& params);

}  // namespace mixedforms
