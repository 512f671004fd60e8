#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mixedforms/classify.hpp"
#include "mixedforms/forms.hpp"

namespace mixedforms {

/// Command-line entry point. args excludes the program name. Returns 0 on
/// success, 1 when verification finds a mismatch, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Canonical JSON (sorted keys, integers only) for a classification.
std::string classification_json(const Classification& c);

/// Canonical JSON for an exceptional-set report.
std::string exceptions_json(const ExceptionalSetReport& report);

}  // namespace mixedforms
