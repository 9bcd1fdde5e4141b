#pragma once

#include <iosfwd>

#include "digitop/homotopy.hpp"

namespace digitop::cli {

/// One "<object> <check> PASS|FAIL" line per check; true when all pass.
bool verify_gallery(std::ostream& out, const HomotopyLimits& limits);

}  // namespace digitop::cli
