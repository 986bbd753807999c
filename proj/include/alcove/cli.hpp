#pragma once

namespace alcove {

// Command-line driver.  Exit codes: 0 on success, 1 when a requested
// verification ran and failed, 2 on usage or validation errors.
int run_cli(int argc, const char* const* argv);

}  // namespace alcove
