#pragma once

namespace cdlab {

/// Full command-line front end; returns the process exit code
/// (0 ok, 1 verification mismatch, 2 usage or input error).
int run_cli(int argc, const char* const* argv);

}  // namespace cdlab
