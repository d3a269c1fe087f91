#pragma once

namespace spinhurwitz {

// Full command-line interface; returns the process exit code.
//   0 success, 1 usage error, 2 domain error, 3 method disagreement,
//   4 work budget exceeded.
int run_cli(int argc, const char* const* argv);

}  // namespace spinhurwitz
