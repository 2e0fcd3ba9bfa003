#pragma once

#include <vector>

namespace wami::cli {

// Exit codes: 0 success, 1 usage error, 2 I/O or format error.
int run(int argc, const char* const* argv);

}  // namespace wami::cli
