#pragma once

#include <iosfwd>
#include <string>

namespace twistgen {

// Exit-code contract: 0 all-pass, 1 claim failure, 2 usage/data error,
// 3 resource cap exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twistgen
