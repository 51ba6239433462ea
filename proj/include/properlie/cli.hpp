#pragma once

#include <ostream>

namespace properlie {

// Exit status: 0 all decided (and matching expectations), 2 something left
// undecided, 1 mismatch or error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace properlie
