#pragma once

#include <iosfwd>

namespace seki::cli {

enum ExitCode { kOk = 0, kBadFlags = 1, kIoFailure = 2, kCorruptDatabase = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seki::cli
