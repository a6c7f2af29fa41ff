#pragma once

#include <ostream>

namespace lq {

/// Runs one qsep command line. Returns the process exit code:
/// 0 success/accept/true, 1 rejection/falsity, 2 usage or parse error.
int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace lq
