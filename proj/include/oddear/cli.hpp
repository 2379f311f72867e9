#pragma once

#include <ostream>

namespace oddear {

// Exit codes of run().
inline constexpr int kExitHolds = 0;
inline constexpr int kExitRejected = 1;  // verify: certificate rejected
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitScale = 4;
inline constexpr int kExitObstruction = 10;

// Certificates go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddear
