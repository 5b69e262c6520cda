#pragma once

#include <ostream>

namespace barrier::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Entry point shared by the executable and the tests.
///
///   solve    --input FILE --eps X [--endpoint-policy touching|clamped]
///            [--eligibility rectangle|disk] [--y-window symmetric|paper]
///            [--parallel] [--out FILE] [--svg FILE]
///   oracle   --input FILE [--max-n 10] [--out FILE]
///   validate --input FILE --solution FILE [--tol 1e-9]
///   gen      --n N --L X --height H --seed S --out FILE
///   bench    --dir DIR --eps-list 0.5,0.2,0.1 --report FILE
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace barrier::cli
