#pragma once

namespace morphsplit {

inline constexpr const char* kVersion = "0.1.0";

// Identity of the pinned shuffle stream. Splits carry this in their
// provenance so a result can only be reproduced with the same generator.
inline constexpr const char* kRngId = "mt19937_64/fisher-yates-reject/v1";

}  // namespace morphsplit
