#pragma once

namespace qsc {

inline constexpr const char* kToolVersion = "qsc 0.1.0";

}  // namespace qsc
