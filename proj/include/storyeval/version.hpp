#pragma once

namespace storyeval {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace storyeval
