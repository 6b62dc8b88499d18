#pragma once

namespace cascode {

inline constexpr const char* kVersionString = "1.0.0";

}  // namespace cascode
