#pragma once

namespace cvclone {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cvclone
