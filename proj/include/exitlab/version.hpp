// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace exitlab {

inline constexpr const char* kToolName = "exitlab";
inline constexpr const char* kVersion = "0.1.0";

inline const char* version_string() { return "exitlab 0.1.0"; }

} // namespace exitlab
