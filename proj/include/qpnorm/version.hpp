#pragma once

namespace qpnorm {
inline constexpr const char* version = "0.1.0";
}
