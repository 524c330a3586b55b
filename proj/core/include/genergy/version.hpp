#pragma once

namespace genergy {

inline constexpr const char* version = "0.1.0";

}
