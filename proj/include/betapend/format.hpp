#pragma once

#include <string>

namespace betapend {

// Renders a double with 17 significant digits, which round-trips exactly:
// plain decimal for |v| in [1e-4, 1e6), scientific outside.
std::string format_value(double v);

}  // namespace betapend
