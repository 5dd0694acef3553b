#pragma once

#include <string>

namespace cylscat {

/// Real number with 15 significant digits, e.g. 3.71625444291000e-01.
std::string format_real(double v);

}  // namespace cylscat
