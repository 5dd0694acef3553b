#include "cylscat/csv.hpp"

#include <cstdio>

namespace cylscat {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

}  // namespace cylscat
