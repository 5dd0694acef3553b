#pragma once

#include <array>

// Non-zero (row, column) blocks of B + C for the eight-density system with
// oblique incidence. All other blocks must be exactly zero.
namespace pattern {

inline constexpr std::array<std::array<bool, 8>, 8> kNonZero = {{
    //  0      1      2      3      4      5      6      7
    {true, false, false, true, false, false, false, true},
    {true, true, true, true, false, true, false, true},
    {false, true, true, false, false, true, false, false},
    {true, true, true, true, false, true, false, true},
    {false, false, false, true, true, false, false, true},
    {false, true, false, true, true, true, true, true},
    {false, true, false, false, false, true, true, false},
    {false, true, false, true, true, true, true, true},
}};

}  // namespace pattern
