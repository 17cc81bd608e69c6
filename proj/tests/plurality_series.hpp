#pragma once

// Ehrhart series of the plurality manipulation regions (P_b, P_c,
// their intersection and the union), denominators expanded.

#include <vector>

namespace plurality_series {

struct Series {
    std::vector<long> num;
    std::vector<long> den;
};

inline const Series manipulable_for_b{
    {1, 2, 6, 14, 30, 44, 63, 64, 66, 56, 44, 24, 12},
    {1, 2, 2, -2, -9, -12, -6, 12, 27, 26, 4, -26, -38, -26, 4, 26, 27, 12, -6, -12, -9, -2, 2, 2, 1}};

inline const Series manipulable_for_c{
    {1, 2, 4, 10, 20, 30, 41, 40, 38, 34, 26, 16, 8},
    {1, 2, 2, -2, -9, -12, -6, 12, 27, 26, 4, -26, -38, -26, 4, 26, 27, 12, -6, -12, -9, -2, 2, 2, 1}};

inline const Series manipulable_for_both{
    {1, 0, 2, 4, 4, 4, 5, 0, 4},
    {1, 0, 0, -4, -2, 0, 6, 8, 1, -4, -12, -4, 1, 8, 6, 0, -2, -4, 0, 0, 1}};

inline const Series manipulable{
    {1, 2, 6, 14, 33, 50, 73, 74, 78, 68, 57, 32, 16},
    {1, 2, 2, -2, -9, -12, -6, 12, 27, 26, 4, -26, -38, -26, 4, 26, 27, 12, -6, -12, -9, -2, 2, 2, 1}};

}  // namespace plurality_series
