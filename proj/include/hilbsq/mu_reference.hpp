#pragma once

// Published reference values for the diagonal-class coefficients mu_{i,j}
// (1-based indices, upper triangle, nonzero entries only; all unlisted
// upper-triangle entries are zero). This table ships as a golden fixture so
// that the computed coefficients are checked against the literature rather
// than against themselves.

#include <array>

namespace hilbsq {

struct MuEntry {
    int i;
    int j;
    long long value;
};

inline constexpr std::array<MuEntry, 75> kPublishedMuTable = {{
    {1, 1, -4},    {1, 2, -7},    {1, 3, -10},  {1, 4, -8},    {1, 5, -6},
    {1, 6, -4},    {1, 7, -2},    {1, 8, -5},   {2, 2, -14},   {2, 3, -20},
    {2, 4, -16},   {2, 5, -12},   {2, 6, -8},   {2, 7, -4},    {2, 8, -10},
    {3, 3, -30},   {3, 4, -24},   {3, 5, -18},  {3, 6, -12},   {3, 7, -6},
    {3, 8, -15},   {4, 4, -20},   {4, 5, -15},  {4, 6, -10},   {4, 7, -5},
    {4, 8, -12},   {5, 5, -12},   {5, 6, -8},   {5, 7, -4},    {5, 8, -9},
    {6, 6, -6},    {6, 7, -3},    {6, 8, -6},   {7, 7, -2},    {7, 8, -3},
    {8, 8, -8},    {9, 9, -4},    {9, 10, -7},  {9, 11, -10},  {9, 12, -8},
    {9, 13, -6},   {9, 14, -4},   {9, 15, -2},  {9, 16, -5},   {10, 10, -14},
    {10, 11, -20}, {10, 12, -16}, {10, 13, -12},{10, 14, -8},  {10, 15, -4},
    {10, 16, -10}, {11, 11, -30}, {11, 12, -24},{11, 13, -18}, {11, 14, -12},
    {11, 15, -6},  {11, 16, -15}, {12, 12, -20},{12, 13, -15}, {12, 14, -10},
    {12, 15, -5},  {12, 16, -12}, {13, 13, -12},{13, 14, -8},  {13, 15, -4},
    {13, 16, -9},  {14, 14, -6},  {14, 15, -3}, {14, 16, -6},  {15, 15, -2},
    {15, 16, -3},  {16, 16, -8},  {17, 18, 1},  {19, 20, 1},   {21, 22, 1},
}};

}  // namespace hilbsq
