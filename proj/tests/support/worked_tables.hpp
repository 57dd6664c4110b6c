#pragma once

// Published sequence tables, transcribed column by column.

#include <array>

namespace intseq::testing {

// x^2 + 2x - 1, seed [1, 0], j = 0..6
inline constexpr std::array<long long, 7> kPellS1{1, -2, 5, -12, 29, -70, 169};
inline constexpr std::array<long long, 7> kPellS2{0, 1, -2, 5, -12, 29, -70};

// same polynomial under shift (2, 1), j = 0..7
inline constexpr std::array<long long, 8> kShiftedS1{1, 0, 1, 2, 5, 12, 29, 70};
inline constexpr std::array<long long, 8> kShiftedS2{0, 1, 2, 5, 12, 29, 70, 169};

// x^3 - 2 under shift (1, 1), seed [1, 1, 0], j = 0..25
struct CubeRow {
  long long s1, s2, s3;
};

inline constexpr std::array<CubeRow, 26> kCubeTable{{
    {1, 1, 0},
    {1, 2, 1},
    {3, 3, 3},
    {9, 6, 6},
    {21, 15, 12},
    {45, 36, 27},
    {99, 81, 63},
    {225, 180, 144},
    {513, 405, 324},
    {1161, 918, 729},
    {2619, 2079, 1647},
    {5913, 4698, 3726},
    {13365, 10611, 8424},
    {30213, 23976, 19035},
    {68283, 54189, 43011},
    {154305, 122472, 97200},
    {348705, 276777, 219672},
    {788049, 625482, 496449},
    {1780947, 1413531, 1121931},
    {4024809, 3194478, 2535462},
    {9095733, 7219287, 5729940},
    {20555613, 16315020, 12949227},
    {46454067, 36870633, 29264247},
    {104982561, 83324700, 66134880},
    {237252321, 188307261, 149459580},
    {536171481, 425559582, 337766841},
}};

}  // namespace intseq::testing
