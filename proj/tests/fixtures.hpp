// Copyright 2026 the divfrob authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <vector>

namespace fixtures {

using Matrix = std::vector<std::vector<std::uint64_t>>;

inline const std::vector<long long> kQuintic = {-120, 274, -225, 85, -15, 1};
inline const std::vector<long long> kSeptic = {-5040, 13068, -13132, 6769, -1960, 322, -28, 1};

inline const Matrix kFilt17 = {
    {0, 12, 16, 6, 6, 0, 0, 0},
    {8, 0, 0, 0, 0, 15, 1, 11},
    {9, 0, 0, 0, 0, 7, 0, 12},
    {7, 0, 0, 0, 0, 1, 4, 15},
    {10, 0, 0, 0, 0, 10, 8, 0},
    {0, 13, 5, 8, 0, 0, 0, 0},
    {0, 5, 10, 11, 13, 0, 0, 0},
    {0, 8, 11, 0, 10, 0, 0, 0},
};

inline const Matrix kFilt31 = {
    {21, 0, 0, 0, 0, 8, 2, 4},
    {0, 17, 19, 25, 8, 0, 0, 0},
    {0, 14, 10, 16, 30, 0, 0, 0},
    {0, 8, 8, 14, 20, 0, 0, 0},
    {0, 0, 16, 3, 11, 0, 0, 0},
    {0, 0, 0, 0, 0, 9, 11, 24},
    {28, 0, 0, 0, 0, 8, 29, 10},
    {13, 0, 0, 0, 0, 29, 15, 9},
};

inline const Matrix kFilt41 = {
    {0, 1, 31, 30, 36, 0, 0, 0},
    {5, 0, 0, 0, 0, 37, 27, 14},
    {34, 0, 0, 0, 0, 27, 9, 6},
    {8, 0, 0, 0, 0, 14, 6, 40},
    {33, 0, 0, 0, 0, 0, 0, 0},
    {0, 36, 26, 4, 0, 0, 0, 0},
    {0, 26, 6, 31, 0, 0, 0, 0},
    {0, 4, 31, 38, 0, 0, 0, 0},
};

inline const Matrix kFilt13 = {
    {10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 8, 1, 8, 6},
    {0, 4, 9, 6, 0, 0, 0, 0, 0, 0, 6, 8, 10, 0, 0, 0, 0, 0},
    {0, 10, 4, 0, 0, 0, 0, 0, 0, 0, 5, 0, 8, 0, 0, 0, 0, 0},
    {0, 1, 8, 8, 0, 0, 0, 0, 0, 0, 8, 9, 10, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 9, 5, 6, 2, 12, 6, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 11, 3, 9, 6, 12, 7, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 2, 1, 1, 2, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 6, 12, 0, 8, 2, 11, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 8, 10, 6, 7, 10, 5, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 5, 7, 0, 10, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 9, 7, 0, 0, 0, 0, 0, 0, 9, 11, 10, 0, 0, 0, 0, 0},
    {0, 5, 4, 7, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
    {0, 1, 4, 1, 0, 0, 0, 0, 0, 0, 3, 12, 1, 0, 0, 0, 0, 0},
    {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10, 7, 7, 7, 0},
    {3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10, 8, 10, 12, 1},
    {10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 10, 1, 4, 8},
    {11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 11, 1, 7, 12, 0},
    {5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 1, 4, 9, 8},
};

inline const Matrix kIso17 = {
    {0, 0, 0, 0, 12, 16, 6, 6},
    {0, 0, 0, 0, 13, 5, 8, 0},
    {0, 0, 0, 0, 5, 10, 11, 13},
    {0, 0, 0, 0, 8, 11, 0, 10},
    {8, 15, 1, 11, 0, 0, 0, 0},
    {9, 7, 0, 12, 0, 0, 0, 0},
    {7, 1, 4, 15, 0, 0, 0, 0},
    {10, 10, 8, 0, 0, 0, 0, 0},
};

inline const Matrix kIso31 = {
    {21, 8, 2, 4, 0, 0, 0, 0},
    {0, 9, 11, 24, 0, 0, 0, 0},
    {28, 8, 29, 10, 0, 0, 0, 0},
    {13, 29, 15, 9, 0, 0, 0, 0},
    {0, 0, 0, 0, 17, 19, 25, 8},
    {0, 0, 0, 0, 14, 10, 16, 30},
    {0, 0, 0, 0, 8, 8, 14, 20},
    {0, 0, 0, 0, 0, 16, 3, 11},
};

inline const Matrix kIso41 = {
    {0, 0, 0, 0, 1, 31, 30, 36},
    {0, 0, 0, 0, 36, 26, 4, 0},
    {0, 0, 0, 0, 26, 6, 31, 0},
    {0, 0, 0, 0, 4, 31, 38, 0},
    {5, 37, 27, 14, 0, 0, 0, 0},
    {34, 27, 9, 6, 0, 0, 0, 0},
    {8, 14, 6, 40, 0, 0, 0, 0},
    {33, 0, 0, 0, 0, 0, 0, 0},
};

inline const Matrix kIso13 = {
    {10, 2, 8, 1, 8, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {4, 10, 7, 7, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, 10, 8, 10, 12, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {10, 12, 10, 1, 4, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {11, 11, 1, 7, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {5, 12, 1, 4, 9, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 4, 9, 6, 6, 8, 10, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 10, 4, 0, 5, 0, 8, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 8, 8, 8, 9, 10, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 9, 7, 9, 11, 10, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 5, 4, 7, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 4, 1, 3, 12, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 5, 6, 2, 12, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 11, 3, 9, 6, 12, 7},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 2, 0, 12},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 12, 0, 8, 2, 11},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 10, 6, 7, 10, 5},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 7, 0, 10, 8, 0},
};

}  // namespace fixtures
