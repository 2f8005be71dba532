#pragma once

// Published values of n_g (OEIS A007323) for g = 0..60.

#include <array>
#include <cstdint>

namespace numsg {

inline constexpr std::array<std::uint64_t, 61> kKnownCounts = {
    1ULL,              1ULL,              2ULL,              4ULL,
    7ULL,              12ULL,             23ULL,             39ULL,
    67ULL,             118ULL,            204ULL,            343ULL,
    592ULL,            1001ULL,           1693ULL,           2857ULL,
    4806ULL,           8045ULL,           13467ULL,          22464ULL,
    37396ULL,          62194ULL,          103246ULL,         170963ULL,
    282828ULL,         467224ULL,         770832ULL,         1270267ULL,
    2091030ULL,        3437839ULL,        5646773ULL,        9266788ULL,
    15195070ULL,       24896206ULL,       40761087ULL,       66687201ULL,
    109032500ULL,      178158289ULL,      290939807ULL,      474851445ULL,
    774614284ULL,      1262992840ULL,     2058356522ULL,     3353191846ULL,
    5460401576ULL,     8888486816ULL,     14463633648ULL,    23527845502ULL,
    38260496374ULL,    62200036752ULL,    101090300128ULL,   164253200784ULL,
    266815155103ULL,   433317458741ULL,   703569992121ULL,   1142140736859ULL,
    1853737832107ULL,  3008140981820ULL,  4880606790010ULL,  7917344087695ULL,
    12841603251351ULL,
};

}  // namespace numsg
