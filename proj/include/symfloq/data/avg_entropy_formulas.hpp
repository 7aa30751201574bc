#pragma once

// Closed-form one-period averages of the single-qubit linear entropy at
// tau = pi/4, as structured term lists. Each term is
//   coef * sin^a(theta) * cos^b(theta) * {1, cos(m phi), sin(m phi)} * prod_f sum_i a_i cos(k_i theta)
// and the formula value is (sum of terms) / denominator.

#include <cmath>
#include <vector>

namespace symfloq {

struct Harmonic {
    double a;
    double k;
};
using CosSeries = std::vector<Harmonic>;

enum class PhiKind { None, Cos, Sin };

struct Term {
    double coef;
    int sin_pow;
    int cos_pow;
    PhiKind phi;
    int m;
    std::vector<CosSeries> factors;
};

struct AvgEntropyFormula {
    int n_qubits;
    double J;
    double denominator;
    std::vector<Term> terms;
    double lo, hi;  // expected range over the sphere
};

namespace data {

inline constexpr PhiKind C0 = PhiKind::None, Cc = PhiKind::Cos, Ss = PhiKind::Sin;
inline Term G(double coef, int sp, int cp, PhiKind ph, int m, std::vector<CosSeries> f = {}) {
    return {coef, sp, cp, ph, m, std::move(f)};
}
inline Term K(CosSeries s) { return G(1, 0, 0, C0, 0, {std::move(s)}); }

inline std::vector<AvgEntropyFormula> build_avg_entropy_formulas() {
    const double r2 = std::sqrt(2.0);
    std::vector<AvgEntropyFormula> F;

    F.push_back({4, 1.0, 65536,
                 {K({{16877, 0}, {-872, 2}, {-156, 4}, {424, 6}, {111, 8}}),
                  G(-96, 4, 0, Cc, 2, {{{67, 0}, {60, 2}, {1, 4}}}),
                  G(-1024, 6, 0, Cc, 4, {{{2, 0}, {1, 2}}}),
                  G(768, 8, 0, Cc, 6),
                  G(128, 8, 0, Cc, 8)},
                 0.2343, 0.2953});

    F.push_back({5, 1.0, 393216,
                 {K({{127418, 0}, {658, 2}, {1069, 6}, {744, 4}, {1118, 8}, {65, 10}}),
                  G(-256, 8, 0, Cc, 4, {{{52, 0}, {60, 2}}}),
                  G(256, 8, 0, Cc, 8, {{{1, 0}, {-5, 2}}})},
                 0.3194, 1.0 / 3});

    F.push_back({6, 1.0, 8388608,
                 {K({{2248542, 0}, {-170488, 2}, {873, 12}, {-57465, 4}, {16818, 8}, {5892, 10}, {52980, 6}}),
                  G(-160, 4, 0, Cc, 2, {{{7413, 0}, {7288, 2}, {1220, 4}, {456, 6}, {7, 8}}}),
                  G(-7680, 10, 0, Cc, 4, {{{47, 0}, {17, 2}}}),
                  G(-1024, 10, 0, Cc, 8, {{{17, 0}, {23, 2}}}),
                  G(133120, 12, 0, Cc, 6),
                  G(10240, 12, 0, Cc, 10),
                  G(1024, 12, 0, Cc, 12)},
                 0.2416, 0.317});

    F.push_back({7, 1.0, 50331648,
                 {K({{16524436, 0}, {6369, 2}, {-33374, 4}, {101035, 6}, {136588, 8}, {27169, 10}, {14398, 12}, {595, 14}}),
                  G(-22528, 12, 0, Cc, 4, {{{89, 0}, {91, 2}}}),
                  G(-4096, 12, 0, Cc, 8, {{{41, 0}, {91, 2}}}),
                  G(2048, 12, 0, Cc, 12, {{{3, 0}, {-7, 2}}})},
                 0.32388, 1.0 / 3});

    F.push_back({8, 1.0, 4294967296.0,
                 {K({{1169626257, 0}, {-100179152, 2}, {-30918888, 4}, {23312016, 6}, {4417140, 8}, {5633712, 10},
                     {1548840, 12}, {274320, 14}, {27579, 16}}),
                  G(-224, 4, 0, Cc, 2,
                    {{{3335046, 0}, {3546760, 2}, {1015019, 4}, {431796, 6}, {45770, 8}, {14020, 10}, {197, 12}}}),
                  G(-65536.0 * 1001, 14, 0, Cc, 4, {{{3, 0}, {1, 2}}}),
                  G(-65536.0 * 91, 14, 0, Cc, 8, {{{5, 0}, {3, 2}}}),
                  G(-65536.0, 14, 0, Cc, 12, {{{5, 0}, {23, 2}}}),
                  G(32768.0 * 14 * 169, 16, 0, Cc, 6),
                  G(32768.0 * 14 * 27, 16, 0, Cc, 10),
                  G(32768.0 * 14, 16, 0, Cc, 14),
                  G(32768.0, 16, 0, Cc, 16)},
                 0.2438, 0.3275});

    F.push_back({9, 1.0, 25769803776.0,
                 {K({{8507290602, 0}, {-8548826, 2}, {-32246864, 4}, {35001876, 6}, {52655624, 8}, {18504260, 10},
                     {14750928, 12}, {1880317, 14}, {626062, 16}, {20613, 18}}),
                  G(-65536.0 * 104, 16, 0, Cc, 4, {{{155, 0}, {153, 2}}}),
                  G(-65536.0 * 28, 16, 0, Cc, 8, {{{107, 0}, {153, 2}}}),
                  G(-65536.0 * 24, 16, 0, Cc, 12, {{{3, 0}, {17, 2}}}),
                  G(-65536.0, 16, 0, Cc, 16, {{{-5, 0}, {9, 2}}})},
                 0.3261, 1.0 / 3});

    F.push_back({10, 1.0, 549755813888.0,
                 {K({{150956244022, 0}, {-13735021960, 2}, {-3693736098, 4}, {2555995152, 6}, {64102104, 8},
                     {897625296, 10}, {258145323, 12}, {108622404, 14}, {23856114, 16}, {2902628, 18}, {218487, 20}}),
                  // sin^4 prefactor; a sin^20 prefactor misses the numeric average by ~1e-2
                  G(-96, 4, 0, Cc, 2,
                    {{{1151747025, 0}, {1300334448, 2}, {481789848, 4}, {224185680, 6}, {44903028, 8}, {16642800, 10},
                      {1292712, 12}, {325712, 14}, {4219, 16}}}),
                  G(-131072.0 * 51 * 26, 18, 0, Cc, 4, {{{145, 0}, {47, 2}}}),
                  G(-131072.0 * 51 * 8, 18, 0, Cc, 8, {{{115, 0}, {53, 2}}}),
                  G(-131072.0 * 51, 18, 0, Cc, 12, {{{65, 0}, {63, 2}}}),
                  G(-262144.0, 18, 0, Cc, 16, {{{-5, 0}, {77, 2}}}),
                  G(262144.0 * 40392, 20, 0, Cc, 6),
                  G(262144.0 * 9384, 20, 0, Cc, 10),
                  G(262144.0 * 834, 20, 0, Cc, 14),
                  G(262144.0 * 18, 20, 0, Cc, 18),
                  G(262144.0, 20, 0, Cc, 20)},
                 0.2451, 0.3345});

    F.push_back({4, 0.5, 131072,
                 {K({{47043, 0}, {776, 2}, {1052, 4}, {184, 6}, {97, 8}}),
                  G(-8, 2, 0, Cc, 2, {{{3, 0}, {1, 2}}, {{-61, 0}, {-68, 2}, {1, 4}}}),
                  G(32, 4, 0, Cc, 4, {{{45, 0}, {4, 2}, {15, 4}}}),
                  G(64, 6, 0, Cc, 6, {{{3, 0}, {1, 2}}}),
                  G(128, 8, 0, Cc, 8),
                  G(16, 2, 0, Ss, 2, {{{202, 1}, {49, 3}, {5, 5}}}),
                  G(512, 4, 1, Ss, 4, {{{3, 0}, {1, 2}}}),
                  G(256, 6, 1, Ss, 6)},
                 0.34323, 0.375});

    F.push_back({6, 0.5, 268435456,
                 {K({{94703502, 0}, {-664344, 2}, {3016975, 4}, {1333540, 6}, {74370, 8}, {91636, 10}, {10465, 12}}),
                  G(8, 2, 0, Cc, 2, {{{53222, 0}, {1607230, 2}, {1942680, 4}, {679195, 6}, {38530, 8}, {4519, 10}}}),
                  G(-8, 4, 0, Cc, 4, {{{233363, 0}, {343624, 2}, {214748, 4}, {23928, 6}, {3537, 8}}}),
                  G(64, 6, 0, Cc, 6, {{{67002, 0}, {42365, 2}, {20406, 4}, {-749, 6}}}),
                  G(256, 8, 0, Cc, 8, {{{6333, 0}, {2436, 2}, {511, 4}}}),
                  G(1024, 10, 0, Cc, 10, {{{69, 0}, {-97, 2}}}),
                  G(17408, 12, 0, Cc, 12),
                  G(-64, 2, 1, Ss, 2, {{{110947, 0}, {39176, 2}, {80284, 4}, {-18760, 6}, {1345, 8}}}),
                  G(12288, 4, 1, Ss, 4, {{{3, 0}, {1, 2}}, {{133, 0}, {196, 2}, {-9, 4}}}),
                  G(-32256, 6, 1, Ss, 6, {{{131, 0}, {124, 2}, {1, 4}}}),
                  G(245760, 8, 1, Ss, 8, {{{3, 0}, {1, 2}}}),
                  G(-53248, 10, 1, Ss, 10)},
                 0.31578, 0.37855});

    // The sin(12 phi) group keeps two cos(theta/48) harmonics exactly as
    // transcribed; they are not replaced by a guess. Residual against the
    // numeric average is ~7e-6.
    F.push_back({8, 0.5, 412316860416.0,
                 {K({{172521535907, 0}, {-1076481488, 2}, {-483908600, 4}, {204246672, 6}, {-519456868, 8},
                     {50430128, 10}, {23220152, 12}, {4554384, 14}, {809729, 16}}),
                  G(1, 2, 1, Cc, 2,
                    {{{-704643072 - 11509170176 * r2, 0},
                      {1409286144 + 23018340352 * r2, 2},
                      {1526726656 - 117440512 * r2, 4}}}),
                  // constant 969223880 restored; without it the average is off by ~5e-3
                  G(1, 2, 0, Cc, 2,
                    {{{969223880, 0},
                      {4298888426, 2},
                      {-(1468006400 + 11450449920 * r2), 3},
                      {2239395284, 4},
                      {-763363328 + 58720256 * r2, 5},
                      {1005475086, 6},
                      {1147266680, 8},
                      {391988842, 10},
                      {14079212, 12},
                      {12190, 14}}}),
                  G(1, 4, 0, Cc, 4,
                    {{{-5383084896, 0}, {-7342837376, 2}, {-1820455728, 4}, {874776000, 6}, {53986912, 8},
                      {-8714048, 10}, {3229744, 12}}}),
                  G(1, 6, 0, Cc, 6,
                    {{{221898944, 0}, {-560204352, 2}, {739468032, 4}, {-197632416, 6}, {-25193408, 8},
                      {-2176032, 10}}}),
                  G(1, 8, 0, Cc, 6,
                    {{{-3043660032, 0}, {-3938801664, 2}, {-1292956672, 4}, {123475968, 6}, {-10173184, 8}}}),
                  G(1, 8, 0, Cc, 8,
                    {{{-223133696, 0}, {959709184, 2}, {165609472, 4}, {18087936, 6}, {10862592, 8}}}),
                  G(1, 10, 0, Cc, 8, {{{-106975232, 0}, {69056512, 2}, {76926976, 4}, {-24328192, 6}}}),
                  G(1, 10, 0, Cc, 10, {{{149875712, 0}, {-156817920, 2}, {26457088, 4}, {-8504832, 6}}}),
                  G(1, 12, 0, Cc, 10, {{{120508416, 0}, {307249152, 2}, {1634304, 4}}}),
                  G(1, 12, 0, Cc, 12, {{{62222336, 0}, {-56508416, 2}, {14471168, 4}}}),
                  G(1, 14, 0, Cc, 14, {{{4104192, 0}, {-1646592, 2}}}),
                  G(-622592, 16, 0, Cc, 14),
                  G(1081344, 16, 0, Cc, 16),
                  G(1, 2, 1, Ss, 2,
                    {{{1328256288, 0}, {4967799168, 2}, {4227791376, 4}, {-118115904, 6}, {-307365408, 8},
                      {-32246592, 10}, {210672, 12}}}),
                  G(1, 4, 1, Ss, 4, {{{-244016640, 0}, {-3233395200, 2}, {448874496, 4}, {-252112896, 6}}}),
                  G(-1050685440, 4, 1, Ss, 4, {{{1, 2}}, {{1, 2}}}),
                  G(149624832, 4, 1, Ss, 4, {{{1, 2}}, {{1, 4}}}),
                  G(-84037632, 4, 1, Ss, 4, {{{1, 2}}, {{1, 6}}}),
                  G(28417536, 4, 1, Ss, 4, {{{1, 8}}}),  // no extra cos(theta) factor
                  G(9472512, 4, 1, Ss, 4, {{{1, 2}}, {{1, 8}}}),
                  G(1, 6, 0, Ss, 6,
                    {{{624576768, 1}, {-567144960, 3}, {29308416, 5}, {81726336, 7}, {7694208, 9}}}),
                  G(1, 8, 1, Ss, 8, {{{381911040, 0}, {432832512, 2}, {10911744, 4}}}),
                  G(101842944, 8, 1, Ss, 8, {{{1, 2}}, {{1, 2}}}),
                  G(3637248, 8, 1, Ss, 8, {{{1, 2}}, {{1, 4}}}),
                  G(1, 10, 0, Ss, 10, {{{-24858624, 1}, {52426752, 3}, {-16558080, 5}}}),
                  G(1, 12, 0, Ss, 12, {{{-229376, 0}, {-1, 1.0 / 48}, {-12959744, 1}, {-802816, 3}}}),
                  G(2523136, 12, 0, Ss, 12, {{{1, 1.0 / 48}}, {{1, 2}}}),
                  G(2457600, 14, 1, Ss, 14)},
                 0.41406, 0.4284});

    // Grouping: the factor 8 multiplies every group after the sin^2 cos(2 phi)
    // block, and the -348175922645 cos(2 theta) piece carries no phi dependence.
    F.push_back({10, 0.5, 281474976710656.0,
                 {K({{115848776942454, 0}, {-4817176106370, 4}, {-740033340336, 6}, {-1927392828968, 8},
                     {31230215, 20}, {-95285484165, 12}, {402136020, 14}, {1682227634, 16}, {74611316, 18},
                     {-69994693616, 10}}),
                  G(8, 0, 0, C0, 0, {{{-348175922645, 2}}}),
                  G(4180631963664, 2, 0, Cc, 2),
                  G(8, 2, 0, Cc, 2,
                    {{{669867579870, 2}, {3 * 12404991056.0, 4}, {-3 * 3803296500.0, 6}, {3 * 37127377656.0, 8},
                      {3 * 17776621148.0, 10}, {-3 * 337165520.0, 12}, {3 * 329527115.0, 14}, {3 * 8228146.0, 16},
                      {14044681, 18}}}),
                  G(8 * -6, 4, 0, Cc, 4,
                    {{{144497518439, 0}, {117479206160, 2}, {46693202344, 4}, {-11922823120, 6}, {8270640364, 8},
                      {4519785872, 10}, {761948952, 12}, {10990896, 14}, {917229, 16}}}),
                  // sin^6 cos(6 phi); a cos^6(6 phi) sin(theta) reading does not match
                  G(8 * 96, 6, 0, Cc, 6,
                    {{{23979894604, 0}, {33384711527, 2}, {11393273102, 4}, {1595029997, 6}, {42380692, 8},
                      {-435801, 10}, {1945106, 12}, {399109, 14}}}),
                  G(8 * 128, 8, 0, Cc, 8,
                    {{{-6577422, 0}, {2579017752, 2}, {138806961, 4}, {506044252, 6}, {41317118, 8}, {-7105396, 10},
                      {1179487, 12}}}),
                  G(8 * 512, 10, 0, Cc, 10,
                    {{{564503774, 0}, {733829718, 2}, {206880888, 4}, {17813079, 6}, {766378, 8}, {180307, 10}}}),
                  G(8 * 768, 12, 0, Cc, 12,
                    {{{112119405, 0}, {148245944, 2}, {45407524, 4}, {3360392, 6}, {393263, 8}}}),
                  G(8 * -6144, 14, 0, Cc, 14, {{{498554, 0}, {373309, 2}, {91894, 4}, {15187, 6}}}),
                  G(8 * 8192, 16, 0, Cc, 16, {{{51255, 0}, {50956, 2}, {30077, 4}}}),
                  G(8 * 32768, 18, 0, Cc, 18, {{{-27, 0}, {95, 2}}}),
                  G(8 * 8421376.0, 20, 0, Cc, 20),
                  G(8 * -4, 2, 0, Ss, 2,
                    {{{89519598618, 1}, {59204770728, 3}, {37915640328, 5}, {3680215764, 7}, {4172266996, 9},
                      {-4272505992, 11}, {990421848, 13}, {-87026217, 15}, {2662599, 17}}}),
                  G(8 * 3072, 4, 1, Ss, 4,
                    {{{3, 0}, {1, 2}},
                     {{36681846, 0}, {55081352, 2}, {5009923, 4}, {7022388, 6}, {831322, 8}, {240452, 10}, {-9683, 12}}}),
                  G(8 * -384, 6, 0, Ss, 6,
                    {{{3759046020, 1}, {2190634743, 3}, {715229299, 5}, {138377062, 7}, {-11543754, 9}, {3113237, 11},
                      {-84127, 13}}}),
                  G(8 * 16384, 8, 1, Ss, 8,
                    {{{3, 0}, {1, 2}}, {{11528151, 0}, {16707368, 2}, {4016556, 4}, {-48744, 6}, {-8771, 8}}}),
                  G(8 * -4096, 10, 1, Ss, 10,
                    {{{76447379, 0}, {90531976, 2}, {22418780, 4}, {1041208, 6}, {57425, 8}}}),
                  G(8 * 786432.0, 12, 1, Ss, 12, {{{3, 0}, {1, 2}}, {{24323, 0}, {16476, 2}, {1121, 4}}}),
                  G(8 * -49152, 14, 1, Ss, 14, {{{112287, 0}, {92204, 2}, {2869, 4}}}),
                  G(8 * 78643200.0, 16, 1, Ss, 16, {{{3, 0}, {1, 2}}}),
                  G(8 * -11665408.0, 18, 1, Ss, 18)},
                 0.37402, 0.4318});

    return F;
}

}  // namespace data
}  // namespace symfloq
