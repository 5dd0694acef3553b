#pragma once

// Generated by tools/gen_bessel_tables.py; do not edit.
// Chebyshev coefficients in s = 2 (8/x)^2 - 1 of P_nu(x) and Q_nu(x) / (8/x), x >= 8.

#include <array>

namespace cylscat::detail {

inline constexpr std::array<double, 19> kP0Cheb = {
    9.9946034934751866537e-1,
    -5.3652204681321174247e-4,
    3.0751847875194746219e-6,
    -5.170594537606097701e-8,
    1.6306464635151383095e-9,
    -7.8640913772370699969e-11,
    5.1682623873491924016e-12,
    -4.3045788699253894862e-13,
    4.326595743154889919e-14,
    -5.0690340959337301607e-15,
    6.7480722156881839041e-16,
    -1.0011513722051701457e-16,
    1.6305919188853583037e-17,
    -2.8808660237297075333e-18,
    5.4680779288125628995e-19,
    -1.1061870363745757928e-19,
    2.368910482209881157e-20,
    -5.3229416599130380605e-21,
    1.1832213721587206553e-21,
};

inline constexpr std::array<double, 19> kQ0Cheb = {
    -1.55558546053370091e-2,
    6.8385199426116495994e-5,
    -7.4144984110606472645e-7,
    1.7972457247968991784e-8,
    -7.2719159368663199793e-10,
    4.2201219046687384397e-11,
    -3.2067474209966346317e-12,
    3.0061451253517031355e-13,
    -3.3363281853223360735e-14,
    4.2552250402428095434e-15,
    -6.0999301315612084267e-16,
    9.6621289679105065217e-17,
    -1.6686065140171067964e-17,
    3.1082438131879221203e-18,
    -6.1911081299792810665e-19,
    1.3091193163443044012e-19,
    -2.9202858350559068486e-20,
    6.812230860375799331e-21,
    -1.5626417319383695348e-21,
};

inline constexpr std::array<double, 19> kP1Cheb = {
    1.0009030408600136999,
    8.9898983308594085557e-4,
    -3.9872843004889085228e-6,
    6.1776339606442985349e-8,
    -1.8718907491063066087e-9,
    8.8168986595823388962e-11,
    -5.7048636403956446392e-12,
    4.6991955152305405796e-13,
    -4.6842237839904368089e-14,
    5.4526748960431576561e-15,
    -7.2211808422266686187e-16,
    1.06676891128667935e-16,
    -1.7312313169523154798e-17,
    3.0492989683562693072e-18,
    -5.7724166075127464319e-19,
    1.1650398846885968863e-19,
    -2.4898169752611399571e-20,
    5.5844626227631649748e-21,
    -1.2395150048207099262e-21,
};

inline constexpr std::array<double, 19> kQ1Cheb = {
    4.6777787069535325241e-2,
    -9.6277235491570793242e-5,
    9.1386152579554541244e-7,
    -2.0959781384083422461e-8,
    8.2291933276505541288e-10,
    -4.6863636881769452263e-11,
    3.5152187949686079685e-12,
    -3.2643156743278966436e-13,
    3.5967765829164351567e-14,
    -4.5612523950745530858e-15,
    6.5082829577017359749e-16,
    -1.0269147529343543734e-16,
    1.767635541080243233e-17,
    -3.2834517428698941202e-18,
    6.5240731945049649951e-19,
    -1.3765505747467127632e-19,
    3.0648287994194443095e-20,
    -7.1372942383118588466e-21,
    1.6349492150768594607e-21,
};
}  // namespace cylscat::detail
