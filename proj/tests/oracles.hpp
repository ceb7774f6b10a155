#pragma once

// Frozen reference values, computed before the build with a 50-digit
// arbitrary-precision evaluation of the Gamma/Bessel/hypergeometric closed
// forms. Tests compare library output against these literals.

namespace oracle {

// gamma
inline constexpr double kGamma125 = 0.90640247705547707798;
inline constexpr double kSqrtPi = 1.7724538509055160273;

// modified Bessel K
inline constexpr double kBesselK_half_1 = 0.46106850444789455844;  // sqrt(pi/2)/e
inline constexpr double kBesselK_03_2 = 0.11603697434811925852;

// hypergeometric
inline constexpr double kTwoPowM03 = 0.81225239635623552261;   // F(.3,.7,.7;-1)
inline constexpr double kLn2 = 0.69314718055994530942;         // F(1,1,2;-1)

// sharp constants (n-independent ones), s in {0.1, 0.25, 0.5, 0.75, 0.9}
struct ConstantsOracle {
    double s, dbar, kbar, d_spec, ext_factor;
};
inline constexpr ConstantsOracle kConstants[] = {
    {0.10, 0.180720368510000016, 0.138058076622827630, 0.924053138170335264, 0.195573567195317442},
    {0.25, 0.390028303570506085, 0.228473290522231813, 0.815977917519767360, 0.477988797486124995},
    {0.50, 0.636619772367581343, 0.318309886183790672, 0.636619772367581343, 1.000000000000000000},
    {0.75, 0.933975026842599278, 0.547109903806619160, 0.446429599962565343, 2.092099240106203300},
    {0.90, 1.677222955326224250, 1.281284324446142360, 0.328020476355022222, 5.113165415658188670},
};

inline constexpr double kTwoOverPi = 0.63661977236758134308;
inline constexpr double kOneOverPi = 0.31830988618379067154;

// Gamma(s+1/2) for the Fourier-side closed form at s = 0.25/0.5/0.75
inline constexpr double kGammaSPlusHalf_025 = 1.22541670246517765;
inline constexpr double kGammaSPlusHalf_075 = 0.906402477055477078;

// ext_factor ratio example: s = 0.25 -> 2^{0.5} G(0.75)/G(0.25)
inline constexpr double kExtFactor025 = 0.477988797486124995;


// Full-field oracle for the acceptance constants table, 40-digit evaluation
// of the Gamma closed forms rounded to 18 significant digits.
struct FullConstantsOracle {
    double s; int n;
    double c_ns, dbar, kbar, d_spec, k_ns, kappa_ns, gamma_sq_over_pi, ext_factor, kernel_prefactor;
};
inline constexpr FullConstantsOracle kFullConstants[] = {
    {0.1, 1, 0.0903139828714556135, 0.180720368510000016, 0.13805807662282763, 0.924053138170335264, 15.6324360923127807, 5.63243609231278069, 0.705913782740130499, 0.195573567195317442, 5.0},
    {0.1, 2, 0.0325514220299410551, 0.180720368510000016, 0.13805807662282763, 0.924053138170335264, 43.3722239287012055, 15.6272047438606481, 0.705913782740130499, 0.195573567195317442, 13.8725095924202787},
    {0.1, 3, 0.0172487001651707139, 0.180720368510000016, 0.13805807662282763, 0.924053138170335264, 81.8512439755362778, 29.4913664157063905, 0.705913782740130499, 0.195573567195317442, 26.1799387799149437},
    {0.25, 1, 0.199471140200716339, 0.390028303570506085, 0.228473290522231813, 0.81597791751976736, 4.79256093894236883, 0.79256093894236883, 0.477988797486124995, 0.477988797486124995, 2.0},
    {0.25, 2, 0.0832419838754250655, 0.390028303570506085, 0.228473290522231813, 0.81597791751976736, 11.48432017673808, 1.89919829885334231, 0.477988797486124995, 0.477988797486124995, 4.79256093894236883},
    {0.25, 3, 0.0476202269506807273, 0.390028303570506085, 0.228473290522231813, 0.81597791751976736, 20.0750323168836634, 3.31987149773809945, 0.477988797486124995, 0.477988797486124995, 8.37758040957278197},
    {0.5, 1, 0.318309886183790672, 0.636619772367581343, 0.318309886183790672, 0.636619772367581343, 2.0, 0.0, 0.318309886183790672, 1.0, 1.0},
    {0.5, 2, 0.159154943091895336, 0.636619772367581343, 0.318309886183790672, 0.636619772367581343, 4.0, 0.0, 0.318309886183790672, 1.0, 2.0},
    {0.5, 3, 0.101321183642337771, 0.636619772367581343, 0.318309886183790672, 0.636619772367581343, 6.28318530717958648, 0.0, 0.318309886183790672, 1.0, 3.14159265358979324},
    {0.75, 1, 0.299206710301074508, 0.933975026842599278, 0.54710990380661916, 0.446429599962565343, 1.74803836952807987, 0.41470503619474654, 0.261512405013275412, 2.0920992401062033, 0.666666666666666667},
    {0.75, 2, 0.171167129690552343, 0.933975026842599278, 0.54710990380661916, 0.446429599962565343, 3.05563814134238792, 0.724920315304948092, 0.261512405013275412, 2.0920992401062033, 1.16535891301871992},
    {0.75, 3, 0.119050567376701818, 0.933975026842599278, 0.54710990380661916, 0.446429599962565343, 4.39329959992199682, 1.04226743609288403, 0.261512405013275412, 2.0920992401062033, 1.67551608191455639},
    {0.9, 1, 0.164904938818302725, 1.67722295532622425, 1.28128432444614236, 0.328020476355022222, 3.03914907241774111, 1.92803796130663, 0.250585345923374538, 5.11316541565818867, 0.555555555555555556},
    {0.9, 2, 0.10084985986148908, 1.67722295532622425, 1.28128432444614236, 0.328020476355022222, 4.96947335906143453, 3.15263682552766623, 0.250585345923374538, 5.11316541565818867, 0.908418266766884154},
    {0.9, 3, 0.0734872212289584663, 1.67722295532622425, 1.28128432444614236, 0.328020476355022222, 6.81983457076557857, 4.32650706791653632, 0.250585345923374538, 5.11316541565818867, 1.24666375142452113},
};

} // namespace oracle
