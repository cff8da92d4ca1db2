#pragma once
// Values recorded from the reference run. Bounds are the observed maxima
// rounded up to two significant figures.
#include <array>

inline constexpr double kUpperRatioBound = 0.00023;   // max |E(x)| / (x log^5 x)
inline constexpr double kSelbergRatioBound = 0.058;   // max selberg / (x h log^2 x)
inline constexpr double kLocalL2RatioBound = 0.00088; // max local_l2 / ((x/y) log^4 x)
inline constexpr double kGallagherRatioBound = 5.1;   // max lhs / rhs, seed 1

// midpoint Riemann sum with 10^6 points
inline constexpr double kSelbergRiemann_10_2 = 1.7563275454823601;

struct ErrorGolden {
  double x;
  double e;
};
// E(x) = sum_{n<=x} G(n) - x^2/2 - H(x) over all 10^5 zeros, mpmath
inline constexpr std::array<ErrorGolden, 20> kErrorGoldens{{
    {1000.5, -3497.5153117751681},
    {1438.5, -5889.6601495550106},
    {2069.5, -9647.4990811500073},
    {2976.5, -8197.2263856001997},
    {4281.5, -18878.185816004506},
    {6158.5, -21384.910354463951},
    {8858.5, -33343.347293832003},
    {12742.5, -39985.191265247522},
    {18329.5, -96485.655607948766},
    {26366.5, -92289.675955892734},
    {37926.5, -97229.952789285413},
    {54555.5, -243240.72800317916},
    {78475.5, -275527.98077093769},
    {112883.5, -553412.8575652114},
    {162377.5, -762767.25280539681},
    {233572.5, -900649.58559369567},
    {335981.5, -1573527.4954624067},
    {483293.5, -2284755.2402231459},
    {695192.5, -2386089.4982300083},
    {1000000.5, -3583495.0768571299},
}};
