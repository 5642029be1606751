#pragma once

#include <cmath>
#include <complex>

namespace iongate {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Range-reduce a phase into (-2pi, 2pi) before cos/sin. Exact fmod keeps the
// reduction error below 1e-12 for the phase magnitudes used here (< 2000 rad).
inline double reduce_two_pi(double phase) { return std::fmod(phase, two_pi); }

// Integer powers of the imaginary unit, i^k for any (possibly negative) k.
inline std::complex<double> imag_unit_pow(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace iongate
