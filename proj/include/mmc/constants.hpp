#pragma once

namespace mmc {

// SI constants. h, e, k_B are the exact defined values; derived constants are
// computed from them so closed-form identities in the formulas hold to
// machine precision. mu0 uses the exact pre-redefinition value 4*pi*1e-7,
// which is what the closed-form field expressions assume when they cancel
// factors of pi.
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double mu0 = 4.0e-7 * pi;            // [T*m/A]
inline constexpr double planck_h = 6.62607015e-34;    // [J*s]
inline constexpr double hbar = planck_h / (2.0 * pi); // [J*s]
inline constexpr double k_B = 1.380649e-23;           // [J/K]
inline constexpr double e_charge = 1.602176634e-19;   // [C]
inline constexpr double Phi0 = planck_h / (2.0 * e_charge); // flux quantum [Wb]

} // namespace mmc
