#pragma once

// Shared device fixtures and pinned reference values. The numbers were
// produced by independent high-precision prototypes of every formula
// (quadrature, root-finding and dense solves in extended precision) and are
// pinned here so any algebraic regression in the library shows up as a
// numeric mismatch, not just a smell.

#include "mmc/domain.hpp"

namespace fx {

// geometry optimum and transduction
inline constexpr double kWcStar = 2.1794966557150746; // w_c/w at z_c = w
inline constexpr double kChiStar = 0.12137005505732246;
inline constexpr double kChi22 = 0.12136409810856463; // chi(2.2, 1)
inline constexpr double kBMax = 237960.7945491793;    // [T/m]
inline constexpr double kF005 = 0.8498599805327831;   // f(t/w = 0.05)
inline constexpr double kM = 1.5785e-13;              // [kg]
inline constexpr double kZzp = 7.291398849905534e-15; // [m]
inline constexpr double kEta = 1.0183854239830137e-05;
inline constexpr double kGHom = 1.3619109400443314; // hom optimum at v = 1
inline constexpr double kHomRatio = 0.01882525090988884;

// circuit
inline constexpr double kFluxBias = 0.2646944933257632; // phi = 2 exactly
inline constexpr double kPhi025 = 1.8680021680446304;   // phi at f = 1/4
inline constexpr double kG0OverKappa = 20.36770847966028;
inline constexpr double kG02pi = 128316.563;     // [Hz]
inline constexpr double kGamma2pi = 6546.016956; // [Hz], cyclic convention
inline constexpr double kGamma2piAngular = 1041.7; // [Hz]
inline constexpr double kCoop = 399.2526;

// two-wire source at the pinned gradient b = 4.1e4 T/m, I_w = 1 A
inline constexpr double kZw = 2.498780190217697e-06; // [m]
inline constexpr double kBb = 0.12806248474865697;   // [T]
inline constexpr double kZetaPinned = 0.583220054892687;
inline constexpr double kZetaFieldPinned = 0.9345458242166379;
inline constexpr double kZetaSpecExample = 0.301488580886794;
inline constexpr double kAIadd = 6392.533;
inline constexpr double kABadd = 14249.438;
inline constexpr double kAIscr = 8287.233;
inline constexpr double kABscr = 12746.131;
inline constexpr double kG0OverKappaTwoWire = 3.50930097;
inline constexpr double kCoopTwoWire = 11.85236;
inline constexpr double kOmegaM2piTwoWire = 129843.9456; // [Hz]

// heating
inline constexpr double kR02 = 3100.6277;    // [rad/s]
inline constexpr double kR022pi = 493.48022; // [Hz]

inline mmc::StripSpec strip() {
  return {1.0e-4, 1.0e-6, 5.0e-8, 0.14, 8570.0, 3.9e-8, 3.8e-8};
}

inline mmc::CantileverSpec cantilever() {
  // Omega and gamma are angular [rad/s]; T in kelvin.
  return {5.0e-7, 2300.0, 2.0 * 3.14159265358979323846 * 1.0e6,
          2.0 * 3.14159265358979323846 * 1.0, 0.05};
}

inline mmc::CoilSpec coil() { return {kWcStar * 1.0e-6, 1.0e-6, 1.0e-4}; }

} // namespace fx
