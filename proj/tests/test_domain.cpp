#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "mmc/domain.hpp"

using namespace mmc;

TEST_CASE("spec validation rejects inverted or non-physical dimensions") {
  StripSpec s = fx::strip();
  CHECK_NOTHROW(s.check());

  StripSpec bad = s;
  bad.w = bad.L * 2.0; // wider than long
  CHECK_THROWS_AS(bad.check(), std::domain_error);

  bad = s;
  bad.t = -1e-9;
  CHECK_THROWS_AS(bad.check(), std::domain_error);

  bad = s;
  bad.B_c = 0.0;
  CHECK_THROWS_AS(bad.check(), std::domain_error);

  CantileverSpec c = fx::cantilever();
  CHECK_NOTHROW(c.check());
  c.Omega = 0.0;
  CHECK_THROWS_AS(c.check(), std::domain_error);

  CoilSpec coil = fx::coil();
  CHECK_NOTHROW(coil.check());
  coil.z_c = -1e-6;
  CHECK_THROWS_AS(coil.check(), std::domain_error);
}

TEST_CASE("Pearl length lambda^2/t") {
  const StripSpec s = fx::strip();
  CHECK(s.pearl_length() ==
        doctest::Approx(3.9e-8 * 3.9e-8 / 5.0e-8).epsilon(1e-13));
  CHECK(s.pearl_length() / s.w == doctest::Approx(0.030420).epsilon(1e-10));
}

TEST_CASE("effective mass and zero-point motion") {
  const StripSpec s = fx::strip();
  const CantileverSpec c = fx::cantilever();
  const double M = effective_mass(s, c);
  // L w (rho t + rho0 t0), all factors exact decimals
  CHECK(M == doctest::Approx(fx::kM).epsilon(1e-12));
  const double zzp = zero_point_motion(M, c.Omega);
  CHECK(zzp == doctest::Approx(fx::kZzp).epsilon(1e-12));
  CHECK_THROWS_AS(zero_point_motion(0.0, c.Omega), std::domain_error);
  CHECK_THROWS_AS(zero_point_motion(M, -1.0), std::domain_error);
}

TEST_CASE("model validity checks pass for the design-point strip") {
  const ValidationReport r = validate_strip(fx::strip());
  CHECK(r.checks.size() == 4);
  CHECK(r.all_pass());
  for (const auto& c : r.checks) CHECK(c.pass);
}

TEST_CASE("model validity checks fail where the thin-strip picture breaks") {
  StripSpec s = fx::strip();
  s.t = 0.5e-6; // t/w = 0.5: not thin
  const ValidationReport r = validate_strip(s);
  CHECK_FALSE(r.all_pass());

  StripSpec s2 = fx::strip();
  s2.xi = 8e-8; // xi > t: core no longer fits the film
  CHECK_FALSE(validate_strip(s2).all_pass());

  StripSpec s3 = fx::strip();
  s3.L = 5e-6; // L/w = 5: not long
  CHECK_FALSE(validate_strip(s3).all_pass());

  // screening check: lambda comparable to t AND Pearl length comparable to w
  StripSpec s4 = fx::strip();
  s4.lambda_L = 3.0e-7;
  s4.xi = 1e-8;
  CHECK_FALSE(validate_strip(s4).all_pass());
}
