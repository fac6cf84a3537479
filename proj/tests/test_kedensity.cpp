#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gausspack/errors.hpp"
#include "gausspack/kedensity.hpp"
#include "gausspack/oracle.hpp"
#include "reference_forms.hpp"

namespace gp = gausspack;
namespace orc = gausspack::oracle;
using std::numbers::pi;

namespace {

const double kLimit = 0.5 + 1 / std::sqrt(2 * pi);

void expect_split_invariants(const gp::EnergySplit& e) {
  EXPECT_GE(e.plus, 0.0);
  EXPECT_GE(e.minus, 0.0);
  EXPECT_NEAR(e.plus + e.minus, e.total, 1e-12 * e.total);
  EXPECT_EQ(e.r_plus + e.r_minus, 1.0);
  EXPECT_NEAR(e.r_plus, e.plus / e.total, 1e-12);
}

struct Draw {
  gp::SystemSpec system;
  gp::PacketParams params;
  double t;
};

std::vector<Draw> random_draws(unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Draw> out;
  for (int i = 0; i < n; ++i) {
    const double h = 0.6 + 0.8 * u(rng), m = 0.6 + 0.8 * u(rng);
    const double p0 = 3 * u(rng) - 1.5;
    switch (i % 4) {
      case 0:
        out.push_back({gp::free_particle(),
                       gp::make_params(h, m, 0.5 + u(rng), 2 * u(rng) - 1, p0),
                       6 * u(rng) - 1});
        break;
      case 1:
        out.push_back({gp::uniform_acceleration(4 * u(rng) - 2),
                       gp::make_params(h, m, 0.5 + u(rng), 2 * u(rng) - 1, p0),
                       4 * u(rng) - 1});
        break;
      case 2:
        out.push_back({gp::harmonic_oscillator(0.5 + 1.5 * u(rng)),
                       gp::params_from_beta(h, m, 0.4 + 1.6 * u(rng), 0, p0),
                       10 * u(rng)});
        break;
      default:
        out.push_back({gp::inverted_oscillator(0.5 + u(rng)),
                       gp::params_from_beta(h, m, 0.4 + 1.6 * u(rng), 0, p0),
                       3 * u(rng)});
    }
  }
  return out;
}

}  // namespace

TEST(KineticDensity, NodeAtCenterWhenAtRest) {
  EXPECT_EQ(gp::kinetic_density(gp::free_particle(), gp::make_params(1, 1, 1, 0.3, 0), 0.3, 0),
            0.0);
}

TEST(KineticDensity, NonNegative) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100000; ++i) {
    const auto p = gp::make_params(1 + 0.5 * u(rng), 1 + 0.5 * u(rng),
                                   1 + 0.5 * u(rng), u(rng), 3 * u(rng));
    EXPECT_GE(gp::kinetic_density(gp::free_particle(), p, 8 * u(rng), 5 * u(rng)), 0.0);
  }
}

TEST(KineticDensity, MatchesPrintedFreeForm) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const double h = 1 + 0.5 * u(rng), m = 1 + 0.5 * u(rng), a = 1 + 0.5 * u(rng);
    const double x0 = u(rng), p0 = 2 * u(rng), t = 4 * u(rng);
    const auto p = gp::make_params(h, m, a, x0, p0);
    const double xt = x0 + p0 * t / m, th = t / p.t0();
    const double x = xt + 3 * u(rng);
    const double P = gp::probability_density(gp::free_particle(), p, x, t);
    const double want =
        (1 / (2 * m)) *
        (p0 * p0 + (2 * (x - xt) * p0 / (a * a * h)) * (th / (1 + th * th)) +
         (x - xt) * (x - xt) / (std::pow(a * a * h, 2) * (1 + th * th))) *
        P;
    EXPECT_NEAR(gp::kinetic_density(gp::free_particle(), p, x, t), want,
                1e-12 * (1 + want));
  }
}

TEST(KineticDensity, MatchesFiniteDifferences) {
  for (const auto& d : random_draws(9, 40)) {
    const auto s = gp::state_at(d.system, d.params, d.t);
    const auto psi = [&](double x, double t) { return gp::eval_psi(d.system, d.params, x, t); };
    const double h = 1e-3 * orc::local_length_scale(s, {});
    const double c = d.params.hbar() * d.params.hbar() / (2 * d.params.mass());
    for (double z : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
      const double x = s.center + z * s.spread();
      const double fd = c * std::norm(orc::fd_derivative(psi, x, d.t, h));
      const double cf = gp::kinetic_density(d.system, d.params, x, d.t);
      EXPECT_NEAR(cf, fd, 1e-8 * gp::total_kinetic(d.system, d.params, d.t) / s.spread());
    }
  }
}

TEST(KineticDensity, IntegratesToQuarterAtRest) {
  const auto r = orc::kinetic_density_integral(gp::free_particle(), gp::PacketParams{}, 0);
  EXPECT_NEAR(r.value, 0.25, 1e-10);
}

TEST(TotalKinetic, FreeIsConstant) {
  const auto p = gp::make_params(1.2, 0.7, 0.9, 0.1, 1.4);
  const double want = (1.4 * 1.4 + 1 / (2 * 0.81)) / (2 * 0.7);
  for (double t : {0.0, 1.0, 33.0, -5.0})
    EXPECT_NEAR(gp::total_kinetic(gp::free_particle(), p, t), want, 1e-14 * want);
}

TEST(TotalKinetic, AccelGrowsQuadratically) {
  for (double t : {0.0, 0.5, 2.0, 7.0}) {
    const double want = (t * t + 0.5) / 2;
    EXPECT_NEAR(gp::total_kinetic(gp::uniform_acceleration(1), gp::PacketParams{}, t),
                want, 1e-14 * want);
    EXPECT_NEAR(orc::kinetic_density_integral(gp::uniform_acceleration(1),
                                              gp::PacketParams{}, t)
                    .value,
                want, 1e-9 * want);
  }
}

TEST(TotalKinetic, CoherentStateConstant) {
  for (double omega : {0.5, 1.0, 3.0}) {
    const auto d = gp::oscillator_derived({1, 1}, omega);
    const auto p = gp::params_from_beta(1, 1, d.beta0, 0, 0);
    for (double t : {0.0, 0.3, 1.1, 2.7})
      EXPECT_NEAR(gp::total_kinetic(gp::harmonic_oscillator(omega), p, t), omega / 4,
                  1e-14);
  }
}

TEST(TotalKinetic, OscillatorMatchesPrintedForm) {
  const auto p = gp::params_from_beta(1.1, 0.9, 0.6, 0, 0.9);
  for (double t = 0; t < 6; t += 0.25)
    EXPECT_NEAR(gp::total_kinetic(gp::harmonic_oscillator(1.3), p, t),
                reference::sho_total_kinetic(reference::from(p), 1.3, t), 1e-13);
}

TEST(TotalKinetic, EqualsDensityIntegral) {
  for (const auto& d : random_draws(21, 24)) {
    const double cf = gp::total_kinetic(d.system, d.params, d.t);
    const double q = orc::kinetic_density_integral(d.system, d.params, d.t).value;
    EXPECT_NEAR(q, cf, 1e-9 * cf) << gp::system_name(d.system);
  }
}

TEST(HalfEnergies, SymmetricAtRest) {
  for (double t : {0.0, 0.5, 4.0}) {
    const auto e = gp::half_energies(gp::free_particle(), gp::make_params(1, 1, 1.3, 0.2, 0), t);
    EXPECT_EQ(e.plus, e.minus);
    EXPECT_EQ(e.plus, e.total / 2);
  }
}

TEST(HalfEnergies, LongTimeFreeFraction) {
  const auto p = gp::make_params(1, 1, 1, 0, 1 / std::sqrt(2.0));
  const auto e = gp::half_energies(gp::free_particle(), p, 100.0);
  const double want = 0.5 + (2 / std::sqrt(pi)) * (std::sqrt(2.0) / 4) * (100 / std::sqrt(10001.0));
  EXPECT_NEAR(e.r_plus, want, 1e-12);
  EXPECT_NEAR(e.r_plus, 0.8989223, 5e-8);
  const auto q = orc::half_energies_quadrature(gp::free_particle(), p, 100.0);
  EXPECT_NEAR(q.r_plus, e.r_plus, 1e-8 * e.r_plus);
}

TEST(HalfEnergies, FreeFractionAtSpreadingTime) {
  const auto p = gp::make_params(1, 1, 1, 0, 1 / std::sqrt(2.0));
  const auto e = gp::half_energies(gp::free_particle(), p, 1.0);
  EXPECT_NEAR(e.r_plus, 0.5 + 1 / (2 * std::sqrt(pi)), 1e-12);
  EXPECT_NEAR(e.r_plus, 0.782095, 5e-7);
  const auto q = orc::half_energies_quadrature(gp::free_particle(), p, 1.0);
  EXPECT_NEAR(q.plus, e.plus, 1e-8 * e.plus);
  EXPECT_NEAR(q.minus, e.minus, 1e-8 * e.minus);
}

TEST(HalfEnergies, MatchesPrintedFreeForm) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 300; ++i) {
    const auto p = gp::make_params(1 + 0.5 * u(rng), 1 + 0.5 * u(rng),
                                   1 + 0.5 * u(rng), u(rng), 3 * u(rng));
    const double t = 20 * u(rng);
    const auto ref = reference::from(p);
    const auto e = gp::half_energies(gp::free_particle(), p, t);
    const double tp = reference::free_t_half(ref, p.p0(), t, +1);
    const double tm = reference::free_t_half(ref, p.p0(), t, -1);
    EXPECT_NEAR(e.plus, tp, 1e-12 * e.total);
    EXPECT_NEAR(e.minus, tm, 1e-12 * e.total);
    EXPECT_NEAR(e.r_plus, reference::free_r_plus(ref, t), 1e-12);
  }
}

TEST(HalfEnergies, OscillatorMatchesPrintedForm) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 300; ++i) {
    const double omega = 1 + 0.6 * u(rng);
    const auto p = gp::params_from_beta(1 + 0.4 * u(rng), 1 + 0.4 * u(rng),
                                        1 + 0.6 * u(rng), 0, 2 * u(rng));
    const double t = 10 * u(rng);
    const auto ref = reference::from(p);
    const auto e = gp::half_energies(gp::harmonic_oscillator(omega), p, t);
    EXPECT_NEAR(e.plus, reference::sho_t_half(ref, omega, t, +1), 1e-12 * e.total);
    EXPECT_NEAR(e.minus, reference::sho_t_half(ref, omega, t, -1), 1e-12 * e.total);
  }
}

TEST(HalfEnergies, CoherentStateHasNoAsymmetry) {
  const auto p = gp::params_from_beta(1, 1, 1, 0, 1.7);
  for (double t = 0; t < 13; t += 0.173) {
    const auto e = gp::half_energies(gp::harmonic_oscillator(1), p, t);
    EXPECT_NEAR(e.plus - e.minus, 0.0, 1e-12 * e.total);
  }
}

TEST(HalfEnergies, OscillatorTurningPointsSymmetric) {
  for (double beta : {0.3, 0.5, 2.0, 3.1}) {
    const auto p = gp::params_from_beta(1, 1, beta, 0, 1.1);
    const auto e = gp::half_energies(gp::harmonic_oscillator(1), p, pi / 2);
    EXPECT_NEAR(e.plus - e.minus, 0.0, 1e-12 * e.total);
  }
}

TEST(HalfEnergies, OscillatorZerosOverAPeriod) {
  for (double beta : {0.5, 2.0}) {
    const auto p0 = gp::params_from_beta(1, 1, beta, 0, 0);
    const auto p = p0.with_p0(gp::extremal_p0(gp::harmonic_oscillator(1), p0));
    for (int k = 0; k <= 4; ++k) {
      const auto e = gp::half_energies(gp::harmonic_oscillator(1), p, k * pi / 2);
      EXPECT_NEAR(e.plus - e.minus, 0.0, 1e-12 * e.total) << beta << " " << k;
    }
  }
}

TEST(HalfEnergies, OscillatorSignFlip) {
  for (double t = 0.05; t < pi / 2; t += 0.05) {
    const auto narrow = gp::half_energies(gp::harmonic_oscillator(1),
                                          gp::params_from_beta(1, 1, 0.5, 0, 1), t);
    const auto wide = gp::half_energies(gp::harmonic_oscillator(1),
                                        gp::params_from_beta(1, 1, 2.0, 0, 1), t);
    EXPECT_GT(narrow.plus, narrow.minus) << t;
    EXPECT_LT(wide.plus, wide.minus) << t;
  }
}

TEST(HalfEnergies, Invariants) {
  for (const auto& d : random_draws(31, 400)) {
    SCOPED_TRACE(gp::system_name(d.system));
    expect_split_invariants(gp::half_energies(d.system, d.params, d.t));
  }
}

TEST(HalfEnergies, FreeFractionMonotone) {
  for (double p0 : {0.1, 0.7, 2.0, 5.0}) {
    const auto p = gp::make_params(1, 1, 1, 0, p0);
    double prev = 0.0;
    for (double t = 0; t < 200; t += 0.1) {
      const double r = gp::half_energies(gp::free_particle(), p, t).r_plus;
      EXPECT_GE(r, prev);
      prev = r;
    }
  }
}

TEST(HalfEnergies, AccelerationShiftsMomentum) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 300; ++i) {
    const auto p = gp::make_params(1 + 0.5 * u(rng), 1 + 0.5 * u(rng),
                                   1 + 0.5 * u(rng), u(rng), 2 * u(rng));
    const double F = 2 * u(rng), t = 5 * u(rng);
    const auto ref = reference::from(p);
    const double pt = p.p0() + F * t;
    const auto e = gp::half_energies(gp::uniform_acceleration(F), p, t);
    EXPECT_NEAR(e.plus, reference::free_t_half(ref, pt, t, +1), 1e-12 * e.total);
    EXPECT_NEAR(e.minus, reference::free_t_half(ref, pt, t, -1), 1e-12 * e.total);
  }
}

TEST(HalfEnergies, AgreeWithQuadratureSweep) {
  for (const auto& d : random_draws(41, 32)) {
    SCOPED_TRACE(gp::system_name(d.system));
    const auto e = gp::half_energies(d.system, d.params, d.t);
    const auto q = orc::half_energies_quadrature(d.system, d.params, d.t);
    EXPECT_NEAR(q.plus, e.plus, 1e-8 * e.plus);
    EXPECT_NEAR(q.minus, e.minus, 1e-8 * e.minus);
  }
}

TEST(HalfEnergies, StateOverloadMatches) {
  for (const auto& d : random_draws(51, 8)) {
    const auto s = gp::state_at(d.system, d.params, d.t);
    const auto a = gp::half_energies(d.system, d.params, d.t);
    const auto b = gp::half_energies(s, d.params.constants());
    EXPECT_EQ(a.plus, b.plus);
    EXPECT_EQ(a.minus, b.minus);
    EXPECT_EQ(a.t, d.t);
  }
}

TEST(FractionSeries, MatchesPointwise) {
  const auto p = gp::make_params(1, 1, 1, 0, 0.7);
  const std::vector<double> ts{0, 0.5, 1, 10, 100};
  const auto rows = gp::fraction_series(gp::free_particle(), p, ts);
  ASSERT_EQ(rows.size(), ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_EQ(rows[i].t, ts[i]);
    EXPECT_EQ(rows[i].r_plus, gp::half_energies(gp::free_particle(), p, ts[i]).r_plus);
  }
}

TEST(FractionLimits, FreeExtremal) {
  const auto p = gp::make_params(1, 1, 1, 0, 1 / std::sqrt(2.0));
  const auto [rp, rm] = gp::fraction_limits(gp::free_particle(), p);
  EXPECT_NEAR(rp, kLimit, 1e-12);
  EXPECT_NEAR(rm, 1 - kLimit, 1e-12);
  EXPECT_NEAR(rp, 0.898942, 5e-7);
  EXPECT_NEAR(rm, 0.101058, 5e-7);
}

TEST(FractionLimits, FreeAtRest) {
  const auto [rp, rm] = gp::fraction_limits(gp::free_particle(), gp::PacketParams{});
  EXPECT_EQ(rp, 0.5);
  EXPECT_EQ(rm, 0.5);
}

TEST(FractionLimits, FreeIsLongTimeFraction) {
  for (double p0 : {-2.0, 0.3, 1.0, 4.0}) {
    const auto p = gp::make_params(1.2, 0.8, 0.9, 0, p0);
    const auto lim = gp::fraction_limits(gp::free_particle(), p);
    EXPECT_NEAR(gp::half_energies(gp::free_particle(), p, 1e7 * p.t0()).r_plus, lim.first,
                1e-12);
  }
}

TEST(FractionLimits, InvertedExtremal) {
  const auto p = gp::params_from_beta(1, 1, 1, 0, 1);
  EXPECT_DOUBLE_EQ(gp::extremal_p0(gp::inverted_oscillator(1), p), 1.0);
  const auto [rp, rm] = gp::fraction_limits(gp::inverted_oscillator(1), p);
  EXPECT_NEAR(rp, kLimit, 1e-12);
  EXPECT_NEAR(rp + rm, 1.0, 0.0);
  EXPECT_NEAR(gp::half_energies(gp::inverted_oscillator(1), p, 20).r_plus, rp, 1e-6);
}

TEST(FractionLimits, InvertedMatchesPrintedForm) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100; ++i) {
    const double w = 1 + 0.5 * u(rng);
    const auto p = gp::params_from_beta(1 + 0.3 * u(rng), 1 + 0.3 * u(rng),
                                        1 + 0.5 * u(rng), 0, 2 * u(rng));
    EXPECT_NEAR(gp::fraction_limits(gp::inverted_oscillator(w), p).first,
                reference::inverted_r_plus_limit(reference::from(p), w), 1e-12);
    EXPECT_NEAR(gp::half_energies(gp::inverted_oscillator(w), p, 30 / w).r_plus,
                gp::fraction_limits(gp::inverted_oscillator(w), p).first, 1e-9);
  }
}

TEST(FractionLimits, OscillatorEighthPeriod) {
  const auto p0 = gp::params_from_beta(1, 1, 0.5, 0, 0);
  const auto p = p0.with_p0(gp::extremal_p0(gp::harmonic_oscillator(1), p0));
  const double want = 0.5 + (15.0 / 17.0) / std::sqrt(2 * pi);
  const auto [rp, rm] = gp::fraction_limits(gp::harmonic_oscillator(1), p);
  EXPECT_NEAR(rp, want, 1e-12);
  EXPECT_NEAR(gp::half_energies(gp::harmonic_oscillator(1), p, pi / 4).r_plus, want, 1e-12);
  EXPECT_EQ(rp + rm, 1.0);
}

TEST(FractionLimits, AccelerationUnsupported) {
  EXPECT_THROW(gp::fraction_limits(gp::uniform_acceleration(1), gp::PacketParams{}),
               gp::UnsupportedError);
  EXPECT_THROW(gp::extremal_p0(gp::uniform_acceleration(1), gp::PacketParams{}),
               gp::UnsupportedError);
}

TEST(ExtremalP0, Examples) {
  EXPECT_DOUBLE_EQ(gp::extremal_p0(gp::free_particle(), gp::PacketParams{}),
                   1 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(gp::extremal_p0(gp::free_particle(), gp::make_params(1, 1, 2, 0, 0)),
                   1 / (2 * std::sqrt(2.0)));
  EXPECT_DOUBLE_EQ(
      gp::extremal_p0(gp::harmonic_oscillator(1), gp::params_from_beta(1, 1, 1, 0, 0)), 1.0);
}

TEST(ExtremalP0, MaximizesAsymmetry) {
  const auto base = gp::params_from_beta(1.1, 0.9, 0.6, 0, 0);
  const auto sho = gp::harmonic_oscillator(1.3);
  const double best = gp::extremal_p0(sho, base);
  EXPECT_NEAR(best, reference::sho_extremal_p0(reference::from(base), 1.3), 1e-14);
  const double r_best = gp::fraction_limits(sho, base.with_p0(best)).first;
  for (double f : {0.8, 0.95, 1.05, 1.25})
    EXPECT_LT(gp::fraction_limits(sho, base.with_p0(f * best)).first, r_best);
  const auto free = gp::make_params(1, 1, 1.7, 0, 0);
  const double bf = gp::extremal_p0(gp::free_particle(), free);
  const double rf = gp::fraction_limits(gp::free_particle(), free.with_p0(bf)).first;
  EXPECT_NEAR(rf, kLimit, 1e-12);
  for (double f : {0.9, 1.1})
    EXPECT_LT(gp::fraction_limits(gp::free_particle(), free.with_p0(f * bf)).first, rf);
}

TEST(AccelerationPeaks, EventTimes) {
  const auto p = gp::make_params(1, 1, 1, 0, -1);
  const auto ts = gp::acceleration_peak_times(gp::uniform_acceleration(1), p);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_NEAR(ts[0], 1 - 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ts[1], 1 + 1 / std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(gp::acceleration_peak_times(gp::uniform_acceleration(1),
                                          gp::make_params(1, 1, 1, 0, 2))
                  .empty());
  EXPECT_EQ(gp::acceleration_peak_times(gp::uniform_acceleration(1),
                                        gp::make_params(1, 1, 1, 0, 0))
                .size(),
            1u);
  EXPECT_THROW(gp::acceleration_peak_times(gp::free_particle(), p), gp::UnsupportedError);
}

// With t0 small against the time of flight the asymmetry peaks sit on the
// event times |p0 + F t| = Delta p0.
TEST(AccelerationPeaks, LocateMaximaWhenSpreadingIsFast) {
  const auto p = gp::make_params(1, 1, 0.1, 0, -20);
  const auto sys = gp::uniform_acceleration(1);
  const auto events = gp::acceleration_peak_times(sys, p);
  ASSERT_EQ(events.size(), 2u);
  std::vector<double> ts, asym;
  for (double t = 0; t <= 40; t += 1e-3) {
    ts.push_back(t);
    asym.push_back(std::abs(gp::half_energies(sys, p, t).r_plus - 0.5));
  }
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < ts.size(); ++i)
    if (asym[i] > asym[i - 1] && asym[i] >= asym[i + 1]) peaks.push_back(ts[i]);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_NEAR(peaks[0], events[0], 0.05);
  EXPECT_NEAR(peaks[1], events[1], 0.05);
}

TEST(AccelerationFractions, TendToHalf) {
  const auto p = gp::make_params(1, 1, 1, 0, -1);
  const double r = gp::half_energies(gp::uniform_acceleration(1), p, 1e5).r_plus;
  EXPECT_NEAR(r, 0.5, 1e-4);
  EXPECT_GT(r, 0.5);
}

TEST(ScaledDensity, IntegratesToOne) {
  for (const auto& d : random_draws(61, 20)) {
    const auto s = gp::state_at(d.system, d.params, d.t);
    const auto w = orc::quadrature_window(s, {});
    const auto r = orc::integrate(
        [&](double x) { return gp::scaled_density(d.system, d.params, x, d.t); }, w.xmin,
        w.xmax);
    EXPECT_NEAR(r.value, 1.0, 1e-9) << gp::system_name(d.system);
  }
}

TEST(ScaledDensity, NodeAndParity) {
  const auto p = gp::make_params(1, 1, 1, 0.5, 0);
  EXPECT_EQ(gp::scaled_density(gp::free_particle(), p, 0.5, 0), 0.0);
  for (double t : {0.0, 2.0})
    for (double d : {0.3, 1.1, 2.5})
      EXPECT_NEAR(gp::scaled_density(gp::free_particle(), p, 0.5 + d, t),
                  gp::scaled_density(gp::free_particle(), p, 0.5 - d, t), 1e-15);
  EXPECT_GE(gp::scaled_density(gp::free_particle(), p, 3.0, 1.0), 0.0);
}
