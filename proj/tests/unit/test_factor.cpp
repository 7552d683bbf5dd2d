#include <doctest.h>

#include "oracles.hpp"

#include <gffmod/error.hpp>
#include <gffmod/factor.hpp>
#include <gffmod/parser.hpp>

#include <cmath>
#include <random>

using namespace gffmod;

namespace {

ShellForm form_of(const char* M, int d, Rational m2) { return to_shell_form(parse_polynomial(M, d), m2); }

std::vector<double> log_samples(int count) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(std::exp(-4.0 + 8.0 * k / (count - 1)));
    return out;
}

}  // namespace

TEST_CASE("constant weight gives F = 1") {
    const ShellForm f = form_of("1", 4, 1);
    const RationalVector phat{Rational(1, 2), -1};
    const FactorPair pair = make_factor_pair(f, phat);
    for (double p : {0.1, 1.0, 7.0}) CHECK(pair.at(Complex(p, 0)) == Complex(1, 0));
    CHECK(pair.at(Complex(0, 3)) == Complex(1, 0));
    const auto samples = log_samples(16);
    CHECK(check_symmetry(pair.at, pair.mirror, samples).max_deviation == 0.0);
}

TEST_CASE("energy squared against the closed form") {
    const ShellForm f = form_of("p0^2", 4, 1);
    const RationalVector origin{0, 0};
    const FactorPair pair = make_factor_pair(f, origin);
    CHECK(pair.at.n() == 1);
    CHECK(pair.at.scalar() == doctest::Approx(0.5));
    CHECK(pair.at.phase() == Complex(1, 0));

    CHECK(std::abs(pair.at(1.0) - Complex(1, 0)) <= 1e-10);
    CHECK(std::abs(pair.at(2.0) - Complex(1, -0.75)) <= 1e-10);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2, 2), logp(-3, 3);
    for (int k = 0; k < 30; ++k) {
        const RationalVector phat{Rational(static_cast<long>(std::round(u(rng) * 8)), 8),
                                  Rational(static_cast<long>(std::round(u(rng) * 8)), 8)};
        const FactorPair fp = make_factor_pair(f, phat);
        const double phat2 = Rational(phat[0] * phat[0] + phat[1] * phat[1]).get_d();
        for (Complex p : {Complex(std::exp(logp(rng)), 0), Complex(-0.7, 0), Complex(0.3, 1.2)}) {
            const Complex want = oracle::energy_squared_factor(p, phat2, 1.0);
            CHECK(std::abs(fp.at(p) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("F has no zeros in the upper half plane") {
    const char* models[] = {"p0^2", "(p0 - 2*p2)^2", "p2^2", "(p1 + p2)^2", "p0^4 + p2^2"};
    for (const char* M : models) {
        const ShellForm f = form_of(M, 3, 1);
        for (Rational x : {Rational(0), Rational(1), Rational(-3, 2), Rational(1, 3)}) {
            const RationalVector phat{x};
            if (root_profile(f, phat).degenerate) continue;
            const FactorPair pair = make_factor_pair(f, phat);
            for (const auto& r : pair.at.roots()) CHECK(r.imag() <= 1e-7 * std::max(1.0, std::abs(r)));
        }
    }
}

TEST_CASE("real roots are split evenly") {
    // a = (0, 1, 1), d = 3, m = 0, p2 = 1: Q = (-1/2 pplus^2 - pplus + 1/2)^2,
    // double roots at -1 +- sqrt 2.
    const ShellForm f = form_of("(p1 + p2)^2", 3, 0);
    const RationalVector phat{1};
    const FactorPair pair = make_factor_pair(f, phat);
    REQUIRE(pair.at.roots().size() == 2);
    CHECK(pair.at.scalar() == doctest::Approx(0.5));
    const double s2 = std::sqrt(2.0);
    for (double p : {0.25, 1.0, 3.0}) {
        const Complex want = 0.5 * (p + 1 - s2) * (p + 1 + s2) / Complex(0, p);
        CHECK(std::abs(pair.at(p) - want) <= 1e-12 * std::abs(want) + 1e-15);
    }
    const auto samples = log_samples(64);
    CHECK(check_symmetry(pair.at, pair.mirror, samples).pass);
    CHECK(reconstruction_error(f, pair.at, pair.mirror, samples) <= 1e-9);
    CHECK(pair.at.real_root_proximity(s2 - 1) < 1e-12);
    CHECK(pair.at.real_root_proximity(5.0) > 0.5);
}

TEST_CASE("odd factor degree carries the phase") {
    // Q = pplus^2 + 1, so F = -i (pplus + i).
    const ShellForm f = form_of("(p0 + p1)^2 + 1", 3, 1);
    const RationalVector phat{Rational(1, 2)};
    const FactorPair pair = make_factor_pair(f, phat);
    REQUIRE(pair.at.roots().size() == 1);
    CHECK(pair.at.phase() == Complex(0, -1));
    CHECK(std::abs(pair.at.roots()[0] - Complex(0, -1)) < 1e-12);
    const auto samples = log_samples(32);
    CHECK(check_symmetry(pair.at, pair.mirror, samples).pass);
    CHECK(reconstruction_error(f, pair.at, pair.mirror, samples) <= 1e-12);
}

TEST_CASE("symmetry and reconstruction across models") {
    const char* models[] = {"p0^2", "(p0 - 2*p2)^2", "p2^2 + p3^2", "(p1 + p3)^2", "p0^2*p2^2 + 1"};
    const auto samples = log_samples(64);
    std::mt19937_64 rng(17);
    for (const char* M : models)
        for (Rational m2 : {Rational(0), Rational(1)}) {
            const ShellForm f = form_of(M, 4, m2);
            for (int k = 0; k < 6; ++k) {
                const RationalVector phat{oracle::random_rational(rng, 8, 4), oracle::random_rational(rng, 8, 4)};
                if (root_profile(f, phat).degenerate) continue;
                const FactorPair pair = make_factor_pair(f, phat);
                CHECK(check_symmetry(pair.at, pair.mirror, samples).pass);
                CHECK(reconstruction_error(f, pair.at, pair.mirror, samples) <= 1e-9);
                for (double p : samples) {
                    // |F|^2 = F(p) F(-p, -phat) >= 0 on the positive axis.
                    const Complex w = pair.at(p) * pair.mirror(-p);
                    CHECK(std::abs(w.imag()) <= 1e-9 * pair.at.magnitude_scale(p) * pair.mirror.magnitude_scale(-p));
                    CHECK(w.real() >= -1e-12 * pair.at.magnitude_scale(p) * pair.mirror.magnitude_scale(-p));
                }
            }
        }
}

TEST_CASE("build errors") {
    const ShellForm f = form_of("(p0 + p1)^2*p2^2 + 1", 3, 1);
    const RationalVector zero{0};
    CHECK_THROWS_AS(make_factor_pair(f, zero), NumericalError);

    const ShellForm g = form_of("p0^2", 3, 1);
    const RationalVector a{1}, b{2};
    CHECK_THROWS_AS(FactorEvaluator::build(g, root_profile(g, a), root_profile(g, b)), NumericalError);

    const FactorPair pair = make_factor_pair(g, a);
    CHECK_THROWS_AS(pair.at(Complex(0, 0)), NumericalError);
}
