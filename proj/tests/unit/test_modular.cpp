#include <doctest.h>

#include "oracles.hpp"

#include <gffmod/error.hpp>
#include <gffmod/modular.hpp>
#include <gffmod/parser.hpp>
#include <gffmod/suite.hpp>

#include <cmath>
#include <memory>
#include <numbers>

using namespace gffmod;

namespace {

ShellForm form_of(const char* M, int d, Rational m2) { return to_shell_form(parse_polynomial(M, d), m2); }

std::shared_ptr<const Lattice> lattice_of(const char* M, int d, Rational m2) {
    return std::make_shared<const Lattice>(form_of(M, d, m2));
}

double distance(const LatticeState& a, const LatticeState& b) {
    LatticeState diff = LatticeState::zero(a.lattice);
    for (std::size_t k = 0; k < diff.values.size(); ++k) diff.values[k] = a.values[k] - b.values[k];
    return norm(diff);
}

constexpr int kLo = 256 / 4 + 1;
constexpr int kHi = 3 * 256 / 4 - 1;

}  // namespace

TEST_CASE("prefactors for a constant weight") {
    const FactorPair pair = make_factor_pair(form_of("1", 4, 1), RationalVector{1, -1});
    for (double p : {0.2, 1.0, 4.0}) {
        CHECK(delta_prefactor(pair.at, pair.mirror, 0.37, p, Side::right) == Complex(1, 0));
        CHECK(delta_prefactor(pair.at, pair.mirror, -1.2, p, Side::left) == Complex(1, 0));
        CHECK(j_prefactor(pair.at, pair.mirror, p, Side::right) == Complex(1, 0));
        CHECK(j_prefactor(pair.at, pair.mirror, p, Side::left) == Complex(1, 0));
    }
}

TEST_CASE("prefactors for the energy squared weight") {
    const FactorPair pair = make_factor_pair(form_of("p0^2", 4, 1), RationalVector{0, 0});
    CHECK(delta_prefactor(pair.at, pair.mirror, 0.0, 1.7, Side::right) == Complex(1, 0));
    CHECK(delta_prefactor(pair.at, pair.mirror, 0.0, 1.7, Side::left) == Complex(1, 0));

    const double t = std::numbers::ln2 / (2 * std::numbers::pi);
    const Complex d = delta_prefactor(pair.at, pair.mirror, t, 1.0, Side::right);
    CHECK(std::abs(d - Complex(1, -0.75)) <= 1e-12);
    CHECK(std::abs(d) == doctest::Approx(1.25));

    CHECK(std::abs(j_prefactor(pair.at, pair.mirror, 1.0, Side::right) - Complex(1, 0)) <= 1e-12);
    CHECK(std::abs(j_prefactor(pair.at, pair.mirror, 2.0, Side::right) - Complex(7.0 / 25, 24.0 / 25)) <= 1e-12);

    // Complex roots: the two conjugations differ, jL = conj jR.
    const Complex jr = j_prefactor(pair.at, pair.mirror, 2.0, Side::right);
    const Complex jl = j_prefactor(pair.at, pair.mirror, 2.0, Side::left);
    CHECK(std::abs(jl - std::conj(jr)) <= 1e-12);
    CHECK(std::abs(jl - jr) > 0.1);
}

TEST_CASE("prefactor at a real zero of F") {
    // Q = pplus^2 has a double root at 0, so F = -i pplus vanishes there.
    const FactorPair pair = make_factor_pair(form_of("(p0 + p1)^2", 3, 1), RationalVector{0});
    CHECK_THROWS_AS(j_prefactor(pair.at, pair.mirror, 0.0, Side::right), NumericalError);
    CHECK_THROWS_AS(delta_prefactor(pair.at, pair.mirror, 0.1, 0.0, Side::left), NumericalError);
    CHECK(std::abs(j_prefactor(pair.at, pair.mirror, 0.5, Side::right) - Complex(-1, 0)) <= 1e-15);
}

TEST_CASE("lattice layout") {
    const auto lat = lattice_of("1", 4, 1);
    CHECK(lat->pplus_count() == 256);
    CHECK(lat->phat_count() == 17 * 17);
    CHECK(lat->pplus(0) == doctest::Approx(0.25));
    CHECK(lat->pplus(16) == doctest::Approx(0.5));
    CHECK(lat->phat(0) == RationalVector{-2, -2});
    CHECK(lat->phat(1) == RationalVector{-2, Rational(-7, 4)});
    CHECK(lat->phat(17 * 17 - 1) == RationalVector{2, 2});
    for (int j = 0; j < lat->phat_count(); ++j) {
        const int mj = lat->mirror_index(j);
        CHECK(lat->mirror_index(mj) == j);
        RationalVector neg;
        for (const auto& x : lat->phat(j)) neg.push_back(-x);
        CHECK(lat->phat(mj) == neg);
    }
    // W = 1/p for M = 1.
    CHECK(lat->weight(10, 5) == doctest::Approx(1.0 / lat->pplus(10)));
    CHECK(lat->quadrature(0, 0) == doctest::Approx(0.5 * lat->log_step()));
    CHECK(lat->warnings().empty());

    const auto massless = lattice_of("1", 2, 0);
    CHECK(massless->phat_count() == 1);
    CHECK(massless->pplus(0) == doctest::Approx(0.125));
}

TEST_CASE("lattice weights are nonnegative") {
    for (const char* M : {"p0^2", "p2^2", "(p1 + p2)^2", "(p0 - 2*p2)^2"}) {
        const auto lat = lattice_of(M, 3, 0);
        for (int i = 0; i < lat->pplus_count(); ++i)
            for (int j = 0; j < lat->phat_count(); ++j) CHECK(lat->weight(i, j) >= -1e-12);
    }
}

TEST_CASE("degenerate and near-root lattice points are reported") {
    const auto lat = lattice_of("p2^2", 3, 1);
    // Q = p2^2 vanishes at p2 = 0.
    int degenerate = 0;
    for (int j = 0; j < lat->phat_count(); ++j) degenerate += lat->degenerate(j);
    CHECK(degenerate == 1);
    CHECK_FALSE(lat->warnings().empty());
    CHECK_THROWS_AS(lat->factor(8), NumericalError);
}

TEST_CASE("flow is the identity at k = 0 and rejects off-grid shifts") {
    const auto lat = lattice_of("p0^2", 3, 1);
    const LatticeState phi = random_state(lat, 1, kLo, kHi);
    CHECK(distance(apply_flow(phi, 0), phi) == 0.0);
    CHECK_THROWS_AS(apply_flow(phi, 256), DimensionError);
}

TEST_CASE("flow for M = 1 is a pure shift") {
    const auto lat = lattice_of("1", 3, 1);
    const LatticeState phi = random_state(lat, 2, kLo, kHi);
    for (int k : {1, 17, -64}) {
        const LatticeState moved = apply_flow(phi, k);
        for (int i = 0; i < 256; ++i)
            for (int j = 0; j < lat->phat_count(); j += 5) {
                const int src = i + k;
                const Complex want = (src >= 0 && src < 256) ? phi.at(src, j) : Complex(0);
                CHECK(moved.at(i, j) == want);
            }
        CHECK(norm(moved) == doctest::Approx(norm(phi)).epsilon(1e-14));
    }
}

TEST_CASE("flow unitarity and group law on the energy squared weight") {
    const auto lat = lattice_of("p0^2", 4, 1);
    const LatticeState phi = random_state(lat, 3, kLo, kHi);
    const double n0 = norm(phi);
    for (Side side : {Side::right, Side::left})
        for (int k : {1, -7, 32, -64}) CHECK(std::abs(norm(apply_flow(phi, k, side)) / n0 - 1) <= 1e-8);
    CHECK(distance(apply_flow(apply_flow(phi, 20), -5), apply_flow(phi, 15)) <= 1e-12 * n0);
    CHECK(distance(apply_flow(apply_flow(phi, 9, Side::left), 9, Side::left), apply_flow(phi, 18, Side::left)) <=
          1e-12 * n0);
}

TEST_CASE("conjugation") {
    SUBCASE("fixes real even states for M = 1") {
        const auto lat = lattice_of("1", 3, 1);
        LatticeState phi = LatticeState::zero(lat);
        for (int i = kLo; i < kHi; ++i)
            for (int j = 0; j < lat->phat_count(); ++j) {
                const double x = lat->phat_values(j)[0];
                phi.at(i, j) = std::exp(-x * x) / (1 + i);
            }
        CHECK(distance(apply_conjugation(phi), phi) == 0.0);
        CHECK(distance(apply_conjugation(phi, Side::left), phi) == 0.0);
    }
    SUBCASE("is antiunitary and an involution") {
        for (const char* M : {"p0^2", "(p1 + p2)^2", "p2^2"}) {
            const auto lat = lattice_of(M, 3, 0);
            const LatticeState phi = random_state(lat, 4, kLo, kHi);
            const LatticeState psi = random_state(lat, 5, kLo, kHi);
            for (Side side : {Side::right, Side::left}) {
                const Complex lhs = inner_product(apply_conjugation(phi, side), apply_conjugation(psi, side));
                CHECK(std::abs(lhs - std::conj(inner_product(phi, psi))) <= 1e-8 * norm(phi) * norm(psi));
                CHECK(distance(apply_conjugation(apply_conjugation(phi, side), side), phi) <= 1e-8 * norm(phi));
            }
        }
    }
    SUBCASE("is antilinear") {
        const auto lat = lattice_of("p0^2", 3, 1);
        const LatticeState phi = random_state(lat, 6, kLo, kHi);
        LatticeState scaled = phi;
        const Complex c(0.3, -2.0);
        for (auto& v : scaled.values) v *= c;
        LatticeState want = apply_conjugation(phi);
        for (auto& v : want.values) v *= std::conj(c);
        CHECK(distance(apply_conjugation(scaled), want) <= 1e-14 * norm(want));
    }
}

TEST_CASE("s identity") {
    const TestVector vectors[] = {{1.0, 1.0}, {0.5, 2.0}};
    CHECK(check_s_identity(form_of("1", 4, 1), vectors) <= 1e-12);
    CHECK(check_s_identity(form_of("p0^2", 4, 1), vectors) <= 1e-10);
    CHECK(check_s_identity(form_of("(p1 + p2)^2", 3, 0), vectors) <= 1e-10);
}

TEST_CASE("Borchers commutation") {
    {
        const auto lat = lattice_of("1", 4, 1);
        const LatticeState phi = random_state(lat, 7, kLo, kHi);
        const std::vector<double> zero(4, 0.0), a{0.3, -1.0, 0.5, 2.0};
        CHECK(check_borchers(phi, zero, 16) == 0.0);
        CHECK(check_borchers(phi, a, 16) <= 1e-10);
        CHECK(check_borchers(phi, a, -40) <= 1e-10);
    }
    {
        const auto lat = lattice_of("p0^2", 4, 1);
        const int shifts[] = {8, -8};
        const LatticeState phi = random_state(lat, 8, kLo, kHi, shifts);
        const std::vector<double> a{0, 1, 0, 0};
        CHECK(check_borchers(phi, a, 8) <= 1e-8);
        CHECK(check_borchers(phi, a, -8) <= 1e-8);
    }
}

TEST_CASE("translation is a phase") {
    const auto lat = lattice_of("p0^2", 3, 1);
    const LatticeState phi = random_state(lat, 9, kLo, kHi);
    const std::vector<double> a{1.5, 0.25, -2.0};
    CHECK(norm(apply_translation(phi, a)) == doctest::Approx(norm(phi)).epsilon(1e-13));
    CHECK_THROWS_AS(apply_translation(phi, std::vector<double>{1.0}), DimensionError);
}

TEST_CASE("random states are seeded and respect the support") {
    const auto lat = lattice_of("p0^2", 3, 1);
    const LatticeState a = random_state(lat, 42, kLo, kHi);
    const LatticeState b = random_state(lat, 42, kLo, kHi);
    CHECK(a.values == b.values);
    CHECK(random_state(lat, 43, kLo, kHi).values != a.values);
    for (int j = 0; j < lat->phat_count(); ++j) {
        CHECK(a.at(kLo - 1, j) == Complex(0));
        CHECK(a.at(kHi, j) == Complex(0));
    }
}

TEST_CASE("jR equals jL exactly where the roots are real") {
    for (const char* M : {"p0^2", "(p0 - 2*p2)^2", "p2^2", "(p1 + p2)^2", "1"}) {
        const Lattice lat(form_of(M, 3, 1));
        const PrefactorAgreement agreement = prefactor_agreement(lat, 1e-9);
        CHECK(agreement.mismatches == 0);
        CHECK(agreement.phat_points > 0);
    }
    const Lattice energy(form_of("p0^2", 3, 1));
    CHECK(prefactor_agreement(energy, 1e-9).all_real_points == 0);
    const Lattice constant(form_of("1", 3, 1));
    const auto c = prefactor_agreement(constant, 1e-9);
    CHECK(c.all_real_points == c.phat_points);
    CHECK(c.equal_prefactor_points == c.phat_points);
}

TEST_CASE("numerical suite passes on representative weights") {
    for (const char* M : {"1", "p0^2", "(p0 - 2*p2)^2", "p2^2"}) {
        const SuiteReport r = run_numerical_suite(form_of(M, 4, 1), Tolerances{}, 20240611);
        for (const auto& c : r.checks) {
            INFO(M << " " << c.name << " = " << c.value);
            CHECK(c.pass);
        }
        CHECK(r.pass());
        CHECK(r.min_weight >= 0.0);
    }
}
