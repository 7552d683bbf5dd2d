#include "gffmod/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gffmod {

namespace {

constexpr int kFlowShifts[] = {1, -1, 8, -8, 32, -32, 64, -64};
constexpr int kGroupPairs[][2] = {{8, -3}, {32, 32}, {-16, 5}};

double relative_distance(const LatticeState& a, const LatticeState& b, double scale) {
    LatticeState diff = LatticeState::zero(a.lattice);
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] = a.values[i] - b.values[i];
    return scale == 0 ? norm(diff) : norm(diff) / scale;
}

void add(SuiteReport& r, std::string name, double value, double tolerance) {
    r.checks.push_back({std::move(name), value, tolerance, value <= tolerance});
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }) &&
           prefactors.mismatches == 0;
}

PrefactorAgreement prefactor_agreement(const Lattice& lattice, double tol) {
    PrefactorAgreement out;
    double min_unequal = std::numeric_limits<double>::infinity();
    for (int j = 0; j < lattice.phat_count(); ++j) {
        const int mj = lattice.mirror_index(j);
        if (lattice.degenerate(j) || lattice.degenerate(mj)) continue;
        ++out.phat_points;
        const UnivariateInstance inst = instantiate(lattice.form(), lattice.phat(j));
        const bool all_real = sturm_real_count(RationalUPoly(inst.coefficients)).all_real();
        const FactorEvaluator& at = lattice.factor(j);
        const FactorEvaluator& mirror = lattice.factor(mj);
        double deviation = 0.0;
        for (int i = 0; i < lattice.pplus_count(); ++i) {
            if (lattice.excluded(i, j)) continue;
            const double p = lattice.pplus(i);
            deviation = std::max(deviation, std::abs(j_prefactor(at, mirror, p, Side::right) -
                                                     j_prefactor(at, mirror, p, Side::left)));
        }
        const bool equal = deviation <= tol;
        if (all_real) {
            ++out.all_real_points;
            out.max_equal_deviation = std::max(out.max_equal_deviation, deviation);
        } else {
            min_unequal = std::min(min_unequal, deviation);
        }
        if (equal) ++out.equal_prefactor_points;
        if (equal != all_real) ++out.mismatches;
    }
    out.min_unequal_deviation = std::isfinite(min_unequal) ? min_unequal : 0.0;
    return out;
}

SuiteReport run_numerical_suite(const ShellForm& form, const Tolerances& tol, std::uint64_t seed) {
    LatticeConfig config;
    config.cluster_tol = tol.cluster;
    return run_numerical_suite(std::make_shared<const Lattice>(form, config), tol, seed);
}

SuiteReport run_numerical_suite(std::shared_ptr<const Lattice> lattice, const Tolerances& tol, std::uint64_t seed) {
    SuiteReport r;
    const Lattice& lat = *lattice;
    const int N = lat.pplus_count();

    std::vector<int> shifts(std::begin(kFlowShifts), std::end(kFlowShifts));
    for (const auto& kl : kGroupPairs) shifts.insert(shifts.end(), {kl[0], kl[1], kl[0] + kl[1]});
    const LatticeState phi = random_state(lattice, seed, N / 4 + 1, 3 * N / 4 - 1, shifts);
    const LatticeState psi = random_state(lattice, seed + 1, N / 4 + 1, 3 * N / 4 - 1, shifts);
    const double nphi = norm(phi), npsi = norm(psi);

    double unitarity = 0.0;
    for (Side side : {Side::right, Side::left})
        for (int k : kFlowShifts) {
            if (std::abs(k) >= N) continue;
            const double ratio = nphi == 0 ? 1.0 : norm(apply_flow(phi, k, side)) / nphi;
            unitarity = std::max(unitarity, std::abs(ratio - 1.0));
        }
    add(r, "flow_unitarity", unitarity, tol.flow);

    double group = 0.0;
    for (const auto& kl : kGroupPairs)
        group = std::max(group, relative_distance(apply_flow(apply_flow(phi, kl[1]), kl[0]),
                                                  apply_flow(phi, kl[0] + kl[1]), nphi));
    add(r, "flow_group_law", group, tol.group_law);

    double anti = 0.0, involution = 0.0;
    for (Side side : {Side::right, Side::left}) {
        const LatticeState jphi = apply_conjugation(phi, side);
        const LatticeState jpsi = apply_conjugation(psi, side);
        const double scale = std::max(nphi * npsi, std::numeric_limits<double>::min());
        anti = std::max(anti, std::abs(inner_product(jphi, jpsi) - std::conj(inner_product(phi, psi))) / scale);
        involution = std::max(involution, relative_distance(apply_conjugation(jphi, side), phi, nphi));
    }
    add(r, "conjugation_antiunitarity", anti, tol.conjugation);
    add(r, "conjugation_involution", involution, tol.conjugation);

    std::vector<double> samples;
    for (int i = 0; i < N; i += 8) samples.push_back(lat.pplus(i));
    double symmetry = 0.0, reconstruction = 0.0;
    for (int j = 0; j < lat.phat_count(); ++j) {
        const int mj = lat.mirror_index(j);
        if (lat.degenerate(j) || lat.degenerate(mj)) continue;
        symmetry = std::max(symmetry, check_symmetry(lat.factor(j), lat.factor(mj), samples, tol.symmetry).max_deviation);
        reconstruction = std::max(reconstruction, reconstruction_error(lat.form(), lat.factor(j), lat.factor(mj), samples));
    }
    add(r, "factor_symmetry", symmetry, tol.symmetry);
    add(r, "factor_reconstruction", reconstruction, tol.symmetry);

    const TestVector vectors[] = {{1.0, 1.0}, {0.5, 2.0}, {2.0, 1.0 / 3.0}};
    add(r, "s_identity", check_s_identity(lat.form(), vectors, tol.cluster), tol.s_identity);

    const int d = lat.form().dimension;
    std::vector<double> unit(d, 0.0), generic(d, 0.0);
    unit[1] = 1.0;
    for (int k = 0; k < d; ++k) generic[k] = 1.0 / (k + 2) * (k % 2 ? -1 : 1);
    double borchers = 0.0;
    for (const auto& a : {unit, generic})
        for (int k : {8, -16}) borchers = std::max(borchers, check_borchers(phi, a, k));
    add(r, "borchers", borchers, tol.borchers);

    r.prefactors = prefactor_agreement(lat, tol.prefactor);

    double min_weight = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < lat.phat_count(); ++j)
            if (!lat.degenerate(j) && !lat.excluded(i, j)) min_weight = std::min(min_weight, lat.weight(i, j));
    r.min_weight = std::isfinite(min_weight) ? min_weight : 0.0;
    r.warnings = lat.warnings();
    return r;
}

}  // namespace gffmod
