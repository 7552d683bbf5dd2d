#pragma once

#include "gffmod/modular.hpp"
#include "gffmod/shell.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gffmod {

struct Tolerances {
    double cluster = kDefaultClusterTolerance;
    double flow = 1e-8;
    double group_law = 1e-12;
    double conjugation = 1e-8;
    double s_identity = 1e-10;
    double borchers = 1e-8;
    double prefactor = 1e-9;  // |jR - jL| equality threshold
    double symmetry = 1e-9;
};

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

// jR == jL at every lattice p+ for a given phat, against the Sturm certificate there.
struct PrefactorAgreement {
    int phat_points = 0;
    int all_real_points = 0;       // Sturm certificate
    int equal_prefactor_points = 0;
    int mismatches = 0;
    double max_equal_deviation = 0.0;   // max |jR - jL| over all-real points
    double min_unequal_deviation = 0.0; // max over p+ of |jR - jL|, minimized over complex points
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    PrefactorAgreement prefactors;
    double min_weight = 0.0;
    std::vector<std::string> warnings;

    bool pass() const;
};

PrefactorAgreement prefactor_agreement(const Lattice& lattice, double tol);

// Unitarity, group law, anti-unitarity, involution, factor symmetry and
// reconstruction, s-identity, Borchers commutation and the jR = jL criterion
// on the default lattice of one mass component.
SuiteReport run_numerical_suite(const ShellForm& form, const Tolerances& tol, std::uint64_t seed);
SuiteReport run_numerical_suite(std::shared_ptr<const Lattice> lattice, const Tolerances& tol, std::uint64_t seed);

}  // namespace gffmod
