#pragma once

#include "gffmod/factor.hpp"
#include "gffmod/shell.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gffmod {

enum class Side { right, left };

// Multiplier of the wedge modular group on one-particle wave functions.
//   right: F(e^{2 pi t} p+, phat) / F(p+, phat)
//   left:  F(-e^{-2 pi t} p+, -phat) / F(-p+, -phat)
// `at` is F(., phat) and `mirror` is F(., -phat).
Complex delta_prefactor(const FactorEvaluator& at, const FactorEvaluator& mirror, double t, double pplus, Side side);

// Multiplier of the modular conjugation (which also maps phat -> -phat and
// conjugates).
//   right: F(-p+, phat) / F(p+, phat)
//   left:  F(p+, -phat) / F(-p+, -phat)
Complex j_prefactor(const FactorEvaluator& at, const FactorEvaluator& mirror, double pplus, Side side);

struct LatticeConfig {
    int pplus_points = 256;
    double log_step = 0.04332169878499658;  // ln(2) / 16
    std::optional<double> pplus_min;        // default m/8 + 1/8
    int phat_points = 17;                   // per transverse axis, odd so 0 is on the grid
    Rational phat_extent{2};                // axis grid spans [-extent, extent]
    double cluster_tol = kDefaultClusterTolerance;
};

// Discretized one-particle space for a single mass component: log-uniform p+
// grid times a negation-closed phat grid, with the shell measure
// W = p+^{-1} F(p+, phat) F(-p+, -phat) at every node.
class Lattice {
public:
    Lattice(const ShellForm& form, const LatticeConfig& config = {});

    const ShellForm& form() const noexcept { return form_; }
    const LatticeConfig& config() const noexcept { return config_; }

    int pplus_count() const noexcept { return config_.pplus_points; }
    int phat_count() const noexcept { return static_cast<int>(phat_grid_.size()); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(pplus_count()) * phat_count(); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * phat_count() + j; }

    double pplus(int i) const { return pplus_[i]; }
    double log_step() const noexcept { return config_.log_step; }
    const RationalVector& phat(int j) const { return phat_grid_[j]; }
    std::vector<double> phat_values(int j) const;
    int mirror_index(int j) const { return mirror_[j]; }

    bool degenerate(int j) const { return !factors_[j].has_value(); }
    const FactorEvaluator& factor(int j) const;
    double weight(int i, int j) const { return weight_[index(i, j)]; }
    // Trapezoid quadrature on the log grid times the shell measure.
    double quadrature(int i, int j) const { return quadrature_[index(i, j)]; }
    // Nodes sitting on a real zero of F to rounding accuracy.
    bool excluded(int i, int j) const { return excluded_[index(i, j)]; }

    std::vector<std::string> warnings() const;

private:
    ShellForm form_;
    LatticeConfig config_;
    std::vector<double> pplus_;
    std::vector<RationalVector> phat_grid_;
    std::vector<int> mirror_;
    std::vector<std::optional<FactorEvaluator>> factors_;
    std::vector<double> weight_;
    std::vector<double> quadrature_;
    std::vector<bool> excluded_;
    int near_root_nodes_ = 0;
};

// A wave function sampled on a lattice; values indexed by Lattice::index.
struct LatticeState {
    std::shared_ptr<const Lattice> lattice;
    std::vector<Complex> values;

    static LatticeState zero(std::shared_ptr<const Lattice> lattice);
    Complex& at(int i, int j) { return values[lattice->index(i, j)]; }
    Complex at(int i, int j) const { return values[lattice->index(i, j)]; }
};

// <phi, psi>, antilinear in the first slot.
Complex inner_product(const LatticeState& phi, const LatticeState& psi);
double norm(const LatticeState& phi);

// Modular group at t = k h / (2 pi): an exact index shift on the log grid.
// Values shifted in from outside the grid read as zero.
LatticeState apply_flow(const LatticeState& state, int k, Side side = Side::right);

// Antilinear modular conjugation; uses the negation map of the phat grid.
LatticeState apply_conjugation(const LatticeState& state, Side side = Side::right);

// Multiplication by exp(i a.p) on the shell: a.p = (p+ a- + p- a+)/2 - phat.ahat.
LatticeState apply_translation(const LatticeState& state, std::span<const double> a);

// Random state supported on p+ indices [lo, hi), zero at degenerate phat and
// at nodes that an index shift in `shifts` (or the phat mirror) would move
// onto an excluded node. Deterministic in `seed`.
LatticeState random_state(std::shared_ptr<const Lattice> lattice, std::uint64_t seed, int lo, int hi,
                          std::span<const int> shifts = {});

// Closed-form wedge-localized test vector exp(i a p+ - i b (phat^2+m2)/p+) exp(-phat^2).
struct TestVector {
    double a = 1.0;
    double b = 1.0;
};

// max relative error of j(delta^{1/2} phi) against phi(-p+, -phat)^* over a
// 64 x 8^(d-2) grid; nodes within 1e-6 of a real zero of F are skipped.
double check_s_identity(const ShellForm& form, std::span<const TestVector> vectors,
                        double tol = kDefaultClusterTolerance);

// max relative error of delta^{it} T(a) phi against T(Lambda(t) a) delta^{it} phi
// with a+ -> e^{-2 pi t} a+, a- -> e^{2 pi t} a-.
double check_borchers(const LatticeState& state, std::span<const double> a, int k);

}  // namespace gffmod
