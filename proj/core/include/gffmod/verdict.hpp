#pragma once

#include "gffmod/lorentz.hpp"
#include "gffmod/model.hpp"
#include "gffmod/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gffmod {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultOrbitDepth = 2;
inline constexpr int kRandomPhatSamples = 32;

// Transverse momentum samples: the grid {0, +-1, +-1/2, +-2}^(d-2) (origin
// last) followed by `random_count` seeded rationals with denominators <= 8 in
// [-2, 2]^(d-2). Duplicates are dropped; identical for identical seeds.
std::vector<RationalVector> phat_samples(int dimension, std::uint64_t seed, int random_count = kRandomPhatSamples);

enum class Status { holds_certified, holds_sampled, fails };
std::string to_string(Status status);
inline bool holds(Status s) { return s != Status::fails; }

struct DualityWitness {
    int component = 0;
    std::string frame;  // orbit word
    RationalMatrix matrix{1};
    RationalVector phat;
    Complex root;  // complex zero of Q in the upper half plane
    int distinct_real = 0;
    int squarefree_degree = 0;
};

struct DualityVerdict {
    Status status = Status::holds_sampled;
    std::optional<DualityWitness> witness;
    int depth = 0;
    int frames_checked = 0;
    int samples_checked = 0;     // Sturm certificates computed
    int samples_all_real = 0;
    int degenerate_samples = 0;  // vanishing top coefficient, skipped
    std::vector<std::string> notes;
};

struct LocalActionVerdict {
    Status status = Status::holds_sampled;
    std::optional<int> component;
    std::string frame;        // first frame whose Q is not a p+ monomial
    std::string obstruction;  // that Q, rendered
    int frames_checked = 0;
    std::vector<std::string> notes;
};

struct CovarianceVerdict {
    bool constant = true;
    std::vector<std::optional<Rational>> values;  // per component
    std::optional<int> component;                 // first nonconstant component
    std::string witness;                          // obstruction polynomial
};

struct CgmaVerdict {
    Status status = Status::holds_sampled;
    std::string basis;
    std::vector<std::string> notes;
};

enum class Consistency { consistent, inconsistent, not_required };
std::string to_string(Consistency c);

struct VerdictReport {
    DualityVerdict duality;
    LocalActionVerdict local_action;
    CovarianceVerdict covariance;
    CgmaVerdict cgma;
    Consistency consistency = Consistency::not_required;
    std::vector<std::string> notes;
};

struct VerdictOptions {
    int depth = kDefaultOrbitDepth;
    std::uint64_t seed = kDefaultSeed;
    double cluster_tol = kDefaultClusterTolerance;
    // When false the duality search stops at the first witness; otherwise
    // every frame and sample is certified (for reporting counts).
    bool exhaustive = false;
};

// The regime where duality, local action, covariance and CGMA coincide:
// d >= 4, or d = 3 with every mass positive.
bool equivalence_regime(const FieldModel& model);

CovarianceVerdict lorentz_covariance_verdict(const FieldModel& model);

// Sturm certificates of Q_Lambda over the sample set for every Lambda in the
// orbit; the first certified complex zero is the witness.
DualityVerdict duality_verdict(const FieldModel& model, const VerdictOptions& options = {},
                               const CovarianceVerdict* covariance = nullptr);

LocalActionVerdict local_action_verdict(const FieldModel& model, const VerdictOptions& options = {},
                                        const CovarianceVerdict* covariance = nullptr);

VerdictReport covariance_and_cgma_verdict(const FieldModel& model, const VerdictOptions& options = {});

// Recomputes `report.consistency` from the four verdicts.
void check_consistency(const FieldModel& model, VerdictReport& report);

// Exact discriminant remark for d = 3, m = 0 and M = c (a.p)^2; empty when M is
// not of that form.
std::optional<std::string> discriminant_note(const FieldModel& model);

}  // namespace gffmod
