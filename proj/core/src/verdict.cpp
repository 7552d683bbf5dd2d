#include "gffmod/verdict.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace gffmod {

namespace {

// Shell forms of M_Lambda, computed on first use.
class FrameForms {
public:
    FrameForms(const FieldModel& model, int depth)
        : model_(model), frames_(orbit(model.dimension, depth)),
          forms_(model.components.size(), std::vector<std::optional<ShellForm>>(frames_.size())) {}

    const std::vector<OrbitElement>& frames() const { return frames_; }

    const ShellForm& get(std::size_t component, std::size_t frame) {
        auto& slot = forms_[component][frame];
        if (!slot) {
            const Component& c = model_.components[component];
            slot = to_shell_form(apply_linear(c.M, frames_[frame].transform), c.mass2);
        }
        return *slot;
    }

private:
    const FieldModel& model_;
    std::vector<OrbitElement> frames_;
    std::vector<std::vector<std::optional<ShellForm>>> forms_;
};

std::string depth_phrase(int depth) { return "depth " + std::to_string(depth); }

bool massless_d3(const FieldModel& model) {
    return model.dimension == 3 && std::any_of(model.components.begin(), model.components.end(),
                                               [](const Component& c) { return c.mass2 == 0; });
}

const char* kMaximalNetNote =
    "holds via Lorentz covariant generating field; minimal net not Lorentz covariant; maximal net covariant";

DualityVerdict duality_impl(const FieldModel& model, FrameForms& forms, const VerdictOptions& options,
                            const CovarianceVerdict& covariance) {
    DualityVerdict v;
    v.depth = options.depth;
    const auto samples = phat_samples(model.dimension, options.seed);
    const auto& frames = forms.frames();

    for (std::size_t k = 0; k < model.components.size() && !(v.witness && !options.exhaustive); ++k) {
        for (std::size_t f = 0; f < frames.size() && !(v.witness && !options.exhaustive); ++f) {
            const ShellForm& form = forms.get(k, f);
            ++v.frames_checked;
            for (const auto& phat : samples) {
                const UnivariateInstance inst = instantiate(form, phat);
                if (inst.degenerate) {
                    ++v.degenerate_samples;
                    continue;
                }
                const RationalUPoly poly(inst.coefficients);
                const SturmCount sc = sturm_real_count(poly);
                ++v.samples_checked;
                if (sc.all_real()) {
                    ++v.samples_all_real;
                    continue;
                }
                if (!v.witness) {
                    const RootProfile profile = classify(exact_roots(poly), options.cluster_tol, false);
                    v.witness = DualityWitness{static_cast<int>(k), frames[f].word, frames[f].transform.matrix(),
                                               phat, profile.witness, sc.distinct_real, sc.squarefree_degree};
                }
                if (!options.exhaustive) break;
            }
        }
    }

    if (v.witness) {
        v.status = Status::fails;
    } else if (covariance.constant) {
        v.status = Status::holds_certified;
        v.notes.push_back("certified: M is constant on the mass shell, so every frame gives a constant Q");
    } else if (equivalence_regime(model)) {
        v.status = Status::fails;
        v.notes.push_back("no witness at " + depth_phrase(options.depth) +
                          "; M is not constant on the shell, so duality fails for some wedge");
    } else {
        v.status = Status::holds_sampled;
        v.notes.push_back("no witness at " + depth_phrase(options.depth));
    }
    return v;
}

LocalActionVerdict local_action_impl(const FieldModel& model, FrameForms& forms, const VerdictOptions& options,
                                     const CovarianceVerdict& covariance) {
    LocalActionVerdict v;
    const auto& frames = forms.frames();
    const auto names = shell_variable_names(model.dimension);
    for (std::size_t k = 0; k < model.components.size() && !v.component; ++k) {
        for (std::size_t f = 0; f < frames.size(); ++f) {
            const ShellForm& form = forms.get(k, f);
            ++v.frames_checked;
            if (!form.is_pplus_monomial()) {
                v.component = static_cast<int>(k);
                v.frame = frames[f].word;
                v.obstruction = render(form.Q, names);
                break;
            }
        }
    }
    if (covariance.constant) {
        v.status = Status::holds_certified;
    } else if (v.component) {
        v.status = Status::fails;
    } else if (model.dimension >= 3) {
        v.status = Status::fails;
        v.notes.push_back("no non-monomial frame at " + depth_phrase(options.depth) +
                          "; M is not constant on the shell, so the action is nonlocal for some wedge");
    } else {
        v.status = Status::holds_sampled;
        v.notes.push_back("Q is a p+ monomial in every frame at " + depth_phrase(options.depth));
    }
    return v;
}

// Symmetric coefficient matrix of a homogeneous quadratic.
std::optional<std::vector<std::vector<Rational>>> quadratic_matrix(const Polynomial& M) {
    const int d = M.dimension();
    std::vector<std::vector<Rational>> S(d, std::vector<Rational>(d));
    for (const auto& [exp, coeff] : M.terms()) {
        std::vector<int> vars;
        unsigned total = 0;
        for (int i = 0; i < d; ++i) {
            total += exp[i];
            for (unsigned r = 0; r < exp[i]; ++r) vars.push_back(i);
        }
        if (total != 2) return std::nullopt;
        if (vars[0] == vars[1]) {
            S[vars[0]][vars[0]] = coeff;
        } else {
            S[vars[0]][vars[1]] = coeff / 2;
            S[vars[1]][vars[0]] = coeff / 2;
        }
    }
    return S;
}

}  // namespace

std::vector<RationalVector> phat_samples(int dimension, std::uint64_t seed, int random_count) {
    const int axes = std::max(dimension - 2, 0);
    const RationalVector values{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                Rational(2), Rational(-2)};
    std::vector<RationalVector> out;
    std::size_t count = 1;
    for (int a = 0; a < axes; ++a) count *= values.size();
    for (std::size_t j = 1; j < count; ++j) {
        RationalVector p(axes);
        std::size_t rest = j;
        for (int a = axes - 1; a >= 0; --a, rest /= values.size()) p[a] = values[rest % values.size()];
        out.push_back(std::move(p));
    }
    // The origin is its own mirror; it goes last.
    out.push_back(RationalVector(axes, Rational(0)));

    std::mt19937_64 rng(seed);
    for (int r = 0; r < random_count; ++r) {
        RationalVector p(axes);
        for (int a = 0; a < axes; ++a) {
            const long den = 1 + static_cast<long>(rng() % 8);
            const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * den + 1)) - 2 * den;
            p[a] = Rational(num, den);
            p[a].canonicalize();
        }
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

std::string to_string(Status status) {
    switch (status) {
        case Status::holds_certified: return "holds(certified)";
        case Status::holds_sampled: return "holds(sampled)";
        case Status::fails: return "fails";
    }
    return "?";
}

std::string to_string(Consistency c) {
    switch (c) {
        case Consistency::consistent: return "consistent";
        case Consistency::inconsistent: return "inconsistent";
        case Consistency::not_required: return "not_required";
    }
    return "?";
}

bool equivalence_regime(const FieldModel& model) {
    if (model.dimension >= 4) return true;
    if (model.dimension == 3)
        return std::all_of(model.components.begin(), model.components.end(),
                           [](const Component& c) { return c.mass2 > 0; });
    return false;
}

CovarianceVerdict lorentz_covariance_verdict(const FieldModel& model) {
    CovarianceVerdict v;
    for (std::size_t k = 0; k < model.components.size(); ++k) {
        const Component& c = model.components[k];
        const ShellConstancy sc = is_constant_on_shell(c.M, c.mass2);
        if (sc.constant) {
            v.values.emplace_back(sc.value);
        } else {
            v.values.emplace_back(std::nullopt);
            if (v.constant) {
                v.constant = false;
                v.component = static_cast<int>(k);
                v.witness = render(sc.witness);
            }
        }
    }
    return v;
}

DualityVerdict duality_verdict(const FieldModel& model, const VerdictOptions& options,
                               const CovarianceVerdict* covariance) {
    const CovarianceVerdict cov = covariance ? *covariance : lorentz_covariance_verdict(model);
    FrameForms forms(model, options.depth);
    return duality_impl(model, forms, options, cov);
}

LocalActionVerdict local_action_verdict(const FieldModel& model, const VerdictOptions& options,
                                        const CovarianceVerdict* covariance) {
    const CovarianceVerdict cov = covariance ? *covariance : lorentz_covariance_verdict(model);
    FrameForms forms(model, options.depth);
    return local_action_impl(model, forms, options, cov);
}

VerdictReport covariance_and_cgma_verdict(const FieldModel& model, const VerdictOptions& options) {
    VerdictReport r;
    r.covariance = lorentz_covariance_verdict(model);
    FrameForms forms(model, options.depth);
    r.duality = duality_impl(model, forms, options, r.covariance);
    r.local_action = local_action_impl(model, forms, options, r.covariance);

    if (equivalence_regime(model)) {
        r.cgma.status = r.covariance.constant ? Status::holds_certified : Status::fails;
        r.cgma.basis = "equivalent to Lorentz covariance of the field";
    } else {
        r.cgma.status = r.covariance.constant ? Status::holds_certified : r.duality.status;
        r.cgma.basis = "holds if duality holds for all wedges";
        if (model.dimension == 2)
            r.cgma.notes.push_back(
                "d=2: CGMA does not imply Lorentz covariance of the field, also for massive fields; "
                "wedge duality is decided by real-rootedness of Q alone");
        else if (massless_d3(model))
            r.cgma.notes.push_back("d=3 massless: CGMA does not imply Lorentz covariance of the field");
        if (!r.covariance.constant && holds(r.duality.status)) r.cgma.notes.push_back(kMaximalNetNote);
    }
    if (auto note = discriminant_note(model)) r.notes.push_back(*note);
    check_consistency(model, r);
    return r;
}

void check_consistency(const FieldModel& model, VerdictReport& report) {
    const bool cov = report.covariance.constant;
    // Constancy implies the other three in every dimension.
    if (cov && (!holds(report.duality.status) || !holds(report.local_action.status) || !holds(report.cgma.status))) {
        report.consistency = Consistency::inconsistent;
        return;
    }
    if (!equivalence_regime(model)) {
        report.consistency = Consistency::not_required;
        return;
    }
    const bool agree = holds(report.duality.status) == cov && holds(report.local_action.status) == cov &&
                       holds(report.cgma.status) == cov;
    report.consistency = agree ? Consistency::consistent : Consistency::inconsistent;
}

std::optional<std::string> discriminant_note(const FieldModel& model) {
    if (model.dimension != 3) return std::nullopt;
    for (std::size_t k = 0; k < model.components.size(); ++k) {
        const Component& c = model.components[k];
        if (c.mass2 != 0) continue;
        const auto S = quadratic_matrix(c.M);
        if (!S) continue;
        int pivot = -1;
        for (int i = 0; i < 3 && pivot < 0; ++i)
            if ((*S)[i][i] != 0) pivot = i;
        if (pivot < 0) continue;
        // Rank one: every 2x2 minor vanishes.
        bool rank_one = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if ((*S)[i][i] * (*S)[j][j] != (*S)[i][j] * (*S)[i][j] ||
                    (*S)[pivot][pivot] * (*S)[i][j] != (*S)[pivot][i] * (*S)[pivot][j])
                    rank_one = false;
        if (!rank_one) continue;
        // M = c (l.p)^2 in Euclidean components; a = (l0, -l1, -l2) in Minkowski form.
        RationalVector l(3);
        for (int i = 0; i < 3; ++i) l[i] = (*S)[pivot][i] / (*S)[pivot][pivot];
        const Rational aa = l[0] * l[0] - l[1] * l[1] - l[2] * l[2];
        const std::string a = "(" + to_string(l[0]) + "," + to_string(Rational(-l[1])) + "," +
                              to_string(Rational(-l[2])) + ")";
        std::string note = "component " + std::to_string(k) + ": M is a multiple of (a.p)^2 with a=" + a +
                           ", a.a=" + to_string(aa) + "; the discriminant of the quadratic in p+ is -(a.a) p2^2";
        note += aa <= 0 ? ", nonnegative for every p2 and every frame: all zeros are real"
                        : ", negative for p2 != 0: complex zeros";
        return note;
    }
    return std::nullopt;
}

}  // namespace gffmod
