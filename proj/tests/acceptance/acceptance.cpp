// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "oracles.hpp"

#include <gffmod/app.hpp>
#include <gffmod/factor.hpp>
#include <gffmod/model.hpp>
#include <gffmod/parser.hpp>
#include <gffmod/suite.hpp>
#include <gffmod/verdict.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gffmod;
namespace fs = std::filesystem;

namespace {

const fs::path kModels = GFFMOD_MODELS_DIR;

// Collects failed expectations for one criterion.
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }
    std::string detail;

private:
    std::vector<std::string> failures_;
};

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << x;
    return os.str();
}

bool contains(const std::vector<std::string>& notes, const std::string& needle) {
    for (const auto& n : notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

std::vector<fs::path> corpus() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(kModels))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

const CheckResult* find_check(const SuiteReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

void free_field(Criterion& c) {
    const FieldModel m = load_model(kModels / "free_d4.json");
    c.expect(m.dimension == 4 && m.components.size() == 1 && m.components[0].mass2 == 1, "model is d=4, m2=1");
    const VerdictReport r = covariance_and_cgma_verdict(m);
    c.expect(r.duality.status == Status::holds_certified, "duality holds(certified)");
    c.expect(holds(r.local_action.status), "local action holds");
    c.expect(r.covariance.constant && r.covariance.values[0] == Rational(1), "covariance constant(1)");
    c.expect(holds(r.cgma.status), "cgma holds");
    c.expect(r.consistency == Consistency::consistent, "consistent");

    const SuiteReport s = run_numerical_suite(shell_form(m, 0), Tolerances{}, kDefaultSeed);
    double worst = 0.0;
    for (const char* name : {"flow_unitarity", "conjugation_antiunitarity", "conjugation_involution"}) {
        const CheckResult* chk = find_check(s, name);
        c.expect(chk && chk->value <= 1e-8, std::string(name) + " <= 1e-8");
        if (chk) worst = std::max(worst, chk->value);
    }
    c.detail = "max flow/conjugation error " + sci(worst);
}

void energy_squared(Criterion& c) {
    const FieldModel m = load_model(kModels / "energy_squared_d4.json");
    const ShellForm f = shell_form(m, 0);
    c.expect(f.n == 1, "n = 1");
    c.expect(f.Q == parse_polynomial("1/4*(pplus^2 + p2^2 + p3^2 + 1)^2", shell_variable_names(4)),
             "Q = 1/4 (pplus^2 + phat^2 + 1)^2");

    // Roots +-i sqrt(phat^2 + 1), each double.
    for (const auto& phat : phat_samples(4, kDefaultSeed)) {
        const RootProfile p = root_profile(f, phat);
        const double s = std::sqrt(Rational(phat[0] * phat[0] + phat[1] * phat[1]).get_d() + 1.0);
        bool ok = p.clusters.size() == 2;
        for (const auto& cl : p.clusters)
            ok = ok && cl.multiplicity == 2 && std::abs(std::abs(cl.value.imag()) - s) <= 1e-9 * s &&
                 std::abs(cl.value.real()) <= 1e-9 * s;
        c.expect(ok, "roots +-i sqrt(phat^2+1) double");
        if (!ok) break;
    }

    const VerdictReport r = covariance_and_cgma_verdict(m);
    c.expect(r.duality.status == Status::fails && r.duality.witness.has_value(), "duality fails with witness");
    if (r.duality.witness)
        c.expect(r.duality.witness->distinct_real < r.duality.witness->squarefree_degree, "witness Sturm certified");
    c.expect(r.local_action.status == Status::fails, "local action fails");
    c.expect(!r.covariance.constant && r.covariance.witness == "p1^2 + p2^2 + p3^2", "constancy witness");

    const FactorPair pair = make_factor_pair(f, RationalVector{0, 0});
    const double e1 = std::abs(pair.at(1.0) - oracle::energy_squared_factor(1.0, 0.0, 1.0));
    const double e2 = std::abs(pair.at(2.0) - oracle::energy_squared_factor(2.0, 0.0, 1.0));
    c.expect(e1 <= 1e-10 && std::abs(pair.at(1.0) - Complex(1, 0)) <= 1e-10, "F(1, 0) = 1");
    c.expect(e2 <= 1e-10 && std::abs(pair.at(2.0) - Complex(1, -0.75)) <= 1e-10, "F(2, 0) = 1 - 3/4 i");

    RunOptions o;
    o.command = "check";
    const AnalysisReport report = run(m, o);
    const std::string note = report.document["components"][0]["factor_normalization"];
    c.expect(note.find("(2 i p+)^(-1)") != std::string::npos &&
                 note.find("(2 i p+)^(-2) would not reproduce") != std::string::npos,
             "normalization note in report");
    c.detail = "F errors " + sci(e1) + ", " + sci(e2);
}

void massless_d3(Criterion& c) {
    const FieldModel m = load_model(kModels / "spacelike_d3_massless.json");
    c.expect(m.dimension == 3 && m.components[0].mass2 == 0, "model is d=3, m=0");
    VerdictOptions opts;
    opts.depth = 2;
    opts.exhaustive = true;
    const VerdictReport r = covariance_and_cgma_verdict(m, opts);
    c.expect(!r.duality.witness, "no complex witness");
    c.expect(r.duality.samples_checked > 0 && r.duality.samples_checked == r.duality.samples_all_real,
             "every Sturm certificate all_real");
    c.expect(r.duality.status == Status::holds_sampled, "duality holds(sampled)");
    c.expect(!r.covariance.constant, "covariance nonconstant");
    c.expect(contains(r.cgma.notes, "minimal net not Lorentz covariant") && contains(r.cgma.notes, "maximal net covariant"),
             "maximal net annotation");
    c.expect(contains(r.notes, "a.a=-2"), "discriminant note");

    // Independent discriminant check per sample and frame: Q = (quadratic)^2, real roots iff -(a.a) p2^2 >= 0.
    for (const auto& e : orbit(3, 2)) {
        RationalVector a{0, 1, 1};
        // M_Lambda(p) = M(Lambda^{-1} p) = ((Lambda a) . p)^2 up to index placement.
        const RationalMatrix& L = e.transform.matrix();
        RationalVector la(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) la[i] += L(i, j) * a[j];
        const std::vector<long double> al{la[0].get_d(), la[1].get_d(), la[2].get_d()};
        c.expect(oracle::massless_d3_all_real(al, 1.0L), "oracle discriminant nonnegative in frame " + e.word);
    }
    c.detail = std::to_string(r.duality.samples_all_real) + "/" + std::to_string(r.duality.samples_checked) +
               " certificates all_real over " + std::to_string(r.duality.frames_checked) + " frames";
}

void d2(Criterion& c) {
    const FieldModel m = load_model(kModels / "spacelike_d2.json");
    c.expect(m.dimension == 2 && m.components[0].mass2 == 1, "model is d=2, m2=1");
    c.expect(m.components[0].M == parse_polynomial("p1^2", 2), "M = (a.p)^2 with a = (0,1)");
    const VerdictReport r = covariance_and_cgma_verdict(m);
    c.expect(r.duality.status == Status::holds_sampled, "duality holds(sampled)");
    const ShellForm f = shell_form(m, 0);
    const auto sc = sturm_real_count(RationalUPoly(instantiate(f, RationalVector{}).coefficients));
    c.expect(sc.all_real(), "Q has only real zeros");
    c.expect(!r.covariance.constant, "covariance nonconstant");
    c.expect(contains(r.cgma.notes, "d=2"), "cgma d=2 caveat");
    c.detail = "Sturm " + std::to_string(sc.distinct_real) + "/" + std::to_string(sc.squarefree_degree);
}

void transverse(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const FieldModel m = load_model(kModels / "transverse_d4.json");
    c.expect(m.components[0].M == parse_polynomial("p2^2", 4) && m.components[0].mass2 == 1,
             "model is d=4, m2=1, M = p2^2");
    RunOptions o;
    o.command = "orbit-duality";
    o.depth = 1;
    const AnalysisReport report = run(m, o);
    const auto& w = report.document["witnesses"]["duality"];
    c.expect(report.exit_code == kExitOk, "orbit-duality exit 0");
    c.expect(report.document["verdicts"]["duality"] == "fails", "duality fails");
    c.expect(!w.is_null() && w["frame"].get<std::string>().rfind("B2(", 0) == 0, "witness frame is a 2-boost");
    if (!w.is_null())
        c.expect(w["sturm"]["distinct_real"].get<int>() < w["sturm"]["squarefree_degree"].get<int>(),
                 "witness Sturm certified");

    const VerdictReport r = covariance_and_cgma_verdict(m);
    c.expect(!r.covariance.constant, "covariance nonconstant");
    c.expect(r.consistency == Consistency::consistent, "d>=4 equivalence consistent");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 10.0, "runtime < 10 s");
    std::ostringstream os;
    os << "witness " << (w.is_null() ? std::string("none") : w["frame"].get<std::string>() + " root " +
                                                                 w["root"].get<std::string>())
       << ", " << seconds << " s";
    c.detail = os.str();
}

void identity_suite(Criterion& c) {
    int components = 0, mismatches = 0;
    double s_identity = 0.0;
    for (const auto& path : corpus()) {
        const FieldModel m = load_model(path);
        for (std::size_t k = 0; k < m.components.size(); ++k) {
            ++components;
            const SuiteReport s = run_numerical_suite(shell_form(m, k), Tolerances{}, kDefaultSeed);
            const std::string where = path.filename().string() + "[" + std::to_string(k) + "] ";
            for (const auto& [name, bound] : std::vector<std::pair<std::string, double>>{
                     {"s_identity", 1e-10},
                     {"flow_unitarity", 1e-8},
                     {"conjugation_antiunitarity", 1e-8},
                     {"conjugation_involution", 1e-8},
                     {"borchers", 1e-8}}) {
                const CheckResult* chk = find_check(s, name);
                c.expect(chk && chk->value <= bound, where + name);
                if (chk && name == "s_identity") s_identity = std::max(s_identity, chk->value);
            }
            mismatches += s.prefactors.mismatches;
            c.expect(s.prefactors.mismatches == 0, where + "jR = jL iff all_real");
        }
    }
    c.detail = std::to_string(components) + " components, max s-identity error " + sci(s_identity) +
               ", " + std::to_string(mismatches) + " prefactor mismatches";
}

void oracle_equivalence(Criterion& c) {
    std::mt19937_64 rng(kDefaultSeed);
    int failures = 0;
    for (int k = 0; k < 100; ++k) {
        const auto built = oracle::random_structured_polynomial(rng, 8);
        const RationalUPoly f(built.coefficients);
        const SturmCount sc = sturm_real_count(f);
        const bool sturm_ok = sc.distinct_real == built.real_distinct &&
                              sc.squarefree_degree == built.real_distinct + 2 * built.complex_pairs_distinct;
        const RootProfile p = classify(exact_roots(f), kDefaultClusterTolerance, false);
        const bool numeric_ok = (p.classification == RootClass::all_real) == built.all_real;
        if (!sturm_ok || !numeric_ok) ++failures;
    }
    c.expect(failures == 0, std::to_string(failures) + " of 100 disagree");
    c.detail = std::to_string(failures) + " failures";
}

void determinism(Criterion& c) {
    int reports = 0;
    for (const auto& path : corpus()) {
        RunOptions o;
        o.command = "check";
        const std::string a = emit(run(path, o), OutputFormat::json);
        const std::string b = emit(run(path, o), OutputFormat::json);
        c.expect(a == b, path.filename().string() + " byte identical");
        ++reports;
    }
    c.detail = std::to_string(reports) + " models";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"1 free field baseline", free_field},
        {"2 energy squared weight", energy_squared},
        {"3 massless d=3 spacelike square", massless_d3},
        {"4 d=2 spacelike square", d2},
        {"5 transverse square orbit witness", transverse},
        {"6 modular identity suite", identity_suite},
        {"7 root oracle equivalence", oracle_equivalence},
        {"8 deterministic reports", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Criterion c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const bool pass = c.failures().empty();
        failed += !pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
        for (const auto& f : c.failures()) std::cout << "    failed: " << f << '\n';
    }
    return failed == 0 ? 0 : 1;
}
