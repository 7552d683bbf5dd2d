#include "gffmod/app.hpp"

#include "gffmod/error.hpp"
#include "gffmod/factor.hpp"
#include "gffmod/modular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#ifndef GFFMOD_VERSION
#define GFFMOD_VERSION "0.0.0"
#endif

namespace gffmod {

namespace {

using Json = nlohmann::ordered_json;

Json rationals(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json header(const std::string& command, const RunOptions& options) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["tool"] = {{"name", "gffmod"}, {"version", GFFMOD_VERSION}};
    doc["command"] = command;
    const Tolerances& t = options.tol;
    doc["config"] = {{"seed", options.seed},
                     {"depth", options.depth},
                     {"k", options.k},
                     {"phat", options.phat ? Json(*options.phat) : Json(nullptr)},
                     {"tolerances",
                      {{"cluster", t.cluster},
                       {"flow", t.flow},
                       {"group_law", t.group_law},
                       {"conjugation", t.conjugation},
                       {"s_identity", t.s_identity},
                       {"borchers", t.borchers},
                       {"prefactor", t.prefactor},
                       {"symmetry", t.symmetry}}}};
    return doc;
}

Json model_json(const FieldModel& model) {
    Json comps = Json::array();
    for (const auto& c : model.components)
        comps.push_back({{"weight", to_string(c.weight)}, {"mass2", to_string(c.mass2)}, {"M", c.source.empty() ? render(c.M) : c.source}});
    return {{"dimension", model.dimension}, {"components", comps}};
}

Json shell_form_json(const ShellForm& form) {
    const auto names = shell_variable_names(form.dimension);
    return {{"n", form.n},
            {"Q", render(form.Q, names)},
            {"pplus_degree", form.pplus_degree()},
            {"pplus_monomial", form.is_pplus_monomial()}};
}

// sqrt(c) as an exact rational, if it is one.
std::optional<Rational> exact_sqrt(const Rational& c) {
    if (c < 0) return std::nullopt;
    mpz_class num = c.get_num(), den = c.get_den(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

// How the overall scalar and the (i p+)^(-n) factor combine, stated for the
// report reader.
std::string normalization_note(const ShellForm& form) {
    std::string note = "F(p+,phat) = sqrt(c(phat)) (i p+)^(-n) prod_k (p+ - rho_k) with n=" + std::to_string(form.n) +
                       " and c the leading p+ coefficient of Q; the power of (i p+) is -n because "
                       "F(p+,phat) F(-p+,-phat) must reproduce M on the shell";
    const Polynomial lead = form.leading_coefficient();
    if (form.n > 0 && lead.is_constant()) {
        if (auto s = exact_sqrt(lead.constant_term()); s && *s > 0) {
            // s (i p+)^(-n) = (q i p+)^(-n) when s = q^(-n).
            const Rational inv = 1 / *s;
            const double q_guess = std::round(std::pow(inv.get_d(), 1.0 / form.n));
            if (q_guess >= 1 && rational_pow(Rational(static_cast<long>(q_guess)), form.n) == inv)
            {
                const std::string q = std::to_string(static_cast<long>(q_guess));
                note += "; here sqrt(c) (i p+)^(-n) = (" + q + " i p+)^(-" + std::to_string(form.n) +
                        "); the prefactor (" + q + " i p+)^(-" + std::to_string(2 * form.n) +
                        ") would not reproduce M on the shell";
            }
        }
    }
    return note;
}

Json root_grid_json(const ShellForm& form, const std::vector<RationalVector>& samples, double tol) {
    int all_real = 0, complex = 0;
    Json first = nullptr;
    Json degenerate = Json::array();
    for (const auto& phat : samples) {
        const UnivariateInstance inst = instantiate(form, phat);
        if (inst.degenerate) {
            degenerate.push_back(rationals(phat));
            continue;
        }
        const RationalUPoly poly(inst.coefficients);
        if (sturm_real_count(poly).all_real()) {
            ++all_real;
            continue;
        }
        ++complex;
        if (first.is_null()) {
            const RootProfile profile = classify(exact_roots(poly), tol, false);
            first = {{"phat", rationals(phat)}, {"root", format_complex(profile.witness)}};
        }
    }
    return {{"samples", samples.size()},
            {"all_real", all_real},
            {"has_complex", complex},
            {"degenerate", degenerate.size()},
            {"first_complex", first},
            {"degenerate_phat", degenerate}};
}

std::string covariance_string(const CovarianceVerdict& v) {
    if (!v.constant) return "nonconstant";
    std::string out = "constant(";
    for (std::size_t i = 0; i < v.values.size(); ++i) out += (i ? "," : "") + to_string(*v.values[i]);
    return out + ")";
}

Json verdicts_json(const VerdictReport& r) {
    return {{"duality", to_string(r.duality.status)},
            {"local_action", to_string(r.local_action.status)},
            {"lorentz_covariance", covariance_string(r.covariance)},
            {"cgma", to_string(r.cgma.status)},
            {"consistency", to_string(r.consistency)}};
}

Json duality_witness_json(const DualityVerdict& v) {
    if (!v.witness) return nullptr;
    const DualityWitness& w = *v.witness;
    return {{"component", w.component},
            {"frame", w.frame},
            {"matrix", Json::parse(w.matrix.to_string())},
            {"phat", rationals(w.phat)},
            {"root", format_complex(w.root)},
            {"sturm", {{"distinct_real", w.distinct_real}, {"squarefree_degree", w.squarefree_degree}}}};
}

Json witnesses_json(const VerdictReport& r) {
    Json out;
    out["duality"] = duality_witness_json(r.duality);
    if (r.local_action.component)
        out["local_action"] = {{"component", *r.local_action.component},
                               {"frame", r.local_action.frame},
                               {"Q", r.local_action.obstruction}};
    else
        out["local_action"] = nullptr;
    if (r.covariance.component)
        out["lorentz_covariance"] = {{"component", *r.covariance.component}, {"obstruction", r.covariance.witness}};
    else
        out["lorentz_covariance"] = nullptr;
    return out;
}

Json duality_details_json(const DualityVerdict& v) {
    return {{"depth", v.depth},
            {"frames_checked", v.frames_checked},
            {"samples_checked", v.samples_checked},
            {"samples_all_real", v.samples_all_real},
            {"degenerate_samples", v.degenerate_samples},
            {"notes", v.notes}};
}

VerdictOptions verdict_options(const RunOptions& o) {
    VerdictOptions v;
    v.depth = o.depth;
    v.seed = o.seed;
    v.cluster_tol = o.tol.cluster;
    return v;
}

AnalysisReport command_check(const FieldModel& model, const RunOptions& options, Json doc) {
    const auto samples = phat_samples(model.dimension, options.seed);
    Json comps = Json::array();
    for (std::size_t k = 0; k < model.components.size(); ++k) {
        const ShellForm form = shell_form(model, k);
        const Component& c = model.components[k];
        const ShellConstancy sc = is_constant_on_shell(c.M, c.mass2);
        Json constancy = {{"constant", sc.constant}};
        if (sc.constant) constancy["value"] = to_string(sc.value);
        else constancy["witness"] = render(sc.witness);
        comps.push_back({{"index", k},
                         {"shell_form", shell_form_json(form)},
                         {"constancy", constancy},
                         {"root_grid", root_grid_json(form, samples, options.tol.cluster)},
                         {"factor_normalization", normalization_note(form)}});
    }
    doc["components"] = comps;

    VerdictReport verdict = covariance_and_cgma_verdict(model, verdict_options(options));
    if (options.verdict_hook) {
        options.verdict_hook(verdict);
        check_consistency(model, verdict);
    }
    doc["verdicts"] = verdicts_json(verdict);
    doc["witnesses"] = witnesses_json(verdict);
    doc["details"] = {{"duality", duality_details_json(verdict.duality)},
                      {"local_action", {{"frames_checked", verdict.local_action.frames_checked},
                                        {"notes", verdict.local_action.notes}}},
                      {"cgma", {{"basis", verdict.cgma.basis}, {"notes", verdict.cgma.notes}}}};
    doc["warnings"] = Json::array();
    for (const auto& w : verdict.duality.notes)
        if (w.rfind("no witness", 0) == 0) doc["warnings"].push_back(w);
    if (verdict.duality.degenerate_samples > 0)
        doc["warnings"].push_back(std::to_string(verdict.duality.degenerate_samples) +
                                  " degenerate phat samples skipped (vanishing top coefficient)");
    for (const auto& w : model_warnings(model)) doc["warnings"].push_back(w);
    doc["notes"] = verdict.notes;

    AnalysisReport report{std::move(doc), kExitOk};
    if (verdict.consistency == Consistency::inconsistent) {
        report.document["error"] = "internal consistency failure: verdicts disagree where they must coincide";
        report.exit_code = kExitInconsistent;
    }
    return report;
}

AnalysisReport command_orbit_duality(const FieldModel& model, const RunOptions& options, Json doc) {
    const CovarianceVerdict cov = lorentz_covariance_verdict(model);
    const DualityVerdict v = duality_verdict(model, verdict_options(options), &cov);
    doc["verdicts"] = {{"duality", to_string(v.status)}};
    doc["witnesses"] = {{"duality", duality_witness_json(v)}};
    doc["details"] = {{"duality", duality_details_json(v)}};
    return {std::move(doc), kExitOk};
}

Json factor_json(const ShellForm& form, const RationalVector& phat, const Tolerances& tol) {
    Json out = {{"phat", rationals(phat)}, {"shell_form", shell_form_json(form)}};
    RationalVector neg;
    for (const auto& x : phat) neg.push_back(-x);
    const RootProfile at = root_profile(form, phat, tol.cluster);
    if (at.degenerate) {
        out["degenerate"] = true;
        return out;
    }
    out["degenerate"] = false;
    Json clusters = Json::array();
    for (const auto& c : at.clusters)
        clusters.push_back({{"value", format_complex(c.value)}, {"multiplicity", c.multiplicity}, {"real", c.real}});
    out["roots"] = {{"classification", at.classification == RootClass::all_real ? "all_real" : "has_complex"},
                    {"clusters", clusters}};
    if (at.classification == RootClass::has_complex) out["roots"]["witness"] = format_complex(at.witness);
    const SturmCount sc = sturm_real_count(RationalUPoly(instantiate(form, phat).coefficients));
    out["sturm"] = {{"distinct_real", sc.distinct_real},
                    {"squarefree_degree", sc.squarefree_degree},
                    {"all_real", sc.all_real()}};

    const FactorPair pair = make_factor_pair(form, phat, tol.cluster);
    Json froots = Json::array();
    for (const auto& r : pair.at.roots()) froots.push_back(format_complex(r));
    Json values = Json::array();
    std::vector<double> samples;
    for (int e = -3; e <= 3; ++e) samples.push_back(std::ldexp(1.0, e));
    for (double p : {1.0, 2.0}) values.push_back({{"pplus", p}, {"F", complex_json(pair.at(p))}});
    out["factor"] = {{"n", pair.at.n()},
                     {"scalar", pair.at.scalar()},
                     {"phase", format_complex(pair.at.phase())},
                     {"roots", froots},
                     {"values", values},
                     {"symmetry_deviation", check_symmetry(pair.at, pair.mirror, samples, tol.symmetry).max_deviation},
                     {"reconstruction_error", reconstruction_error(form, pair.at, pair.mirror, samples)},
                     {"normalization", normalization_note(form)}};
    return out;
}

AnalysisReport command_factor(const FieldModel& model, const RunOptions& options, Json doc) {
    const RationalVector phat = options.phat ? parse_phat(*options.phat, model.dimension)
                                             : RationalVector(model.dimension - 2, Rational(0));
    Json comps = Json::array();
    for (std::size_t k = 0; k < model.components.size(); ++k) {
        Json c = {{"index", k}};
        c.update(factor_json(shell_form(model, k), phat, options.tol));
        comps.push_back(std::move(c));
    }
    doc["components"] = comps;
    return {std::move(doc), kExitOk};
}

Json lattice_json(const Lattice& lat) {
    return {{"pplus_points", lat.pplus_count()},
            {"log_step", lat.log_step()},
            {"pplus_min", lat.pplus(0)},
            {"phat_points", lat.phat_count()},
            {"warnings", lat.warnings()}};
}

std::shared_ptr<const Lattice> make_lattice(const ShellForm& form, const Tolerances& tol) {
    LatticeConfig config;
    config.cluster_tol = tol.cluster;
    return std::make_shared<const Lattice>(form, config);
}

AnalysisReport command_flow(const FieldModel& model, const RunOptions& options, Json doc) {
    Json comps = Json::array();
    bool pass = true;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const auto lattice = make_lattice(shell_form(model, c), options.tol);
        const Lattice& lat = *lattice;
        const int N = lat.pplus_count();
        if (std::abs(options.k) >= N) throw UsageError("--k must satisfy |k| < " + std::to_string(N));
        const int k = options.k;
        const int shifts[] = {k, -k};
        const LatticeState phi = random_state(lattice, options.seed, N / 4 + 1, 3 * N / 4 - 1, shifts);
        const double n0 = norm(phi);
        const LatticeState moved = apply_flow(phi, k);
        const double n1 = norm(moved);
        // Mass shifted off the grid when |k| exceeds the support margin.
        const bool truncated = std::abs(k) > N / 4;
        const double unitarity = std::abs(n1 / n0 - 1.0);
        LatticeState back = apply_flow(moved, -k);
        double roundtrip = 0.0;
        if (!truncated) {
            LatticeState diff = LatticeState::zero(lattice);
            for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] = back.values[i] - phi.values[i];
            roundtrip = norm(diff) / n0;
        }
        Json prefactors = Json::array();
        const int center = lat.phat_count() / 2;
        const double t = k * lat.log_step() / (2 * std::numbers::pi);
        if (!lat.degenerate(center)) {
            for (double p : {1.0, 2.0})
                for (Side side : {Side::right, Side::left})
                    prefactors.push_back({{"pplus", p},
                                          {"side", side == Side::right ? "right" : "left"},
                                          {"value", complex_json(delta_prefactor(lat.factor(center), lat.factor(center),
                                                                                 t, p, side))}});
        }
        const bool ok = truncated || (unitarity <= options.tol.flow && roundtrip <= options.tol.flow);
        pass = pass && ok;
        comps.push_back({{"index", c},
                         {"lattice", lattice_json(lat)},
                         {"k", k},
                         {"t", t},
                         {"norm_ratio", n1 / n0},
                         {"unitarity_error", unitarity},
                         {"roundtrip_error", roundtrip},
                         {"truncated", truncated},
                         {"truncated_fraction", truncated ? std::max(0.0, 1.0 - (n1 * n1) / (n0 * n0)) : 0.0},
                         {"prefactors_at_phat_origin", prefactors},
                         {"pass", ok}});
    }
    doc["components"] = comps;
    doc["pass"] = pass;
    return {std::move(doc), pass ? kExitOk : kExitNumericalFailure};
}

Json agreement_json(const PrefactorAgreement& a) {
    return {{"phat_points", a.phat_points},
            {"all_real_points", a.all_real_points},
            {"equal_prefactor_points", a.equal_prefactor_points},
            {"mismatches", a.mismatches},
            {"max_equal_deviation", a.max_equal_deviation},
            {"min_unequal_deviation", a.min_unequal_deviation}};
}

AnalysisReport command_conjugate(const FieldModel& model, const RunOptions& options, Json doc) {
    Json comps = Json::array();
    bool pass = true;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const auto lattice = make_lattice(shell_form(model, c), options.tol);
        const Lattice& lat = *lattice;
        const int N = lat.pplus_count();
        const LatticeState phi = random_state(lattice, options.seed, N / 4 + 1, 3 * N / 4 - 1);
        const LatticeState psi = random_state(lattice, options.seed + 1, N / 4 + 1, 3 * N / 4 - 1);
        Json sides = Json::object();
        for (Side side : {Side::right, Side::left}) {
            const LatticeState jphi = apply_conjugation(phi, side);
            const double anti = std::abs(inner_product(jphi, apply_conjugation(psi, side)) -
                                         std::conj(inner_product(phi, psi))) / (norm(phi) * norm(psi));
            LatticeState diff = apply_conjugation(jphi, side);
            for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= phi.values[i];
            const double inv = norm(diff) / norm(phi);
            pass = pass && anti <= options.tol.conjugation && inv <= options.tol.conjugation;
            Json samples = Json::array();
            const int center = lat.phat_count() / 2;
            if (!lat.degenerate(center))
                for (double p : {1.0, 2.0})
                    samples.push_back({{"pplus", p},
                                       {"value", complex_json(j_prefactor(lat.factor(center), lat.factor(center), p, side))}});
            sides[side == Side::right ? "right" : "left"] = {
                {"antiunitarity_error", anti}, {"involution_error", inv}, {"prefactors_at_phat_origin", samples}};
        }
        const PrefactorAgreement agreement = prefactor_agreement(lat, options.tol.prefactor);
        pass = pass && agreement.mismatches == 0;
        comps.push_back({{"index", c}, {"lattice", lattice_json(lat)}, {"sides", sides}, {"right_equals_left", agreement_json(agreement)}});
    }
    doc["components"] = comps;
    doc["pass"] = pass;
    return {std::move(doc), pass ? kExitOk : kExitNumericalFailure};
}

AnalysisReport command_verify(const FieldModel& model, const RunOptions& options, Json doc) {
    Json comps = Json::array();
    bool pass = true;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const auto lattice = make_lattice(shell_form(model, c), options.tol);
        const SuiteReport suite = run_numerical_suite(lattice, options.tol, options.seed);
        Json checks = Json::array();
        for (const auto& chk : suite.checks)
            checks.push_back({{"name", chk.name}, {"value", chk.value}, {"tolerance", chk.tolerance}, {"pass", chk.pass}});
        pass = pass && suite.pass();
        comps.push_back({{"index", c},
                         {"lattice", lattice_json(*lattice)},
                         {"min_weight", suite.min_weight},
                         {"checks", checks},
                         {"right_equals_left", agreement_json(suite.prefactors)},
                         {"pass", suite.pass()}});
    }
    doc["components"] = comps;
    doc["pass"] = pass;
    return {std::move(doc), pass ? kExitOk : kExitNumericalFailure};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

std::string check_text(const Json& doc) {
    std::ostringstream os;
    const Json& v = doc["verdicts"];
    auto row = [&](const char* name, const std::string& value) {
        const bool fails = value == "fails" || value == "nonconstant";
        std::string detail = value == "fails" ? "" : value;
        if (auto open = value.find('('); open != std::string::npos && value.compare(0, 5, "holds") == 0)
            detail = value.substr(open + 1, value.size() - open - 2);
        os << std::left;
        os.width(20);
        os << name;
        os.width(7);
        os << (fails ? "fails" : "holds") << detail << '\n';
    };
    row("duality", v["duality"].get<std::string>());
    row("local_action", v["local_action"].get<std::string>());
    row("lorentz_covariance", v["lorentz_covariance"].get<std::string>());
    row("cgma", v["cgma"].get<std::string>());
    os << "\nconsistency: " << v["consistency"].get<std::string>() << '\n';
    const Json& w = doc["witnesses"];
    if (!w["duality"].is_null()) {
        const Json& d = w["duality"];
        std::string phat;
        for (const auto& x : d["phat"]) phat += (phat.empty() ? "" : ",") + x.get<std::string>();
        os << "duality witness: frame " << d["frame"].get<std::string>() << ", phat=(" << phat << "), root "
           << d["root"].get<std::string>() << '\n';
    }
    if (!w["local_action"].is_null())
        os << "local action witness: frame " << w["local_action"]["frame"].get<std::string>() << ", Q = "
           << w["local_action"]["Q"].get<std::string>() << '\n';
    if (!w["lorentz_covariance"].is_null())
        os << "covariance witness: " << w["lorentz_covariance"]["obstruction"].get<std::string>() << '\n';
    for (const auto& c : doc["components"])
        os << "component " << c["index"].get<int>() << ": n=" << c["shell_form"]["n"].get<int>()
           << ", Q = " << c["shell_form"]["Q"].get<std::string>() << '\n';
    for (const auto& n : doc["details"]["cgma"]["notes"]) os << "note: " << n.get<std::string>() << '\n';
    for (const auto& n : doc["notes"]) os << "note: " << n.get<std::string>() << '\n';
    for (const auto& n : doc["warnings"]) os << "warning: " << n.get<std::string>() << '\n';
    if (doc.contains("error")) os << "error: " << doc["error"].get<std::string>() << '\n';
    return os.str();
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> list{"check", "factor", "flow", "conjugate", "verify", "orbit-duality"};
    return list;
}

RationalVector parse_phat(std::string_view text, int dimension) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')' || c == '[' || c == ']'; }),
            s.end());
    RationalVector out;
    if (!s.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = s.find(',', start);
            const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                out.push_back(parse_rational(part));
            } catch (const ParseError& e) {
                throw UsageError("malformed --phat vector: " + std::string(e.what()));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (static_cast<int>(out.size()) != dimension - 2)
        throw UsageError("--phat needs " + std::to_string(dimension - 2) + " components, got " +
                         std::to_string(out.size()));
    return out;
}

AnalysisReport run(const std::filesystem::path& model_path, const RunOptions& options) {
    if (std::find(commands().begin(), commands().end(), options.command) == commands().end())
        throw UsageError("unknown command '" + options.command + "'");
    try {
        const FieldModel model = load_model(model_path);
        return run(model, options);
    } catch (const ModelRejected& e) {
        Json doc = header(options.command, options);
        doc["error"] = "model rejected";
        doc["violations"] = e.violations();
        return {std::move(doc), kExitModelRejected};
    } catch (const ModelError& e) {
        Json doc = header(options.command, options);
        doc["error"] = "model rejected";
        doc["violations"] = Json::array({e.what()});
        return {std::move(doc), kExitModelRejected};
    }
}

AnalysisReport run(const FieldModel& model, const RunOptions& options) {
    const std::string& cmd = options.command;
    if (std::find(commands().begin(), commands().end(), cmd) == commands().end())
        throw UsageError("unknown command '" + cmd + "'");
    if (options.depth < 0) throw UsageError("--depth must be nonnegative");
    Json doc = header(cmd, options);
    doc["model"] = model_json(model);
    if (cmd == "check") return command_check(model, options, std::move(doc));
    if (cmd == "orbit-duality") return command_orbit_duality(model, options, std::move(doc));
    if (cmd == "factor") return command_factor(model, options, std::move(doc));
    if (cmd == "flow") return command_flow(model, options, std::move(doc));
    if (cmd == "conjugate") return command_conjugate(model, options, std::move(doc));
    return command_verify(model, options, std::move(doc));
}

std::string emit(const AnalysisReport& report, OutputFormat format) {
    if (format == OutputFormat::json) return report.document.dump(2) + "\n";
    const Json& doc = report.document;
    if (doc.value("command", "") == "check" && doc.contains("verdicts")) return check_text(doc);
    std::ostringstream os;
    flatten(doc, "", os);
    return os.str();
}

void emit(const AnalysisReport& report, OutputFormat format, const std::optional<std::filesystem::path>& path) {
    const std::string text = emit(report, format);
    if (!path || path->empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw Error("cannot open " + path->string() + " for writing");
    out << text;
    if (!out) throw Error("write to " + path->string() + " failed");
}

}  // namespace gffmod
