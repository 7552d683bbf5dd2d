#include <gffmod/app.hpp>
#include <gffmod/error.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace gffmod;

    CLI::App app{"Wedge duality, modular action and Lorentz covariance of generalized free fields"};
    app.set_version_flag("--version", GFFMOD_TOOL_VERSION);

    RunOptions options;
    std::string model_path;
    std::string format = "json";
    std::string out_path;
    std::string phat;

    app.add_option("command", options.command, "check | factor | flow | conjugate | verify | orbit-duality")
        ->required()
        ->check(CLI::IsMember(commands()));
    app.add_option("model", model_path, "Model file (JSON)")->required();
    app.add_option("--phat", phat, "Transverse momentum for `factor`, e.g. 0,1 or 1/2,-1");
    app.add_option("--k", options.k, "Lattice flow shift for `flow`")->capture_default_str();
    app.add_option("--depth", options.depth, "Lorentz orbit depth")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--seed", options.seed, "Seed for the random phat samples and lattice states")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", out_path, "Write the report here instead of stdout");

    Tolerances& tol = options.tol;
    app.add_option("--tol-cluster", tol.cluster, "Root clustering tolerance")->capture_default_str();
    app.add_option("--tol-flow", tol.flow, "Flow unitarity tolerance")->capture_default_str();
    app.add_option("--tol-group-law", tol.group_law, "Flow group law tolerance")->capture_default_str();
    app.add_option("--tol-conjugation", tol.conjugation, "Conjugation tolerance")->capture_default_str();
    app.add_option("--tol-s-identity", tol.s_identity, "s-identity tolerance")->capture_default_str();
    app.add_option("--tol-borchers", tol.borchers, "Borchers commutation tolerance")->capture_default_str();
    app.add_option("--tol-prefactor", tol.prefactor, "Right/left conjugation prefactor equality")->capture_default_str();
    app.add_option("--tol-symmetry", tol.symmetry, "Factor symmetry and reconstruction tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (!phat.empty()) options.phat = phat;

    try {
        const AnalysisReport report = run(model_path, options);
        std::optional<std::filesystem::path> out;
        if (!out_path.empty()) out = out_path;
        emit(report, format == "text" ? OutputFormat::text : OutputFormat::json, out);
        if (report.exit_code == kExitModelRejected)
            for (const auto& v : report.document["violations"]) std::cerr << "gffmod: " << v.get<std::string>() << '\n';
        return report.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "gffmod: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "gffmod: numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const Error& e) {
        std::cerr << "gffmod: " << e.what() << '\n';
        return kExitUsage;
    }
}
