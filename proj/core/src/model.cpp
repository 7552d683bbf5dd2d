#include "gffmod/model.hpp"

#include "gffmod/error.hpp"
#include "gffmod/parser.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace gffmod {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

std::string vector_string(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

// Rational string field; numbers are accepted only when integral.
Rational rational_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ModelError(where + ": missing \"" + key + "\"");
    const auto& v = obj.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ModelError(where + ": \"" + key + "\" must be a rational string such as \"3/4\"");
}

// Shell chart sample points for the positivity check.
std::vector<RationalVector> positivity_phats(int axes) {
    const RationalVector values{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                Rational(2), Rational(-2)};
    std::vector<RationalVector> out;
    std::size_t count = 1;
    for (int a = 0; a < axes; ++a) count *= values.size();
    for (std::size_t j = 0; j < count; ++j) {
        RationalVector p(axes);
        std::size_t rest = j;
        for (int a = axes - 1; a >= 0; --a, rest /= values.size()) p[a] = values[rest % values.size()];
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

ModelRejected::ModelRejected(std::vector<std::string> violations)
    : ModelError("model rejected: " + join(violations)), violations_(std::move(violations)) {}

FieldModel parse_model(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError(std::string("model is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ModelError("model must be a JSON object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw ModelError("model: \"dimension\" must be an integer");
    if (!doc.contains("components") || !doc["components"].is_array() || doc["components"].empty())
        throw ModelError("model: \"components\" must be a nonempty array");

    FieldModel model;
    model.dimension = doc["dimension"].get<int>();
    if (model.dimension < 2) throw ModelError("model: dimension must be at least 2");

    std::vector<std::string> problems;
    int index = 0;
    for (const auto& c : doc["components"]) {
        const std::string where = "component " + std::to_string(index++);
        if (!c.is_object()) {
            problems.push_back(where + ": must be an object");
            continue;
        }
        try {
            Component comp;
            comp.weight = c.contains("weight") ? rational_field(c, "weight", where) : Rational(1);
            comp.mass2 = rational_field(c, "mass2", where);
            if (!c.contains("M") || !c["M"].is_string()) throw ModelError(where + ": \"M\" must be a string");
            comp.source = c["M"].get<std::string>();
            comp.M = parse_polynomial(comp.source, model.dimension);
            model.components.push_back(std::move(comp));
        } catch (const ParseError& e) {
            problems.push_back(where + ": " + e.what());
        } catch (const ModelError& e) {
            problems.push_back(e.what());
        }
    }
    if (!problems.empty()) throw ModelRejected(std::move(problems));

    auto violations = validate(model);
    if (!violations.empty()) throw ModelRejected(std::move(violations));
    return model;
}

FieldModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot read model file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str());
}

std::vector<std::string> validate(const FieldModel& model) {
    std::vector<std::string> out;
    if (model.dimension < 2) out.push_back("dimension must be at least 2");
    if (model.components.empty()) out.push_back("model has no components");
    const std::vector<Rational> pplus_points{Rational(1), Rational(2), Rational(1, 2), Rational(4), Rational(1, 4)};
    const auto phats = positivity_phats(model.dimension - 2);

    for (std::size_t k = 0; k < model.components.size(); ++k) {
        const Component& c = model.components[k];
        const std::string where = "component " + std::to_string(k);
        if (c.weight <= 0) out.push_back(where + ": weight must be positive");
        if (c.mass2 < 0) out.push_back(where + ": mass2 must be nonnegative");
        if (c.M.dimension() != model.dimension) {
            out.push_back(where + ": M has the wrong number of variables");
            continue;
        }
        if (!is_even(c.M)) {
            out.push_back(where + ": M is not even under p -> -p");
            continue;
        }
        if (c.mass2 < 0) continue;

        const ShellReduction red = reduce_mod_shell(c.M, c.mass2);
        if (red.r0.is_zero() && red.r1.is_zero()) {
            out.push_back(where + ": M vanishes identically on the mass shell");
            continue;
        }
        bool negative = false;
        for (const auto& phat : phats) {
            for (const auto& pp : pplus_points) {
                const RationalVector point = shell_point(pp, phat, c.mass2);
                if (evaluate(c.M, point) < 0) {
                    out.push_back(where + ": M is negative on the mass shell at phat=" + vector_string(phat) +
                                  ", p+=" + to_string(pp));
                    negative = true;
                    break;
                }
            }
            if (negative) break;
        }
    }
    return out;
}

std::vector<std::string> model_warnings(const FieldModel& model) {
    std::vector<std::string> out;
    if (model.dimension != 2) return out;
    for (std::size_t k = 0; k < model.components.size(); ++k)
        if (model.components[k].mass2 == 0)
            out.push_back("component " + std::to_string(k) +
                          ": d=2 with m=0, the shell degenerates to two light rays; verdicts are polynomial-level only");
    return out;
}

ShellForm shell_form(const FieldModel& model, std::size_t component) {
    const Component& c = model.components.at(component);
    return to_shell_form(c.M, c.mass2);
}

}  // namespace gffmod
