#pragma once

#include "gffmod/error.hpp"
#include "gffmod/polynomial.hpp"
#include "gffmod/rational.hpp"
#include "gffmod/shell.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gffmod {

// One mass of the discrete Lehmann measure.
struct Component {
    Rational weight;
    Rational mass2;
    Polynomial M{1};
    std::string source;  // M as written in the model file
};

struct FieldModel {
    int dimension = 0;
    std::vector<Component> components;
};

// Raised when a model violates its invariants; what() joins every violation.
class ModelRejected : public ModelError {
public:
    explicit ModelRejected(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

// {"dimension": d, "components": [{"weight": "1", "mass2": "1", "M": "p0^2"}]}
// Rationals are strings ("3/4"); M uses the polynomial grammar with variables
// p0 .. p{d-1}. Throws ModelError on schema problems and ModelRejected on
// invariant violations.
FieldModel parse_model(std::string_view json_text);
FieldModel load_model(const std::filesystem::path& path);

// Every violated invariant, empty for a valid model: evenness, nonnegativity
// on sample points of the shell, nonvanishing on the shell, positive weights.
std::vector<std::string> validate(const FieldModel& model);

// Valid but outside the regime the verdicts are designed for (d = 2, m = 0).
std::vector<std::string> model_warnings(const FieldModel& model);

ShellForm shell_form(const FieldModel& model, std::size_t component);

}  // namespace gffmod
