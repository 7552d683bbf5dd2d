#include "gffmod/parser.hpp"

#include "gffmod/error.hpp"

#include <algorithm>
#include <cctype>

namespace gffmod {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {
        if (names_.empty()) throw DimensionError("parser needs at least one variable");
    }

    Polynomial parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Polynomial result = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

private:
    int dimension() const { return static_cast<int>(names_.size()); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Polynomial divisor = unary();
                if (!divisor.is_constant()) throw ParseError("division by a non-constant expression", at);
                const Rational c = divisor.constant_term();
                if (c == 0) throw ParseError("division by zero", at);
                acc = acc * Rational(1 / c);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        Polynomial exponent = unary();
        if (!exponent.is_constant()) throw ParseError("exponent is not a nonnegative integer", at);
        const Rational e = exponent.constant_term();
        if (e < 0 || e.get_den() != 1) throw ParseError("exponent is not a nonnegative integer", at);
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }

    Polynomial primary() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
            return Polynomial::constant(dimension(), Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
            return Polynomial::variable(dimension(), static_cast<int>(it - names_.begin()));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view expr, int dimension) {
    if (dimension < 1) throw DimensionError("dimension must be positive");
    const auto names = default_variable_names(dimension);
    return Parser(expr, names).parse();
}

Polynomial parse_polynomial(std::string_view expr, std::span<const std::string> names) {
    return Parser(expr, names).parse();
}

}  // namespace gffmod
