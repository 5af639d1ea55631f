#include "wco/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace wco {

namespace {

class Parser {
  public:
    Parser(const std::string& text, int order) : text_(text), order_(order) {}

    TruncatedSeries run() {
        TruncatedSeries out = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expr: " + what + " at position " +
                                    std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    TruncatedSeries parse_sum() {
        TruncatedSeries acc = parse_product();
        while (true) {
            if (eat('+')) acc = series_add(acc, parse_product());
            else if (eat('-')) acc = series_sub(acc, parse_product());
            else return acc;
        }
    }

    TruncatedSeries parse_product() {
        TruncatedSeries acc = parse_unary();
        while (true) {
            if (eat('*')) acc = series_mul(acc, parse_unary());
            else if (eat('/')) acc = series_div(acc, parse_unary());
            else return acc;
        }
    }

    TruncatedSeries parse_unary() {
        if (eat('-')) return series_scale(-1.0, parse_unary());
        return parse_power();
    }

    TruncatedSeries parse_power() {
        TruncatedSeries base = parse_primary();
        if (eat('^')) {
            skip_space();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected a non-negative integer exponent");
            base = series_pow(base, std::atoi(text_.substr(start, pos_ - start).c_str()));
        }
        return base;
    }

    TruncatedSeries parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TruncatedSeries inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
        fail("unexpected character");
    }

    TruncatedSeries parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        const double v = std::strtod(text_.substr(start, pos_ - start).c_str(), nullptr);
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return TruncatedSeries::constant(Complex(0.0, v), order_);
        }
        return TruncatedSeries::constant(v, order_);
    }

    TruncatedSeries parse_word() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string word = text_.substr(start, pos_ - start);
        if (word == "z") return TruncatedSeries::monomial(order_ >= 1 ? 1 : 0, order_);
        if (word == "i") return TruncatedSeries::constant(Complex(0.0, 1.0), order_);
        if (word == "pi") return TruncatedSeries::constant(M_PI, order_);
        if (word == "exp" || word == "sin" || word == "cos" || word == "log") {
            if (!eat('(')) fail("expected '(' after function name");
            TruncatedSeries arg = parse_sum();
            if (!eat(')')) fail("expected ')'");
            if (word == "exp") return series_exp(arg);
            if (word == "sin") return series_sin(arg);
            if (word == "cos") return series_cos(arg);
            return series_log(arg);
        }
        fail("unknown identifier '" + word + "'");
    }

    const std::string& text_;
    int order_;
    size_t pos_ = 0;
};

} // namespace

TruncatedSeries parse_symbol_series(const std::string& text, int order) {
    if (order < 1)
        throw std::invalid_argument("expr: order must be at least 1");
    return Parser(text, order).run();
}

} // namespace wco
