#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "holo/error.hpp"
#include "holo/expr.hpp"

namespace holo {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    HoloExpr parse_all()
    {
        HoloExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

    cplx complex_all()
    {
        const cplx c = complex_literal();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters after complex literal");
        return c;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_identifier(std::string_view word)
    {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        return end == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
    }

    bool at_number()
    {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    double number()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (token.empty() || end != token.c_str() + token.size()) {
            pos_ = start;
            fail("malformed number");
        }
        return value;
    }

    // number ['i'] | 'i'
    cplx imaginary_or_real()
    {
        if (at_identifier("i")) {
            ++pos_;
            return {0.0, 1.0};
        }
        if (!at_number()) fail("expected a number");
        const double value = number();
        if (pos_ < text_.size() && text_[pos_] == 'i' &&
            (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return {0.0, value};
        }
        return {value, 0.0};
    }

    // ['+'|'-'] term [('+'|'-') imaginary-term]
    cplx complex_literal()
    {
        double sign = 1.0;
        if (accept('-')) sign = -1.0;
        else accept('+');
        cplx value = sign * imaginary_or_real();
        if (value.imag() == 0.0 && (peek('+') || peek('-'))) {
            const std::size_t save = pos_;
            const double s = text_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
            const cplx im = imaginary_or_real();
            if (im.real() != 0.0 || im.imag() == 0.0) {
                pos_ = save;
                fail("expected imaginary part");
            }
            value += s * im;
        }
        return value;
    }

    double real_literal()
    {
        double sign = 1.0;
        if (accept('-')) sign = -1.0;
        else accept('+');
        if (!at_number()) fail("expected a real number");
        const double value = number();
        if (pos_ < text_.size() && text_[pos_] == 'i') fail("expected a real number");
        return sign * value;
    }

    // printed complex constants come back as a + bi; fold them into one literal
    static HoloExpr sum(const HoloExpr& a, const HoloExpr& b)
    {
        if (a.is_constant() && b.is_constant()) return HoloExpr::constant(a.constant_value() + b.constant_value());
        return HoloExpr::add(a, b);
    }

    static HoloExpr negated(const HoloExpr& a)
    {
        return a.is_constant() ? HoloExpr::constant(-a.constant_value()) : HoloExpr::neg(a);
    }

    HoloExpr expr()
    {
        HoloExpr lhs = term();
        for (;;) {
            if (accept('+')) lhs = sum(lhs, term());
            else if (accept('-')) lhs = sum(lhs, negated(term()));
            else return lhs;
        }
    }

    HoloExpr term()
    {
        HoloExpr lhs = factor();
        for (;;) {
            if (accept('*')) lhs = HoloExpr::mul(lhs, factor());
            else if (accept('/')) lhs = HoloExpr::div(lhs, factor());
            else return lhs;
        }
    }

    HoloExpr factor()
    {
        if (accept('-')) return negated(factor());
        HoloExpr b = base();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_ || (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e'))) {
                pos_ = start;
                fail("exponent must be a nonnegative integer literal");
            }
            unsigned k = 0;
            const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
            if (ec != std::errc{} || k > 4096) {
                pos_ = start;
                fail("exponent out of range");
            }
            return HoloExpr::pow(b, k);
        }
        return b;
    }

    HoloExpr base()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            HoloExpr inner = expr();
            expect(')');
            return inner;
        }
        if (at_identifier("blaschke")) {
            const std::size_t start = pos_;
            pos_ += 8;
            expect('(');
            const cplx a = complex_literal();
            expect(',');
            const double r = real_literal();
            expect(')');
            try {
                return HoloExpr::blaschke(a, r);
            } catch (const Error& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (at_identifier("z")) {
            ++pos_;
            return HoloExpr::z();
        }
        if (at_number() || at_identifier("i")) return HoloExpr::constant(imaginary_or_real());
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

HoloExpr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

cplx parse_complex(std::string_view text)
{
    return Parser(text).complex_all();
}

}  // namespace holo
