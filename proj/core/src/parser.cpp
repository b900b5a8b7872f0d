#include "hc/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "hc/poly.hpp"

namespace hc {

namespace {

constexpr int kDegreeCap = 512;

// Rational expression value carried through the parse: num/den coefficient
// pairs in ascending powers. Denominators stay polynomial throughout.
struct Rat {
    std::vector<cx> num;
    std::vector<cx> den;
};

Rat make_const(cx v) { return Rat{{v}, {cx{1.0, 0.0}}}; }

class Parser {
public:
    Parser(const std::string& text, const std::map<char, cx>& bindings)
        : text_(text), bindings_(bindings) {}

    Rat parse() {
        Rat r = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    const std::string& text_;
    const std::map<char, cx>& bindings_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void check_degree(const Rat& r) {
        if (poly::degree(r.num) > kDegreeCap || poly::degree(r.den) > kDegreeCap)
            throw ParseError("polynomial degree cap exceeded", pos_);
    }

    Rat expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Rat acc = term();
        if (negate)
            acc.num = poly::scale(acc.num, cx{-1.0, 0.0});
        while (true) {
            if (accept('+')) {
                acc = add(acc, term(), false);
            } else if (accept('-')) {
                acc = add(acc, term(), true);
            } else {
                break;
            }
        }
        return acc;
    }

    Rat term() {
        Rat acc = factor();
        while (true) {
            if (accept('*')) {
                acc = mul(acc, factor());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Rat rhs = factor();
                if (poly::is_zero(rhs.num))
                    throw ParseError("division by the zero polynomial", at);
                acc = mul(acc, Rat{rhs.den, rhs.num});
            } else {
                break;
            }
        }
        return acc;
    }

    Rat factor() {
        Rat b = base();
        if (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("exponent must be a nonnegative integer", at);
            unsigned e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
                if (e > static_cast<unsigned>(kDegreeCap))
                    throw ParseError("exponent too large", at);
                ++pos_;
            }
            Rat powd{poly::pow(b.num, e), poly::pow(b.den, e)};
            check_degree(powd);
            return powd;
        }
        return b;
    }

    Rat base() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Rat inner = expr();
            if (accept(',')) {
                Rat im = expr();
                const cx re_v = const_value(inner, "real part of a complex literal");
                const cx im_v = const_value(im, "imaginary part of a complex literal");
                if (re_v.imag() != 0.0 || im_v.imag() != 0.0)
                    throw ParseError("complex tuple components must be real", pos_);
                if (!accept(')'))
                    throw ParseError("expected ')'", pos_);
                return make_const(cx{re_v.real(), im_v.real()});
            }
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c == 'z') {
            ++pos_;
            return Rat{{cx{0.0, 0.0}, cx{1.0, 0.0}}, {cx{1.0, 0.0}}};
        }
        if (c == 'i') {
            ++pos_;
            return make_const(cx{0.0, 1.0});
        }
        if (auto it = bindings_.find(c); it != bindings_.end()) {
            ++pos_;
            return make_const(it->second);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Rat number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ == start)
            throw ParseError("expected a number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent
            }
        }
        const double v = std::strtod(text_.c_str() + start, nullptr);
        // A number immediately followed by 'i' is an imaginary literal.
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return make_const(cx{0.0, v});
        }
        return make_const(cx{v, 0.0});
    }

    cx const_value(const Rat& r, const char* what) {
        if (poly::degree(r.num) > 0 || poly::degree(r.den) > 0)
            throw ParseError(std::string(what) + " must be constant", pos_);
        return r.num.empty() ? cx{0.0, 0.0} : r.num[0] / r.den[0];
    }

    Rat add(Rat a, Rat b, bool subtract) {
        // a/da +- b/db = (a*db +- b*da) / (da*db); keep a shared denominator
        // when both sides already agree to avoid needless degree growth.
        Rat r;
        if (poly::degree(a.den) == poly::degree(b.den) &&
            poly::max_abs_coeff(poly::sub(a.den, b.den)) == 0.0) {
            r.den = a.den;
            r.num = subtract ? poly::sub(a.num, b.num) : poly::add(a.num, b.num);
        } else {
            const std::vector<cx> left = poly::mul(a.num, b.den);
            const std::vector<cx> right = poly::mul(b.num, a.den);
            r.num = subtract ? poly::sub(left, right) : poly::add(left, right);
            r.den = poly::mul(a.den, b.den);
        }
        check_degree(r);
        return r;
    }

    Rat mul(Rat a, Rat b) {
        Rat r{poly::mul(a.num, b.num), poly::mul(a.den, b.den)};
        check_degree(r);
        return r;
    }
};

} // namespace

Symbol parse_symbol(const std::string& text, double eps_boundary,
                    const std::map<char, cx>& bindings) {
    Parser parser(text, bindings);
    Rat r = parser.parse();
    return Symbol(std::move(r.num), std::move(r.den), eps_boundary);
}

} // namespace hc
