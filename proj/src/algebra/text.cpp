#include "pfzero/algebra/text.hpp"

#include "pfzero/errors.hpp"

#include <cctype>
#include <string>

namespace pfzero::algebra {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MultiPoly parse() {
        MultiPoly out;
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        for (;;) {
            MultiPoly t = parse_term();
            out += neg ? -t : t;
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
            neg = c == '-';
            ++pos_;
        }
        return out;
    }

private:
    MultiPoly parse_term() {
        Rational coef(1);
        Monomial mono;
        parse_factor(coef, mono);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            parse_factor(coef, mono);
        }
        return MultiPoly::term(mono, coef);
    }

    void parse_factor(Rational& coef, Monomial& mono) {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "expected a coefficient or variable");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_int();
            Integer den(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                den = parse_int();
                if (den == 0) throw ParseError(at, "zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            coef *= q;
            return;
        }
        Var v;
        switch (c) {
        case 'x': v = Var::x; break;
        case 'y': v = Var::y; break;
        case 't': v = Var::t; break;
        default: throw ParseError(pos_, std::string("unexpected '") + c + "'");
        }
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const std::size_t at = pos_;
            Integer big = parse_int();
            if (!big.fits_sint_p() || big > 100000) throw ParseError(at, "exponent too large");
            e = static_cast<int>(big.get_si());
        }
        mono[v] += e;
    }

    Integer parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError(0, "empty number");
    if (s.find_first_of(".eE") == std::string::npos) {
        try {
            Rational q(s, 10);
            if (q.get_den() == 0) throw ParseError(0, "zero denominator");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw ParseError(0, "malformed rational '" + s + "'");
        }
    }
    // Decimal notation: mantissa with optional fraction and exponent.
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    int frac = 0;
    bool seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw ParseError(i, "second decimal point");
            seen_dot = true;
        } else {
            digits.push_back(s[i]);
            if (seen_dot) ++frac;
        }
    }
    if (digits.empty()) throw ParseError(i, "expected digits");
    long exp10 = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw ParseError(i, "unexpected character");
        ++i;
        try {
            std::size_t used = 0;
            exp10 = std::stol(s.substr(i), &used);
            if (i + used != s.size()) throw ParseError(i + used, "trailing characters");
        } catch (const std::logic_error&) {
            throw ParseError(i, "malformed exponent");
        }
    }
    exp10 -= frac;
    Integer num(digits, 10), den(1), ten(10);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0) num *= p; else den = p;
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

} // namespace pfzero::algebra
