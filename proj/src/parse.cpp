#include "factcert/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace factcert {

namespace {

constexpr long kMaxExponent = 1000000;

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // Current character with the UTF-8 minus sign folded to '-'.
    char peek() {
        if (done()) return '\0';
        if (text_.compare(pos_, 3, "\xe2\x88\x92") == 0) return '-';
        return text_[pos_];
    }

    void advance() {
        if (done()) return;
        pos_ += text_.compare(pos_, 3, "\xe2\x88\x92") == 0 ? 3 : 1;
    }

    bool eat(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    std::string digits() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            ++pos_;
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
    Scanner s(text);
    std::map<long, Int> terms;
    bool first = true;
    s.skip_space();
    if (s.done()) throw ParseError("empty input", 0);
    while (true) {
        s.skip_space();
        if (s.done()) break;

        // Separator (optional sign on the very first term).
        int sign = 1;
        if (s.eat('+')) {
            sign = 1;
        } else if (s.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", s.pos());
        }
        s.skip_space();
        // A sign directly on the coefficient is also allowed.
        if (s.eat('-')) {
            sign = -sign;
            s.skip_space();
        } else if (s.eat('+')) {
            s.skip_space();
        }

        Int coeff = 1;
        bool saw_number = false;
        std::string num = s.digits();
        if (!num.empty()) {
            coeff = Int(num);
            saw_number = true;
            s.skip_space();
            if (s.eat('*')) s.skip_space();
        }

        long exponent = 0;
        if (s.eat('x')) {
            exponent = 1;
            s.skip_space();
            if (s.eat('^')) {
                s.skip_space();
                std::size_t at = s.pos();
                std::string e = s.digits();
                if (e.empty()) throw ParseError("expected exponent after '^'", at);
                if (e.size() > 7) throw ParseError("exponent too large", at);
                exponent = std::stol(e);
                if (exponent > kMaxExponent) throw ParseError("exponent too large", at);
            }
        } else if (!saw_number) {
            throw ParseError("expected a coefficient or 'x'", s.pos());
        }

        terms[exponent] += sign * coeff;
        first = false;
    }
    if (first) throw ParseError("empty input", s.pos());

    long top = terms.empty() ? -1 : terms.rbegin()->first;
    std::vector<Int> coeffs(static_cast<std::size_t>(top) + 1, Int(0));
    for (auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e)] = std::move(c);
    return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Int& c = f.coeff(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        Int mag = abs(c);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "x";
            if (i != 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace factcert
