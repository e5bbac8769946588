#include "tsurf/core/parse.hpp"

#include <cctype>

namespace tsurf {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Ring& ring) : s_(s), ring_(ring) {}

    Polynomial run() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        bool neg = accept('-');
        if (!neg) accept('+');
        Polynomial t = term();
        acc += neg ? -t : t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Integer uint_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    int exponent(bool allow_negative) {
        skip();
        std::size_t at = pos_;
        bool neg = accept('-');
        if (neg && !allow_negative) throw ParseError("negative exponent not allowed here", at);
        Integer k = uint_literal();
        if (k > 1000000) throw ParseError("exponent too large", at);
        int e = static_cast<int>(k.get_si());
        return neg ? -e : e;
    }

    Polynomial factor() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            if (accept('^')) return inner.pow(static_cast<unsigned>(exponent(false)));
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint_literal();
            Integer den = 1;
            if (accept('/')) {
                std::size_t at = pos_;
                den = uint_literal();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = ring_.find(name);
            if (!idx) throw ParseError("undeclared identifier '" + name + "'", start);
            Exponents e(ring_.size(), 0);
            e[*idx] = 1;
            if (accept('^')) {
                std::size_t at = pos_;
                e[*idx] = exponent(true);
                if (e[*idx] < 0 && !ring_.invertible(*idx))
                    throw ParseError("negative power of non-invertible '" + name + "'", at);
            }
            return Polynomial::monomial(ring_, e);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace tsurf
