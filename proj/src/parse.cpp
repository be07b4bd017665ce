#include "evolab/parse.hpp"

#include <cctype>

namespace evolab {

namespace {

bool is_symbol_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class EntryParser {
public:
    EntryParser(const std::string& s, const std::set<std::string>* allowed)
        : s_(s), allowed_(allowed) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected input", pos_);
        return p;
    }

private:
    const std::string& s_;
    const std::set<std::string>* allowed_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (peek() == '^') {
            ++pos_;
            base = base.pow(posint());
        }
        return base;
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (is_symbol_start(c)) return symbol();
        throw ParseError("expected literal, symbol or '('", pos_);
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return Integer(s_.substr(start, pos_ - start));
    }

    std::uint32_t posint() {
        Integer n = digits();
        if (n < 1 || n > 100000) throw ParseError("exponent out of range", pos_);
        return static_cast<std::uint32_t>(n.get_ui());
    }

    // digits ['/' digits] ['i'], with the 'i' suffix taken only when it is
    // not the start of a longer identifier.
    Polynomial literal() {
        Integer num = digits();
        Integer den = 1;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            den = digits();
            if (den == 0) throw ParseError("zero denominator", pos_);
        }
        Rational q(num, den);
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            (pos_ + 1 == s_.size() || !is_symbol_char(s_[pos_ + 1]))) {
            ++pos_;
            return Polynomial::constant(GaussianRational(Rational(0), q));
        }
        return Polynomial::constant(GaussianRational(q));
    }

    Polynomial symbol() {
        skip_ws();
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < s_.size() && is_symbol_char(s_[pos_])) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name == "i") return Polynomial::constant(GaussianRational::i());
        if (allowed_ && !allowed_->count(name))
            throw ParseError("undeclared symbol '" + name + "'", start);
        return Polynomial::variable(name);
    }
};

} // namespace

Polynomial parse_entry(const std::string& s, const std::set<std::string>* allowed_symbols) {
    return EntryParser(s, allowed_symbols).run();
}

GaussianRational parse_gaussian(const std::string& s) {
    static const std::set<std::string> none;
    return parse_entry(s, &none).constant_value();
}

} // namespace evolab
