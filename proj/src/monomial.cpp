#include "evolab/monomial.hpp"

#include <algorithm>
#include <map>

namespace evolab {

Monomial Monomial::var(const std::string& name, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.exps_.emplace_back(name, exp);
    return m;
}

Monomial Monomial::from_pairs(Exps pairs) {
    std::map<std::string, std::uint64_t> acc;
    for (auto& [name, e] : pairs) acc[name] += e;
    Monomial m;
    for (auto& [name, e] : acc)
        if (e > 0) m.exps_.emplace_back(name, static_cast<std::uint32_t>(e));
    return m;
}

std::uint32_t Monomial::degree_of(const std::string& name) const {
    for (auto& [n, e] : exps_)
        if (n == name) return e;
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [n, e] : exps_) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            r.exps_.push_back(*ia++);
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            r.exps_.push_back(*ib++);
        } else {
            r.exps_.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.exps_.begin();
    for (auto& [n, e] : exps_) {
        while (it != other.exps_.end() && it->first < n) ++it;
        if (it == other.exps_.end() || it->first != n || it->second < e) return false;
    }
    return true;
}

std::optional<Monomial> Monomial::quotient(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) return std::nullopt;
    Monomial r;
    auto ib = b.exps_.begin();
    for (auto& [n, e] : a.exps_) {
        std::uint32_t sub = 0;
        if (ib != b.exps_.end() && ib->first == n) sub = (ib++)->second;
        if (e > sub) r.exps_.emplace_back(n, e - sub);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            r.exps_.push_back(*ia++);
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            r.exps_.push_back(*ib++);
        } else {
            r.exps_.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first == ib->first) return false;
        if (ia->first < ib->first) ++ia;
        else ++ib;
    }
    return true;
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (auto& [n, e] : exps_) {
        if (!s.empty()) s += "*";
        s += n;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return std::strong_ordering::equal;

    // Rank of a variable: listed precedence first, then name order.
    auto rank_less = [this](const std::string& x, const std::string& y) {
        std::size_t rx = precedence_.size(), ry = precedence_.size();
        for (std::size_t i = 0; i < precedence_.size(); ++i) {
            if (precedence_[i] == x) rx = i;
            if (precedence_[i] == y) ry = i;
        }
        if (rx != ry) return rx < ry;
        return x < y;
    };

    // Merge the two variable sets into significance order.
    std::vector<std::string> vars;
    for (auto& [n, e] : a.exponents()) vars.push_back(n);
    for (auto& [n, e] : b.exponents()) vars.push_back(n);
    std::sort(vars.begin(), vars.end(), rank_less);
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    if (kind_ == OrderKind::lex) {
        for (auto& v : vars) {
            std::uint32_t ea = a.degree_of(v), eb = b.degree_of(v);
            if (ea != eb) return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // degrevlex: total degree, then reverse-lex on the least significant
    // differing variable (smaller exponent there wins).
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        std::uint32_t ea = a.degree_of(*it), eb = b.degree_of(*it);
        if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace evolab
