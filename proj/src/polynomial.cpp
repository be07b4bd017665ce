#include "evolab/polynomial.hpp"

#include <stdexcept>

namespace evolab {

namespace {

std::shared_ptr<const MonomialOrder> shared_order(const MonomialOrder& ord) {
    static const auto default_ptr =
        std::make_shared<const MonomialOrder>(MonomialOrder::degrevlex());
    if (ord == *default_ptr) return default_ptr;
    return std::make_shared<const MonomialOrder>(ord);
}

} // namespace

const MonomialOrder& Polynomial::default_order() {
    static const MonomialOrder ord = MonomialOrder::degrevlex();
    return ord;
}

Polynomial::Polynomial(const MonomialOrder& ord)
    : cmp_{shared_order(ord)}, terms_(cmp_) {}

Polynomial Polynomial::variable(const std::string& name, const MonomialOrder& ord) {
    return term(Monomial::var(name), GaussianRational(1), ord);
}

Polynomial Polynomial::term(const Monomial& m, const GaussianRational& c,
                            const MonomialOrder& ord) {
    Polynomial p(ord);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return {};
    if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (auto& [m, c] : terms_)
        for (auto& [n, e] : m.exponents()) vars.insert(n);
    return vars;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

Polynomial Polynomial::reordered(const MonomialOrder& ord) const {
    if (order() == ord) return *this;
    Polynomial r(ord);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c);
    return r;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(order());
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.order());
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    Polynomial r(p.order());
    if (c.is_zero()) return r;
    for (auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(GaussianRational(1)).reordered(order());
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

GaussianRational Polynomial::evaluate(
    const std::map<std::string, GaussianRational>& values) const {
    GaussianRational acc;
    for (auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (auto& [n, e] : m.exponents()) {
            auto it = values.find(n);
            if (it == values.end())
                throw std::domain_error("Polynomial::evaluate: no value for variable " + n);
            t *= ::evolab::pow(it->second, e);
        }
        acc += t;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string piece;
        bool mixed = !c.re().is_zero() && !c.im().is_zero();
        if (m.is_one()) {
            piece = mixed ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c.is_one()) {
            piece = m.to_string();
        } else if (c == GaussianRational(-1)) {
            piece = "-" + m.to_string();
        } else if (mixed) {
            piece = "(" + c.to_string() + ")*" + m.to_string();
        } else {
            piece = c.to_string() + "*" + m.to_string();
        }
        if (s.empty()) {
            s = piece;
        } else if (piece.front() == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
    }
    return s;
}

std::pair<Monomial, GaussianRational> leading_term(const Polynomial& p,
                                                   const MonomialOrder& ord) {
    if (p.is_zero()) throw std::domain_error("leading_term: zero polynomial");
    if (p.order() == ord) {
        auto it = p.terms().rbegin();
        return {it->first, it->second};
    }
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
    for (auto& g : G)
        if (g.is_zero()) throw std::domain_error("normal_form: zero divisor polynomial");

    std::vector<Polynomial> Gr;
    Gr.reserve(G.size());
    for (auto& g : G) Gr.push_back(g.reordered(ord));
    std::vector<std::pair<Monomial, GaussianRational>> lead;
    lead.reserve(Gr.size());
    for (auto& g : Gr) lead.push_back(leading_term(g, ord));
    return detail::normal_form_prepared(p, Gr, lead, ord);
}

Polynomial detail::normal_form_prepared(
    const Polynomial& p, const std::vector<Polynomial>& G,
    const std::vector<std::pair<Monomial, GaussianRational>>& lead, const MonomialOrder& ord) {
    Polynomial h = p.reordered(ord);
    Polynomial r(ord);
    while (!h.is_zero()) {
        auto [m, c] = leading_term(h, ord);
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            auto q = Monomial::quotient(m, lead[k].first);
            if (!q) continue;
            h -= (c / lead[k].second) * Polynomial::term(*q, GaussianRational(1), ord) * G[k];
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(m, c);
            h.add_term(m, -c);
        }
    }
    return r;
}

} // namespace evolab
