#include "evolab/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace evolab {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("s_polynomial: zero input");
    auto [mf, cf] = leading_term(f, ord);
    auto [mg, cg] = leading_term(g, ord);
    Monomial L = Monomial::lcm(mf, mg);
    Polynomial tf = Polynomial::term(*Monomial::quotient(L, mf), GaussianRational(1) / cf, ord);
    Polynomial tg = Polynomial::term(*Monomial::quotient(L, mg), GaussianRational(1) / cg, ord);
    return tf * f.reordered(ord) - tg * g.reordered(ord);
}

void CriticalPairQueue::add_generator(const Monomial& leading) {
    std::size_t j = leads_.size();
    leads_.push_back(leading);
    for (std::size_t i = 0; i < j; ++i) {
        Monomial L = Monomial::lcm(leads_[i], leading);
        queue_.insert(Entry{L.total_degree(), i, j, L});
        pending_.insert({i, j});
    }
}

bool CriticalPairQueue::chain_discards(const Entry& e) const {
    for (std::size_t k = 0; k < leads_.size(); ++k) {
        if (k == e.i || k == e.j) continue;
        if (!leads_[k].divides(e.lcm)) continue;
        auto ik = std::minmax(e.i, k);
        auto jk = std::minmax(e.j, k);
        if (!pending_.count({ik.first, ik.second}) && !pending_.count({jk.first, jk.second}))
            return true;
    }
    return false;
}

std::optional<std::pair<std::size_t, std::size_t>> CriticalPairQueue::pop() {
    while (!queue_.empty()) {
        Entry e = *queue_.begin();
        queue_.erase(queue_.begin());
        pending_.erase({e.i, e.j});
        if (Monomial::coprime(leads_[e.i], leads_[e.j])) continue;
        if (chain_discards(e)) continue;
        return std::make_pair(e.i, e.j);
    }
    return std::nullopt;
}

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& ord) {
    auto [m, c] = leading_term(p, ord);
    return (GaussianRational(1) / c) * p;
}

GroebnerBasis one_basis(const MonomialOrder& ord) {
    return {{Polynomial::constant(GaussianRational(1)).reordered(ord)}, ord, true};
}

// Minimize + tail-reduce + normalize + sort: the unique reduced basis.
GroebnerBasis inter_reduce(std::vector<Polynomial> G, const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, GaussianRational>> lead;
    lead.reserve(G.size());
    for (auto& g : G) lead.push_back(leading_term(g, ord));

    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = ord.compare(lead[a].first, lead[b].first);
        return c != 0 ? c < 0 : a < b;
    });

    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        bool divisible = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return lead[k].first.divides(lead[i].first);
        });
        if (!divisible) kept.push_back(i);
    }

    std::vector<Polynomial> basis;
    basis.reserve(kept.size());
    for (std::size_t k : kept) basis.push_back(monic(G[k], ord));
    for (std::size_t t = 0; t < basis.size(); ++t) {
        std::vector<Polynomial> others;
        std::vector<std::pair<Monomial, GaussianRational>> olead;
        for (std::size_t s = 0; s < basis.size(); ++s) {
            if (s == t) continue;
            others.push_back(basis[s]);
            olead.push_back(leading_term(basis[s], ord));
        }
        basis[t] = detail::normal_form_prepared(basis[t], others, olead, ord);
    }
    return {std::move(basis), ord, true};
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& F, const MonomialOrder& ord) {
    std::vector<Polynomial> G;
    for (auto& f : F)
        if (!f.is_zero()) G.push_back(f.reordered(ord));
    if (G.empty()) return {{}, ord, true};
    for (auto& g : G)
        if (g.is_constant()) return one_basis(ord);

    std::vector<std::pair<Monomial, GaussianRational>> lead;
    CriticalPairQueue pairs;
    for (auto& g : G) {
        lead.push_back(leading_term(g, ord));
        pairs.add_generator(lead.back().first);
    }

    while (auto pr = pairs.pop()) {
        Polynomial S = s_polynomial(G[pr->first], G[pr->second], ord);
        Polynomial r = detail::normal_form_prepared(S, G, lead, ord);
        if (r.is_zero()) continue;
        if (r.is_constant()) return one_basis(ord);
        G.push_back(r);
        lead.push_back(leading_term(r, ord));
        pairs.add_generator(lead.back().first);
    }

    return inter_reduce(std::move(G), ord);
}

bool contains_one(const GroebnerBasis& basis) {
    if (!basis.reduced) throw std::domain_error("contains_one: basis not reduced");
    return basis.generators.size() == 1 && basis.generators[0].is_constant() &&
           !basis.generators[0].is_zero();
}

} // namespace evolab
