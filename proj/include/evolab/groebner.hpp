#pragma once

#include <optional>
#include <set>
#include <vector>

#include "evolab/polynomial.hpp"

namespace evolab {

/// Result of buchberger(). When `reduced` is true the generators are the
/// unique reduced basis of their ideal under `order`: monic, mutually
/// irreducible, sorted by leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;
    bool reduced = false;
};

/// S(f,g) = (L/lt f)·f − (L/lt g)·g with L = lcm of the leading monomials.
/// Throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Critical-pair bookkeeping for Buchberger's loop. pop() implements normal
/// selection (minimal lcm total degree first) and discards pairs by the
/// coprimality criterion and the chain criterion before they are reduced.
class CriticalPairQueue {
public:
    /// Registers generator number size() with the given leading monomial and
    /// queues its pairs against all earlier generators.
    void add_generator(const Monomial& leading);

    bool empty() const { return pending_.empty(); }

    /// Next pair to reduce, or nullopt once every pending pair has been
    /// popped or discarded.
    std::optional<std::pair<std::size_t, std::size_t>> pop();

private:
    struct Entry {
        std::uint32_t degree;
        std::size_t i, j;
        Monomial lcm;
        bool operator<(const Entry& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };

    bool chain_discards(const Entry& e) const;

    std::vector<Monomial> leads_;
    std::set<Entry> queue_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

/// Reduced Groebner basis of the ideal generated by F. Zero polynomials in F
/// are ignored; an all-zero (or empty) F yields the empty basis of the zero
/// ideal. Returns {1} as soon as any reduction produces a nonzero constant.
GroebnerBasis buchberger(const std::vector<Polynomial>& F, const MonomialOrder& ord);

/// True iff the basis is {1}, i.e. the ideal is the whole ring and the
/// system has no common solution over any algebraically closed extension.
bool contains_one(const GroebnerBasis& basis);

} // namespace evolab
