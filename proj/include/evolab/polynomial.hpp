#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "evolab/gaussian.hpp"
#include "evolab/monomial.hpp"

namespace evolab {

/// Sparse multivariate polynomial over Q(i). Terms are kept in a map sorted
/// by the polynomial's active monomial order (ascending), so the leading
/// term is the last entry. Invariant: no zero coefficients stored; the empty
/// map is the zero polynomial. Values are immutable once built.
class Polynomial {
public:
    struct TermCmp {
        std::shared_ptr<const MonomialOrder> ord;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ord->compare(a, b) < 0;
        }
    };
    using TermMap = std::map<Monomial, GaussianRational, TermCmp>;

    /// degrevlex with name-ordered variables; the library-wide default.
    static const MonomialOrder& default_order();

    Polynomial() : Polynomial(default_order()) {}
    explicit Polynomial(const MonomialOrder& ord);
    Polynomial(const GaussianRational& c) : Polynomial() { add_term(Monomial::one(), c); }
    Polynomial(long n) : Polynomial(GaussianRational(n)) {}

    static Polynomial constant(const GaussianRational& c) { return Polynomial(c); }
    static Polynomial variable(const std::string& name, const MonomialOrder& ord = default_order());
    static Polynomial term(const Monomial& m, const GaussianRational& c,
                           const MonomialOrder& ord = default_order());

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value of a constant polynomial (zero polynomial included).
    GaussianRational constant_value() const;

    const MonomialOrder& order() const { return *cmp_.ord; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    std::set<std::string> variables() const;
    GaussianRational coefficient(const Monomial& m) const;

    /// Same terms re-keyed under a different order.
    Polynomial reordered(const MonomialOrder& ord) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(std::uint32_t e) const;

    /// Substitutes values for every variable; throws if one is missing.
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& values) const;

    /// Structural equality of term sets, independent of the active orders.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Terms joined by +/- in descending active order; round-trips through
    /// the entry grammar.
    std::string to_string() const;

    /// In-place accumulate; drops the term if the coefficient cancels.
    void add_term(const Monomial& m, const GaussianRational& c);

private:
    TermCmp cmp_;
    TermMap terms_;
};

/// Order-maximal monomial and its coefficient. Throws on the zero polynomial.
std::pair<Monomial, GaussianRational> leading_term(const Polynomial& p, const MonomialOrder& ord);

/// Remainder of p on division by G (all nonzero), under `ord`. Reduction
/// strategy is fixed: the currently largest reducible monomial is reduced by
/// the first divisor in G's given order, so the result is deterministic even
/// when G is not a Groebner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

namespace detail {

/// normal_form against divisors already re-keyed under `ord`, with their
/// leading terms precomputed. Hot path of the Groebner engine.
Polynomial normal_form_prepared(const Polynomial& p, const std::vector<Polynomial>& G,
                                const std::vector<std::pair<Monomial, GaussianRational>>& lead,
                                const MonomialOrder& ord);

} // namespace detail

} // namespace evolab
