#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evolab {

/// Power product of named variables. Stored as a name-sorted (variable,
/// exponent) list with all exponents >= 1; the empty list is the monomial 1.
class Monomial {
public:
    using Exps = std::vector<std::pair<std::string, std::uint32_t>>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(const std::string& name, std::uint32_t exp = 1);
    /// Builds from arbitrary (name, exp) pairs; merges duplicates, drops zeros.
    static Monomial from_pairs(Exps pairs);

    bool is_one() const { return exps_.empty(); }
    std::uint32_t degree_of(const std::string& name) const;
    std::uint32_t total_degree() const;
    const Exps& exponents() const { return exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;
    /// a / b, or nullopt when b does not divide a.
    static std::optional<Monomial> quotient(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    /// "x^2*y" / "1"; variables in name order.
    std::string to_string() const;

    // Structural ordering (name-lexicographic), independent of any monomial
    // order; used for canonical containers and deduplication.
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

private:
    Exps exps_;
};

enum class OrderKind { lex, degrevlex };

/// A monomial order: lex or degrevlex together with a total precedence on
/// variable names. Variables listed in `precedence` rank most significant
/// first; unlisted variables follow in name order.
class MonomialOrder {
public:
    static MonomialOrder lex(std::vector<std::string> precedence = {}) {
        return MonomialOrder(OrderKind::lex, std::move(precedence));
    }
    static MonomialOrder degrevlex(std::vector<std::string> precedence = {}) {
        return MonomialOrder(OrderKind::degrevlex, std::move(precedence));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::string>& precedence() const { return precedence_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) = default;

private:
    MonomialOrder(OrderKind kind, std::vector<std::string> precedence)
        : kind_(kind), precedence_(std::move(precedence)) {}

    OrderKind kind_;
    std::vector<std::string> precedence_;
};

inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                             const MonomialOrder& ord) {
    return ord.compare(a, b);
}

} // namespace evolab
