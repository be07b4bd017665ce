#include "evolab/gaussian.hpp"

namespace evolab {

namespace {

// Pure-imaginary part as text: "i", "-i", "3i", "-3/4i".
std::string imag_str(const Rational& im) {
    if (im.is_one()) return "i";
    if (im == Rational(-1)) return "-i";
    return im.to_string() + "i";
}

// ---- Gaussian integers, used only for exact cube-root extraction ----

struct Gi {
    Integer a, b;

    bool is_zero() const { return a == 0 && b == 0; }
    Integer norm() const { return a * a + b * b; }
    Gi conj() const { return {a, -b}; }

    friend Gi operator-(const Gi& x, const Gi& y) { return {x.a - y.a, x.b - y.b}; }
    friend Gi operator*(const Gi& x, const Gi& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const Gi& x, const Gi& y) { return x.a == y.a && x.b == y.b; }
};

// Nearest integer to x/y for y > 0.
Integer div_nearest(const Integer& x, const Integer& y) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), Integer(2 * x + y).get_mpz_t(), Integer(2 * y).get_mpz_t());
    return q;
}

// Euclidean division: q with N(z - q*w) < N(w).
Gi gi_div_nearest(const Gi& z, const Gi& w) {
    Integer n = w.norm();
    Gi zc = z * w.conj();
    return {div_nearest(zc.a, n), div_nearest(zc.b, n)};
}

Gi gi_gcd(Gi x, Gi y) {
    while (!y.is_zero()) {
        Gi q = gi_div_nearest(x, y);
        Gi r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

// Exact quotient x / y (asserts divisibility via the caller's construction).
Gi gi_div_exact(const Gi& x, const Gi& y) {
    Integer n = y.norm();
    Gi xc = x * y.conj();
    return {Integer(xc.a / n), Integer(xc.b / n)};
}

// Cube root in Z[i], if it exists. Searches s^2 + t^2 = m where m^3 = N(z).
std::optional<Gi> gi_cube_root(const Gi& z) {
    if (z.is_zero()) return Gi{0, 0};
    Integer n = z.norm();
    Integer m;
    if (mpz_root(m.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
    Integer smax;
    mpz_sqrt(smax.get_mpz_t(), m.get_mpz_t());
    for (Integer s = -smax; s <= smax; ++s) {
        Integer t2 = m - s * s;
        if (mpz_perfect_square_p(t2.get_mpz_t()) == 0) continue;
        Integer t;
        mpz_sqrt(t.get_mpz_t(), t2.get_mpz_t());
        for (int sign = 0; sign < 2; ++sign) {
            Gi c{s, sign == 0 ? t : Integer(-t)};
            if (c * c * c == z) return c;
            if (t == 0) break;
        }
    }
    return std::nullopt;
}

Integer lcm(const Integer& x, const Integer& y) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

} // namespace

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return imag_str(im_);
    if (im_.is_negative()) return re_.to_string() + "-" + imag_str(-im_);
    return re_.to_string() + "+" + imag_str(im_);
}

GaussianRational pow(const GaussianRational& base, unsigned long exp) {
    GaussianRational r(Rational(1));
    GaussianRational b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::optional<GaussianRational> exact_cube_root(const GaussianRational& x) {
    if (x.is_zero()) return GaussianRational();
    // x = (a + b i)/q with integer a, b and positive integer q.
    Integer q = lcm(x.re().denominator(), x.im().denominator());
    Gi num{x.re().numerator() * (q / x.re().denominator()),
           x.im().numerator() * (q / x.im().denominator())};
    Gi den{q, 0};
    Gi g = gi_gcd(num, den);
    num = gi_div_exact(num, g);
    den = gi_div_exact(den, g);
    // In lowest terms over Z[i] a cube has both parts cubes: units are cubes
    // themselves (gcd(3, 4) = 1), so no unit adjustment is needed.
    auto cn = gi_cube_root(num);
    if (!cn) return std::nullopt;
    auto cd = gi_cube_root(den);
    if (!cd) return std::nullopt;
    GaussianRational rn{Rational(cn->a), Rational(cn->b)};
    GaussianRational rd{Rational(cd->a), Rational(cd->b)};
    return rn / rd;
}

} // namespace evolab
