#ifndef GCDCERT_POLYZ_HPP
#define GCDCERT_POLYZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcdcert/int_ring.hpp"
#include "gcdcert/ring.hpp"

namespace gcdcert {

/**
 * Univariate polynomial with arbitrary-precision integer coefficients,
 * stored densely in ascending degree order.
 *
 * Canonical form: the coefficient vector never ends in a zero; the zero
 * polynomial is the empty vector.  All operations re-canonicalize.
 */
class polyz {
public:
    polyz() = default;
    explicit polyz(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }
    polyz(std::initializer_list<bigint> coeffs) : c_(coeffs) { trim(); }

    /// c * x^k
    static polyz monomial(const bigint& c, std::size_t k);
    static polyz constant(const bigint& c) { return monomial(c, 0); }
    /// 1 - x^k (k >= 1)
    static polyz one_minus_xpow(std::size_t k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree of the zero polynomial is -1 by convention.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<bigint>& coeffs() const { return c_; }
    /// Coefficient of x^k, zero beyond the stored range.
    const bigint& coeff(std::size_t k) const;
    /// Leading coefficient; zero polynomial yields 0.
    const bigint& leading() const;

    bool operator==(const polyz& o) const { return c_ == o.c_; }

    polyz operator-() const;
    polyz operator+(const polyz& o) const;
    polyz operator-(const polyz& o) const;
    polyz operator*(const polyz& o) const;
    polyz operator*(const bigint& s) const;

    /// Multiply by x^k.
    polyz shifted(std::size_t k) const;

    bigint evaluate(const bigint& x) const;

    /// gcd of the coefficients, >= 0; content of the zero polynomial is 0.
    bigint content() const;
    /// The polynomial divided by +-content so the leading coefficient is
    /// positive; primitive_part of zero is zero.
    polyz primitive_part() const;
    /// Canonical associate: positive leading coefficient.
    polyz normalized() const;

    /// Human-readable form, e.g. "1 - x^2 + 3x^5".
    std::string str() const;

private:
    void trim();
    std::vector<bigint> c_; // ascending degree
};

/**
 * Exact division in Z[x]: returns c with q*c = p when q divides p (integer
 * contents included), absent otherwise.  q must be nonzero.
 */
std::optional<polyz> exact_div(const polyz& p, const polyz& q);

/**
 * gcd in Z[x] via primitive polynomial remainder sequences: the content gcd
 * times the primitive gcd, normalized to a positive leading coefficient.
 * gcd(p, 0) = normalized p.
 */
polyz gcd(const polyz& p, const polyz& q);

/**
 * Structured Bezout pair for the binomials 1 - x^a and 1 - x^b:
 * returns (u, v) with u*(1 - x^a) + v*(1 - x^b) = 1 - x^gcd(a,b).
 *
 * Exponent reduction follows Euclid with quotients; each re-expression step
 * keeps every intermediate coefficient in Z[x].  deg u < b and deg v < a.
 * Exponents must be >= 1.
 */
std::pair<polyz, polyz> binomial_bezout(std::uint64_t a, std::uint64_t b);

/// binomial_bezout lifted to a bezout_pair over (1 - x^a, 1 - x^b) with the
/// gcd element normalized (so g = x^gcd(a,b) - 1 and u, v are negated).
bezout_pair<polyz> binomial_bezout_pair(std::uint64_t a, std::uint64_t b);

/// Ring adapter over Z[x].
/// Normalization convention: units are +-1; the canonical associate has a
/// positive leading coefficient.
struct polyz_ring {
    using element = polyz;

    element add(const element& a, const element& b) const { return a + b; }
    element mul(const element& a, const element& b) const { return a * b; }
    element neg(const element& a) const { return -a; }
    element zero() const { return polyz{}; }
    element one() const { return polyz::constant(1); }
    bool equals(const element& a, const element& b) const { return a == b; }

    std::optional<element> exact_div(const element& a, const element& b) const {
        if (b.is_zero()) return std::nullopt;
        return gcdcert::exact_div(a, b);
    }

    element gcd(const element& a, const element& b) const { return gcdcert::gcd(a, b); }

    element normalize(const element& a) const { return a.normalized(); }
};

} // namespace gcdcert

#endif
