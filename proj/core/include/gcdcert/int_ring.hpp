#ifndef GCDCERT_INT_RING_HPP
#define GCDCERT_INT_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "gcdcert/ring.hpp"

namespace gcdcert {

/// Arbitrary-precision signed integer with a unique representation per value.
using bigint = boost::multiprecision::cpp_int;

/**
 * Extended Euclid over arbitrary-precision integers.
 *
 * Returns (g, u, v) with u*a + v*b = g, g = gcd(a, b) >= 0; g = 0 only for
 * a = b = 0.  Coefficients are the plain back-substitution output, not
 * size-reduced.
 */
bezout_pair<bigint> ext_gcd(const bigint& a, const bigint& b);

/// Ring adapter over arbitrary-precision signed integers.
/// Normalization convention: the canonical associate is |a|.
struct int_ring {
    using element = bigint;

    element add(const element& a, const element& b) const { return a + b; }
    element mul(const element& a, const element& b) const { return a * b; }
    element neg(const element& a) const { return -a; }
    element zero() const { return element(0); }
    element one() const { return element(1); }
    bool equals(const element& a, const element& b) const { return a == b; }

    std::optional<element> exact_div(const element& a, const element& b) const {
        if (b == 0) return std::nullopt;
        if (a % b != 0) return std::nullopt;
        return element(a / b);
    }

    element gcd(const element& a, const element& b) const {
        return boost::multiprecision::gcd(a, b);
    }

    element normalize(const element& a) const { return boost::multiprecision::abs(a); }
};

} // namespace gcdcert

#endif
