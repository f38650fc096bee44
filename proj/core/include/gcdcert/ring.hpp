#ifndef GCDCERT_RING_HPP
#define GCDCERT_RING_HPP

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace gcdcert {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad instance data, unparsable file,
/// zero where nonzero is required).
class invalid_input : public error {
public:
    using error::error;
};

/// A supplied witness fails its defining identities.
class invalid_witness : public error {
public:
    using error::error;
};

/// An exact division or cross-check that must succeed for consistent inputs
/// failed; indicates a bug or an unsupported ring, not a data condition.
class internal_error : public error {
public:
    using error::error;
};

/**
 * Capability bundle every concrete ring provides: exact arithmetic,
 * equality, partial exact division and a canonical associate chooser.
 *
 * normalize() maps each associate class to exactly one representative and
 * is idempotent.  exact_div(a, b) is defined when b != 0 and b divides a
 * exactly; an absent result is a data condition, never an error.
 */
template <typename R>
concept ring_adapter = requires(const R r, const typename R::element& a,
                                const typename R::element& b) {
    typename R::element;
    { r.add(a, b) } -> std::same_as<typename R::element>;
    { r.mul(a, b) } -> std::same_as<typename R::element>;
    { r.neg(a) } -> std::same_as<typename R::element>;
    { r.zero() } -> std::same_as<typename R::element>;
    { r.one() } -> std::same_as<typename R::element>;
    { r.equals(a, b) } -> std::same_as<bool>;
    { r.exact_div(a, b) } -> std::same_as<std::optional<typename R::element>>;
    { r.normalize(a) } -> std::same_as<typename R::element>;
};

/// A ring adapter that can also compute normalized gcds (UFD rings).
template <typename R>
concept ufd_adapter = ring_adapter<R> &&
    requires(const R r, const typename R::element& a, const typename R::element& b) {
        { r.gcd(a, b) } -> std::same_as<typename R::element>;
    };

template <ring_adapter R>
typename R::element sub(const R& ring, const typename R::element& a,
                        const typename R::element& b) {
    return ring.add(a, ring.neg(b));
}

template <ring_adapter R>
bool is_zero(const R& ring, const typename R::element& a) {
    return ring.equals(a, ring.zero());
}

namespace detail {

template <ring_adapter R>
typename R::element div_or_throw(const R& ring, const typename R::element& a,
                                 const typename R::element& b, const char* what) {
    auto q = ring.exact_div(a, b);
    if (!q) throw internal_error(what);
    return *q;
}

} // namespace detail

/// Explicit linear representation of a pairwise gcd: u*a + v*b = g.
template <typename E>
struct bezout_pair {
    E a;
    E b;
    E g;
    E u;
    E v;
};

/**
 * Checks the three defining invariants of a Bezout witness under exact
 * arithmetic: the combination identity, that g divides both inputs, and that
 * g is the canonical associate.  Total; returns a verdict.
 */
template <ring_adapter R>
bool verify_bezout(const R& ring, const bezout_pair<typename R::element>& w) {
    const auto lhs = ring.add(ring.mul(w.u, w.a), ring.mul(w.v, w.b));
    if (!ring.equals(lhs, w.g)) return false;
    if (!ring.exact_div(w.a, w.g)) return false;
    if (!ring.exact_div(w.b, w.g)) return false;
    return ring.equals(w.g, ring.normalize(w.g));
}

/**
 * Rescales (u, v) by a unit so that u*a + v*b equals exactly the stated g,
 * accepting witnesses whose combination lands on any associate of g.
 * Throws invalid_witness when the combination is not an associate of g.
 */
template <ring_adapter R>
bezout_pair<typename R::element> absorb_unit(const R& ring,
                                             bezout_pair<typename R::element> w) {
    const auto s = ring.add(ring.mul(w.u, w.a), ring.mul(w.v, w.b));
    if (ring.equals(s, w.g)) return w;
    if (is_zero(ring, s) || !ring.equals(ring.normalize(s), ring.normalize(w.g))) {
        throw invalid_witness("bezout combination is not an associate of the stated gcd");
    }
    const auto unit = ring.exact_div(w.g, s);
    if (!unit) throw invalid_witness("bezout combination does not divide the stated gcd");
    w.u = ring.mul(w.u, *unit);
    w.v = ring.mul(w.v, *unit);
    return w;
}

} // namespace gcdcert

#endif
