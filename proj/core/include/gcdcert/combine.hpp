#ifndef GCDCERT_COMBINE_HPP
#define GCDCERT_COMBINE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gcdcert/ring.hpp"

namespace gcdcert {

/// Linear representation of an n-ary gcd: sum(coefficients[i] * elements[i])
/// equals gcd, gcd divides every element, and gcd is the canonical associate.
template <typename E>
struct combination_certificate {
    std::vector<E> elements;
    E gcd;
    std::vector<E> coefficients;
};

/// Intermediate data of the three-element construction.  With d the overall
/// gcd, e[i-1] is the cofactor of the pairwise gcd opposite element i
/// (gcd(p_{i+1}, p_{i+2}) = d * e_i cyclically) and f[i-1] completes
/// p_i = d * e_{i+1} * e_{i+2} * f_i.
template <typename E>
struct combine3_trace {
    E d;
    std::array<E, 3> e;
    std::array<E, 3> f;
};

/// Witness source for element pairs, addressed by index into the current
/// working sequence; must return a pair that passes verify_bezout.
template <typename E>
using pair_witness_fn = std::function<bezout_pair<E>(std::size_t, std::size_t)>;

/// Wraps a verified pairwise witness as a two-element certificate.
template <ufd_adapter R>
combination_certificate<typename R::element>
combine2(const R& ring, const typename R::element& a, const typename R::element& b,
         const bezout_pair<typename R::element>& w) {
    if (!ring.equals(w.a, a) || !ring.equals(w.b, b)) {
        throw invalid_witness("combine2: witness is for different elements");
    }
    if (!verify_bezout(ring, w)) {
        throw invalid_witness("combine2: bezout witness does not verify");
    }
    return {{a, b}, w.g, {w.u, w.v}};
}

/**
 * Three-element combination from pairwise witnesses.
 *
 * Given u_ij * p_i + u_ji * p_j = gcd(p_i, p_j) (up to a unit, which is
 * absorbed into the coefficients), computes the overall gcd d, the cofactors
 * e_i, f_i and the closed-form coefficients
 *     w1 = u12*u13*f1,  w2 = u21*u23*f2,  w3 = u12*u31*f1 + u21*u32*f2.
 *
 * All inputs must be nonzero.  Witness failures raise invalid_witness;
 * exact-division failures indicate inconsistent inputs and raise
 * internal_error.
 */
template <ufd_adapter R>
std::pair<combination_certificate<typename R::element>, combine3_trace<typename R::element>>
combine3(const R& ring, const typename R::element& p1, const typename R::element& p2,
         const typename R::element& p3, const typename R::element& u12,
         const typename R::element& u21, const typename R::element& u13,
         const typename R::element& u31, const typename R::element& u23,
         const typename R::element& u32) {
    using E = typename R::element;
    if (is_zero(ring, p1) || is_zero(ring, p2) || is_zero(ring, p3)) {
        throw invalid_input("combine3: elements must be nonzero");
    }
    const E g12 = ring.gcd(p1, p2);
    const E g13 = ring.gcd(p1, p3);
    const E g23 = ring.gcd(p2, p3);

    const auto w12 = absorb_unit(ring, bezout_pair<E>{p1, p2, g12, u12, u21});
    const auto w13 = absorb_unit(ring, bezout_pair<E>{p1, p3, g13, u13, u31});
    const auto w23 = absorb_unit(ring, bezout_pair<E>{p2, p3, g23, u23, u32});

    const E d = ring.gcd(g12, p3);
    const E e3 = detail::div_or_throw(ring, g12, d, "combine3: d does not divide gcd(p1,p2)");
    const E e2 = detail::div_or_throw(ring, g13, d, "combine3: d does not divide gcd(p1,p3)");
    const E e1 = detail::div_or_throw(ring, g23, d, "combine3: d does not divide gcd(p2,p3)");

    const E f1 = detail::div_or_throw(ring, p1, ring.mul(d, ring.mul(e2, e3)),
                                      "combine3: p1 is not d*e2*e3 times a cofactor");
    const E f2 = detail::div_or_throw(ring, p2, ring.mul(d, ring.mul(e3, e1)),
                                      "combine3: p2 is not d*e3*e1 times a cofactor");
    const E f3 = detail::div_or_throw(ring, p3, ring.mul(d, ring.mul(e1, e2)),
                                      "combine3: p3 is not d*e1*e2 times a cofactor");

    const E w1 = ring.mul(ring.mul(w12.u, w13.u), f1);
    const E w2 = ring.mul(ring.mul(w12.v, w23.u), f2);
    const E w3 = ring.add(ring.mul(ring.mul(w12.u, w13.v), f1),
                          ring.mul(ring.mul(w12.v, w23.v), f2));

    const E sum = ring.add(ring.add(ring.mul(w1, p1), ring.mul(w2, p2)), ring.mul(w3, p3));
    if (!ring.equals(sum, d)) {
        throw internal_error("combine3: closed-form coefficients do not reproduce the gcd");
    }

    combination_certificate<E> cert{{p1, p2, p3}, d, {w1, w2, w3}};
    combine3_trace<E> trace{d, {e1, e2, e3}, {f1, f2, f3}};
    return {std::move(cert), std::move(trace)};
}

namespace detail {

template <ufd_adapter R>
combination_certificate<typename R::element>
combine_n_impl(const R& ring, const std::vector<typename R::element>& xs,
               const pair_witness_fn<typename R::element>& witness) {
    using E = typename R::element;
    const std::size_t n = xs.size();
    if (n == 1) {
        const E d = ring.normalize(xs[0]);
        return {{xs[0]}, d, {div_or_throw(ring, d, xs[0], "combine: normalize left the associate class")}};
    }
    if (n == 2) return combine2(ring, xs[0], xs[1], witness(0, 1));
    if (n == 3) {
        const auto w01 = witness(0, 1);
        const auto w02 = witness(0, 2);
        const auto w12 = witness(1, 2);
        return combine3(ring, xs[0], xs[1], xs[2], w01.u, w01.v, w02.u, w02.v, w12.u,
                        w12.v)
            .first;
    }

    // Merge the last two elements into their gcd and recurse on the shorter
    // sequence; the coefficient found for the merged gcd is pushed back
    // through its witness at the end.
    const auto last = witness(n - 2, n - 1);
    if (!ring.equals(last.a, xs[n - 2]) || !ring.equals(last.b, xs[n - 1]) ||
        !verify_bezout(ring, last)) {
        throw invalid_witness("combine: witness for the merged pair does not verify");
    }
    const E g = last.g;
    const E s = div_or_throw(ring, xs[n - 2], g, "combine: merged gcd does not divide its inputs");
    const E t = div_or_throw(ring, xs[n - 1], g, "combine: merged gcd does not divide its inputs");

    std::vector<E> ys(xs.begin(), xs.end() - 2);
    ys.push_back(g);

    pair_witness_fn<E> inner = [&ring, &xs, &witness, &g, &s, &t,
                                n](std::size_t i, std::size_t j) -> bezout_pair<E> {
        if (j < n - 2) return witness(i, j);
        // Pair (xs[i], g): route the three elements (xs[i], xs[n-2], xs[n-1])
        // through the closed form, then contract the last two coefficients
        // onto g via xs[n-2] = s*g, xs[n-1] = t*g.
        const auto wa = witness(i, n - 2);
        const auto wb = witness(i, n - 1);
        const auto wc = witness(n - 2, n - 1);
        const auto [cert, trace] = combine3(ring, xs[i], xs[n - 2], xs[n - 1], wa.u, wa.v,
                                            wb.u, wb.v, wc.u, wc.v);
        const E u = cert.coefficients[0];
        const E v = ring.add(ring.mul(cert.coefficients[1], s), ring.mul(cert.coefficients[2], t));
        return {xs[i], g, cert.gcd, u, v};
    };

    const auto sub = combine_n_impl(ring, ys, inner);

    std::vector<E> coeffs(sub.coefficients.begin(), sub.coefficients.end() - 1);
    const E& cg = sub.coefficients.back();
    coeffs.push_back(ring.mul(cg, last.u));
    coeffs.push_back(ring.mul(cg, last.v));
    return {xs, sub.gcd, std::move(coeffs)};
}

} // namespace detail

/**
 * Certificate for the gcd of an arbitrary nonzero sequence, built from
 * pairwise witnesses only.  The recursion always merges the last two
 * elements; witnesses for pairs involving merged gcds are synthesized
 * internally, so the provider is consulted for original index pairs only.
 */
template <ufd_adapter R>
combination_certificate<typename R::element>
combine_n(const R& ring, const std::vector<typename R::element>& elements,
          const pair_witness_fn<typename R::element>& witness) {
    if (elements.empty()) throw invalid_input("combine: need at least one element");
    for (const auto& p : elements) {
        if (is_zero(ring, p)) throw invalid_input("combine: elements must be nonzero");
    }
    return detail::combine_n_impl(ring, elements, witness);
}

/**
 * Checks a combination certificate: the linear identity, divisibility of
 * every element by the stated gcd, canonical normalization, and agreement
 * with an independently folded gcd.  Returns the name of the first failing
 * invariant, or an empty string when the certificate verifies.
 */
template <ufd_adapter R>
std::string certificate_failure(const R& ring,
                                const combination_certificate<typename R::element>& cert) {
    using E = typename R::element;
    const std::size_t n = cert.elements.size();
    if (n == 0) return "certificate has no elements";
    if (cert.coefficients.size() != n) return "coefficient count does not match element count";

    E sum = ring.zero();
    for (std::size_t i = 0; i < n; ++i) {
        sum = ring.add(sum, ring.mul(cert.coefficients[i], cert.elements[i]));
    }
    if (!ring.equals(sum, cert.gcd)) {
        return "combination identity fails: sum of coefficient*element differs from gcd";
    }
    for (const auto& p : cert.elements) {
        if (!ring.exact_div(p, cert.gcd)) return "divisibility fails: gcd does not divide an element";
    }
    if (!ring.equals(cert.gcd, ring.normalize(cert.gcd))) {
        return "gcd is not the canonical associate";
    }
    E folded = ring.gcd(cert.elements[0], ring.zero());
    for (std::size_t i = 1; i < n; ++i) {
        folded = ring.gcd(folded, cert.elements[i]);
    }
    if (!ring.equals(folded, cert.gcd)) return "gcd differs from the independently refolded gcd";
    return {};
}

template <ufd_adapter R>
bool verify_certificate(const R& ring, const combination_certificate<typename R::element>& cert) {
    return certificate_failure(ring, cert).empty();
}

} // namespace gcdcert

#endif
