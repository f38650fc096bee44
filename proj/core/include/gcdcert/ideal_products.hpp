#ifndef GCDCERT_IDEAL_PRODUCTS_HPP
#define GCDCERT_IDEAL_PRODUCTS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gcdcert/int_ring.hpp"
#include "gcdcert/ring.hpp"

namespace gcdcert {

/// Data behind a principal intersection <a> cap <b> = <p*q*d>: d generates
/// <a> + <b> with d = a*u + b*v, and a = p*d, b = q*d.
template <typename E>
struct intersection_witness {
    E a;
    E b;
    E d;
    E u;
    E v;
    E p;
    E q;
};

/// Two-sided witness that the listed generators span the principal ideal
/// <generator>: sum(combination[i] * generators[i]) = generator and
/// generators[i] = multipliers[i] * generator.
template <typename E>
struct principal_sum_witness {
    std::vector<E> generators;
    E generator;
    std::vector<E> combination;
    std::vector<E> multipliers;
};

/// Certificate that the (n-1)-fold products of the inputs span a principal
/// ideal; witness.generators coincide with products.
template <typename E>
struct sum_products_certificate {
    std::vector<E> inputs;
    std::vector<E> products; // products[i] omits inputs[i]
    principal_sum_witness<E> witness;
};

/// Witness source for subsets of the current working elements, passed by
/// value in working order; the result must align with the request order.
template <typename E>
using subset_witness_fn =
    std::function<principal_sum_witness<E>(const std::vector<E>&)>;

template <ring_adapter R>
bool verify_intersection_witness(const R& ring, const intersection_witness<typename R::element>& w) {
    const auto d = ring.add(ring.mul(w.a, w.u), ring.mul(w.b, w.v));
    if (!ring.equals(d, w.d)) return false;
    if (!ring.equals(w.a, ring.mul(w.p, w.d))) return false;
    return ring.equals(w.b, ring.mul(w.q, w.d));
}

/**
 * Generator of <a> cap <b> from an intersection witness: m = p*q*d, which satisfies
 * m*d = a*b exactly.  Throws invalid_witness when the witness identities do
 * not hold.
 */
template <ring_adapter R>
typename R::element intersect_principal(const R& ring,
                                        const intersection_witness<typename R::element>& w) {
    if (!verify_intersection_witness(ring, w)) {
        throw invalid_witness("intersect: witness identities fail");
    }
    return ring.mul(ring.mul(w.p, w.q), w.d);
}

/// Principal-ideal witness for a nonempty set of integers: the generator is
/// the folded gcd (>= 0), the combination comes from iterated extended
/// Euclid, and the multipliers from exact division.
principal_sum_witness<bigint> int_subset_witness(const std::vector<bigint>& values);

namespace detail {

/// products[i] = product of all xs except xs[i], via prefix/suffix products.
template <ring_adapter R>
std::vector<typename R::element>
all_but_one_products(const R& ring, const std::vector<typename R::element>& xs) {
    using E = typename R::element;
    const std::size_t n = xs.size();
    std::vector<E> prefix(n + 1, ring.one()), suffix(n + 1, ring.one());
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = ring.mul(prefix[i], xs[i]);
    for (std::size_t i = n; i > 0; --i) suffix[i - 1] = ring.mul(suffix[i], xs[i - 1]);
    std::vector<E> products(n);
    for (std::size_t i = 0; i < n; ++i) products[i] = ring.mul(prefix[i], suffix[i + 1]);
    return products;
}

template <ring_adapter R>
void check_subset_witness(const R& ring, const std::vector<typename R::element>& values,
                          const principal_sum_witness<typename R::element>& w) {
    const std::size_t n = values.size();
    if (w.generators.size() != n || w.combination.size() != n || w.multipliers.size() != n) {
        throw invalid_witness("subset witness: size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!ring.equals(w.generators[i], values[i])) {
            throw invalid_witness("subset witness: generators do not match the request");
        }
    }
    auto sum = ring.zero();
    for (std::size_t i = 0; i < n; ++i) {
        sum = ring.add(sum, ring.mul(w.combination[i], values[i]));
    }
    if (!ring.equals(sum, w.generator)) {
        throw invalid_witness("subset witness: combination identity fails");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!ring.equals(values[i], ring.mul(w.multipliers[i], w.generator))) {
            throw invalid_witness("subset witness: membership multiplier fails");
        }
    }
}

/// Rescale a witness so its generator is the canonical associate.
template <ring_adapter R>
principal_sum_witness<typename R::element>
normalize_witness(const R& ring, principal_sum_witness<typename R::element> w) {
    using E = typename R::element;
    const E canon = ring.normalize(w.generator);
    if (ring.equals(canon, w.generator)) return w;
    const auto unit = ring.exact_div(canon, w.generator);
    std::optional<E> inv;
    if (unit) inv = ring.exact_div(ring.one(), *unit);
    if (!unit || !inv) throw internal_error("normalize: generator is not unit-adjustable");
    for (auto& c : w.combination) c = ring.mul(c, *unit);
    for (auto& m : w.multipliers) m = ring.mul(m, *inv);
    w.generator = canon;
    return w;
}

template <ring_adapter R>
principal_sum_witness<typename R::element>
sum_products_impl(const R& ring, const std::vector<typename R::element>& xs,
                  const subset_witness_fn<typename R::element>& subset_witness) {
    using E = typename R::element;
    const std::size_t n = xs.size();

    const auto pair_w = subset_witness({xs[0], xs[1]});
    check_subset_witness(ring, {xs[0], xs[1]}, pair_w);

    if (n == 2) {
        // Products are (xs[1], xs[0]); reuse the pair witness crosswise.
        principal_sum_witness<E> w;
        w.generators = {xs[1], xs[0]};
        w.generator = pair_w.generator;
        w.combination = {pair_w.combination[1], pair_w.combination[0]};
        w.multipliers = {pair_w.multipliers[1], pair_w.multipliers[0]};
        return normalize_witness(ring, std::move(w));
    }

    const E& f = pair_w.generator;
    const E& c1 = pair_w.combination[0];
    const E& c2 = pair_w.combination[1];
    const E& x0_over_f = pair_w.multipliers[0];
    const E& x1_over_f = pair_w.multipliers[1];

    std::vector<E> with_x0{xs[0]}, with_x1{xs[1]}, with_f{f};
    with_x0.insert(with_x0.end(), xs.begin() + 2, xs.end());
    with_x1.insert(with_x1.end(), xs.begin() + 2, xs.end());
    with_f.insert(with_f.end(), xs.begin() + 2, xs.end());

    const auto cert1 = sum_products_impl(ring, with_x0, subset_witness);
    const auto cert2 = sum_products_impl(ring, with_x1, subset_witness);
    const auto certF = sum_products_impl(ring, with_f, subset_witness);

    const E& s1 = cert1.generator;
    const E& s2 = cert2.generator;
    const E& sF = certF.generator;
    const auto& alpha = cert1.combination;
    const auto& beta = cert2.combination;
    const auto& gamma = certF.combination;
    const auto& a = cert1.multipliers;
    const auto& b = cert2.multipliers;

    // sF = u*s1 + v*s2: the common product routes through s1; every product
    // of certF containing f splits along f = c1*x0 + c2*x1 into one member
    // of each branch, rewritten through the branch multipliers.
    E acc_a = ring.zero(), acc_b = ring.zero();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        acc_a = ring.add(acc_a, ring.mul(gamma[k], a[k]));
        acc_b = ring.add(acc_b, ring.mul(gamma[k], b[k]));
    }
    const E u = ring.add(ring.mul(gamma[0], a[0]), ring.mul(c1, acc_a));
    const E v = ring.mul(c2, acc_b);

    E p, q;
    if (is_zero(ring, sF)) {
        if (!is_zero(ring, s1) || !is_zero(ring, s2)) {
            throw internal_error("sum of products: zero sum over nonzero branches");
        }
        p = ring.zero();
        q = ring.zero();
    } else {
        p = div_or_throw(ring, s1, sF, "sum of products: branch generator escapes the sum ideal");
        q = div_or_throw(ring, s2, sF, "sum of products: branch generator escapes the sum ideal");
    }
    const E m = intersect_principal(ring, intersection_witness<E>{s1, s2, sF, u, v, p, q});
    const E g = ring.mul(f, m);

    principal_sum_witness<E> w;
    w.generator = g;
    w.generators = all_but_one_products(ring, xs);
    w.combination.resize(n);
    w.multipliers.resize(n);

    // Combination: substitute f = c1*x0 + c2*x1 into g = f*m and rewrite
    // m = p*s2 against the x0 half and m = q*s1 against the x1 half, landing
    // on the full products.
    const E c1p = ring.mul(c1, p);
    const E c2q = ring.mul(c2, q);
    w.combination[0] = ring.mul(c2q, alpha[0]);
    w.combination[1] = ring.mul(c1p, beta[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        w.combination[k + 1] =
            ring.add(ring.mul(c1p, beta[k]), ring.mul(c2q, alpha[k]));
    }

    // Multipliers: the common product C sits in both branch ideals, so the
    // intersection witness rewrites it over m; products keeping both x0 and
    // x1 factor as f times an element of both branch ideals.
    const E common_over_m = ring.add(ring.mul(u, b[0]), ring.mul(v, a[0]));
    w.multipliers[0] = ring.mul(x1_over_f, common_over_m);
    w.multipliers[1] = ring.mul(x0_over_f, common_over_m);
    for (std::size_t i = 2; i < n; ++i) {
        const E tau = ring.mul(x0_over_f, b[i - 1]);
        const E sigma = ring.mul(x1_over_f, a[i - 1]);
        w.multipliers[i] = ring.add(ring.mul(u, tau), ring.mul(v, sigma));
    }
    return normalize_witness(ring, std::move(w));
}

} // namespace detail

/**
 * Certificate that the (n-1)-fold products of p_1..p_n generate a principal
 * ideal, given principal-sum witnesses for subsets of the working elements.
 *
 * n = 2 is the direct sum of the two (singleton) products; for n >= 3 the
 * first two inputs are merged through their sum's generator f, the three
 * shorter problems are certified recursively, their intersection is formed
 * via the intersection witness, and the generator is f times the intersection
 * generator.  The returned generator is normalized.
 */
template <ring_adapter R>
sum_products_certificate<typename R::element>
sum_of_products(const R& ring, const std::vector<typename R::element>& inputs,
                const subset_witness_fn<typename R::element>& subset_witness) {
    using E = typename R::element;
    const std::size_t n = inputs.size();
    if (n < 2) throw invalid_input("sum of products: need at least two elements");

    sum_products_certificate<E> cert;
    cert.inputs = inputs;
    cert.products = detail::all_but_one_products(ring, inputs);
    cert.witness = detail::sum_products_impl(ring, inputs, subset_witness);
    return cert;
}

/// Checks products against the inputs, the combination identity and every
/// membership multiplier; exact arithmetic only.  Returns the name of the
/// first failing invariant, or an empty string on success.
template <ring_adapter R>
std::string sum_products_failure(const R& ring,
                                 const sum_products_certificate<typename R::element>& cert) {
    using E = typename R::element;
    const std::size_t n = cert.inputs.size();
    if (n < 2) return "certificate needs at least two inputs";
    if (cert.products.size() != n) return "product count does not match input count";
    const auto& w = cert.witness;
    if (w.generators.size() != n || w.combination.size() != n || w.multipliers.size() != n) {
        return "witness arrays do not match input count";
    }
    for (std::size_t i = 0; i < n; ++i) {
        E prod = ring.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) prod = ring.mul(prod, cert.inputs[j]);
        }
        if (!ring.equals(prod, cert.products[i])) {
            return "products do not match the recomputed all-but-one products";
        }
        if (!ring.equals(w.generators[i], cert.products[i])) {
            return "witness generators differ from the products";
        }
    }
    E sum = ring.zero();
    for (std::size_t i = 0; i < n; ++i) {
        sum = ring.add(sum, ring.mul(w.combination[i], cert.products[i]));
    }
    if (!ring.equals(sum, w.generator)) {
        return "combination identity fails: sum of coefficient*product differs from generator";
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!ring.equals(cert.products[i], ring.mul(w.multipliers[i], w.generator))) {
            return "membership multiplier fails: product is not multiplier*generator";
        }
    }
    return {};
}

template <ring_adapter R>
bool verify_sum_products(const R& ring,
                         const sum_products_certificate<typename R::element>& cert) {
    return sum_products_failure(ring, cert).empty();
}

} // namespace gcdcert

#endif
