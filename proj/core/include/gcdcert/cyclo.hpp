#ifndef GCDCERT_CYCLO_HPP
#define GCDCERT_CYCLO_HPP

#include <cstdint>
#include <vector>

#include "gcdcert/combine.hpp"
#include "gcdcert/ideal_products.hpp"
#include "gcdcert/polyz.hpp"

namespace gcdcert {

/// A period D together with divisors d_i of D, selecting the family
/// p_i = 1 + x^{d_i} + x^{2 d_i} + ... + x^{D - d_i} = (1 - x^D)/(1 - x^{d_i}).
struct divisor_instance {
    std::uint64_t period = 0;                // D
    std::vector<std::uint64_t> divisors;     // d_i, each dividing D

    /// Throws invalid_input unless every divisor is in [1, D] and divides D.
    void validate() const;
};

/// The geometric sum (1 - x^D)/(1 - x^d) with D/d terms; d must divide D.
polyz build_p(std::uint64_t d, std::uint64_t big_d);

/**
 * Bezout witness for (p_i, p_j) built from the binomial pair: with
 * alpha*(1 - x^{d_i}) + beta*(1 - x^{d_j}) = 1 - x^g (g = gcd(d_i, d_j)),
 * multiplying by (1 - x^D)/((1 - x^{d_i})(1 - x^{d_j})) swaps the binomials
 * into p_j and p_i, so gcd(p_i, p_j) = beta*p_i + alpha*p_j.  The gcd element
 * is produced constructively as (p_i * (1 - x^g))/(1 - x^{d_j}), normalized.
 */
bezout_pair<polyz> pairwise_witness(std::uint64_t d_i, std::uint64_t d_j,
                                    std::uint64_t big_d);

/// Full combination certificate for the instance's family via the pairwise
/// witnesses; the result passes verify_certificate.
combination_certificate<polyz> theorem0_certificate(const divisor_instance& inst);

/**
 * Independent gcd of the family, computed two ways which must agree: a fold
 * of the remainder-sequence gcd, and the binomial route
 * (1 - x^D)/lcm_i(1 - x^{d_i}) expanded by inclusion-exclusion over subset
 * gcds of the exponents.  Disagreement raises internal_error.
 */
polyz gcd_oracle(const divisor_instance& inst);

/**
 * Subset witness source over a family instance, suitable for
 * sum_of_products over Z[x]: every requested element is either one of the
 * p_i or a generator this provider previously produced, and each witness
 * comes from the combination certificate of the merged sub-instance.
 */
class theorem0_subset_witness {
public:
    explicit theorem0_subset_witness(divisor_instance inst);

    principal_sum_witness<polyz> operator()(const std::vector<polyz>& values);

private:
    divisor_instance inst_;
    // Each known element value with the set of divisors whose sub-instance
    // it generates (sorted, unique).
    std::vector<std::pair<polyz, std::vector<std::uint64_t>>> known_;
};

} // namespace gcdcert

#endif
