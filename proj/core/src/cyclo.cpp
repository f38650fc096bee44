#include "gcdcert/cyclo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace gcdcert {

void divisor_instance::validate() const {
    if (period == 0) throw invalid_input("instance: period must be positive");
    if (divisors.empty()) throw invalid_input("instance: need at least one divisor");
    for (const auto d : divisors) {
        if (d == 0 || d > period || period % d != 0) {
            throw invalid_input("instance: every entry must divide the period");
        }
    }
}

polyz build_p(std::uint64_t d, std::uint64_t big_d) {
    if (d == 0 || big_d == 0 || big_d % d != 0) {
        throw invalid_input("build_p: d must divide D");
    }
    std::vector<bigint> c(static_cast<std::size_t>(big_d - d) + 1, bigint(0));
    for (std::uint64_t k = 0; k + d <= big_d; k += d) {
        c[static_cast<std::size_t>(k)] = 1;
    }
    return polyz(std::move(c));
}

bezout_pair<polyz> pairwise_witness(std::uint64_t d_i, std::uint64_t d_j,
                                    std::uint64_t big_d) {
    const polyz p_i = build_p(d_i, big_d);
    const polyz p_j = build_p(d_j, big_d);
    if (d_i == d_j) {
        return {p_i, p_j, p_i, polyz::constant(1), polyz{}};
    }
    const std::uint64_t g = std::gcd(d_i, d_j);
    auto [alpha, beta] = binomial_bezout(d_i, d_j);
    auto gcd_elem =
        exact_div(p_i * polyz::one_minus_xpow(static_cast<std::size_t>(g)),
                  polyz::one_minus_xpow(static_cast<std::size_t>(d_j)));
    if (!gcd_elem) throw internal_error("pairwise witness: constructive gcd division failed");
    return {p_i, p_j, gcd_elem->normalized(), std::move(beta), std::move(alpha)};
}

combination_certificate<polyz> theorem0_certificate(const divisor_instance& inst) {
    inst.validate();
    std::vector<polyz> elements;
    elements.reserve(inst.divisors.size());
    for (const auto d : inst.divisors) elements.push_back(build_p(d, inst.period));

    const pair_witness_fn<polyz> provider = [&inst](std::size_t i, std::size_t j) {
        return pairwise_witness(inst.divisors[i], inst.divisors[j], inst.period);
    };
    return combine_n(polyz_ring{}, elements, provider);
}

namespace {

// Drop duplicates and divisors of other divisors; they contribute nothing
// to the lcm of the binomials.
std::vector<std::uint64_t> maximal_divisors(std::vector<std::uint64_t> ds) {
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < ds.size() && !dominated; ++j) {
            dominated = ds[j] % ds[i] == 0;
        }
        if (!dominated) out.push_back(ds[i]);
    }
    return out;
}

} // namespace

polyz gcd_oracle(const divisor_instance& inst) {
    inst.validate();

    polyz folded = build_p(inst.divisors[0], inst.period).normalized();
    for (std::size_t i = 1; i < inst.divisors.size(); ++i) {
        folded = gcd(folded, build_p(inst.divisors[i], inst.period));
    }

    // (1 - x^D) / lcm_i(1 - x^{d_i}): the lcm expands by inclusion-exclusion
    // over subset gcds of the exponents, so the quotient is a signed product
    // of binomials.  Exponents appearing on both sides cancel first.
    const auto ds = maximal_divisors(inst.divisors);
    if (ds.size() > 20) {
        throw invalid_input("oracle: too many incomparable divisors for subset expansion");
    }
    std::map<std::uint64_t, std::int64_t> expo;
    expo[inst.period] += 1;
    const std::uint32_t subsets = (1u << ds.size()) - 1;
    for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
        std::uint64_t g = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (mask & (1u << i)) g = std::gcd(g, ds[i]);
        }
        expo[g] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }

    polyz quotient = polyz::constant(1);
    for (const auto& [e, m] : expo) {
        for (std::int64_t k = 0; k < m; ++k) {
            quotient = quotient * polyz::one_minus_xpow(static_cast<std::size_t>(e));
        }
    }
    for (const auto& [e, m] : expo) {
        for (std::int64_t k = 0; k < -m; ++k) {
            auto q = exact_div(quotient, polyz::one_minus_xpow(static_cast<std::size_t>(e)));
            if (!q) throw internal_error("oracle: binomial lcm route is not exact");
            quotient = std::move(*q);
        }
    }
    const polyz via_binomials = quotient.normalized();

    if (!(folded == via_binomials)) {
        throw internal_error("oracle: remainder-sequence and binomial routes disagree");
    }
    return folded;
}

theorem0_subset_witness::theorem0_subset_witness(divisor_instance inst)
    : inst_(std::move(inst)) {
    inst_.validate();
    for (const auto d : inst_.divisors) {
        polyz p = build_p(d, inst_.period);
        const bool seen = std::any_of(known_.begin(), known_.end(),
                                      [&](const auto& kv) { return kv.first == p; });
        if (!seen) known_.emplace_back(std::move(p), std::vector<std::uint64_t>{d});
    }
}

principal_sum_witness<polyz> theorem0_subset_witness::operator()(
    const std::vector<polyz>& values) {
    if (values.empty()) throw invalid_input("subset witness: empty subset");

    std::vector<const std::vector<std::uint64_t>*> origin;
    origin.reserve(values.size());
    for (const auto& v : values) {
        const auto it = std::find_if(known_.begin(), known_.end(),
                                     [&](const auto& kv) { return kv.first == v; });
        if (it == known_.end()) {
            throw invalid_witness("subset witness: element is not part of the family");
        }
        origin.push_back(&it->second);
    }

    std::vector<std::uint64_t> merged;
    for (const auto* set : origin) {
        merged.insert(merged.end(), set->begin(), set->end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    const divisor_instance sub{inst_.period, merged};
    const auto cert = theorem0_certificate(sub);
    const polyz& g = cert.gcd;

    principal_sum_witness<polyz> w;
    w.generators = values;
    w.generator = g;
    w.combination.assign(values.size(), polyz{});
    w.multipliers.reserve(values.size());

    // Attribute each merged divisor's term to the first requested value whose
    // origin set contains it, rewriting p_k = (p_k / value) * value.
    for (std::size_t k = 0; k < merged.size(); ++k) {
        const polyz p_k = build_p(merged[k], inst_.period);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const auto& set = *origin[t];
            if (!std::binary_search(set.begin(), set.end(), merged[k])) continue;
            auto cof = exact_div(p_k, values[t]);
            if (!cof) throw internal_error("subset witness: value does not divide its family member");
            w.combination[t] = w.combination[t] + cert.coefficients[k] * *cof;
            break;
        }
    }
    for (const auto& v : values) {
        auto m = exact_div(v, g);
        if (!m) throw internal_error("subset witness: generator does not divide a member");
        w.multipliers.push_back(std::move(*m));
    }

    const bool seen = std::any_of(known_.begin(), known_.end(),
                                  [&](const auto& kv) { return kv.first == g; });
    if (!seen) known_.emplace_back(g, merged);
    return w;
}

} // namespace gcdcert
