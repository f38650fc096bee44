#include "gcdcert/ideal_products.hpp"

namespace gcdcert {

principal_sum_witness<bigint> int_subset_witness(const std::vector<bigint>& values) {
    if (values.empty()) throw invalid_input("subset witness: empty subset");

    principal_sum_witness<bigint> w;
    w.generators = values;

    bigint g = 0;
    std::vector<bigint> comb;
    comb.reserve(values.size());
    for (const auto& v : values) {
        const auto step = ext_gcd(g, v);
        for (auto& c : comb) c *= step.u;
        comb.push_back(step.v);
        g = step.g;
    }

    w.generator = g;
    w.combination = std::move(comb);
    w.multipliers.reserve(values.size());
    for (const auto& v : values) {
        w.multipliers.push_back(g == 0 ? bigint(0) : bigint(v / g));
    }
    return w;
}

} // namespace gcdcert
