#include "gcdcert/int_ring.hpp"

#include <utility>

namespace gcdcert {

bezout_pair<bigint> ext_gcd(const bigint& a, const bigint& b) {
    bigint old_r = a, r = b;
    bigint old_u = 1, u = 0;
    bigint old_v = 0, v = 1;
    while (r != 0) {
        const bigint q = old_r / r; // truncated division
        old_r -= q * r;
        std::swap(old_r, r);
        old_u -= q * u;
        std::swap(old_u, u);
        old_v -= q * v;
        std::swap(old_v, v);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {a, b, old_r, old_u, old_v};
}

} // namespace gcdcert
