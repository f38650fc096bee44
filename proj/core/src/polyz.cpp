#include "gcdcert/polyz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace gcdcert {

namespace {

const bigint kZero = 0;

// Nonzero terms of q as (exponent, coefficient), ascending.
std::vector<std::pair<std::size_t, bigint>> nonzero_terms(const polyz& q) {
    std::vector<std::pair<std::size_t, bigint>> terms;
    const auto& c = q.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) terms.emplace_back(i, c[i]);
    }
    return terms;
}

} // namespace

void polyz::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

polyz polyz::monomial(const bigint& c, std::size_t k) {
    if (c == 0) return polyz{};
    std::vector<bigint> v(k + 1, bigint(0));
    v[k] = c;
    return polyz(std::move(v));
}

polyz polyz::one_minus_xpow(std::size_t k) {
    std::vector<bigint> v(k + 1, bigint(0));
    v[0] = 1;
    v[k] -= 1; // k = 0 collapses to the zero polynomial
    return polyz(std::move(v));
}

const bigint& polyz::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const bigint& polyz::leading() const {
    return c_.empty() ? kZero : c_.back();
}

polyz polyz::operator-() const {
    polyz r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

polyz polyz::operator+(const polyz& o) const {
    std::vector<bigint> v(std::max(c_.size(), o.c_.size()), bigint(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return polyz(std::move(v));
}

polyz polyz::operator-(const polyz& o) const {
    std::vector<bigint> v(std::max(c_.size(), o.c_.size()), bigint(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return polyz(std::move(v));
}

polyz polyz::operator*(const polyz& o) const {
    if (is_zero() || o.is_zero()) return polyz{};
    std::vector<bigint> v(c_.size() + o.c_.size() - 1, bigint(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return polyz(std::move(v));
}

polyz polyz::operator*(const bigint& s) const {
    if (s == 0 || is_zero()) return polyz{};
    polyz r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

polyz polyz::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<bigint> v(c_.size() + k, bigint(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return polyz(std::move(v));
}

bigint polyz::evaluate(const bigint& x) const {
    bigint acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

bigint polyz::content() const {
    bigint g = 0;
    for (const auto& c : c_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

polyz polyz::primitive_part() const {
    if (is_zero()) return polyz{};
    bigint c = content();
    if (leading() < 0) c = -c;
    polyz r = *this;
    for (auto& x : r.c_) x /= c;
    return r;
}

polyz polyz::normalized() const {
    return leading() < 0 ? -*this : *this;
}

std::string polyz::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const bigint mag = boost::multiprecision::abs(c_[k]);
        if (first) {
            if (c_[k] < 0) out << "-";
            first = false;
        } else {
            out << (c_[k] < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag.str();
        if (k >= 1) {
            out << "x";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

std::optional<polyz> exact_div(const polyz& p, const polyz& q) {
    if (q.is_zero()) throw invalid_input("polynomial division by zero");
    if (p.is_zero()) return polyz{};
    if (p.degree() < q.degree()) return std::nullopt;

    const auto dq = static_cast<std::size_t>(q.degree());
    const bigint& lead = q.leading();
    const auto terms = nonzero_terms(q);

    std::vector<bigint> rem = p.coeffs();
    std::vector<bigint> quot(rem.size() - dq, bigint(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const bigint& c = rem[k + dq];
        if (c == 0) continue;
        if (c % lead != 0) return std::nullopt;
        const bigint t = c / lead;
        for (const auto& [e, qc] : terms) rem[k + e] -= t * qc;
        quot[k] = t;
    }
    for (std::size_t i = 0; i < dq; ++i) {
        if (rem[i] != 0) return std::nullopt;
    }
    return polyz(std::move(quot));
}

namespace {

// A scalar multiple of the pseudo-remainder of a by b (deg a >= deg b >= 0);
// callers take the primitive part, so the overall scale is irrelevant.
polyz pseudo_rem(const polyz& a, const polyz& b) {
    const auto db = b.degree();
    const bigint& lb = b.leading();
    polyz r = a;
    while (!r.is_zero() && r.degree() >= db) {
        const auto shift = static_cast<std::size_t>(r.degree() - db);
        r = r * lb - b.shifted(shift) * r.leading();
    }
    return r;
}

} // namespace

polyz gcd(const polyz& p, const polyz& q) {
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();

    const bigint content_gcd = boost::multiprecision::gcd(p.content(), q.content());
    polyz a = p.primitive_part();
    polyz b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        polyz r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return (a * content_gcd).normalized();
}

std::pair<polyz, polyz> binomial_bezout(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw invalid_input("binomial exponents must be positive");
    if (a == b) return {polyz::constant(1), polyz{}};
    if (a < b) {
        auto [u, v] = binomial_bezout(b, a);
        return {std::move(v), std::move(u)};
    }
    const std::uint64_t quot = a / b;
    const std::uint64_t rem = a % b;
    if (rem == 0) return {polyz{}, polyz::constant(1)};

    // 1 - x^a = sigma * (1 - x^b) + x^{qb} * (1 - x^r) with
    // sigma = 1 + x^b + ... + x^{(q-1)b}.  Splitting 1 - x^g as
    // x^{qb}*(1 - x^g) + sigma*(1 - x^b)*(1 - x^g) and substituting the
    // recursive identity into the first term keeps everything in Z[x].
    const auto [u_rec, v_rec] = binomial_bezout(b, rem);
    const std::uint64_t g = std::gcd(a, b);

    std::vector<bigint> sigma_c(static_cast<std::size_t>((quot - 1) * b) + 1, bigint(0));
    for (std::uint64_t t = 0; t < quot; ++t) sigma_c[static_cast<std::size_t>(t * b)] = 1;
    const polyz sigma(std::move(sigma_c));

    polyz u = v_rec;
    polyz v = u_rec.shifted(static_cast<std::size_t>(quot * b)) - sigma * v_rec +
              sigma * polyz::one_minus_xpow(static_cast<std::size_t>(g));
    return {std::move(u), std::move(v)};
}

bezout_pair<polyz> binomial_bezout_pair(std::uint64_t a, std::uint64_t b) {
    auto [u, v] = binomial_bezout(a, b);
    const std::uint64_t g = std::gcd(a, b);
    // x^g - 1 is the canonical associate of 1 - x^g.
    return {polyz::one_minus_xpow(static_cast<std::size_t>(a)),
            polyz::one_minus_xpow(static_cast<std::size_t>(b)),
            -polyz::one_minus_xpow(static_cast<std::size_t>(g)), -u, -v};
}

} // namespace gcdcert
