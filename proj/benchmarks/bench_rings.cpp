#include <benchmark/benchmark.h>

#include <random>

#include "gcdcert/int_ring.hpp"
#include "gcdcert/polyz.hpp"

using gcdcert::bigint;
using gcdcert::polyz;

namespace {

bigint random_bigint(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> digit(0, 9);
    std::string s = "1";
    for (int i = 1; i < digits; ++i) s.push_back(static_cast<char>('0' + digit(rng)));
    return bigint(s);
}

polyz random_polyz(std::mt19937_64& rng, int deg, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<bigint> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c.emplace_back(coeff(rng));
    c.emplace_back(1);
    return polyz(std::move(c));
}

void BM_ext_gcd(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto digits = static_cast<int>(state.range(0));
    const bigint a = random_bigint(rng, digits);
    const bigint b = random_bigint(rng, digits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::ext_gcd(a, b));
    }
}
BENCHMARK(BM_ext_gcd)->Arg(18)->Arg(64)->Arg(256);

void BM_polyz_mul(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto deg = static_cast<int>(state.range(0));
    const polyz p = random_polyz(rng, deg, 1000);
    const polyz q = random_polyz(rng, deg, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_polyz_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_polyz_gcd_with_common_factor(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto deg = static_cast<int>(state.range(0));
    const polyz g = random_polyz(rng, deg, 10);
    const polyz p = g * random_polyz(rng, deg, 10);
    const polyz q = g * random_polyz(rng, deg, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::gcd(p, q));
    }
}
BENCHMARK(BM_polyz_gcd_with_common_factor)->Arg(4)->Arg(8)->Arg(16);

// Consecutive Fibonacci exponents maximize the reduction chain length.
void BM_binomial_bezout(benchmark::State& state) {
    std::uint64_t prev = 1, cur = 1;
    for (std::int64_t k = 2; k <= state.range(0); ++k) {
        const std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::binomial_bezout(cur, prev));
    }
}
BENCHMARK(BM_binomial_bezout)->Arg(10)->Arg(15)->Arg(20);

} // namespace
