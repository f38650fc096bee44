#include <benchmark/benchmark.h>

#include <random>

#include "gcdcert/cyclo.hpp"

using gcdcert::bigint;
using gcdcert::polyz;

namespace {

void BM_combine_n_int(benchmark::State& state) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<std::int64_t> value(1, 1000000);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<bigint> elems;
    for (std::size_t i = 0; i < n; ++i) elems.emplace_back(value(rng));
    const gcdcert::int_ring ring;
    const gcdcert::pair_witness_fn<bigint> provider = [&](std::size_t i, std::size_t j) {
        return gcdcert::ext_gcd(elems[i], elems[j]);
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::combine_n(ring, elems, provider));
    }
}
BENCHMARK(BM_combine_n_int)->Arg(3)->Arg(5)->Arg(8);

void BM_theorem0_certificate(benchmark::State& state) {
    const gcdcert::divisor_instance inst{
        static_cast<std::uint64_t>(state.range(0)), {2, 3, 4, 6}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::theorem0_certificate(inst));
    }
}
BENCHMARK(BM_theorem0_certificate)->Arg(12)->Arg(60)->Arg(360);

void BM_gcd_oracle(benchmark::State& state) {
    const gcdcert::divisor_instance inst{
        static_cast<std::uint64_t>(state.range(0)), {2, 3, 4, 6}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::gcd_oracle(inst));
    }
}
BENCHMARK(BM_gcd_oracle)->Arg(12)->Arg(60)->Arg(360);

void BM_sum_of_products_int(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> value(1, 10000);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<bigint> elems;
    for (std::size_t i = 0; i < n; ++i) elems.emplace_back(value(rng));
    const gcdcert::int_ring ring;
    const gcdcert::subset_witness_fn<bigint> provider =
        [](const std::vector<bigint>& s) { return gcdcert::int_subset_witness(s); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcdcert::sum_of_products(ring, elems, provider));
    }
}
BENCHMARK(BM_sum_of_products_int)->Arg(3)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
