// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance (all identities are exact) and prints one PASS/FAIL line per
// criterion.  Usage: acceptance <path-to-cli-binary>
//
// Exit status is the number of failing criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "gcdcert/cyclo.hpp"
#include "gcdcert/serialize.hpp"
#include "testutil.hpp"

namespace {

using gcdcert::bigint;
using gcdcert::divisor_instance;
using gcdcert::int_ring;
using gcdcert::polyz;
using gcdcert::polyz_ring;

const int_ring zz;
const polyz_ring zx;

std::string g_cli_path;
std::filesystem::path g_scratch;

gcdcert::pair_witness_fn<bigint> euclid_provider(const std::vector<bigint>& elems) {
    return [&elems](std::size_t i, std::size_t j) {
        return gcdcert::ext_gcd(elems[i], elems[j]);
    };
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

polyz P(std::initializer_list<long long> coeffs) {
    std::vector<bigint> c;
    for (const auto x : coeffs) c.emplace_back(x);
    return polyz(std::move(c));
}

// ---- criterion bodies ------------------------------------------------

bool criterion1_combine_random(std::string& detail) {
    testutil::rng_t rng(101);
    const auto start = std::chrono::steady_clock::now();
    for (int it = 0; it < 1000; ++it) {
        const auto n = static_cast<std::size_t>(testutil::rand_int(rng, 2, 8));
        const auto elems = testutil::rand_nonzero_tuple(rng, n, -1000000, 1000000);
        const auto cert = gcdcert::combine_n(zz, elems, euclid_provider(elems));
        if (!verify_certificate(zz, cert)) {
            detail = "certificate failed to verify at iteration " + std::to_string(it);
            return false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
        detail = "runtime budget of 10s exceeded";
        return false;
    }
    return true;
}

bool criterion2_combine3_trace(std::string& detail) {
    testutil::rng_t rng(202);
    for (int it = 0; it < 500; ++it) {
        const auto e = testutil::rand_nonzero_tuple(rng, 3, -1000000, 1000000);
        const auto w12 = gcdcert::ext_gcd(e[0], e[1]);
        const auto w13 = gcdcert::ext_gcd(e[0], e[2]);
        const auto w23 = gcdcert::ext_gcd(e[1], e[2]);
        const auto [cert, tr] = gcdcert::combine3(zz, e[0], e[1], e[2], w12.u, w12.v,
                                                  w13.u, w13.v, w23.u, w23.v);
        const bool coprime = zz.gcd(tr.e[0], tr.e[1]) == 1 &&
                             zz.gcd(tr.e[1], tr.e[2]) == 1 &&
                             zz.gcd(tr.e[0], tr.e[2]) == 1;
        const bool identities =
            w12.u * tr.e[1] * tr.f[0] + w12.v * tr.e[0] * tr.f[1] == 1 &&
            w23.u * tr.e[2] * tr.f[1] + w23.v * tr.e[1] * tr.f[2] == 1 &&
            w13.v * tr.e[0] * tr.f[2] + w13.u * tr.e[2] * tr.f[0] == 1;
        if (!coprime || !identities) {
            detail = "trace invariant failed at iteration " + std::to_string(it);
            return false;
        }
    }
    return true;
}

bool criterion3_hand_traced(std::string& detail) {
    const auto [cert, trace] =
        gcdcert::combine3(zz, bigint(6), bigint(10), bigint(15), bigint(2), bigint(-1),
                          bigint(3), bigint(-1), bigint(-1), bigint(1));
    if (cert.gcd != 1 || cert.coefficients != std::vector<bigint>{6, 1, -3}) {
        detail = "expected gcd 1 with coefficients (6, 1, -3)";
        return false;
    }
    return true;
}

bool criterion4_intersection(std::string& detail) {
    testutil::rng_t rng(404);
    for (int it = 0; it < 1000; ++it) {
        const bigint a = testutil::rand_nonzero(rng, -1000000, 1000000);
        const bigint b = testutil::rand_nonzero(rng, -1000000, 1000000);
        const auto e = gcdcert::ext_gcd(a, b);
        const gcdcert::intersection_witness<bigint> w{a, b, e.g, e.u, e.v, a / e.g, b / e.g};
        const bigint m = gcdcert::intersect_principal(zz, w);
        if (m * e.g != a * b || boost::multiprecision::abs(m) !=
                                    boost::multiprecision::lcm(a, b)) {
            detail = "integer intersection failed at iteration " + std::to_string(it);
            return false;
        }
    }
    const gcdcert::intersection_witness<polyz> w{polyz::one_minus_xpow(2),
                                          polyz::one_minus_xpow(3),
                                          P({1, -1}),
                                          P({0, -1}),
                                          P({1}),
                                          P({1, 1}),
                                          P({1, 1, 1})};
    const polyz m = gcdcert::intersect_principal(zx, w);
    const polyz expected = P({1, 1, 0, -1, -1});
    if (!(m == expected || m == -expected)) {
        detail = "Z[x] intersection is not +-(1 + x - x^3 - x^4)";
        return false;
    }
    return true;
}

bool criterion5_sum_products(std::string& detail) {
    testutil::rng_t rng(505);
    const gcdcert::subset_witness_fn<bigint> provider =
        [](const std::vector<bigint>& s) { return gcdcert::int_subset_witness(s); };
    for (int it = 0; it < 500; ++it) {
        const auto n = static_cast<std::size_t>(testutil::rand_int(rng, 2, 6));
        std::vector<bigint> xs;
        for (std::size_t i = 0; i < n; ++i) {
            xs.emplace_back(testutil::rand_int(rng, 1, 10000));
        }
        const auto cert = gcdcert::sum_of_products(zz, xs, provider);
        if (!verify_sum_products(zz, cert)) {
            detail = "certificate failed at iteration " + std::to_string(it);
            return false;
        }
        bigint all = 1, l = 1, g = 0;
        for (const auto& x : xs) {
            all *= x;
            l = boost::multiprecision::lcm(l, x);
        }
        for (const auto& p : cert.products) g = zz.gcd(g, p);
        const bigint gen = cert.witness.generator;
        if (boost::multiprecision::abs(gen) != g || gen != all / l) {
            detail = "generator does not match the product/lcm oracle at iteration " +
                     std::to_string(it);
            return false;
        }
    }
    return true;
}

bool criterion6_theorem0_sweep(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    {
        const auto cert = gcdcert::theorem0_certificate({6, {2, 3}});
        if (cert.gcd != P({1, -1, 1}) || cert.coefficients[0] != P({1}) ||
            cert.coefficients[1] != P({0, -1})) {
            detail = "(D=6, d=(2,3)) does not yield gcd x^2-x+1 with coefficients (1, -x)";
            return false;
        }
    }
    std::size_t instances = 0;
    for (const std::uint64_t big_d : {6u, 12u, 24u, 30u, 36u, 60u}) {
        const auto ds = divisors_of(big_d);
        const std::uint32_t limit = (1u << ds.size()) - 1;
        for (std::uint32_t mask = 1; mask <= limit; ++mask) {
            if (std::popcount(mask) > 6) continue;
            divisor_instance inst{big_d, {}};
            for (std::size_t i = 0; i < ds.size(); ++i) {
                if (mask & (1u << i)) inst.divisors.push_back(ds[i]);
            }
            const auto cert = gcdcert::theorem0_certificate(inst);
            if (!verify_certificate(zx, cert) || !(cert.gcd == gcdcert::gcd_oracle(inst))) {
                detail = "instance D=" + std::to_string(big_d) + " mask=" +
                         std::to_string(mask) + " failed";
                return false;
            }
            ++instances;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = std::to_string(instances) + " instances";
    if (secs >= 60.0) {
        detail += "; runtime budget of 60s exceeded";
        return false;
    }
    return true;
}

bool criterion7_polyz_kernel(std::string& detail) {
    for (std::uint64_t a = 1; a <= 64; ++a) {
        for (std::uint64_t b = 1; b <= 64; ++b) {
            const auto [u, v] = gcdcert::binomial_bezout(a, b);
            const auto g = std::gcd(a, b);
            if (!(u * polyz::one_minus_xpow(a) + v * polyz::one_minus_xpow(b) ==
                  polyz::one_minus_xpow(g))) {
                detail = "binomial identity failed at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")";
                return false;
            }
            if (!verify_bezout(zx, gcdcert::binomial_bezout_pair(a, b))) {
                detail = "lifted binomial pair failed at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")";
                return false;
            }
        }
    }
    for (const std::uint64_t big_d : {6u, 12u, 24u, 30u, 36u, 60u}) {
        const auto ds = divisors_of(big_d);
        for (const auto di : ds) {
            for (const auto dj : ds) {
                const auto w = gcdcert::pairwise_witness(di, dj, big_d);
                const auto prs = zx.gcd(gcdcert::build_p(di, big_d),
                                        gcdcert::build_p(dj, big_d));
                if (!(w.g == prs)) {
                    detail = "constructive and remainder-sequence gcds disagree at D=" +
                             std::to_string(big_d);
                    return false;
                }
            }
        }
    }
    testutil::rng_t rng(707);
    for (int it = 0; it < 500; ++it) {
        const auto p = testutil::rand_polyz(rng, 8, 30);
        const auto q = testutil::rand_polyz(rng, 8, 30);
        const bigint n = testutil::rand_int(rng, -100, 100);
        const bigint gv = gcdcert::gcd(p, q).evaluate(n);
        const bigint iv = zz.gcd(p.evaluate(n), q.evaluate(n));
        const bool ok = gv == 0 ? iv == 0 : iv % gv == 0;
        if (!ok) {
            detail = "evaluation divisibility failed at iteration " + std::to_string(it);
            return false;
        }
    }
    return true;
}

// ---- criterion 8: CLI round trips and tampering ----------------------

int run_cli(const std::string& args) {
    const std::string cmd = "'" + g_cli_path + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool expect_exit(const std::string& args, int expected, std::string& detail) {
    const int got = run_cli(args);
    if (got != expected) {
        detail = "`" + args + "` exited " + std::to_string(got) + ", expected " +
                 std::to_string(expected);
        return false;
    }
    return true;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

bool criterion8_cli_round_trip(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path given (pass it as argv[1])";
        return false;
    }
    std::filesystem::create_directories(g_scratch);
    const auto path = [&](const char* name) { return (g_scratch / name).string(); };

    // A Z[x] combine input: elements 1-x^2, 1-x^3 with the binomial witness.
    write_file(g_scratch / "combine_polyz.json", R"({
      "elements": [{"coeffs": ["1", "0", "-1"]}, {"coeffs": ["1", "0", "0", "-1"]}],
      "witnesses": [{"i": 0, "j": 1, "u": {"coeffs": ["0", "-1"]}, "v": {"coeffs": ["1"]}}]
    })");

    const std::vector<std::string> emitters = {
        "combine --ring int --elements 6,10,15 -o '" + path("c_int.json") + "'",
        "combine --ring polyz --file '" + path("combine_polyz.json") + "' -o '" +
            path("c_polyz.json") + "'",
        "theorem0 -D 12 -d 2,3,4 -o '" + path("t0.json") + "'",
        "products --ring int --elements 4,6,10 -o '" + path("p_int.json") + "'",
        "products --ring polyz -D 6 -d 1,2,3 -o '" + path("p_polyz.json") + "'",
    };
    for (const auto& cmd : emitters) {
        if (!expect_exit(cmd, 0, detail)) return false;
    }
    for (const char* name : {"c_int.json", "c_polyz.json", "t0.json", "p_int.json",
                             "p_polyz.json"}) {
        if (!expect_exit("verify '" + path(name) + "'", 0, detail)) return false;
    }

    const auto load = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        return gcdcert::json::parse(in);
    };

    // Tamper class: coefficient.
    {
        auto doc = load(g_scratch / "c_int.json");
        doc["coefficients"][0] = "999";
        write_file(g_scratch / "tamper_coeff.json", doc.dump());
        if (!expect_exit("verify '" + path("tamper_coeff.json") + "'", 1, detail)) return false;
    }
    // Tamper class: gcd.
    {
        auto doc = load(g_scratch / "t0.json");
        auto cert = std::get<gcdcert::combination_certificate<polyz>>(
            gcdcert::certificate_from_json(doc));
        cert.gcd = cert.gcd * bigint(2);
        write_file(g_scratch / "tamper_gcd.json", gcdcert::to_json(cert).dump());
        if (!expect_exit("verify '" + path("tamper_gcd.json") + "'", 1, detail)) return false;
    }
    // Tamper class: multiplier.
    {
        auto doc = load(g_scratch / "p_int.json");
        doc["multipliers"][0] = "999";
        write_file(g_scratch / "tamper_mult.json", doc.dump());
        if (!expect_exit("verify '" + path("tamper_mult.json") + "'", 1, detail)) return false;
    }
    // Tamper class: truncation.
    {
        std::ifstream in(g_scratch / "t0.json");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        write_file(g_scratch / "tamper_trunc.json", text.substr(0, text.size() / 2));
        if (!expect_exit("verify '" + path("tamper_trunc.json") + "'", 2, detail)) return false;
    }
    // Invalid-input exits.
    if (!expect_exit("theorem0 -D 6 -d 4", 2, detail)) return false;
    write_file(g_scratch / "no_witness.json",
               R"({"elements": [{"coeffs": ["1", "0", "-1"]}, {"coeffs": ["1", "0", "0", "-1"]}]})");
    if (!expect_exit("combine --ring polyz --file '" + path("no_witness.json") + "'", 2,
                     detail)) {
        return false;
    }
    return true;
}

// ---- harness ----------------------------------------------------------

int g_failures = 0;

template <typename Fn>
void run(int number, const char* title, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    g_scratch = std::filesystem::temp_directory_path() /
                ("gcdcert-acceptance-" + std::to_string(::getpid()));

    run(1, "combination certificates over Z: 1000 random tuples verify exactly in <10s",
        criterion1_combine_random);
    run(2, "three-element trace: coprime cofactors and unit identities on 500 triples",
        criterion2_combine3_trace);
    run(3, "hand-traced (6,10,15) gives gcd 1 with coefficients (6,1,-3)",
        criterion3_hand_traced);
    run(4, "principal intersection: +-lcm and m*d = a*b on 1000 pairs, plus the Z[x] example",
        criterion4_intersection);
    run(5, "sum of products over Z: 500 random tuples match the product/lcm oracle",
        criterion5_sum_products);
    run(6, "divisor-family sweep over D in {6,12,24,30,36,60} matches the oracle in <60s",
        criterion6_theorem0_sweep);
    run(7, "Z[x] kernel: binomial identities to 64, gcd route agreement, evaluation divisibility",
        criterion7_polyz_kernel);
    run(8, "CLI round trip and tamper exit codes", criterion8_cli_round_trip);

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
