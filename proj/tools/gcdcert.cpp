// Command-line front end: construct and verify gcd-combination and
// sum-of-products certificates over arbitrary-precision integers and Z[x].
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcdcert/cyclo.hpp"
#include "gcdcert/serialize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kInvalidInput = 2;

constexpr std::uint64_t kMaxPeriod = 10000;

using gcdcert::bigint;
using gcdcert::json;
using gcdcert::polyz;

std::vector<bigint> parse_int_list(const std::string& csv) {
    std::vector<bigint> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(bigint(item));
        } catch (const std::exception&) {
            throw gcdcert::invalid_input("not a decimal integer: " + item);
        }
    }
    if (out.empty()) throw gcdcert::invalid_input("empty element list");
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gcdcert::invalid_input("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw gcdcert::invalid_input(std::string("JSON parse error: ") + e.what());
    }
}

void emit(const json& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw gcdcert::invalid_input("cannot write " + output_path);
    out << doc.dump(2) << "\n";
}

gcdcert::divisor_instance make_instance(std::uint64_t period,
                                        const std::vector<std::uint64_t>& divisors) {
    if (period > kMaxPeriod) {
        throw gcdcert::invalid_input("period exceeds the supported bound of 10000");
    }
    gcdcert::divisor_instance inst{period, divisors};
    inst.validate();
    return inst;
}

int run_combine_int(const std::string& elements_csv, const std::string& output_path) {
    const auto elements = parse_int_list(elements_csv);
    const gcdcert::int_ring ring;
    const gcdcert::pair_witness_fn<bigint> provider = [&](std::size_t i, std::size_t j) {
        return gcdcert::ext_gcd(elements[i], elements[j]);
    };
    const auto cert = gcdcert::combine_n(ring, elements, provider);
    const auto failure = gcdcert::certificate_failure(ring, cert);
    if (!failure.empty()) {
        std::cerr << "internal error: produced certificate does not verify: " << failure << "\n";
        return kVerifyFailure;
    }
    emit(gcdcert::to_json(cert), output_path);
    return kOk;
}

int run_combine_polyz(const std::string& input_path, const std::string& output_path) {
    const json doc = read_json_file(input_path);
    if (!doc.is_object()) throw gcdcert::invalid_input("input must be a JSON object");
    if (!doc.contains("elements")) throw gcdcert::invalid_input("missing field \"elements\"");

    std::vector<polyz> elements;
    for (const auto& e : doc.at("elements")) elements.push_back(gcdcert::polyz_from_json(e));

    // Pairwise witnesses are required up front: general Bezout synthesis in
    // Z[x] is out of scope, so the caller must supply u, v for each pair the
    // recursion touches.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<polyz, polyz>> witnesses;
    if (doc.contains("witnesses")) {
        for (const auto& w : doc.at("witnesses")) {
            if (!w.is_object() || !w.contains("i") || !w.contains("j") ||
                !w.contains("u") || !w.contains("v") || !w.at("i").is_number_unsigned() ||
                !w.at("j").is_number_unsigned()) {
                throw gcdcert::invalid_input(
                    "each witness needs numeric \"i\", \"j\" and polynomial \"u\", \"v\"");
            }
            const auto i = w.at("i").get<std::size_t>();
            const auto j = w.at("j").get<std::size_t>();
            if (i >= elements.size() || j >= elements.size() || i == j) {
                throw gcdcert::invalid_input("witness indices out of range");
            }
            witnesses[{i, j}] = {gcdcert::polyz_from_json(w.at("u")),
                                 gcdcert::polyz_from_json(w.at("v"))};
        }
    }

    const gcdcert::polyz_ring ring;
    const gcdcert::pair_witness_fn<polyz> provider = [&](std::size_t i, std::size_t j) {
        auto it = witnesses.find({i, j});
        bool flipped = false;
        if (it == witnesses.end()) {
            it = witnesses.find({j, i});
            flipped = true;
        }
        if (it == witnesses.end()) {
            throw gcdcert::invalid_input("missing witness for element pair (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        const auto& [u, v] = it->second;
        gcdcert::bezout_pair<polyz> pair{elements[i], elements[j],
                                         ring.gcd(elements[i], elements[j]),
                                         flipped ? v : u, flipped ? u : v};
        return gcdcert::absorb_unit(ring, std::move(pair));
    };

    const auto cert = gcdcert::combine_n(ring, elements, provider);
    const auto failure = gcdcert::certificate_failure(ring, cert);
    if (!failure.empty()) {
        std::cerr << "internal error: produced certificate does not verify: " << failure << "\n";
        return kVerifyFailure;
    }
    emit(gcdcert::to_json(cert), output_path);
    return kOk;
}

int run_theorem0(std::uint64_t period, const std::vector<std::uint64_t>& divisors,
                 const std::string& output_path) {
    const auto inst = make_instance(period, divisors);
    const auto cert = gcdcert::theorem0_certificate(inst);

    const gcdcert::polyz_ring ring;
    const auto failure = gcdcert::certificate_failure(ring, cert);
    if (!failure.empty()) {
        std::cerr << "internal error: certificate does not verify: " << failure << "\n";
        return kVerifyFailure;
    }
    const polyz oracle = gcdcert::gcd_oracle(inst);
    if (!(oracle == cert.gcd)) {
        std::cerr << "internal error: certificate gcd " << cert.gcd.str()
                  << " disagrees with the oracle " << oracle.str() << "\n";
        return kVerifyFailure;
    }
    emit(gcdcert::to_json(cert), output_path);
    return kOk;
}

int run_products_int(const std::string& elements_csv, const std::string& output_path) {
    const auto elements = parse_int_list(elements_csv);
    if (elements.size() < 2) throw gcdcert::invalid_input("need at least two elements");
    const gcdcert::int_ring ring;
    const auto cert = gcdcert::sum_of_products(
        ring, elements,
        [](const std::vector<bigint>& subset) { return gcdcert::int_subset_witness(subset); });
    const auto failure = gcdcert::sum_products_failure(ring, cert);
    if (!failure.empty()) {
        std::cerr << "verification failure: " << failure << "\n";
        return kVerifyFailure;
    }
    emit(gcdcert::to_json(cert), output_path);
    return kOk;
}

int run_products_polyz(std::uint64_t period, const std::vector<std::uint64_t>& divisors,
                       const std::string& output_path) {
    const auto inst = make_instance(period, divisors);
    if (inst.divisors.size() < 2) throw gcdcert::invalid_input("need at least two divisors");

    std::vector<polyz> elements;
    for (const auto d : inst.divisors) elements.push_back(gcdcert::build_p(d, inst.period));

    const gcdcert::polyz_ring ring;
    gcdcert::theorem0_subset_witness provider(inst);
    const auto cert = gcdcert::sum_of_products(
        ring, elements,
        [&provider](const std::vector<polyz>& subset) { return provider(subset); });
    const auto failure = gcdcert::sum_products_failure(ring, cert);
    if (!failure.empty()) {
        std::cerr << "verification failure: " << failure << "\n";
        return kVerifyFailure;
    }
    emit(gcdcert::to_json(cert), output_path);
    return kOk;
}

int run_verify(const std::string& path) {
    const json doc = read_json_file(path);
    const auto cert = gcdcert::certificate_from_json(doc);
    const auto failure = gcdcert::verify_failure(cert);
    if (!failure.empty()) {
        std::cout << "FAIL: " << failure << "\n";
        return kVerifyFailure;
    }
    std::cout << "OK: certificate verifies\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witness certificates for gcd linear combinations and "
                 "principal-ideal arithmetic over Z and Z[x]"};
    app.require_subcommand(1);

    std::string ring = "int";
    std::string elements_csv;
    std::string input_path;
    std::string output_path;
    std::string verify_path;
    std::uint64_t period = 0;
    std::vector<std::uint64_t> divisors;

    auto* combine = app.add_subcommand(
        "combine", "Certify gcd(p_1..p_n) as a linear combination of the p_i");
    combine->add_option("--ring", ring, "Ring: int or polyz")
        ->check(CLI::IsMember({"int", "polyz"}));
    combine->add_option("--elements", elements_csv, "Comma-separated integers (ring=int)");
    combine->add_option("--file", input_path,
                        "JSON input with \"elements\" and pairwise \"witnesses\" (ring=polyz)");
    combine->add_option("-o,--output", output_path, "Output path (default: stdout)");

    auto* theorem0 = app.add_subcommand(
        "theorem0", "Certify gcd of the family (1 - x^D)/(1 - x^d_i) over Z[x]");
    theorem0->add_option("-D,--period", period, "Common period D")->required();
    theorem0->add_option("-d,--divisors", divisors, "Comma-separated divisors of D")
        ->required()
        ->delimiter(',');
    theorem0->add_option("-o,--output", output_path, "Output path (default: stdout)");

    auto* products = app.add_subcommand(
        "products", "Certify that the (n-1)-fold products generate a principal ideal");
    products->add_option("--ring", ring, "Ring: int or polyz")
        ->check(CLI::IsMember({"int", "polyz"}));
    products->add_option("--elements", elements_csv, "Comma-separated integers (ring=int)");
    products->add_option("-D,--period", period, "Common period D (ring=polyz)");
    products->add_option("-d,--divisors", divisors, "Comma-separated divisors of D (ring=polyz)")
        ->delimiter(',');
    products->add_option("-o,--output", output_path, "Output path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Verify a certificate file");
    verify->add_option("path", verify_path, "Certificate JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (combine->parsed()) {
            if (ring == "int") {
                if (elements_csv.empty()) {
                    throw gcdcert::invalid_input("--elements is required for ring=int");
                }
                return run_combine_int(elements_csv, output_path);
            }
            if (input_path.empty()) {
                throw gcdcert::invalid_input("--file is required for ring=polyz");
            }
            return run_combine_polyz(input_path, output_path);
        }
        if (theorem0->parsed()) {
            return run_theorem0(period, divisors, output_path);
        }
        if (products->parsed()) {
            if (ring == "int") {
                if (elements_csv.empty()) {
                    throw gcdcert::invalid_input("--elements is required for ring=int");
                }
                return run_products_int(elements_csv, output_path);
            }
            return run_products_polyz(period, divisors, output_path);
        }
        if (verify->parsed()) {
            return run_verify(verify_path);
        }
    } catch (const gcdcert::invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const gcdcert::invalid_witness& e) {
        std::cerr << "invalid witness: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const gcdcert::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
