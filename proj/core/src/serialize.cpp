#include "gcdcert/serialize.hpp"

namespace gcdcert {

namespace {

json array_of(const std::vector<bigint>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

json array_of(const std::vector<polyz>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

std::vector<bigint> bigints_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<bigint> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(bigint_from_json(e));
    return out;
}

std::vector<polyz> polys_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<polyz> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(polyz_from_json(e));
    return out;
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw invalid_input(std::string("missing field \"") + name + "\"");
    return *it;
}

template <typename E, typename FromJson>
combination_certificate<E> combination_from_json(const json& j, FromJson&& elems) {
    combination_certificate<E> cert;
    cert.elements = elems(field(j, "elements"), "elements");
    cert.coefficients = elems(field(j, "coefficients"), "coefficients");
    const json& g = field(j, "gcd");
    if constexpr (std::is_same_v<E, bigint>) {
        cert.gcd = bigint_from_json(g);
    } else {
        cert.gcd = polyz_from_json(g);
    }
    return cert;
}

template <typename E, typename FromJson>
sum_products_certificate<E> sum_products_from_json(const json& j, FromJson&& elems) {
    sum_products_certificate<E> cert;
    cert.inputs = elems(field(j, "inputs"), "inputs");
    cert.products = elems(field(j, "products"), "products");
    cert.witness.generators = cert.products;
    cert.witness.combination = elems(field(j, "combination"), "combination");
    cert.witness.multipliers = elems(field(j, "multipliers"), "multipliers");
    const json& g = field(j, "generator");
    if constexpr (std::is_same_v<E, bigint>) {
        cert.witness.generator = bigint_from_json(g);
    } else {
        cert.witness.generator = polyz_from_json(g);
    }
    return cert;
}

} // namespace

json to_json(const bigint& v) { return v.str(); }

json to_json(const polyz& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"coeffs", std::move(coeffs)}};
}

bigint bigint_from_json(const json& j) {
    if (!j.is_string()) throw invalid_input("integers must be decimal strings");
    try {
        return bigint(j.get<std::string>());
    } catch (const std::exception&) {
        throw invalid_input("not a decimal integer: " + j.dump());
    }
}

polyz polyz_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("polynomials must be objects with a \"coeffs\" array");
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw invalid_input("\"coeffs\" must be an array");
    std::vector<bigint> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(bigint_from_json(e));
    if (!c.empty() && c.back() == 0) {
        throw invalid_input("polynomial coefficients must not end in a zero");
    }
    return polyz(std::move(c));
}

json to_json(const combination_certificate<bigint>& cert) {
    return json{{"ring", "int"},
                {"elements", array_of(cert.elements)},
                {"gcd", to_json(cert.gcd)},
                {"coefficients", array_of(cert.coefficients)}};
}

json to_json(const combination_certificate<polyz>& cert) {
    return json{{"ring", "polyz"},
                {"elements", array_of(cert.elements)},
                {"gcd", to_json(cert.gcd)},
                {"coefficients", array_of(cert.coefficients)}};
}

json to_json(const sum_products_certificate<bigint>& cert) {
    return json{{"ring", "int"},
                {"inputs", array_of(cert.inputs)},
                {"products", array_of(cert.products)},
                {"generator", to_json(cert.witness.generator)},
                {"combination", array_of(cert.witness.combination)},
                {"multipliers", array_of(cert.witness.multipliers)}};
}

json to_json(const sum_products_certificate<polyz>& cert) {
    return json{{"ring", "polyz"},
                {"inputs", array_of(cert.inputs)},
                {"products", array_of(cert.products)},
                {"generator", to_json(cert.witness.generator)},
                {"combination", array_of(cert.witness.combination)},
                {"multipliers", array_of(cert.witness.multipliers)}};
}

parsed_certificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("certificate must be a JSON object");
    const json& ring_tag = field(j, "ring");
    if (!ring_tag.is_string()) throw invalid_input("\"ring\" must be \"int\" or \"polyz\"");
    const std::string ring = ring_tag.get<std::string>();
    const bool over_int = ring == "int";
    if (!over_int && ring != "polyz") {
        throw invalid_input("\"ring\" must be \"int\" or \"polyz\"");
    }

    const bool is_sum_products = j.contains("products");
    if (!is_sum_products && !j.contains("coefficients")) {
        throw invalid_input("certificate matches neither schema "
                            "(no \"coefficients\" and no \"products\")");
    }
    if (over_int) {
        if (is_sum_products) return sum_products_from_json<bigint>(j, bigints_from_json);
        return combination_from_json<bigint>(j, bigints_from_json);
    }
    if (is_sum_products) return sum_products_from_json<polyz>(j, polys_from_json);
    return combination_from_json<polyz>(j, polys_from_json);
}

std::string verify_failure(const parsed_certificate& cert) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, combination_certificate<bigint>>) {
                return certificate_failure(int_ring{}, c);
            } else if constexpr (std::is_same_v<T, combination_certificate<polyz>>) {
                return certificate_failure(polyz_ring{}, c);
            } else if constexpr (std::is_same_v<T, sum_products_certificate<bigint>>) {
                return sum_products_failure(int_ring{}, c);
            } else {
                return sum_products_failure(polyz_ring{}, c);
            }
        },
        cert);
}

} // namespace gcdcert
