#ifndef GCDCERT_SERIALIZE_HPP
#define GCDCERT_SERIALIZE_HPP

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "gcdcert/combine.hpp"
#include "gcdcert/ideal_products.hpp"
#include "gcdcert/int_ring.hpp"
#include "gcdcert/polyz.hpp"

namespace gcdcert {

// All integers serialize as decimal strings, so no value is ever squeezed
// through a floating-point or fixed-width path.  A polynomial serializes as
// {"coeffs": [c0, c1, ...]} in ascending degree with no trailing zeros; the
// zero polynomial is {"coeffs": []}.

using json = nlohmann::ordered_json;

json to_json(const bigint& v);
json to_json(const polyz& p);
bigint bigint_from_json(const json& j);
polyz polyz_from_json(const json& j);

// Combination certificates:
//   {"ring": "int"|"polyz", "elements": [...], "gcd": ..., "coefficients": [...]}
json to_json(const combination_certificate<bigint>& cert);
json to_json(const combination_certificate<polyz>& cert);

// Sum-of-products certificates:
//   {"ring": ..., "inputs": [...], "products": [...], "generator": ...,
//    "combination": [...], "multipliers": [...]}
json to_json(const sum_products_certificate<bigint>& cert);
json to_json(const sum_products_certificate<polyz>& cert);

/// Any of the two certificate kinds over either ring, as read back from disk.
using parsed_certificate =
    std::variant<combination_certificate<bigint>, combination_certificate<polyz>,
                 sum_products_certificate<bigint>, sum_products_certificate<polyz>>;

/// Dispatches on the "ring" tag and the schema ("coefficients" vs
/// "products"); malformed documents raise invalid_input.
parsed_certificate certificate_from_json(const json& j);

/// Empty when the certificate verifies; otherwise the name of the first
/// failing invariant.
std::string verify_failure(const parsed_certificate& cert);

} // namespace gcdcert

#endif
