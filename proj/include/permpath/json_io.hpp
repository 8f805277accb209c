#pragma once

#include <json.hpp>

#include "permpath/bigint.hpp"
#include "permpath/bijections.hpp"
#include "permpath/lattice_path.hpp"
#include "permpath/permutation.hpp"
#include "permpath/series.hpp"

namespace permpath::json {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings. Readers accept either.
json from_bigint(const BigInt& v);
BigInt to_bigint(const json& j);

/// [2, 1, 4]
json encode(const Permutation& p);
Permutation decode_permutation(const json& j);

/// ["U", "U", "D", "D"]
json encode(const LatticePath& p);
LatticePath decode_path(const json& j);

/// {"coeffs": [1, -3, 1]}
json encode(const IntPolynomial& p);
IntPolynomial decode_polynomial(const json& j);

/// {"rho": [...], "sigma": [...] or null, "param": k}
json encode(const Decomposition& d);
Decomposition decode_decomposition(const json& j);

}  // namespace permpath::json
