#pragma once

/// @file serialize.hpp
/// @brief JSON forms of tables, reports and hypermatrices. Rationals are
/// "p/q" strings (integers without a denominator); arrays keep
/// lexicographic index order so output is byte-stable.

#include <json.hpp>

#include "ramsum/dseries.hpp"
#include "ramsum/fourier.hpp"
#include "ramsum/hyperdet.hpp"

namespace ramsum {

using Json = nlohmann::ordered_json;

/// {"modulus": r, "coeffs": [{"d": [..], "value": "p/q"}, ..]}. Block
/// tables with several moduli write "modulus" as an array.
Json to_json(const EvenCoeffTable& table);

/// {"identity", "bound", "status": "ok" | "mismatch", "first_mismatch"}.
/// "first_mismatch" is null when the sides agree.
Json to_json(const VerificationReport& report);

/// {"dim": k, "order": n, "entries": ["p/q", ..]} in row-major order.
Json to_json(const Hypermatrix& a);

}  // namespace ramsum
