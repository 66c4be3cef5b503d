#pragma once

/**
 * @file expr.hpp
 * @brief Mini-language for arithmetic functions on the command line.
 *
 *   expr := "mu" | "eps" | "one" | "phi"
 *         | "pow:" int              delta^a, a may be negative
 *         | "agamma:" int           indicator of gamma-th powers
 *         | "restrict:" int "(" expr ")"
 *         | "mul(" expr "," expr ")"          pointwise product
 *         | "dirichlet(" expr "," expr ")"
 *         | "gconv:" int "(" expr "," expr ")"   gconv:g(a,b) = a *_g b
 *
 * Whitespace is not allowed. A function list is a comma-separated
 * sequence of expressions; commas nested inside parentheses do not split.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsum/arithfn.hpp"

namespace ramsum::cli {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ArithFn parse_fn(std::string_view text);
std::vector<ArithFn> parse_fn_list(std::string_view text);
/// Comma-separated integers; the empty string gives an empty list.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace ramsum::cli
