#pragma once

#include "exprings/epoly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace exprings {

/// Parses the term language
///
///     epoly  := ['+'|'-'] term (('+'|'-') term)*
///     term   := [coeff '*'] factor ('*' factor)* ['/' coeff] | coeff
///     factor := atom ['^'<digits>] | 'i'
///     atom   := 'X'<digits> | 'E' '(' epoly ')' | '(' epoly ')'
///
/// over `nvars` variables.  E-nodes are evaluated through epoly_E, so an
/// argument with constant term outside A(R) raises PartialityError.
EPoly parse_epoly(std::string_view text, std::size_t nvars, const BaseField& base = {});

std::string print_epoly(const EPoly& p);

/// Largest variable index mentioned in the text (0 when none).
std::size_t max_variable_index(std::string_view text);

/// One epoly per non-empty line; lines starting with '#' are comments.
std::vector<EPoly> parse_epoly_list(std::string_view text, std::size_t nvars, const BaseField& base = {});

/// Structured export, schema "epoly/1".
nlohmann::json to_json(const EPoly& p);
EPoly epoly_from_json(const nlohmann::json& j);

}  // namespace exprings
