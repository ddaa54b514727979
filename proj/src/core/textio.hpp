// JSON and text adapters for the file formats: rational strings "p/q",
// matrix JSON, valuation JSON, e-matrix JSON, and the census / orbit /
// certificate summaries used by the command line tool.
#pragma once

#include <string>
#include <string_view>

#include "cube.hpp"
#include "epspoly.hpp"
#include "valuated.hpp"

namespace gsd {

mpq_class parse_rational_string(std::string_view text);
std::string rational_string(const mpq_class& q);

// { "n": 3, "entries": [["0","1/2",...], ...] }
SymmetricMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const SymmetricMatrix& m);

// Same shape with polynomial entries like "1 - e^7".
EpsMatrix eps_matrix_from_json(const std::string& text);

// { "n": 4, "values": { "p": "0", "a12|3": "4", ... } }; "inf" allowed.
Valuation valuation_from_json(const std::string& text);
std::string valuation_to_json(const Valuation& nu);

}  // namespace gsd
