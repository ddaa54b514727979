#include "textio.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gsd {

using nlohmann::json;

mpq_class parse_rational_string(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

namespace {

json parse_object(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  return j;
}

int json_dimension(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("missing integer field 'n'");
  return j["n"].get<int>();
}

template <typename EntryParser>
void read_entries(const json& j, int n, EntryParser&& parse) {
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != n)
    throw std::invalid_argument("'entries' must be an n x n array of strings");
  for (int r = 0; r < n; ++r) {
    const auto& row = j["entries"][r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("'entries' must be an n x n array of strings");
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_string()) throw std::invalid_argument("matrix entries must be strings");
      parse(r + 1, c + 1, row[c].template get<std::string>());
    }
  }
}

}  // namespace

SymmetricMatrix matrix_from_json(const std::string& text) {
  json j = parse_object(text);
  int n = json_dimension(j);
  GroundSet check(n);
  std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
  read_entries(j, n, [&](int r, int c, const std::string& s) {
    rows[r - 1][c - 1] = parse_rational_string(s);
  });
  return SymmetricMatrix::from_rows(rows);
}

std::string matrix_to_json(const SymmetricMatrix& m) {
  json rows = json::array();
  for (int r = 1; r <= m.n(); ++r) {
    json row = json::array();
    for (int c = 1; c <= m.n(); ++c) row.push_back(rational_string(m.at(r, c)));
    rows.push_back(row);
  }
  return json{{"n", m.n()}, {"entries", rows}}.dump();
}

EpsMatrix eps_matrix_from_json(const std::string& text) {
  json j = parse_object(text);
  int n = json_dimension(j);
  GroundSet check(n);
  EpsMatrix m(n);
  std::vector<std::vector<EpsPoly>> entries(n, std::vector<EpsPoly>(n));
  read_entries(j, n,
               [&](int r, int c, const std::string& s) { entries[r - 1][c - 1] = EpsPoly::parse(s); });
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c) {
      if (!(entries[r - 1][c - 1] == entries[c - 1][r - 1]))
        throw std::invalid_argument("e-matrix is not symmetric");
      m.set(r, c, entries[r - 1][c - 1]);
    }
  return m;
}

Valuation valuation_from_json(const std::string& text) {
  json j = parse_object(text);
  int n = json_dimension(j);
  const auto& tab = SymbolTable::get(n);
  if (!j.contains("values") || !j["values"].is_object())
    throw std::invalid_argument("missing object field 'values'");
  Valuation nu(n);
  std::vector<bool> present(tab.size(), false);
  for (const auto& [key, value] : j["values"].items()) {
    Symbol s = tab.parse_symbol(key);
    if (!value.is_string()) throw std::invalid_argument("values must be strings");
    std::string sv = value.get<std::string>();
    int ord = tab.index(s);
    present[ord] = true;
    nu.values[ord] = (sv == "inf") ? Val::infinity() : Val::of(parse_rational_string(sv));
  }
  for (int ord = 0; ord < tab.size(); ++ord)
    if (!present[ord])
      throw std::invalid_argument("valuation must be total: missing " + tab.name(ord));
  return nu;
}

std::string valuation_to_json(const Valuation& nu) {
  const auto& tab = SymbolTable::get(nu.n);
  json values = json::object();
  for (int ord = 0; ord < tab.size(); ++ord) values[tab.name(ord)] = val_str(nu.values[ord]);
  return json{{"n", nu.n}, {"values", values}}.dump();
}

}  // namespace gsd
