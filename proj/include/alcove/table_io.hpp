#pragma once

#include <string>

#include "alcove/fusion.hpp"

namespace alcove {

// Deterministic JSON form of a table: fixed key order, basis rows in basis
// order, constants sorted by (i, j, k), coefficients as decimal strings so
// arbitrarily large integers survive the round trip.
std::string table_to_json(const FusionTable& table);
FusionTable table_from_json(const std::string& text);

// CSV with header "i,j,k,n", one structure constant per row, same ordering
// as the JSON form.  The basis travels in a sibling CSV ("index,c0,...").
std::string table_to_csv(const FusionTable& table);
std::string basis_to_csv(const FusionTable& table);
FusionTable table_from_csv(TableKind kind, const std::string& family, int rank,
                           i64 l, const std::string& table_csv,
                           const std::string& basis_csv);

}  // namespace alcove
