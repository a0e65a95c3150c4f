//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_ELEMENTS_HPP_
#define IGT_ELEMENTS_HPP_

#include <string>
#include <string_view>

namespace igt {

/// Canonicalize an element symbol: first letter upper-case, rest lower-case
/// ("CL" -> "Cl"). Whitespace is stripped. Unrecognized symbols map to "X".
std::string canonicalize_element(std::string_view raw);

/// True if `symbol` (already canonical) is a periodic-table symbol.
bool is_known_element(std::string_view symbol);

/// Covalent radius in Angstrom. Unlisted elements get a carbon-like default.
double covalent_radius(std::string_view symbol);

/// Position of `symbol` in the node-feature one-hot alphabet
/// {C,N,O,S,F,P,Cl,Br,I,B,other}; returns the "other" slot (10) for anything
/// not in the first ten.
int element_one_hot_index(std::string_view symbol);

inline constexpr int kElementOneHotSize = 11;

} // namespace igt

#endif // IGT_ELEMENTS_HPP_
