//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/elements.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace igt {

namespace {

const std::unordered_set<std::string> &symbol_set() {
  static const std::unordered_set<std::string> kSymbols = {
      "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
      "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
      "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
      "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
      "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
      "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
      "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
      "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
      "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
      "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
  };
  return kSymbols;
}

// Cordero et al. single-bond covalent radii for elements common in
// protein-ligand structures; low-spin values for the 3d metals.
const std::unordered_map<std::string, double> &radius_table() {
  static const std::unordered_map<std::string, double> kRadii = {
      {"H", 0.31},  {"B", 0.84},  {"C", 0.76},  {"N", 0.71},  {"O", 0.66},
      {"F", 0.57},  {"Na", 1.66}, {"Mg", 1.41}, {"Al", 1.21}, {"Si", 1.11},
      {"P", 1.07},  {"S", 1.05},  {"Cl", 1.02}, {"K", 2.03},  {"Ca", 1.76},
      {"Mn", 1.39}, {"Fe", 1.32}, {"Co", 1.26}, {"Ni", 1.24}, {"Cu", 1.32},
      {"Zn", 1.22}, {"As", 1.19}, {"Se", 1.20}, {"Br", 1.20}, {"Mo", 1.54},
      {"Cd", 1.44}, {"I", 1.39},  {"W", 1.62},  {"Pt", 1.36}, {"Au", 1.36},
      {"Hg", 1.32},
  };
  return kRadii;
}

} // namespace

std::string canonicalize_element(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  }
  if (s.empty())
    return "X";
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i)
    s[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
  if (!is_known_element(s)) {
    // A two-letter guess that misses may still hide a one-letter symbol
    // ("Hb" from an atom name like HB2 is really hydrogen).
    if (s.size() > 1 && is_known_element(s.substr(0, 1)))
      return s.substr(0, 1);
    return "X";
  }
  return s;
}

bool is_known_element(std::string_view symbol) {
  return symbol_set().count(std::string(symbol)) > 0;
}

double covalent_radius(std::string_view symbol) {
  auto it = radius_table().find(std::string(symbol));
  if (it != radius_table().end())
    return it->second;
  return 0.76;
}

int element_one_hot_index(std::string_view symbol) {
  static const std::array<std::string_view, 10> kAlphabet = {
      "C", "N", "O", "S", "F", "P", "Cl", "Br", "I", "B"};
  for (int i = 0; i < static_cast<int>(kAlphabet.size()); ++i)
    if (symbol == kAlphabet[i])
      return i;
  return 10;
}

} // namespace igt
