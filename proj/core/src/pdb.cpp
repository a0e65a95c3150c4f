//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/pdb.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "igt/elements.hpp"
#include "igt/error.hpp"

namespace igt {

namespace {

// 1-based inclusive column slice, tolerant of short lines.
std::string slice(const std::string &line, std::size_t first, std::size_t last) {
  if (line.size() < first)
    return "";
  return line.substr(first - 1, last - first + 1);
}

std::string trim(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_coord(const std::string &field, long line_no, const char *axis) {
  const std::string t = trim(field);
  if (t.empty())
    throw ParseError(std::string("missing ") + axis + " coordinate", line_no);
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception &) {
    throw ParseError(std::string("malformed ") + axis + " coordinate '" + t +
                         "'",
                     line_no);
  }
  if (pos != t.size() || !std::isfinite(v))
    throw ParseError(std::string("malformed ") + axis + " coordinate '" + t +
                         "'",
                     line_no);
  return v;
}

// Element from the atom-name field when columns 77-78 are absent: skip
// leading spaces and digits, take the run of alphabetic characters.
std::string element_from_name(const std::string &name) {
  std::size_t b = 0;
  while (b < name.size() &&
         !std::isalpha(static_cast<unsigned char>(name[b])))
    ++b;
  std::string run;
  while (b < name.size() && std::isalpha(static_cast<unsigned char>(name[b])))
    run.push_back(name[b++]);
  return canonicalize_element(run);
}

} // namespace

Molecule parse_pdb(std::istream &in, const PdbOptions &opts) {
  Molecule mol;
  std::string line;
  long line_no = 0;
  int source_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string record = slice(line, 1, 6);
    const bool is_atom = record.rfind("ATOM", 0) == 0;
    const bool is_het = record.rfind("HETATM", 0) == 0;
    if (!is_atom && !is_het)
      continue;
    const int this_index = source_index++;
    if (is_het && !opts.keep_hetero)
      continue;

    const char alt_loc = line.size() >= 17 ? line[16] : ' ';
    if (alt_loc != ' ' && alt_loc != 'A')
      continue;

    Atom atom;
    atom.position[0] = parse_coord(slice(line, 31, 38), line_no, "x");
    atom.position[1] = parse_coord(slice(line, 39, 46), line_no, "y");
    atom.position[2] = parse_coord(slice(line, 47, 54), line_no, "z");

    const std::string elem_field = trim(slice(line, 77, 78));
    if (!elem_field.empty())
      atom.element = canonicalize_element(elem_field);
    else
      atom.element = element_from_name(slice(line, 13, 16));
    if (atom.element == "H")
      continue;

    atom.source_index = this_index;
    mol.atoms.push_back(std::move(atom));
  }
  if (mol.atoms.empty())
    throw EmptyStructureError("PDB input contains no usable heavy atoms");
  return mol;
}

Molecule parse_pdb(std::string_view text, const PdbOptions &opts) {
  std::istringstream in{std::string(text)};
  return parse_pdb(in, opts);
}

Molecule parse_pdb_file(const std::string &path, const PdbOptions &opts) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open PDB file: " + path);
  Molecule mol = parse_pdb(in, opts);
  mol.name = path;
  return mol;
}

} // namespace igt
