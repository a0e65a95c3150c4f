//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/sdf.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "igt/elements.hpp"
#include "igt/error.hpp"

namespace igt {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string rstrip(const std::string &s) {
  std::size_t e = s.find_last_not_of("\r\n");
  return e == std::string::npos ? "" : s.substr(0, e + 1);
}

int parse_int(const std::string &field, long line_no, const char *what) {
  const std::string t = trim(field);
  if (t.empty())
    throw ParseError(std::string("missing ") + what, line_no);
  try {
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size())
      throw std::invalid_argument(t);
    return v;
  } catch (const std::exception &) {
    throw ParseError(std::string("malformed ") + what + " '" + t + "'",
                     line_no);
  }
}

double parse_double(const std::string &field, long line_no, const char *what) {
  const std::string t = trim(field);
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (t.empty() || pos != t.size() || !std::isfinite(v))
      throw std::invalid_argument(t);
    return v;
  } catch (const std::exception &) {
    throw ParseError(std::string("malformed ") + what + " '" + t + "'",
                     line_no);
  }
}

// Old-style atom-block charge codes.
int charge_from_code(int code) {
  switch (code) {
  case 1: return 3;
  case 2: return 2;
  case 3: return 1;
  case 5: return -1;
  case 6: return -2;
  case 7: return -3;
  default: return 0; // 0 = uncharged, 4 = radical (charge 0)
  }
}

bool is_record_end(const std::string &line) {
  return line.rfind("$$$$", 0) == 0;
}

} // namespace

std::vector<Molecule> parse_sdf(std::istream &in) {
  std::vector<Molecule> out;
  std::string line;
  long line_no = 0;

  auto next_line = [&](std::string *dst) {
    if (!std::getline(in, *dst))
      return false;
    ++line_no;
    *dst = rstrip(*dst);
    return true;
  };

  while (true) {
    // Skip blank lines between records; EOF here is a clean end.
    std::string name;
    bool have_name = false;
    while (next_line(&name)) {
      if (!trim(name).empty() || out.empty()) {
        have_name = true;
        break;
      }
    }
    if (!have_name)
      break;
    if (in.eof() && trim(name).empty())
      break;

    Molecule mol;
    mol.name = trim(name);
    std::string skip;
    if (!next_line(&skip) || !next_line(&skip))
      throw ParseError("truncated SDF header", line_no);

    std::string counts;
    if (!next_line(&counts))
      throw ParseError("missing SDF counts line", line_no);
    if (counts.find("V3000") != std::string::npos)
      throw ParseError("V3000 connection tables are not supported", line_no);
    const int n_atoms = parse_int(counts.substr(0, 3), line_no, "atom count");
    const int n_bonds = parse_int(
        counts.size() >= 6 ? counts.substr(3, 3) : "", line_no, "bond count");
    if (n_atoms < 0 || n_bonds < 0)
      throw ParseError("negative counts", line_no);

    for (int i = 0; i < n_atoms; ++i) {
      std::string row;
      if (!next_line(&row) || is_record_end(row) || row.rfind("M  ", 0) == 0)
        throw ParseError("counts line declares " + std::to_string(n_atoms) +
                             " atoms but atom block ends after " +
                             std::to_string(i),
                         line_no);
      if (row.size() < 32)
        throw ParseError("atom row too short", line_no);
      Atom atom;
      atom.position[0] = parse_double(row.substr(0, 10), line_no, "x coordinate");
      atom.position[1] = parse_double(row.substr(10, 10), line_no, "y coordinate");
      atom.position[2] = parse_double(row.substr(20, 10), line_no, "z coordinate");
      atom.element = canonicalize_element(row.substr(31, std::min<std::size_t>(3, row.size() - 31)));
      if (row.size() >= 39)
        atom.formal_charge = charge_from_code(
            parse_int(row.substr(36, 3), line_no, "charge code"));
      atom.source_index = i;
      mol.atoms.push_back(std::move(atom));
    }

    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < n_bonds; ++i) {
      std::string row;
      if (!next_line(&row) || is_record_end(row) || row.rfind("M  ", 0) == 0)
        throw ParseError("counts line declares " + std::to_string(n_bonds) +
                             " bonds but bond block ends after " +
                             std::to_string(i),
                         line_no);
      if (row.size() < 9)
        throw ParseError("bond row too short", line_no);
      const int a = parse_int(row.substr(0, 3), line_no, "bond atom index");
      const int b = parse_int(row.substr(3, 3), line_no, "bond atom index");
      const int code = parse_int(row.substr(6, 3), line_no, "bond order code");
      if (a < 1 || a > n_atoms || b < 1 || b > n_atoms || a == b)
        throw ParseError("bond endpoints (" + std::to_string(a) + "," +
                             std::to_string(b) + ") out of range",
                         line_no);
      if (code < 1 || code > 4)
        throw ParseError("unknown bond order code " + std::to_string(code),
                         line_no);
      if (!seen.insert(std::minmax(a, b)).second)
        throw ParseError("duplicate bond (" + std::to_string(a) + "," +
                             std::to_string(b) + ")",
                         line_no);
      mol.bonds.push_back({a - 1, b - 1, static_cast<BondOrder>(code)});
    }

    // Properties and data items up to the record terminator.
    bool terminated = false;
    std::string prop;
    while (next_line(&prop)) {
      if (is_record_end(prop)) {
        terminated = true;
        break;
      }
      if (prop.rfind("M  CHG", 0) == 0) {
        std::istringstream ss(prop.substr(6));
        int n = 0;
        if (ss >> n) {
          for (int k = 0; k < n; ++k) {
            int idx = 0, chg = 0;
            if (!(ss >> idx >> chg) || idx < 1 || idx > n_atoms)
              throw ParseError("malformed M  CHG property", line_no);
            mol.atoms[idx - 1].formal_charge = chg;
          }
        }
      }
    }

    // An atom is aromatic when it carries an aromatic bond.
    for (const Bond &b : mol.bonds) {
      if (b.order == BondOrder::Aromatic) {
        mol.atoms[b.i].is_aromatic = true;
        mol.atoms[b.j].is_aromatic = true;
      }
    }

    out.push_back(std::move(mol));
    if (!terminated)
      break; // last record may omit the terminator
  }
  return out;
}

std::vector<Molecule> parse_sdf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sdf(in);
}

std::vector<Molecule> parse_sdf_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open SDF file: " + path);
  return parse_sdf(in);
}

std::string write_sdf(const Molecule &mol) {
  std::ostringstream os;
  os << mol.name << "\n  IGT\n\n";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n",
                static_cast<int>(mol.atoms.size()),
                static_cast<int>(mol.bonds.size()));
  os << buf;
  for (const Atom &a : mol.atoms) {
    std::snprintf(buf, sizeof(buf), "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                  a.position[0], a.position[1], a.position[2],
                  a.element.c_str());
    os << buf;
  }
  for (const Bond &b : mol.bonds) {
    std::snprintf(buf, sizeof(buf), "%3d%3d%3d  0\n", b.i + 1, b.j + 1,
                  static_cast<int>(b.order));
    os << buf;
  }
  for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
    if (mol.atoms[i].formal_charge != 0) {
      std::snprintf(buf, sizeof(buf), "M  CHG  1 %3d %3d\n",
                    static_cast<int>(i + 1), mol.atoms[i].formal_charge);
      os << buf;
    }
  }
  os << "M  END\n$$$$\n";
  return os.str();
}

} // namespace igt
