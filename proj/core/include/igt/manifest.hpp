//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_MANIFEST_HPP_
#define IGT_MANIFEST_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace igt {

/// One (receptor, ligand pose, label) unit from a dataset manifest.
struct ExampleRecord {
  std::string id;
  std::string target_id;
  std::string receptor_path;
  std::string ligand_path;
  int pose_index = 0;
  std::optional<int> label;    // 0 or 1 when present
  std::optional<double> rmsd;  // Angstrom, >= 0 when present

  bool operator==(const ExampleRecord &) const = default;
};

/// Read a newline-delimited manifest: one flat JSON object per line with
/// required keys id, target_id, receptor_path, ligand_path, pose_index and
/// optional keys label, rmsd. Unknown keys are rejected. Missing optional
/// fields stay absent. Throws ParseError with the record's line number on a
/// missing/invalid field and on a duplicate id.
std::vector<ExampleRecord> read_manifest(std::istream &in);
std::vector<ExampleRecord> read_manifest(const std::string &path);

/// Serialize one record as a single-line JSON object (fixed key order).
std::string manifest_line(const ExampleRecord &rec);

void write_manifest(std::ostream &out, const std::vector<ExampleRecord> &recs);
void write_manifest(const std::string &path,
                    const std::vector<ExampleRecord> &recs);

} // namespace igt

#endif // IGT_MANIFEST_HPP_
