//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_DATASET_HPP_
#define IGT_DATASET_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "igt/featurize.hpp"
#include "igt/manifest.hpp"
#include "igt/molecule.hpp"

namespace igt {

/// One manifest record with its featurized graphs.
struct PreparedExample {
  ExampleRecord record;
  GraphSet graphs;
};

/// Parses and caches structure files, strips ligand hydrogens, and picks the
/// record's pose out of multi-pose SDF files.
class StructureCache {
public:
  const Molecule &receptor(const std::string &path);
  const Molecule &ligand_pose(const std::string &path, int pose_index);

private:
  std::unordered_map<std::string, Molecule> receptors_;
  std::unordered_map<std::string, std::vector<Molecule>> ligands_;
};

/// Featurize every record with canonical PE signs. Paths resolve relative to
/// the working directory. Throws the first underlying parse/graph error.
std::vector<PreparedExample> load_examples(
    const std::vector<ExampleRecord> &records, const FeatureConfig &cfg);

/// Per-record outcome for dataset preflight: either node/edge counts or the
/// error message that featurization raised.
struct PrepareRow {
  std::string id;
  std::string target_id;
  bool ok = false;
  std::size_t ligand_atoms = 0;
  std::size_t pocket_atoms = 0;
  std::size_t complex_nodes = 0;
  std::size_t inter_edges = 0; // undirected count
  std::string error;
};

std::vector<PrepareRow> prepare_examples(
    const std::vector<ExampleRecord> &records, const FeatureConfig &cfg);

} // namespace igt

#endif // IGT_DATASET_HPP_
