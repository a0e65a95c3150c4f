//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/dataset.hpp"

#include <utility>

#include "igt/error.hpp"
#include "igt/pdb.hpp"
#include "igt/sdf.hpp"

namespace igt {

const Molecule &StructureCache::receptor(const std::string &path) {
  auto it = receptors_.find(path);
  if (it == receptors_.end())
    it = receptors_.emplace(path, parse_pdb_file(path)).first;
  return it->second;
}

const Molecule &StructureCache::ligand_pose(const std::string &path,
                                            int pose_index) {
  auto it = ligands_.find(path);
  if (it == ligands_.end()) {
    std::vector<Molecule> poses = parse_sdf_file(path);
    for (Molecule &m : poses)
      m = strip_hydrogens(m);
    it = ligands_.emplace(path, std::move(poses)).first;
  }
  if (pose_index < 0 ||
      static_cast<std::size_t>(pose_index) >= it->second.size())
    throw Error("pose_index " + std::to_string(pose_index) +
                " out of range for " + path + " (" +
                std::to_string(it->second.size()) + " poses)");
  return it->second[static_cast<std::size_t>(pose_index)];
}

std::vector<PreparedExample> load_examples(
    const std::vector<ExampleRecord> &records, const FeatureConfig &cfg) {
  StructureCache cache;
  std::vector<PreparedExample> out;
  out.reserve(records.size());
  for (const ExampleRecord &r : records) {
    const Molecule &receptor = cache.receptor(r.receptor_path);
    const Molecule &ligand = cache.ligand_pose(r.ligand_path, r.pose_index);
    out.push_back({r, featurize_complex(receptor, ligand, cfg)});
  }
  return out;
}

std::vector<PrepareRow> prepare_examples(
    const std::vector<ExampleRecord> &records, const FeatureConfig &cfg) {
  StructureCache cache;
  std::vector<PrepareRow> rows;
  rows.reserve(records.size());
  for (const ExampleRecord &r : records) {
    PrepareRow row;
    row.id = r.id;
    row.target_id = r.target_id;
    try {
      const Molecule &receptor = cache.receptor(r.receptor_path);
      const Molecule &ligand = cache.ligand_pose(r.ligand_path, r.pose_index);
      const Molecule pocket = extract_pocket(receptor, ligand, cfg);
      const GraphSet graphs = build_graphs(pocket, ligand, cfg);
      row.ok = true;
      row.ligand_atoms = ligand.size();
      row.pocket_atoms = pocket.size();
      row.complex_nodes = graphs.complex.graph.n_nodes;
      std::size_t inter = 0;
      for (EdgeKind k : graphs.complex.edge_kind)
        inter += static_cast<std::size_t>(k == EdgeKind::kInterSpatial);
      row.inter_edges = inter / 2;
    } catch (const Error &e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace igt
