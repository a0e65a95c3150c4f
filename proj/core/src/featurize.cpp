//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/featurize.hpp"

#include <algorithm>
#include <cmath>

#include "igt/elements.hpp"
#include "igt/error.hpp"
#include "igt/jacobi.hpp"

namespace igt {

namespace {

constexpr double kEigenZeroTol = 1e-8;

// Node feature block offsets.
constexpr int kDegreeOffset = kElementOneHotSize; // 11
constexpr int kChargeOffset = kDegreeOffset + 6;  // 17
constexpr int kAromaticIndex = kChargeOffset + 6; // 23
constexpr int kMoleculeIndex = kAromaticIndex + 1;

// Edge feature block offsets.
constexpr int kBondTypeSize = 5;
constexpr int kInterFlagIndex = kBondTypeSize;
constexpr int kRbfOffset = kBondTypeSize + 1;

std::vector<int> covalent_degrees(const Molecule &mol) {
  std::vector<int> degree(mol.size(), 0);
  for (const Bond &b : mol.bonds) {
    ++degree[b.i];
    ++degree[b.j];
  }
  return degree;
}

ad::Tensor coords_tensor(const Molecule &mol) {
  ad::Tensor out(mol.size(), 3);
  for (std::size_t i = 0; i < mol.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k)
      out.at(i, k) = mol.atoms[i].position[k];
  return out;
}

struct EdgeAccum {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<double>> rows;

  void add_undirected(int i, int j, const std::vector<double> &feat) {
    edges.emplace_back(i, j);
    rows.push_back(feat);
    edges.emplace_back(j, i);
    rows.push_back(feat);
  }

  ad::Tensor feature_matrix(int dim) const {
    ad::Tensor out(rows.size(), static_cast<std::size_t>(dim));
    for (std::size_t e = 0; e < rows.size(); ++e)
      for (int c = 0; c < dim; ++c)
        out.at(e, c) = rows[e][static_cast<std::size_t>(c)];
    return out;
  }
};

} // namespace

void FeatureConfig::validate() const {
  if (pocket_cutoff <= 0 || inter_cutoff <= 0)
    throw ConfigError("feature cutoffs must be positive");
  if (rbf_centers < 2)
    throw ConfigError("rbf_centers must be at least 2");
  if (rbf_sigma <= 0)
    throw ConfigError("rbf_sigma must be positive");
  if (k_pe < 1)
    throw ConfigError("k_pe must be at least 1");
}

int edge_feature_dim(const FeatureConfig &cfg) {
  return kRbfOffset + cfg.rbf_centers;
}

std::size_t ComplexGraph::n_ligand() const {
  return static_cast<std::size_t>(
      std::count(molecule_of.begin(), molecule_of.end(),
                 MoleculeTag::kLigand));
}

std::vector<double> node_features(const Atom &atom, MoleculeTag tag,
                                  int degree, const FeatureConfig &cfg) {
  std::vector<double> f(kNodeFeatureDim, 0.0);
  f[static_cast<std::size_t>(element_one_hot_index(atom.element))] = 1.0;
  const int deg_bucket = std::clamp(degree, 0, 5);
  f[static_cast<std::size_t>(kDegreeOffset + deg_bucket)] = 1.0;
  const int q = atom.formal_charge;
  const int q_bucket = (q >= -2 && q <= 2) ? q + 2 : 5;
  f[static_cast<std::size_t>(kChargeOffset + q_bucket)] = 1.0;
  if (atom.is_aromatic)
    f[kAromaticIndex] = 1.0;
  if (tag == MoleculeTag::kLigand)
    f[kMoleculeIndex] = 1.0;
  if (cfg.atom_symbol_only)
    for (int k = kDegreeOffset; k < kMoleculeIndex; ++k)
      f[static_cast<std::size_t>(k)] = 0.0;
  return f;
}

std::vector<double> edge_features(double d, std::optional<BondOrder> order,
                                  bool is_inter, const FeatureConfig &cfg) {
  std::vector<double> f(static_cast<std::size_t>(edge_feature_dim(cfg)), 0.0);
  int type_index = 4; // spatial
  if (order) {
    switch (*order) {
    case BondOrder::Single:
      type_index = 0;
      break;
    case BondOrder::Double:
      type_index = 1;
      break;
    case BondOrder::Triple:
      type_index = 2;
      break;
    case BondOrder::Aromatic:
      type_index = 3;
      break;
    }
  }
  f[static_cast<std::size_t>(type_index)] = 1.0;
  if (is_inter)
    f[kInterFlagIndex] = 1.0;
  const double spacing = cfg.inter_cutoff / (cfg.rbf_centers - 1);
  const double denom = 2.0 * cfg.rbf_sigma * cfg.rbf_sigma;
  for (int m = 0; m < cfg.rbf_centers; ++m) {
    const double mu = spacing * m;
    f[static_cast<std::size_t>(kRbfOffset + m)] =
        std::exp(-(d - mu) * (d - mu) / denom);
  }
  if (cfg.inter_distance_only) {
    for (int k = 0; k < kBondTypeSize; ++k)
      f[static_cast<std::size_t>(k)] = 0.0;
  }
  if (cfg.drop_inter_distance && is_inter) {
    for (int m = 0; m < cfg.rbf_centers; ++m)
      f[static_cast<std::size_t>(kRbfOffset + m)] = 0.0;
  }
  return f;
}

std::vector<Bond> infer_receptor_bonds(const Molecule &mol) {
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < mol.size(); ++i) {
    const double ri = covalent_radius(mol.atoms[i].element);
    for (std::size_t j = i + 1; j < mol.size(); ++j) {
      const double rj = covalent_radius(mol.atoms[j].element);
      const double d = distance(mol.atoms[i].position, mol.atoms[j].position);
      if (d <= 1.3 * (ri + rj))
        bonds.push_back({static_cast<int>(i), static_cast<int>(j),
                         BondOrder::Single});
    }
  }
  return bonds;
}

Molecule extract_pocket(const Molecule &receptor, const Molecule &ligand,
                        const FeatureConfig &cfg) {
  Molecule pocket;
  pocket.name = receptor.name;
  for (const Atom &ra : receptor.atoms) {
    for (const Atom &la : ligand.atoms) {
      if (distance(ra.position, la.position) <= cfg.pocket_cutoff) {
        pocket.atoms.push_back(ra);
        break;
      }
    }
  }
  if (pocket.atoms.empty())
    throw EmptyPocketError("no receptor atom within " +
                           std::to_string(cfg.pocket_cutoff) +
                           " A of the ligand");
  pocket.bonds = infer_receptor_bonds(pocket);
  return pocket;
}

std::vector<double> normalized_laplacian(
    std::size_t n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<double> adj(n * n, 0.0);
  std::vector<double> deg(n, 0.0);
  for (const auto &[i, j] : edges)
    adj[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      deg[i] += adj[i * n + j];
  std::vector<double> lap(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    lap[i * n + i] = 1.0;
    if (deg[i] == 0.0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i * n + j] == 0.0 || deg[j] == 0.0)
        continue;
      lap[i * n + j] -= 1.0 / std::sqrt(deg[i] * deg[j]);
    }
  }
  return lap;
}

LaplacianPe laplacian_pe(std::size_t n,
                         const std::vector<std::pair<int, int>> &edges,
                         int k_pe, SignMode sign_mode, std::mt19937_64 *rng) {
  if (k_pe < 1)
    throw ConfigError("k_pe must be at least 1");
  const std::vector<double> lap = normalized_laplacian(n, edges);
  const SymmetricEigen eig = jacobi_eigen(lap, n);

  LaplacianPe out;
  out.vectors = ad::Tensor(n, static_cast<std::size_t>(k_pe));
  int col = 0;
  for (std::size_t e = 0; e < n && col < k_pe; ++e) {
    if (eig.values[e] <= kEigenZeroTol)
      continue;
    std::vector<double> v(n);
    for (std::size_t r = 0; r < n; ++r)
      v[r] = eig.vector_at(r, e);

    bool flip = false;
    if (sign_mode == SignMode::kCanonical) {
      std::size_t arg = 0;
      double best = std::abs(v[0]);
      for (std::size_t r = 1; r < n; ++r)
        if (std::abs(v[r]) > best) {
          best = std::abs(v[r]);
          arg = r;
        }
      flip = v[arg] < 0.0;
    } else {
      if (rng == nullptr)
        throw ConfigError("random sign mode requires an rng");
      flip = ((*rng)() & 1ull) != 0;
    }
    for (std::size_t r = 0; r < n; ++r)
      out.vectors.at(r, static_cast<std::size_t>(col)) = flip ? -v[r] : v[r];
    out.values.push_back(eig.values[e]);
    ++col;
  }
  return out;
}

namespace {

MolGraph build_component_graph(const Molecule &mol, MoleculeTag tag,
                               const FeatureConfig &cfg, SignMode sign_mode,
                               std::mt19937_64 *rng) {
  MolGraph g;
  g.n_nodes = mol.size();
  g.coords = coords_tensor(mol);

  const std::vector<int> degree = covalent_degrees(mol);
  g.node_feat = ad::Tensor(mol.size(), kNodeFeatureDim);
  for (std::size_t i = 0; i < mol.size(); ++i) {
    const std::vector<double> f =
        node_features(mol.atoms[i], tag, degree[i], cfg);
    for (int c = 0; c < kNodeFeatureDim; ++c)
      g.node_feat.at(i, static_cast<std::size_t>(c)) =
          f[static_cast<std::size_t>(c)];
  }

  EdgeAccum acc;
  for (const Bond &b : mol.bonds) {
    const double d =
        distance(mol.atoms[b.i].position, mol.atoms[b.j].position);
    acc.add_undirected(b.i, b.j, edge_features(d, b.order, false, cfg));
  }
  g.edges = acc.edges;
  g.edge_feat = acc.feature_matrix(edge_feature_dim(cfg));
  g.pos_enc = laplacian_pe(g.n_nodes, g.edges, cfg.k_pe, sign_mode, rng).vectors;
  return g;
}

} // namespace

GraphSet build_graphs(const Molecule &receptor_pocket, const Molecule &ligand,
                      const FeatureConfig &cfg, SignMode sign_mode,
                      std::mt19937_64 *rng) {
  cfg.validate();
  if (ligand.atoms.empty())
    throw EmptyStructureError("ligand has no atoms");
  if (receptor_pocket.atoms.empty())
    throw EmptyPocketError("receptor pocket has no atoms");

  GraphSet set;
  set.ligand = build_component_graph(ligand, MoleculeTag::kLigand, cfg,
                                     sign_mode, rng);
  set.receptor = build_component_graph(receptor_pocket, MoleculeTag::kReceptor,
                                       cfg, sign_mode, rng);

  const std::size_t n_lig = ligand.size();
  const std::size_t n_total = n_lig + receptor_pocket.size();

  ComplexGraph &cg = set.complex;
  cg.graph.n_nodes = n_total;
  cg.molecule_of.assign(n_total, MoleculeTag::kReceptor);
  cg.lig_map.assign(n_total, -1);
  cg.rec_map.assign(n_total, -1);
  for (std::size_t i = 0; i < n_lig; ++i) {
    cg.molecule_of[i] = MoleculeTag::kLigand;
    cg.lig_map[i] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < receptor_pocket.size(); ++j)
    cg.rec_map[n_lig + j] = static_cast<int>(j);

  cg.graph.coords = ad::Tensor(n_total, 3);
  cg.graph.node_feat = ad::Tensor(n_total, kNodeFeatureDim);
  for (std::size_t i = 0; i < n_lig; ++i)
    for (std::size_t c = 0; c < 3; ++c)
      cg.graph.coords.at(i, c) = set.ligand.coords.at(i, c);
  for (std::size_t j = 0; j < receptor_pocket.size(); ++j)
    for (std::size_t c = 0; c < 3; ++c)
      cg.graph.coords.at(n_lig + j, c) = set.receptor.coords.at(j, c);
  for (std::size_t i = 0; i < n_lig; ++i)
    for (int c = 0; c < kNodeFeatureDim; ++c)
      cg.graph.node_feat.at(i, static_cast<std::size_t>(c)) =
          set.ligand.node_feat.at(i, static_cast<std::size_t>(c));
  for (std::size_t j = 0; j < receptor_pocket.size(); ++j)
    for (int c = 0; c < kNodeFeatureDim; ++c)
      cg.graph.node_feat.at(n_lig + j, static_cast<std::size_t>(c)) =
          set.receptor.node_feat.at(j, static_cast<std::size_t>(c));

  EdgeAccum acc;
  std::vector<EdgeKind> kinds;
  auto add = [&](int i, int j, const std::vector<double> &feat,
                 EdgeKind kind) {
    acc.add_undirected(i, j, feat);
    kinds.push_back(kind);
    kinds.push_back(kind);
  };

  const std::size_t zero_dim =
      static_cast<std::size_t>(edge_feature_dim(cfg));
  const std::vector<double> zero_row(zero_dim, 0.0);
  for (const Bond &b : ligand.bonds) {
    const double d =
        distance(ligand.atoms[b.i].position, ligand.atoms[b.j].position);
    std::vector<double> f = edge_features(d, b.order, false, cfg);
    if (cfg.drop_complex_intra_edge_features)
      f = zero_row;
    add(b.i, b.j, f, EdgeKind::kIntraCovalent);
  }
  for (const Bond &b : receptor_pocket.bonds) {
    const double d = distance(receptor_pocket.atoms[b.i].position,
                              receptor_pocket.atoms[b.j].position);
    std::vector<double> f = edge_features(d, b.order, false, cfg);
    if (cfg.drop_complex_intra_edge_features)
      f = zero_row;
    add(static_cast<int>(n_lig) + b.i, static_cast<int>(n_lig) + b.j, f,
        EdgeKind::kIntraCovalent);
  }
  std::size_t n_inter = 0;
  for (std::size_t i = 0; i < n_lig; ++i) {
    for (std::size_t j = 0; j < receptor_pocket.size(); ++j) {
      const double d = distance(ligand.atoms[i].position,
                                receptor_pocket.atoms[j].position);
      if (d > cfg.inter_cutoff)
        continue;
      add(static_cast<int>(i), static_cast<int>(n_lig + j),
          edge_features(d, std::nullopt, true, cfg), EdgeKind::kInterSpatial);
      ++n_inter;
    }
  }
  if (n_inter == 0)
    throw NoContactError("no ligand-receptor atom pair within " +
                         std::to_string(cfg.inter_cutoff) + " A");

  cg.graph.edges = acc.edges;
  cg.graph.edge_feat = acc.feature_matrix(edge_feature_dim(cfg));
  cg.edge_kind = std::move(kinds);
  cg.graph.pos_enc =
      laplacian_pe(n_total, cg.graph.edges, cfg.k_pe, sign_mode, rng).vectors;
  return set;
}

GraphSet featurize_complex(const Molecule &receptor, const Molecule &ligand,
                           const FeatureConfig &cfg, SignMode sign_mode,
                           std::mt19937_64 *rng) {
  const Molecule pocket = extract_pocket(receptor, ligand, cfg);
  return build_graphs(pocket, ligand, cfg, sign_mode, rng);
}

} // namespace igt
