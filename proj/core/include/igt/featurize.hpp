//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_FEATURIZE_HPP_
#define IGT_FEATURIZE_HPP_

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "igt/molecule.hpp"
#include "igt/tensor.hpp"

namespace igt {

struct FeatureConfig {
  double pocket_cutoff = 8.0;
  double inter_cutoff = 5.0;
  int rbf_centers = 8;
  double rbf_sigma = 0.7;
  int k_pe = 8;
  bool atom_symbol_only = false;
  bool drop_inter_distance = false;
  bool inter_distance_only = false;
  bool drop_complex_intra_edge_features = false;

  void validate() const;
};

/// Node feature layout: element one-hot over {C,N,O,S,F,P,Cl,Br,I,B,other}
/// (11), covalent degree one-hot 0..5 clipped (6), formal charge one-hot
/// {-2,-1,0,+1,+2,other} (6), aromatic flag (1), molecule flag ligand=1 /
/// receptor=0 (1).
inline constexpr int kNodeFeatureDim = 25;

/// Edge feature layout: bond-type one-hot {single,double,triple,aromatic,
/// spatial} (5), intermolecular flag (1), then rbf_centers Gaussian distance
/// values with centers evenly spaced on [0, inter_cutoff].
int edge_feature_dim(const FeatureConfig &cfg);

enum class MoleculeTag { kLigand, kReceptor };
enum class EdgeKind { kIntraCovalent, kInterSpatial };

/// One featurized graph. Every undirected connection is stored as two
/// directed edges with identical feature rows.
struct MolGraph {
  std::size_t n_nodes = 0;
  ad::Tensor node_feat;                   // [n x kNodeFeatureDim]
  std::vector<std::pair<int, int>> edges; // directed
  ad::Tensor edge_feat;                   // [n_edges x edge_feature_dim]
  ad::Tensor pos_enc;                     // [n x k_pe], zero-padded
  ad::Tensor coords;                      // [n x 3], Angstrom
};

/// Ligand plus receptor-pocket union graph. Nodes are ordered ligand first.
/// lig_map / rec_map give the standalone-graph index of each complex node,
/// -1 for nodes of the other molecule.
struct ComplexGraph {
  MolGraph graph;
  std::vector<MoleculeTag> molecule_of;
  std::vector<EdgeKind> edge_kind;
  std::vector<int> lig_map;
  std::vector<int> rec_map;

  std::size_t n_ligand() const;
};

struct GraphSet {
  MolGraph ligand;
  MolGraph receptor;
  ComplexGraph complex;
};

std::vector<double> node_features(const Atom &atom, MoleculeTag tag,
                                  int degree, const FeatureConfig &cfg);

/// `order` empty means a spatial (non-covalent) edge.
std::vector<double> edge_features(double d, std::optional<BondOrder> order,
                                  bool is_inter, const FeatureConfig &cfg);

/// Single bonds for every heavy-atom pair within 1.3 x the sum of covalent
/// radii. PDB receptors carry no bond table, so connectivity is recovered
/// geometrically.
std::vector<Bond> infer_receptor_bonds(const Molecule &mol);

/// Receptor atoms within pocket_cutoff of any ligand atom, with inferred
/// bonds on the retained subset. Throws EmptyPocketError when nothing is in
/// range.
Molecule extract_pocket(const Molecule &receptor, const Molecule &ligand,
                        const FeatureConfig &cfg);

enum class SignMode { kRandom, kCanonical };

/// Eigenvectors of the symmetric normalized Laplacian for the k_pe smallest
/// nonzero eigenvalues, zero-padded on the right. values holds one
/// eigenvalue per non-padding column.
struct LaplacianPe {
  ad::Tensor vectors; // [n x k_pe]
  std::vector<double> values;
};

/// Dense symmetric normalized Laplacian I - D^(-1/2) A D^(-1/2), row-major
/// n x n. Isolated nodes contribute an identity row.
std::vector<double> normalized_laplacian(
    std::size_t n, const std::vector<std::pair<int, int>> &edges);

LaplacianPe laplacian_pe(std::size_t n,
                         const std::vector<std::pair<int, int>> &edges,
                         int k_pe, SignMode sign_mode,
                         std::mt19937_64 *rng = nullptr);

/// Assemble the three graphs from an already-extracted pocket. Throws
/// NoContactError when no ligand-receptor pair is within inter_cutoff.
GraphSet build_graphs(const Molecule &receptor_pocket, const Molecule &ligand,
                      const FeatureConfig &cfg,
                      SignMode sign_mode = SignMode::kCanonical,
                      std::mt19937_64 *rng = nullptr);

/// extract_pocket followed by build_graphs.
GraphSet featurize_complex(const Molecule &receptor, const Molecule &ligand,
                           const FeatureConfig &cfg,
                           SignMode sign_mode = SignMode::kCanonical,
                           std::mt19937_64 *rng = nullptr);

} // namespace igt

#endif // IGT_FEATURIZE_HPP_
