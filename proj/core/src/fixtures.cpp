//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/fixtures.hpp"

#include "igt/pdb.hpp"
#include "igt/sdf.hpp"

namespace igt {
namespace {

const char kReceptorPdb[] = R"TXT(ATOM      1  N   GLY A   1      -5.739   5.955   2.784  1.00 20.00           N
ATOM      2  CA  GLY A   1      -4.465   5.922   3.582  1.00 20.00           C
ATOM      3  C   GLY A   1      -3.230   5.961   2.793  1.00 20.00           C
ATOM      4  O   GLY A   1      -3.168   5.943   1.594  1.00 20.00           O
ATOM      5  N   SER A   2      -2.041   5.934   3.454  1.00 20.00           N
ATOM      6  CA  SER A   2      -0.836   5.982   2.649  1.00 20.00           C
ATOM      7  C   SER A   2       0.505   5.905   3.520  1.00 20.00           C
ATOM      8  O   SER A   2       0.497   6.015   4.687  1.00 20.00           O
ATOM      9  CB  SER A   2      -0.881   4.861   1.583  1.00 20.00           C
ATOM     10  OG  SER A   2      -0.408   4.357   0.380  1.00 20.00           O
ATOM     11  N   ALA A   3       1.594   5.949   2.780  1.00 20.00           N
ATOM     12  CA  ALA A   3       2.912   5.947   3.538  1.00 20.00           C
ATOM     13  C   ALA A   3       4.223   5.937   2.761  1.00 20.00           C
ATOM     14  O   ALA A   3       4.120   5.959   1.561  1.00 20.00           O
ATOM     15  CB  ALA A   3       2.913   4.860   4.564  1.00 20.00           C
ATOM     16  N   MET A   4       5.322   6.026   3.428  1.00 20.00           N
ATOM     17  CA  MET A   4       6.559   5.968   2.620  1.00 20.00           C
ATOM     18  C   MET A   4       7.752   5.965   3.499  1.00 20.00           C
ATOM     19  O   MET A   4       7.792   5.956   4.684  1.00 20.00           O
ATOM     20  CB  MET A   4       6.516   4.863   1.632  1.00 20.00           C
ATOM     21  CG  MET A   4       7.669   3.912   1.860  1.00 20.00           C
ATOM     22  SD  MET A   4       8.580   3.147   3.248  1.00 20.00           S
ATOM     23  CE  MET A   4      10.186   3.356   3.911  1.00 20.00           C
ATOM     24  N   GLY A   9      19.000  13.000   9.500  1.00 20.00           N
ATOM     25  CA  GLY A   9      20.327  13.510   9.160  1.00 20.00           C
ATOM     26  C   GLY A   9      20.648  14.928   9.565  1.00 20.00           C
ATOM     27  O   GLY A   9      19.954  15.789  10.085  1.00 20.00           O
END
)TXT";

const char kLigandSdf[] = R"TXT(LIG-1
  fixture

 12 12  0  0  0  0  0  0  0  0999 V2000
    0.1020    1.2030    0.0620 S   0  0  0  0  0  0  0  0  0  0  0  0
    1.2910    0.3720   -0.0410 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.7640   -0.9020   -0.1180 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6610   -0.8690   -0.0670 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.2280    0.3920    0.0430 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.5693    1.0612    0.2925 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.8322    2.1656    0.7658 O   0  0  0  0  0  0  0  0  0  0  0  0
    3.7394    0.4482    0.0139 N   0  0  0  0  0  0  0  0  0  0  0  0
    4.7827    1.2719   -0.5901 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.2614   -2.0698    0.2059 O   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6661   -3.3200   -0.1513 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.6760   -4.2737    0.4659 C   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  4  0
  2  3  4  0
  3  4  4  0
  4  5  4  0
  5  1  4  0
  2  6  1  0
  6  7  2  0
  6  8  1  0
  8  9  1  0
  4 10  1  0
 10 11  1  0
 11 12  1  0
M  CHG  1   8   1
M  END
$$$$
)TXT";

const char kPosesSdf[] = R"TXT(LIG-1
  fixture

 12 12  0  0  0  0  0  0  0  0999 V2000
    0.1020    1.2030    0.0620 S   0  0  0  0  0  0  0  0  0  0  0  0
    1.2910    0.3720   -0.0410 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.7640   -0.9020   -0.1180 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6610   -0.8690   -0.0670 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.2280    0.3920    0.0430 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.5693    1.0612    0.2925 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.8322    2.1656    0.7658 O   0  0  0  0  0  0  0  0  0  0  0  0
    3.7394    0.4482    0.0139 N   0  0  0  0  0  0  0  0  0  0  0  0
    4.7827    1.2719   -0.5901 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.2614   -2.0698    0.2059 O   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6661   -3.3200   -0.1513 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.6760   -4.2737    0.4659 C   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  4  0
  2  3  4  0
  3  4  4  0
  4  5  4  0
  5  1  4  0
  2  6  1  0
  6  7  2  0
  6  8  1  0
  8  9  1  0
  4 10  1  0
 10 11  1  0
 11 12  1  0
M  CHG  1   8   1
M  END
$$$$
LIG-1 pose2
  fixture

 12 12  0  0  0  0  0  0  0  0999 V2000
   -0.1126    1.1955    0.9519 S   0  0  0  0  0  0  0  0  0  0  0  0
    1.3180    1.0960   -0.0321 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.6576   -1.1419   -0.4794 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.4687   -1.4740   -0.4324 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.5352    0.7901   -0.0440 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.4057    0.7152    1.0115 C   0  0  0  0  0  0  0  0  0  0  0  0
    3.0878    1.7569    0.1908 O   0  0  0  0  0  0  0  0  0  0  0  0
    3.4952    0.2978    0.0847 N   0  0  0  0  0  0  0  0  0  0  0  0
    5.2946    1.2845   -0.2937 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.8274   -1.7785    0.3061 O   0  0  0  0  0  0  0  0  0  0  0  0
   -0.1483   -2.8133    0.0779 C   0  0  0  0  0  0  0  0  0  0  0  0
   -2.5786   -4.4490   -0.4598 C   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  4  0
  2  3  4  0
  3  4  4  0
  4  5  4  0
  5  1  4  0
  2  6  1  0
  6  7  2  0
  6  8  1  0
  8  9  1  0
  4 10  1  0
 10 11  1  0
 11 12  1  0
M  CHG  1   8   1
M  END
$$$$
LIG-1 pose3
  fixture

 12 12  0  0  0  0  0  0  0  0999 V2000
    5.1020    0.6030   -2.7380 S   0  0  0  0  0  0  0  0  0  0  0  0
    6.2910   -0.2280   -2.8410 C   0  0  0  0  0  0  0  0  0  0  0  0
    5.7640   -1.5020   -2.9180 C   0  0  0  0  0  0  0  0  0  0  0  0
    4.3390   -1.4690   -2.8670 C   0  0  0  0  0  0  0  0  0  0  0  0
    3.7720   -0.2080   -2.7570 C   0  0  0  0  0  0  0  0  0  0  0  0
    7.5693    0.4612   -2.5075 C   0  0  0  0  0  0  0  0  0  0  0  0
    7.8322    1.5656   -2.0342 O   0  0  0  0  0  0  0  0  0  0  0  0
    8.7394   -0.1518   -2.7861 N   0  0  0  0  0  0  0  0  0  0  0  0
    9.7827    0.6719   -3.3901 C   0  0  0  0  0  0  0  0  0  0  0  0
    3.7386   -2.6698   -2.5941 O   0  0  0  0  0  0  0  0  0  0  0  0
    4.3339   -3.9200   -2.9513 C   0  0  0  0  0  0  0  0  0  0  0  0
    3.3240   -4.8737   -2.3341 C   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  4  0
  2  3  4  0
  3  4  4  0
  4  5  4  0
  5  1  4  0
  2  6  1  0
  6  7  2  0
  6  8  1  0
  8  9  1  0
  4 10  1  0
 10 11  1  0
 11 12  1  0
M  CHG  1   8   1
M  END
$$$$
)TXT";

} // namespace

const std::string &fixture_receptor_pdb() {
  static const std::string text(kReceptorPdb);
  return text;
}

const std::string &fixture_ligand_sdf() {
  static const std::string text(kLigandSdf);
  return text;
}

const std::string &fixture_poses_sdf() {
  static const std::string text(kPosesSdf);
  return text;
}

Molecule fixture_receptor() { return parse_pdb(fixture_receptor_pdb()); }

Molecule fixture_ligand() { return parse_sdf(fixture_ligand_sdf()).front(); }

std::vector<Molecule> fixture_poses() { return parse_sdf(fixture_poses_sdf()); }

GraphSet fixture_graphs(const FeatureConfig &cfg) {
  return featurize_complex(fixture_receptor(), fixture_ligand(), cfg);
}

} // namespace igt
