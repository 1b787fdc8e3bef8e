#pragma once

#include "hyperg/linalg.hpp"

#include <optional>
#include <vector>

namespace hyperg {

// Linear constraint a·x REL c over Q.
struct LinCon {
  enum class Rel { Eq, Ge, Gt };
  QVec a;
  Rat c;
  Rel rel = Rel::Ge;
};

// Exact Fourier–Motzkin feasibility with witness reconstruction.  Intended
// for the small systems arising from pointedness and face-functional checks.
std::optional<QVec> fm_feasible(std::vector<LinCon> cons, Eigen::Index nvars);

// Witness h with h·a_i > 0 for every nonzero column a_i, if one exists.
// Zero columns are ignored so that split-torus style matrices pass.
std::optional<QVec> pointed_witness(const ZMat& A);

struct Face {
  std::vector<Eigen::Index> columns;  // sorted
  QVec functional;                    // zero on the face, positive off it
};

// All faces of the column configuration of A (including the empty face and A
// itself).  Requires a pointed configuration.
std::vector<Face> all_faces(const ZMat& A);

// Pulling triangulation of conv(points), pulled at points[0]; every returned
// simplex contains index 0.  Points are columns.  With refineCollinear the
// 1-dimensional base case keeps interior points (finer chains).
std::vector<std::vector<Eigen::Index>> pull_triangulation(const QMat& points,
                                                          bool refineCollinear = false);

// Normalized volume of conv(0, columns of A) with respect to the lattice ZA.
Int normalized_volume(const ZMat& A, bool refineCollinear = false);

}  // namespace hyperg
