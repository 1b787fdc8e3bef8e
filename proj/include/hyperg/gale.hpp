#pragma once

#include "hyperg/polyhedra.hpp"

#include <optional>

namespace hyperg {

// Matrices binding one session: A and a chosen unimodular extension, the
// split Gale data C, B = CK, and the elementary divisors of K.
struct GaleContext {
  ZMat A;       // d×n
  ZMat Atilde;  // n×n unimodular, top d rows = A
  ZMat Aperp;   // bottom m rows of Atilde
  ZMat Ctilde;  // Atilde^{-1}
  ZMat Cperp;   // first d columns of Ctilde
  ZMat C;       // last m columns: saturated kernel basis
  ZMat B;       // n×m Gale dual
  ZMat K;       // m×m, B = C K
  std::vector<Int> varkappa;  // elementary divisors of K
  ZVec epsC;                  // sum of the columns of C
  Int latticeIndex = 1;       // [ker_Z(A) : ZB] = |det K|

  Eigen::Index d() const { return A.rows(); }
  Eigen::Index n() const { return A.cols(); }
  Eigen::Index m() const { return C.cols(); }
};

GaleContext build_gale_context(const ZMat& A, std::optional<ZMat> B = std::nullopt,
                               std::optional<ZMat> Atilde = std::nullopt);

enum class ParameterMode { Any, AnnihilatingC };

// κ with Aκ = β; in AnnihilatingC mode additionally κC = 0.
QVec solve_parameter(const ZMat& A, const QVec& beta, ParameterMode mode);

struct SaturationComparison {
  ZMat satL;
  bool equal = false;
};

SaturationComparison saturate_and_compare(const ZMat& L, const ZMat& M);

// A[γ]: A as first d rows, extended by a basis of the saturated left
// annihilator of B_γ modulo the row span of A.
ZMat gale_extension(const ZMat& Bgamma, const ZMat& A);

struct FacesAndVolume {
  std::vector<Face> faces;
  Int volume;
};

FacesAndVolume faces_and_volume(const ZMat& A,
                                std::optional<std::vector<Eigen::Index>> sigma = std::nullopt);

}  // namespace hyperg
