#pragma once

#include "hyperg/weyl.hpp"

namespace hyperg {

enum class SystemKind { Gkz, LatticeBasis, Horn, NormalizedHorn, HomogenizedBinomial };

// One linear factor B_row·η + shift of a Horn operator.
struct LinFactor {
  int row;
  Rat shift;
};

struct HornFactored {
  std::vector<LinFactor> q, p;
};

struct SystemSpec {
  SystemKind kind = SystemKind::Gkz;
  ZMat A;  // grading matrix (x-side kinds; ρ(A) for homogenized)
  ZMat B;  // Horn kinds: the defining matrix
  QVec beta, kappa;
  WeylRing ring;
  std::vector<WeylOp> generators;
  std::vector<WeylOp> eulerOps;
  std::vector<HornFactored> factored;  // Horn kinds only

  Rat eval_q(size_t k, const QVec& point) const;
  Rat eval_p(size_t k, const QVec& point) const;
};

// One binomial ∂^{w+} − ∂^{w−} per column of B.
std::vector<WeylOp> lattice_basis_ideal(const ZMat& B, WeylRing ring);

// All kernel binomials with both sides of total degree ≤ degBound, thinned to
// a minimal generating set at that bound.  Not a global generating set.
std::vector<WeylOp> toric_gens_bounded(const ZMat& A, int degBound);

// f ∈ ⟨gens⟩ within total degree ≤ degBound, by exact linear algebra.
bool ideal_membership_upto(const std::vector<CPoly>& gens, const CPoly& f, int degBound);

SystemSpec gkz_system(const GaleContext& ctx, const QVec& beta, const QVec& kappa,
                      int degBound);

SystemSpec lattice_basis_system(const GaleContext& ctx, const QVec& kappa);

SystemSpec horn_system(const ZMat& B, const QVec& kappa, bool normalized);

SystemSpec homogenize_rho(const ZMat& A, const std::vector<WeylOp>& gens, const QVec& beta,
                          const Rat& beta0);

ZMat rho_matrix(const ZMat& A);

struct RestrictionReport {
  bool nhornEquality = false;
  std::vector<bool> perGenerator;
  bool bFunctionWitness = false;
  std::vector<bool> perVariable;  // indexed by j − m
};

RestrictionReport restriction_witnesses(const GaleContext& ctx, const QVec& kappa);

}  // namespace hyperg
