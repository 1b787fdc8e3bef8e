#pragma once

#include "hyperg/scalar.hpp"

#include <optional>
#include <vector>

namespace hyperg {

using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline QMat to_q(const ZMat& m) { return m.cast<Rat>(); }
inline QVec to_q(const ZVec& v) { return v.cast<Rat>(); }

template <typename Mat>
bool mat_is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Mat>
bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline std::optional<ZVec> to_z(const QVec& v) {
  ZVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) return std::nullopt;
    out(i) = v(i).get_num();
  }
  return out;
}

// Column-style Hermite normal form: M * U = H with U unimodular.  Pivots sit
// in strictly increasing rows, are positive, and entries left of a pivot in
// its row are reduced into [0, pivot).
struct HnfResult {
  ZMat H;
  ZMat U;
  std::vector<Eigen::Index> pivotRows;
  Eigen::Index rank = 0;
};

HnfResult hermite_normal_form(const ZMat& M);

// U * M * V = S, S diagonal with nonnegative entries d_i | d_{i+1}.
struct SnfResult {
  ZMat U, S, V;
  std::vector<Int> divisors;  // nonzero diagonal entries
};

SnfResult smith_normal_form(const ZMat& M);

// Basis of the integer kernel {v : Mv = 0}, returned as columns (saturated).
ZMat kernel_basis(const ZMat& M);

// One integer solution of M x = b, if any.
std::optional<ZVec> solve_integer(const ZMat& M, const ZVec& b);

// One rational solution of M x = b, if the system is consistent.
std::optional<QVec> solve_rational(const QMat& M, const QVec& b);

// Basis of the rational nullspace as columns.
QMat nullspace_q(const QMat& M);

std::optional<QMat> inverse_q(const QMat& M);

Eigen::Index rank_q(const QMat& M);

Int det_z(const ZMat& M);

// Saturation (Q L) ∩ Z^amb of the lattice spanned by the columns of L.
ZMat lattice_saturation(const ZMat& L);

// Canonical basis (column HNF, zero columns dropped) — equal lattices get
// identical canonical forms.
ZMat lattice_canonical(const ZMat& L);

bool lattice_equal(const ZMat& L, const ZMat& M);

bool in_lattice(const ZMat& L, const ZVec& v);

// Membership of a rational vector in the lattice generated by the columns of
// a rational matrix (denominators handled by scaling).
bool in_rational_lattice(const QMat& gens, const QVec& v);

// Extends A (d×n, ZA = Z^d) to a unimodular n×n matrix with A as top rows;
// deterministic given the HNF routine.
ZMat unimodular_completion(const ZMat& A);

inline ZVec z_vec(std::initializer_list<long> xs) {
  ZVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline QVec q_vec(std::initializer_list<Rat> xs) {
  QVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

inline ZMat z_mat(std::initializer_list<std::initializer_list<long>> rows) {
  ZMat m(static_cast<Eigen::Index>(rows.size()),
         rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

}  // namespace hyperg
