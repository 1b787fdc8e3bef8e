#include "hyperg/linalg.hpp"

#include <algorithm>

namespace hyperg {

namespace {

Int z_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor quotient for the HNF reductions.
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rdiv(const Int& a, const Int& b) {
  // round-to-nearest quotient, used by SNF size reduction
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > z_abs(b)) q += 1;
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const ZMat& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  HnfResult res;
  res.H = M;
  res.U = ZMat::Identity(cols, cols);
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < rows && r < cols; ++row) {
    // gcd-reduce this row across columns r..cols-1
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index j = r; j < cols; ++j)
        if (res.H(row, j) != 0 &&
            (best < 0 || z_abs(res.H(row, j)) < z_abs(res.H(row, best))))
          best = j;
      if (best < 0) break;
      if (best != r) {
        res.H.col(best).swap(res.H.col(r));
        res.U.col(best).swap(res.U.col(r));
      }
      bool clean = true;
      for (Eigen::Index j = r + 1; j < cols; ++j) {
        if (res.H(row, j) == 0) continue;
        Int q = fdiv(res.H(row, j), res.H(row, r));
        if (q != 0) {
          res.H.col(j) -= (res.H.col(r) * q).eval();
          res.U.col(j) -= (res.U.col(r) * q).eval();
        }
        if (res.H(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (res.H(row, r) == 0) continue;
    if (res.H(row, r) < 0) {
      res.H.col(r) = -res.H.col(r);
      res.U.col(r) = -res.U.col(r);
    }
    for (Eigen::Index j = 0; j < r; ++j) {
      Int q = fdiv(res.H(row, j), res.H(row, r));
      if (q != 0) {
        res.H.col(j) -= (res.H.col(r) * q).eval();
        res.U.col(j) -= (res.U.col(r) * q).eval();
      }
    }
    res.pivotRows.push_back(row);
    ++r;
  }
  res.rank = r;
  return res;
}

SnfResult smith_normal_form(const ZMat& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  SnfResult res;
  res.S = M;
  res.U = ZMat::Identity(rows, rows);
  res.V = ZMat::Identity(cols, cols);
  ZMat& S = res.S;
  ZMat& U = res.U;
  ZMat& V = res.V;

  Eigen::Index t = 0;
  const Eigen::Index limit = std::min(rows, cols);
  while (t < limit) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (S(i, j) != 0 && (pi < 0 || z_abs(S(i, j)) < z_abs(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      S.row(pi).swap(S.row(t));
      U.row(pi).swap(U.row(t));
    }
    if (pj != t) {
      S.col(pj).swap(S.col(t));
      V.col(pj).swap(V.col(t));
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Int q = rdiv(S(i, t), S(t, t));
        S.row(i) -= (S.row(t) * q).eval();
        U.row(i) -= (U.row(t) * q).eval();
        if (S(i, t) != 0) {
          S.row(i).swap(S.row(t));
          U.row(i).swap(U.row(t));
          dirty = true;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Int q = rdiv(S(t, j), S(t, t));
        S.col(j) -= (S.col(t) * q).eval();
        V.col(j) -= (V.col(t) * q).eval();
        if (S(t, j) != 0) {
          S.col(j).swap(S.col(t));
          V.col(j).swap(V.col(t));
          dirty = true;
        }
      }
    }

    // divisibility fix-up
    bool redo = false;
    for (Eigen::Index i = t + 1; i < rows && !redo; ++i)
      for (Eigen::Index j = t + 1; j < cols && !redo; ++j)
        if (S(i, j) % S(t, t) != 0) {
          S.row(t) += S.row(i);
          U.row(t) += U.row(i);
          redo = true;
        }
    if (redo) continue;

    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      U.row(t) = -U.row(t);
    }
    ++t;
  }
  for (Eigen::Index i = 0; i < limit; ++i)
    if (S(i, i) != 0) res.divisors.push_back(S(i, i));
  return res;
}

ZMat kernel_basis(const ZMat& M) {
  HnfResult h = hermite_normal_form(M);
  const Eigen::Index k = M.cols() - h.rank;
  ZMat out(M.cols(), k);
  for (Eigen::Index j = 0; j < k; ++j) out.col(j) = h.U.col(h.rank + j);
  return out;
}

std::optional<ZVec> solve_integer(const ZMat& M, const ZVec& b) {
  HnfResult h = hermite_normal_form(M);
  ZVec y = ZVec::Zero(M.cols());
  ZVec rem = b;
  for (Eigen::Index j = 0; j < h.rank; ++j) {
    const Eigen::Index pr = h.pivotRows[static_cast<size_t>(j)];
    Int q = rem(pr) / h.H(pr, j);
    if (rem(pr) % h.H(pr, j) != 0) return std::nullopt;
    y(j) = q;
    rem -= (h.H.col(j) * q).eval();
  }
  if (!mat_is_zero(rem)) return std::nullopt;
  return ZVec(h.U * y);
}

namespace {

// Row-reduced echelon with pivot bookkeeping; shared by the rational solvers.
struct Rref {
  QMat R;
  std::vector<Eigen::Index> pivotCols;
};

Rref rref(const QMat& M) {
  Rref out;
  out.R = M;
  QMat& R = out.R;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < R.cols() && r < R.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < R.rows(); ++i)
      if (R(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) R.row(p).swap(R.row(r));
    R.row(r) /= R(r, c);
    for (Eigen::Index i = 0; i < R.rows(); ++i)
      if (i != r && R(i, c) != 0) R.row(i) -= (R.row(r) * R(i, c)).eval();
    out.pivotCols.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

std::optional<QVec> solve_rational(const QMat& M, const QVec& b) {
  QMat aug(M.rows(), M.cols() + 1);
  aug.leftCols(M.cols()) = M;
  aug.col(M.cols()) = b;
  Rref rr = rref(aug);
  QVec x = QVec::Zero(M.cols());
  for (size_t k = 0; k < rr.pivotCols.size(); ++k) {
    if (rr.pivotCols[k] == M.cols()) return std::nullopt;  // inconsistent
    x(rr.pivotCols[k]) = rr.R(static_cast<Eigen::Index>(k), M.cols());
  }
  return x;
}

QMat nullspace_q(const QMat& M) {
  Rref rr = rref(M);
  std::vector<Eigen::Index> freeCols;
  for (Eigen::Index c = 0; c < M.cols(); ++c)
    if (std::find(rr.pivotCols.begin(), rr.pivotCols.end(), c) == rr.pivotCols.end())
      freeCols.push_back(c);
  QMat out = QMat::Zero(M.cols(), static_cast<Eigen::Index>(freeCols.size()));
  for (size_t j = 0; j < freeCols.size(); ++j) {
    out(freeCols[j], static_cast<Eigen::Index>(j)) = 1;
    for (size_t k = 0; k < rr.pivotCols.size(); ++k)
      out(rr.pivotCols[k], static_cast<Eigen::Index>(j)) =
          -rr.R(static_cast<Eigen::Index>(k), freeCols[j]);
  }
  return out;
}

std::optional<QMat> inverse_q(const QMat& M) {
  if (M.rows() != M.cols()) return std::nullopt;
  QMat aug(M.rows(), 2 * M.cols());
  aug.leftCols(M.cols()) = M;
  aug.rightCols(M.cols()) = QMat::Identity(M.rows(), M.cols());
  Rref rr = rref(aug);
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    if (static_cast<size_t>(i) >= rr.pivotCols.size() || rr.pivotCols[static_cast<size_t>(i)] != i)
      return std::nullopt;
  return QMat(rr.R.rightCols(M.cols()));
}

Eigen::Index rank_q(const QMat& M) {
  return static_cast<Eigen::Index>(rref(M).pivotCols.size());
}

Int det_z(const ZMat& M) {
  if (M.rows() != M.cols()) throw invalid("determinant of non-square matrix");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  // fraction-free Bareiss
  ZMat A = M;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      A.row(p).swap(A.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

ZMat lattice_saturation(const ZMat& L) {
  // rows of W span the rational orthogonal complement of the column span
  ZMat W = kernel_basis(L.transpose()).transpose();
  if (W.rows() == 0) {
    // full column span: saturation is the ambient lattice
    return ZMat::Identity(L.rows(), L.rows());
  }
  return kernel_basis(W);
}

ZMat lattice_canonical(const ZMat& L) {
  HnfResult h = hermite_normal_form(L);
  return h.H.leftCols(h.rank);
}

bool lattice_equal(const ZMat& L, const ZMat& M) {
  if (L.rows() != M.rows()) return false;
  ZMat a = lattice_canonical(L), b = lattice_canonical(M);
  return mat_eq(a, b);
}

bool in_lattice(const ZMat& L, const ZVec& v) {
  return solve_integer(L, v).has_value();
}

bool in_rational_lattice(const QMat& gens, const QVec& v) {
  Int scale = 1;
  for (Eigen::Index i = 0; i < gens.rows(); ++i)
    for (Eigen::Index j = 0; j < gens.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), gens(i, j).get_den().get_mpz_t());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v(i).get_den().get_mpz_t());
  ZMat L(gens.rows(), gens.cols());
  for (Eigen::Index i = 0; i < gens.rows(); ++i)
    for (Eigen::Index j = 0; j < gens.cols(); ++j) {
      Rat s = gens(i, j) * Rat(scale);
      L(i, j) = s.get_num();
    }
  ZVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat s = v(i) * Rat(scale);
    w(i) = s.get_num();
  }
  return in_lattice(L, w);
}

ZMat unimodular_completion(const ZMat& A) {
  const Eigen::Index d = A.rows(), n = A.cols();
  HnfResult h = hermite_normal_form(A);
  if (h.rank != d) throw invalid("matrix does not have full row rank");
  ZMat H0 = h.H.leftCols(d);
  Int det = det_z(H0);
  if (det != 1 && det != -1) throw invalid("lattice not full");
  // Atilde = [[H0,0],[0,I]] * U^{-1}; its top d rows equal A.
  QMat Uq = to_q(h.U);
  auto UinvOpt = inverse_q(Uq);
  if (!UinvOpt) throw failure("unimodular matrix failed to invert");
  QMat blk = QMat::Zero(n, n);
  blk.topLeftCorner(d, d) = to_q(H0);
  blk.bottomRightCorner(n - d, n - d) = QMat::Identity(n - d, n - d);
  QMat At = blk * (*UinvOpt);
  ZMat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_integer(At(i, j))) throw failure("completion is not integral");
      out(i, j) = At(i, j).get_num();
    }
  return out;
}

}  // namespace hyperg
