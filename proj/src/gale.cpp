#include "hyperg/gale.hpp"

namespace hyperg {

GaleContext build_gale_context(const ZMat& A, std::optional<ZMat> B,
                               std::optional<ZMat> Atilde) {
  const Eigen::Index d = A.rows(), n = A.cols();
  if (d <= 0 || n <= 0 || d >= n) throw invalid("need a d×n matrix with 0 < d < n");
  if (rank_q(to_q(A)) != d) throw invalid("matrix not of full row rank");
  {
    SnfResult s = smith_normal_form(A);
    if (static_cast<Eigen::Index>(s.divisors.size()) != d) throw invalid("lattice not full");
    for (const Int& e : s.divisors)
      if (e != 1) throw invalid("lattice not full");
  }
  if (!pointed_witness(A)) throw invalid("matrix not pointed");

  GaleContext ctx;
  ctx.A = A;
  if (Atilde) {
    ctx.Atilde = *Atilde;
    if (ctx.Atilde.rows() != n || ctx.Atilde.cols() != n)
      throw invalid("Atilde must be n×n");
    if (!mat_eq(ZMat(ctx.Atilde.topRows(d)), A))
      throw invalid("Atilde must contain A as its top rows");
    Int det = det_z(ctx.Atilde);
    if (det != 1 && det != -1) throw invalid("Atilde is not unimodular");
  } else {
    ctx.Atilde = unimodular_completion(A);
  }
  const Eigen::Index m = n - d;
  ctx.Aperp = ctx.Atilde.bottomRows(m);
  auto inv = inverse_q(to_q(ctx.Atilde));
  if (!inv) throw failure("Atilde failed to invert");
  ctx.Ctilde.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_integer((*inv)(i, j))) throw failure("Atilde inverse not integral");
      ctx.Ctilde(i, j) = (*inv)(i, j).get_num();
    }
  ctx.Cperp = ctx.Ctilde.leftCols(d);
  ctx.C = ctx.Ctilde.rightCols(m);

  if (B) {
    ctx.B = *B;
    if (ctx.B.rows() != n || ctx.B.cols() != m) throw invalid("B must be n×m");
    if (!mat_is_zero(ZMat(A * ctx.B))) throw invalid("not a Gale dual");
    if (rank_q(to_q(ctx.B)) != m) throw invalid("not a Gale dual");
  } else {
    ctx.B = ctx.C;
  }
  ctx.K = ctx.Aperp * ctx.B;  // B = C K since Ctilde Atilde = I and A B = 0
  if (!mat_eq(ZMat(ctx.C * ctx.K), ctx.B)) throw failure("Gale factorization failed");
  Int det = det_z(ctx.K);
  if (det == 0) throw invalid("not a Gale dual");
  ctx.latticeIndex = det < 0 ? Int(-det) : det;
  SnfResult s = smith_normal_form(ctx.K);
  ctx.varkappa = s.divisors;
  ctx.epsC = ctx.C * ZVec::Ones(m);
  return ctx;
}

QVec solve_parameter(const ZMat& A, const QVec& beta, ParameterMode mode) {
  if (beta.size() != A.rows()) throw invalid("parameter dimension mismatch");
  if (mode == ParameterMode::Any) {
    auto sol = solve_rational(to_q(A), beta);
    if (!sol) throw failure("parameter outside the column span");
    return *sol;
  }
  QMat AAt = to_q(A) * to_q(A).transpose();
  auto inv = inverse_q(AAt);
  if (!inv) throw failure("A A^t failed to invert");
  return to_q(A).transpose() * (*inv) * beta;
}

SaturationComparison saturate_and_compare(const ZMat& L, const ZMat& M) {
  if (L.rows() != M.rows()) throw invalid("ambient dimension mismatch");
  SaturationComparison out;
  out.satL = lattice_saturation(L);
  ZMat satM = lattice_saturation(M);
  out.equal = lattice_equal(out.satL, satM);
  return out;
}

ZMat gale_extension(const ZMat& Bgamma, const ZMat& A) {
  const Eigen::Index n = A.cols();
  if (Bgamma.rows() != n) throw invalid("B_gamma row count must match A's columns");
  const Eigen::Index g = Bgamma.cols();
  if (g == 0) {
    // no kernel columns left: A[γ] has full rank n
    return unimodular_completion(A);
  }
  if (rank_q(to_q(Bgamma)) != g) throw invalid("B_gamma is rank deficient");
  // saturated left annihilator of B_gamma: rows w with w·B_gamma = 0
  ZMat ann = kernel_basis(ZMat(Bgamma.transpose()));  // n × (n-g), columns
  // extend the row span of A inside ann's column span
  // express A's rows in terms of ann: A·? rows of A lie in the annihilator
  // (A B_gamma = 0 when B_gamma consists of kernel columns)
  if (!mat_is_zero(ZMat(A * Bgamma)))
    throw invalid("B_gamma is not annihilated by A");
  const Eigen::Index want = n - g - A.rows();
  if (want < 0) throw invalid("A already exceeds the annihilator rank");
  // choose complement columns of ann extending A's row space
  QMat acc = to_q(A).transpose();  // columns = rows of A
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index j = 0; j < ann.cols() && static_cast<Eigen::Index>(chosen.size()) < want;
       ++j) {
    QMat trial(n, acc.cols() + 1);
    trial.leftCols(acc.cols()) = acc;
    trial.col(acc.cols()) = to_q(ZVec(ann.col(j)));
    if (rank_q(trial) > acc.cols()) {
      acc = trial;
      chosen.push_back(j);
    }
  }
  if (static_cast<Eigen::Index>(chosen.size()) != want)
    throw failure("annihilator extension failed");
  ZMat out(A.rows() + want, n);
  out.topRows(A.rows()) = A;
  for (Eigen::Index i = 0; i < want; ++i)
    out.row(A.rows() + i) = ann.col(chosen[static_cast<size_t>(i)]).transpose();
  return out;
}

FacesAndVolume faces_and_volume(const ZMat& A,
                                std::optional<std::vector<Eigen::Index>> sigma) {
  ZMat As;
  if (sigma) {
    As.resize(A.rows(), static_cast<Eigen::Index>(sigma->size()));
    for (size_t j = 0; j < sigma->size(); ++j) As.col(static_cast<Eigen::Index>(j)) = A.col((*sigma)[j]);
  } else {
    As = A;
  }
  FacesAndVolume out;
  out.faces = all_faces(As);
  out.volume = normalized_volume(As);
  return out;
}

}  // namespace hyperg
