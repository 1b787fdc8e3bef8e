#include "hyperg/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperg {

namespace {

struct WorkCon {
  QVec a;  // a·y >= c  (or strict)
  Rat c;
  bool strict;
};

struct Level {
  std::vector<WorkCon> lowers, uppers;  // bounds on y_j in terms of later vars
};

}  // namespace

std::optional<QVec> fm_feasible(std::vector<LinCon> cons, Eigen::Index nvars) {
  // split off the equalities and substitute them away
  std::vector<QVec> eqRows;
  std::vector<Rat> eqRhs;
  std::vector<WorkCon> ineqs;
  for (const auto& con : cons) {
    if (con.rel == LinCon::Rel::Eq) {
      eqRows.push_back(con.a);
      eqRhs.push_back(con.c);
    } else {
      ineqs.push_back({con.a, con.c, con.rel == LinCon::Rel::Gt});
    }
  }

  QVec particular = QVec::Zero(nvars);
  QMat N = QMat::Identity(nvars, nvars);
  if (!eqRows.empty()) {
    QMat E(static_cast<Eigen::Index>(eqRows.size()), nvars);
    QVec e(static_cast<Eigen::Index>(eqRows.size()));
    for (size_t i = 0; i < eqRows.size(); ++i) {
      E.row(static_cast<Eigen::Index>(i)) = eqRows[i].transpose();
      e(static_cast<Eigen::Index>(i)) = eqRhs[i];
    }
    auto p = solve_rational(E, e);
    if (!p) return std::nullopt;
    particular = *p;
    N = nullspace_q(E);
  }
  const Eigen::Index k = N.cols();

  std::vector<WorkCon> current;
  for (const auto& w : ineqs) {
    WorkCon c2;
    c2.a = N.transpose() * w.a;
    c2.c = w.c - w.a.dot(particular);
    c2.strict = w.strict;
    current.push_back(c2);
  }

  std::vector<Level> levels(static_cast<size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    std::vector<WorkCon> rest;
    Level& lv = levels[static_cast<size_t>(j)];
    for (const auto& w : current) {
      if (w.a(j) > 0)
        lv.lowers.push_back(w);
      else if (w.a(j) < 0)
        lv.uppers.push_back(w);
      else
        rest.push_back(w);
    }
    for (const auto& lo : lv.lowers)
      for (const auto& up : lv.uppers) {
        WorkCon c2;
        c2.a = -up.a(j) * lo.a + lo.a(j) * up.a;
        c2.c = -up.a(j) * lo.c + lo.a(j) * up.c;
        c2.strict = lo.strict || up.strict;
        rest.push_back(c2);
      }
    current = std::move(rest);
  }

  for (const auto& w : current) {
    if (w.strict && w.c >= 0) return std::nullopt;
    if (!w.strict && w.c > 0) return std::nullopt;
  }

  QVec y = QVec::Zero(k);
  for (Eigen::Index j = k - 1; j >= 0; --j) {
    const Level& lv = levels[static_cast<size_t>(j)];
    bool haveLo = false, haveUp = false, loStrict = false, upStrict = false;
    Rat lo, up;
    for (const auto& w : lv.lowers) {
      Rat rest = 0;
      for (Eigen::Index i = j + 1; i < k; ++i) rest += w.a(i) * y(i);
      Rat bound = (w.c - rest) / w.a(j);
      if (!haveLo || bound > lo) {
        lo = bound;
        loStrict = w.strict;
        haveLo = true;
      } else if (bound == lo) {
        loStrict = loStrict || w.strict;
      }
    }
    for (const auto& w : lv.uppers) {
      Rat rest = 0;
      for (Eigen::Index i = j + 1; i < k; ++i) rest += w.a(i) * y(i);
      Rat bound = (w.c - rest) / w.a(j);  // a(j) < 0 flips the inequality
      if (!haveUp || bound < up) {
        up = bound;
        upStrict = w.strict;
        haveUp = true;
      } else if (bound == up) {
        upStrict = upStrict || w.strict;
      }
    }
    if (haveLo && haveUp) {
      if (lo > up || (lo == up && (loStrict || upStrict)))
        throw failure("Fourier-Motzkin back-substitution hit an empty interval");
      y(j) = (lo == up) ? lo : Rat(lo + up) / 2;
    } else if (haveLo) {
      y(j) = lo + 1;
    } else if (haveUp) {
      y(j) = up - 1;
    } else {
      y(j) = 0;
    }
  }
  return QVec(particular + N * y);
}

std::optional<QVec> pointed_witness(const ZMat& A) {
  std::vector<LinCon> cons;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    if (mat_is_zero(ZVec(A.col(j)))) continue;
    LinCon c;
    c.a = to_q(ZVec(A.col(j)));
    c.c = 0;
    c.rel = LinCon::Rel::Gt;
    cons.push_back(c);
  }
  return fm_feasible(cons, A.rows());
}

std::vector<Face> all_faces(const ZMat& A) {
  const Eigen::Index n = A.cols();
  if (n > 16) throw invalid("face enumeration limited to 16 columns");
  if (!pointed_witness(A)) throw invalid("matrix not pointed");
  std::vector<Face> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<LinCon> cons;
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n; ++j) {
      LinCon c;
      c.a = to_q(ZVec(A.col(j)));
      c.c = 0;
      if (mask & (1u << j)) {
        c.rel = LinCon::Rel::Eq;
        cols.push_back(j);
      } else {
        c.rel = LinCon::Rel::Gt;
      }
      cons.push_back(c);
    }
    auto w = fm_feasible(cons, A.rows());
    if (w) out.push_back(Face{cols, *w});
  }
  return out;
}

namespace {

QVec primitive(const QVec& v) {
  Int lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v(i).get_den().get_mpz_t());
  QVec w = v * Rat(lcm);
  Int g = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w(i).get_num().get_mpz_t());
  if (g != 0) w /= Rat(g);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) != 0) {
      if (w(i) < 0) w = -w;
      break;
    }
  }
  return w;
}

using Simplices = std::vector<std::vector<Eigen::Index>>;

// Recursive pulling triangulation; `pts` are coordinates for the subset
// `idx` (same ordering), puller = idx[0].
Simplices pull_rec(const QMat& pts, const std::vector<Eigen::Index>& idx,
                   bool refineCollinear) {
  const Eigen::Index cnt = pts.cols();
  // affine rank
  QMat diffs(pts.rows(), cnt - 1);
  for (Eigen::Index j = 1; j < cnt; ++j) diffs.col(j - 1) = pts.col(j) - pts.col(0);
  const Eigen::Index r = (cnt <= 1) ? 0 : rank_q(diffs);

  if (r == 0) return {{idx[0]}};

  if (r == 1) {
    // collinear: parametrize along the direction of the farthest point
    QVec dir;
    for (Eigen::Index j = 1; j < cnt; ++j)
      if (!mat_is_zero(QVec(pts.col(j) - pts.col(0)))) {
        dir = pts.col(j) - pts.col(0);
        break;
      }
    Eigen::Index axis = 0;
    while (dir(axis) == 0) ++axis;
    std::vector<std::pair<Rat, Eigen::Index>> ts;
    for (Eigen::Index j = 0; j < cnt; ++j)
      ts.push_back({Rat((pts(axis, j) - pts(axis, 0)) / dir(axis)), j});
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Simplices cells;
    if (refineCollinear) {
      for (size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i].first == ts[i + 1].first) continue;
        cells.push_back({idx[static_cast<size_t>(ts[i].second)],
                         idx[static_cast<size_t>(ts[i + 1].second)]});
      }
    } else {
      // pulling at idx[0]: cone over the extreme points not equal to it
      for (auto end : {ts.front(), ts.back()}) {
        if (end.second == 0 || ts.front().first == ts.back().first) continue;
        if (mat_eq(QVec(pts.col(end.second)), QVec(pts.col(0)))) continue;
        cells.push_back({idx[0], idx[static_cast<size_t>(end.second)]});
      }
    }
    return cells;
  }

  // map into r-dimensional affine coordinates
  std::vector<Eigen::Index> basisCols;
  {
    QMat acc(pts.rows(), 0);
    for (Eigen::Index j = 0; j < diffs.cols() && (Eigen::Index)basisCols.size() < r; ++j) {
      QMat trial(pts.rows(), acc.cols() + 1);
      trial.leftCols(acc.cols()) = acc;
      trial.col(acc.cols()) = diffs.col(j);
      if (rank_q(trial) > acc.cols()) {
        acc = trial;
        basisCols.push_back(j);
      }
    }
  }
  QMat Bm(pts.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j) Bm.col(j) = diffs.col(basisCols[static_cast<size_t>(j)]);
  QMat coords(r, cnt);
  for (Eigen::Index j = 0; j < cnt; ++j) {
    auto sol = solve_rational(Bm, QVec(pts.col(j) - pts.col(0)));
    if (!sol) throw failure("affine coordinates failed");
    coords.col(j) = *sol;
  }

  // enumerate supporting hyperplanes through r-subsets
  std::map<std::pair<std::vector<Rat>, Rat>, std::vector<Eigen::Index>> facets;
  std::vector<Eigen::Index> subset(static_cast<size_t>(r));
  std::vector<bool> choose(static_cast<size_t>(cnt), false);
  std::fill(choose.begin(), choose.begin() + r, true);
  std::sort(choose.begin(), choose.end());  // lexicographic combinations via permutations
  do {
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < cnt; ++j)
      if (choose[static_cast<size_t>(j)]) subset[static_cast<size_t>(c++)] = j;
    QMat span(r, r - 1);
    for (Eigen::Index j = 1; j < r; ++j)
      span.col(j - 1) = coords.col(subset[static_cast<size_t>(j)]) -
                        coords.col(subset[0]);
    QMat ns = nullspace_q(QMat(span.transpose()));
    if (ns.cols() != 1) continue;  // subset does not span a hyperplane
    QVec nrm = primitive(QVec(ns.col(0)));
    Rat off = nrm.dot(coords.col(subset[0]));
    int sidePos = 0, sideNeg = 0;
    for (Eigen::Index j = 0; j < cnt; ++j) {
      Rat s = nrm.dot(coords.col(j)) - off;
      if (s > 0) ++sidePos;
      if (s < 0) ++sideNeg;
    }
    if (sidePos > 0 && sideNeg > 0) continue;
    if (sideNeg > 0) {
      nrm = -nrm;
      off = -off;
    }
    std::vector<Rat> key(nrm.data(), nrm.data() + nrm.size());
    auto& pts_on = facets[{key, off}];
    if (pts_on.empty())
      for (Eigen::Index j = 0; j < cnt; ++j)
        if (nrm.dot(coords.col(j)) == off) pts_on.push_back(j);
  } while (std::next_permutation(choose.begin(), choose.end()));

  Simplices out;
  for (const auto& [key, on] : facets) {
    if (std::find(on.begin(), on.end(), Eigen::Index(0)) != on.end()) continue;
    QMat sub(r, static_cast<Eigen::Index>(on.size()));
    std::vector<Eigen::Index> subIdx;
    for (size_t j = 0; j < on.size(); ++j) {
      sub.col(static_cast<Eigen::Index>(j)) = coords.col(on[j]);
      subIdx.push_back(idx[static_cast<size_t>(on[j])]);
    }
    for (auto cell : pull_rec(sub, subIdx, refineCollinear)) {
      cell.insert(cell.begin(), idx[0]);
      out.push_back(cell);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Eigen::Index>> pull_triangulation(const QMat& points,
                                                          bool refineCollinear) {
  if (points.cols() == 0) return {};
  std::vector<Eigen::Index> idx;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    bool dup = false;
    for (Eigen::Index i : keep)
      if (mat_eq(QVec(points.col(i)), QVec(points.col(j)))) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(j);
  }
  QMat pts(points.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    pts.col(static_cast<Eigen::Index>(j)) = points.col(keep[j]);
    idx.push_back(keep[j]);
  }
  return pull_rec(pts, idx, refineCollinear);
}

Int normalized_volume(const ZMat& A, bool refineCollinear) {
  if (A.cols() == 0) return 1;
  ZMat L = lattice_canonical(A);
  const Eigen::Index r = L.cols();
  if (r == 0) return 1;
  // lattice coordinates of the columns
  QMat pts = QMat::Zero(r, A.cols() + 1);  // column 0 is the origin
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    auto y = solve_rational(to_q(L), to_q(ZVec(A.col(j))));
    if (!y) throw failure("column outside its own lattice");
    pts.col(j + 1) = *y;
  }
  auto cells = pull_triangulation(pts, refineCollinear);
  Int vol = 0;
  for (const auto& cell : cells) {
    if (static_cast<Eigen::Index>(cell.size()) != r + 1)
      throw failure("degenerate cell in triangulation");
    ZMat edge(r, r);
    for (Eigen::Index j = 1; j <= r; ++j) {
      QVec e = pts.col(cell[static_cast<size_t>(j)]) - pts.col(cell[0]);
      for (Eigen::Index i = 0; i < r; ++i) {
        if (!is_integer(e(i))) throw failure("non-lattice simplex vertex");
        edge(i, j - 1) = e(i).get_num();
      }
    }
    Int d = det_z(edge);
    vol += d < 0 ? Int(-d) : d;
  }
  return vol;
}

}  // namespace hyperg
