#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperg/gale.hpp"
#include "hyperg/weyl.hpp"

using namespace hyperg;

TEST_CASE("smith normal form of the Example 5.5 K") {
  ZMat K = z_mat({{-1, 2}, {0, -3}});
  SnfResult s = smith_normal_form(K);
  CHECK(mat_eq(ZMat(s.U * K * s.V), s.S));
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == 1);
  CHECK(s.divisors[1] == 3);
}

TEST_CASE("hermite and kernel") {
  ZMat A = z_mat({{1, 1, 1, 1}, {0, 1, 2, 3}});
  HnfResult h = hermite_normal_form(A);
  CHECK(h.rank == 2);
  CHECK(mat_eq(ZMat(A * h.U), h.H));
  ZMat ker = kernel_basis(A);
  CHECK(ker.cols() == 2);
  CHECK(mat_is_zero(ZMat(A * ker)));
}

TEST_CASE("pointedness and faces") {
  ZMat A = z_mat({{1, 1, 1, 1}, {0, 1, 2, 3}});
  CHECK(pointed_witness(A));
  auto fv = faces_and_volume(A);
  CHECK(fv.volume == 3);
  // faces: empty, {1}, {4}, all
  CHECK(fv.faces.size() == 4);
  ZMat bad = z_mat({{1, -1}});
  CHECK(!pointed_witness(bad));
}

TEST_CASE("gale context of Example 5.5") {
  ZMat At = z_mat({{1, 1, 1, 1}, {0, 1, 2, 3}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  ZMat A = At.topRows(2);
  ZMat B = z_mat({{-1, 2}, {0, -3}, {3, 0}, {-2, 1}});
  GaleContext ctx = build_gale_context(A, B, At);
  CHECK(mat_eq(ctx.C, z_mat({{1, 0}, {0, 1}, {-3, -2}, {2, 1}})));
  CHECK(mat_eq(ctx.K, z_mat({{-1, 2}, {0, -3}})));
  CHECK(ctx.latticeIndex == 3);
  REQUIRE(ctx.varkappa.size() == 2);
  CHECK(ctx.varkappa[0] == 1);
  CHECK(ctx.varkappa[1] == 3);
  CHECK(mat_eq(ctx.epsC, z_vec({1, 1, -5, 3})));
}

TEST_CASE("weyl multiply basics") {
  WeylRing R = x_ring(2);
  WeylOp d1 = WeylOp::derivative(R, 0);
  WeylOp x1 = WeylOp::variable(R, 0);
  WeylOp prod = d1 * x1;  // x1 dx1 + 1
  WeylOp expect = WeylOp::theta(R, 0) + WeylOp::constant(R, 1);
  CHECK(prod == expect);
  WeylOp p2 = d1 * (x1 * x1);  // x^2 d + 2x
  WeylOp expect2 = x1 * x1 * d1 + x1.scaled(2);
  CHECK(p2 == expect2);
}

TEST_CASE("parse and print roundtrip") {
  WeylRing R = x_ring(3, true);
  WeylOp op = parse_weyl("2/3*x1^2*dx2 - x3^-1 + t1", R);
  WeylOp back = parse_weyl(to_string(op), R);
  CHECK(op == back);
}
