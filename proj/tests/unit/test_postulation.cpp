#include <optional>
#include <vector>

#include "apolar/postulation.hpp"
#include "apolar/suites.hpp"
#include "doctest.h"

using namespace apolar;

namespace {

Configuration doubles_at(const std::vector<Point>& pts) {
  Configuration c;
  for (Point p : pts) c.schemes.push_back(make_scheme(SchemeKind::fat_point(2), p));
  return c;
}

// Coefficients of (cx x + cy y + c0)^2 on the conic basis.
std::vector<Fp> squared_line(const LinearForm& g) {
  return {g.c0 * g.c0, fp(2) * g.c0 * g.cx, fp(2) * g.c0 * g.cy,
          g.cx * g.cx, fp(2) * g.cx * g.cy, g.cy * g.cy};
}

}  // namespace

TEST_CASE("configuration bookkeeping") {
  Configuration c = doubles_at({{fp(1), fp(2)}, {fp(3), fp(4)}});
  CHECK(c.total_length() == 6);
  CHECK(c.supports() == std::vector<Point>{{fp(1), fp(2)}, {fp(3), fp(4)}});

  Configuration single{{make_scheme(SchemeKind::tile(), {fp(5), fp(6)})}};
  Configuration all = merge(c, single);
  CHECK(all.total_length() == 10);
  CHECK(all.schemes.size() == 3);
}

TEST_CASE("conditions matrix has one row per operator") {
  LinearSystem v = full_system(Bundle::p2(3));
  Configuration c = doubles_at({{fp(1), fp(2)}, {fp(3), fp(4)}});
  DenseMatrix m = conditions_matrix(v, c);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 10);
}

TEST_CASE("expected h0 clamps at zero") {
  LinearSystem v = full_system(Bundle::p2(2));
  CHECK(expected_h0(v, 4) == 2);
  CHECK(expected_h0(v, 6) == 0);
  CHECK(expected_h0(v, 9) == 0);
}

TEST_CASE("two tiles on cubics leave a pencil") {
  LinearSystem v = full_system(Bundle::p2(3));
  PostulationReport rep =
      postulate(v, {{{KindTag::Tile, 1}, 2}}, 3, 42);
  CHECK(rep.dim == 10);
  CHECK(rep.total_length == 8);
  CHECK(rep.h0 == 2);
  CHECK(rep.h1 == 0);
  CHECK(rep.verdict == Verdict::Certified);
}

TEST_CASE("five tiles on quintics leave a single curve") {
  LinearSystem v = full_system(Bundle::p2(5));
  PostulationReport rep =
      postulate(v, {{{KindTag::Tile, 1}, 5}}, 3, 42);
  CHECK(rep.dim == 21);
  CHECK(rep.h0 == 1);
  CHECK(rep.verdict == Verdict::Certified);
}

TEST_CASE("two double points on conics, witnessed by the doubled line") {
  LinearSystem v = full_system(Bundle::p2(2));
  Point p1{fp(1), fp(2)}, p2{fp(3), fp(4)};
  Configuration c = doubles_at({p1, p2});
  LinearForm ell = line_through(p1, p2.x - p1.x, p2.y - p1.y);
  REQUIRE(ell.eval(p2).is_zero());

  CHECK(defect_witness(v, c, squared_line(ell)));
  std::vector<Fp> not_through = {fp(0), fp(0), fp(0), fp(1), fp(0), fp(0)};
  CHECK(!defect_witness(v, c, not_through));

  PostulationReport bare = evaluate_configuration(v, c);
  CHECK(bare.h0 == 1);
  CHECK(bare.h1 == 1);
  CHECK(bare.expected == 0);
  CHECK(bare.verdict == Verdict::Inconclusive);
  CHECK(!bare.witnessed);

  auto provider = [](const LinearSystem& sys, const Configuration& cfg)
      -> std::optional<std::vector<Fp>> {
    Point a = cfg.schemes[0].support(), b = cfg.schemes[1].support();
    (void)sys;
    return squared_line(line_through(a, b.x - a.x, b.y - a.y));
  };
  PostulationReport rep = evaluate_configuration(v, c, provider);
  CHECK(rep.verdict == Verdict::Defective);
  CHECK(rep.witnessed);
}

TEST_CASE("three double points on the (2,2) system are defective") {
  LinearSystem v = full_system(Bundle::p1p1(2, 2));
  PostulationReport rep = postulate(v, {{{KindTag::FatPoint, 2}, 3}}, 3, 42,
                                    catalog_witnesses());
  CHECK(rep.dim == 9);
  CHECK(rep.total_length == 9);
  CHECK(rep.h0 == 1);
  CHECK(rep.h1 == 1);
  CHECK(rep.verdict == Verdict::Defective);
  CHECK(rep.witnessed);
}

TEST_CASE("postulate is deterministic in the seed") {
  LinearSystem v = full_system(Bundle::p2(4));
  ConfigTemplate t = {{{KindTag::FatPoint, 2}, 3}, {{KindTag::Tile, 1}, 1}};
  PostulationReport a = postulate(v, t, 4, 123);
  PostulationReport b = postulate(v, t, 4, 123);
  CHECK(a.h0 == b.h0);
  CHECK(a.rank == b.rank);
  CHECK(a.best_trial == b.best_trial);
  CHECK(a.seed == 123);
  CHECK(a.trials_used >= 1);
  CHECK(a.trials_used <= 4);
}

TEST_CASE("rank identities hold on random draws") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Bundle bundle = Bundle::p2(3 + int(rng.below(3)));
    LinearSystem v = full_system(bundle);
    ConfigTemplate t = {{{KindTag::FatPoint, 2}, int(rng.below(3))},
                        {{KindTag::Tile, 1}, int(rng.below(2))},
                        {{KindTag::SimplePoint, 1}, 1 + int(rng.below(3))}};
    Configuration c = draw_configuration(t, rng);
    PostulationReport rep = evaluate_configuration(v, c);
    CHECK(rep.h0 == rep.dim - rep.rank);
    CHECK(rep.h1 == rep.total_length - rep.rank);
    CHECK(long(rep.h0) - long(rep.h1) == long(rep.dim) - long(rep.total_length));
    CHECK(rep.h0 == dim_minus(v, c));
  }
}

TEST_CASE("adding a point can only cut the system down") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    LinearSystem v = full_system(Bundle::p2(4));
    Configuration c =
        draw_configuration({{{KindTag::FatPoint, 2}, 2}}, rng);
    std::size_t before = dim_minus(v, c);
    Configuration more = c;
    more.schemes.push_back(
        random_scheme({KindTag::SimplePoint, 1}, rng));
    std::size_t after = dim_minus(v, more);
    CHECK(after <= before);
    CHECK(before <= after + 1);
  }
}

TEST_CASE("span dimensions under the complete embedding") {
  Bundle conic = Bundle::p2(2);
  CHECK(span_dim(conic, {}) == -1);

  Configuration one_point{{make_scheme(SchemeKind::simple_point(), {fp(1), fp(2)})}};
  CHECK(span_dim(conic, one_point) == 0);

  Configuration one_double{{make_scheme(SchemeKind::fat_point(2), {fp(1), fp(2)})}};
  CHECK(span_dim(conic, one_double) == 2);

  // Two double points on the Veronese conic surface span only a P^3.
  CHECK(secant_dim(conic, 2, 3, 42) == 4);

  // On the cone over the twisted cubic, secants of doubles fill as expected.
  Bundle cone = Bundle::hirzebruch(3, 1, 3);
  CHECK(secant_dim(cone, 1, 3, 42) == 2);
  CHECK(secant_dim(cone, 2, 3, 42) == 4);
}
