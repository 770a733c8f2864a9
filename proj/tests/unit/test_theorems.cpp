#include <set>
#include <stdexcept>
#include <vector>

#include "apolar/regularity.hpp"
#include "apolar/suites.hpp"
#include "doctest.h"

using namespace apolar;

TEST_CASE("tile-count decomposition of d + 1") {
  for (long d = 4; d <= 10000; ++d) {
    NumLem nl = numlem_decompose(d);
    CHECK(2 * nl.a + 3 * nl.b == d + 1);
    CHECK(nl.a >= 0);
    CHECK(nl.a <= 2);
    CHECK(nl.b >= 1);
    CHECK(2 * nl.a + nl.b <= d);
    CHECK((d + 2) * (d + 1) / 8 >= nl.a + nl.b);
  }
  for (long d : {3L, 2L, 0L, -1L})
    CHECK_THROWS_AS(numlem_decompose(d), std::invalid_argument);
}

TEST_CASE("one splitting step along a line") {
  LinearSystem v = full_system(Bundle::p2(4));
  LinearForm axis{fp(0), fp(1), fp(0)};
  Frame across{fp(0), fp(1), fp(1), fp(0)};
  Configuration c{{make_scheme(SchemeKind::tile(), {fp(1), fp(0)}),
                   make_scheme(SchemeKind::tile(across), {fp(2), fp(0)})}};

  HoraceStep step = horace_step(v, c, axis);
  CHECK(step.trace_length == 5);
  REQUIRE(step.residual.schemes.size() == 2);
  std::multiset<std::size_t> lens{step.residual.schemes[0].length(),
                                  step.residual.schemes[1].length()};
  CHECK(lens == std::multiset<std::size_t>{1, 2});
  CHECK(step.h0_trace == 0);
  CHECK(step.h0_full == 15 - 8);
  CHECK(step.inequality_ok);
  CHECK(step.h0_full <= step.h0_trace + step.h0_residual);
}

TEST_CASE("a line missing every support traces nothing") {
  LinearSystem v = full_system(Bundle::p2(3));
  Configuration c{{make_scheme(SchemeKind::fat_point(2), {fp(1), fp(1)})}};
  LinearForm axis{fp(0), fp(1), fp(0)};
  HoraceStep step = horace_step(v, c, axis);
  CHECK(step.trace_length == 0);
  CHECK(step.residual.total_length() == 3);
  CHECK(step.h0_trace == 4);
  CHECK(step.inequality_ok);
}

TEST_CASE("splitting rejects subsystems and bad divisors") {
  Configuration c{{make_scheme(SchemeKind::simple_point(), {fp(1), fp(0)})}};
  LinearForm slanted{fp(1), fp(1), fp(0)};
  LinearSystem q = full_system(Bundle::p1p1(2, 2));
  CHECK_THROWS_AS(horace_step(q, c, slanted), std::invalid_argument);

  LinearSystem v = full_system(Bundle::p2(3));
  LinearSystem sub = subsystem(v, c);
  CHECK_THROWS_AS(horace_step(sub, c, LinearForm{fp(0), fp(1), fp(0)}),
                  std::invalid_argument);
}

TEST_CASE("the exception catalog lists nine systems up to u = 4") {
  auto catalog = exception_catalog(4);
  REQUIRE(catalog.size() == 9);
  std::set<std::string> ids;
  for (const auto& ex : catalog) {
    ids.insert(ex.id);
    CHECK(ex.defect == 1);
  }
  CHECK(ids == std::set<std::string>{"P2(2):r2", "P2(4):r5", "P1xP1(2;2):r3",
                                     "P1xP1(2;4):r5", "P1xP1(4;2):r5",
                                     "P1xP1(2;6):r7", "P1xP1(6;2):r7",
                                     "P1xP1(2;8):r9", "P1xP1(8;2):r9"});
}

TEST_CASE("catalog lookups hit exactly the listed counts") {
  CHECK(catalog_lookup_counts(Bundle::p2(2), 2));
  CHECK(!catalog_lookup_counts(Bundle::p2(2), 3));
  CHECK(catalog_lookup_counts(Bundle::p2(4), 5));
  CHECK(!catalog_lookup_counts(Bundle::p2(4), 4));
  CHECK(!catalog_lookup_counts(Bundle::p2(3), 2));
  CHECK(catalog_lookup_counts(Bundle::p1p1(2, 4), 5));
  CHECK(catalog_lookup_counts(Bundle::p1p1(4, 2), 5));
  CHECK(!catalog_lookup_counts(Bundle::p1p1(2, 4), 4));
  CHECK(!catalog_lookup_counts(Bundle::p1p1(2, 3), 4));
  CHECK(!catalog_lookup_counts(Bundle::p1p1(3, 2), 4));
  CHECK(!catalog_lookup_counts(Bundle::hirzebruch(1, 2, 3), 2));

  Configuration mixed{{make_scheme(SchemeKind::fat_point(2), {fp(1), fp(1)}),
                       make_scheme(SchemeKind::tile(), {fp(2), fp(1)})}};
  CHECK(!catalog_lookup(Bundle::p2(2), mixed));
}

TEST_CASE("every catalog witness certifies a random draw") {
  for (const auto& ex : exception_catalog(4)) {
    LinearSystem v = full_system(ex.bundle);
    Rng rng = Rng::for_cell(42, {hash_str(ex.id)});
    Configuration c =
        draw_configuration({{{KindTag::FatPoint, 2}, ex.doubles}}, rng);
    auto candidate = ex.make_witness(v, c);
    REQUIRE(candidate.has_value());
    CHECK(defect_witness(v, c, *candidate));

    PostulationReport rep = evaluate_configuration(v, c, ex.make_witness);
    CHECK(rep.verdict == Verdict::Defective);
    CHECK(rep.h0 == rep.expected + std::size_t(ex.defect));
  }
}

TEST_CASE("small verification suites agree end to end") {
  CHECK(verify_tiles_p2(6, 2, 42).all_agree());
  CHECK(verify_twosquare_lemma(8, 2, 42).all_agree());
  CHECK(verify_curvilinear(8, 2, 42).all_agree());
  CHECK(verify_divisor_points(8, 42).all_agree());

  SuiteRun fat = verify_fattiles_p2(6, 2, 42);
  CHECK(fat.all_agree());
  CHECK(fat.count(Verdict::Inconclusive) == 0);

  SuiteRun q = verify_p1p1(5, 5, 2, 42);
  CHECK(q.all_agree());
  CHECK(q.count(Verdict::Defective) > 0);
}

TEST_CASE("run_suite dispatches every listed id") {
  for (const std::string& id : suite_ids()) {
    SuiteRun run = run_suite(id, 5, 3, 2, 2, 6, 2, 42);
    CHECK(run.id == id);
    CHECK(!run.rows.empty());
    CHECK(run.all_agree());
  }
  CHECK_THROWS_AS(run_suite("no-such-suite", 5, 3, 2, 2, 6, 2, 42),
                  std::invalid_argument);
}

TEST_CASE("a single tile is bad on lines and fine on conics") {
  Configuration c{{make_scheme(SchemeKind::tile(), {fp(2), fp(3)})}};
  PostulationReport on_conics =
      evaluate_configuration(full_system(Bundle::p2(2)), c);
  CHECK(on_conics.h1 == 0);
  CHECK(on_conics.h0 == 2);
  PostulationReport on_lines =
      evaluate_configuration(full_system(Bundle::p2(1)), c);
  CHECK(on_lines.h1 == 1);
  CHECK(on_lines.h0 == 0);
}

TEST_CASE("tiles sharing their long side go regular one degree late") {
  for (int t : {2, 3}) {
    RegularityConfig rc =
        build_regularity_config(RegularityKind::New11, t, 3 * t - 2, 42);
    CHECK(rc.config.total_length() == std::size_t(4 * t));
    RegularityScan scan = regularity_scan(rc, 3 * t - 3, 3 * t + 1);
    REQUIRE(scan.index.has_value());
    CHECK(*scan.index == 3 * t - 1);
    for (const auto& row : scan.rows)
      if (row.d == 3 * t - 2) CHECK(row.h1 == 1);
  }
}

TEST_CASE("moving one tile off the shared line restores regularity") {
  Rng rng(42);
  Configuration c;
  c.schemes.push_back(
      make_scheme(SchemeKind::tile(), {rng.fp(), fp(0)}));
  Point off{rng.fp(), rng.nonzero()};
  c.schemes.push_back(make_scheme(SchemeKind::tile(random_frame(rng)), off));
  PostulationReport rep =
      evaluate_configuration(full_system(Bundle::p2(4)), c);
  CHECK(rep.h1 == 0);
  CHECK(rep.h0 == 7);
}

TEST_CASE("doubled pencil squares pin the system to one line") {
  RegularityConfig rc =
      build_regularity_config(RegularityKind::New1, 3, 5, 42);
  RegularityScan scan = regularity_scan(rc, 3, 5);
  for (const auto& row : scan.rows) {
    // h0(d) = binomial(d, 2) while 2t >= d + 1: only multiples of the line.
    CHECK(row.h0 == std::size_t(row.d * (row.d - 1) / 2));
    CHECK(row.h1 > 0);
  }
}

TEST_CASE("admissibility window for the single-bad-degree family") {
  for (long d = 4; d <= 7; ++d) CHECK(new2_0_admissible(3, d));
  CHECK(!new2_0_admissible(3, 8));
  CHECK(!new2_0_admissible(2, 4));
  CHECK(!new2_0_admissible(10, 8));
  CHECK(new2_0_admissible(10, 9));
}

TEST_CASE("single-bad-degree construction at t = 3, d = 7") {
  RegularityConfig rc =
      build_regularity_config(RegularityKind::New2_0, 3, 7, 42);
  RegularityScan scan = regularity_scan(rc, 7, 8);
  REQUIRE(scan.rows.size() == 2);
  CHECK(scan.rows[0].h1 == 1);
  CHECK(scan.rows[1].h1 == 0);
  CHECK(scan.index == 8);
  CHECK_THROWS_AS(build_regularity_config(RegularityKind::New2_0, 3, 8, 42),
                  std::invalid_argument);
}

TEST_CASE("ruled tiles on the quadric lose exactly the trace dimension") {
  RegularityConfig rc =
      build_regularity_config(RegularityKind::New3, 3, 7, 42);
  RegularityScan scan = regularity_scan(rc, 2, 8);
  for (const auto& row : scan.rows)
    CHECK(row.h1 == std::size_t(8 - row.e));
  CHECK(scan.index == 8);
}

TEST_CASE("regularity kinds parse by their command-line names") {
  CHECK(regularity_kind_from("new1") == RegularityKind::New1);
  CHECK(regularity_kind_from("new11") == RegularityKind::New11);
  CHECK(regularity_kind_from("new2_0") == RegularityKind::New2_0);
  CHECK(regularity_kind_from("new3") == RegularityKind::New3);
  CHECK(!regularity_kind_from("new4"));
  CHECK(to_string(RegularityKind::New2_0) == "new2_0");
}
