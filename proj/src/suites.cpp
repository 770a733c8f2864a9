#include "apolar/suites.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "apolar/rng.hpp"

namespace apolar {

NumLem numlem_decompose(long d) {
  if (d < 4) throw std::invalid_argument("decomposition needs d >= 4");
  long n = d + 1;
  int a = static_cast<int>((2 * n) % 3);  // the unique a with 2a = n mod 3
  long b = (n - 2 * a) / 3;
  assert(b >= 1);
  assert(2 * a + b <= d);
  assert((d + 2) * (d + 1) / 8 >= a + b);
  return {a, b};
}

HoraceStep horace_step(const LinearSystem& v, const Configuration& c,
                       const LinearForm& line) {
  if (v.columns)
    throw std::invalid_argument("horace step needs the complete system");
  if (!valid_divisor(v.bundle, line))
    throw std::invalid_argument("not a residuation divisor for this surface");

  HoraceStep out;
  for (const auto& z : c.schemes) {
    Residuation r = residuate(z, line);
    assert(r.trace_length +
               (r.residual ? r.residual->length() : 0) == z.length());
    out.trace_length += r.trace_length;
    if (r.residual) out.residual.schemes.push_back(*r.residual);
  }
  out.h0_full = dim_minus(v, c);
  std::size_t on_line = restricted_dim(v.bundle, line);
  out.h0_trace = on_line > out.trace_length ? on_line - out.trace_length : 0;
  out.h0_residual =
      dim_minus(full_system(twist_down(v.bundle, line)), out.residual);
  out.inequality_ok = out.h0_full <= out.h0_trace + out.h0_residual;
  return out;
}

bool SuiteRun::all_agree() const {
  for (const auto& r : rows)
    if (!r.agrees) return false;
  return true;
}

std::size_t SuiteRun::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.report && r.report->verdict == v) ++n;
  return n;
}

namespace {

using Cell = std::vector<std::pair<std::string, long>>;

std::uint64_t cell_seed(std::uint64_t seed, std::string_view suite,
                        const Cell& cell) {
  std::uint64_t s = mix64(seed ^ hash_str(suite));
  for (const auto& [key, val] : cell) {
    s = mix64(s ^ hash_str(key));
    s = mix64(s ^ static_cast<std::uint64_t>(val));
  }
  return s;
}

// Catalog entry a template would hit: only all-double configurations match.
std::optional<ExceptionCase> catalog_match(const Bundle& v,
                                           const ConfigTemplate& t) {
  int doubles = 0;
  for (const auto& e : t) {
    if (e.count == 0) continue;
    if (e.kind.tag != KindTag::FatPoint || e.kind.m != 2) return std::nullopt;
    doubles += e.count;
  }
  if (doubles == 0) return std::nullopt;
  return catalog_lookup_counts(v, doubles);
}

SuiteResult run_postulation_cell(const std::string& statement, Cell cell,
                                 const Bundle& v, const ConfigTemplate& t,
                                 unsigned trials, std::uint64_t cs) {
  SuiteResult out;
  out.statement = statement;
  PostulationReport rep =
      postulate(full_system(v), t, trials, cs, catalog_witnesses());
  if (auto hit = catalog_match(v, t)) {
    out.agrees = rep.verdict == Verdict::Defective && rep.witnessed &&
                 rep.h0 == rep.expected + std::size_t(hit->defect);
    out.note = "cataloged " + hit->id;
  } else {
    out.agrees = rep.verdict == Verdict::Certified;
  }
  out.cell = std::move(cell);
  out.report = rep;
  return out;
}

std::vector<long> boundary_pair(long lo, long hi) {
  if (hi < lo) hi = lo;
  if (lo == hi) return {lo};
  return {lo, hi};
}

std::vector<long> third_boundary(long remainder) {
  if (remainder <= 0) return {0};
  return boundary_pair(remainder / 3, (remainder + 2) / 3);
}

}  // namespace

SuiteRun verify_tiles_p2(int dmax, unsigned trials, std::uint64_t seed) {
  SuiteRun run{"tiles-p2", seed, trials, {}, {}};
  const std::string claim =
      "h0 = max(0; C(d+2;2) - 4s) for a general union of s tiles";
  for (int d = 1; d <= dmax; ++d) {
    long n = static_cast<long>(d + 2) * (d + 1) / 2;
    std::vector<long> ss = {1, std::max<long>(1, n / 8), n / 4,
                            (n + 3) / 4};
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    for (long s : ss) {
      Cell cell{{"d", d}, {"s", s}};
      ConfigTemplate t{{{KindTag::Tile, 3}, static_cast<int>(s)}};
      run.rows.push_back(run_postulation_cell(
          claim, cell, Bundle::p2(d), t, trials, cell_seed(seed, run.id, cell)));
    }
  }
  return run;
}

SuiteRun verify_fattiles_p2(int dmax, unsigned trials, std::uint64_t seed) {
  SuiteRun run{"fattiles-p2", seed, trials, {}, {}};
  const std::string claim =
      "h0 = max(0; C(d+2;2) - 3r - 4s) for r double points and s tiles";
  std::size_t defective = 0;
  for (int d = 1; d <= dmax; ++d) {
    long n = static_cast<long>(d + 2) * (d + 1) / 2;
    for (long s = 0; s <= (n + 3) / 4; ++s) {
      for (long r : third_boundary(n - 4 * s)) {
        if (r == 0 && s == 0) continue;
        Cell cell{{"d", d}, {"r", r}, {"s", s}};
        ConfigTemplate t{{{KindTag::FatPoint, 2}, static_cast<int>(r)},
                         {{KindTag::Tile, 3}, static_cast<int>(s)}};
        SuiteResult row = run_postulation_cell(
            claim, cell, Bundle::p2(d), t, trials,
            cell_seed(seed, run.id, cell));
        if (row.report->verdict == Verdict::Defective) ++defective;
        run.rows.push_back(std::move(row));
      }
    }
  }
  run.notes.push_back("defective cells: " + std::to_string(defective) +
                      " (catalog predicts 2: d=2 r=2 and d=4 r=5)");
  return run;
}

SuiteRun verify_p1p1(int dmax, int emax, unsigned trials, std::uint64_t seed) {
  SuiteRun run{"p1p1", seed, trials, {}, {}};
  const std::string claim =
      "h0 = max(0; (d+1)(e+1) - 3r - 4s) for r double points and s tiles";
  auto add = [&](int d, int e, long r, long s) {
    Cell cell{{"d", d}, {"e", e}, {"r", r}, {"s", s}};
    for (const auto& row : run.rows)
      if (row.cell == cell) return;
    ConfigTemplate t{{{KindTag::FatPoint, 2}, static_cast<int>(r)},
                     {{KindTag::Tile, 3}, static_cast<int>(s)}};
    run.rows.push_back(run_postulation_cell(claim, cell, Bundle::p1p1(d, e), t,
                                            trials,
                                            cell_seed(seed, run.id, cell)));
  };
  for (int d = 1; d <= dmax; ++d)
    for (int e = 1; e <= emax; ++e) {
      long n = static_cast<long>(d + 1) * (e + 1);
      for (long s : boundary_pair(n / 4, (n + 3) / 4)) add(d, e, 0, s);
      for (long r : third_boundary(n)) add(d, e, r, 0);
      long smid = std::max<long>(1, n / 8);
      for (long r : third_boundary(n - 4 * smid)) add(d, e, r, smid);
      // Control cells for the double-point exception family.
      if (d == 2 && e >= 2 && e % 2 == 0) add(d, e, e / 2 + 1, 0);
      if (e == 2 && d >= 2 && d % 2 == 0) add(d, e, d / 2 + 1, 0);
    }

  // Record which count of double points on (2, 2u) is actually defective.
  for (int u = 1; 2 * u <= emax; ++u) {
    bool family_defective = false, control_certified = false;
    for (const auto& row : run.rows) {
      if (!row.report) continue;
      Cell fam{{"d", 2}, {"e", 2 * u}, {"r", 2 * u + 1}, {"s", 0}};
      Cell ctl{{"d", 2}, {"e", 2 * u}, {"r", u + 1}, {"s", 0}};
      if (row.cell == fam)
        family_defective = row.report->verdict == Verdict::Defective &&
                           row.report->witnessed;
      if (row.cell == ctl)
        control_certified = row.report->verdict == Verdict::Certified;
    }
    run.notes.push_back(
        "(2;2u) family u=" + std::to_string(u) + ": r=" +
        std::to_string(2 * u + 1) +
        (family_defective ? " defective (witnessed double (1;u)-curve)"
                          : " NOT defective") +
        "; r=" + std::to_string(u + 1) +
        (control_certified ? " certified" : " NOT certified"));
  }
  run.notes.push_back(
      "defective count of double points on (2;2u) is 2u+1; u+1 certifies");
  return run;
}

SuiteRun verify_hirzebruch(const std::vector<int>& es, int amax, int bmargin,
                           unsigned trials, std::uint64_t seed) {
  SuiteRun run{"hirzebruch", seed, trials, {}, {}};
  const std::string claim =
      "h0 = max(0; n - 4s) for a general union of s 2-squares on F_e";
  std::size_t critical = 0, critical_zero = 0;
  for (int e : es)
    for (int a = 2; a <= amax; ++a)
      for (int b = a * e + 1; b <= a * e + bmargin; ++b) {
        Bundle v = Bundle::hirzebruch(e, a, b);
        long n = static_cast<long>(section_count(v));
        std::vector<long> ss = boundary_pair(n / 4, (n + 3) / 4);
        if (a == 2 && b % 2 == 0) ss.push_back(b + e + 1);
        for (long s : ss) {
          Cell cell{{"e", e}, {"a", a}, {"b", b}, {"s", s}};
          ConfigTemplate t{{{KindTag::TwoSquare, 2}, static_cast<int>(s)}};
          SuiteResult row = run_postulation_cell(
              claim, cell, v, t, trials, cell_seed(seed, run.id, cell));
          if (a == 2 && b % 2 == 0 && s == b + e + 1) {
            ++critical;
            if (row.report->h0 == 0) ++critical_zero;
            row.note = "critical cell s=b+e+1; h0 must vanish";
          }
          run.rows.push_back(std::move(row));
        }
      }
  run.notes.push_back("critical cells with h0 = 0: " +
                      std::to_string(critical_zero) + " of " +
                      std::to_string(critical));
  return run;
}

SuiteRun verify_twosquare_lemma(int count, unsigned trials,
                                std::uint64_t seed) {
  SuiteRun run{"twosquare-lemma", seed, trials, {}, {}};
  const std::string claim =
      "dim V(-X) = max(0; dim V(-2P) - 1) for a general 2-square X at P";
  for (int idx = 0; idx < count; ++idx) {
    Cell cell{{"idx", idx}};
    Rng rng = Rng(cell_seed(seed, run.id, cell));
    Bundle v = [&] {
      switch (rng.below(3)) {
        case 0:  return Bundle::p2(1 + static_cast<int>(rng.below(6)));
        case 1:  return Bundle::p1p1(1 + static_cast<int>(rng.below(4)),
                                     1 + static_cast<int>(rng.below(4)));
        default: {
          int e = 1 + static_cast<int>(rng.below(2));
          int a = 2 + static_cast<int>(rng.below(2));
          int b = a * e + 1 + static_cast<int>(rng.below(3));
          return Bundle::hirzebruch(e, a, b);
        }
      }
    }();
    LinearSystem sys = full_system(v);
    Configuration base;
    long npts = static_cast<long>(rng.below(sys.dim() / 2 + 1));
    if (npts > 0) {
      std::vector<Point> used;
      for (long i = 0; i < npts; ++i) {
        Point p = sample_point_distinct(rng, used);
        used.push_back(p);
        base.schemes.push_back(make_scheme(SchemeKind::simple_point(), p));
      }
      sys = subsystem(sys, base);
    }
    Point p = sample_point_distinct(rng, base.supports());

    Configuration dbl{{make_scheme(SchemeKind::fat_point(2), p)}};
    std::size_t n2p = dim_minus(sys, dbl);
    std::size_t best = sys.dim();
    for (int j = 0; j < 5; ++j) {
      Configuration sq{{make_scheme(SchemeKind::two_square(random_frame(rng)),
                                    p)}};
      best = std::min(best, dim_minus(sys, sq));
    }
    std::size_t want = n2p > 0 ? n2p - 1 : 0;

    SuiteResult row;
    row.statement = claim;
    row.cell = std::move(cell);
    row.agrees = best == want;
    row.note = sys.label() + " dimV(-2P)=" + std::to_string(n2p) +
               " min dimV(-X)=" + std::to_string(best);
    run.rows.push_back(std::move(row));
  }
  return run;
}

SuiteRun verify_curvilinear(int count, unsigned trials, std::uint64_t seed) {
  SuiteRun run{"curvilinear", seed, trials, {}, {}};
  const std::string claim =
      "dim V(-Z) = max(0; dim V - len Z) for general curvilinear unions";
  for (int idx = 0; idx < count; ++idx) {
    Cell cell{{"idx", idx}};
    std::uint64_t cs = cell_seed(seed, run.id, cell);
    Rng rng = Rng(cs);
    Bundle v = [&] {
      switch (rng.below(3)) {
        case 0:  return Bundle::p2(2 + static_cast<int>(rng.below(7)));
        case 1:  return Bundle::p1p1(1 + static_cast<int>(rng.below(5)),
                                     1 + static_cast<int>(rng.below(5)));
        default: {
          int e = 1 + static_cast<int>(rng.below(2));
          int a = 2 + static_cast<int>(rng.below(2));
          int b = a * e + 1 + static_cast<int>(rng.below(4));
          return Bundle::hirzebruch(e, a, b);
        }
      }
    }();
    LinearSystem sys = full_system(v);
    long base_pts = static_cast<long>(rng.below(sys.dim() / 2 + 1));
    if (base_pts > 0) {
      Configuration base;
      std::vector<Point> used;
      for (long i = 0; i < base_pts; ++i) {
        Point p = sample_point_distinct(rng, used);
        used.push_back(p);
        base.schemes.push_back(make_scheme(SchemeKind::simple_point(), p));
      }
      sys = subsystem(sys, base);
    }
    int pts = static_cast<int>(rng.below(3));
    int j2 = static_cast<int>(rng.below(3));
    int c3 = static_cast<int>(rng.below(3));
    int c4 = static_cast<int>(rng.below(3));
    if (pts + j2 + c3 + c4 == 0) j2 = 1;
    ConfigTemplate t{{{KindTag::SimplePoint, 1}, pts},
                     {{KindTag::Jet, 2}, j2},
                     {{KindTag::Curvilinear, 3}, c3},
                     {{KindTag::Curvilinear, 4}, c4}};

    SuiteResult row;
    row.statement = claim;
    PostulationReport rep = postulate(sys, t, trials, cs);
    row.agrees = rep.verdict == Verdict::Certified;
    row.note = sys.label() + " pts=" + std::to_string(pts) +
               " jet2=" + std::to_string(j2) + " c3=" + std::to_string(c3) +
               " c4=" + std::to_string(c4) + " base=" +
               std::to_string(base_pts);
    row.cell = std::move(cell);
    row.report = rep;
    run.rows.push_back(std::move(row));
  }
  return run;
}

SuiteRun verify_divisor_points(int count, std::uint64_t seed) {
  SuiteRun run{"divisor-points", seed, 1, {}, {}};
  const std::string claim =
      "s general points on a divisor D lower h0 by s while the residual "
      "system has room";
  for (int idx = 0; idx < count; ++idx) {
    Cell cell{{"idx", idx}};
    Rng rng = Rng(cell_seed(seed, run.id, cell));
    Bundle v = [&] {
      switch (rng.below(3)) {
        case 0:  return Bundle::p2(2 + static_cast<int>(rng.below(6)));
        case 1:  return Bundle::p1p1(2 + static_cast<int>(rng.below(4)),
                                     2 + static_cast<int>(rng.below(4)));
        default: {
          int e = 1 + static_cast<int>(rng.below(2));
          int a = 2 + static_cast<int>(rng.below(2));
          int b = a * e + 1 + static_cast<int>(rng.below(3));
          return Bundle::hirzebruch(e, a, b);
        }
      }
    }();
    LinearForm line;
    if (v.surface() == SurfaceTag::P2) {
      line = line_through(sample_point(rng), rng.nonzero(), rng.fp());
    } else if (v.surface() == SurfaceTag::P1xP1 && rng.below(2) == 0) {
      line = LinearForm{fp(0), fp(1), -rng.fp()};  // y = const
    } else {
      line = LinearForm{fp(1), fp(0), -rng.fp()};  // x = const
    }

    ConfigTemplate t{
        {{KindTag::SimplePoint, 1}, static_cast<int>(rng.below(3))},
        {{KindTag::FatPoint, 2}, static_cast<int>(rng.below(3))},
        {{KindTag::Tile, 3}, static_cast<int>(rng.below(2))}};
    Configuration z = draw_configuration(t, rng);

    LinearSystem sys = full_system(v);
    std::size_t h0z = dim_minus(sys, z);
    Configuration residual;
    for (const auto& sch : z.schemes) {
      Residuation r = residuate(sch, line);
      if (r.residual) residual.schemes.push_back(*r.residual);
    }
    std::size_t h0res =
        dim_minus(full_system(twist_down(v, line)), residual);

    std::size_t s, want;
    if (h0res == 0 && rng.below(2) == 0) {
      s = h0z + 1 + rng.below(3);
      want = 0;
    } else if (h0z > h0res) {
      s = 1 + rng.below(h0z - h0res);
      want = h0z - s;
    } else {
      SuiteResult row;
      row.statement = claim;
      row.cell = std::move(cell);
      row.agrees = h0z == h0res && h0z == 0;
      row.note = sys.label() + " degenerate draw h0(Z)=" +
                 std::to_string(h0z) + " h0(res)=" + std::to_string(h0res);
      run.rows.push_back(std::move(row));
      continue;
    }

    Configuration merged = z;
    std::vector<Point> used = z.supports();
    for (std::size_t i = 0; i < s; ++i) {
      Point p;
      do {
        p = random_point_on(line, rng);
      } while (std::find(used.begin(), used.end(), p) != used.end());
      used.push_back(p);
      merged.schemes.push_back(make_scheme(SchemeKind::simple_point(), p));
    }
    std::size_t got = dim_minus(sys, merged);

    SuiteResult row;
    row.statement = claim;
    row.cell = std::move(cell);
    row.agrees = got == want;
    row.note = sys.label() + " h0(Z)=" + std::to_string(h0z) + " h0(res)=" +
               std::to_string(h0res) + " s=" + std::to_string(s) + " got=" +
               std::to_string(got) + " want=" + std::to_string(want);
    run.rows.push_back(std::move(row));
  }
  return run;
}

SuiteRun verify_corollary_mixed(int count_per_surface, unsigned trials,
                                std::uint64_t seed) {
  SuiteRun run{"corollary-mixed", seed, trials, {}, {}};
  const std::string claim =
      "unions of schemes of length <= 4 have good postulation unless "
      "cataloged";
  auto add = [&](int surface, int idx, int d, int e, int pt, int dbl, int j2,
                 int j3, int c3, int c4, int sq, int tile) {
    Cell cell{{"surface", surface}, {"idx", idx},  {"d", d},   {"e", e},
              {"pt", pt},           {"dbl", dbl},  {"j2", j2}, {"j3", j3},
              {"c3", c3},           {"c4", c4},    {"sq", sq}, {"tile", tile}};
    ConfigTemplate t{{{KindTag::SimplePoint, 1}, pt},
                     {{KindTag::FatPoint, 2}, dbl},
                     {{KindTag::Jet, 2}, j2},
                     {{KindTag::Jet, 3}, j3},
                     {{KindTag::Curvilinear, 3}, c3},
                     {{KindTag::Curvilinear, 4}, c4},
                     {{KindTag::TwoSquare, 2}, sq},
                     {{KindTag::Tile, 3}, tile}};
    Bundle v = surface == 0 ? Bundle::p2(d) : Bundle::p1p1(d, e);
    run.rows.push_back(run_postulation_cell(claim, cell, v, t, trials,
                                            cell_seed(seed, run.id, cell)));
  };

  for (int surface = 0; surface < 2; ++surface)
    for (int idx = 0; idx < count_per_surface; ++idx) {
      Rng rng = Rng::for_cell(seed, {hash_str(run.id),
                                     static_cast<std::uint64_t>(surface),
                                     static_cast<std::uint64_t>(idx)});
      int d, e;
      if (surface == 0) {
        d = 4 + static_cast<int>(rng.below(7));
        e = 0;
      } else {
        d = 2 + static_cast<int>(rng.below(6));
        e = 2 + static_cast<int>(rng.below(6));
      }
      int counts[8];
      int total = 0;
      for (int& k : counts) {
        k = static_cast<int>(rng.below(3));
        total += k;
      }
      if (total == 0) counts[1] = 1;
      add(surface, idx, d, e, counts[0], counts[1], counts[2], counts[3],
          counts[4], counts[5], counts[6], counts[7]);
    }

  // Low-degree cells mixing kinds outside the cataloged all-double ones;
  // straight jets are left out below degree 4, where forcing a line into
  // the curve makes them special.
  int idx = count_per_surface;
  add(0, idx++, 2, 0, 0, 1, 0, 0, 0, 0, 1, 0);
  add(0, idx++, 2, 0, 0, 1, 0, 0, 0, 0, 0, 1);
  add(0, idx++, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0);
  add(0, idx++, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1);
  add(0, idx++, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2);
  add(0, idx++, 2, 0, 0, 1, 1, 0, 1, 0, 0, 0);
  add(0, idx++, 3, 0, 1, 2, 0, 0, 0, 1, 0, 1);
  add(0, idx++, 3, 0, 0, 2, 0, 0, 0, 0, 1, 0);
  run.notes.push_back(
      "low-degree mixed cells (no all-double catalog shape) all certify");
  return run;
}

SuiteRun run_suite(const std::string& id, int dmax, int emax, int amax,
                   int bmargin, int count, unsigned trials,
                   std::uint64_t seed) {
  auto pick = [](int v, int dflt) { return v > 0 ? v : dflt; };
  if (id == "tiles-p2")
    return verify_tiles_p2(pick(dmax, 12), trials, seed);
  if (id == "fattiles-p2")
    return verify_fattiles_p2(pick(dmax, 10), trials, seed);
  if (id == "p1p1")
    return verify_p1p1(pick(dmax, 8), pick(emax, 8), trials, seed);
  if (id == "hirzebruch") {
    std::vector<int> es;
    for (int e = 1; e <= pick(emax, 3); ++e) es.push_back(e);
    return verify_hirzebruch(es, pick(amax, 3), pick(bmargin, 4), trials,
                             seed);
  }
  if (id == "twosquare-lemma")
    return verify_twosquare_lemma(pick(count, 100), trials, seed);
  if (id == "curvilinear")
    return verify_curvilinear(pick(count, 100), trials, seed);
  if (id == "divisor-points")
    return verify_divisor_points(pick(count, 100), seed);
  if (id == "corollary-mixed")
    return verify_corollary_mixed(pick(count, 200), trials, seed);
  throw std::invalid_argument("unknown statement id: " + id);
}

std::vector<std::string> suite_ids() {
  return {"tiles-p2",        "fattiles-p2", "p1p1",
          "hirzebruch",      "twosquare-lemma", "curvilinear",
          "divisor-points",  "corollary-mixed"};
}

}  // namespace apolar
