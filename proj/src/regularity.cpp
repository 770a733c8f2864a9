#include "apolar/regularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "apolar/rng.hpp"

namespace apolar {

std::string to_string(RegularityKind k) {
  switch (k) {
    case RegularityKind::New1:   return "new1";
    case RegularityKind::New11:  return "new11";
    case RegularityKind::New2_0: return "new2_0";
    case RegularityKind::New3:   return "new3";
  }
  return "?";
}

std::optional<RegularityKind> regularity_kind_from(const std::string& name) {
  if (name == "new1")   return RegularityKind::New1;
  if (name == "new11")  return RegularityKind::New11;
  if (name == "new2_0") return RegularityKind::New2_0;
  if (name == "new3")   return RegularityKind::New3;
  return std::nullopt;
}

bool new2_0_admissible(int t, long d) {
  if (t < 3 || d > 3L * t - 2) return false;
  long long lhs = (6LL * d - 1) * (6LL * d - 1);
  return lhs >= 288LL * t - 369;
}

namespace {

std::vector<Fp> distinct_values(Rng& rng, int n) {
  std::vector<Fp> out;
  while (static_cast<int>(out.size()) < n) {
    Fp x = rng.fp();
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

// Tile at (x0, 0) whose length-3 side lies along the line y = 0.
LocalScheme tile_along_axis(Fp x0, Rng& rng) {
  Frame f{fp(1), fp(0), rng.fp(), fp(1)};
  return make_scheme(SchemeKind::tile(f), Point{x0, fp(0)});
}

// Tile supported on y = 0 whose length-3 side points off the line.
LocalScheme tile_across_axis(Fp x0, Rng& rng) {
  Frame f{rng.fp(), fp(1), fp(1), fp(0)};
  return make_scheme(SchemeKind::tile(f), Point{x0, fp(0)});
}

LocalScheme general_tile_off_axis(Rng& rng) {
  Point p{rng.fp(), rng.fp()};
  while (p.y == Fp{}) p.y = rng.fp();
  return make_scheme(SchemeKind::tile(random_frame(rng)), p);
}

}  // namespace

RegularityConfig build_regularity_config(RegularityKind kind, int t, long d,
                                         std::uint64_t seed) {
  if (t < 2) throw std::invalid_argument("construction needs t >= 2");
  Rng rng = Rng::for_cell(
      seed, {hash_str("regularity"), static_cast<std::uint64_t>(kind),
             static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(d)});

  RegularityConfig rc;
  rc.kind = kind;
  rc.t = t;
  rc.d = d;

  switch (kind) {
    case RegularityKind::New1: {
      // 2L cap 2R_p at t points p of the line L: y = 0.
      for (Fp x : distinct_values(rng, t)) {
        Frame f{fp(1), fp(0), rng.fp(), fp(1)};
        rc.config.schemes.push_back(
            make_scheme(SchemeKind::two_square(f), Point{x, fp(0)}));
      }
      rc.description = std::to_string(t) +
                       " squares 2L cap 2R_p at points of the line y=0";
      break;
    }
    case RegularityKind::New11: {
      for (Fp x : distinct_values(rng, t))
        rc.config.schemes.push_back(tile_along_axis(x, rng));
      rc.description =
          std::to_string(t) + " tiles sharing the line y=0 as long side";
      break;
    }
    case RegularityKind::New2_0: {
      if (!new2_0_admissible(t, d))
        throw std::invalid_argument(
            "d out of the admissible range for this construction");
      int along = 0, across = 0;
      if (d % 3 == 1) along = static_cast<int>((d + 2) / 3);
      if (d % 3 == 2) { along = static_cast<int>((d - 2) / 3); across = 2; }
      if (d % 3 == 0) { along = static_cast<int>(d / 3); across = 1; }
      int general = t - along - across;
      auto xs = distinct_values(rng, along + across);
      for (int i = 0; i < along; ++i)
        rc.config.schemes.push_back(tile_along_axis(xs[i], rng));
      for (int i = 0; i < across; ++i)
        rc.config.schemes.push_back(tile_across_axis(xs[along + i], rng));
      for (int i = 0; i < general; ++i)
        rc.config.schemes.push_back(general_tile_off_axis(rng));
      rc.description = std::to_string(along) + " tiles along y=0 + " +
                       std::to_string(across) + " across it + " +
                       std::to_string(general) + " general tiles";
      break;
    }
    case RegularityKind::New3: {
      // Tiles whose long side lies along the vertical line x = c on P1xP1.
      Fp c = rng.fp();
      for (Fp y : distinct_values(rng, t)) {
        Frame f{fp(0), fp(1), fp(1), rng.fp()};
        rc.config.schemes.push_back(
            make_scheme(SchemeKind::tile(f), Point{c, y}));
      }
      rc.description = std::to_string(t) +
                       " tiles with long side along a line of |O(1;0)|";
      break;
    }
  }
  return rc;
}

RegularityScan regularity_scan(const RegularityConfig& rc, long lo, long hi) {
  RegularityScan out;
  out.source = rc;
  if (lo < 0) lo = 0;
  for (long k = lo; k <= hi; ++k) {
    Bundle v = rc.kind == RegularityKind::New3
                   ? Bundle::p1p1(static_cast<int>(rc.d), static_cast<int>(k))
                   : Bundle::p2(static_cast<int>(k));
    PostulationReport rep = evaluate_configuration(full_system(v), rc.config);
    RegularityRow row;
    row.d = rc.kind == RegularityKind::New3 ? rc.d : k;
    row.e = rc.kind == RegularityKind::New3 ? k : 0;
    row.h0 = rep.h0;
    row.h1 = rep.h1;
    out.rows.push_back(row);
  }
  // First scanned value from which h1 stays zero through the end.
  std::size_t suffix = out.rows.size();
  while (suffix > 0 && out.rows[suffix - 1].h1 == 0) --suffix;
  if (suffix < out.rows.size()) out.index = lo + static_cast<long>(suffix);
  return out;
}

}  // namespace apolar
