#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/postulation.hpp"

namespace apolar {

// Families of short schemes built to have bad postulation in a prescribed
// range of degrees.  Each builder returns a concrete configuration; the scan
// then reports h1 along a degree range and the regularity index (the first
// degree from which h1 stays zero).
//
//   new1    t squares cut out by a fixed line L and doubled pencil lines
//           through distinct points of L; for t >= (d+1)/2 every degree-d
//           section vanishes on L, so h0(d) = binomial(d, 2) exactly.
//   new11   t tiles sharing the long side L: h1(3t-2) = 1, index 3t-1.
//   new2_0  tiles on and off a line, bad in exactly one degree d
//           (admissible when (6d-1)^2 >= 288 t - 369 and d <= 3t-2).
//   new3    t tiles with long side along a (1,0)-curve of P1xP1:
//           h1(d, e) = 3t-1-e for t-1 <= e <= 3t-2.

enum class RegularityKind { New1, New11, New2_0, New3 };

std::string to_string(RegularityKind k);
std::optional<RegularityKind> regularity_kind_from(const std::string& name);

bool new2_0_admissible(int t, long d);

struct RegularityConfig {
  RegularityKind kind;
  int t = 0;
  long d = 0;  // new2_0: the degree meant to be bad
  Configuration config;
  std::string description;
};

RegularityConfig build_regularity_config(RegularityKind kind, int t, long d,
                                         std::uint64_t seed);

struct RegularityRow {
  long d = 0;
  long e = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};

struct RegularityScan {
  RegularityConfig source;
  std::vector<RegularityRow> rows;
  std::optional<long> index;  // first degree with h1 = 0 onward, if reached
};

// P2 kinds scan degrees lo..hi; new3 keeps d = 3t-2 fixed and scans
// e = lo..hi on P1xP1.
RegularityScan regularity_scan(const RegularityConfig& rc, long lo, long hi);

}  // namespace apolar
