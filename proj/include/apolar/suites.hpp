#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/postulation.hpp"

namespace apolar {

// For d >= 4 there is exactly one way to write d + 1 = 2a + 3b with
// a in {0, 1, 2} and b >= 1; the induction on tile unions splits a degree-d
// system along a line into a jets and b length-3 traces.
struct NumLem {
  int a = 0;
  long b = 0;
};
NumLem numlem_decompose(long d);

// One residuation step along a chart line: every scheme is split into its
// trace on the line and its residual, the bundle is twisted down, and the
// dimension count h0(X) <= h0(trace on the line) + h0(residual) is checked.
// Traces land on the line itself (a P1), where finite schemes always impose
// independent conditions, so the trace term is exact.
struct HoraceStep {
  std::size_t trace_length = 0;
  Configuration residual;
  std::size_t h0_full = 0;
  std::size_t h0_trace = 0;     // max(0, restricted dim - trace length)
  std::size_t h0_residual = 0;  // on the twisted-down bundle
  bool inequality_ok = false;
};
HoraceStep horace_step(const LinearSystem& v, const Configuration& c,
                       const LinearForm& line);

// ---------------------------------------------------------------------------
// Exception catalog: the finitely many systems of double points that fail to
// have the expected dimension, each with a constructive witness section.

struct ExceptionCase {
  std::string id;
  Bundle bundle;
  int doubles = 0;
  int defect = 1;
  WitnessProvider make_witness;
};

std::vector<ExceptionCase> exception_catalog(int u_max = 4);

// Catalog entry matching a configuration of double points on a bundle, if any.
std::optional<ExceptionCase> catalog_lookup(const Bundle& v,
                                            const Configuration& c);
std::optional<ExceptionCase> catalog_lookup_counts(const Bundle& v,
                                                   int doubles_only);

// Witness provider backed by the catalog; what postulate() and the command
// line use to turn a shortfall into a certified defect.
WitnessProvider catalog_witnesses();

// ---------------------------------------------------------------------------
// Verification suites.  Each cell runs postulate() with a seed derived from
// (global seed, statement, cell coordinates) and records whether the verdict
// matches the expected-dimension claim: Certified for ordinary cells, a
// witnessed defect of the predicted size for cataloged ones.  Inconclusive
// never passes.

struct SuiteResult {
  std::string statement;
  std::vector<std::pair<std::string, long>> cell;  // ordered parameters
  std::optional<PostulationReport> report;
  bool agrees = false;
  std::string note;
};

struct SuiteRun {
  std::string id;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  std::vector<SuiteResult> rows;
  std::vector<std::string> notes;

  bool all_agree() const;
  std::size_t count(Verdict v) const;
};

SuiteRun verify_tiles_p2(int dmax, unsigned trials, std::uint64_t seed);
SuiteRun verify_fattiles_p2(int dmax, unsigned trials, std::uint64_t seed);
SuiteRun verify_p1p1(int dmax, int emax, unsigned trials, std::uint64_t seed);
SuiteRun verify_hirzebruch(const std::vector<int>& es, int amax, int bmargin,
                           unsigned trials, std::uint64_t seed);
SuiteRun verify_twosquare_lemma(int count, unsigned trials,
                                std::uint64_t seed);
SuiteRun verify_curvilinear(int count, unsigned trials, std::uint64_t seed);
SuiteRun verify_divisor_points(int count, std::uint64_t seed);
SuiteRun verify_corollary_mixed(int count_per_surface, unsigned trials,
                                std::uint64_t seed);

SuiteRun run_suite(const std::string& id, int dmax, int emax, int amax,
                   int bmargin, int count, unsigned trials,
                   std::uint64_t seed);
std::vector<std::string> suite_ids();

}  // namespace apolar
