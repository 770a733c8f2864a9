#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/schemes.hpp"
#include "apolar/surfaces.hpp"

namespace apolar {

// A finite union of connected schemes with pairwise distinct supports.
struct Configuration {
  std::vector<LocalScheme> schemes;

  std::size_t total_length() const;
  std::vector<Point> supports() const;
};

Configuration merge(const Configuration& a, const Configuration& b);

// Recipe for random draws: so many schemes of each kind.
struct TemplateEntry {
  KindRequest kind;
  int count = 0;
};
using ConfigTemplate = std::vector<TemplateEntry>;

std::size_t template_length(const ConfigTemplate& t);
Configuration draw_configuration(const ConfigTemplate& t, Rng& rng);

// Matrix of the conditions the configuration imposes on the system: one row
// per dual operator (schemes in order, operators in order), one column per
// basis element of the system.
DenseMatrix conditions_matrix(const LinearSystem& v, const Configuration& c);

// Subsystem of v cut out by a base scheme: columns are a kernel basis of the
// base conditions.
LinearSystem subsystem(const LinearSystem& v, const Configuration& base);

// dim V(-X): dimension of the subsystem of V through the configuration.
std::size_t dim_minus(const LinearSystem& v, const Configuration& c);

std::size_t expected_h0(const LinearSystem& v, std::size_t total_length);

enum class Verdict { Certified, Defective, Inconclusive };
std::string to_string(Verdict v);

// h0 = dim - rank and h1 = length - rank; on the full system of a bundle
// with vanishing first cohomology these are the cohomology of the ideal
// sheaf twist.  A random specialization reaching the expected h0 certifies
// the generic statement (ranks only drop under specialization); a shortfall
// is only evidence, so defectivity is reported solely with a witness.
struct PostulationReport {
  std::size_t dim = 0;
  std::size_t total_length = 0;
  std::size_t rank = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t expected = 0;
  Verdict verdict = Verdict::Inconclusive;
  bool witnessed = false;
  unsigned trials_used = 0;
  unsigned best_trial = 0;
  std::uint64_t seed = 0;
};

// Produces a candidate section known to vanish on configurations of a given
// shape, or nothing.  Used to certify defectivity.
using WitnessProvider = std::function<std::optional<std::vector<Fp>>(
    const LinearSystem&, const Configuration&)>;

bool defect_witness(const LinearSystem& v, const Configuration& c,
                    std::span<const Fp> candidate);

PostulationReport evaluate_configuration(const LinearSystem& v,
                                         const Configuration& c,
                                         const WitnessProvider& witness = {});

PostulationReport postulate(const LinearSystem& v, const ConfigTemplate& t,
                            unsigned trials, std::uint64_t seed,
                            const WitnessProvider& witness = {});

// Projective dimension of the linear span of the configuration under the
// embedding by the complete system of the bundle; -1 for the empty span.
long span_dim(const Bundle& v, const Configuration& c);

// Best span dimension of r random double points over `trials` draws.
long secant_dim(const Bundle& v, int r, unsigned trials, std::uint64_t seed);

}  // namespace apolar
