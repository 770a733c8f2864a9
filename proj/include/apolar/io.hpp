#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apolar/regularity.hpp"
#include "apolar/suites.hpp"

namespace apolar {

// Tabular output: the same table renders as CSV (comments become
// leading "# " lines) or as a JSON document.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json json;
};

Table suite_table(const SuiteRun& run);
Table report_table(const std::string& label, const PostulationReport& rep);
Table scan_table(const RegularityScan& scan, std::uint64_t seed);

struct SecantRow {
  long r = 0;
  long s = 0;
  long n = 0;
  long dim = 0;
  long expected = 0;
};
Table secant_table(const std::string& label, const std::vector<SecantRow>& rows,
                   std::uint64_t seed, unsigned trials);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

// A postulation request: scheme counts drawn at random per trial plus
// explicitly placed schemes, over an optional base of assigned points.
struct HilbertRequest {
  Bundle bundle;
  ConfigTemplate random_part;
  Configuration explicit_part;
  std::vector<Point> base_points;
  std::uint64_t seed = 0;
  unsigned trials = 3;
};

HilbertRequest parse_hilbert_config(const nlohmann::json& j);

}  // namespace apolar
