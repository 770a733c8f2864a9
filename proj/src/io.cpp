#include "apolar/io.hpp"

#include <ostream>
#include <stdexcept>

#include "apolar/version.hpp"

namespace apolar {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> meta_comments(std::uint64_t seed, unsigned trials) {
  return {"apolar " + std::string(kVersion),
          "prime " + std::to_string(Fp::prime),
          "seed " + std::to_string(seed), "trials " + std::to_string(trials)};
}

ordered_json meta_json(std::uint64_t seed, unsigned trials) {
  ordered_json j;
  j["apolar"] = kVersion;
  j["prime"] = Fp::prime;
  j["seed"] = seed;
  j["trials"] = trials;
  return j;
}

const char* const kReportColumns[] = {"dim",      "length",    "rank",
                                      "h0",       "h1",        "expected",
                                      "verdict",  "witnessed", "trials_used"};

void push_report(std::vector<std::string>& row, ordered_json& jrow,
                 const PostulationReport* rep) {
  if (!rep) {
    for (std::size_t i = 0; i < std::size(kReportColumns); ++i)
      row.push_back("");
    return;
  }
  row.push_back(std::to_string(rep->dim));
  row.push_back(std::to_string(rep->total_length));
  row.push_back(std::to_string(rep->rank));
  row.push_back(std::to_string(rep->h0));
  row.push_back(std::to_string(rep->h1));
  row.push_back(std::to_string(rep->expected));
  row.push_back(to_string(rep->verdict));
  row.push_back(rep->witnessed ? "1" : "0");
  row.push_back(std::to_string(rep->trials_used));
  jrow["dim"] = rep->dim;
  jrow["length"] = rep->total_length;
  jrow["rank"] = rep->rank;
  jrow["h0"] = rep->h0;
  jrow["h1"] = rep->h1;
  jrow["expected"] = rep->expected;
  jrow["verdict"] = to_string(rep->verdict);
  jrow["witnessed"] = rep->witnessed;
  jrow["trials_used"] = rep->trials_used;
}

}  // namespace

Table suite_table(const SuiteRun& run) {
  Table t;
  t.comments = meta_comments(run.seed, run.trials);
  if (!run.rows.empty())
    t.comments.push_back("statement " + run.id + ": " +
                         run.rows.front().statement);
  for (const auto& n : run.notes) t.comments.push_back("note " + n);

  t.json = meta_json(run.seed, run.trials);
  t.json["id"] = run.id;
  if (!run.rows.empty()) t.json["statement"] = run.rows.front().statement;
  t.json["all_agree"] = run.all_agree();
  t.json["summary"] = {{"rows", run.rows.size()},
                       {"certified", run.count(Verdict::Certified)},
                       {"defective", run.count(Verdict::Defective)},
                       {"inconclusive", run.count(Verdict::Inconclusive)}};
  t.json["notes"] = run.notes;
  t.json["rows"] = ordered_json::array();

  if (!run.rows.empty()) {
    for (const auto& [key, val] : run.rows.front().cell)
      t.columns.push_back(key);
    for (const char* n : kReportColumns) t.columns.push_back(n);
    t.columns.push_back("agrees");
    t.columns.push_back("note");
  }
  for (const auto& r : run.rows) {
    std::vector<std::string> row;
    ordered_json jrow;
    for (const auto& [key, val] : r.cell) {
      row.push_back(std::to_string(val));
      jrow[key] = val;
    }
    push_report(row, jrow, r.report ? &*r.report : nullptr);
    row.push_back(r.agrees ? "1" : "0");
    row.push_back(r.note);
    jrow["agrees"] = r.agrees;
    if (!r.note.empty()) jrow["note"] = r.note;
    t.rows.push_back(std::move(row));
    t.json["rows"].push_back(std::move(jrow));
  }
  return t;
}

Table report_table(const std::string& label, const PostulationReport& rep) {
  Table t;
  t.comments = meta_comments(rep.seed, rep.trials_used);
  t.json = meta_json(rep.seed, rep.trials_used);
  t.json["system"] = label;
  t.columns.push_back("system");
  for (const char* n : kReportColumns) t.columns.push_back(n);
  std::vector<std::string> row{label};
  ordered_json jrow;
  push_report(row, jrow, &rep);
  t.columns.push_back("best_trial");
  row.push_back(std::to_string(rep.best_trial));
  jrow["best_trial"] = rep.best_trial;
  for (auto& [k, v] : jrow.items()) t.json[k] = v;
  t.rows.push_back(std::move(row));
  return t;
}

Table scan_table(const RegularityScan& scan, std::uint64_t seed) {
  Table t;
  t.comments = meta_comments(seed, 1);
  t.comments.push_back("construction " + to_string(scan.source.kind) +
                       " t=" + std::to_string(scan.source.t) + " d=" +
                       std::to_string(scan.source.d) + ": " +
                       scan.source.description);
  t.comments.push_back(
      "index " + (scan.index ? std::to_string(*scan.index) : "none"));
  t.columns = {"d", "e", "h0", "h1"};
  t.json = meta_json(seed, 1);
  t.json["kind"] = to_string(scan.source.kind);
  t.json["t"] = scan.source.t;
  t.json["d"] = scan.source.d;
  t.json["description"] = scan.source.description;
  if (scan.index)
    t.json["index"] = *scan.index;
  else
    t.json["index"] = nullptr;
  t.json["rows"] = ordered_json::array();
  for (const auto& r : scan.rows) {
    t.rows.push_back({std::to_string(r.d), std::to_string(r.e),
                      std::to_string(r.h0), std::to_string(r.h1)});
    t.json["rows"].push_back(ordered_json{
        {"d", r.d}, {"e", r.e}, {"h0", r.h0}, {"h1", r.h1}});
  }
  return t;
}

Table secant_table(const std::string& label, const std::vector<SecantRow>& rows,
                   std::uint64_t seed, unsigned trials) {
  Table t;
  t.comments = meta_comments(seed, trials);
  t.comments.push_back("system " + label);
  t.columns = {"r", "s", "n", "span_dim", "expected", "defective"};
  t.json = meta_json(seed, trials);
  t.json["system"] = label;
  t.json["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    bool defective = r.dim < r.expected;
    t.rows.push_back({std::to_string(r.r), std::to_string(r.s),
                      std::to_string(r.n), std::to_string(r.dim),
                      std::to_string(r.expected), defective ? "1" : "0"});
    t.json["rows"].push_back(ordered_json{{"r", r.r},
                                          {"s", r.s},
                                          {"n", r.n},
                                          {"span_dim", r.dim},
                                          {"expected", r.expected},
                                          {"defective", defective}});
  }
  return t;
}

namespace {

void put_field(std::ostream& os, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    os << s;
    return;
  }
  os << '"';
  for (char c : s) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& c : t.comments) os << "# " << c << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    put_field(os, t.columns[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      put_field(os, row[i]);
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  os << t.json.dump(2) << '\n';
}

namespace {

Fp fp_from_json(const json& v) {
  if (v.is_number_integer()) return Fp::from_int(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      if (!s.empty() && s.front() == '-')
        return Fp::from_int(std::stoll(s));
      return Fp::from_u64(std::stoull(s));
    } catch (const std::exception&) {
      throw std::invalid_argument("not a field element: " + s);
    }
  }
  throw std::invalid_argument("field elements are integers or strings");
}

Point point_from_json(const json& j) {
  return Point{fp_from_json(j.at("x")), fp_from_json(j.at("y"))};
}

Frame frame_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("a frame is four integers [ux;uy;vx;vy]");
  Frame f{fp_from_json(j[0]), fp_from_json(j[1]), fp_from_json(j[2]),
          fp_from_json(j[3])};
  if (!f.invertible()) throw std::invalid_argument("frame is singular");
  return f;
}

LocalScheme scheme_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Point p = point_from_json(j);
  Frame f = j.contains("frame") ? frame_from_json(j.at("frame"))
                                : Frame::identity();
  int m = j.value("m", 0);
  if (kind == "point") return make_scheme(SchemeKind::simple_point(), p);
  if (kind == "fat") {
    if (m == 0) throw std::invalid_argument("fat points need m");
    return make_scheme(SchemeKind::fat_point(m), p);
  }
  if (kind == "jet")
    return make_scheme(SchemeKind::jet(m == 0 ? 2 : m, f), p);
  if (kind == "curvilinear") {
    Fp c2 = j.contains("c2") ? fp_from_json(j.at("c2")) : Fp{};
    Fp c3 = j.contains("c3") ? fp_from_json(j.at("c3")) : Fp{};
    return make_scheme(SchemeKind::curvilinear(m == 0 ? 3 : m, c2, c3, f), p);
  }
  if (kind == "square") return make_scheme(SchemeKind::two_square(f), p);
  if (kind == "tile") return make_scheme(SchemeKind::tile(f), p);
  throw std::invalid_argument("unknown scheme kind: " + kind);
}

void add_count(ConfigTemplate& t, KindTag tag, int m, int count) {
  if (count < 0) throw std::invalid_argument("negative scheme count");
  if (count > 0) t.push_back({{tag, m}, count});
}

}  // namespace

HilbertRequest parse_hilbert_config(const json& j) {
  HilbertRequest req;
  const std::string surface = j.at("surface").get<std::string>();
  if (surface == "p2") {
    req.bundle = Bundle::p2(j.at("d").get<int>());
  } else if (surface == "p1p1") {
    req.bundle = Bundle::p1p1(j.at("d").get<int>(), j.at("e").get<int>());
  } else if (surface == "hirz") {
    req.bundle = Bundle::hirzebruch(j.at("e").get<int>(), j.at("a").get<int>(),
                                    j.at("b").get<int>());
  } else {
    throw std::invalid_argument("unknown surface: " + surface);
  }
  req.seed = j.value("seed", std::uint64_t{0});
  req.trials = j.value("trials", 3u);
  if (j.contains("counts")) {
    const json& c = j.at("counts");
    add_count(req.random_part, KindTag::SimplePoint, 1, c.value("points", 0));
    add_count(req.random_part, KindTag::FatPoint, 2, c.value("double", 0));
    add_count(req.random_part, KindTag::Jet, 2, c.value("jets2", 0));
    add_count(req.random_part, KindTag::Jet, 3, c.value("jets3", 0));
    add_count(req.random_part, KindTag::Curvilinear, 3, c.value("curv3", 0));
    add_count(req.random_part, KindTag::Curvilinear, 4, c.value("curv4", 0));
    add_count(req.random_part, KindTag::TwoSquare, 2, c.value("squares", 0));
    add_count(req.random_part, KindTag::Tile, 3, c.value("tiles", 0));
    if (c.contains("fat"))
      for (const auto& pair : c.at("fat"))
        add_count(req.random_part, KindTag::FatPoint, pair.at(0).get<int>(),
                  pair.at(1).get<int>());
  }
  if (j.contains("schemes"))
    for (const auto& s : j.at("schemes"))
      req.explicit_part.schemes.push_back(scheme_from_json(s));
  if (j.contains("base"))
    for (const auto& p : j.at("base"))
      req.base_points.push_back(point_from_json(p));
  return req;
}

}  // namespace apolar
