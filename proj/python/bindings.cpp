#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apolar/io.hpp"
#include "apolar/version.hpp"

namespace py = pybind11;

namespace {

using namespace apolar;

Bundle bundle_of(const std::string& surface, int d, int e, int a, int b) {
  if (surface == "p2") return Bundle::p2(d);
  if (surface == "p1p1") return Bundle::p1p1(d, e);
  if (surface == "hirz") return Bundle::hirzebruch(e, a, b);
  throw std::invalid_argument("unknown surface: " + surface);
}

ConfigTemplate template_of(const py::dict& counts) {
  ConfigTemplate t;
  auto add = [&](KindTag tag, int m, int n) {
    if (n < 0) throw std::invalid_argument("negative scheme count");
    if (n > 0) t.push_back({{tag, m}, n});
  };
  for (auto item : counts) {
    const std::string key = py::cast<std::string>(item.first);
    if (key == "fat") {
      for (auto pair : py::cast<py::list>(item.second)) {
        auto mc = py::cast<std::pair<int, int>>(pair);
        add(KindTag::FatPoint, mc.first, mc.second);
      }
      continue;
    }
    int n = py::cast<int>(item.second);
    if (key == "points")       add(KindTag::SimplePoint, 1, n);
    else if (key == "double")  add(KindTag::FatPoint, 2, n);
    else if (key == "jets2")   add(KindTag::Jet, 2, n);
    else if (key == "jets3")   add(KindTag::Jet, 3, n);
    else if (key == "curv3")   add(KindTag::Curvilinear, 3, n);
    else if (key == "curv4")   add(KindTag::Curvilinear, 4, n);
    else if (key == "squares") add(KindTag::TwoSquare, 2, n);
    else if (key == "tiles")   add(KindTag::Tile, 3, n);
    else throw std::invalid_argument("unknown scheme count: " + key);
  }
  return t;
}

py::dict report_dict(const PostulationReport& r) {
  py::dict d;
  d["dim"] = r.dim;
  d["length"] = r.total_length;
  d["rank"] = r.rank;
  d["h0"] = r.h0;
  d["h1"] = r.h1;
  d["expected"] = r.expected;
  d["verdict"] = to_string(r.verdict);
  d["witnessed"] = r.witnessed;
  d["trials_used"] = r.trials_used;
  d["best_trial"] = r.best_trial;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact postulation of unions of small zero-dimensional schemes";
  m.attr("__version__") = kVersion;
  m.attr("PRIME") = py::int_(Fp::prime);

  m.def(
      "section_count",
      [](const std::string& surface, int d, int e, int a, int b) {
        return section_count(bundle_of(surface, d, e, a, b));
      },
      py::arg("surface"), py::arg("d") = 0, py::arg("e") = 0,
      py::arg("a") = 0, py::arg("b") = 0,
      "Dimension of the complete linear system of the bundle.");

  m.def(
      "monomials",
      [](const std::string& surface, int d, int e, int a, int b) {
        return monomial_basis(bundle_of(surface, d, e, a, b));
      },
      py::arg("surface"), py::arg("d") = 0, py::arg("e") = 0,
      py::arg("a") = 0, py::arg("b") = 0,
      "Monomial basis of the chart restriction, as (i, j) exponents.");

  m.def(
      "postulate",
      [](const std::string& surface, int d, int e, int a, int b,
         const py::dict& counts, unsigned trials, std::uint64_t seed) {
        Bundle v = bundle_of(surface, d, e, a, b);
        PostulationReport rep = postulate(full_system(v), template_of(counts),
                                          trials, seed, catalog_witnesses());
        return report_dict(rep);
      },
      py::arg("surface"), py::arg("d") = 0, py::arg("e") = 0,
      py::arg("a") = 0, py::arg("b") = 0,
      py::arg("counts") = py::dict(), py::arg("trials") = 3u,
      py::arg("seed") = std::uint64_t{0},
      "h0/h1 report for a random union of the requested schemes.");

  m.def(
      "secant_dim",
      [](const std::string& surface, int d, int e, int a, int b, int r,
         unsigned trials, std::uint64_t seed) {
        return secant_dim(bundle_of(surface, d, e, a, b), r, trials, seed);
      },
      py::arg("surface"), py::arg("d") = 0, py::arg("e") = 0,
      py::arg("a") = 0, py::arg("b") = 0, py::arg("r") = 1,
      py::arg("trials") = 3u, py::arg("seed") = std::uint64_t{0},
      "Span dimension of r general double points under the embedding.");

  m.def(
      "numlem",
      [](long d) {
        NumLem n = numlem_decompose(d);
        return std::make_pair(n.a, n.b);
      },
      py::arg("d"), "The unique (a, b) with d + 1 = 2a + 3b, a in {0,1,2}.");

  m.def(
      "verify_json",
      [](const std::string& id, int dmax, int emax, int amax, int bmargin,
         int count, unsigned trials, std::uint64_t seed) {
        SuiteRun run =
            run_suite(id, dmax, emax, amax, bmargin, count, trials, seed);
        return suite_table(run).json.dump();
      },
      py::arg("id"), py::arg("dmax") = 0, py::arg("emax") = 0,
      py::arg("amax") = 0, py::arg("bmargin") = 0, py::arg("count") = 0,
      py::arg("trials") = 3u, py::arg("seed") = std::uint64_t{0},
      "Run a statement suite; returns the JSON report as a string.");

  m.def(
      "regularity_json",
      [](const std::string& kind_name, int t, long d, long lo, long hi,
         std::uint64_t seed) {
        auto kind = regularity_kind_from(kind_name);
        if (!kind)
          throw std::invalid_argument("unknown construction: " + kind_name);
        if (d <= 0) d = 3L * t - 2;
        RegularityConfig rc = build_regularity_config(*kind, t, d, seed);
        if (lo <= 0) lo = 1;
        if (hi <= 0)
          hi = *kind == RegularityKind::New3 ? 3L * t : 3L * t + 1;
        return scan_table(regularity_scan(rc, lo, hi), seed).json.dump();
      },
      py::arg("kind"), py::arg("t"), py::arg("d") = 0, py::arg("lo") = 0,
      py::arg("hi") = 0, py::arg("seed") = std::uint64_t{0},
      "Scan a bad-postulation construction; returns JSON as a string.");

  m.def(
      "exceptions",
      [](int u_max) {
        py::list out;
        for (const auto& c : exception_catalog(u_max)) {
          py::dict d;
          d["id"] = c.id;
          d["system"] = c.bundle.label();
          d["doubles"] = c.doubles;
          d["defect"] = c.defect;
          out.append(d);
        }
        return out;
      },
      py::arg("u_max") = 4,
      "The cataloged defective all-double configurations.");
}
