#include <map>
#include <string>

#include "apolar/suites.hpp"

namespace apolar {

namespace {

// Coefficients of q*q in the monomial basis of the target system, or
// nothing if a product monomial falls outside that basis.
std::optional<std::vector<Fp>> square_section(
    const std::vector<Exponent>& small, const std::vector<Fp>& q,
    const std::vector<Exponent>& target) {
  std::map<Exponent, Fp> acc;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j) {
      Exponent e{small[i].first + small[j].first,
                 small[i].second + small[j].second};
      acc[e] += q[i] * q[j];
    }
  std::map<Exponent, std::size_t> pos;
  for (std::size_t k = 0; k < target.size(); ++k) pos[target[k]] = k;
  std::vector<Fp> out(target.size(), Fp{});
  bool nonzero = false;
  for (const auto& [e, c] : acc) {
    if (c == Fp{}) continue;
    auto it = pos.find(e);
    if (it == pos.end()) return std::nullopt;
    out[it->second] = c;
    nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return out;
}

// The square of a section of `small` through the supports is a defect
// witness: it vanishes doubly at every support.
WitnessProvider double_curve_witness(Bundle small) {
  return [small](const LinearSystem& v,
                 const Configuration& c) -> std::optional<std::vector<Fp>> {
    if (v.columns) return std::nullopt;
    Configuration pts;
    for (const Point& p : c.supports())
      pts.schemes.push_back(make_scheme(SchemeKind::simple_point(), p));
    LinearSystem sys = full_system(small);
    auto kernel = kernel_basis(conditions_matrix(sys, pts));
    if (kernel.empty()) return std::nullopt;
    return square_section(sys.monomials, kernel.front(), v.monomials);
  };
}

ExceptionCase family_case(int u, bool transposed) {
  int d = transposed ? 2 * u : 2;
  int e = transposed ? 2 : 2 * u;
  return {"P1xP1(" + std::to_string(d) + ";" + std::to_string(e) + "):r" +
              std::to_string(2 * u + 1),
          Bundle::p1p1(d, e), 2 * u + 1, 1,
          double_curve_witness(transposed ? Bundle::p1p1(u, 1)
                                          : Bundle::p1p1(1, u))};
}

}  // namespace

std::vector<ExceptionCase> exception_catalog(int u_max) {
  std::vector<ExceptionCase> out;
  out.push_back({"P2(2):r2", Bundle::p2(2), 2, 1,
                 double_curve_witness(Bundle::p2(1))});
  out.push_back({"P2(4):r5", Bundle::p2(4), 5, 1,
                 double_curve_witness(Bundle::p2(2))});
  for (int u = 1; u <= u_max; ++u) {
    out.push_back(family_case(u, false));
    if (u > 1) out.push_back(family_case(u, true));
  }
  return out;
}

std::optional<ExceptionCase> catalog_lookup_counts(const Bundle& v,
                                                   int doubles_only) {
  if (doubles_only <= 0) return std::nullopt;
  switch (v.surface()) {
    case SurfaceTag::P2:
      if (v.d() == 2 && doubles_only == 2)
        return ExceptionCase{"P2(2):r2", v, 2, 1,
                             double_curve_witness(Bundle::p2(1))};
      if (v.d() == 4 && doubles_only == 5)
        return ExceptionCase{"P2(4):r5", v, 5, 1,
                             double_curve_witness(Bundle::p2(2))};
      return std::nullopt;
    case SurfaceTag::P1xP1:
      if (v.d() == 2 && v.e() >= 2 && v.e() % 2 == 0 &&
          doubles_only == v.e() + 1)
        return family_case(v.e() / 2, false);
      if (v.e() == 2 && v.d() > 2 && v.d() % 2 == 0 &&
          doubles_only == v.d() + 1)
        return family_case(v.d() / 2, true);
      return std::nullopt;
    case SurfaceTag::Hirzebruch:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ExceptionCase> catalog_lookup(const Bundle& v,
                                            const Configuration& c) {
  if (c.schemes.empty()) return std::nullopt;
  for (const auto& z : c.schemes)
    if (z.kind().tag != KindTag::FatPoint || z.kind().m != 2)
      return std::nullopt;
  return catalog_lookup_counts(v, static_cast<int>(c.schemes.size()));
}

WitnessProvider catalog_witnesses() {
  return [](const LinearSystem& v,
            const Configuration& c) -> std::optional<std::vector<Fp>> {
    auto hit = catalog_lookup(v.bundle, c);
    if (!hit) return std::nullopt;
    return hit->make_witness(v, c);
  };
}

}  // namespace apolar
