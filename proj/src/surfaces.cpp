#include "apolar/surfaces.hpp"

#include <stdexcept>

namespace apolar {

std::string to_string(SurfaceTag s) {
  switch (s) {
    case SurfaceTag::P2:         return "P2";
    case SurfaceTag::P1xP1:      return "P1xP1";
    case SurfaceTag::Hirzebruch: return "Hirzebruch";
  }
  return "?";
}

Bundle Bundle::p2(int d) {
  if (d < 0) throw std::invalid_argument("P2 degree must be nonnegative");
  Bundle v;
  v.surface_ = SurfaceTag::P2;
  v.d_ = d;
  return v;
}

Bundle Bundle::p1p1(int d, int e) {
  if (d < 0 || e < 0)
    throw std::invalid_argument("P1xP1 bidegree must be nonnegative");
  Bundle v;
  v.surface_ = SurfaceTag::P1xP1;
  v.d_ = d;
  v.e_ = e;
  return v;
}

Bundle Bundle::hirzebruch(int e, int a, int b) {
  if (e < 0 || a < 0 || b < 0)
    throw std::invalid_argument("Hirzebruch parameters must be nonnegative");
  if (b < a * e)
    throw std::invalid_argument("Hirzebruch class needs b >= a*e");
  Bundle v;
  v.surface_ = SurfaceTag::Hirzebruch;
  v.e_ = e;
  v.a_ = a;
  v.b_ = b;
  return v;
}

std::string Bundle::label() const {
  switch (surface_) {
    case SurfaceTag::P2:
      return "P2(" + std::to_string(d_) + ")";
    case SurfaceTag::P1xP1:
      return "P1xP1(" + std::to_string(d_) + "," + std::to_string(e_) + ")";
    case SurfaceTag::Hirzebruch:
      return "F" + std::to_string(e_) + "(" + std::to_string(a_) + "h+" +
             std::to_string(b_) + "f)";
  }
  return "?";
}

std::vector<Exponent> monomial_basis(const Bundle& v) {
  std::vector<Exponent> out;
  switch (v.surface()) {
    case SurfaceTag::P2:
      for (int t = 0; t <= v.d(); ++t)
        for (int i = t; i >= 0; --i) out.emplace_back(i, t - i);
      break;
    case SurfaceTag::P1xP1:
      for (int i = 0; i <= v.d(); ++i)
        for (int j = 0; j <= v.e(); ++j) out.emplace_back(i, j);
      break;
    case SurfaceTag::Hirzebruch:
      for (int i = 0; i <= v.a(); ++i)
        for (int j = 0; j <= v.b() - i * v.e(); ++j) out.emplace_back(j, i);
      break;
  }
  return out;
}

std::size_t section_count(const Bundle& v) { return monomial_basis(v).size(); }

std::string LinearSystem::label() const {
  std::string s = bundle.label();
  if (columns) s += "|sub(" + std::to_string(columns->size()) + ")";
  return s;
}

LinearSystem full_system(const Bundle& v) {
  return {v, monomial_basis(v), std::nullopt};
}

Point sample_point(Rng& rng) { return {rng.fp(), rng.fp()}; }

Point sample_point_distinct(Rng& rng, const std::vector<Point>& used) {
  for (;;) {
    Point p = sample_point(rng);
    bool taken = false;
    for (const Point& q : used)
      if (p == q) { taken = true; break; }
    if (!taken) return p;
  }
}

Point random_point_on(const LinearForm& g, Rng& rng) {
  if (g.is_constant()) throw std::invalid_argument("not a line");
  Fp t = rng.fp();
  if (!g.cy.is_zero()) return {t, -(g.c0 + g.cx * t) * g.cy.inv()};
  return {-g.c0 * g.cx.inv(), t};
}

bool valid_divisor(const Bundle& v, const LinearForm& g) {
  if (g.is_zero() || g.is_constant()) return false;
  switch (v.surface()) {
    case SurfaceTag::P2:
      return true;
    case SurfaceTag::P1xP1:
      return g.cx.is_zero() || g.cy.is_zero();
    case SurfaceTag::Hirzebruch:
      return g.cy.is_zero();  // fibers x = const only
  }
  return false;
}

Bundle twist_down(const Bundle& v, const LinearForm& g) {
  if (!valid_divisor(v, g)) throw std::invalid_argument("invalid divisor");
  switch (v.surface()) {
    case SurfaceTag::P2:
      return Bundle::p2(v.d() - 1);
    case SurfaceTag::P1xP1:
      if (g.cy.is_zero()) return Bundle::p1p1(v.d() - 1, v.e());
      return Bundle::p1p1(v.d(), v.e() - 1);
    case SurfaceTag::Hirzebruch:
      return Bundle::hirzebruch(v.e(), v.a(), v.b() - 1);
  }
  throw std::logic_error("unreachable");
}

std::size_t restricted_dim(const Bundle& v, const LinearForm& g) {
  if (!valid_divisor(v, g)) throw std::invalid_argument("invalid divisor");
  switch (v.surface()) {
    case SurfaceTag::P2:
      return v.d() + 1;
    case SurfaceTag::P1xP1:
      return g.cy.is_zero() ? v.e() + 1 : v.d() + 1;
    case SurfaceTag::Hirzebruch:
      return v.a() + 1;
  }
  throw std::logic_error("unreachable");
}

}  // namespace apolar
