#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/diffop.hpp"
#include "apolar/rng.hpp"

namespace apolar {

enum class SurfaceTag { P2, P1xP1, Hirzebruch };

std::string to_string(SurfaceTag s);

// A line bundle on one of the three surfaces, identified with its space of
// sections restricted to a fixed affine chart:
//   P2(d):            polynomials of total degree <= d
//   P1xP1(d, e):      bidegree at most (d, e) in the two chart coordinates
//   Hirzebruch(e,a,b) on F_e, class a h + b f with b >= a e: sections
//                     sum_i y^i g_i(x) with deg g_i <= b - i e, where x is
//                     the base coordinate and y the fiber-direction one.
class Bundle {
 public:
  static Bundle p2(int d);
  static Bundle p1p1(int d, int e);
  static Bundle hirzebruch(int e, int a, int b);

  SurfaceTag surface() const { return surface_; }
  int d() const { return d_; }
  int e() const { return e_; }
  int a() const { return a_; }
  int b() const { return b_; }

  std::string label() const;
  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  SurfaceTag surface_ = SurfaceTag::P2;
  int d_ = 0, e_ = 0, a_ = 0, b_ = 0;
};

using Exponent = std::pair<int, int>;

std::vector<Exponent> monomial_basis(const Bundle& v);
std::size_t section_count(const Bundle& v);

// A linear system of curves: the full space of sections, or a subsystem
// given by explicit coefficient vectors on the monomial basis (the kernel of
// the conditions imposed by a base scheme, see postulation.hpp).
struct LinearSystem {
  Bundle bundle;
  std::vector<Exponent> monomials;
  std::optional<std::vector<std::vector<Fp>>> columns;

  std::size_t dim() const {
    return columns ? columns->size() : monomials.size();
  }
  std::string label() const;
};

LinearSystem full_system(const Bundle& v);

Point sample_point(Rng& rng);
Point sample_point_distinct(Rng& rng, const std::vector<Point>& used);
Point random_point_on(const LinearForm& g, Rng& rng);

// Which chart lines a surface allows as residuation divisors: any affine
// line on P2, the two rulings on P1xP1, fibers on a Hirzebruch surface.
bool valid_divisor(const Bundle& v, const LinearForm& g);

// Bundle twisted down by such a divisor, and the dimension of the restricted
// system on the divisor itself (a P1).
Bundle twist_down(const Bundle& v, const LinearForm& g);
std::size_t restricted_dim(const Bundle& v, const LinearForm& g);

}  // namespace apolar
