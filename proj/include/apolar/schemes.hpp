#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/diffop.hpp"
#include "apolar/rng.hpp"

namespace apolar {

// A connected zero-dimensional scheme is stored as the span of differential
// operators at its support that annihilate its ideal (its inverse system).
// The span determines the scheme: length = dimension of the span, and the
// span is closed under contraction by the chart variables, which acts as
// formal differentiation on the operator symbols.

enum class KindTag {
  SimplePoint,
  FatPoint,     // m-fold point, dual span = all operators of order < m
  Jet,          // (m-1)-jet along a direction: 1, du, ..., du^{m-1}
  Curvilinear,  // length m on a smooth curve germ t -> (t, c2 t^2 + c3 t^3)
  TwoSquare,    // complete intersection of two double lines
  Tile,         // the planar scheme cut by (v^2, uv, u^3); long side along u
  Derived,      // produced by residuation, no constructor shape
};

std::string to_string(KindTag tag);

// Local frame: two independent directions e_u = (ux, uy), e_v = (vx, vy)
// attached to the support.  du and dv are the directional derivatives along
// e_u and e_v.
struct Frame {
  Fp ux, uy, vx, vy;
  static Frame identity() { return {fp(1), fp(0), fp(0), fp(1)}; }
  Fp det() const { return ux * vy - uy * vx; }
  bool invertible() const { return !det().is_zero(); }
  friend bool operator==(const Frame&, const Frame&) = default;
};

Frame random_frame(Rng& rng);

struct SchemeKind {
  KindTag tag = KindTag::SimplePoint;
  int m = 1;  // length parameter for FatPoint (2..6), Jet (2..4), Curvilinear (3..4)
  Frame frame = Frame::identity();
  Fp c2, c3;  // curvature coefficients of the Curvilinear germ

  static SchemeKind simple_point() { return {}; }
  static SchemeKind fat_point(int m);
  static SchemeKind jet(int m, Frame f = Frame::identity());
  static SchemeKind curvilinear(int m, Fp c2, Fp c3,
                                Frame f = Frame::identity());
  static SchemeKind two_square(Frame f = Frame::identity());
  static SchemeKind tile(Frame f = Frame::identity());
};

std::size_t expected_length(const SchemeKind& kind);

class LocalScheme {
 public:
  LocalScheme(Point support, SchemeKind kind, std::vector<DiffOp> dual)
      : support_(support), kind_(kind), dual_(std::move(dual)) {}

  const Point& support() const { return support_; }
  const SchemeKind& kind() const { return kind_; }
  const std::vector<DiffOp>& dual() const { return dual_; }
  std::size_t length() const { return dual_.size(); }

  bool closed_under_contraction() const;

 private:
  Point support_;
  SchemeKind kind_;
  std::vector<DiffOp> dual_;
};

LocalScheme make_scheme(const SchemeKind& kind, Point support);

// What a random draw should produce: a kind tag plus its length parameter.
// Frames, curvatures and (unless placed explicitly) supports are drawn
// uniformly; frames are resampled until invertible.
struct KindRequest {
  KindTag tag = KindTag::SimplePoint;
  int m = 1;
};

LocalScheme random_scheme(const KindRequest& req, Rng& rng);
LocalScheme random_scheme_at(const KindRequest& req, Point support, Rng& rng);

// Ideal quotient by the divisor with affine local equation g: the residual
// dual span is the image of the span under contraction by g.  The length
// identity trace_length + length(residual) = length(z) holds by construction;
// when g misses the support the scheme is untouched (trace 0).
struct Residuation {
  std::size_t trace_length = 0;
  std::optional<LocalScheme> residual;  // nullopt: empty residual scheme
};

Residuation residuate(const LocalScheme& z, const LinearForm& g);

}  // namespace apolar
