#include "apolar/schemes.hpp"

#include <stdexcept>

namespace apolar {

std::string to_string(KindTag tag) {
  switch (tag) {
    case KindTag::SimplePoint: return "point";
    case KindTag::FatPoint:    return "fat";
    case KindTag::Jet:         return "jet";
    case KindTag::Curvilinear: return "curvilinear";
    case KindTag::TwoSquare:   return "square";
    case KindTag::Tile:        return "tile";
    case KindTag::Derived:     return "derived";
  }
  return "?";
}

Frame random_frame(Rng& rng) {
  for (;;) {
    Frame f{rng.fp(), rng.fp(), rng.fp(), rng.fp()};
    if (f.invertible()) return f;
  }
}

SchemeKind SchemeKind::fat_point(int m) {
  if (m < 2 || m > 6) throw std::invalid_argument("fat point needs 2 <= m <= 6");
  return {KindTag::FatPoint, m, Frame::identity(), Fp{}, Fp{}};
}

SchemeKind SchemeKind::jet(int m, Frame f) {
  if (m < 2 || m > 4) throw std::invalid_argument("jet needs 2 <= m <= 4");
  return {KindTag::Jet, m, f, Fp{}, Fp{}};
}

SchemeKind SchemeKind::curvilinear(int m, Fp c2, Fp c3, Frame f) {
  if (m < 3 || m > 4)
    throw std::invalid_argument("curvilinear needs 3 <= m <= 4");
  return {KindTag::Curvilinear, m, f, c2, c3};
}

SchemeKind SchemeKind::two_square(Frame f) {
  return {KindTag::TwoSquare, 2, f, Fp{}, Fp{}};
}

SchemeKind SchemeKind::tile(Frame f) {
  return {KindTag::Tile, 3, f, Fp{}, Fp{}};
}

std::size_t expected_length(const SchemeKind& kind) {
  switch (kind.tag) {
    case KindTag::SimplePoint: return 1;
    case KindTag::FatPoint:    return std::size_t(kind.m) * (kind.m + 1) / 2;
    case KindTag::Jet:
    case KindTag::Curvilinear: return std::size_t(kind.m);
    case KindTag::TwoSquare:
    case KindTag::Tile:        return 4;
    case KindTag::Derived:     break;
  }
  throw std::invalid_argument("derived schemes have no constructor length");
}

bool LocalScheme::closed_under_contraction() const {
  SpanMatrix sm = span_matrix(dual_);
  for (const DiffOp& op : dual_)
    for (int var = 0; var < 2; ++var) {
      DiffOp d = op.dsym(var);
      if (!d.is_zero() && !sm.contains(d)) return false;
    }
  return true;
}

namespace {

// Directional derivative operators in chart symbols.
DiffOp dir_op(Fp dx, Fp dy) {
  DiffOp op;
  op.add_term(1, 0, dx);
  op.add_term(0, 1, dy);
  return op;
}

DiffOp op_pow(const DiffOp& op, int k) {
  DiffOp out = DiffOp::identity();
  for (int i = 0; i < k; ++i) out = out.mul(op);
  return out;
}

}  // namespace

LocalScheme make_scheme(const SchemeKind& kind, Point support) {
  if (!kind.frame.invertible())
    throw std::invalid_argument("frame is not invertible");
  DiffOp du = dir_op(kind.frame.ux, kind.frame.uy);
  DiffOp dv = dir_op(kind.frame.vx, kind.frame.vy);

  std::vector<DiffOp> ops;
  switch (kind.tag) {
    case KindTag::SimplePoint:
      ops.push_back(DiffOp::identity());
      break;
    case KindTag::FatPoint:
      if (kind.m < 2 || kind.m > 6)
        throw std::invalid_argument("fat point needs 2 <= m <= 6");
      for (int t = 0; t < kind.m; ++t)
        for (int i = 0; i <= t; ++i)
          ops.push_back(DiffOp::monomial(t - i, i, fp(1)));
      break;
    case KindTag::Jet:
    case KindTag::Curvilinear: {
      bool jet = kind.tag == KindTag::Jet;
      int lo = jet ? 2 : 3, hi = 4;
      if (kind.m < lo || kind.m > hi)
        throw std::invalid_argument("length parameter out of range");
      Fp c2 = jet ? Fp{} : kind.c2;
      Fp c3 = jet ? Fp{} : kind.c3;
      // Derivatives along the germ t -> support + t e_u + (c2 t^2 + c3 t^3) e_v.
      ops.push_back(DiffOp::identity());
      ops.push_back(du);
      if (kind.m >= 3) ops.push_back(op_pow(du, 2) + dv.scaled(fp(2) * c2));
      if (kind.m >= 4)
        ops.push_back(op_pow(du, 3) + du.mul(dv).scaled(fp(6) * c2) +
                      dv.scaled(fp(6) * c3));
      break;
    }
    case KindTag::TwoSquare:
      ops = {DiffOp::identity(), du, dv, du.mul(dv)};
      break;
    case KindTag::Tile:
      ops = {DiffOp::identity(), du, dv, op_pow(du, 2)};
      break;
    case KindTag::Derived:
      throw std::invalid_argument("cannot construct a derived scheme");
  }

  std::vector<DiffOp> dual = canonical_span(ops);
  if (dual.size() != expected_length(kind))
    throw std::logic_error("dual span has unexpected dimension");
  return {support, kind, std::move(dual)};
}

LocalScheme random_scheme_at(const KindRequest& req, Point support, Rng& rng) {
  switch (req.tag) {
    case KindTag::SimplePoint:
      return make_scheme(SchemeKind::simple_point(), support);
    case KindTag::FatPoint:
      return make_scheme(SchemeKind::fat_point(req.m), support);
    case KindTag::Jet:
      return make_scheme(SchemeKind::jet(req.m, random_frame(rng)), support);
    case KindTag::Curvilinear:
      return make_scheme(
          SchemeKind::curvilinear(req.m, rng.fp(), rng.fp(), random_frame(rng)),
          support);
    case KindTag::TwoSquare:
      return make_scheme(SchemeKind::two_square(random_frame(rng)), support);
    case KindTag::Tile:
      return make_scheme(SchemeKind::tile(random_frame(rng)), support);
    case KindTag::Derived:
      break;
  }
  throw std::invalid_argument("cannot draw a derived scheme");
}

LocalScheme random_scheme(const KindRequest& req, Rng& rng) {
  Point p{rng.fp(), rng.fp()};
  return random_scheme_at(req, p, rng);
}

Residuation residuate(const LocalScheme& z, const LinearForm& g) {
  if (g.is_zero()) throw std::invalid_argument("zero divisor equation");
  Fp gamma = g.eval(z.support());
  if (!gamma.is_zero()) return {0, z};  // divisor misses the support

  std::vector<DiffOp> image;
  for (const DiffOp& op : z.dual())
    image.push_back(op.dsym(0).scaled(g.cx) + op.dsym(1).scaled(g.cy));
  std::vector<DiffOp> residual = canonical_span(image);

  Residuation out;
  out.trace_length = z.length() - residual.size();
  if (!residual.empty()) {
    SchemeKind kind;
    kind.tag = residual.size() == 1 && residual.front() == DiffOp::identity()
                   ? KindTag::SimplePoint
                   : KindTag::Derived;
    kind.m = static_cast<int>(residual.size());
    out.residual = LocalScheme(z.support(), kind, std::move(residual));
  }
  return out;
}

}  // namespace apolar
