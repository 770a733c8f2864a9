#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolar/fp.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

struct Point {
  Fp x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Affine form cx*x + cy*y + c0 on a chart; its zero set is a chart line.
struct LinearForm {
  Fp cx, cy, c0;
  Fp eval(Point p) const { return cx * p.x + cy * p.y + c0; }
  bool is_zero() const { return cx.is_zero() && cy.is_zero() && c0.is_zero(); }
  bool is_constant() const { return cx.is_zero() && cy.is_zero(); }
};

// Line through p with direction (dx, dy).
LinearForm line_through(Point p, Fp dx, Fp dy);

// A constant-coefficient differential operator sum c_ij dx^i dy^j, acting on
// polynomials at a chosen point.  Our schemes have length at most 21, so
// total order never exceeds 5.
inline constexpr int kMaxOperatorOrder = 5;
inline constexpr int kOperatorSlots =
    (kMaxOperatorOrder + 1) * (kMaxOperatorOrder + 2) / 2;

class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp identity() { return monomial(0, 0, fp(1)); }
  static DiffOp monomial(int i, int j, Fp c);

  void add_term(int i, int j, Fp c);

  bool is_zero() const { return terms_.empty(); }
  int max_order() const;

  DiffOp scaled(Fp c) const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);

  // Formal derivative with respect to the dx (var = 0) or dy (var = 1)
  // symbol.  This is the contraction action of the corresponding chart
  // variable, taken in local coordinates at the support.
  DiffOp dsym(int var) const;

  // Product as polynomials in the symbols; used to expand operators written
  // in a local frame into chart coordinates.
  DiffOp mul(const DiffOp& o) const;

  // Value of the operator on the monomial x^a y^b at the point whose power
  // tables are given (powx[k] = x^k at the support, likewise powy).
  Fp apply(int a, int b, std::span<const Fp> powx,
           std::span<const Fp> powy) const;
  Fp apply_at(int a, int b, Point p) const;

  const std::map<std::pair<int, int>, Fp>& terms() const { return terms_; }

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  std::map<std::pair<int, int>, Fp> terms_;
};

std::string to_string(const DiffOp& op);
std::ostream& operator<<(std::ostream& os, const DiffOp& op);

// Coordinates of an operator on the fixed slot basis (total order, then
// dy-degree ascending), and back.
int slot_of(int i, int j);
std::pair<int, int> slot_exp(int idx);
std::vector<Fp> slots(const DiffOp& op);
DiffOp op_from_slots(std::span<const Fp> v);

// Canonical basis (RREF over the slot coordinates) of the span of a list of
// operators.  Zero operators are dropped; output order is by pivot slot.
std::vector<DiffOp> canonical_span(const std::vector<DiffOp>& ops);

// RREF matrix of a span, for repeated membership tests.
struct SpanMatrix {
  DenseMatrix m;
  std::vector<std::size_t> pivots;
  bool contains(const DiffOp& op) const;
};
SpanMatrix span_matrix(const std::vector<DiffOp>& ops);

bool spans_equal(const std::vector<DiffOp>& a, const std::vector<DiffOp>& b);

}  // namespace apolar
