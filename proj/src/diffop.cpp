#include "apolar/diffop.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace apolar {

LinearForm line_through(Point p, Fp dx, Fp dy) {
  // Normal (-dy, dx) dotted with (X - p).
  LinearForm g{-dy, dx, dy * p.x - dx * p.y};
  if (g.is_constant()) throw std::invalid_argument("degenerate line direction");
  return g;
}

DiffOp DiffOp::monomial(int i, int j, Fp c) {
  DiffOp op;
  op.add_term(i, j, c);
  return op;
}

void DiffOp::add_term(int i, int j, Fp c) {
  if (i < 0 || j < 0 || i + j > kMaxOperatorOrder)
    throw std::invalid_argument("operator order out of range");
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int DiffOp::max_order() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.first + e.second);
  return m;
}

DiffOp DiffOp::scaled(Fp c) const {
  DiffOp out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
  return out;
}

DiffOp DiffOp::dsym(int var) const {
  DiffOp out;
  for (const auto& [e, c] : terms_) {
    int k = var == 0 ? e.first : e.second;
    if (k == 0) continue;
    if (var == 0)
      out.add_term(e.first - 1, e.second, c * fp(k));
    else
      out.add_term(e.first, e.second - 1, c * fp(k));
  }
  return out;
}

DiffOp DiffOp::mul(const DiffOp& o) const {
  DiffOp out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

Fp DiffOp::apply(int a, int b, std::span<const Fp> powx,
                 std::span<const Fp> powy) const {
  Fp s;
  for (const auto& [e, c] : terms_) {
    if (e.first > a || e.second > b) continue;
    s += c * falling(a, e.first) * falling(b, e.second) *
         powx[a - e.first] * powy[b - e.second];
  }
  return s;
}

Fp DiffOp::apply_at(int a, int b, Point p) const {
  std::vector<Fp> powx(a + 1), powy(b + 1);
  powx[0] = fp(1);
  for (int k = 1; k <= a; ++k) powx[k] = powx[k - 1] * p.x;
  powy[0] = fp(1);
  for (int k = 1; k <= b; ++k) powy[k] = powy[k - 1] * p.y;
  return apply(a, b, powx, powy);
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : op.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.value();
    if (e.first) os << "*dx^" << e.first;
    if (e.second) os << "*dy^" << e.second;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOp& op) {
  return os << to_string(op);
}

int slot_of(int i, int j) {
  int t = i + j;
  assert(t <= kMaxOperatorOrder);
  return t * (t + 1) / 2 + j;
}

std::pair<int, int> slot_exp(int idx) {
  int t = 0;
  while ((t + 1) * (t + 2) / 2 <= idx) ++t;
  int j = idx - t * (t + 1) / 2;
  return {t - j, j};
}

std::vector<Fp> slots(const DiffOp& op) {
  std::vector<Fp> v(kOperatorSlots);
  for (const auto& [e, c] : op.terms()) v[slot_of(e.first, e.second)] = c;
  return v;
}

DiffOp op_from_slots(std::span<const Fp> v) {
  DiffOp op;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s].is_zero()) continue;
    auto [i, j] = slot_exp(static_cast<int>(s));
    op.add_term(i, j, v[s]);
  }
  return op;
}

SpanMatrix span_matrix(const std::vector<DiffOp>& ops) {
  DenseMatrix m(0, kOperatorSlots);
  for (const DiffOp& op : ops)
    if (!op.is_zero()) m.append_row(slots(op));
  SpanMatrix sm;
  if (m.rows() == 0) m = DenseMatrix(0, kOperatorSlots);
  sm.pivots = rref(m);
  sm.m = std::move(m);
  return sm;
}

bool SpanMatrix::contains(const DiffOp& op) const {
  return in_row_space(m, pivots, slots(op));
}

std::vector<DiffOp> canonical_span(const std::vector<DiffOp>& ops) {
  SpanMatrix sm = span_matrix(ops);
  std::vector<DiffOp> out;
  for (std::size_t i = 0; i < sm.pivots.size(); ++i)
    out.push_back(op_from_slots(sm.m.row(i)));
  return out;
}

bool spans_equal(const std::vector<DiffOp>& a, const std::vector<DiffOp>& b) {
  return canonical_span(a) == canonical_span(b);
}

}  // namespace apolar
