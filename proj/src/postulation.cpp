#include "apolar/postulation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace apolar {

std::size_t Configuration::total_length() const {
  std::size_t n = 0;
  for (const auto& z : schemes) n += z.length();
  return n;
}

std::vector<Point> Configuration::supports() const {
  std::vector<Point> out;
  out.reserve(schemes.size());
  for (const auto& z : schemes) out.push_back(z.support());
  return out;
}

Configuration merge(const Configuration& a, const Configuration& b) {
  Configuration out = a;
  out.schemes.insert(out.schemes.end(), b.schemes.begin(), b.schemes.end());
  return out;
}

std::size_t template_length(const ConfigTemplate& t) {
  std::size_t n = 0;
  for (const auto& e : t) {
    SchemeKind k;
    k.tag = e.kind.tag;
    k.m = e.kind.m;
    n += std::size_t(e.count) * expected_length(k);
  }
  return n;
}

Configuration draw_configuration(const ConfigTemplate& t, Rng& rng) {
  Configuration c;
  std::vector<Point> used;
  for (const auto& entry : t) {
    if (entry.count < 0) throw std::invalid_argument("negative scheme count");
    for (int i = 0; i < entry.count; ++i) {
      Point p = sample_point_distinct(rng, used);
      used.push_back(p);
      c.schemes.push_back(random_scheme_at(entry.kind, p, rng));
    }
  }
  return c;
}

namespace {

void check_supports(const Configuration& c) {
  const auto& zs = c.schemes;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (zs[i].support() == zs[j].support())
        throw std::invalid_argument("support collision in configuration");
}

}  // namespace

DenseMatrix conditions_matrix(const LinearSystem& v, const Configuration& c) {
  check_supports(c);
  int max_x = 0, max_y = 0;
  for (const auto& [a, b] : v.monomials) {
    max_x = std::max(max_x, a);
    max_y = std::max(max_y, b);
  }

  DenseMatrix m(0, v.dim());
  std::vector<Fp> powx(max_x + 1), powy(max_y + 1);
  std::vector<Fp> mono_row(v.monomials.size());
  for (const auto& z : c.schemes) {
    powx[0] = fp(1);
    for (int k = 1; k <= max_x; ++k) powx[k] = powx[k - 1] * z.support().x;
    powy[0] = fp(1);
    for (int k = 1; k <= max_y; ++k) powy[k] = powy[k - 1] * z.support().y;
    for (const DiffOp& op : z.dual()) {
      for (std::size_t j = 0; j < v.monomials.size(); ++j)
        mono_row[j] = op.apply(v.monomials[j].first, v.monomials[j].second,
                               powx, powy);
      if (!v.columns) {
        m.append_row(mono_row);
      } else {
        std::vector<Fp> row(v.columns->size());
        for (std::size_t k = 0; k < v.columns->size(); ++k) {
          Fp s;
          const auto& col = (*v.columns)[k];
          for (std::size_t j = 0; j < mono_row.size(); ++j)
            s += mono_row[j] * col[j];
          row[k] = s;
        }
        m.append_row(row);
      }
    }
  }
  if (m.rows() == 0) m = DenseMatrix(0, v.dim());
  return m;
}

LinearSystem subsystem(const LinearSystem& v, const Configuration& base) {
  auto ker = kernel_basis(conditions_matrix(v, base));
  std::vector<std::vector<Fp>> cols;
  cols.reserve(ker.size());
  if (!v.columns) {
    cols = std::move(ker);
  } else {
    for (const auto& k : ker) {
      std::vector<Fp> col(v.monomials.size());
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j].is_zero()) continue;
        const auto& old = (*v.columns)[j];
        for (std::size_t t = 0; t < col.size(); ++t) col[t] += k[j] * old[t];
      }
      cols.push_back(std::move(col));
    }
  }
  return {v.bundle, v.monomials, std::move(cols)};
}

std::size_t dim_minus(const LinearSystem& v, const Configuration& c) {
  return v.dim() - rank(conditions_matrix(v, c));
}

std::size_t expected_h0(const LinearSystem& v, std::size_t total_length) {
  std::size_t d = v.dim();
  return d > total_length ? d - total_length : 0;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:    return "Certified";
    case Verdict::Defective:    return "Defective";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool defect_witness(const LinearSystem& v, const Configuration& c,
                    std::span<const Fp> candidate) {
  if (candidate.size() != v.dim())
    throw std::invalid_argument("candidate has wrong dimension");
  bool nonzero = false;
  for (Fp x : candidate)
    if (!x.is_zero()) { nonzero = true; break; }
  if (!nonzero) return false;
  for (Fp x : apolar::apply(conditions_matrix(v, c), candidate))
    if (!x.is_zero()) return false;
  return true;
}

PostulationReport evaluate_configuration(const LinearSystem& v,
                                         const Configuration& c,
                                         const WitnessProvider& witness) {
  PostulationReport r;
  r.dim = v.dim();
  r.total_length = c.total_length();
  r.rank = rank(conditions_matrix(v, c));
  r.h0 = r.dim - r.rank;
  r.h1 = r.total_length - r.rank;
  r.expected = expected_h0(v, r.total_length);
  r.trials_used = 1;
  assert(r.h0 >= r.expected);
  if (r.h0 == r.expected) {
    r.verdict = Verdict::Certified;
  } else if (witness) {
    if (auto cand = witness(v, c); cand && defect_witness(v, c, *cand)) {
      r.verdict = Verdict::Defective;
      r.witnessed = true;
    }
  }
  return r;
}

PostulationReport postulate(const LinearSystem& v, const ConfigTemplate& t,
                            unsigned trials, std::uint64_t seed,
                            const WitnessProvider& witness) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  PostulationReport best;
  Configuration best_config;
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::for_cell(seed, {trial});
    Configuration c = draw_configuration(t, rng);
    PostulationReport r;
    r.dim = v.dim();
    r.total_length = c.total_length();
    r.rank = rank(conditions_matrix(v, c));
    r.h0 = r.dim - r.rank;
    r.h1 = r.total_length - r.rank;
    r.expected = expected_h0(v, r.total_length);
    assert(r.h0 >= r.expected);
    if (trial == 0 || r.h0 < best.h0) {
      r.best_trial = trial;
      best = r;
      best_config = std::move(c);
    }
    if (best.h0 == best.expected) {
      best.trials_used = trial + 1;
      break;
    }
    best.trials_used = trial + 1;
  }
  best.seed = seed;
  if (best.h0 == best.expected) {
    best.verdict = Verdict::Certified;
  } else if (witness) {
    if (auto cand = witness(v, best_config);
        cand && defect_witness(v, best_config, *cand)) {
      best.verdict = Verdict::Defective;
      best.witnessed = true;
    }
  }
  return best;
}

long span_dim(const Bundle& v, const Configuration& c) {
  return static_cast<long>(rank(conditions_matrix(full_system(v), c))) - 1;
}

long secant_dim(const Bundle& v, int r, unsigned trials, std::uint64_t seed) {
  if (r < 0) throw std::invalid_argument("negative point count");
  ConfigTemplate t{{{KindTag::FatPoint, 2}, r}};
  long best = -1;
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::for_cell(seed, {0x5ecau, trial});
    best = std::max(best, span_dim(v, draw_configuration(t, rng)));
  }
  return best;
}

}  // namespace apolar
