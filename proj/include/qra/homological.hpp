#ifndef QRA_HOMOLOGICAL_HPP
#define QRA_HOMOLOGICAL_HPP

// Projective covers, minimal resolutions, global dimension, transpose and
// Auslander-Reiten translation, selfinjectivity and symmetry.

#include <optional>
#include <string>
#include <vector>

#include "qra/presentation.hpp"
#include "qra/repcat.hpp"

namespace qra {

/// Basis indices of the paths from x to w, in the order used by projective().
inline std::vector<std::size_t> paths_between(const BoundQuiverAlgebra& a, std::size_t x, std::size_t w) {
  return a.basis_between(x, w);
}

/// P(u) -> P(w) sending e_u to c, for c in e_w A e_u given in basis
/// coordinates.
inline Morphism projective_map(const AlgebraPtr& alg, std::size_t u, std::size_t w, const Vec& c) {
  const auto& a = *alg;
  Morphism f;
  std::vector<long> pos(a.dim(), -1);
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    auto cols = paths_between(a, w, t);
    for (std::size_t j = 0; j < cols.size(); ++j) pos[cols[j]] = static_cast<long>(j);
  }
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    auto rows = paths_between(a, u, t);
    auto cols = paths_between(a, w, t);
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Vec cp(a.dim());
      for (std::size_t b = 0; b < a.dim(); ++b) {
        if (c[b].is_zero()) continue;
        for (const auto& [k, v] : a.structure().product(b, rows[i])) cp[k] += c[b] * v;
      }
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!cp[k].is_zero()) {
          if (pos[k] < 0 || a.basis()[k].source != w || a.basis()[k].target != t)
            throw Error("internal", "projective_map: element not in e_w A e_u");
          m(i, static_cast<std::size_t>(pos[k])) += cp[k];
        }
    }
    f.blocks.push_back(std::move(m));
  }
  return f;
}

struct ProjectiveCover {
  Representation module;               // P = sum of P(v) over `vertices`
  std::vector<std::size_t> vertices;   // one entry per indecomposable summand
  Morphism map;                        // P -> X
};

/// Lifts a basis of top(X) and sums the corresponding projectives.
inline ProjectiveCover projective_cover(const Representation& x) {
  const AlgebraPtr& alg = x.algebra_ptr();
  const std::size_t nv = alg->num_vertices();
  const Subspace rad = radical_of(x, whole(x));
  ProjectiveCover pc;
  std::vector<Representation> parts;
  std::vector<Vec> gens;
  for (std::size_t v = 0; v < nv; ++v) {
    const Matrix comp = complement_rows(rad[v].rows() ? rad[v] : Matrix(0, x.dim(v)), x.dim(v));
    for (std::size_t k = 0; k < comp.rows(); ++k) {
      pc.vertices.push_back(v);
      gens.push_back(comp.row(k));
      parts.push_back(projective(alg, v));
    }
  }
  if (parts.empty()) {
    pc.module = Representation::zero(alg);
    pc.map = zero_morphism(pc.module, x);
    return pc;
  }
  auto ds = direct_sum(parts, alg);
  pc.module = ds.module;
  pc.module.set_name("");
  Morphism f = zero_morphism(pc.module, x);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const std::size_t v = pc.vertices[s];
    // e_v -> gens[s]; basis path p from v to t maps to gens[s] . p.
    Morphism g;
    for (std::size_t t = 0; t < nv; ++t) {
      auto rows = paths_between(*alg, v, t);
      Matrix m(rows.size(), x.dim(t));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Matrix img = Matrix::from_rows({gens[s]}, x.dim(v)) * x.path_matrix(alg->basis()[rows[i]]);
        for (std::size_t j = 0; j < x.dim(t); ++j) m(i, j) = img(0, j);
      }
      g.blocks.push_back(std::move(m));
    }
    f = add(f, compose(ds.projections[s], g));
  }
  pc.map = std::move(f);
  return pc;
}

struct Resolution {
  std::vector<ProjectiveCover> covers;  // P_i with P_i -> Omega^i X
  std::vector<Morphism> differentials;  // d_i: P_i -> P_{i-1}, i >= 1
  std::vector<Representation> syzygies;  // Omega^0 X = X, Omega^1 X, ...
  std::size_t projdim = 0;
  bool truncated = false;
  bool exact = true;
};

/// Iterated projective covers of kernels; stops at a zero kernel or after
/// `cutoff` stages.
inline Resolution minimal_resolution(const Representation& x, std::size_t cutoff = 12) {
  Resolution res;
  res.syzygies.push_back(x);
  if (x.is_zero()) return res;
  Representation cur = x;
  std::optional<Morphism> prev_inclusion;
  for (std::size_t i = 0;; ++i) {
    auto pc = projective_cover(cur);
    if (!is_surjective(pc.map)) res.exact = false;
    auto k = kernel(pc.module, pc.map);
    // Superfluous kernel: K inside rad P.
    const Subspace radp = radical_of(pc.module, whole(pc.module));
    for (std::size_t v = 0; v < radp.size(); ++v)
      if (k.inclusion.blocks[v].rows() &&
          rank(vstack(radp[v].rows() ? radp[v] : Matrix(0, pc.module.dim(v)), k.inclusion.blocks[v])) !=
              radp[v].rows())
        res.exact = false;
    if (prev_inclusion) res.differentials.push_back(compose(pc.map, *prev_inclusion));
    res.covers.push_back(pc);
    if (k.module.is_zero()) {
      res.projdim = i;
      return res;
    }
    if (i + 1 > cutoff) {
      res.projdim = i + 1;
      res.truncated = true;
      return res;
    }
    res.syzygies.push_back(k.module);
    prev_inclusion = k.inclusion;
    cur = k.module;
  }
}

struct GlobalDimension {
  std::size_t value = 0;
  bool truncated = false;  // value is a lower bound (cutoff reached)
  std::vector<std::size_t> per_simple;
  std::vector<bool> per_simple_truncated;
};

inline GlobalDimension gldim(const AlgebraPtr& alg, std::size_t cutoff = 12) {
  GlobalDimension g;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
    auto r = minimal_resolution(simple(alg, v), cutoff);
    if (!r.exact) throw Error("internal", "non-exact resolution");
    g.per_simple.push_back(r.projdim);
    g.per_simple_truncated.push_back(r.truncated);
    g.value = std::max(g.value, r.projdim);
    g.truncated = g.truncated || r.truncated;
  }
  return g;
}

/// Global dimension of an algebra given by structure constants, through its
/// recovered presentation.
inline GlobalDimension gldim(const StructAlgebra& s, std::size_t cutoff = 12) {
  PresentationOptions opt;
  opt.minimize_relations = false;
  auto p = presentation_from_struct(s, opt);
  return gldim(std::make_shared<const BoundQuiverAlgebra>(std::move(p.algebra)), cutoff);
}

// ---------------------------------------------------------------------------
// Transpose and AR translation.

inline bool has_projective_summand(const Representation& x) {
  for (const auto& s : decompose(x))
    for (std::size_t v = 0; v < x.dims().size(); ++v)
      if (s.module.dims() == projective(x.algebra_ptr(), v).dims() &&
          module_iso(s.module, projective(x.algebra_ptr(), v)).isomorphic)
        return true;
  return false;
}

inline bool has_injective_summand(const Representation& x) {
  for (const auto& s : decompose(x))
    for (std::size_t v = 0; v < x.dims().size(); ++v)
      if (s.module.dims() == injective(x.algebra_ptr(), v).dims() &&
          module_iso(s.module, injective(x.algebra_ptr(), v)).isomorphic)
        return true;
  return false;
}

/// Tr X = coker(P_0^* -> P_1^*) over the opposite algebra, from a minimal
/// projective presentation P_1 -> P_0 -> X.  Projective summands of X
/// contribute nothing; unless allowed explicitly they are an error.
inline Representation transpose(const Representation& x, bool allow_projective_summands = false) {
  if (!allow_projective_summands && has_projective_summand(x))
    throw Error("projective_summand", "transpose of a module with projective summands");
  const AlgebraPtr& alg = x.algebra_ptr();
  const AlgebraPtr op = opposite_ptr(alg);
  auto c0 = projective_cover(x);
  auto k = kernel(c0.module, c0.map);
  auto c1 = projective_cover(k.module);
  const Morphism d = compose(c1.map, k.inclusion);  // P1 -> P0

  // Offsets of each summand's generator inside P0 at its vertex.
  const std::size_t nv = alg->num_vertices();
  auto summand_offsets = [&](const ProjectiveCover& pc) {
    std::vector<std::vector<std::size_t>> start(pc.vertices.size(), std::vector<std::size_t>(nv, 0));
    std::vector<std::size_t> acc(nv, 0);
    for (std::size_t s = 0; s < pc.vertices.size(); ++s)
      for (std::size_t t = 0; t < nv; ++t) {
        start[s][t] = acc[t];
        acc[t] += paths_between(*alg, pc.vertices[s], t).size();
      }
    return start;
  };
  const auto off0 = summand_offsets(c0);
  const auto off1 = summand_offsets(c1);

  std::vector<Representation> p0_op, p1_op;
  for (auto v : c0.vertices) p0_op.push_back(projective(op, v));
  for (auto v : c1.vertices) p1_op.push_back(projective(op, v));
  if (p1_op.empty()) return Representation::zero(op);
  auto s0 = p0_op.empty() ? DirectSum{Representation::zero(op), {}, {}} : direct_sum(p0_op, op);
  auto s1 = direct_sum(p1_op, op);
  Morphism dstar = zero_morphism(s0.module, s1.module);
  for (std::size_t kk = 0; kk < c1.vertices.size(); ++kk) {
    const std::size_t y = c1.vertices[kk];
    // Image of the generator e_y of the kk-th summand of P1.
    const std::size_t row = off1[kk][y];  // generator is the stationary path, listed first at y
    auto ybasis = paths_between(*alg, y, y);
    std::size_t gen_pos = 0;
    for (std::size_t i = 0; i < ybasis.size(); ++i)
      if (alg->structure().is_idempotent(ybasis[i])) gen_pos = i;
    const Vec img = d.blocks[y].row(row + gen_pos);
    for (std::size_t l = 0; l < c0.vertices.size(); ++l) {
      const std::size_t xv = c0.vertices[l];
      auto paths = paths_between(*alg, xv, y);
      Vec a(alg->dim());
      bool nonzero = false;
      for (std::size_t i = 0; i < paths.size(); ++i) {
        a[paths[i]] = img[off0[l][y] + i];
        nonzero = nonzero || !a[paths[i]].is_zero();
      }
      if (!nonzero) continue;
      // In the opposite algebra the element a lies in e_y A^op e_x: a map
      // P^op(x) -> P^op(y).
      Morphism comp = projective_map(op, xv, y, a);
      dstar = add(dstar, compose(compose(s0.projections[l], comp), s1.inclusions[kk]));
    }
  }
  auto ck = cokernel(s1.module, dstar);
  Representation tr = ck.module;
  tr.set_name(x.name().empty() ? "" : "Tr(" + x.name() + ")");
  return tr;
}

/// D Tr X for forward, Tr D X for inverse.
inline Representation tau(const Representation& x, bool inverse = false) {
  if (!inverse) {
    if (has_projective_summand(x)) throw Error("projective_input", "tau of a module with a projective summand");
    Representation t = dualize(transpose(x, true));
    t.set_name(x.name().empty() ? "" : "tau(" + x.name() + ")");
    return t;
  }
  if (has_injective_summand(x)) throw Error("injective_input", "inverse tau of a module with an injective summand");
  Representation t = transpose(dualize(x), true);
  t.set_name(x.name().empty() ? "" : "tau^-1(" + x.name() + ")");
  return t;
}

// ---------------------------------------------------------------------------
// Selfinjectivity and symmetry.

inline bool check_selfinjective(const AlgebraPtr& alg) {
  const std::size_t n = alg->num_vertices();
  std::vector<bool> used(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    auto p = projective(alg, x);
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      if (used[y]) continue;
      auto i = injective(alg, y);
      if (i.dims() != p.dims()) continue;
      if (module_iso(p, i).isomorphic) {
        used[y] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct SymmetryCertificate {
  bool symmetric = false;
  Vec form;  // lambda on the basis, when found
  std::size_t trace_space_dim = 0;
};

/// Looks for lambda with lambda(xy) = lambda(yx) whose bilinear form
/// (x, y) -> lambda(xy) is nondegenerate.  Candidates are seeded random
/// combinations of a basis of the symmetric functionals.
inline SymmetryCertificate check_symmetric(const StructAlgebra& s, std::size_t tries = 8) {
  const std::size_t n = s.dim();
  std::vector<Vec> cons;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Vec c(n);
      if (s.target(x) == s.source(y))
        for (const auto& [k, v] : s.product(x, y)) c[k] += v;
      if (s.target(y) == s.source(x))
        for (const auto& [k, v] : s.product(y, x)) c[k] -= v;
      if (!is_zero_vec(c)) cons.push_back(std::move(c));
    }
  const Matrix lam = cons.empty() ? Matrix::identity(n) : nullspace(Matrix::from_rows(cons, n));
  SymmetryCertificate cert;
  cert.trace_space_dim = lam.cols();
  if (lam.cols() == 0) return cert;
  auto gram = [&](const Vec& l) {
    Matrix g(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (s.target(x) != s.source(y)) continue;
        Scalar acc;
        for (const auto& [k, v] : s.product(x, y)) acc += v * l[k];
        g(x, y) = acc;
      }
    return g;
  };
  for (std::size_t t = 0; t < tries; ++t) {
    Vec l(n);
    for (std::size_t c = 0; c < lam.cols(); ++c) {
      const Scalar r = (t == 0 && lam.cols() == 1) ? Scalar::raw(1) : random_scalar();
      for (std::size_t k = 0; k < n; ++k) l[k] += r * lam(k, c);
    }
    if (rank(gram(l)) == n) {
      cert.symmetric = true;
      cert.form = l;
      return cert;
    }
  }
  return cert;
}

}  // namespace qra

#endif  // QRA_HOMOLOGICAL_HPP
