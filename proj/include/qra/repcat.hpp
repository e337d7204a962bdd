#ifndef QRA_REPCAT_HPP
#define QRA_REPCAT_HPP

// Finite-dimensional right modules as quiver representations.
//
// A representation X assigns a space X_v = F^{d_v} to each vertex and to
// each arrow a: s -> t a d_s x d_t matrix.  Vectors are rows, so x . a . b is
// the row vector x multiplied by X_a then X_b, matching left-to-right paths.
// A morphism f: X -> Y is a family f_v (d_v(X) x d_v(Y)) with
// X_a f_t = f_s Y_a for every arrow a: s -> t.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qra/kernel.hpp"
#include "qra/presentation.hpp"

namespace qra {

class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, std::string name = {})
      : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)), name_(std::move(name)) {
    check_shapes();
  }

  static Representation zero(const AlgebraPtr& alg) {
    std::vector<std::size_t> dims(alg->num_vertices(), 0);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg->quiver().num_arrows(); ++a) maps.emplace_back(0, 0);
    return Representation(alg, std::move(dims), std::move(maps), "0");
  }

  const BoundQuiverAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t dim(std::size_t v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
  std::size_t offset(std::size_t v) const {
    return std::accumulate(dims_.begin(), dims_.begin() + static_cast<long>(v), std::size_t{0});
  }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  Matrix path_matrix(const Path& p) const {
    Matrix m = Matrix::identity(dims_[p.source]);
    for (auto a : p.arrows) m = m * maps_[a];
    return m;
  }

  /// Action of basis element b (a path from s to t) as a d_s x d_t matrix.
  Matrix basis_action(std::size_t b) const { return path_matrix(alg_->basis()[b]); }

  /// Action of an algebra element on the whole space (block matrix).
  Matrix element_action(const Vec& x) const {
    const std::size_t n = total_dim();
    Matrix m(n, n);
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x[b].is_zero()) continue;
      const Path& p = alg_->basis()[b];
      if (!dims_[p.source] || !dims_[p.target]) continue;
      const Matrix blk = x[b] * path_matrix(p);
      const std::size_t r0 = offset(p.source), c0 = offset(p.target);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) m(r0 + i, c0 + j) += blk(i, j);
    }
    return m;
  }

  /// Throws unless every relation acts as zero.
  void validate() const {
    for (std::size_t r = 0; r < alg_->relations().size(); ++r) {
      const Relation& rel = alg_->relations()[r];
      const Path& p0 = rel.terms[0].second;
      Matrix acc(dims_[p0.source], dims_[p0.target]);
      for (const auto& [c, p] : rel.terms) acc = acc + c * path_matrix(p);
      if (!acc.is_zero())
        throw Error("relation_violated", (name_.empty() ? std::string("module") : name_) + ": relation " +
                                             format_relation(alg_->quiver(), rel) + " does not vanish");
    }
  }

 private:
  void check_shapes() const {
    if (!alg_) throw Error("no_algebra", "representation without algebra");
    const auto& q = alg_->quiver();
    if (dims_.size() != q.num_vertices()) throw Error("shape_mismatch", "dimension vector length differs from vertex count");
    if (maps_.size() != q.num_arrows()) throw Error("shape_mismatch", "arrow map count differs from arrow count");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const auto& ar = q.arrow(a);
      if (maps_[a].rows() != dims_[ar.source] || maps_[a].cols() != dims_[ar.target])
        throw Error("shape_mismatch", "map of arrow " + ar.label + " has wrong shape");
    }
  }

  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  std::string name_;
};

/// Modules over algebras with identical quivers are treated as comparable.
inline void require_same_algebra(const Representation& x, const Representation& y) {
  if (x.algebra_ptr() != y.algebra_ptr() && !x.algebra().same_quiver(y.algebra()))
    throw Error("algebra_mismatch", "modules live over different algebras");
}

// ---------------------------------------------------------------------------
// Morphisms.

struct Morphism {
  std::vector<Matrix> blocks;  // blocks[v]: dim X_v x dim Y_v
};

inline Morphism zero_morphism(const Representation& x, const Representation& y) {
  Morphism f;
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.blocks.emplace_back(x.dim(v), y.dim(v));
  return f;
}

inline Morphism identity_morphism(const Representation& x) {
  Morphism f;
  for (auto d : x.dims()) f.blocks.push_back(Matrix::identity(d));
  return f;
}

/// f then g.
inline Morphism compose(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] * g.blocks[v]);
  return h;
}

inline Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
  return h;
}

inline Morphism scale(Scalar c, const Morphism& f) {
  Morphism h;
  for (const auto& b : f.blocks) h.blocks.push_back(c * b);
  return h;
}

inline Morphism combination(const std::vector<Morphism>& basis, const Vec& coef, const Representation& x,
                            const Representation& y) {
  Morphism h = zero_morphism(x, y);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coef[i].is_zero()) h = add(h, scale(coef[i], basis[i]));
  return h;
}

/// Block-diagonal matrix of the whole map.
inline Matrix total_matrix(const Morphism& f) {
  std::size_t r = 0, c = 0;
  for (const auto& b : f.blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : f.blocks) {
    m.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

inline bool is_zero_morphism(const Morphism& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Matrix& m) { return m.is_zero(); });
}

inline bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
  const auto& q = x.algebra().quiver();
  if (f.blocks.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (f.blocks[v].rows() != x.dim(v) || f.blocks[v].cols() != y.dim(v)) return false;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (!(x.map(a) * f.blocks[ar.target] == f.blocks[ar.source] * y.map(a))) return false;
  }
  return true;
}

inline bool is_iso_morphism(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

inline bool is_surjective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols()) return false;
  return true;
}

inline bool is_injective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

inline std::optional<Morphism> inverse_morphism(const Morphism& f) {
  Morphism g;
  for (const auto& b : f.blocks) {
    auto inv = inverse(b);
    if (!inv) return std::nullopt;
    g.blocks.push_back(std::move(*inv));
  }
  return g;
}

/// Basis of Hom(X, Y): nullspace of the intertwining equations.
inline std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
  require_same_algebra(x, y);
  const auto& q = x.algebra().quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> var_off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + x.dim(v) * y.dim(v);
  const std::size_t nvars = var_off[nv];
  std::vector<Morphism> out;
  if (nvars == 0) return out;
  std::size_t neq = 0;
  for (const auto& ar : q.arrows()) neq += x.dim(ar.source) * y.dim(ar.target);
  Matrix eq(neq, nvars);
  std::size_t row = 0;
  // (X_a f_t - f_s Y_a)(i, j) = sum_k X_a(i,k) f_t(k,j) - sum_k f_s(i,k) Y_a(k,j)
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    const Matrix& xa = x.map(a);
    const Matrix& ya = y.map(a);
    for (std::size_t i = 0; i < x.dim(s); ++i)
      for (std::size_t j = 0; j < y.dim(t); ++j, ++row) {
        for (std::size_t k = 0; k < x.dim(t); ++k)
          if (!xa(i, k).is_zero()) eq(row, var_off[t] + k * y.dim(t) + j) += xa(i, k);
        for (std::size_t k = 0; k < y.dim(s); ++k)
          if (!ya(k, j).is_zero()) eq(row, var_off[s] + i * y.dim(s) + k) -= ya(k, j);
      }
  }
  const Matrix ker = nullspace(eq);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Morphism f;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(x.dim(v), y.dim(v));
      for (std::size_t i = 0; i < x.dim(v); ++i)
        for (std::size_t j = 0; j < y.dim(v); ++j) b(i, j) = ker(var_off[v] + i * y.dim(v) + j, c);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).size(); }

// ---------------------------------------------------------------------------
// Standard modules.

/// P(x) = e_x A: basis paths starting at x, arrows acting by right
/// multiplication.
inline Representation projective(const AlgebraPtr& alg, std::size_t x) {
  const auto& a = *alg;
  const auto& q = a.quiver();
  std::vector<std::vector<std::size_t>> at(a.num_vertices());
  std::vector<std::size_t> pos(a.dim(), 0);
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.basis()[b].source == x) {
      pos[b] = at[a.basis()[b].target].size();
      at[a.basis()[b].target].push_back(b);
    }
  std::vector<std::size_t> dims;
  for (auto& v : at) dims.push_back(v.size());
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const auto s = q.arrow(ar).source, t = q.arrow(ar).target;
    Matrix m(dims[s], dims[t]);
    for (std::size_t i = 0; i < at[s].size(); ++i)
      for (const auto& [k, c] : a.structure().product(at[s][i], a.arrow_basis_index(ar))) m(i, pos[k]) += c;
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps), "P(" + q.vertex(x) + ")");
}

/// I(x) = D(A e_x): dual basis of the paths ending at x.
inline Representation injective(const AlgebraPtr& alg, std::size_t x) {
  const auto& a = *alg;
  const auto& q = a.quiver();
  std::vector<std::vector<std::size_t>> at(a.num_vertices());
  std::vector<std::size_t> pos(a.dim(), 0);
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (a.basis()[b].target == x) {
      pos[b] = at[a.basis()[b].source].size();
      at[a.basis()[b].source].push_back(b);
    }
  std::vector<std::size_t> dims;
  for (auto& v : at) dims.push_back(v.size());
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const auto s = q.arrow(ar).source, t = q.arrow(ar).target;
    Matrix m(dims[s], dims[t]);
    // (p* . a)(r) = p*(a r): entry (p, r) = coefficient of p in a.r
    for (std::size_t j = 0; j < at[t].size(); ++j)
      for (const auto& [k, c] : a.structure().product(a.arrow_basis_index(ar), at[t][j])) m(pos[k], j) += c;
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps), "I(" + q.vertex(x) + ")");
}

inline Representation simple(const AlgebraPtr& alg, std::size_t x) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims[x] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : alg->quiver().arrows()) maps.emplace_back(dims[ar.source], dims[ar.target]);
  return Representation(alg, std::move(dims), std::move(maps), "S(" + alg->quiver().vertex(x) + ")");
}

/// A as a right module over itself.
inline Representation regular_module(const AlgebraPtr& alg) {
  Representation acc = projective(alg, 0);
  for (std::size_t v = 1; v < alg->num_vertices(); ++v) {
    auto p = projective(alg, v);
    std::vector<std::size_t> dims;
    for (std::size_t u = 0; u < alg->num_vertices(); ++u) dims.push_back(acc.dim(u) + p.dim(u));
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg->quiver().num_arrows(); ++a) maps.push_back(direct_sum(acc.map(a), p.map(a)));
    acc = Representation(alg, std::move(dims), std::move(maps));
  }
  acc.set_name("A");
  return acc;
}

// ---------------------------------------------------------------------------
// Direct sums, submodules, quotients.

struct DirectSum {
  Representation module;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};

inline DirectSum direct_sum(const std::vector<Representation>& parts, const AlgebraPtr& alg = nullptr) {
  AlgebraPtr a = alg ? alg : (parts.empty() ? nullptr : parts[0].algebra_ptr());
  if (!a) throw Error("no_algebra", "direct_sum of an empty list needs an algebra");
  for (const auto& p : parts)
    if (p.algebra_ptr() != a && !p.algebra().same_quiver(*a))
      throw Error("algebra_mismatch", "direct_sum: modules over different algebras");
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < a->quiver().num_arrows(); ++ar) {
    const auto& arrow = a->quiver().arrow(ar);
    Matrix m(dims[arrow.source], dims[arrow.target]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      m.set_block(r0, c0, p.map(ar));
      r0 += p.dim(arrow.source);
      c0 += p.dim(arrow.target);
    }
    maps.push_back(std::move(m));
  }
  DirectSum ds{Representation(a, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> off(nv, 0);
  std::string name;
  for (const auto& p : parts) {
    Morphism inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(p.dim(v), dims[v]), pr(dims[v], p.dim(v));
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(k, off[v] + k) = Scalar::raw(1);
        pr(off[v] + k, k) = Scalar::raw(1);
      }
      inc.blocks.push_back(std::move(i));
      proj.blocks.push_back(std::move(pr));
      off[v] += p.dim(v);
    }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(proj));
    if (!name.empty()) name += " + ";
    name += p.name().empty() ? "?" : p.name();
  }
  ds.module.set_name(name);
  return ds;
}

/// Per-vertex subspaces given by rows in vertex coordinates.
using Subspace = std::vector<Matrix>;

struct SubmoduleResult {
  Representation module;
  Morphism inclusion;
};

/// Submodule spanned by the given per-vertex row bases (assumed closed under
/// the arrows; checked).
inline SubmoduleResult submodule(const Representation& x, const Subspace& sub) {
  const auto& q = x.algebra().quiver();
  std::vector<Matrix> basis;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    basis.push_back(row_basis(sub[v]));
    dims.push_back(basis.back().rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    Matrix img = basis[ar.source] * x.map(a);
    if (img.rows() == 0) {
      maps.emplace_back(0, dims[ar.target]);
      continue;
    }
    if (dims[ar.target] == 0) {
      if (!img.is_zero()) throw Error("not_submodule", "subspace not closed under arrow " + ar.label);
      maps.emplace_back(dims[ar.source], 0);
      continue;
    }
    auto c = solve_left(basis[ar.target], img);
    if (!c) throw Error("not_submodule", "subspace not closed under arrow " + ar.label);
    maps.push_back(std::move(*c));
  }
  SubmoduleResult r{Representation(x.algebra_ptr(), dims, std::move(maps)), {}};
  r.inclusion.blocks = std::move(basis);
  return r;
}

struct QuotientResult {
  Representation module;
  Morphism projection;
};

/// X / U for a submodule U given by per-vertex row bases.
inline QuotientResult quotient(const Representation& x, const Subspace& sub) {
  const auto& q = x.algebra().quiver();
  std::vector<Matrix> proj;
  std::vector<Matrix> comp;  // complement rows: chosen lifts of the quotient basis
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const Matrix u = row_basis(sub[v]);
    const Matrix c = complement_rows(u, x.dim(v));
    // Coordinates w.r.t. [u; c]; projection keeps the c part.
    const Matrix full = vstack(u, c);
    auto inv = inverse(full);
    if (!inv) throw Error("internal", "quotient basis not invertible");
    proj.push_back(inv->block(0, u.rows(), x.dim(v), c.rows()));
    comp.push_back(c);
    dims.push_back(c.rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    maps.push_back(comp[ar.source] * x.map(a) * proj[ar.target]);
  }
  QuotientResult r{Representation(x.algebra_ptr(), dims, std::move(maps)), {}};
  r.projection.blocks = std::move(proj);
  return r;
}

/// Kernel of f: X -> Y as a submodule of X.
inline SubmoduleResult kernel(const Representation& x, const Morphism& f) {
  Subspace s;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) s.push_back(left_nullspace(f.blocks[v]));
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    if (f.blocks[v].cols() == 0) s[v] = Matrix::identity(x.dim(v));
  return submodule(x, s);
}

/// Image of f: X -> Y as a submodule of Y.
inline SubmoduleResult image(const Representation& y, const Morphism& f) {
  Subspace s;
  for (const auto& b : f.blocks) s.push_back(b);
  return submodule(y, s);
}

inline QuotientResult cokernel(const Representation& y, const Morphism& f) {
  Subspace s;
  for (const auto& b : f.blocks) s.push_back(b);
  return quotient(y, s);
}

// ---------------------------------------------------------------------------
// Duality.

struct OppositeCache {
  static AlgebraPtr get(const AlgebraPtr& a) {
    static std::map<const BoundQuiverAlgebra*, std::pair<std::weak_ptr<const BoundQuiverAlgebra>, AlgebraPtr>> cache;
    auto it = cache.find(a.get());
    if (it != cache.end() && !it->second.first.expired() && it->second.first.lock() == a) return it->second.second;
    auto op = std::make_shared<const BoundQuiverAlgebra>(opposite(*a));
    cache[a.get()] = {a, op};
    // The opposite of the opposite is the original.
    cache[op.get()] = {op, a};
    return op;
  }
};

inline AlgebraPtr opposite_ptr(const AlgebraPtr& a) { return OppositeCache::get(a); }

/// D X over the opposite algebra: same dimensions, transposed maps.
inline Representation dualize(const Representation& x, const AlgebraPtr& op = nullptr) {
  AlgebraPtr target = op ? op : opposite_ptr(x.algebra_ptr());
  std::vector<Matrix> maps;
  for (const auto& m : x.maps()) maps.push_back(m.transpose());
  return Representation(target, x.dims(), std::move(maps), x.name().empty() ? "" : "D(" + x.name() + ")");
}

/// D f: D Y -> D X.
inline Morphism dualize(const Morphism& f) {
  Morphism g;
  for (const auto& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

// ---------------------------------------------------------------------------
// Loewy structure.

/// Image of the subspace under all arrows (the radical of the submodule).
inline Subspace radical_of(const Representation& x, const Subspace& s) {
  const auto& q = x.algebra().quiver();
  Subspace out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out.emplace_back(0, x.dim(v));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (s[ar.source].rows() == 0) continue;
    out[ar.target] = vstack(out[ar.target], s[ar.source] * x.map(a));
  }
  for (auto& m : out) m = row_basis(m);
  return out;
}

inline Subspace whole(const Representation& x) {
  Subspace s;
  for (auto d : x.dims()) s.push_back(Matrix::identity(d));
  return s;
}

inline std::size_t subspace_dim(const Subspace& s) {
  std::size_t n = 0;
  for (const auto& m : s) n += m.rows();
  return n;
}

/// Vectors x with x . a in `below` for every arrow a.
inline Subspace socle_above(const Representation& x, const Subspace& below) {
  const auto& q = x.algebra().quiver();
  Subspace out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    // Stack conditions: for arrows a: v -> t, x X_a in span(below_t), i.e.
    // x X_a N_t = 0 with N_t a basis of the annihilator of below_t.
    Matrix cond(x.dim(v), 0);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const auto& ar = q.arrow(a);
      if (ar.source != v) continue;
      const Matrix ann = nullspace(below[ar.target].rows() ? below[ar.target] : Matrix(0, x.dim(ar.target)));
      cond = hstack(cond, x.map(a) * ann);
    }
    out.push_back(cond.cols() ? left_nullspace(cond) : Matrix::identity(x.dim(v)));
    if (out.back().rows() == 0) out.back() = Matrix(0, x.dim(v));
  }
  return out;
}

struct LoewyData {
  std::vector<std::vector<std::size_t>> radical_layers;  // dims of rad^k / rad^{k+1}
  std::vector<std::vector<std::size_t>> socle_layers;    // from the top: soc^L / soc^{L-1}, ...
  std::vector<std::size_t> top;
  std::vector<std::size_t> socle;
  std::size_t loewy_length = 0;
};

inline LoewyData loewy_data(const Representation& x) {
  LoewyData d;
  const std::size_t nv = x.dims().size();
  Subspace cur = whole(x);
  while (subspace_dim(cur) > 0) {
    Subspace next = radical_of(x, cur);
    std::vector<std::size_t> layer(nv);
    for (std::size_t v = 0; v < nv; ++v) layer[v] = cur[v].rows() - next[v].rows();
    d.radical_layers.push_back(layer);
    cur = std::move(next);
  }
  d.loewy_length = d.radical_layers.size();
  d.top = d.radical_layers.empty() ? std::vector<std::size_t>(nv, 0) : d.radical_layers.front();
  Subspace soc;
  for (auto dv : x.dims()) soc.emplace_back(0, dv);
  std::vector<std::vector<std::size_t>> layers;
  while (subspace_dim(soc) < x.total_dim()) {
    Subspace next = socle_above(x, soc);
    std::vector<std::size_t> layer(nv);
    for (std::size_t v = 0; v < nv; ++v) layer[v] = next[v].rows() - soc[v].rows();
    layers.push_back(layer);
    soc = std::move(next);
  }
  d.socle = layers.empty() ? std::vector<std::size_t>(nv, 0) : layers.front();
  d.socle_layers.assign(layers.rbegin(), layers.rend());
  return d;
}

/// "4/3 5/2/1": layers separated by '/', composition factors within a layer by
/// spaces, listed in vertex order.
inline std::string layer_string(const Quiver& q, const std::vector<std::vector<std::size_t>>& layers) {
  std::string s;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (k) s += '/';
    bool first = true;
    for (std::size_t v = 0; v < layers[k].size(); ++v)
      for (std::size_t m = 0; m < layers[k][v]; ++m) {
        if (!first) s += ' ';
        s += q.vertex(v);
        first = false;
      }
  }
  return s;
}

inline std::vector<std::size_t> support(const Representation& x) {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    if (x.dim(v)) s.push_back(v);
  return s;
}

// ---------------------------------------------------------------------------
// Restriction to a convex subcategory and extension by zero.

struct Restriction {
  Representation module;  // over the full subalgebra on verts
  Morphism inclusion;     // largest submodule supported on verts, into X (over A)
  Representation as_submodule;
};

/// Largest submodule of X supported on a convex vertex set, viewed as a module
/// over the full subalgebra `sub` on those vertices.
inline Restriction restrict_to_quotient(const Representation& x, const std::vector<std::size_t>& verts,
                                        const AlgebraPtr& sub) {
  const auto& a = x.algebra();
  if (!is_convex(a.quiver(), verts)) throw Error("non_convex", "vertex subset is not convex");
  const std::size_t nv = a.num_vertices();
  std::vector<bool> in(nv, false);
  for (auto v : verts) in[v] = true;
  Subspace s;
  for (std::size_t v = 0; v < nv; ++v) s.push_back(in[v] ? Matrix::identity(x.dim(v)) : Matrix(0, x.dim(v)));
  for (bool changed = true; changed;) {
    changed = false;
    Subspace next = socle_above(x, s);
    for (std::size_t v = 0; v < nv; ++v) {
      // intersect s_v with next_v
      Matrix stacked = hstack(s[v].transpose(), next[v].transpose());
      if (s[v].rows() == 0) continue;
      Matrix ker = nullspace(stacked);
      Matrix inter = ker.block(0, 0, s[v].rows(), ker.cols()).transpose() * s[v];
      inter = row_basis(inter);
      if (inter.rows() != s[v].rows()) {
        s[v] = inter;
        changed = true;
      }
      if (s[v].rows() == 0) s[v] = Matrix(0, x.dim(v));
    }
  }
  auto subm = submodule(x, s);
  // Re-express over the subalgebra.
  std::vector<std::size_t> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> dims;
  for (auto v : sorted) dims.push_back(subm.module.dim(v));
  std::vector<Matrix> maps;
  for (const auto& ar : sub->quiver().arrows()) {
    auto orig = a.quiver().find_arrow(ar.label);
    if (!orig) throw Error("algebra_mismatch", "subalgebra arrow " + ar.label + " not in the ambient quiver");
    maps.push_back(subm.module.map(*orig));
  }
  Representation r(sub, std::move(dims), std::move(maps), x.name().empty() ? "" : x.name() + "|sub");
  return Restriction{std::move(r), subm.inclusion, subm.module};
}

/// Module over a supported on the vertices of a full subalgebra, zero elsewhere.
inline Representation extend_by_zero(const Representation& y, const AlgebraPtr& a) {
  const auto& sq = y.algebra().quiver();
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  for (std::size_t v = 0; v < sq.num_vertices(); ++v) dims[a->quiver().vertex_index(sq.vertex(v))] = y.dim(v);
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows()) {
    auto sa = sq.find_arrow(ar.label);
    if (sa)
      maps.push_back(y.map(*sa));
    else
      maps.emplace_back(dims[ar.source], dims[ar.target]);
  }
  Representation r(a, std::move(dims), std::move(maps), y.name());
  r.validate();
  return r;
}

// ---------------------------------------------------------------------------
// Endomorphism rings, decomposition and isomorphism.

struct EndInfo {
  std::vector<Morphism> basis;
  std::size_t radical_dim = 0;
  bool local = false;  // End / rad End is one-dimensional
};

/// dim X must stay below the modulus for the trace-form radical.
inline EndInfo end_info(const Representation& x) {
  EndInfo info;
  info.basis = hom_basis(x, x);
  const std::size_t k = info.basis.size();
  if (x.total_dim() >= field::modulus()) throw Error("modulus_too_small", "module dimension not below the modulus");
  if (k == 0) return info;
  std::vector<Matrix> tot;
  for (const auto& f : info.basis) tot.push_back(total_matrix(f));
  Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Scalar t;
      // trace(f_i f_j) without forming the product
      const Matrix& a = tot[i];
      const Matrix& b = tot[j];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (!a(r, c).is_zero()) t += a(r, c) * b(c, r);
      g(i, j) = g(j, i) = t;
    }
  const std::size_t r = rank(g);
  info.radical_dim = k - r;
  info.local = (r == 1);
  return info;
}

inline bool is_indecomposable(const Representation& x) {
  if (x.is_zero()) return false;
  return end_info(x).local;
}

struct Summand {
  Representation module;
  Morphism inclusion;   // summand -> X
  Morphism projection;  // X -> summand
};

namespace detail {

inline std::vector<Summand> split_recursive(const Representation& x, const Morphism& inc, std::size_t budget) {
  if (x.is_zero()) return {};
  EndInfo info = end_info(x);
  if (info.local) return {Summand{x, inc, {}}};
  const std::size_t nv = x.dims().size();
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Vec coef(info.basis.size());
    for (auto& c : coef) c = random_scalar();
    Morphism f = combination(info.basis, coef, x, x);
    Vec cp = charpoly(total_matrix(f));
    for (Scalar lambda : roots(cp)) {
      Subspace ker, img;
      std::size_t kdim = 0;
      for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t d = x.dim(v);
        Matrix m = power(f.blocks[v] - lambda * Matrix::identity(d), d);
        ker.push_back(d ? left_nullspace(m) : Matrix(0, 0));
        if (ker.back().rows() == 0) ker.back() = Matrix(0, d);
        img.push_back(row_basis(m));
        if (img.back().rows() == 0) img.back() = Matrix(0, d);
        kdim += ker.back().rows();
      }
      if (kdim == 0 || kdim == x.total_dim()) continue;
      auto k = submodule(x, ker);
      auto i = submodule(x, img);
      auto left = split_recursive(k.module, compose(k.inclusion, inc), budget);
      auto right = split_recursive(i.module, compose(i.inclusion, inc), budget);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw Error("undetermined_split", "decomposition did not split a non-local endomorphism ring");
}

}  // namespace detail

/// Indecomposable summands with inclusions into X and matching projections.
inline std::vector<Summand> decompose(const Representation& x, std::size_t budget = 64) {
  auto parts = detail::split_recursive(x, identity_morphism(x), budget);
  // Projections from the inverse of the stacked inclusion rows.
  const std::size_t nv = x.dims().size();
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix stacked(0, x.dim(v));
    for (const auto& p : parts) stacked = vstack(stacked, p.inclusion.blocks[v]);
    auto inv = inverse(stacked);
    if (!inv) throw Error("internal", "summand inclusions do not form a basis");
    std::size_t c0 = 0;
    for (auto& p : parts) {
      const std::size_t d = p.module.dim(v);
      p.projection.blocks.push_back(inv->block(0, c0, x.dim(v), d));
      c0 += d;
    }
  }
  for (auto& p : parts) p.module.set_name("");
  return parts;
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<Morphism> witness;
};

/// Isomorphism test: cheap invariants, seeded random search for an invertible
/// Hom element, and for indecomposable X an exact trace-pairing criterion.
inline IsoResult module_iso(const Representation& x, const Representation& y, std::size_t budget = 64) {
  require_same_algebra(x, y);
  if (x.dims() != y.dims()) return {};
  if (x.is_zero()) return {true, zero_morphism(x, y)};
  auto hxy = hom_basis(x, y);
  if (hxy.empty()) return {};
  auto hyx = hom_basis(y, x);
  if (hxy.size() != hyx.size()) return {};
  const std::size_t ex = hom_dim(x, x);
  if (ex != hxy.size() || hom_dim(y, y) != ex) return {};
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Vec coef(hxy.size());
    for (auto& c : coef) c = random_scalar();
    Morphism f = combination(hxy, coef, x, y);
    if (is_iso_morphism(f)) return {true, f};
  }
  if (end_info(x).local) {
    // X local with residue field F_p: f in Hom(X,Y) is an isomorphism iff
    // tr(f g) != 0 for some g in Hom(Y,X).
    for (const auto& f : hxy)
      for (const auto& g : hyx)
        if (!trace(total_matrix(compose(f, g))).is_zero()) {
          if (is_iso_morphism(f)) return {true, f};
        }
    return {};
  }
  throw Error("undetermined", "isomorphism undetermined after random search");
}

struct IsoClass {
  Representation module;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> members;  // indices into the input list
};

/// Groups modules into isomorphism classes, preserving first-occurrence order.
inline std::vector<IsoClass> group_isoclasses(const std::vector<Representation>& mods) {
  std::vector<IsoClass> classes;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (module_iso(c.module, mods[i]).isomorphic) {
        ++c.multiplicity;
        c.members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back(IsoClass{mods[i], 1, {i}});
  }
  return classes;
}

inline std::vector<std::pair<Representation, std::size_t>> decompose_with_multiplicity(const Representation& x) {
  std::vector<Representation> mods;
  for (auto& s : decompose(x)) mods.push_back(s.module);
  std::vector<std::pair<Representation, std::size_t>> out;
  for (auto& c : group_isoclasses(mods)) out.emplace_back(c.module, c.multiplicity);
  return out;
}

inline bool is_projective_module(const Representation& x) {
  for (const auto& s : decompose(x)) {
    bool found = false;
    for (std::size_t v = 0; v < x.dims().size() && !found; ++v)
      if (module_iso(s.module, projective(x.algebra_ptr(), v)).isomorphic) found = true;
    if (!found) return false;
  }
  return true;
}

inline bool is_injective_module(const Representation& x) {
  for (const auto& s : decompose(x)) {
    bool found = false;
    for (std::size_t v = 0; v < x.dims().size() && !found; ++v)
      if (module_iso(s.module, injective(x.algebra_ptr(), v)).isomorphic) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace qra

#endif  // QRA_REPCAT_HPP
