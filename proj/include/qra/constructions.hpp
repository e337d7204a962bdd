#ifndef QRA_CONSTRUCTIONS_HPP
#define QRA_CONSTRUCTIONS_HPP

// Trivial extensions, replicated algebras (finite windows of the repetitive
// category), reflections at sinks and one-point extensions.
//
// Window layout: the object (m, i) is vertex i of the m-th copy of B.  The
// copy of B in layer m carries e_j B e_i between (m, i) and (m, j); the dual
// element p* of a basis path p : i -> j lives in layer m >= 1 and goes from
// (m, j) down to (m-1, i).  Products of two dual elements vanish.

#include <string>
#include <vector>

#include "qra/presentation.hpp"
#include "qra/repcat.hpp"

namespace qra {

namespace detail {

inline std::string primes(int m) {
  if (m >= 0) return std::string(static_cast<std::size_t>(m), '\'');
  return "_m" + std::to_string(-m);
}

inline std::string flat_label(std::string s) {
  for (char& c : s)
    if (c == '.') c = '_';
  return s;
}

inline std::string dual_label(const std::string& l) { return "D_" + flat_label(l); }

/// b p* and p* b in the bimodule DB, as sparse combinations of dual basis
/// elements: (b p*)(q) = p*(q b), (p* b)(q) = p*(b q).
struct DualTables {
  std::size_t n = 0;
  std::vector<SparseVec> left;   // [b * n + p] -> b p*
  std::vector<SparseVec> right;  // [p * n + b] -> p* b

  explicit DualTables(const StructAlgebra& s) : n(s.dim()), left(n * n), right(n * n) {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t b = 0; b < n; ++b) {
        if (s.target(q) == s.source(b))
          for (const auto& [k, c] : s.product(q, b)) left[b * n + k].emplace_back(q, c);
        if (s.target(b) == s.source(q))
          for (const auto& [k, c] : s.product(b, q)) right[k * n + b].emplace_back(q, c);
      }
  }
};

inline SparseVec shift_sparse(const SparseVec& v, std::size_t offset) {
  SparseVec out;
  for (const auto& [k, c] : v) out.emplace_back(k + offset, c);
  return out;
}

}  // namespace detail

inline BoundQuiverAlgebra renamed(const BoundQuiverAlgebra& a, const std::string& name) {
  return BoundQuiverAlgebra(name, a.quiver(), a.relations(), a.basis(), a.structure());
}

/// B ⋉ DB.  Basis: the paths of B followed by their duals.
inline StructAlgebra trivial_extension(const BoundQuiverAlgebra& b) {
  const StructAlgebra& s = b.structure();
  const std::size_t n = s.dim();
  StructAlgebra t("T(" + b.name() + ")", b.quiver().vertices());
  for (std::size_t x = 0; x < n; ++x) t.add_basis(s.label(x), s.source(x), s.target(x));
  for (std::size_t p = 0; p < n; ++p) t.add_basis(detail::dual_label(s.label(p)), s.target(p), s.source(p));
  t.finalize_basis(s.idempotents());
  const detail::DualTables dt(s);
  for (std::size_t a = 0; a < n; ++a) {
    if (s.is_idempotent(a)) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (s.is_idempotent(c)) continue;
      if (s.target(a) == s.source(c)) t.set_product(a, c, s.product(a, c));
      if (s.target(a) == s.target(c)) t.set_product(a, n + c, detail::shift_sparse(dt.left[a * n + c], n));
      if (s.source(c) == s.source(a)) t.set_product(n + c, a, detail::shift_sparse(dt.right[c * n + a], n));
    }
  }
  return t;
}

/// Layers 0..n-1 of the repetitive category.  Vertex (m, i) is named i
/// followed by m primes and tagged {m, i}.
inline StructAlgebra replicated(const BoundQuiverAlgebra& b, std::size_t layers) {
  if (layers == 0) throw Error("bad_argument", "replicated: at least one layer required");
  const StructAlgebra& s = b.structure();
  const std::size_t n = s.dim();
  const std::size_t nv = b.num_vertices();
  std::vector<std::string> names;
  std::vector<GradingTag> tags;
  for (std::size_t m = 0; m < layers; ++m)
    for (std::size_t i = 0; i < nv; ++i) {
      names.push_back(b.quiver().vertex(i) + detail::primes(static_cast<int>(m)));
      tags.push_back({static_cast<int>(m), i});
    }
  const std::string name = layers == 1 ? b.name() : b.name() + "^(" + std::to_string(layers) + ")";
  StructAlgebra r(name, names);
  auto vert = [&](std::size_t m, std::size_t i) { return m * nv + i; };
  for (std::size_t m = 0; m < layers; ++m)
    for (std::size_t x = 0; x < n; ++x)
      r.add_basis(s.label(x) + detail::primes(static_cast<int>(m)), vert(m, s.source(x)),
                  vert(m, s.target(x)));
  for (std::size_t m = 1; m < layers; ++m)
    for (std::size_t p = 0; p < n; ++p)
      r.add_basis(detail::dual_label(s.label(p)) + detail::primes(static_cast<int>(m) - 1), vert(m, s.target(p)),
                  vert(m - 1, s.source(p)));
  auto bidx = [&](std::size_t m, std::size_t x) { return m * n + x; };
  auto didx = [&](std::size_t m, std::size_t p) { return layers * n + (m - 1) * n + p; };
  std::vector<std::size_t> idem;
  for (std::size_t m = 0; m < layers; ++m)
    for (std::size_t i = 0; i < nv; ++i) idem.push_back(bidx(m, s.idempotent(i)));
  r.finalize_basis(idem);
  const detail::DualTables dt(s);
  auto remap = [](const SparseVec& v, auto f) {
    SparseVec out;
    for (const auto& [k, c] : v) out.emplace_back(f(k), c);
    return out;
  };
  for (std::size_t m = 0; m < layers; ++m)
    for (std::size_t a = 0; a < n; ++a) {
      if (s.is_idempotent(a)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (s.is_idempotent(c)) continue;
        if (s.target(a) == s.source(c))
          r.set_product(bidx(m, a), bidx(m, c), remap(s.product(a, c), [&](std::size_t k) { return bidx(m, k); }));
        // a in layer m times the dual c* in layer m
        if (m >= 1 && s.target(a) == s.target(c))
          r.set_product(bidx(m, a), didx(m, c), remap(dt.left[a * n + c], [&](std::size_t k) { return didx(m, k); }));
        // the dual c* in layer m + 1 times a in layer m
        if (m + 1 < layers && s.source(c) == s.source(a))
          r.set_product(didx(m + 1, c), bidx(m, a),
                        remap(dt.right[c * n + a], [&](std::size_t k) { return didx(m + 1, k); }));
      }
    }
  r.set_tags(std::move(tags));
  return r;
}

inline StructAlgebra duplicated(const BoundQuiverAlgebra& b) {
  StructAlgebra r = replicated(b, 2);
  r.set_name(b.name() + "^dup");
  return r;
}

/// Moves every tag (m, i) to (m + k, i) and renames vertices accordingly.
inline StructAlgebra nakayama_shift(const StructAlgebra& s, int k) {
  if (!s.has_tags()) throw Error("unlabelled", "nakayama_shift: algebra carries no (layer, vertex) labels");
  StructAlgebra out = s;
  std::vector<GradingTag> tags = s.tags();
  std::vector<std::string> names = s.vertex_names();
  for (std::size_t v = 0; v < tags.size(); ++v) {
    const std::string old = detail::primes(tags[v].layer);
    std::string base = names[v];
    if (base.size() >= old.size() && base.compare(base.size() - old.size(), old.size(), old) == 0)
      base.resize(base.size() - old.size());
    tags[v].layer += k;
    names[v] = base + detail::primes(tags[v].layer);
  }
  out.set_tags(std::move(tags));
  out.set_vertex_names(std::move(names));
  return out;
}

struct Reflection {
  BoundQuiverAlgebra s_plus;  // objects (0, j), j != i, and (1, i)
  BoundQuiverAlgebra t_plus;  // objects (0, j) and (1, i)
};

inline Reflection reflect_sink(const BoundQuiverAlgebra& b, std::size_t i) {
  if (i >= b.num_vertices()) throw Error("bad_vertex", "reflect_sink: vertex out of range");
  if (!b.quiver().is_sink(i)) throw Error("not_a_sink", "vertex " + b.quiver().vertex(i) + " is not a sink");
  const std::size_t nv = b.num_vertices();
  const StructAlgebra r = replicated(b, 2);
  std::vector<std::size_t> s_keep, t_keep;
  for (std::size_t j = 0; j < nv; ++j) {
    s_keep.push_back(j == i ? nv + i : j);
    t_keep.push_back(j);
  }
  t_keep.push_back(nv + i);
  const std::string& v = b.quiver().vertex(i);
  StructAlgebra s_sub = idempotent_subalgebra(r, s_keep);
  s_sub.set_name("S" + v + "+" + b.name());
  StructAlgebra t_sub = idempotent_subalgebra(r, t_keep);
  t_sub.set_name("T" + v + "+" + b.name());
  return {presentation_from_struct(s_sub).algebra, presentation_from_struct(t_sub).algebra};
}

/// B[M]: a new source vertex w with e_w A e_v = M_v.
inline BoundQuiverAlgebra one_point_extension(const AlgebraPtr& b, const Representation& m,
                                              const std::string& vertex_name = "w") {
  if (m.algebra_ptr() != b && !m.algebra().same_quiver(*b))
    throw Error("algebra_mismatch", "one_point_extension: module is over another algebra");
  const StructAlgebra& s = b->structure();
  const std::size_t n = s.dim();
  const std::size_t nv = b->num_vertices();
  std::vector<std::string> names = b->quiver().vertices();
  if (b->quiver().find_vertex(vertex_name)) throw Error("bad_vertex", "vertex name '" + vertex_name + "' is taken");
  names.push_back(vertex_name);
  StructAlgebra e(b->name() + "[" + (m.name().empty() ? std::string("M") : m.name()) + "]", names);
  for (std::size_t x = 0; x < n; ++x) e.add_basis(s.label(x), s.source(x), s.target(x));
  const std::size_t ew = e.add_basis("e" + vertex_name, nv, nv);
  std::vector<std::size_t> first(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    first[v] = e.dim();
    for (std::size_t k = 0; k < m.dim(v); ++k)
      e.add_basis("m_" + b->quiver().vertex(v) + "_" + std::to_string(k + 1), nv, v);
  }
  std::vector<std::size_t> idem = s.idempotents();
  idem.push_back(ew);
  e.finalize_basis(idem);
  for (std::size_t a = 0; a < n; ++a) {
    if (s.is_idempotent(a)) continue;
    for (std::size_t c = 0; c < n; ++c)
      if (!s.is_idempotent(c) && s.target(a) == s.source(c)) e.set_product(a, c, s.product(a, c));
    const std::size_t v = s.source(a), t = s.target(a);
    const Matrix act = m.basis_action(a);
    for (std::size_t k = 0; k < m.dim(v); ++k) {
      SparseVec out;
      for (std::size_t l = 0; l < m.dim(t); ++l)
        if (!act(k, l).is_zero()) out.emplace_back(first[t] + l, act(k, l));
      e.set_product(first[v] + k, a, std::move(out));
    }
  }
  e.check_associative();
  return presentation_from_struct(e).algebra;
}

}  // namespace qra

#endif  // QRA_CONSTRUCTIONS_HPP
