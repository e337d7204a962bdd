#ifndef QRA_APPROX_HPP
#define QRA_APPROX_HPP

// Endomorphism algebras of multiplicity-free modules, add(M)-approximations,
// approximating sequences and Auslander generator certificates.
//
// For M = M_1 + ... + M_t the basis element of End(M) with source i and
// target j is a morphism M_j -> M_i, and x * y is "first y, then x".  With
// this convention End(A_A) is A itself and Hom(M, X) = sum_i Hom(M_i, X) is a
// right module: h . g = h o g.

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qra/homological.hpp"
#include "qra/presentation.hpp"
#include "qra/repcat.hpp"

namespace qra {

namespace detail {

inline Vec flatten(const Morphism& f) {
  Vec v;
  for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

inline Morphism unflatten(const Vec& v, const Representation& x, const Representation& y) {
  Morphism f = zero_morphism(x, y);
  std::size_t k = 0;
  for (auto& b : f.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = v[k++];
  return f;
}

/// Coordinates with respect to a linearly independent list of morphisms.
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(const std::vector<Morphism>& basis) : size_(basis.size()) {
    if (basis.empty()) return;
    std::vector<Vec> rows;
    for (const auto& f : basis) rows.push_back(flatten(f));
    const Matrix b = Matrix::from_rows(rows, rows[0].size());
    pivots_ = rref(b).pivots;
    if (pivots_.size() != size_) throw Error("internal", "Coordinates: dependent basis");
    Matrix c(size_, size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) c(i, j) = b(i, pivots_[j]);
    inv_ = *inverse(c);
  }
  std::size_t size() const { return size_; }
  Vec operator()(const Morphism& f) const {
    if (size_ == 0) return {};
    const Vec v = flatten(f);
    Matrix row(1, size_);
    for (std::size_t j = 0; j < size_; ++j) row(0, j) = v[pivots_[j]];
    return (row * inv_).row(0);
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::size_t> pivots_;
  Matrix inv_;
};

inline std::string vertex_token(const std::string& name, std::size_t i) {
  bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ok = false;
  return ok ? name : "M" + std::to_string(i + 1);
}

}  // namespace detail

struct EndAlgebra {
  std::vector<Representation> parts;
  std::vector<std::vector<std::vector<Morphism>>> hom;  // hom[i][j]: basis of Hom(M_j, M_i)
  std::vector<std::vector<std::size_t>> first;           // first[i][j]: index of hom[i][j][0]
  StructAlgebra structure;
  AlgebraPtr algebra;  // presented, same vertex order
  std::vector<Vec> arrow_elements;
  std::vector<std::string> warnings;

  std::size_t size() const { return parts.size(); }
  std::size_t dim() const { return structure.dim(); }
  std::vector<std::vector<std::size_t>> hom_table() const {
    std::vector<std::vector<std::size_t>> t(size(), std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) t[i][j] = hom[j][i].size();  // dim Hom(M_i, M_j)
    return t;
  }
  /// Basis of rad Hom(M_i, M_j) as morphisms M_i -> M_j.
  std::vector<Morphism> radical_maps(std::size_t i, std::size_t j) const {
    const auto& h = hom[j][i];
    if (i != j) return h;
    return std::vector<Morphism>(h.begin() + 1, h.end());
  }
};

/// Deduplicated list of indecomposable summands, in first-occurrence order.
inline std::vector<Representation> indecomposable_parts(const std::vector<Representation>& mods,
                                                        std::vector<std::string>* warnings = nullptr) {
  std::vector<Representation> flat;
  for (const auto& m : mods) {
    if (m.is_zero()) continue;
    if (is_indecomposable(m)) {
      flat.push_back(m);
      continue;
    }
    if (warnings) warnings->push_back("split decomposable input " + (m.name().empty() ? "?" : m.name()));
    for (auto& s : decompose(m)) flat.push_back(s.module);
  }
  std::vector<Representation> out;
  for (const auto& c : group_isoclasses(flat)) {
    out.push_back(c.module);
    if (c.multiplicity > 1 && warnings)
      warnings->push_back("dropped " + std::to_string(c.multiplicity - 1) + " duplicate(s) of " +
                          (c.module.name().empty() ? "?" : c.module.name()));
  }
  return out;
}

inline EndAlgebra end_algebra(const std::vector<Representation>& input, bool deduplicate = true) {
  EndAlgebra e;
  e.parts = deduplicate ? indecomposable_parts(input, &e.warnings) : input;
  const std::size_t t = e.parts.size();
  if (t == 0) throw Error("bad_argument", "end_algebra: no modules");
  for (std::size_t i = 1; i < t; ++i) require_same_algebra(e.parts[0], e.parts[i]);
  e.hom.assign(t, std::vector<std::vector<Morphism>>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      auto b = hom_basis(e.parts[j], e.parts[i]);
      if (i == j) {
        // identity first, then a trace-zero complement (the radical of a local ring)
        const Representation& m = e.parts[i];
        const Scalar inv_dim = Scalar(static_cast<std::int64_t>(m.total_dim())).inverse();
        std::vector<Vec> rows;
        for (const auto& f : b) {
          const Scalar tr = trace(total_matrix(f));
          rows.push_back(detail::flatten(add(f, scale(-(tr * inv_dim), identity_morphism(m)))));
        }
        const Matrix rb = rows.empty() ? Matrix() : row_basis(Matrix::from_rows(rows, rows[0].size()));
        std::vector<Morphism> nb{identity_morphism(m)};
        for (std::size_t r = 0; r < rb.rows(); ++r) nb.push_back(detail::unflatten(rb.row(r), m, m));
        if (nb.size() != b.size()) throw Error("not_indecomposable", "end_algebra: summand with non-local endomorphism ring");
        b = std::move(nb);
      }
      e.hom[i][j] = std::move(b);
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t; ++i) {
    std::string n = detail::vertex_token(e.parts[i].name(), i);
    if (std::find(names.begin(), names.end(), n) != names.end()) n = "M" + std::to_string(i + 1);
    names.push_back(n);
  }
  StructAlgebra s("End(M)", names);
  e.first.assign(t, std::vector<std::size_t>(t));
  std::vector<std::size_t> idem(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      e.first[i][j] = s.dim();
      for (std::size_t k = 0; k < e.hom[i][j].size(); ++k) {
        const std::string label = i == j && k == 0 ? "e_" + names[i] : names[i] + "_" + names[j] + "_" + std::to_string(k);
        s.add_basis(label, i, j);
      }
      if (i == j) idem[i] = e.first[i][i];
    }
  s.finalize_basis(idem);
  std::vector<std::vector<detail::Coordinates>> coords(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) coords[i].emplace_back(e.hom[i][j]);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k)
        for (std::size_t x = 0; x < e.hom[i][j].size(); ++x) {
          if (i == j && x == 0) continue;
          for (std::size_t y = 0; y < e.hom[j][k].size(); ++y) {
            if (j == k && y == 0) continue;
            const Vec c = coords[i][k](compose(e.hom[j][k][y], e.hom[i][j][x]));
            SparseVec out;
            for (std::size_t z = 0; z < c.size(); ++z)
              if (!c[z].is_zero()) out.emplace_back(e.first[i][k] + z, c[z]);
            s.set_product(e.first[i][j] + x, e.first[j][k] + y, std::move(out));
          }
        }
  s.check_modulus();
  PresentationOptions opt;
  opt.minimize_relations = false;
  auto p = presentation_from_struct(s, opt);
  e.arrow_elements = p.arrow_elements;
  e.algebra = std::make_shared<const BoundQuiverAlgebra>(std::move(p.algebra));
  e.structure = std::move(s);
  return e;
}

/// sum_i Hom(M_i, X) as a right End(M)-module over the presented algebra.
struct HomModule {
  Representation module;
  std::vector<std::vector<Morphism>> basis;  // basis[i]: Hom(M_i, X)
};

inline HomModule hom_into(const EndAlgebra& e, const Representation& x) {
  const std::size_t t = e.size();
  HomModule h;
  std::vector<detail::Coordinates> coords;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < t; ++i) {
    h.basis.push_back(hom_basis(e.parts[i], x));
    coords.emplace_back(h.basis.back());
    dims.push_back(h.basis.back().size());
  }
  const Quiver& q = e.algebra->quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const std::size_t i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(dims[i], dims[j]);
    const Vec& el = e.arrow_elements[a];
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (el[b].is_zero()) continue;
      const Morphism& g = e.hom[i][j][b - e.first[i][j]];  // M_j -> M_i
      for (std::size_t r = 0; r < dims[i]; ++r) {
        const Vec c = coords[j](compose(g, h.basis[i][r]));
        for (std::size_t k = 0; k < dims[j]; ++k) m(r, k) += el[b] * c[k];
      }
    }
    maps.push_back(std::move(m));
  }
  h.module = Representation(e.algebra, std::move(dims), std::move(maps), x.name().empty() ? "" : "Hom(M," + x.name() + ")");
  h.module.validate();
  return h;
}

// ---------------------------------------------------------------------------
// Approximations.

struct Approximation {
  Representation m0;
  Morphism q;                            // M_0 -> X
  std::vector<std::size_t> summands;     // part index of each summand of M_0, in order
  std::vector<std::size_t> multiplicity; // c_i from the top of Hom(M, X)
  std::vector<std::size_t> deletion_multiplicity;  // survivors of the deletion test
  bool oracles_agree = false;
};

namespace detail {

struct Generator {
  std::size_t part;
  Morphism map;  // M_part -> X
};

/// Does every Hom(M_i, X) lie in the span of the maps M_i -> M_s -> X?
inline std::optional<std::size_t> approximation_fails(const EndAlgebra& e, const std::vector<Generator>& gens,
                                                      const std::vector<std::vector<Morphism>>& hx) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (hx[i].empty()) continue;
    std::vector<Vec> rows;
    for (const auto& g : gens)
      for (const auto& f : e.hom[g.part][i]) rows.push_back(flatten(compose(f, g.map)));
    const std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(rows, rows[0].size()));
    if (r < hx[i].size()) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Top of Hom(M, X): per part, a complement of the image of the radical maps.
inline std::vector<std::vector<Morphism>> top_generators(const EndAlgebra& e, const Representation& x,
                                                         const std::vector<std::vector<Morphism>>& hx) {
  const std::size_t t = e.size();
  std::vector<std::vector<Morphism>> out(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (hx[i].empty()) continue;
    detail::Coordinates c(hx[i]);
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < t; ++j)
      for (const auto& g : e.radical_maps(i, j))
        for (const auto& h : hx[j]) rows.push_back(c(compose(g, h)));
    const std::size_t n = hx[i].size();
    const Matrix rad = rows.empty() ? Matrix(0, n) : row_basis(Matrix::from_rows(rows, n));
    const Matrix comp = complement_rows(rad, n);
    for (std::size_t r = 0; r < comp.rows(); ++r) out[i].push_back(combination(hx[i], comp.row(r), e.parts[i], x));
  }
  return out;
}

/// Counts per part surviving greedy deletion from the universal approximation
/// (every basis map of every Hom(M_i, X)).  An irredundant generating set of
/// Hom(M, X) has exactly top-many members of each type.
inline std::vector<std::size_t> deletion_test(const EndAlgebra& e, const std::vector<std::vector<Morphism>>& hx) {
  std::vector<detail::Generator> gens;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& h : hx[i]) gens.push_back({i, h});
  for (std::size_t k = gens.size(); k-- > 0;) {
    auto trial = gens;
    trial.erase(trial.begin() + static_cast<long>(k));
    if (!detail::approximation_fails(e, trial, hx)) gens = std::move(trial);
  }
  std::vector<std::size_t> count(e.size(), 0);
  for (const auto& g : gens) ++count[g.part];
  return count;
}

/// M_0 = sum of parts with the given generator maps; q is their sum.
inline Approximation approximation_from(const EndAlgebra& e, const Representation& x,
                                        const std::vector<std::vector<Morphism>>& gens) {
  Approximation ap;
  std::vector<Representation> mods;
  std::vector<const Morphism*> maps;
  ap.multiplicity.assign(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& g : gens[i]) {
      mods.push_back(e.parts[i]);
      maps.push_back(&g);
      ap.summands.push_back(i);
      ++ap.multiplicity[i];
    }
  auto ds = direct_sum(mods, x.algebra_ptr());
  ap.m0 = ds.module;
  ap.q = zero_morphism(ap.m0, x);
  for (std::size_t s = 0; s < mods.size(); ++s) ap.q = add(ap.q, compose(ds.projections[s], *maps[s]));
  return ap;
}

/// Minimal add(M)-approximation of X, with the deletion test as a second
/// oracle for the multiplicities.
inline Approximation minimal_approximation(const EndAlgebra& e, const Representation& x) {
  std::vector<std::vector<Morphism>> hx;
  for (const auto& m : e.parts) hx.push_back(hom_basis(m, x));
  Approximation ap = approximation_from(e, x, top_generators(e, x, hx));
  if (!is_surjective(ap.q)) {
    auto c = cokernel(x, ap.q);
    std::string dims;
    for (auto d : c.module.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    throw Error("not_generated", "module is not generated by M; cokernel dimension vector (" + dims + ")");
  }
  ap.deletion_multiplicity = deletion_test(e, hx);
  ap.oracles_agree = ap.deletion_multiplicity == ap.multiplicity;
  return ap;
}

// ---------------------------------------------------------------------------
// Approximating sequences.

/// Some v: A -> B with "v then via" equal to target, if one exists.
inline std::optional<Morphism> factor_through(const Representation& a, const Representation& b, const Morphism& via,
                                              const Morphism& target) {
  const auto basis = hom_basis(a, b);
  const Vec rhs = detail::flatten(target);
  if (basis.empty()) {
    if (is_zero_vec(rhs)) return zero_morphism(a, b);
    return std::nullopt;
  }
  std::vector<Vec> rows;
  for (const auto& f : basis) rows.push_back(detail::flatten(compose(f, via)));
  if (rhs.empty()) return zero_morphism(a, b);
  auto sol = solve_left(Matrix::from_rows(rows, rhs.size()), Matrix::from_rows({rhs}, rhs.size()));
  if (!sol) return std::nullopt;
  return combination(basis, sol->row(0), a, b);
}

struct KernelSummand {
  Representation module;
  std::optional<std::size_t> part;  // index into the parts, if in add M
};

struct ApproximatingSequence {
  Representation m1, m0, x;
  Morphism r, q;  // M_1 -> M_0 -> X
  std::vector<std::size_t> m0_summands;
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> deletion_multiplicity;
  std::vector<KernelSummand> kernel_summands;
  bool kernel_in_add = false;
  bool minimal = false;   // built minimal
  bool oracles_agree = false;
};

inline std::optional<std::size_t> find_part(const EndAlgebra& e, const Representation& m) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.parts[i].dims() == m.dims() && module_iso(e.parts[i], m).isomorphic) return i;
  return std::nullopt;
}

inline void classify_kernel(const EndAlgebra& e, ApproximatingSequence& s) {
  s.kernel_summands.clear();
  s.kernel_in_add = true;
  if (s.m1.is_zero()) return;
  for (auto& d : decompose(s.m1)) {
    auto p = find_part(e, d.module);
    if (!p) s.kernel_in_add = false;
    s.kernel_summands.push_back({d.module, p});
  }
}

/// 0 -> ker q -> M_0 -> X -> 0 with q a minimal approximation.  The kernel is
/// decomposed and matched against the parts.
inline ApproximatingSequence approximating_sequence(const EndAlgebra& e, const Representation& x) {
  auto ap = minimal_approximation(e, x);
  ApproximatingSequence s;
  s.x = x;
  s.m0 = ap.m0;
  s.q = ap.q;
  s.m0_summands = ap.summands;
  s.multiplicity = ap.multiplicity;
  s.deletion_multiplicity = ap.deletion_multiplicity;
  s.oracles_agree = ap.oracles_agree;
  s.minimal = true;
  auto k = kernel(s.m0, s.q);
  s.m1 = k.module;
  s.r = k.inclusion;
  classify_kernel(e, s);
  return s;
}

/// Adds the part `extra` to M_0, mapping to X by `h` (zero by default); the
/// result is again an approximating sequence but no longer minimal.
inline ApproximatingSequence pad_sequence(const EndAlgebra& e, const ApproximatingSequence& s, std::size_t extra,
                                          std::optional<Morphism> h = std::nullopt) {
  ApproximatingSequence p = s;
  const Representation& m = e.parts[extra];
  auto ds = direct_sum({s.m0, m}, s.x.algebra_ptr());
  p.m0 = ds.module;
  p.q = add(compose(ds.projections[0], s.q), compose(ds.projections[1], h ? *h : zero_morphism(m, s.x)));
  p.m0_summands.push_back(extra);
  auto k = kernel(p.m0, p.q);
  p.m1 = k.module;
  p.r = k.inclusion;
  p.minimal = false;
  classify_kernel(e, p);
  return p;
}

/// Removes the summand at position `pos` of M_0 (keeping the rest of q).
inline ApproximatingSequence drop_summand(const EndAlgebra& e, const ApproximatingSequence& s, std::size_t pos) {
  std::vector<Representation> mods;
  for (auto i : s.m0_summands) mods.push_back(e.parts[i]);
  auto full = direct_sum(mods, s.x.algebra_ptr());
  ApproximatingSequence p = s;
  mods.erase(mods.begin() + static_cast<long>(pos));
  p.m0_summands.erase(p.m0_summands.begin() + static_cast<long>(pos));
  auto ds = direct_sum(mods, s.x.algebra_ptr());
  p.m0 = ds.module;
  p.q = zero_morphism(p.m0, s.x);
  for (std::size_t k = 0, src = 0; k < mods.size(); ++k, ++src) {
    if (src == pos) ++src;
    p.q = add(p.q, compose(ds.projections[k], compose(full.inclusions[src], s.q)));
  }
  auto k = kernel(p.m0, p.q);
  p.m1 = k.module;
  p.r = k.inclusion;
  p.minimal = false;
  classify_kernel(e, p);
  return p;
}

struct FMReport {
  bool exact_sequence = false;      // r injective, q surjective, r q = 0, dimensions add up
  bool hom_exact = false;           // 0 -> (M', M_1) -> (M', M_0) -> (M', X) -> 0 for every part M'
  std::optional<std::size_t> witness;  // first part where Hom-exactness fails
  bool projective_cover = false;    // summand census of M_0 equals the top of Hom(M, X)
  bool right_minimal = false;       // every g with g q = q is invertible
  bool in_add = false;              // M_0 and M_1 in add M
  bool fm_resolution = false;       // all of the above except right_minimal
  bool minimality_consistent = false;  // fm_resolution == (approximating and right minimal)
  std::vector<std::size_t> census;  // M_0 summand counts per part
  std::vector<std::size_t> top;     // top multiplicities
};

namespace detail {

/// rank of the map Hom(M', A) -> Hom(M', B) given by composing with f.
inline std::size_t hom_rank(const Representation& m, const Representation& a, const Morphism& f) {
  auto b = hom_basis(m, a);
  if (b.empty()) return 0;
  std::vector<Vec> rows;
  for (const auto& g : b) rows.push_back(flatten(compose(g, f)));
  if (rows[0].empty()) return 0;
  return rank(Matrix::from_rows(rows, rows[0].size()));
}

/// q right minimal iff N = {g : g q = 0} consists of nilpotents; N is closed
/// under precomposition, so this is tr(h g) = 0 for h in End M_0, g in N.
inline bool right_minimal(const Representation& m0, const Morphism& q) {
  if (m0.is_zero()) return true;
  auto end = hom_basis(m0, m0);
  std::vector<Vec> rows;
  for (const auto& g : end) rows.push_back(flatten(compose(g, q)));
  const Vec probe = rows.empty() ? Vec{} : rows[0];
  if (probe.empty()) return end.empty();
  const Matrix sol = left_nullspace(Matrix::from_rows(rows, probe.size()));
  for (std::size_t k = 0; k < sol.rows(); ++k) {
    const Morphism g = combination(end, sol.row(k), m0, m0);
    for (const auto& h : end)
      if (!trace(total_matrix(compose(h, g))).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

inline FMReport verify_fm_resolution(const EndAlgebra& e, const ApproximatingSequence& s) {
  FMReport rep;
  const bool zero_rq = is_zero_morphism(compose(s.r, s.q));
  rep.exact_sequence = zero_rq && is_injective(s.r) && is_surjective(s.q) &&
                       s.m1.total_dim() + s.x.total_dim() == s.m0.total_dim();
  rep.hom_exact = rep.exact_sequence;
  for (std::size_t i = 0; i < e.size() && rep.hom_exact; ++i) {
    const Representation& m = e.parts[i];
    const std::size_t h1 = hom_dim(m, s.m1), h0 = hom_dim(m, s.m0), hx = hom_dim(m, s.x);
    const bool ok = detail::hom_rank(m, s.m1, s.r) == h1 && detail::hom_rank(m, s.m0, s.q) == hx && h0 == h1 + hx;
    if (!ok) {
      rep.hom_exact = false;
      rep.witness = i;
    }
  }
  rep.census.assign(e.size(), 0);
  rep.in_add = true;
  if (!s.m0.is_zero())
    for (auto& d : decompose(s.m0)) {
      auto p = find_part(e, d.module);
      if (p)
        ++rep.census[*p];
      else
        rep.in_add = false;
    }
  if (!s.m1.is_zero())
    for (auto& d : decompose(s.m1))
      if (!find_part(e, d.module)) rep.in_add = false;
  std::vector<std::vector<Morphism>> hx;
  for (const auto& m : e.parts) hx.push_back(hom_basis(m, s.x));
  for (const auto& g : top_generators(e, s.x, hx)) rep.top.push_back(g.size());
  rep.projective_cover = rep.census == rep.top;
  rep.right_minimal = detail::right_minimal(s.m0, s.q);
  rep.fm_resolution = rep.hom_exact && rep.in_add && rep.projective_cover;
  rep.minimality_consistent = rep.fm_resolution == (rep.hom_exact && rep.in_add && rep.right_minimal);
  return rep;
}

/// Section/retraction pairs exhibiting the minimal sequence as a direct
/// summand of another approximating sequence of the same X.
struct SummandWitness {
  Morphism v, v_ret;  // M_0 -> M_0', M_0' -> M_0, v then v_ret = id
  Morphism u, u_ret;  // M_1 -> M_1', M_1' -> M_1
  bool valid = false;
};

inline std::optional<SummandWitness> summand_witness(const ApproximatingSequence& min, const ApproximatingSequence& other) {
  auto v = factor_through(min.m0, other.m0, other.q, min.q);
  auto w = factor_through(other.m0, min.m0, min.q, other.q);
  if (!v || !w) return std::nullopt;
  auto inv = inverse_morphism(compose(*v, *w));
  if (!inv) return std::nullopt;
  SummandWitness sw;
  sw.v = *v;
  sw.v_ret = compose(*w, *inv);
  // restrictions to the kernels
  auto restrict_to = [](const Morphism& incl_a, const Morphism& map, const Morphism& incl_b) -> std::optional<Morphism> {
    Morphism out;
    const Morphism target = compose(incl_a, map);
    for (std::size_t t = 0; t < target.blocks.size(); ++t) {
      if (target.blocks[t].rows() == 0 || incl_b.blocks[t].rows() == 0) {
        out.blocks.emplace_back(target.blocks[t].rows(), incl_b.blocks[t].rows());
        if (!target.blocks[t].is_zero()) return std::nullopt;
        continue;
      }
      auto sol = solve_left(incl_b.blocks[t], target.blocks[t]);
      if (!sol) return std::nullopt;
      out.blocks.push_back(*sol);
    }
    return out;
  };
  auto u = restrict_to(min.r, sw.v, other.r);
  auto ur = restrict_to(other.r, sw.v_ret, min.r);
  if (!u || !ur) return std::nullopt;
  sw.u = *u;
  sw.u_ret = *ur;
  const bool m0_ok = is_morphism(min.m0, other.m0, sw.v) && is_morphism(other.m0, min.m0, sw.v_ret) &&
                     compose(sw.v, sw.v_ret).blocks == identity_morphism(min.m0).blocks &&
                     compose(sw.v, other.q).blocks == min.q.blocks;
  const bool m1_ok = is_morphism(min.m1, other.m1, sw.u) && is_morphism(other.m1, min.m1, sw.u_ret) &&
                     compose(sw.u, sw.u_ret).blocks == identity_morphism(min.m1).blocks &&
                     compose(sw.u, other.r).blocks == compose(min.r, sw.v).blocks;
  sw.valid = m0_ok && m1_ok;
  return sw;
}

// ---------------------------------------------------------------------------
// Quasitube algebras: the sequence built from the restriction to A-.

namespace detail {

/// Blocks of a morphism between modules over a full subalgebra, placed at the
/// matching vertices of the ambient algebra.
inline Morphism extend_morphism_by_zero(const Morphism& f, const Representation& x, const Representation& y,
                                        const AlgebraPtr& a) {
  const auto& sq = x.algebra().quiver();
  const Representation ex = extend_by_zero(x, a), ey = extend_by_zero(y, a);
  Morphism g = zero_morphism(ex, ey);
  for (std::size_t v = 0; v < sq.num_vertices(); ++v) g.blocks[a->quiver().vertex_index(sq.vertex(v))] = f.blocks[v];
  return g;
}

}  // namespace detail

struct QuasitubeSplit {
  Representation y;         // restriction of X to A-, as a submodule of X
  Representation quotient;  // X / Y
  Representation p;         // projective cover of X / Y
  Representation l_prime;   // kernel of P -> X / Y
  ApproximatingSequence over_minus;  // 0 -> L -> N_0 -> Y -> 0 over A-
  Representation l, n0;     // L and N_0 over A
  Representation k;         // kernel of t
  Morphism t;               // N_0 + P -> X
  bool t_surjective = false;
  bool split = false;       // K isomorphic to L + L'
  std::optional<Morphism> split_witness;
  bool l_prime_supported = false;     // L' lives on A-
  bool l_prime_injective = false;     // and is injective there
  bool k_in_add_n = false;
};

/// n: end algebra of N = A- + T- + DA- (modules over the subalgebra `sub` on
/// the vertices `minus`).
inline QuasitubeSplit quasitube_split(const EndAlgebra& n, const AlgebraPtr& sub, const std::vector<std::size_t>& minus,
                                      const Representation& x) {
  const AlgebraPtr& a = x.algebra_ptr();
  QuasitubeSplit qs;
  auto res = restrict_to_quotient(x, minus, sub);
  if (res.module.is_zero()) throw Error("zero_restriction", "module has zero restriction to the subalgebra");
  qs.y = res.as_submodule;
  qs.over_minus = approximating_sequence(n, res.module);
  qs.l = extend_by_zero(qs.over_minus.m1, a);
  qs.n0 = extend_by_zero(qs.over_minus.m0, a);
  const Morphism q = detail::extend_morphism_by_zero(qs.over_minus.q, qs.over_minus.m0, res.module, a);
  const Morphism iq = compose(q, res.inclusion);
  Subspace ysub;
  for (std::size_t v = 0; v < x.dims().size(); ++v) ysub.push_back(res.inclusion.blocks[v]);
  auto quo = quotient(x, ysub);
  qs.quotient = quo.module;
  auto pc = projective_cover(qs.quotient);
  qs.p = pc.module;
  auto lp = kernel(qs.p, pc.map);
  qs.l_prime = lp.module;
  auto g = factor_through(qs.p, x, quo.projection, pc.map);
  if (!g) throw Error("internal", "projective cover does not lift");
  auto ds = direct_sum({qs.n0, qs.p}, a);
  qs.t = add(compose(ds.projections[0], iq), compose(ds.projections[1], *g));
  qs.t_surjective = is_surjective(qs.t);
  qs.k = kernel(ds.module, qs.t).module;
  auto iso = module_iso(qs.k, direct_sum({qs.l, qs.l_prime}, a).module);
  qs.split = iso.isomorphic;
  qs.split_witness = iso.witness;
  auto lr = restrict_to_quotient(qs.l_prime, minus, sub);
  qs.l_prime_supported = lr.module.total_dim() == qs.l_prime.total_dim();
  qs.l_prime_injective = qs.l_prime_supported && (lr.module.is_zero() || is_injective_module(lr.module));
  qs.k_in_add_n = true;
  if (!qs.k.is_zero())
    for (auto& d : decompose(qs.k)) {
      auto r = restrict_to_quotient(d.module, minus, sub);
      if (r.module.total_dim() != d.module.total_dim() || !find_part(n, r.module)) qs.k_in_add_n = false;
    }
  return qs;
}

// ---------------------------------------------------------------------------
// Generators.

enum class GeneratorMode { tilted, quasitube, glued };

inline std::string mode_name(GeneratorMode m) {
  switch (m) {
    case GeneratorMode::tilted: return "tilted";
    case GeneratorMode::quasitube: return "quasitube";
    case GeneratorMode::glued: return "glued";
  }
  return "?";
}

struct GeneratorRecipe {
  GeneratorMode mode = GeneratorMode::tilted;
  std::vector<Representation> modules;       // slice modules, glued-strip modules; subalgebra modules allowed
  std::vector<std::size_t> minus_vertices;   // quasitube: the vertices of A-, for DA-
};

struct AssembledGenerator {
  std::vector<Representation> parts;
  Representation module;
  std::vector<std::string> warnings;
};

/// A + DA + the recipe modules (+ DA- in quasitube mode), without repeats.
inline AssembledGenerator assemble_generator(const AlgebraPtr& a, const GeneratorRecipe& recipe) {
  std::vector<Representation> mods;
  const Quiver& q = a->quiver();
  for (std::size_t v = 0; v < a->num_vertices(); ++v) mods.push_back(projective(a, v));
  for (std::size_t v = 0; v < a->num_vertices(); ++v) mods.push_back(injective(a, v));
  for (const auto& m : recipe.modules) {
    if (m.algebra_ptr() == a || m.algebra().same_quiver(*a)) {
      mods.push_back(m);
      continue;
    }
    for (const auto& v : m.algebra().quiver().vertices())
      if (!q.find_vertex(v)) throw Error("algebra_mismatch", "ingredient " + m.name() + " is not a module over " + a->name());
    mods.push_back(extend_by_zero(m, a));
  }
  if (recipe.mode == GeneratorMode::quasitube) {
    if (recipe.minus_vertices.empty()) throw Error("bad_argument", "quasitube recipe needs the vertices of A-");
    auto sub = std::make_shared<const BoundQuiverAlgebra>(full_subalgebra(*a, recipe.minus_vertices, a->name() + "-"));
    for (auto v : recipe.minus_vertices) {
      auto r = restrict_to_quotient(injective(a, v), recipe.minus_vertices, sub).as_submodule;
      r.set_name("I(" + q.vertex(v) + ")-");
      mods.push_back(r);
    }
  }
  AssembledGenerator g;
  g.parts = indecomposable_parts(mods, &g.warnings);
  g.module = direct_sum(g.parts, a).module;
  return g;
}

struct SliceReport {
  bool sincere = false;
  std::vector<std::size_t> uncovered_vertices;
  bool tau_disjoint = false;
  std::optional<std::pair<std::size_t, std::size_t>> tau_witness;  // candidate i isomorphic to tau of candidate j
  bool all_indecomposable = false;
  std::string convexity = "not checked";
};

inline SliceReport verify_slice(const AlgebraPtr& a, const std::vector<Representation>& cands) {
  SliceReport rep;
  rep.all_indecomposable = std::all_of(cands.begin(), cands.end(), [](const Representation& m) { return is_indecomposable(m); });
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    // Hom(P(v), U) = U_v
    bool hit = false;
    for (const auto& c : cands) hit = hit || c.dim(v) > 0;
    if (!hit) rep.uncovered_vertices.push_back(v);
  }
  rep.sincere = rep.uncovered_vertices.empty();
  rep.tau_disjoint = true;
  for (std::size_t j = 0; j < cands.size() && rep.tau_disjoint; ++j) {
    if (is_projective_module(cands[j])) continue;
    const Representation t = tau(cands[j]);
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (t.dims() == cands[i].dims() && module_iso(t, cands[i]).isomorphic) {
        rep.tau_disjoint = false;
        rep.tau_witness = std::make_pair(i, j);
        break;
      }
  }
  return rep;
}

struct SpotCheck {
  std::string name;
  bool exact = false;
  bool kernel_in_add = false;
  bool fm_resolution = false;
  bool oracles_agree = false;
  bool minimality = false;
  std::string error;
  bool ok() const { return exact && kernel_in_add && fm_resolution && oracles_agree && minimality && error.empty(); }
};

struct GeneratorCertificate {
  std::size_t summands = 0;
  std::size_t end_dim = 0;
  std::vector<std::size_t> missing_projectives, missing_injectives;
  bool generator_cogenerator = false;
  GlobalDimension gldim;
  bool inconclusive = false;               // cutoff reached
  std::optional<std::size_t> repdim_bound;  // max(gldim End M, 2)
  std::vector<SpotCheck> spot_checks;
  std::vector<std::string> warnings;
  bool accepted = false;
};

inline SpotCheck spot_check(const EndAlgebra& e, const Representation& x) {
  SpotCheck sc;
  sc.name = x.name();
  try {
    auto seq = approximating_sequence(e, x);
    auto rep = verify_fm_resolution(e, seq);
    sc.exact = rep.hom_exact;
    sc.kernel_in_add = seq.kernel_in_add;
    sc.fm_resolution = rep.fm_resolution;
    sc.oracles_agree = seq.oracles_agree;
    sc.minimality = rep.minimality_consistent && rep.right_minimal == seq.minimal;
  } catch (const Error& err) {
    sc.error = std::string(err.kind()) + ": " + err.what();
  }
  return sc;
}

inline GeneratorCertificate check_auslander_generator(const AlgebraPtr& a, const std::vector<Representation>& m,
                                                      std::size_t cutoff = 12,
                                                      const std::vector<Representation>& tests = {}) {
  GeneratorCertificate c;
  EndAlgebra e = end_algebra(m);
  c.warnings = e.warnings;
  c.summands = e.size();
  c.end_dim = e.dim();
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    if (!find_part(e, projective(a, v))) c.missing_projectives.push_back(v);
    if (!find_part(e, injective(a, v))) c.missing_injectives.push_back(v);
  }
  c.generator_cogenerator = c.missing_projectives.empty() && c.missing_injectives.empty();
  c.gldim = gldim(e.algebra, cutoff);
  c.inconclusive = c.gldim.truncated;
  if (c.generator_cogenerator && !c.inconclusive) c.repdim_bound = std::max<std::size_t>(c.gldim.value, 2);
  for (const auto& x : tests) c.spot_checks.push_back(spot_check(e, x));
  c.accepted = c.generator_cogenerator && !c.inconclusive &&
               std::all_of(c.spot_checks.begin(), c.spot_checks.end(), [](const SpotCheck& s) { return s.ok(); });
  return c;
}

}  // namespace qra

#endif  // QRA_APPROX_HPP
