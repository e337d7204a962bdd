#ifndef QRA_STRUCT_ALGEBRA_HPP
#define QRA_STRUCT_ALGEBRA_HPP

// An algebra given by a basis and structure constants.
//
// Bases are always adapted to a complete set of primitive orthogonal
// idempotents: every basis element x carries a source i and a target j with
// e_i x e_j = x, the idempotents themselves are basis elements, and every
// other basis element lies in the radical.  Products are written left to
// right, so x y can only be nonzero when target(x) == source(y).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qra/kernel.hpp"

namespace qra {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

struct GradingTag {
  int layer = 0;       // copy index in a replicated/repetitive window
  std::size_t base = 0;  // vertex index in the base algebra
  friend bool operator==(const GradingTag&, const GradingTag&) = default;
};

class StructAlgebra {
 public:
  StructAlgebra() = default;

  /// Creates an algebra with the given vertices; basis elements are added with
  /// add_basis, products with set_product.
  explicit StructAlgebra(std::string name, std::vector<std::string> vertex_names)
      : name_(std::move(name)), vertex_names_(std::move(vertex_names)) {}

  std::size_t add_basis(std::string label, std::size_t src, std::size_t tgt) {
    labels_.push_back(std::move(label));
    src_.push_back(src);
    tgt_.push_back(tgt);
    return labels_.size() - 1;
  }

  /// Must be called after all basis elements are added.
  void finalize_basis(std::vector<std::size_t> idempotents) {
    idempotents_ = std::move(idempotents);
    if (idempotents_.size() != vertex_names_.size())
      throw Error("bad_idempotents", "one idempotent per vertex required");
    table_.assign(dim() * dim(), {});
    is_idem_.assign(dim(), false);
    for (auto e : idempotents_) is_idem_[e] = true;
    // e_i x = x when i = src(x); x e_j = x when j = tgt(x).
    for (std::size_t x = 0; x < dim(); ++x) {
      table_[idempotents_[src_[x]] * dim() + x] = {{x, Scalar::raw(1)}};
      table_[x * dim() + idempotents_[tgt_[x]]] = {{x, Scalar::raw(1)}};
    }
  }

  void set_product(std::size_t a, std::size_t b, SparseVec value) {
    if (tgt_[a] != src_[b]) throw Error("bad_product", "product of non-composable basis elements");
    table_[a * dim() + b] = std::move(value);
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return labels_.size(); }
  std::size_t num_vertices() const { return vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  void set_vertex_names(std::vector<std::string> names) { vertex_names_ = std::move(names); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(std::size_t x, std::string l) { labels_[x] = std::move(l); }
  std::size_t source(std::size_t x) const { return src_[x]; }
  std::size_t target(std::size_t x) const { return tgt_[x]; }
  std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
  const std::vector<std::size_t>& idempotents() const { return idempotents_; }
  bool is_idempotent(std::size_t x) const { return is_idem_[x]; }

  const std::vector<GradingTag>& tags() const { return tags_; }
  void set_tags(std::vector<GradingTag> t) { tags_ = std::move(t); }
  bool has_tags() const { return tags_.size() == num_vertices(); }

  const SparseVec& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec z(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (y[b].is_zero() || tgt_[a] != src_[b]) continue;
        const Scalar c = x[a] * y[b];
        for (const auto& [k, v] : table_[a * dim() + b]) z[k] += c * v;
      }
    }
    return z;
  }

  Vec unit_vector(std::size_t x) const {
    Vec v(dim());
    v[x] = Scalar::raw(1);
    return v;
  }

  /// Basis elements x with source i and target j.
  std::vector<std::size_t> block(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < dim(); ++x)
      if (src_[x] == i && tgt_[x] == j) out.push_back(x);
    return out;
  }

  /// Matrix of right multiplication by basis element b, acting on row vectors.
  Matrix right_action(std::size_t b) const {
    Matrix m(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (tgt_[a] != src_[b]) continue;
      for (const auto& [k, v] : table_[a * dim() + b]) m(a, k) += v;
    }
    return m;
  }

  /// Throws unless the table is associative on all basis triples.
  void check_associative() const {
    const std::size_t n = dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (tgt_[a] != src_[b] || table_[a * n + b].empty()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (tgt_[b] != src_[c]) continue;
          Vec left(n), right(n);
          for (const auto& [k, v] : table_[a * n + b])
            for (const auto& [l, w] : table_[k * n + c]) left[l] += v * w;
          for (const auto& [k, v] : table_[b * n + c])
            for (const auto& [l, w] : table_[a * n + k]) right[l] += v * w;
          if (left != right)
            throw Error("not_associative", name_ + ": (" + labels_[a] + "*" + labels_[b] + ")*" + labels_[c] +
                                               " differs from " + labels_[a] + "*(" + labels_[b] + "*" + labels_[c] + ")");
        }
      }
  }

  /// Throws when dim >= p; the trace-form radical needs p > dim.
  void check_modulus() const {
    if (dim() >= field::modulus())
      throw Error("modulus_too_small", name_ + ": dimension " + std::to_string(dim()) + " is not below the modulus");
  }

  /// Every non-idempotent basis element must be nilpotent; with an adapted
  /// basis this certifies that they span the radical.
  void check_radical_basis() const {
    for (std::size_t x = 0; x < dim(); ++x) {
      if (is_idem_[x] || src_[x] != tgt_[x]) continue;
      Vec p = unit_vector(x);
      bool zero = false;
      for (std::size_t k = 0; k <= dim(); ++k) {
        p = multiply(p, unit_vector(x));
        if (std::all_of(p.begin(), p.end(), [](Scalar s) { return s.is_zero(); })) {
          zero = true;
          break;
        }
      }
      if (!zero) throw Error("not_basic", name_ + ": loop element " + labels_[x] + " is not nilpotent");
    }
  }

  /// Index of a vertex by name.
  std::optional<std::size_t> vertex_index(const std::string& n) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i)
      if (vertex_names_[i] == n) return i;
    return std::nullopt;
  }

 private:
  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<std::size_t> idempotents_;
  std::vector<bool> is_idem_;
  std::vector<SparseVec> table_;
  std::vector<GradingTag> tags_;
};

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.is_zero(); });
}

inline SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

/// Algebra e S e for e the sum of the kept vertex idempotents.  Vertices keep
/// their names and tags; basis elements keep their labels.
inline StructAlgebra idempotent_subalgebra(const StructAlgebra& s, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw Error("empty_subset", "idempotent_subalgebra: empty vertex subset");
  std::vector<long> new_vertex(s.num_vertices(), -1);
  std::vector<std::string> names;
  std::vector<GradingTag> tags;
  for (auto v : keep) {
    if (v >= s.num_vertices()) throw Error("bad_vertex", "idempotent_subalgebra: vertex out of range");
    if (new_vertex[v] >= 0) continue;
    new_vertex[v] = static_cast<long>(names.size());
    names.push_back(s.vertex_names()[v]);
    if (s.has_tags()) tags.push_back(s.tags()[v]);
  }
  StructAlgebra sub(s.name() + "|sub", names);
  std::vector<long> new_index(s.dim(), -1);
  for (std::size_t x = 0; x < s.dim(); ++x) {
    if (new_vertex[s.source(x)] < 0 || new_vertex[s.target(x)] < 0) continue;
    new_index[x] = static_cast<long>(sub.add_basis(s.label(x), static_cast<std::size_t>(new_vertex[s.source(x)]),
                                                   static_cast<std::size_t>(new_vertex[s.target(x)])));
  }
  std::vector<std::size_t> idem(names.size());
  for (std::size_t v = 0; v < s.num_vertices(); ++v)
    if (new_vertex[v] >= 0) idem[static_cast<std::size_t>(new_vertex[v])] = static_cast<std::size_t>(new_index[s.idempotent(v)]);
  sub.finalize_basis(idem);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (new_index[a] < 0) continue;
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (new_index[b] < 0 || s.target(a) != s.source(b)) continue;
      if (s.is_idempotent(a) || s.is_idempotent(b)) continue;
      SparseVec v;
      for (const auto& [k, c] : s.product(a, b)) v.emplace_back(static_cast<std::size_t>(new_index[k]), c);
      sub.set_product(static_cast<std::size_t>(new_index[a]), static_cast<std::size_t>(new_index[b]), std::move(v));
    }
  }
  if (!tags.empty()) sub.set_tags(std::move(tags));
  return sub;
}

}  // namespace qra

#endif  // QRA_STRUCT_ALGEBRA_HPP
