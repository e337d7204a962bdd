#ifndef QRA_PRESENTATION_HPP
#define QRA_PRESENTATION_HPP

// Quivers with relations and the finite-dimensional algebras they present.
//
// Paths compose left to right: alpha.gamma.delta is alpha, then gamma, then
// delta, and is defined when target(alpha) == source(gamma) etc.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qra/kernel.hpp"
#include "qra/struct_algebra.hpp"

namespace qra {

struct Arrow {
  std::string label;
  std::size_t source = 0, target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {}

  std::size_t add_vertex(const std::string& name) {
    if (find_vertex(name)) throw Error("duplicate_vertex", "vertex '" + name + "' declared twice");
    vertices_.push_back(name);
    return vertices_.size() - 1;
  }
  std::size_t add_arrow(const std::string& label, std::size_t s, std::size_t t) {
    if (find_arrow(label)) throw Error("duplicate_arrow", "arrow '" + label + "' declared twice");
    if (s >= vertices_.size() || t >= vertices_.size()) throw Error("unknown_vertex", "arrow endpoint out of range");
    arrows_.push_back({label, s, t});
    return arrows_.size() - 1;
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  const std::string& vertex(std::size_t v) const { return vertices_[v]; }

  std::optional<std::size_t> find_vertex(const std::string& n) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == n) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> find_arrow(const std::string& l) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].label == l) return i;
    return std::nullopt;
  }
  std::size_t vertex_index(const std::string& n) const {
    auto v = find_vertex(n);
    if (!v) throw Error("unknown_vertex", "unknown vertex '" + n + "'");
    return *v;
  }

  /// Number of arrows from i to j.
  std::size_t arrow_count(std::size_t i, std::size_t j) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(),
                                                  [&](const Arrow& a) { return a.source == i && a.target == j; }));
  }
  bool is_sink(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == v; });
  }
  bool is_source(std::size_t v) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.target == v; });
  }

  /// Same vertices and arrows (names, labels, endpoints).
  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i)
      if (a.arrows_[i].label != b.arrows_[i].label || a.arrows_[i].source != b.arrows_[i].source ||
          a.arrows_[i].target != b.arrows_[i].target)
        return false;
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0, target = 0;
  std::vector<std::size_t> arrows;  // empty: stationary path at source

  std::size_t length() const { return arrows.size(); }
  static Path stationary(std::size_t v) { return Path{v, v, {}}; }
  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    return std::tie(a.source, a.target, a.arrows) < std::tie(b.source, b.target, b.arrows);
  }
};

inline std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).label;
  }
  return s;
}

inline Path concat(const Path& a, const Path& b) {
  if (a.target != b.source) throw Error("not_composable", "path concatenation of non-composable paths");
  Path r{a.source, b.target, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;
};

/// All paths of length exactly `len`, grouped in a deterministic order.
inline std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
  std::vector<Path> cur;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) cur.push_back(Path::stationary(v));
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Path> next;
    for (const auto& p : cur)
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).source == p.target) {
          Path n = p;
          n.arrows.push_back(a);
          n.target = q.arrow(a).target;
          next.push_back(std::move(n));
        }
    cur = std::move(next);
  }
  return cur;
}

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// A basic algebra kQ/I.  The basis consists of paths; the structure table
/// expresses products of basis paths in that basis.
class BoundQuiverAlgebra {
 public:
  BoundQuiverAlgebra(std::string name, Quiver quiver, std::vector<Relation> relations, std::vector<Path> basis,
                     StructAlgebra structure)
      : name_(std::move(name)),
        quiver_(std::move(quiver)),
        relations_(std::move(relations)),
        basis_(std::move(basis)),
        structure_(std::move(structure)) {
    arrow_basis_.assign(quiver_.num_arrows(), 0);
    std::vector<bool> seen(quiver_.num_arrows(), false);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].length() == 1) {
        arrow_basis_[basis_[i].arrows[0]] = i;
        seen[basis_[i].arrows[0]] = true;
      }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw Error("not_admissible", name_ + ": some arrow is not a basis element");
    structure_.set_name(name_);
    loewy_length_ = compute_loewy_length();
  }

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  const StructAlgebra& structure() const { return structure_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  /// Smallest L with rad^L = 0.
  std::size_t loewy_length() const { return loewy_length_; }
  std::size_t arrow_basis_index(std::size_t a) const { return arrow_basis_[a]; }

  /// Coordinates of an arbitrary path in the basis.
  Vec reduce(const Path& p) const {
    Vec v = structure_.unit_vector(structure_.idempotent(p.source));
    for (auto a : p.arrows) v = right_multiply(v, arrow_basis_[a]);
    return v;
  }

  /// Coordinates of a linear combination of paths.
  Vec reduce(const Relation& r) const {
    Vec v(dim());
    for (const auto& [c, p] : r.terms) {
      Vec w = reduce(p);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
    }
    return v;
  }

  Vec right_multiply(const Vec& v, std::size_t basis_elem) const {
    Vec out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (v[a].is_zero() || structure_.target(a) != structure_.source(basis_elem)) continue;
      for (const auto& [k, c] : structure_.product(a, basis_elem)) out[k] += v[a] * c;
    }
    return out;
  }

  std::string basis_label(std::size_t i) const { return path_label(quiver_, basis_[i]); }

  /// Basis paths from i to j.
  std::vector<std::size_t> basis_between(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].source == i && basis_[k].target == j) out.push_back(k);
    return out;
  }

  /// Same quiver (vertices and arrows); the criterion for modules to be
  /// comparable.
  bool same_quiver(const BoundQuiverAlgebra& o) const { return quiver_ == o.quiver_; }

 private:
  std::size_t compute_loewy_length() const {
    // rad^k is spanned by basis paths of length >= k when the basis comes
    // from path reduction; for presented structures we measure directly.
    std::vector<Vec> layer;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!structure_.is_idempotent(i)) layer.push_back(structure_.unit_vector(i));
    std::size_t L = 1;
    while (!layer.empty()) {
      ++L;
      std::vector<Vec> next;
      for (const auto& v : layer)
        for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
          Vec w = right_multiply(v, arrow_basis_[a]);
          if (!is_zero_vec(w)) next.push_back(std::move(w));
        }
      if (next.empty()) break;
      Matrix m = row_basis(Matrix::from_rows(next, dim()));
      layer.clear();
      for (std::size_t r = 0; r < m.rows(); ++r) layer.push_back(m.row(r));
      if (L > dim() + 2) throw Error("not_nilpotent", name_ + ": radical is not nilpotent");
    }
    return L;
  }

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  StructAlgebra structure_;
  std::vector<std::size_t> arrow_basis_;
  std::size_t loewy_length_ = 1;
};

// ---------------------------------------------------------------------------
// Basis construction from relations.

namespace detail {

/// Index over all paths of length <= max_len.
struct PathIndex {
  std::vector<Path> paths;
  std::map<Path, std::size_t> index;
  std::vector<std::vector<std::size_t>> from;  // paths starting at vertex v
  std::vector<std::vector<std::size_t>> to;    // paths ending at vertex v

  PathIndex(const Quiver& q, std::size_t max_len, std::size_t path_cap) {
    from.resize(q.num_vertices());
    to.resize(q.num_vertices());
    for (std::size_t l = 0; l <= max_len; ++l) {
      for (auto& p : paths_of_length(q, l)) {
        if (paths.size() >= path_cap) throw Error("too_many_paths", "path enumeration exceeds cap");
        index.emplace(p, paths.size());
        from[p.source].push_back(paths.size());
        to[p.target].push_back(paths.size());
        paths.push_back(std::move(p));
      }
    }
  }
};

/// Rows u r v (terms longer than max_len dropped) for all relations r and
/// paths u, v of admissible length.  Columns follow `order`.
inline std::vector<Vec> ideal_rows(const PathIndex& idx, const std::vector<Relation>& rels, std::size_t max_len,
                                   const std::vector<std::size_t>& column_of) {
  std::vector<Vec> rows;
  for (const auto& r : rels) {
    if (r.terms.empty()) continue;
    std::size_t minlen = r.terms[0].second.length();
    for (const auto& t : r.terms) minlen = std::min(minlen, t.second.length());
    const std::size_t s = r.terms[0].second.source, t = r.terms[0].second.target;
    for (auto ui : idx.to[s]) {
      const Path& u = idx.paths[ui];
      if (u.length() + minlen > max_len) continue;
      for (auto vi : idx.from[t]) {
        const Path& v = idx.paths[vi];
        if (u.length() + v.length() + minlen > max_len) continue;
        Vec row(idx.paths.size());
        bool nonzero = false;
        for (const auto& [c, p] : r.terms) {
          if (u.length() + p.length() + v.length() > max_len) continue;
          Path w = concat(concat(u, p), v);
          row[column_of[idx.index.at(w)]] += c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace detail

struct BasisResult {
  std::vector<Path> basis;
  StructAlgebra structure;
  std::size_t longest_path = 0;
};

/// Enumerates paths by increasing length and reduces them modulo the
/// two-sided ideal generated by the relations, until a full length stratum
/// lies in the ideal.
inline BasisResult build_basis(const std::string& name, const Quiver& q, const std::vector<Relation>& rels,
                               std::size_t cap = 64) {
  for (const auto& r : rels) {
    if (r.terms.empty()) throw Error("empty_relation", "relation without terms");
    for (const auto& [c, p] : r.terms) {
      if (p.length() < 2) throw Error("non_admissible", "relation term of length < 2");
      if (p.source != r.terms[0].second.source || p.target != r.terms[0].second.target)
        throw Error("non_parallel", "relation terms are not parallel");
    }
  }
  for (std::size_t ell = 1; ell <= cap; ++ell) {
    detail::PathIndex idx(q, ell, 400000);
    // Longest paths first, so pivots eliminate long paths and the basis keeps
    // the short ones.
    std::vector<std::size_t> order(idx.paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return idx.paths[a].length() > idx.paths[b].length(); });
    std::vector<std::size_t> column_of(idx.paths.size());
    for (std::size_t c = 0; c < order.size(); ++c) column_of[order[c]] = c;
    auto rows = detail::ideal_rows(idx, rels, ell, column_of);
    // Stop once every path of length ell lies in the ideal modulo longer
    // paths: rank J = #(length-ell paths) + rank of J on shorter columns.
    std::size_t top = 0;
    for (const auto& p : idx.paths)
      if (p.length() == ell) ++top;
    Matrix full = Matrix::from_rows(rows, idx.paths.size());
    Matrix shorter = full.block(0, top, full.rows(), idx.paths.size() - top);
    const std::size_t rank_short = rank(shorter);
    if (top > 0 && rank(full) != top + rank_short) continue;
    const Echelon e_short = rref(shorter);
    Echelon e;
    e.reduced = Matrix(e_short.reduced.rows(), idx.paths.size());
    e.reduced.set_block(0, top, e_short.reduced);
    std::vector<bool> is_pivot(idx.paths.size(), false);
    for (std::size_t c = 0; c < top; ++c) is_pivot[c] = true;
    for (auto c : e_short.pivots) {
      e.pivots.push_back(c + top);
      is_pivot[c + top] = true;
    }

    // Basis: non-pivot columns, listed by length then enumeration order.
    BasisResult res;
    std::vector<long> basis_of_path(idx.paths.size(), -1);
    for (std::size_t pi = 0; pi < idx.paths.size(); ++pi)
      if (!is_pivot[column_of[pi]]) {
        basis_of_path[pi] = static_cast<long>(res.basis.size());
        res.basis.push_back(idx.paths[pi]);
        res.longest_path = std::max(res.longest_path, idx.paths[pi].length());
      }
    const std::size_t n = res.basis.size();
    std::vector<long> pivot_row(order.size(), -1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
    auto reduce_path = [&](const Path& p) {
      SparseVec out;
      if (p.length() >= ell) return out;
      const std::size_t pi = idx.index.at(p);
      if (basis_of_path[pi] >= 0) {
        out.emplace_back(static_cast<std::size_t>(basis_of_path[pi]), Scalar::raw(1));
        return out;
      }
      const auto row = static_cast<std::size_t>(pivot_row[column_of[pi]]);
      for (std::size_t qi = 0; qi < idx.paths.size(); ++qi) {
        if (basis_of_path[qi] < 0) continue;
        const Scalar c = e.reduced(row, column_of[qi]);
        if (!c.is_zero()) out.emplace_back(static_cast<std::size_t>(basis_of_path[qi]), -c);
      }
      std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
      return out;
    };

    StructAlgebra s(name, q.vertices());
    std::vector<std::size_t> idem(q.num_vertices());
    for (std::size_t i = 0; i < n; ++i) {
      s.add_basis(path_label(q, res.basis[i]), res.basis[i].source, res.basis[i].target);
      if (res.basis[i].length() == 0) idem[res.basis[i].source] = i;
    }
    s.finalize_basis(idem);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (res.basis[a].target != res.basis[b].source) continue;
        if (res.basis[a].length() == 0 || res.basis[b].length() == 0) continue;
        s.set_product(a, b, reduce_path(concat(res.basis[a], res.basis[b])));
      }
    res.structure = std::move(s);
    return res;
  }
  throw Error("ideal_not_admissible", "ideal not admissible at cap " + std::to_string(cap));
}

inline BoundQuiverAlgebra make_algebra(const std::string& name, const Quiver& q, std::vector<Relation> rels,
                                       std::size_t cap = 64) {
  auto res = build_basis(name, q, rels, cap);
  BoundQuiverAlgebra a(name, q, std::move(rels), std::move(res.basis), std::move(res.structure));
  a.structure().check_modulus();
  return a;
}

/// Cartan matrix: entry (i, j) counts basis paths from i to j.
inline std::vector<std::vector<std::size_t>> cartan_matrix(const BoundQuiverAlgebra& a) {
  std::vector<std::vector<std::size_t>> c(a.num_vertices(), std::vector<std::size_t>(a.num_vertices(), 0));
  for (const auto& p : a.basis()) ++c[p.source][p.target];
  return c;
}

// ---------------------------------------------------------------------------
// Text format.

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  std::string s = h == std::string::npos ? line : line.substr(0, h);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

inline Path parse_path(const Quiver& q, const std::string& text) {
  std::vector<std::string> labels;
  std::string cur;
  for (char c : text) {
    if (c == '.') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  labels.push_back(cur);
  if (labels.size() == 1 && labels[0].size() > 1 && labels[0][0] == 'e' && q.find_vertex(labels[0].substr(1)) &&
      !q.find_arrow(labels[0]))
    return Path::stationary(q.vertex_index(labels[0].substr(1)));
  Path p;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto a = q.find_arrow(labels[i]);
    if (!a) throw Error("unknown_arrow", "unknown arrow '" + labels[i] + "'");
    if (i == 0) {
      p.source = q.arrow(*a).source;
    } else if (q.arrow(*a).source != p.target) {
      throw Error("not_composable", "path '" + text + "' is not composable");
    }
    p.arrows.push_back(*a);
    p.target = q.arrow(*a).target;
  }
  return p;
}

/// Parses "c1*p1 + c2*p2 - p3 ...".
inline Relation parse_relation(const Quiver& q, const std::string& text) {
  std::string spaced;
  for (char c : text) {
    if (c == '+' || c == '-') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  Relation r;
  int sign = 1;
  bool expect_term = true;
  for (const auto& tok : split_ws(spaced)) {
    if (tok == "+" || tok == "-") {
      if (tok == "-") sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("parse_error", "missing operator before '" + tok + "'");
    std::int64_t coef = 1;
    std::string path_text = tok;
    if (auto star = tok.find('*'); star != std::string::npos) {
      try {
        coef = std::stoll(tok.substr(0, star));
      } catch (...) {
        throw Error("parse_error", "bad coefficient in '" + tok + "'");
      }
      path_text = tok.substr(star + 1);
    }
    r.terms.emplace_back(Scalar(coef * sign), parse_path(q, path_text));
    sign = 1;
    expect_term = false;
  }
  if (r.terms.empty()) throw Error("parse_error", "empty relation");
  return r;
}

struct ParsedAlgebraHeader {
  std::string name;
  std::optional<std::uint32_t> field;
};

/// Reads only the name and field declaration of an `.alg` text.
inline ParsedAlgebraHeader peek_algebra_header(const std::string& text) {
  ParsedAlgebraHeader h;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto toks = split_ws(strip_comment(line));
    if (toks.size() >= 2 && toks[0] == "algebra") h.name = toks[1];
    if (toks.size() >= 2 && toks[0] == "field") h.field = static_cast<std::uint32_t>(std::stoul(toks[1]));
  }
  return h;
}

inline BoundQuiverAlgebra parse_algebra(const std::string& text, std::size_t cap = 64) {
  std::istringstream in(text);
  std::string line;
  std::string name = "A";
  Quiver q;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& kind, const std::string& msg) {
    throw Error(kind, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    try {
      if (toks[0] == "algebra") {
        if (toks.size() != 2) fail("parse_error", "expected 'algebra <name>'");
        name = toks[1];
      } else if (toks[0] == "field") {
        if (toks.size() != 2) fail("parse_error", "expected 'field <prime>'");
        const auto p = std::stoull(toks[1]);
        if (!is_prime(p)) fail("non_prime_modulus", "field " + toks[1] + " is not prime");
        if (p != field::modulus())
          fail("field_mismatch", "field " + toks[1] + " differs from session modulus " +
                                     std::to_string(field::modulus()));
      } else if (toks[0] == "vertices") {
        for (std::size_t i = 1; i < toks.size(); ++i) q.add_vertex(toks[i]);
      } else if (toks[0] == "arrow") {
        // arrow <label> : <src> -> <tgt>
        if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->") fail("parse_error", "expected 'arrow <l> : <s> -> <t>'");
        auto s_v = q.find_vertex(toks[3]);
        auto t_v = q.find_vertex(toks[5]);
        if (!s_v) fail("unknown_vertex", "unknown vertex '" + toks[3] + "'");
        if (!t_v) fail("unknown_vertex", "unknown vertex '" + toks[5] + "'");
        q.add_arrow(toks[1], *s_v, *t_v);
      } else if (toks[0] == "relation") {
        relation_lines.emplace_back(lineno, s.substr(s.find("relation") + 8));
      } else {
        fail("parse_error", "unknown directive '" + toks[0] + "'");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.kind(), e.what());
    }
  }
  std::vector<Relation> rels;
  for (const auto& [ln, body] : relation_lines) {
    lineno = ln;
    try {
      Relation r = parse_relation(q, body);
      for (const auto& [c, p] : r.terms) {
        if (p.length() < 2) fail("non_admissible", "relation term of length < 2");
        if (p.source != r.terms[0].second.source || p.target != r.terms[0].second.target)
          fail("non_parallel", "relation terms are not parallel");
      }
      rels.push_back(std::move(r));
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.kind(), e.what());
    }
  }
  if (q.num_vertices() == 0) throw Error("parse_error", "no vertices declared");
  return make_algebra(name, q, std::move(rels), cap);
}

inline std::string format_relation(const Quiver& q, const Relation& r) {
  std::string s;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const auto c = r.terms[i].first.signed_value();
    if (i == 0) {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c) + "*";
    } else {
      s += c < 0 ? " - " : " + ";
      const auto a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
    }
    s += path_label(q, r.terms[i].second);
  }
  return s;
}

inline std::string to_alg_text(const BoundQuiverAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "field " << field::modulus() << "\n";
  out << "vertices";
  for (const auto& v : a.quiver().vertices()) out << " " << v;
  out << "\n";
  for (const auto& ar : a.quiver().arrows())
    out << "arrow " << ar.label << " : " << a.quiver().vertex(ar.source) << " -> " << a.quiver().vertex(ar.target)
        << "\n";
  for (const auto& r : a.relations()) out << "relation " << format_relation(a.quiver(), r) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Derived algebras.

inline std::string opposite_name(const std::string& n) {
  const std::string suffix = "^op";
  if (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0)
    return n.substr(0, n.size() - suffix.size());
  return n + suffix;
}

inline Path reverse_path(const Quiver& rq, const Path& p) {
  Path r{p.target, p.source, {}};
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  (void)rq;
  return r;
}

/// Arrows reversed, paths reversed; vertex names and arrow labels kept.
inline BoundQuiverAlgebra opposite(const BoundQuiverAlgebra& a) {
  Quiver q(a.quiver().vertices());
  for (const auto& ar : a.quiver().arrows()) q.add_arrow(ar.label, ar.target, ar.source);
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation rr;
    for (const auto& [c, p] : r.terms) rr.terms.emplace_back(c, reverse_path(q, p));
    rels.push_back(std::move(rr));
  }
  std::vector<Path> basis;
  for (const auto& p : a.basis()) basis.push_back(reverse_path(q, p));
  const StructAlgebra& s = a.structure();
  StructAlgebra t(opposite_name(a.name()), s.vertex_names());
  for (std::size_t i = 0; i < basis.size(); ++i) t.add_basis(path_label(q, basis[i]), s.target(i), s.source(i));
  t.finalize_basis(s.idempotents());
  for (std::size_t x = 0; x < s.dim(); ++x)
    for (std::size_t y = 0; y < s.dim(); ++y) {
      if (s.is_idempotent(x) || s.is_idempotent(y) || s.target(y) != s.source(x)) continue;
      t.set_product(x, y, s.product(y, x));
    }
  return BoundQuiverAlgebra(opposite_name(a.name()), std::move(q), std::move(rels), std::move(basis), std::move(t));
}

/// True when every quiver path between two vertices of the subset stays in
/// the subset.
inline bool is_convex(const Quiver& q, const std::vector<std::size_t>& verts) {
  const std::size_t n = q.num_vertices();
  std::vector<bool> in(n, false);
  for (auto v : verts) in[v] = true;
  // reach[u][v]: a path of length >= 0 from u to v
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  for (const auto& a : q.arrows()) reach[a.source][a.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t u = 0; u < n; ++u) {
    if (!in[u]) continue;
    for (std::size_t w = 0; w < n; ++w) {
      if (!in[w]) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (!in[v] && reach[u][v] && reach[v][w]) return false;
    }
  }
  return true;
}

/// Full subcategory on a convex vertex subset, presented by the induced
/// subquiver and the relations living inside it.
inline BoundQuiverAlgebra full_subalgebra(const BoundQuiverAlgebra& a, const std::vector<std::size_t>& verts,
                                          const std::string& name) {
  if (verts.empty()) throw Error("empty_subset", "full_subalgebra: empty vertex subset");
  if (!is_convex(a.quiver(), verts)) throw Error("non_convex", "vertex subset is not convex");
  std::vector<std::size_t> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<long> nv(a.num_vertices(), -1);
  Quiver q;
  for (auto v : sorted) nv[v] = static_cast<long>(q.add_vertex(a.quiver().vertex(v)));
  std::vector<long> na(a.quiver().num_arrows(), -1);
  for (std::size_t i = 0; i < a.quiver().num_arrows(); ++i) {
    const auto& ar = a.quiver().arrow(i);
    if (nv[ar.source] >= 0 && nv[ar.target] >= 0)
      na[i] = static_cast<long>(q.add_arrow(ar.label, static_cast<std::size_t>(nv[ar.source]),
                                            static_cast<std::size_t>(nv[ar.target])));
  }
  auto map_path = [&](const Path& p) {
    Path r{static_cast<std::size_t>(nv[p.source]), static_cast<std::size_t>(nv[p.target]), {}};
    for (auto x : p.arrows) r.arrows.push_back(static_cast<std::size_t>(na[x]));
    return r;
  };
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    const auto& p0 = r.terms[0].second;
    if (nv[p0.source] < 0 || nv[p0.target] < 0) continue;
    Relation rr;
    for (const auto& [c, p] : r.terms) rr.terms.emplace_back(c, map_path(p));
    rels.push_back(std::move(rr));
  }
  StructAlgebra sub = idempotent_subalgebra(a.structure(), sorted);
  std::vector<Path> basis;
  for (const auto& p : a.basis())
    if (nv[p.source] >= 0 && nv[p.target] >= 0) basis.push_back(map_path(p));
  return BoundQuiverAlgebra(name, std::move(q), std::move(rels), std::move(basis), std::move(sub));
}

// ---------------------------------------------------------------------------
// Recovering a presentation from structure constants.

struct Presented {
  BoundQuiverAlgebra algebra;
  Matrix to_struct;    // row i: basis path i in structure coordinates
  Matrix from_struct;  // inverse of to_struct
  std::vector<Vec> arrow_elements;
  bool relations_minimized = true;
};

struct PresentationOptions {
  bool minimize_relations = true;
  std::size_t path_cap = 200000;
  std::size_t minimize_path_cap = 4000;
};

namespace detail {

/// Sparse row-vector times basis element in a StructAlgebra.
inline Vec struct_times(const StructAlgebra& s, const Vec& v, std::size_t b) {
  Vec out(s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (v[a].is_zero() || s.target(a) != s.source(b)) continue;
    for (const auto& [k, c] : s.product(a, b)) out[k] += v[a] * c;
  }
  return out;
}

inline Vec struct_times_vec(const StructAlgebra& s, const Vec& v, const Vec& w) { return s.multiply(v, w); }

/// Incremental echelon basis for membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}
  /// Reduces v; returns true and stores it when independent.
  bool add(Vec v) {
    reduce(v);
    for (std::size_t c = 0; c < n_; ++c)
      if (!v[c].is_zero()) {
        const Scalar inv = v[c].inverse();
        for (auto& x : v) x *= inv;
        for (auto& [pc, row] : rows_) {
          const Scalar f = row[c];
          if (f.is_zero()) continue;
          for (std::size_t j = 0; j < n_; ++j) row[j] -= f * v[j];
        }
        rows_.emplace_back(c, std::move(v));
        return true;
      }
    return false;
  }
  bool contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
  }
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(Vec& v) const {
    for (const auto& [c, row] : rows_) {
      const Scalar f = v[c];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= f * row[j];
    }
  }
  std::size_t n_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

}  // namespace detail

/// Quiver with one vertex per stored idempotent and arrows i -> j spanning
/// e_i (rad / rad^2) e_j; basis paths chosen greedily by length; relations
/// are the kernel of the path map up to the Loewy length.
inline Presented presentation_from_struct(const StructAlgebra& s, const PresentationOptions& opt = {}) {
  const std::size_t n = s.dim();
  const std::size_t nv = s.num_vertices();
  s.check_radical_basis();
  // rad^2, block by block.
  std::vector<std::vector<Vec>> rad2(nv * nv);
  for (std::size_t a = 0; a < n; ++a) {
    if (s.is_idempotent(a)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (s.is_idempotent(b) || s.target(a) != s.source(b)) continue;
      if (s.product(a, b).empty()) continue;
      Vec v(n);
      for (const auto& [k, c] : s.product(a, b)) v[k] += c;
      rad2[s.source(a) * nv + s.target(b)].push_back(std::move(v));
    }
  }
  Quiver q(s.vertex_names());
  std::vector<Vec> arrow_elements;
  std::set<std::string> used_labels;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      detail::SpanBuilder span(n);
      for (auto& v : rad2[i * nv + j]) span.add(v);
      for (auto x : s.block(i, j)) {
        if (s.is_idempotent(x)) continue;
        if (!span.add(s.unit_vector(x))) continue;
        std::string label = s.label(x);
        for (char& c : label)
          if (c == '.' || std::isspace(static_cast<unsigned char>(c))) c = '_';
        while (used_labels.count(label)) label += "_";
        used_labels.insert(label);
        q.add_arrow(label, i, j);
        arrow_elements.push_back(s.unit_vector(x));
      }
    }

  // Paths by length with their images.
  std::vector<Path> paths;
  std::vector<Vec> images;
  std::vector<Path> layer;
  std::vector<Vec> layer_img;
  for (std::size_t v = 0; v < nv; ++v) {
    paths.push_back(Path::stationary(v));
    images.push_back(s.unit_vector(s.idempotent(v)));
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    layer.push_back(Path{q.arrow(a).source, q.arrow(a).target, {a}});
    layer_img.push_back(arrow_elements[a]);
  }
  std::size_t loewy = 1;
  while (!layer.empty()) {
    ++loewy;
    std::vector<Path> next;
    std::vector<Vec> next_img;
    bool any_nonzero = false;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      paths.push_back(layer[k]);
      images.push_back(layer_img[k]);
      if (paths.size() > opt.path_cap) throw Error("too_many_paths", s.name() + ": path enumeration exceeds cap");
      if (is_zero_vec(layer_img[k])) continue;
      any_nonzero = true;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).source != layer[k].target) continue;
        Path p = layer[k];
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
        next.push_back(std::move(p));
        next_img.push_back(s.multiply(layer_img[k], arrow_elements[a]));
      }
    }
    if (!any_nonzero) break;
    layer = std::move(next);
    layer_img = std::move(next_img);
  }
  // Paths whose image is zero and that extend a nonzero path are the maximal
  // monomial relations; together with the kernel below they present s.

  // Greedy basis.
  detail::SpanBuilder span(n);
  std::vector<Path> basis;
  std::vector<Vec> basis_img;
  for (std::size_t k = 0; k < paths.size() && basis.size() < n; ++k) {
    if (span.add(images[k])) {
      basis.push_back(paths[k]);
      basis_img.push_back(images[k]);
    }
  }
  if (basis.size() != n)
    throw Error("not_presentable", s.name() + ": idempotents and arrows do not generate the algebra");

  // Order basis: stationary paths first by vertex, then by length.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return basis[x].length() < basis[y].length();
  });
  std::vector<Path> sorted_basis;
  std::vector<Vec> sorted_img;
  for (auto k : perm) {
    sorted_basis.push_back(basis[k]);
    sorted_img.push_back(basis_img[k]);
  }
  Matrix to_struct = Matrix::from_rows(sorted_img, n);
  auto inv = inverse(to_struct);
  if (!inv) throw Error("not_presentable", s.name() + ": path images are not a basis");

  auto coords = [&](const Vec& v) {
    Matrix row = Matrix::from_rows({v}, n) * *inv;
    return row.row(0);
  };

  StructAlgebra t(s.name(), s.vertex_names());
  std::vector<std::size_t> idem(nv);
  for (std::size_t i = 0; i < n; ++i) {
    t.add_basis(path_label(q, sorted_basis[i]), sorted_basis[i].source, sorted_basis[i].target);
    if (sorted_basis[i].length() == 0) idem[sorted_basis[i].source] = i;
  }
  t.finalize_basis(idem);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (sorted_basis[a].target != sorted_basis[b].source) continue;
      if (sorted_basis[a].length() == 0 || sorted_basis[b].length() == 0) continue;
      t.set_product(a, b, to_sparse(coords(s.multiply(sorted_img[a], sorted_img[b]))));
    }
  if (s.has_tags()) t.set_tags(s.tags());

  // Relations: kernel of the path map in each (i, j) block.
  std::vector<Relation> candidates;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      std::vector<std::size_t> block;
      for (std::size_t k = 0; k < paths.size(); ++k)
        if (paths[k].length() >= 2 && paths[k].source == i && paths[k].target == j) block.push_back(k);
      if (block.empty()) continue;
      std::vector<Vec> cols;
      for (auto k : block) cols.push_back(images[k]);
      Matrix ker = nullspace(Matrix::from_columns(cols, n));
      for (std::size_t c = 0; c < ker.cols(); ++c) {
        Relation r;
        for (std::size_t k = 0; k < block.size(); ++k)
          if (!ker(k, c).is_zero()) r.terms.emplace_back(ker(k, c), paths[block[k]]);
        // Normalize: leading coefficient 1.
        const Scalar lead = r.terms.front().first.inverse();
        for (auto& term : r.terms) term.first *= lead;
        candidates.push_back(std::move(r));
      }
    }

  bool minimized = false;
  std::vector<Relation> rels;
  std::size_t max_len = 0;
  for (const auto& p : paths) max_len = std::max(max_len, p.length());
  if (opt.minimize_relations) {
    try {
      detail::PathIndex idx(q, max_len, opt.minimize_path_cap);
      std::vector<std::size_t> ident(idx.paths.size());
      std::iota(ident.begin(), ident.end(), 0);
      auto key = [](const Relation& r) {
        std::size_t mn = r.terms[0].second.length();
        for (const auto& t2 : r.terms) mn = std::min(mn, t2.second.length());
        return std::make_pair(mn, r.terms.size());
      };
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](const Relation& a, const Relation& b) { return key(a) < key(b); });
      detail::SpanBuilder ideal(idx.paths.size());
      for (auto& r : candidates) {
        Vec v(idx.paths.size());
        for (const auto& [c, p] : r.terms) v[idx.index.at(p)] += c;
        if (ideal.contains(v)) continue;
        for (auto& row : detail::ideal_rows(idx, {r}, max_len, ident)) ideal.add(std::move(row));
        rels.push_back(std::move(r));
      }
      minimized = true;
    } catch (const Error& e) {
      if (e.kind() != "too_many_paths") throw;
    }
  }
  if (!minimized) rels = std::move(candidates);

  BoundQuiverAlgebra alg(s.name(), std::move(q), std::move(rels), std::move(sorted_basis), std::move(t));
  return Presented{std::move(alg), std::move(to_struct), std::move(*inv), std::move(arrow_elements), minimized};
}

// ---------------------------------------------------------------------------
// Isomorphism of presentations.

struct AlgebraIsoWitness {
  std::vector<std::size_t> vertex_map;  // vertex of a -> vertex of b
  std::vector<std::size_t> arrow_map;   // arrow of a -> arrow of b
  std::vector<Scalar> arrow_scale;      // arrow a maps to scale * arrow_map[a]
};

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Solves E x = rhs over Z/nZ by diagonalizing with unimodular row and column
/// operations.  Returns nothing when inconsistent.
inline std::optional<std::vector<std::int64_t>> solve_mod(std::vector<std::vector<std::int64_t>> E,
                                                          std::vector<std::int64_t> rhs, std::int64_t n) {
  const std::size_t m = E.size();
  const std::size_t k = m ? E[0].size() : 0;
  std::vector<std::vector<std::int64_t>> V(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) V[i][i] = 1;
  for (auto& row : E)
    for (auto& x : row) x = mod_floor(x, n);
  for (auto& x : rhs) x = mod_floor(x, n);
  auto mulmod = [n](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
  };
  std::size_t t = 0;
  for (; t < std::min(m, k); ++t) {
    std::size_t pr = m, pc = k;
    for (std::size_t i = t; i < m && pr == m; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (E[i][j]) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == m) break;
    std::swap(E[pr], E[t]);
    std::swap(rhs[pr], rhs[t]);
    for (auto& row : E) std::swap(row[pc], row[t]);
    for (auto& row : V) std::swap(row[pc], row[t]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (!E[i][t]) continue;
        std::int64_t x, y;
        const std::int64_t a = E[t][t], b = E[i][t];
        std::int64_t g = ext_gcd(a, b, x, y);
        if (b % a == 0) g = a, x = 1, y = 0;  // keep the pivot row fixed
        const std::int64_t ag = a / g, bg = b / g;
        for (std::size_t j = 0; j < k; ++j) {
          const std::int64_t rt = E[t][j], ri = E[i][j];
          E[t][j] = mod_floor(mulmod(mod_floor(x, n), rt) + mulmod(mod_floor(y, n), ri), n);
          E[i][j] = mod_floor(mulmod(mod_floor(-bg, n), rt) + mulmod(ag, ri), n);
        }
        const std::int64_t rt = rhs[t], ri = rhs[i];
        rhs[t] = mod_floor(mulmod(mod_floor(x, n), rt) + mulmod(mod_floor(y, n), ri), n);
        rhs[i] = mod_floor(mulmod(mod_floor(-bg, n), rt) + mulmod(ag, ri), n);
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (!E[t][j]) continue;
        std::int64_t x, y;
        const std::int64_t a = E[t][t], b = E[t][j];
        std::int64_t g = ext_gcd(a, b, x, y);
        if (b % a == 0) g = a, x = 1, y = 0;
        const std::int64_t ag = a / g, bg = b / g;
        auto colop = [&](std::vector<std::vector<std::int64_t>>& M) {
          for (auto& row : M) {
            const std::int64_t ct = row[t], cj = row[j];
            row[t] = mod_floor(mulmod(mod_floor(x, n), ct) + mulmod(mod_floor(y, n), cj), n);
            row[j] = mod_floor(mulmod(mod_floor(-bg, n), ct) + mulmod(ag, cj), n);
          }
        };
        colop(E);
        colop(V);
        dirty = true;
      }
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        if (E[i][t]) dirty = true;
    }
  }
  std::vector<std::int64_t> yv(k, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < t) {
      const std::int64_t d = E[i][i];
      std::int64_t x, y;
      const std::int64_t g = ext_gcd(d, n, x, y);
      if (rhs[i] % g) return std::nullopt;
      const std::int64_t ng = n / g;
      yv[i] = mod_floor(mulmod(mod_floor(x, ng), (rhs[i] / g) % ng), ng);
    } else if (rhs[i]) {
      return std::nullopt;
    }
  }
  std::vector<std::int64_t> xv(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc = mod_floor(acc + mulmod(V[i][j], yv[j]), n);
    xv[i] = acc;
  }
  return xv;
}

struct DiscreteLog {
  std::uint32_t p = 0;
  Scalar generator;
  std::vector<std::uint32_t> log;  // log[value]

  static const DiscreteLog& get() {
    static DiscreteLog d;
    if (d.p != field::modulus()) d.build();
    return d;
  }
  void build() {
    p = field::modulus();
    if (p > (1u << 24)) throw Error("modulus_too_large", "isomorphism search needs a modulus below 2^24");
    std::vector<std::uint32_t> factors;
    std::uint32_t m = p - 1;
    for (std::uint32_t f = 2; f * f <= m; ++f)
      if (m % f == 0) {
        factors.push_back(f);
        while (m % f == 0) m /= f;
      }
    if (m > 1) factors.push_back(m);
    for (std::uint32_t g = 2; g < p || p == 2; ++g) {
      if (p == 2) {
        generator = Scalar::raw(1);
        break;
      }
      bool ok = true;
      for (auto f : factors)
        if (Scalar::raw(g).pow((p - 1) / f) == Scalar::raw(1)) ok = false;
      if (ok) {
        generator = Scalar::raw(g);
        break;
      }
    }
    log.assign(p, 0);
    Scalar x = Scalar::raw(1);
    for (std::uint32_t e = 0; e + 1 < p || (p == 2 && e == 0); ++e) {
      log[x.value()] = e;
      x *= generator;
      if (p == 2) break;
    }
  }
};

}  // namespace detail

/// Tries to extend a vertex and arrow bijection to an algebra isomorphism
/// a -> b by rescaling arrows.
inline std::optional<std::vector<Scalar>> solve_arrow_scalars(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b,
                                                              const std::vector<std::size_t>& vmap,
                                                              const std::vector<std::size_t>& amap) {
  auto image_path = [&](const Path& p) {
    Path r{vmap[p.source], vmap[p.target], {}};
    for (auto x : p.arrows) r.arrows.push_back(amap[x]);
    return r;
  };
  const std::size_t na = a.quiver().num_arrows();
  const auto& dl = detail::DiscreteLog::get();
  const std::int64_t order = static_cast<std::int64_t>(field::modulus()) - 1;
  std::vector<std::vector<std::int64_t>> E;
  std::vector<std::int64_t> rhs;
  for (const auto& r : a.relations()) {
    std::vector<Vec> imgs;
    for (const auto& [c, p] : r.terms) imgs.push_back(b.reduce(image_path(p)));
    for (std::size_t k = 0; k < b.dim(); ++k) {
      std::vector<std::size_t> nz;
      for (std::size_t t = 0; t < imgs.size(); ++t)
        if (!(r.terms[t].first * imgs[t][k]).is_zero()) nz.push_back(t);
      if (nz.empty()) continue;
      if (nz.size() == 1) return std::nullopt;
      if (nz.size() > 2) continue;  // verified after solving
      const auto t1 = nz[0], t2 = nz[1];
      const Scalar kappa = -(r.terms[t2].first * imgs[t2][k]) / (r.terms[t1].first * imgs[t1][k]);
      std::vector<std::int64_t> row(na, 0);
      for (auto x : r.terms[t1].second.arrows) ++row[x];
      for (auto x : r.terms[t2].second.arrows) --row[x];
      E.push_back(std::move(row));
      rhs.push_back(dl.log[kappa.value()]);
    }
  }
  std::vector<Scalar> scale(na, Scalar::raw(1));
  if (!E.empty() && order > 1) {
    auto sol = detail::solve_mod(E, rhs, order);
    if (!sol) return std::nullopt;
    for (std::size_t x = 0; x < na; ++x) scale[x] = dl.generator.pow(static_cast<std::uint64_t>((*sol)[x]));
  }
  for (const auto& r : a.relations()) {
    Vec acc(b.dim());
    for (const auto& [c, p] : r.terms) {
      Scalar s = c;
      for (auto x : p.arrows) s *= scale[x];
      Vec w = b.reduce(image_path(p));
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += s * w[k];
    }
    if (!is_zero_vec(acc)) return std::nullopt;
  }
  return scale;
}

/// Brute-force isomorphism test of two presentations up to vertex and arrow
/// bijection and rescaling of arrows.
inline std::optional<AlgebraIsoWitness> presentations_isomorphic(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b,
                                                                 std::size_t guard = 12) {
  const std::size_t n = a.num_vertices();
  if (n > guard || b.num_vertices() > guard) throw Error("too_large", "instance too large for brute force");
  if (n != b.num_vertices() || a.dim() != b.dim() || a.quiver().num_arrows() != b.quiver().num_arrows())
    return std::nullopt;
  const auto ca = cartan_matrix(a), cb = cartan_matrix(b);
  std::vector<std::size_t> vmap(n, 0);
  std::vector<bool> used(n, false);
  std::optional<AlgebraIsoWitness> found;

  std::function<void(std::size_t)> assign_arrows;
  std::function<void(std::size_t)> assign_vertex = [&](std::size_t k) {
    if (found) return;
    if (k == n) {
      assign_arrows(0);
      return;
    }
    for (std::size_t c = 0; c < n && !found; ++c) {
      if (used[c]) continue;
      bool ok = true;
      vmap[k] = c;
      for (std::size_t j = 0; j <= k && ok; ++j) {
        const std::size_t cj = vmap[j];
        if (a.quiver().arrow_count(k, j) != b.quiver().arrow_count(c, cj) ||
            a.quiver().arrow_count(j, k) != b.quiver().arrow_count(cj, c) || ca[k][j] != cb[c][cj] ||
            ca[j][k] != cb[cj][c])
          ok = false;
      }
      if (!ok) continue;
      used[c] = true;
      assign_vertex(k + 1);
      used[c] = false;
    }
  };

  const std::size_t na = a.quiver().num_arrows();
  std::vector<std::size_t> amap(na, 0);
  std::vector<bool> aused(na, false);
  assign_arrows = [&](std::size_t x) {
    if (found) return;
    if (x == na) {
      if (auto sc = solve_arrow_scalars(a, b, vmap, amap)) found = AlgebraIsoWitness{vmap, amap, *sc};
      return;
    }
    const auto& ar = a.quiver().arrow(x);
    for (std::size_t y = 0; y < na && !found; ++y) {
      const auto& br = b.quiver().arrow(y);
      if (aused[y] || br.source != vmap[ar.source] || br.target != vmap[ar.target]) continue;
      aused[y] = true;
      amap[x] = y;
      assign_arrows(x + 1);
      aused[y] = false;
    }
  };
  assign_vertex(0);
  return found;
}

}  // namespace qra

#endif  // QRA_PRESENTATION_HPP
