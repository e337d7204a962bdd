#ifndef QRA_ORBIT_HPP
#define QRA_ORBIT_HPP

// The repetitive category, automorphisms of it, orbit algebras and pushdown.
//
// The repetitive category is never materialized.  An element is a finite
// combination of keys (m, x): for x < dim B the copy of basis path x in layer
// m, for x = dim B + p the dual p* going from layer m down to layer m - 1.
// Automorphisms commute with the layer translation and are stored by their
// values on layer 0.

#include <algorithm>
#include <map>
#include <set>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qra/constructions.hpp"
#include "qra/io.hpp"

namespace qra {

using Object = std::pair<int, std::size_t>;  // (layer, base vertex)
using Key = std::pair<int, std::size_t>;
using LazyVec = std::map<Key, Scalar>;

inline void prune(LazyVec& v) {
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

inline LazyVec shifted(const LazyVec& v, int d) {
  LazyVec out;
  for (const auto& [k, c] : v) out[{k.first + d, k.second}] = c;
  return out;
}

class Repetitive {
 public:
  explicit Repetitive(AlgebraPtr b) : b_(std::move(b)), dt_(b_->structure()), n_(b_->dim()) {}

  const BoundQuiverAlgebra& base() const { return *b_; }
  const AlgebraPtr& base_ptr() const { return b_; }
  std::size_t base_dim() const { return n_; }
  std::size_t num_base_vertices() const { return b_->num_vertices(); }

  Object source(Key k) const {
    const StructAlgebra& s = b_->structure();
    if (k.second < n_) return {k.first, s.source(k.second)};
    return {k.first, s.target(k.second - n_)};
  }
  Object target(Key k) const {
    const StructAlgebra& s = b_->structure();
    if (k.second < n_) return {k.first, s.target(k.second)};
    return {k.first - 1, s.source(k.second - n_)};
  }
  std::string label(Key k) const {
    const StructAlgebra& s = b_->structure();
    if (k.second < n_) return s.label(k.second) + detail::primes(k.first);
    return detail::dual_label(s.label(k.second - n_)) + detail::primes(k.first);
  }
  std::string object_name(Object o) const { return b_->quiver().vertex(o.second) + detail::primes(o.first); }
  Key idempotent(Object o) const { return {o.first, b_->structure().idempotent(o.second)}; }

  void multiply_keys(Key a, Key c, Scalar coef, LazyVec& out) const {
    if (target(a) != source(c)) return;
    const bool da = a.second >= n_, dc = c.second >= n_;
    if (da && dc) return;
    if (!da && !dc) {
      for (const auto& [k, v] : b_->structure().product(a.second, c.second)) out[{a.first, k}] += coef * v;
    } else if (!da) {
      for (const auto& [k, v] : dt_.left[a.second * n_ + (c.second - n_)]) out[{c.first, n_ + k}] += coef * v;
    } else {
      for (const auto& [k, v] : dt_.right[(a.second - n_) * n_ + c.second]) out[{a.first, n_ + k}] += coef * v;
    }
  }

  LazyVec multiply(const LazyVec& x, const LazyVec& y) const {
    LazyVec out;
    for (const auto& [a, ca] : x)
      for (const auto& [c, cc] : y) multiply_keys(a, c, ca * cc, out);
    prune(out);
    return out;
  }

  /// Basis keys of the hom space from x to y.
  std::vector<Key> hom_keys(Object x, Object y) const {
    std::vector<Key> out;
    if (y.first == x.first) {
      for (auto k : b_->basis_between(x.second, y.second)) out.emplace_back(x.first, k);
    } else if (y.first == x.first - 1) {
      for (auto p : b_->basis_between(y.second, x.second)) out.emplace_back(x.first, n_ + p);
    }
    return out;
  }

  /// All basis keys starting at x.
  std::vector<Key> keys_from(Object x) const {
    std::vector<Key> out;
    const StructAlgebra& s = b_->structure();
    for (std::size_t k = 0; k < n_; ++k) {
      if (s.source(k) == x.second) out.emplace_back(x.first, k);
      if (s.target(k) == x.second) out.emplace_back(x.first, n_ + k);
    }
    return out;
  }

 private:
  AlgebraPtr b_;
  detail::DualTables dt_;
  std::size_t n_;
};

/// An automorphism commuting with the layer translation.
struct LazyAuto {
  std::vector<Object> vertex;   // image of (0, i)
  std::vector<LazyVec> image;   // image of key (0, x), x < 2 dim B

  Object on_object(Object o) const {
    const Object v = vertex[o.second];
    return {v.first + o.first, v.second};
  }

  LazyVec apply(const LazyVec& v) const {
    LazyVec out;
    for (const auto& [k, c] : v)
      for (const auto& [kk, cc] : image[k.second]) out[{kk.first + k.first, kk.second}] += c * cc;
    prune(out);
    return out;
  }

  LazyVec apply(Key k) const { return apply(LazyVec{{k, Scalar::raw(1)}}); }
};

inline LazyAuto identity_auto(const Repetitive& r) {
  LazyAuto f;
  for (std::size_t i = 0; i < r.num_base_vertices(); ++i) f.vertex.emplace_back(0, i);
  for (std::size_t x = 0; x < 2 * r.base_dim(); ++x) f.image.push_back({{{0, x}, Scalar::raw(1)}});
  return f;
}

/// The Nakayama automorphism, realized as the shift by one layer.
inline LazyAuto nakayama_auto(const Repetitive& r) {
  LazyAuto f;
  for (std::size_t i = 0; i < r.num_base_vertices(); ++i) f.vertex.emplace_back(1, i);
  for (std::size_t x = 0; x < 2 * r.base_dim(); ++x) f.image.push_back({{{1, x}, Scalar::raw(1)}});
  return f;
}

/// second after first.
inline LazyAuto then(const LazyAuto& first, const LazyAuto& second) {
  LazyAuto f;
  for (std::size_t i = 0; i < first.vertex.size(); ++i) f.vertex.push_back(second.on_object(first.vertex[i]));
  for (const auto& img : first.image) f.image.push_back(second.apply(img));
  return f;
}

inline LazyAuto auto_power(const Repetitive& r, const LazyAuto& f, std::size_t e) {
  LazyAuto out = identity_auto(r);
  for (std::size_t k = 0; k < e; ++k) out = then(out, f);
  return out;
}

inline LazyAuto inverse_auto(const Repetitive& r, const LazyAuto& f) {
  const std::size_t nv = r.num_base_vertices();
  LazyAuto g;
  g.vertex.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const Object v = f.vertex[i];
    g.vertex[v.second] = {-v.first, i};
  }
  for (std::size_t y = 0; y < 2 * r.base_dim(); ++y) {
    const Key ky{0, y};
    const Object s = g.on_object(r.source(ky)), t = g.on_object(r.target(ky));
    const auto cand = r.hom_keys(s, t);
    std::map<Key, std::size_t> cols;
    std::vector<LazyVec> imgs;
    for (auto k : cand) {
      imgs.push_back(f.apply(k));
      for (const auto& [kk, c] : imgs.back()) cols.emplace(kk, cols.size());
    }
    cols.emplace(ky, cols.size());
    Matrix a(cand.size(), cols.size());
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (const auto& [kk, c] : imgs[i]) a(i, cols.at(kk)) = c;
    Matrix rhs(1, cols.size());
    rhs(0, cols.at(ky)) = Scalar::raw(1);
    auto sol = solve_left(a, rhs);
    if (!sol) throw Error("invalid_automorphism", "automorphism is not invertible at " + r.label(ky));
    LazyVec pv;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (!(*sol)(0, i).is_zero()) pv[cand[i]] = (*sol)(0, i);
    g.image.push_back(std::move(pv));
  }
  return g;
}

// ---------------------------------------------------------------------------
// `.auto` files.

struct AutomorphismSpec {
  struct Connect {
    std::string label;
    std::size_t path = 0;  // basis index in B of the dualized path
  };
  struct VertexRule {
    std::size_t target = 0;
    int shift = 0;
    bool set = false;
  };
  struct ArrowRule {
    std::string from, to;
    int shift = 0;
    Scalar coeff = Scalar::raw(1);
  };
  std::string name;
  std::string algebra;
  std::vector<Connect> connects;
  std::vector<VertexRule> vertices;
  std::vector<ArrowRule> arrows;
};

/// Directives: `automorphism <name> over <algebra>`,
/// `connect <label> : <i> -> <j> dual <path>` naming the connecting arrow
/// p* from (m+1, i) to (m, j), `vertex <i> -> <j> shift <s>`,
/// `arrow <label> -> <label> shift <s> [coeff <c>]`.
inline AutomorphismSpec parse_automorphism(const std::string& text, const BoundQuiverAlgebra& b) {
  const Quiver& q = b.quiver();
  AutomorphismSpec spec;
  spec.vertices.resize(q.num_vertices());
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& kind, const std::string& msg) {
    throw Error(kind, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto vertex_of = [&](const std::string& v) {
    auto i = q.find_vertex(v);
    if (!i) fail("unknown_vertex", "unknown vertex '" + v + "'");
    return *i;
  };
  auto integer = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      fail("parse_error", "expected an integer, got '" + s + "'");
    }
    return 0LL;
  };
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "automorphism") {
      if (toks.size() != 4 || toks[2] != "over") fail("parse_error", "expected 'automorphism <name> over <algebra>'");
      spec.name = toks[1];
      spec.algebra = toks[3];
      if (spec.algebra != b.name())
        fail("algebra_mismatch", "automorphism is over '" + spec.algebra + "', not '" + b.name() + "'");
      header = true;
    } else if (toks[0] == "connect") {
      if (toks.size() != 8 || toks[2] != ":" || toks[4] != "->" || toks[6] != "dual")
        fail("parse_error", "expected 'connect <label> : <i> -> <j> dual <path>'");
      if (q.find_arrow(toks[1])) fail("parse_error", "connecting label '" + toks[1] + "' is an arrow of B");
      for (const auto& c : spec.connects)
        if (c.label == toks[1]) fail("parse_error", "connecting label '" + toks[1] + "' defined twice");
      Path p;
      try {
        p = parse_path(q, toks[7]);
      } catch (const Error& e) {
        fail(e.kind(), e.what());
      }
      const auto it = std::find(b.basis().begin(), b.basis().end(), p);
      if (it == b.basis().end()) fail("parse_error", "'" + toks[7] + "' is not a basis path");
      if (vertex_of(toks[3]) != p.target || vertex_of(toks[5]) != p.source)
        fail("parse_error", "connecting arrow must go from the end of the path to its start");
      spec.connects.push_back({toks[1], static_cast<std::size_t>(it - b.basis().begin())});
    } else if (toks[0] == "vertex") {
      if (toks.size() != 6 || toks[2] != "->" || toks[4] != "shift")
        fail("parse_error", "expected 'vertex <i> -> <j> shift <s>'");
      auto& rule = spec.vertices[vertex_of(toks[1])];
      if (rule.set) fail("parse_error", "vertex '" + toks[1] + "' mapped twice");
      rule = {vertex_of(toks[3]), static_cast<int>(integer(toks[5])), true};
    } else if (toks[0] == "arrow") {
      if ((toks.size() != 6 && toks.size() != 8) || toks[2] != "->" || toks[4] != "shift" ||
          (toks.size() == 8 && toks[6] != "coeff"))
        fail("parse_error", "expected 'arrow <label> -> <label> shift <s> [coeff <c>]'");
      AutomorphismSpec::ArrowRule r{toks[1], toks[3], static_cast<int>(integer(toks[5])), Scalar::raw(1)};
      if (toks.size() == 8) r.coeff = Scalar(integer(toks[7]));
      if (r.coeff.is_zero()) fail("parse_error", "zero coefficient");
      spec.arrows.push_back(std::move(r));
    } else {
      fail("parse_error", "unknown directive '" + toks[0] + "'");
    }
  }
  if (!header) throw Error("parse_error", "missing 'automorphism' line");
  return spec;
}

/// Builds the automorphism and checks that it is one: a bijection on
/// objects, multiplicative on all products of basis keys, and bijective on
/// every hom space.
inline LazyAuto build_automorphism(const Repetitive& r, const AutomorphismSpec& spec) {
  const BoundQuiverAlgebra& b = r.base();
  const Quiver& q = b.quiver();
  const std::size_t n = r.base_dim(), nv = r.num_base_vertices();
  auto bad = [](const std::string& msg) { throw Error("invalid_automorphism", msg); };
  LazyAuto f;
  std::vector<bool> hit(nv, false);
  for (std::size_t i = 0; i < nv; ++i) {
    const auto& v = spec.vertices[i];
    if (!v.set) bad("no rule for vertex " + q.vertex(i));
    if (hit[v.target]) bad("vertex rule is not a bijection");
    hit[v.target] = true;
    f.vertex.emplace_back(v.shift, v.target);
  }

  std::map<std::string, Key> gen;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) gen[q.arrow(a).label] = {0, b.arrow_basis_index(a)};
  for (const auto& c : spec.connects) gen[c.label] = {1, n + c.path};
  std::map<std::string, LazyVec> gen_image;
  for (const auto& rule : spec.arrows) {
    if (!gen.count(rule.from)) bad("unknown label '" + rule.from + "'");
    if (!gen.count(rule.to)) bad("unknown label '" + rule.to + "'");
    if (gen_image.count(rule.from)) bad("label '" + rule.from + "' mapped twice");
    const Key k = gen.at(rule.to);
    gen_image[rule.from] = {{{k.first + rule.shift, k.second}, rule.coeff}};
  }
  for (const auto& [label, key] : gen) {
    if (!gen_image.count(label)) bad("no rule for '" + label + "'");
    const Object s = f.on_object(r.source(key)), t = f.on_object(r.target(key));
    for (const auto& [k, c] : gen_image[label])
      if (r.source(k) != s || r.target(k) != t) bad("image of '" + label + "' does not match the vertex rule");
  }

  // Paths of B from their arrows.
  f.image.assign(2 * n, {});
  for (std::size_t x = 0; x < n; ++x) {
    const Path& p = b.basis()[x];
    LazyVec v{{r.idempotent(f.on_object({0, p.source})), Scalar::raw(1)}};
    for (auto a : p.arrows) v = r.multiply(v, gen_image.at(q.arrow(a).label));
    f.image[x] = std::move(v);
  }
  // Duals from products u c w with c a connecting arrow.
  std::vector<Vec> rows;
  std::vector<LazyVec> row_images;
  for (const auto& c : spec.connects) {
    const Key ck = gen.at(c.label);
    for (std::size_t u = 0; u < n; ++u) {
      if (b.structure().target(u) != b.structure().target(c.path)) continue;
      const LazyVec uc = r.multiply({{{1, u}, Scalar::raw(1)}}, {{ck, Scalar::raw(1)}});
      if (uc.empty()) continue;
      const LazyVec uc_img = r.multiply(shifted(f.image[u], 1), gen_image.at(c.label));
      for (std::size_t w = 0; w < n; ++w) {
        if (b.structure().source(w) != b.structure().source(c.path)) continue;
        const LazyVec ucw = r.multiply(uc, {{{0, w}, Scalar::raw(1)}});
        if (ucw.empty()) continue;
        Vec row(n);
        for (const auto& [k, coef] : ucw) row[k.second - n] = coef;
        rows.push_back(std::move(row));
        row_images.push_back(r.multiply(uc_img, f.image[w]));
      }
    }
  }
  if (rows.empty() && n > 0) bad("no connecting arrows given");
  const Matrix t = Matrix::from_rows(rows, n);
  auto coef = solve_left(t, Matrix::identity(n));
  if (!coef) bad("connecting arrows do not generate the dual layers");
  for (std::size_t p = 0; p < n; ++p) {
    LazyVec v;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Scalar c = (*coef)(p, k);
      if (c.is_zero()) continue;
      for (const auto& [kk, cc] : row_images[k]) v[kk] += c * cc;
    }
    prune(v);
    f.image[n + p] = shifted(v, -1);
  }

  for (const auto& c : spec.connects)
    if (shifted(f.image[n + c.path], 1) != gen_image.at(c.label))
      bad("value on '" + c.label + "' is inconsistent with the other rules");
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const Key kx{0, x};
    const LazyVec fx = f.apply(kx);
    for (const Key& ky : r.keys_from(r.target(kx))) {
      LazyVec prod;
      r.multiply_keys(kx, ky, Scalar::raw(1), prod);
      prune(prod);
      if (f.apply(prod) != r.multiply(fx, f.apply(ky)))
        bad("not multiplicative on " + r.label(kx) + " * " + r.label(ky));
    }
  }
  for (std::size_t i = 0; i < nv; ++i)
    for (int dl : {0, -1})
      for (std::size_t j = 0; j < nv; ++j) {
        const Object x{0, i}, y{dl, j};
        const auto src = r.hom_keys(x, y);
        const auto dst = r.hom_keys(f.on_object(x), f.on_object(y));
        if (src.size() != dst.size()) bad("hom space dimensions are not preserved");
        if (src.empty()) continue;
        Matrix m(src.size(), dst.size());
        for (std::size_t s = 0; s < src.size(); ++s)
          for (const auto& [k, c] : f.apply(src[s])) {
            const auto it = std::find(dst.begin(), dst.end(), k);
            if (it == dst.end()) bad("image leaves the target hom space");
            m(s, static_cast<std::size_t>(it - dst.begin())) = c;
          }
        if (rank(m) != src.size()) bad("not injective on a hom space");
      }
  return f;
}

inline LazyAuto load_automorphism(const std::string& path, const Repetitive& r) {
  return build_automorphism(r, parse_automorphism(read_file(path), r.base()));
}

// ---------------------------------------------------------------------------
// Orbit algebras.

struct OrbitElement {
  std::size_t from = 0, to = 0;  // orbit vertices
  Key key;                       // from the representative of `from`
  int power = 0;                 // target is g^power of the representative of `to`
};

class OrbitAlgebra {
 public:
  OrbitAlgebra(std::shared_ptr<const Repetitive> rep, LazyAuto g, std::string name, int window)
      : rep_(std::move(rep)), g_(std::move(g)), window_(window) {
    g_inv_ = inverse_auto(*rep_, g_);
    check_admissible();
    collect_vertices();
    collect_elements();
    build_structure(name);
  }

  const Repetitive& repetitive() const { return *rep_; }
  const StructAlgebra& structure() const { return structure_; }
  const std::vector<Object>& representatives() const { return reps_; }
  const std::vector<OrbitElement>& elements() const { return elements_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Vec>& arrow_elements() const { return arrow_elements_; }

  /// Orbit members g^k(rep a) with layer in [lo, hi], as (k, object).
  std::vector<std::pair<int, Object>> members(std::size_t a, int lo, int hi) const {
    return walk(reps_[a], lo, hi);
  }

  std::size_t orbit_of(Object o) const { return index_.at(canonical(o)); }

  const LazyAuto& power(int k) const {
    auto it = powers_.find(k);
    if (it != powers_.end()) return it->second;
    if (std::abs(k) > window_) throw Error("window_too_small", "power " + std::to_string(k) + " exceeds the window");
    LazyAuto p = k == 0 ? identity_auto(*rep_) : then(power(k > 0 ? k - 1 : k + 1), k > 0 ? g_ : g_inv_);
    return powers_.emplace(k, std::move(p)).first->second;
  }

 private:
  void check_admissible() {
    const std::size_t nv = rep_->num_base_vertices();
    max_shift_ = 0;
    for (const auto& v : g_.vertex) max_shift_ = std::max(max_shift_, std::abs(v.first));
    std::vector<bool> seen(nv, false);
    for (std::size_t i = 0; i < nv; ++i) {
      if (seen[i]) continue;
      int total = 0;
      std::size_t j = i;
      do {
        seen[j] = true;
        total += g_.vertex[j].first;
        j = g_.vertex[j].second;
      } while (j != i);
      if (total <= 0) throw Error("not_admissible", "automorphism does not move every orbit up the layers");
    }
    reach_ = max_shift_ * static_cast<int>(nv) + 1;
  }

  std::vector<std::pair<int, Object>> walk(Object x, int lo, int hi) const {
    int k = 0;
    Object o = x;
    while (o.first >= lo - reach_) {
      o = g_inv_.on_object(o);
      --k;
    }
    std::vector<std::pair<int, Object>> out;
    while (o.first <= hi + reach_) {
      if (o.first >= lo && o.first <= hi) out.emplace_back(k, o);
      o = g_.on_object(o);
      ++k;
    }
    return out;
  }

  Object canonical(Object x) const {
    auto ms = walk(x, 0, reach_);
    Object best = ms.front().second;
    for (const auto& [k, o] : ms) best = std::min(best, o);
    return best;
  }

  void collect_vertices() {
    std::set<Object> found;
    for (int m = 0; m <= reach_; ++m)
      for (std::size_t i = 0; i < rep_->num_base_vertices(); ++i) found.insert(canonical({m, i}));
    reps_.assign(found.begin(), found.end());
    for (std::size_t a = 0; a < reps_.size(); ++a) index_[reps_[a]] = a;
  }

  void collect_elements() {
    for (std::size_t a = 0; a < reps_.size(); ++a) {
      const Object x = reps_[a];
      const std::size_t first = elements_.size();
      for (std::size_t b = 0; b < reps_.size(); ++b)
        for (const auto& [k, y] : walk(reps_[b], x.first - 1, x.first)) {
          if (std::abs(k) > window_) throw Error("window_too_small", "orbit members beyond the window are needed");
          for (const Key& key : rep_->hom_keys(x, y)) {
            element_index_[{a, key}] = elements_.size();
            elements_.push_back({a, b, key, k});
          }
        }
      // idempotent of the orbit first within its block
      const Key e = rep_->idempotent(x);
      auto it = std::find_if(elements_.begin() + static_cast<long>(first), elements_.end(),
                             [&](const OrbitElement& el) { return el.key == e; });
      idempotent_.push_back(static_cast<std::size_t>(it - elements_.begin()));
    }
  }

  void build_structure(const std::string& name) {
    std::vector<std::string> names;
    for (const auto& o : reps_) names.push_back(rep_->object_name(o));
    structure_ = StructAlgebra(name, names);
    for (const auto& el : elements_) structure_.add_basis(rep_->label(el.key), el.from, el.to);
    structure_.finalize_basis(idempotent_);
    for (std::size_t u = 0; u < elements_.size(); ++u) {
      const auto& eu = elements_[u];
      if (structure_.is_idempotent(u)) continue;
      for (std::size_t v = 0; v < elements_.size(); ++v) {
        const auto& ev = elements_[v];
        if (ev.from != eu.to || structure_.is_idempotent(v)) continue;
        const LazyVec prod = rep_->multiply({{eu.key, Scalar::raw(1)}}, power(eu.power).apply(ev.key));
        SparseVec out;
        for (const auto& [k, c] : prod) {
          auto it = element_index_.find({eu.from, k});
          if (it == element_index_.end() || elements_[it->second].power != eu.power + ev.power)
            throw Error("window_too_small", "product leaves the fundamental domain");
          out.emplace_back(it->second, c);
        }
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        structure_.set_product(u, v, std::move(out));
      }
    }
    structure_.check_associative();
    Presented p = presentation_from_struct(structure_);
    to_struct_ = p.to_struct;
    arrow_elements_ = p.arrow_elements;
    algebra_ = std::make_shared<const BoundQuiverAlgebra>(std::move(p.algebra));
  }

  std::shared_ptr<const Repetitive> rep_;
  LazyAuto g_, g_inv_;
  int window_ = 0;
  int max_shift_ = 0;
  int reach_ = 1;
  std::vector<Object> reps_;
  std::map<Object, std::size_t> index_;
  std::vector<OrbitElement> elements_;
  std::map<std::pair<std::size_t, Key>, std::size_t> element_index_;
  std::vector<std::size_t> idempotent_;
  StructAlgebra structure_;
  Matrix to_struct_;
  std::vector<Vec> arrow_elements_;
  AlgebraPtr algebra_;
  mutable std::map<int, LazyAuto> powers_;
};

/// The orbit algebra of the repetitive category of b under the group
/// generated by f^r.  Only powers of absolute value at most `window` are used.
inline OrbitAlgebra orbit_algebra(const AlgebraPtr& b, const LazyAuto& f, std::size_t r, int window = 16,
                                  const std::string& name = {}) {
  if (r == 0) throw Error("bad_argument", "orbit_algebra: r must be positive");
  auto rep = std::make_shared<const Repetitive>(b);
  const std::string n = name.empty() ? b->name() + "^/G" : name;
  return OrbitAlgebra(rep, auto_power(*rep, f, r), n, window);
}

// ---------------------------------------------------------------------------
// Pushdown from a window of the repetitive category.

struct RepetitiveWindow {
  AlgebraPtr base;
  std::size_t layers = 0;
  AlgebraPtr algebra;  // presentation of replicated(base, layers)
  Matrix from_struct;

  std::size_t vertex(Object o) const { return static_cast<std::size_t>(o.first) * base->num_vertices() + o.second; }
  bool contains(Object o) const { return o.first >= 0 && o.first < static_cast<int>(layers); }

  std::size_t struct_index(Key k) const {
    const std::size_t n = base->dim();
    if (k.second < n) return static_cast<std::size_t>(k.first) * n + k.second;
    return layers * n + static_cast<std::size_t>(k.first - 1) * n + (k.second - n);
  }
};

inline RepetitiveWindow make_window(const AlgebraPtr& b, std::size_t layers) {
  StructAlgebra s = replicated(*b, layers);
  Presented p = presentation_from_struct(s);
  RepetitiveWindow w;
  w.base = b;
  w.layers = layers;
  w.from_struct = p.from_struct;
  w.algebra = std::make_shared<const BoundQuiverAlgebra>(std::move(p.algebra));
  return w;
}

/// (F M)(a) is the sum of M(y) over the members y of the orbit a inside the
/// window.
inline Representation pushdown(const RepetitiveWindow& w, const Representation& x, const OrbitAlgebra& o) {
  if (x.algebra_ptr() != w.algebra && !x.algebra().same_quiver(*w.algebra))
    throw Error("algebra_mismatch", "pushdown: module is not over the window algebra");
  if (w.base.get() != &o.repetitive().base() && !w.base->same_quiver(o.repetitive().base()))
    throw Error("algebra_mismatch", "pushdown: window and orbit algebra have different base algebras");
  const std::size_t nb = o.representatives().size();
  const int top = static_cast<int>(w.layers) - 1;
  std::vector<std::vector<std::pair<int, Object>>> comps(nb);
  std::vector<std::size_t> dims(nb, 0);
  std::vector<std::map<int, std::size_t>> comp_offset(nb);
  for (std::size_t a = 0; a < nb; ++a) {
    comps[a] = o.members(a, 0, top);
    for (const auto& [k, y] : comps[a]) {
      comp_offset[a][k] = dims[a];
      dims[a] += x.dim(w.vertex(y));
    }
  }
  const std::size_t wdim = w.algebra->dim();
  auto act = [&](const OrbitElement& el) {
    Matrix m(dims[el.from], dims[el.to]);
    for (const auto& [l, y] : comps[el.from]) {
      auto tgt = comp_offset[el.to].find(l + el.power);
      if (tgt == comp_offset[el.to].end()) continue;
      const Object z = o.power(l + el.power).on_object(o.representatives()[el.to]);
      const std::size_t dy = x.dim(w.vertex(y)), dz = x.dim(w.vertex(z));
      if (!dy || !dz) continue;
      Vec coords(wdim);
      for (const auto& [k, c] : o.power(l).apply(el.key)) {
        const Vec row = w.from_struct.row(w.struct_index(k));
        for (std::size_t i = 0; i < wdim; ++i) coords[i] += c * row[i];
      }
      const Matrix full = x.element_action(coords);
      m.set_block(comp_offset[el.from].at(l), tgt->second, full.block(x.offset(w.vertex(y)), x.offset(w.vertex(z)), dy, dz));
    }
    return m;
  };
  const auto& q = o.algebra()->quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Vec& e = o.arrow_elements()[a];
    Matrix m(dims[q.arrow(a).source], dims[q.arrow(a).target]);
    for (std::size_t u = 0; u < e.size(); ++u)
      if (!e[u].is_zero()) m = m + e[u] * act(o.elements()[u]);
    maps.push_back(std::move(m));
  }
  Representation out(o.algebra(), dims, std::move(maps), "F(" + x.name() + ")");
  out.validate();
  return out;
}

}  // namespace qra

#endif  // QRA_ORBIT_HPP
