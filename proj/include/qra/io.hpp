#ifndef QRA_IO_HPP
#define QRA_IO_HPP

// Text formats (.rep, .list) and DOT output.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qra/presentation.hpp"
#include "qra/repcat.hpp"

namespace qra {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path);
  out << text;
}

inline AlgebraPtr load_algebra(const std::string& path) {
  return std::make_shared<const BoundQuiverAlgebra>(parse_algebra(read_file(path)));
}

inline Matrix parse_matrix(const std::string& text, std::size_t rows, std::size_t cols) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error("parse_error", "malformed matrix '" + text + "'");
  }
  if (!j.is_array()) throw Error("parse_error", "matrix must be a list of rows");
  if (j.size() != rows && !(rows == 0 && j.empty()))
    throw Error("shape_mismatch", "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw Error("shape_mismatch", "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) throw Error("parse_error", "matrix entries must be integers");
      m(r, c) = Scalar(row[c].get<std::int64_t>());
    }
  }
  return m;
}

/// Parses `.rep` text against an algebra.  Arrows without a map line act as
/// zero.  The module is validated against the relations.
inline Representation parse_representation(const std::string& text, const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  std::vector<std::pair<std::size_t, std::string>> map_lines;
  std::string name;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& kind, const std::string& msg) {
    throw Error(kind, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    if (toks[0] == "module") {
      if (toks.size() != 4 || toks[2] != "over") fail("parse_error", "expected 'module <name> over <algebra>'");
      name = toks[1];
      if (toks[3] != alg->name()) fail("algebra_mismatch", "module is over '" + toks[3] + "', not '" + alg->name() + "'");
    } else if (toks[0] == "dim") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) fail("parse_error", "expected <vertex>=<n>");
        auto v = q.find_vertex(toks[i].substr(0, eq));
        if (!v) fail("unknown_vertex", "unknown vertex '" + toks[i].substr(0, eq) + "'");
        try {
          dims[*v] = std::stoul(toks[i].substr(eq + 1));
        } catch (...) {
          fail("parse_error", "bad dimension '" + toks[i] + "'");
        }
      }
    } else if (toks[0] == "map") {
      map_lines.emplace_back(lineno, s);
    } else {
      fail("parse_error", "unknown directive '" + toks[0] + "'");
    }
  }
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.source], dims[ar.target]);
  std::vector<bool> seen(q.num_arrows(), false);
  for (const auto& [ln, s] : map_lines) {
    lineno = ln;
    auto eq = s.find('=');
    if (eq == std::string::npos) fail("parse_error", "expected 'map <arrow> = [[...]]'");
    auto head = split_ws(s.substr(0, eq));
    if (head.size() != 2) fail("parse_error", "expected 'map <arrow> = [[...]]'");
    auto a = q.find_arrow(head[1]);
    if (!a) fail("unknown_arrow", "unknown arrow '" + head[1] + "'");
    if (seen[*a]) fail("parse_error", "arrow '" + head[1] + "' mapped twice");
    seen[*a] = true;
    try {
      maps[*a] = parse_matrix(s.substr(eq + 1), dims[q.arrow(*a).source], dims[q.arrow(*a).target]);
    } catch (const Error& e) {
      fail(e.kind(), e.what());
    }
  }
  Representation r(alg, std::move(dims), std::move(maps), name);
  r.validate();
  return r;
}

inline Representation load_representation(const std::string& path, const AlgebraPtr& alg) {
  return parse_representation(read_file(path), alg);
}

inline std::string format_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += std::to_string(m(r, c).signed_value());
    }
    s += "]";
  }
  return s + "]";
}

inline std::string to_rep_text(const Representation& x, const std::string& name) {
  std::ostringstream out;
  const Quiver& q = x.algebra().quiver();
  out << "module " << name << " over " << x.algebra().name() << "\n";
  out << "dim";
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out << " " << q.vertex(v) << "=" << x.dim(v);
  out << "\n";
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (x.map(a).is_zero()) continue;
    out << "map " << q.arrow(a).label << " = " << format_matrix(x.map(a)) << "\n";
  }
  return out.str();
}

/// `.list`: one `.rep` path per line, relative to the list file.
inline std::vector<std::string> read_list(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  const auto dir = std::filesystem::path(path).parent_path();
  while (std::getline(in, line)) {
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    const std::filesystem::path p(s);
    out.push_back(p.is_absolute() ? s : (dir / p).string());
  }
  return out;
}

inline std::vector<Representation> load_list(const std::string& path, const AlgebraPtr& alg) {
  std::vector<Representation> out;
  for (const auto& f : read_list(path)) out.push_back(load_representation(f, alg));
  return out;
}

inline std::string emit_dot(const BoundQuiverAlgebra& a) {
  std::ostringstream out;
  const Quiver& q = a.quiver();
  out << "digraph \"" << a.name() << "\" {\n";
  if (!a.relations().empty()) {
    out << "  /* relations:\n";
    for (const auto& r : a.relations()) out << "     " << format_relation(q, r) << "\n";
    out << "  */\n";
  }
  for (const auto& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& ar : q.arrows())
    out << "  \"" << q.vertex(ar.source) << "\" -> \"" << q.vertex(ar.target) << "\" [label=\"" << ar.label
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qra

#endif  // QRA_IO_HPP
