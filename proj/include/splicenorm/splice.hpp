#pragma once

// Splice diagrams of 2-component graph links.
//
// A diagram is a weighted tree. Nodes are Seifert pieces, boundary vertices
// are singular-fiber neighbourhoods and arrowheads are the link components.
// Weights live on edge ends; only node-end weights enter the linking-number
// rule, leaf-end weights are carried through parse/render untouched.
//
// Text format (one statement per line, `#` starts a comment):
//
//   diagram <name>
//   node <id>
//   bvertex <id>
//   arrow <id>
//   edge <idA> <idB> <weight_at_A> <weight_at_B>
//
// Arrowheads are K1, K2 in declaration order.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "splicenorm/numeric.hpp"

namespace splicenorm {

enum class VertexKind { Node, BoundaryVertex, Arrowhead };

inline std::string_view keyword(VertexKind k) {
  switch (k) {
    case VertexKind::Node: return "node";
    case VertexKind::BoundaryVertex: return "bvertex";
    case VertexKind::Arrowhead: return "arrow";
  }
  return "?";
}

struct Vertex {
  std::string id;
  VertexKind kind;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string a;
  std::string b;
  std::int64_t weight_a = 1;
  std::int64_t weight_b = 1;

  friend bool operator==(const Edge&, const Edge&) = default;

  bool touches(std::string_view id) const { return a == id || b == id; }
  std::int64_t weight_at(std::string_view id) const { return id == a ? weight_a : weight_b; }
  const std::string& other(std::string_view id) const { return id == a ? b : a; }
};

namespace splice {

class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& message)
      : Error("splice.SyntaxError", "line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& id)
      : Error("splice.UnknownVertex", "unknown vertex '" + id + "'") {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("splice.InvalidArgument", what) {}
};

enum class ViolationKind {
  DuplicateId,
  UnknownEndpoint,
  NonpositiveWeight,
  NotATree,
  LeafKind,
  ArrowheadCount,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationKind::NonpositiveWeight: return "NonpositiveWeight";
    case ViolationKind::NotATree: return "NotATree";
    case ViolationKind::LeafKind: return "LeafKind";
    case ViolationKind::ArrowheadCount: return "ArrowheadCount";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> v)
      : Error("splice.ValidationError", summarize(v)), violations(std::move(v)) {}
  std::vector<Violation> violations;

 private:
  static std::string summarize(const std::vector<Violation>& v) {
    std::string s = "invalid diagram:";
    for (const auto& x : v) s += " [" + std::string(to_string(x.kind)) + ": " + x.message + "]";
    return s;
  }
};

}  // namespace splice

class SpliceDiagram {
 public:
  SpliceDiagram() = default;
  SpliceDiagram(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges)
      : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.try_emplace(vertices_[i].id, i);
  }

  const std::string& name() const { return name_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

  const Vertex& vertex(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw splice::UnknownVertex(std::string(id));
    return vertices_[it->second];
  }

  std::size_t degree(std::string_view id) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.touches(id); }));
  }

  std::vector<std::string> ids_of(VertexKind kind) const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
      if (v.kind == kind) out.push_back(v.id);
    return out;
  }

  /// Arrowhead ids in declaration order: K1 then K2.
  std::vector<std::string> arrowheads() const { return ids_of(VertexKind::Arrowhead); }

  /// Indices into edges() of the unique tree path from `from` to `to`.
  std::vector<std::size_t> path_edges(std::string_view from, std::string_view to) const {
    vertex(from);
    vertex(to);
    std::unordered_map<std::string, std::size_t> via;  // vertex -> edge used to reach it
    std::queue<std::string> frontier;
    frontier.push(std::string(from));
    via.emplace(std::string(from), edges_.size());
    while (!frontier.empty()) {
      std::string cur = frontier.front();
      frontier.pop();
      if (cur == to) break;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!edges_[i].touches(cur)) continue;
        const std::string& nxt = edges_[i].other(cur);
        if (via.try_emplace(nxt, i).second) frontier.push(nxt);
      }
    }
    if (!via.count(std::string(to)))
      throw splice::InvalidArgument("no path between '" + std::string(from) + "' and '" + std::string(to) + "'");
    std::vector<std::size_t> path;
    std::string cur(to);
    while (cur != from) {
      std::size_t e = via.at(cur);
      path.push_back(e);
      cur = edges_[e].other(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  friend bool operator==(const SpliceDiagram& a, const SpliceDiagram& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline std::vector<splice::Violation> validate(const SpliceDiagram& d) {
  using splice::Violation;
  using splice::ViolationKind;
  std::vector<Violation> out;

  std::set<std::string> seen;
  for (const auto& v : d.vertices())
    if (!seen.insert(v.id).second) out.push_back({ViolationKind::DuplicateId, v.id});

  bool endpoints_ok = true;
  for (const auto& e : d.edges()) {
    for (const auto* id : {&e.a, &e.b})
      if (!d.contains(*id)) {
        out.push_back({ViolationKind::UnknownEndpoint, *id});
        endpoints_ok = false;
      }
    if (e.weight_a < 1 || e.weight_b < 1)
      out.push_back({ViolationKind::NonpositiveWeight, e.a + "--" + e.b});
  }

  // Tree check: |E| = |V| - 1 and connected (self-loops and multi-edges
  // then necessarily break one of the two).
  const std::size_t nv = d.vertices().size();
  bool tree = nv > 0 && d.edges().size() + 1 == nv && endpoints_ok;
  if (tree) {
    std::vector<std::size_t> parent(nv);
    for (std::size_t i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto idx = [&](const std::string& id) {
      const auto& vs = d.vertices();
      return static_cast<std::size_t>(
          std::find_if(vs.begin(), vs.end(), [&](const Vertex& v) { return v.id == id; }) - vs.begin());
    };
    for (const auto& e : d.edges()) {
      auto ra = find(idx(e.a)), rb = find(idx(e.b));
      if (ra == rb) {
        tree = false;
        break;
      }
      parent[ra] = rb;
    }
  }
  if (!tree)
    out.push_back({ViolationKind::NotATree, std::to_string(nv) + " vertices, " +
                                                std::to_string(d.edges().size()) + " edges"});

  for (const auto& v : d.vertices())
    if (v.kind != VertexKind::Node && d.degree(v.id) != 1)
      out.push_back({ViolationKind::LeafKind, v.id + " has degree " + std::to_string(d.degree(v.id))});

  const auto arrows = d.arrowheads().size();
  if (arrows != 2) out.push_back({ViolationKind::ArrowheadCount, std::to_string(arrows) + " arrowheads"});
  return out;
}

inline void require_valid(const SpliceDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw splice::ValidationError(std::move(v));
}

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

inline SpliceDiagram parse_diagram(std::string_view text) {
  std::optional<std::string> name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::tokenize(line);
    if (tok.empty()) continue;

    const std::string_view kw = tok[0];
    auto expect = [&](std::size_t n) {
      if (tok.size() != n)
        throw splice::SyntaxError(lineno, "'" + std::string(kw) + "' expects " + std::to_string(n - 1) +
                                              " argument(s), got " + std::to_string(tok.size() - 1));
    };
    if (kw == "diagram") {
      expect(2);
      if (name) throw splice::SyntaxError(lineno, "duplicate 'diagram' header");
      name = std::string(tok[1]);
      continue;
    }
    if (!name) throw splice::SyntaxError(lineno, "expected 'diagram <name>' before '" + std::string(kw) + "'");
    if (kw == "node" || kw == "bvertex" || kw == "arrow") {
      expect(2);
      const VertexKind k = kw == "node"      ? VertexKind::Node
                           : kw == "bvertex" ? VertexKind::BoundaryVertex
                                             : VertexKind::Arrowhead;
      vertices.push_back({std::string(tok[1]), k});
    } else if (kw == "edge") {
      expect(5);
      auto wa = detail::parse_int(tok[3]);
      auto wb = detail::parse_int(tok[4]);
      if (!wa || !wb) throw splice::SyntaxError(lineno, "edge weights must be integers");
      edges.push_back({std::string(tok[1]), std::string(tok[2]), *wa, *wb});
    } else {
      throw splice::SyntaxError(lineno, "unknown statement '" + std::string(kw) + "'");
    }
  }
  if (!name) throw splice::SyntaxError(lineno == 0 ? 1 : lineno, "missing 'diagram <name>' header");

  SpliceDiagram d(std::move(*name), std::move(vertices), std::move(edges));
  require_valid(d);
  return d;
}

inline std::string render_diagram(const SpliceDiagram& d) {
  std::ostringstream os;
  os << "diagram " << d.name() << '\n';
  for (const auto& v : d.vertices()) os << keyword(v.kind) << ' ' << v.id << '\n';
  for (const auto& e : d.edges()) os << "edge " << e.a << ' ' << e.b << ' ' << e.weight_a << ' ' << e.weight_b << '\n';
  return os.str();
}

/// The link K^(2n): a chain of 2n Seifert nodes H1..H2n, each carrying a
/// multiple fiber S_i of order 3, with K1 on H1 and K2 on H2n.
inline SpliceDiagram build_k2n(int n) {
  if (n < 1) throw splice::InvalidArgument("build_k2n: n must be >= 1");
  const int m = 2 * n;
  std::vector<Vertex> vs;
  for (int i = 1; i <= m; ++i) vs.push_back({"H" + std::to_string(i), VertexKind::Node});
  for (int i = 1; i <= m; ++i) vs.push_back({"S" + std::to_string(i), VertexKind::BoundaryVertex});
  vs.push_back({"K1", VertexKind::Arrowhead});
  vs.push_back({"K2", VertexKind::Arrowhead});

  std::vector<Edge> es;
  es.push_back({"H1", "K1", 1, 1});
  for (int i = 1; i <= m; ++i) {
    const std::string h = "H" + std::to_string(i);
    es.push_back({h, "S" + std::to_string(i), 3, 1});
    if (i < m) es.push_back({h, "H" + std::to_string(i + 1), 1, 1});
  }
  es.push_back({"H" + std::to_string(m), "K2", 1, 1});
  return SpliceDiagram("K" + std::to_string(m), std::move(vs), std::move(es));
}

/// Path-product rule: multiply, over every node on the path from v to w
/// (endpoints included), the node-end weights of its edges off the path.
inline std::int64_t linking_number(const SpliceDiagram& d, std::string_view v, std::string_view w) {
  if (v == w) throw splice::InvalidArgument("linking_number: vertices must differ");
  const auto path = d.path_edges(v, w);

  std::vector<std::string_view> on_path{v};
  std::string_view cur = v;
  for (auto e : path) {
    cur = d.edges()[e].other(cur);
    on_path.push_back(cur);
  }

  std::int64_t product = 1;
  for (auto id : on_path) {
    if (d.vertex(id).kind != VertexKind::Node) continue;
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      const Edge& e = d.edges()[i];
      if (!e.touches(id) || std::find(path.begin(), path.end(), i) != path.end()) continue;
      product = checked::mul(product, e.weight_at(id));
    }
  }
  return product;
}

/// Linking data of one virtual component (a node or boundary vertex).
struct VirtualForm {
  std::string id;
  VertexKind kind;
  std::size_t degree;
  std::int64_t lk1;  // lk(K1, v)
  std::int64_t lk2;  // lk(K2, v)
};

/// Linking forms of every node and boundary vertex, in declaration order.
inline std::vector<VirtualForm> virtual_forms(const SpliceDiagram& d) {
  const auto arrows = d.arrowheads();
  if (arrows.size() != 2) throw splice::InvalidArgument("diagram must have exactly two arrowheads");
  std::vector<VirtualForm> out;
  for (const auto& v : d.vertices()) {
    if (v.kind == VertexKind::Arrowhead) continue;
    out.push_back({v.id, v.kind, d.degree(v.id), linking_number(d, arrows[0], v.id),
                   linking_number(d, arrows[1], v.id)});
  }
  return out;
}

inline std::int64_t link_linking_number(const SpliceDiagram& d) {
  const auto arrows = d.arrowheads();
  if (arrows.size() != 2) throw splice::InvalidArgument("diagram must have exactly two arrowheads");
  return linking_number(d, arrows[0], arrows[1]);
}

/// Returns n when d is build_k2n(n) up to its name.
inline std::optional<int> recognize_k2n(const SpliceDiagram& d) {
  const auto nodes = d.ids_of(VertexKind::Node).size();
  if (nodes == 0 || nodes % 2 != 0) return std::nullopt;
  const int n = static_cast<int>(nodes / 2);
  const SpliceDiagram ref = build_k2n(n);
  if (d.vertices() == ref.vertices() && d.edges() == ref.edges()) return n;
  return std::nullopt;
}

}  // namespace splicenorm
