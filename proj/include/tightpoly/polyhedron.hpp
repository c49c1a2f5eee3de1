#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tightpoly/errors.hpp"
#include "tightpoly/group.hpp"
#include "tightpoly/sggi.hpp"

namespace tightpoly {

using CellIndex = std::uint32_t;

/// Flags are group elements; the i-adjacent flag of x is x rho_i. Vertices,
/// edges and faces are the left cosets of <rho1,rho2>, <rho0,rho2> and
/// <rho0,rho1>, numbered in order of their least flag.
struct MapStructure {
  std::array<std::vector<Element>, 3> adjacency;
  std::vector<std::vector<Element>> vertices;
  std::vector<std::vector<Element>> edges;
  std::vector<std::vector<Element>> faces;
  std::vector<CellIndex> vertex_of;
  std::vector<CellIndex> edge_of;
  std::vector<CellIndex> face_of;
  std::vector<std::vector<CellIndex>> edge_vertices;
  std::vector<std::vector<CellIndex>> edge_faces;
  std::vector<std::vector<CellIndex>> vertex_faces;

  std::size_t flag_count() const noexcept { return vertex_of.size(); }
};

struct MapInvariants {
  long long euler_characteristic = 0;
  bool orientable = false;
  std::size_t edge_multiplicity = 0;
  bool has_multiple_edges = false;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
};

namespace detail {

/// Orbits of the flags under the two given adjacencies.
inline std::vector<CellIndex> orbits(const std::array<std::vector<Element>, 3>& adj, int skip,
                                     std::vector<std::vector<Element>>& cells) {
  const std::size_t n = adj[0].size();
  constexpr auto unset = static_cast<CellIndex>(-1);
  std::vector<CellIndex> cell_of(n, unset);
  for (Element start = 0; start < n; ++start) {
    if (cell_of[start] != unset) continue;
    const auto id = static_cast<CellIndex>(cells.size());
    std::vector<Element> members{start};
    cell_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int r = 0; r < 3; ++r) {
        if (r == skip) continue;
        const Element y = adj[r][members[head]];
        if (cell_of[y] == unset) {
          cell_of[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cells.push_back(std::move(members));
  }
  return cell_of;
}

inline std::vector<std::vector<CellIndex>> incidence(const std::vector<std::vector<Element>>& cells,
                                                     const std::vector<CellIndex>& other_of) {
  std::vector<std::vector<CellIndex>> out(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (Element x : cells[c]) out[c].push_back(other_of[x]);
    std::sort(out[c].begin(), out[c].end());
    out[c].erase(std::unique(out[c].begin(), out[c].end()), out[c].end());
  }
  return out;
}

inline bool sorted_contains(const std::vector<CellIndex>& v, CellIndex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace detail

inline MapStructure build_map(const RegularRepresentation& rep) {
  MapStructure map;
  for (Generator g : kGenerators) {
    auto img = rep.image(g);
    map.adjacency[index_of(g)].assign(img.begin(), img.end());
  }
  map.vertex_of = detail::orbits(map.adjacency, 0, map.vertices);
  map.edge_of = detail::orbits(map.adjacency, 1, map.edges);
  map.face_of = detail::orbits(map.adjacency, 2, map.faces);
  map.edge_vertices = detail::incidence(map.edges, map.vertex_of);
  map.edge_faces = detail::incidence(map.edges, map.face_of);
  map.vertex_faces = detail::incidence(map.vertices, map.face_of);
  return map;
}

/// Axioms (1)-(4): flags are distinct incident triples and every incident
/// triple is a flag; edges have two vertices and two faces; the vertex-edge
/// graph is connected; each vertex-figure is one cycle.
inline bool validate_polyhedron(const MapStructure& map) {
  const std::size_t V = map.vertices.size();
  const std::size_t E = map.edges.size();
  const std::size_t F = map.faces.size();
  if (V == 0 || E == 0 || F == 0) return false;

  std::vector<std::tuple<CellIndex, CellIndex, CellIndex>> triples;
  triples.reserve(map.flag_count());
  for (Element x = 0; x < map.flag_count(); ++x) {
    triples.emplace_back(map.vertex_of[x], map.edge_of[x], map.face_of[x]);
  }
  std::sort(triples.begin(), triples.end());
  if (std::adjacent_find(triples.begin(), triples.end()) != triples.end()) return false;

  for (CellIndex e = 0; e < E; ++e) {
    if (map.edge_vertices[e].size() != 2 || map.edge_faces[e].size() != 2) return false;
    for (CellIndex v : map.edge_vertices[e]) {
      for (CellIndex f : map.edge_faces[e]) {
        if (!detail::sorted_contains(map.vertex_faces[v], f)) return false;
        if (!std::binary_search(triples.begin(), triples.end(), std::tuple(v, e, f))) return false;
      }
    }
  }

  std::vector<std::vector<CellIndex>> vertex_edges(V);
  for (CellIndex e = 0; e < E; ++e) {
    for (CellIndex v : map.edge_vertices[e]) vertex_edges[v].push_back(e);
  }
  std::vector<bool> seen(V, false);
  std::queue<CellIndex> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const CellIndex v = todo.front();
    todo.pop();
    for (CellIndex e : vertex_edges[v]) {
      for (CellIndex w : map.edge_vertices[e]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          todo.push(w);
        }
      }
    }
  }
  if (reached != V) return false;

  // vertex-figure: edges and faces at v, joined when incident
  for (CellIndex v = 0; v < V; ++v) {
    const auto& es = vertex_edges[v];
    const auto& fs = map.vertex_faces[v];
    std::map<CellIndex, std::vector<CellIndex>> face_edges;
    for (CellIndex e : es) {
      for (CellIndex f : map.edge_faces[e]) {
        if (!detail::sorted_contains(fs, f)) return false;
        face_edges[f].push_back(e);
      }
    }
    if (face_edges.size() != fs.size()) return false;
    for (const auto& [f, list] : face_edges) {
      if (list.size() != 2) return false;
    }
    // walk the cycle starting at the first edge
    std::size_t steps = 0;
    CellIndex e = es.front();
    CellIndex f = map.edge_faces[e][0];
    do {
      const auto& pair = face_edges[f];
      e = pair[0] == e ? pair[1] : pair[0];
      f = map.edge_faces[e][0] == f ? map.edge_faces[e][1] : map.edge_faces[e][0];
      ++steps;
    } while (e != es.front() && steps <= es.size());
    if (steps != es.size()) return false;
  }
  return true;
}

/// Largest number of edges joining one pair of vertices.
inline std::size_t edge_multiplicity(const MapStructure& map) {
  std::map<std::pair<CellIndex, CellIndex>, std::size_t> count;
  std::size_t best = 0;
  for (const auto& ends : map.edge_vertices) {
    const CellIndex a = ends.front();
    const CellIndex b = ends.back();
    best = std::max(best, ++count[{a, b}]);
  }
  return best;
}

inline bool detect_multiple_edges(const MapStructure& map) { return edge_multiplicity(map) >= 2; }

inline MapInvariants map_invariants(const MapStructure& map, const RegularRepresentation& rep) {
  MapInvariants inv;
  inv.vertex_count = map.vertices.size();
  inv.edge_count = map.edges.size();
  inv.face_count = map.faces.size();
  inv.euler_characteristic = static_cast<long long>(inv.vertex_count) - static_cast<long long>(inv.edge_count) +
                             static_cast<long long>(inv.face_count);
  inv.orientable = orientability(rep);
  inv.edge_multiplicity = edge_multiplicity(map);
  inv.has_multiple_edges = inv.edge_multiplicity >= 2;
  return inv;
}

/// Vertex permutation induced by g, with v·g := g^{-1} v on cosets.
inline std::vector<CellIndex> vertex_permutation(const RegularRepresentation& rep, const MapStructure& map,
                                                 Element g) {
  const Element g_inv = rep.inverse(g);
  std::vector<CellIndex> out(map.vertices.size());
  for (CellIndex v = 0; v < map.vertices.size(); ++v) {
    out[v] = map.vertex_of[rep.multiply(g_inv, map.vertices[v].front())];
  }
  return out;
}

/// Labels 0..p-1 with the base vertex at 1 and label(v·sigma1) = label(v) + 1.
inline std::vector<int> vertex_labels(const RegularRepresentation& rep, const MapStructure& map) {
  const std::size_t V = map.vertices.size();
  const auto step = vertex_permutation(rep, map, rep.sigma1());
  constexpr int unset = -1;
  std::vector<int> label(V, unset);
  CellIndex v = map.vertex_of[kIdentity];
  for (std::size_t t = 0; t < V; ++t) {
    if (label[v] != unset) throw LabelError("sigma1 is not a cycle on all " + std::to_string(V) + " vertices");
    label[v] = static_cast<int>((1 + t) % V);
    v = step[v];
  }
  if (v != map.vertex_of[kIdentity]) throw LabelError("sigma1 does not close up on the base vertex");
  return label;
}

/// Whether sigma2 moves label i to k(2-i)/2 (i even) or 1 + k(1-i)/2 (i odd).
inline bool check_vertex_action(const RegularRepresentation& rep, int k) {
  const MapStructure map = build_map(rep);
  const std::vector<int> label = vertex_labels(rep, map);
  const long long p = static_cast<long long>(map.vertices.size());
  if (p % 2 != 0) return false;
  const auto step = vertex_permutation(rep, map, rep.sigma2());
  for (CellIndex v = 0; v < map.vertices.size(); ++v) {
    const long long i = label[v];
    const long long expected = i % 2 == 0 ? residue(k * (2 - i) / 2, p) : residue(1 + k * (1 - i) / 2, p);
    if (label[step[v]] != expected) return false;
  }
  return true;
}

/// Vertices met walking around the face of `start`, alternating 0- and
/// 1-adjacency, beginning with the vertex of `start`.
inline std::vector<CellIndex> face_walk_from(const MapStructure& map, Element start) {
  std::vector<CellIndex> walk;
  Element x = start;
  do {
    walk.push_back(map.vertex_of[x]);
    x = map.adjacency[1][map.adjacency[0][x]];
  } while (x != start);
  return walk;
}

inline std::vector<CellIndex> face_walk(const MapStructure& map, CellIndex face) {
  return face_walk_from(map, map.faces.at(face).front());
}

}  // namespace tightpoly
