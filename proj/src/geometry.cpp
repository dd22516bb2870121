#include "hexaproc/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hexaproc {

bool edge_adjacent(const Vertex& a, const Vertex& b) {
  int diff = 0;
  for (int i = 0; i < 3; ++i) diff += (a.e[i] != b.e[i]) ? 1 : 0;
  return diff == 1;
}

std::array<Vertex, 8> cube_vertices() {
  std::array<Vertex, 8> out;
  for (int k = 0; k < 8; ++k) {
    // bit 2 -> first coordinate, so the list is lexicographic
    out[static_cast<std::size_t>(k)] = Vertex{Vec3i{{(k & 4) ? 1 : -1,
                                                     (k & 2) ? 1 : -1,
                                                     (k & 1) ? 1 : -1}}};
  }
  return out;
}

Permutation::Permutation(std::array<Vertex, 6> cycle, int id)
    : cycle_(cycle), id_(id) {
  std::set<Vec3i> used;
  for (const auto& u : cycle_) used.insert(u.e);
  if (used.size() != 6) throw std::invalid_argument("cycle vertices must be distinct");
  for (int j = 0; j < 6; ++j) {
    if (!edge_adjacent(cycle_[static_cast<std::size_t>(j)],
                       cycle_[static_cast<std::size_t>((j + 1) % 6)]))
      throw std::invalid_argument("consecutive cycle vertices must be edge adjacent");
  }
  int k = 0;
  for (const auto& u : cube_vertices()) {
    if (!used.count(u.e)) excluded_[static_cast<std::size_t>(k++)] = u;
  }
  if (k != 2 || !(excluded_[0].e == -excluded_[1].e))
    throw std::invalid_argument("excluded vertices must be an antipodal pair");
}

int Permutation::index_of(const Vertex& u) const {
  for (int j = 0; j < 6; ++j)
    if (cycle_[static_cast<std::size_t>(j)] == u) return j;
  throw std::domain_error("vertex is not on the permutation cycle");
}

Vertex Permutation::apply(const Vertex& u, long k) const {
  if (k < 0) throw std::domain_error("power must be >= 0");
  const int j = index_of(u);
  return cycle_[static_cast<std::size_t>((j + k) % 6)];
}

Vec3i Permutation::offset(int j, long n) const {
  const auto& c = cycle_;
  return c[static_cast<std::size_t>((j + n) % 6)].e - c[static_cast<std::size_t>(j)].e;
}

Vec3i Permutation::hop(int j, long n) const {
  const auto& c = cycle_;
  return c[static_cast<std::size_t>((j + n + 1) % 6)].e -
         c[static_cast<std::size_t>((j + n) % 6)].e;
}

Permutation Permutation::reversed() const {
  std::array<Vertex, 6> rc;
  rc[0] = cycle_[0];
  for (int j = 1; j < 6; ++j) rc[static_cast<std::size_t>(j)] = cycle_[static_cast<std::size_t>(6 - j)];
  const auto& all = spin_permutations();
  for (const auto& s : all) {
    // same undirected hexagon, opposite direction: equal as a rotation class
    if (s.excluded_pair()[0] == excluded_[0]) {
      const int j0 = s.index_of(rc[0]);
      bool match = true;
      for (int j = 0; j < 6; ++j)
        if (!(s.cycle()[static_cast<std::size_t>((j0 + j) % 6)] == rc[static_cast<std::size_t>(j)])) {
          match = false;
          break;
        }
      if (match) return s;
    }
  }
  throw std::logic_error("reversed cycle not found among spin permutations");
}

namespace {

/// Rotate a cycle so its lexicographically smallest vertex comes first.
std::array<Vertex, 6> canonical_rotation(const std::array<Vertex, 6>& c) {
  int best = 0;
  for (int j = 1; j < 6; ++j)
    if (c[static_cast<std::size_t>(j)] < c[static_cast<std::size_t>(best)]) best = j;
  std::array<Vertex, 6> out;
  for (int j = 0; j < 6; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>((best + j) % 6)];
  return out;
}

std::vector<std::array<Vertex, 6>> enumerate_spin_cycles() {
  const auto verts = cube_vertices();
  std::set<std::array<Vec3i, 6>> seen;
  std::vector<std::array<Vertex, 6>> cycles;

  std::array<Vertex, 6> path;
  std::array<bool, 8> used{};

  auto vertex_index = [&](const Vertex& u) {
    for (int i = 0; i < 8; ++i)
      if (verts[static_cast<std::size_t>(i)] == u) return i;
    return -1;
  };

  auto record = [&](const std::array<Vertex, 6>& cyc) {
    // keep only hexagons whose two excluded vertices are antipodal
    std::set<Vec3i> on;
    for (const auto& u : cyc) on.insert(u.e);
    std::vector<Vec3i> rest;
    for (const auto& u : verts)
      if (!on.count(u.e)) rest.push_back(u.e);
    if (rest.size() != 2 || !(rest[0] == -rest[1])) return;
    const auto canon = canonical_rotation(cyc);
    std::array<Vec3i, 6> key;
    for (int j = 0; j < 6; ++j) key[static_cast<std::size_t>(j)] = canon[static_cast<std::size_t>(j)].e;
    if (seen.insert(key).second) cycles.push_back(canon);
  };

  std::function<void(int)> dfs = [&](int depth) {
    if (depth == 6) {
      if (edge_adjacent(path[5], path[0])) record(path);
      return;
    }
    for (const auto& u : verts) {
      const int i = vertex_index(u);
      if (used[static_cast<std::size_t>(i)]) continue;
      if (!edge_adjacent(path[static_cast<std::size_t>(depth - 1)], u)) continue;
      path[static_cast<std::size_t>(depth)] = u;
      used[static_cast<std::size_t>(i)] = true;
      dfs(depth + 1);
      used[static_cast<std::size_t>(i)] = false;
    }
  };

  for (const auto& u : verts) {
    path[0] = u;
    used[static_cast<std::size_t>(vertex_index(u))] = true;
    dfs(1);
    used[static_cast<std::size_t>(vertex_index(u))] = false;
  }
  return cycles;
}

std::array<Permutation, 8> build_permutations() {
  auto cycles = enumerate_spin_cycles();
  if (cycles.size() != 8) throw std::logic_error("expected 8 spin cycles");

  const std::array<Vec3i, 6> s1_key = {Vec3i{{-1, -1, -1}}, Vec3i{{-1, -1, 1}},
                                       Vec3i{{1, -1, 1}},   Vec3i{{1, 1, 1}},
                                       Vec3i{{1, 1, -1}},   Vec3i{{-1, 1, -1}}};

  auto is_s1 = [&](const std::array<Vertex, 6>& c) {
    for (int j = 0; j < 6; ++j)
      if (!(c[static_cast<std::size_t>(j)].e == s1_key[static_cast<std::size_t>(j)])) return false;
    return true;
  };

  auto excluded_rep = [&](const std::array<Vertex, 6>& c) {
    std::set<Vec3i> on;
    for (const auto& u : c) on.insert(u.e);
    Vec3i rep{{0, 0, 0}};
    for (const auto& u : cube_vertices())
      if (!on.count(u.e) && u.e[0] > 0) rep = u.e;
    return rep;
  };

  // sort key: excluded representative, then the cycle itself (fixes direction)
  auto key_of = [&](const std::array<Vertex, 6>& c) {
    std::array<Vec3i, 7> k;
    k[0] = excluded_rep(c);
    for (int j = 0; j < 6; ++j) k[static_cast<std::size_t>(j + 1)] = c[static_cast<std::size_t>(j)].e;
    return k;
  };

  std::stable_sort(cycles.begin(), cycles.end(),
                   [&](const auto& a, const auto& b) { return key_of(a) < key_of(b); });

  std::array<std::array<Vertex, 6>, 8> ordered;
  int pos = 0;
  for (const auto& c : cycles)
    if (is_s1(c)) ordered[0] = c;
  for (const auto& c : cycles) {
    if (is_s1(c)) continue;
    ordered[static_cast<std::size_t>(++pos)] = c;
  }
  if (pos != 7) throw std::logic_error("s1 cycle missing from enumeration");

  return {Permutation(ordered[0], 1), Permutation(ordered[1], 2),
          Permutation(ordered[2], 3), Permutation(ordered[3], 4),
          Permutation(ordered[4], 5), Permutation(ordered[5], 6),
          Permutation(ordered[6], 7), Permutation(ordered[7], 8)};
}

}  // namespace

const std::array<Permutation, 8>& spin_permutations() {
  static const std::array<Permutation, 8> table = build_permutations();
  return table;
}

const Permutation& permutation_by_id(int id) {
  if (id < 1 || id > 8) throw std::domain_error("permutation id must be 1..8");
  return spin_permutations()[static_cast<std::size_t>(id - 1)];
}

Vec3i wedge_sum(const Permutation& s) {
  Vec3i w{{0, 0, 0}};
  for (int j = 0; j < 6; ++j) {
    const Vec3i u = s.cycle()[static_cast<std::size_t>(j)].e;
    const Vec3i su = s.cycle()[static_cast<std::size_t>((j + 1) % 6)].e;
    w = w + cross(u, su);
  }
  return w;
}

Vec3d intrinsic_spin(const Permutation& s, const PhysicalParams& params) {
  return (params.hbar / 16.0) * to_vec3d(wedge_sum(s));
}

std::array<std::int64_t, 9> offset_covariance6(const Permutation& s, long n) {
  std::array<std::int64_t, 9> cov{};
  for (int j = 0; j < 6; ++j) {
    const Vec3i d = s.offset(j, n);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) cov[static_cast<std::size_t>(3 * k + l)] += d[k] * d[l];
  }
  return cov;
}

}  // namespace hexaproc
