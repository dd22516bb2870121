#ifndef HEXAPROC_GEOMETRY_HPP
#define HEXAPROC_GEOMETRY_HPP

#include <array>
#include <vector>

#include "hexaproc/linalg.hpp"
#include "hexaproc/params.hpp"

namespace hexaproc {

/// A cube vertex: three coordinates, each -1 or +1.
struct Vertex {
  Vec3i e;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.e == b.e; }
  friend bool operator<(const Vertex& a, const Vertex& b) { return a.e < b.e; }
};

/// True iff the two vertices differ in exactly one coordinate (cube edge).
bool edge_adjacent(const Vertex& a, const Vertex& b);

/// The eight vertices in lexicographic coordinate order,
/// (-1,-1,-1), (-1,-1,+1), ..., (+1,+1,+1).
std::array<Vertex, 8> cube_vertices();

/// One of the eight spin permutations: a 6-cycle of edge-adjacent vertices
/// winding around a main diagonal. The two vertices not on the cycle are an
/// antipodal pair. Cycles are equal up to rotation of the starting point;
/// the reversed cycle is a different permutation.
class Permutation {
 public:
  Permutation(std::array<Vertex, 6> cycle, int id);

  const std::array<Vertex, 6>& cycle() const { return cycle_; }
  const std::array<Vertex, 2>& excluded_pair() const { return excluded_; }
  int id() const { return id_; }

  /// Position of u in the cycle; throws std::domain_error if absent.
  int index_of(const Vertex& u) const;

  /// s^k u, the k-th successor of u along the cycle (period 6).
  Vertex apply(const Vertex& u, long k) const;

  /// s^n u^j - u^j for cycle slot j, as exact integers.
  Vec3i offset(int j, long n) const;

  /// s^(n+1) u^j - s^n u^j, the single hop taken at step n.
  Vec3i hop(int j, long n) const;

  Permutation reversed() const;

 private:
  std::array<Vertex, 6> cycle_;
  std::array<Vertex, 2> excluded_;
  int id_;
};

/// All eight spin permutations. Id 1 is the cycle
/// (-1,-1,-1) (-1,-1,1) (1,-1,1) (1,1,1) (1,1,-1) (-1,1,-1); ids 2..8 order
/// the rest by (excluded vertex with positive first coordinate, direction).
const std::array<Permutation, 8>& spin_permutations();

const Permutation& permutation_by_id(int id);

/// Sum over j of u^j wedge (s u^j), exact integers. Every component is +-8.
Vec3i wedge_sum(const Permutation& s);

/// (hbar/16) * wedge_sum: each component exactly +-hbar/2.
Vec3d intrinsic_spin(const Permutation& s, const PhysicalParams& params);

/// Sum over j of (s^n u^j - u^j)(s^n u^j - u^j)^T, exact integers
/// (= 6 E_j[...], row major). At n = 5 mod 6 this is 8*I, the covariance
/// behind the Dynkin Laplacian coefficient.
std::array<std::int64_t, 9> offset_covariance6(const Permutation& s, long n);

}  // namespace hexaproc

#endif
