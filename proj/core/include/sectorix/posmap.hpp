#pragma once

// Constructible families of positive (multi)linear maps between matrix
// spaces: compressions V*(.)V by an isometry, Kraus sums, the normalized
// trace map, and tensor-compressions V*(A_1 x ... x A_k)V. All generated
// maps are completely positive and unital (identities map to the identity),
// which is what the inequality catalogue requires.

#include <string>
#include <vector>

#include "sectorix/cmat.hpp"
#include "sectorix/rng.hpp"

namespace sectorix {

enum class MapKind { compression, kraus, trace, tensor_compression };

std::string map_kind_name(MapKind kind);
MapKind map_kind_from_name(const std::string& name);  // throws InvalidInput

// Rectangular complex block (rows x cols), row-major. Holds isometries:
// columns orthonormal, so adj(V) V = I_cols.
struct Isometry {
  int rows = 0;
  int cols = 0;
  std::vector<cd> a;

  Isometry() = default;
  Isometry(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  cd& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const cd& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// A positive multilinear map Phi: (M_n)^k -> M_l. The isometry data is
// deterministic in (kind, n, l, k, seed), so specs serialize as that tuple.
struct MapSpec {
  MapKind kind = MapKind::compression;
  int k = 1;  // arity; 1 unless tensor_compression
  int n = 0;  // input dimension per slot
  int l = 0;  // output dimension
  uint64_t seed = 0;
  bool normalized = true;
  std::vector<Isometry> blocks;  // compression/tensor: 1 block; kraus: 3; trace: none
};

// Build a normalized random map. Requirements: l >= 1; l <= n for
// compression/kraus, l <= n^k for tensor_compression (n^k capped at 4096);
// k == 1 for every kind except tensor_compression.
MapSpec gen_map(MapKind kind, int n, int l, int k, uint64_t seed);

// Phi(I) = A for every square A of matching size: the k = 1 compression by
// the identity. Used by scale checks that need the trivial map.
MapSpec identity_compression(int n);

// Evaluate the map. args.size() must equal the arity and every argument must
// be n x n.
CMatrix apply_map(const MapSpec& phi, const std::vector<CMatrix>& args);

// Arity-1 convenience.
CMatrix apply_map1(const MapSpec& phi, const CMatrix& a);

}  // namespace sectorix
