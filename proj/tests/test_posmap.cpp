#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "sectorix/cmat.hpp"
#include "sectorix/posmap.hpp"
#include "sectorix/rng.hpp"
#include "sectorix/sector.hpp"

using namespace sectorix;

namespace {

double rel_err(const CMatrix& x, const CMatrix& y) {
  return frob_norm(x - y) / std::max(1.0, frob_norm(y));
}

CMatrix gram_defect(const std::vector<Isometry>& blocks, int l) {
  // sum_i adj(V_i) V_i - I_l, computed directly from the raw block data.
  CMatrix g(l);
  for (const Isometry& v : blocks)
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        cd s = 0.0;
        for (int r = 0; r < v.rows; ++r) s += std::conj(v.at(r, i)) * v.at(r, j);
        g(i, j) += s;
      }
  return g - CMatrix::identity(l);
}

std::vector<CMatrix> identities(int n, int k) {
  return std::vector<CMatrix>(static_cast<size_t>(k), CMatrix::identity(n));
}

std::vector<CMatrix> hpd_args(int n, int k, uint64_t seed) {
  std::vector<CMatrix> args;
  for (int i = 0; i < k; ++i)
    args.push_back(gen_hpd(n, 0.4, 3.0 + i, derive_seed(seed, static_cast<uint64_t>(i))));
  return args;
}

}  // namespace

TEST_CASE("map kind names round-trip") {
  for (MapKind kind : {MapKind::compression, MapKind::kraus, MapKind::trace,
                       MapKind::tensor_compression})
    CHECK(map_kind_from_name(map_kind_name(kind)) == kind);
  CHECK_THROWS_AS(map_kind_from_name("unknown"), InvalidInput);
}

TEST_CASE("identity compression is the identity map") {
  const MapSpec phi = identity_compression(3);
  Rng rng(3);
  const CMatrix a = ginibre(3, rng);
  CHECK(rel_err(apply_map1(phi, a), a) == 0.0);
}

TEST_CASE("generated blocks are exact isometries") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const MapSpec c = gen_map(MapKind::compression, 5, 3, 1, derive_seed(100, seed));
    CHECK(frob_norm(gram_defect(c.blocks, 3)) < 1e-12);

    const MapSpec k = gen_map(MapKind::kraus, 4, 3, 1, derive_seed(101, seed));
    REQUIRE(k.blocks.size() == 3);
    CHECK(frob_norm(gram_defect(k.blocks, 3)) < 1e-12);

    const MapSpec t = gen_map(MapKind::tensor_compression, 3, 4, 2, derive_seed(102, seed));
    REQUIRE(t.blocks.size() == 1);
    CHECK(t.blocks[0].rows == 9);
    CHECK(frob_norm(gram_defect(t.blocks, 4)) < 1e-12);
  }
}

TEST_CASE("normalization: identities map to the identity") {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const MapSpec c = gen_map(MapKind::compression, 4, 2, 1, derive_seed(200, seed));
    CHECK(rel_err(apply_map(c, identities(4, 1)), CMatrix::identity(2)) < 1e-10);

    const MapSpec k = gen_map(MapKind::kraus, 4, 4, 1, derive_seed(201, seed));
    CHECK(rel_err(apply_map(k, identities(4, 1)), CMatrix::identity(4)) < 1e-10);

    const MapSpec t = gen_map(MapKind::trace, 5, 3, 1, derive_seed(202, seed));
    CHECK(rel_err(apply_map(t, identities(5, 1)), CMatrix::identity(3)) == 0.0);

    for (int arity : {1, 2, 3}) {
      const int l = arity == 1 ? 2 : 5;  // must fit inside the 3^arity tensor space
      const MapSpec tc =
          gen_map(MapKind::tensor_compression, 3, l, arity, derive_seed(203, seed));
      CHECK(rel_err(apply_map(tc, identities(3, arity)), CMatrix::identity(l)) < 1e-10);
    }
  }
}

TEST_CASE("positivity on positive definite tuples") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    for (MapKind kind : {MapKind::compression, MapKind::kraus, MapKind::trace}) {
      const MapSpec phi = gen_map(kind, 4, 3, 1, derive_seed(300, seed));
      const CMatrix out = apply_map(phi, hpd_args(4, 1, derive_seed(301, seed)));
      const double scale = std::max(1.0, frob_norm(out));
      CHECK(herm_eigen_min(re_part(out)) >= -1e-10 * scale);
      CHECK(frob_norm(im_part(out)) < 1e-10 * scale);  // Hermitian in, Hermitian out
    }
    const MapSpec tc = gen_map(MapKind::tensor_compression, 3, 6, 2, derive_seed(302, seed));
    const CMatrix out = apply_map(tc, hpd_args(3, 2, derive_seed(303, seed)));
    CHECK(herm_eigen_min(re_part(out)) >= -1e-10 * std::max(1.0, frob_norm(out)));
  }
}

TEST_CASE("linearity in each slot") {
  Rng rng(17);
  const MapSpec phi = gen_map(MapKind::tensor_compression, 3, 4, 2, 987);
  for (int slot : {0, 1}) {
    const CMatrix a = ginibre(3, rng);
    const CMatrix b = ginibre(3, rng);
    const CMatrix other = ginibre(3, rng);
    const cd alpha = rng.cnormal();
    const cd beta = rng.cnormal();

    CMatrix combo = alpha * a;
    combo += beta * b;
    std::vector<CMatrix> args_combo{combo, other};
    std::vector<CMatrix> args_a{a, other};
    std::vector<CMatrix> args_b{b, other};
    if (slot == 1) {
      std::swap(args_combo[0], args_combo[1]);
      std::swap(args_a[0], args_a[1]);
      std::swap(args_b[0], args_b[1]);
    }
    CMatrix expect = alpha * apply_map(phi, args_a);
    expect += beta * apply_map(phi, args_b);
    CHECK(rel_err(apply_map(phi, args_combo), expect) < 1e-10);
  }
}

TEST_CASE("compression agrees with a padded square computation") {
  const MapSpec phi = gen_map(MapKind::compression, 4, 2, 1, 555);
  Rng rng(555);
  const CMatrix a = ginibre(4, rng);

  // Pad V into a square matrix and read the top-left block of V* A V.
  CMatrix vp(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) vp(i, j) = phi.blocks[0].at(i, j);
  const CMatrix full = vp.adjoint() * a * vp;
  const CMatrix out = apply_map1(phi, a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(out(i, j) - full(i, j)) < 1e-13);
}

TEST_CASE("dimension and arity validation") {
  CHECK_THROWS_AS(gen_map(MapKind::compression, 3, 4, 1, 0), InvalidInput);
  CHECK_THROWS_AS(gen_map(MapKind::kraus, 3, 4, 1, 0), InvalidInput);
  CHECK_THROWS_AS(gen_map(MapKind::tensor_compression, 2, 9, 3, 0), InvalidInput);
  CHECK_THROWS_AS(gen_map(MapKind::compression, 3, 2, 2, 0), InvalidInput);
  CHECK_THROWS_AS(gen_map(MapKind::compression, 3, 0, 1, 0), InvalidInput);
  CHECK_THROWS_AS(gen_map(MapKind::tensor_compression, 8, 2, 9, 0), InvalidInput);

  const MapSpec phi = gen_map(MapKind::tensor_compression, 3, 2, 2, 1);
  CHECK_THROWS_AS(apply_map(phi, identities(3, 1)), InvalidInput);
  CHECK_THROWS_AS(apply_map(phi, identities(4, 2)), InvalidInput);
}

TEST_CASE("generation is deterministic in the seed") {
  const MapSpec a = gen_map(MapKind::kraus, 4, 3, 1, 777);
  const MapSpec b = gen_map(MapKind::kraus, 4, 3, 1, 777);
  REQUIRE(a.blocks.size() == b.blocks.size());
  for (size_t i = 0; i < a.blocks.size(); ++i)
    for (size_t j = 0; j < a.blocks[i].a.size(); ++j) CHECK(a.blocks[i].a[j] == b.blocks[i].a[j]);

  const MapSpec c = gen_map(MapKind::kraus, 4, 3, 1, 778);
  bool same = true;
  for (size_t j = 0; j < a.blocks[0].a.size(); ++j)
    same = same && (a.blocks[0].a[j] == c.blocks[0].a[j]);
  CHECK_FALSE(same);
}

TEST_CASE("output inverse is dominated by the image of the inverse") {
  // For unital positive maps and positive definite arguments:
  // (Phi(H))^{-1} <= Phi(H^{-1}).
  for (uint64_t seed = 0; seed < 10; ++seed) {
    for (MapKind kind : {MapKind::compression, MapKind::kraus, MapKind::trace}) {
      const MapSpec phi = gen_map(kind, 4, 3, 1, derive_seed(400, seed));
      const CMatrix h = gen_hpd(4, 0.3, 5.0, derive_seed(401, seed));
      const CMatrix lhs = inverse(re_part(apply_map1(phi, h)));
      const CMatrix rhs = apply_map1(phi, inverse(h));
      CHECK(loewner_leq(re_part(lhs), re_part(rhs), 1e-10).holds);
    }
  }
}
