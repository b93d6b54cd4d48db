#include "sectorix/posmap.hpp"

#include <cmath>

namespace sectorix {

namespace {

// Tall-skinny Ginibre sample orthonormalized by modified Gram-Schmidt: a
// uniformly distributed isometry (rows x cols, rows >= cols).
Isometry random_isometry(int rows, int cols, Rng& rng) {
  Isometry v(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) v.at(i, j) = rng.cnormal();
  for (int j = 0; j < cols; ++j) {
    for (int c = 0; c < j; ++c) {
      cd proj = 0.0;
      for (int i = 0; i < rows; ++i) proj += std::conj(v.at(i, c)) * v.at(i, j);
      for (int i = 0; i < rows; ++i) v.at(i, j) -= proj * v.at(i, c);
    }
    double norm = 0.0;
    for (int i = 0; i < rows; ++i) norm += std::norm(v.at(i, j));
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("random_isometry: degenerate sample");
    for (int i = 0; i < rows; ++i) v.at(i, j) /= norm;
  }
  return v;
}

// (rows x rows) * (rows x cols) -> rows x cols.
Isometry square_times_rect(const CMatrix& m, const Isometry& v) {
  Isometry r(v.rows, v.cols);
  for (int i = 0; i < v.rows; ++i)
    for (int k = 0; k < v.rows; ++k) {
      const cd mik = m(i, k);
      if (mik == cd(0.0)) continue;
      for (int j = 0; j < v.cols; ++j) r.at(i, j) += mik * v.at(k, j);
    }
  return r;
}

// adj(x) * y -> cols x cols (square output).
CMatrix rect_adj_times_rect(const Isometry& x, const Isometry& y) {
  CMatrix r(x.cols);
  for (int i = 0; i < x.cols; ++i)
    for (int j = 0; j < y.cols; ++j) {
      cd s = 0.0;
      for (int k = 0; k < x.rows; ++k) s += std::conj(x.at(k, i)) * y.at(k, j);
      r(i, j) = s;
    }
  return r;
}

// V* A V through one rectangular product each side.
CMatrix compress(const CMatrix& a, const Isometry& v) {
  return rect_adj_times_rect(v, square_times_rect(a, v));
}

// rect * small square (cols x cols).
Isometry rect_times_square(const Isometry& v, const CMatrix& s) {
  Isometry r(v.rows, v.cols);
  for (int i = 0; i < v.rows; ++i)
    for (int k = 0; k < v.cols; ++k) {
      const cd vik = v.at(i, k);
      if (vik == cd(0.0)) continue;
      for (int j = 0; j < v.cols; ++j) r.at(i, j) += vik * s(k, j);
    }
  return r;
}

long ipow_checked(int base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i) {
    p *= base;
    if (p > 4096) throw InvalidInput("gen_map: tensor dimension n^k exceeds 4096");
  }
  return p;
}

}  // namespace

std::string map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::compression: return "compression";
    case MapKind::kraus: return "kraus";
    case MapKind::trace: return "trace";
    case MapKind::tensor_compression: return "tensor_compression";
  }
  throw InvalidInput("map_kind_name: unknown kind");
}

MapKind map_kind_from_name(const std::string& name) {
  if (name == "compression") return MapKind::compression;
  if (name == "kraus") return MapKind::kraus;
  if (name == "trace") return MapKind::trace;
  if (name == "tensor_compression") return MapKind::tensor_compression;
  throw InvalidInput("unknown map kind: " + name);
}

MapSpec gen_map(MapKind kind, int n, int l, int k, uint64_t seed) {
  if (n < 1 || l < 1) throw InvalidInput("gen_map: dimensions must be positive");
  if (kind != MapKind::tensor_compression && k != 1)
    throw InvalidInput("gen_map: arity must be 1 for this kind");
  if (kind == MapKind::tensor_compression && k < 1)
    throw InvalidInput("gen_map: arity must be >= 1");

  MapSpec spec;
  spec.kind = kind;
  spec.k = k;
  spec.n = n;
  spec.l = l;
  spec.seed = seed;
  spec.normalized = true;
  Rng rng(seed);

  switch (kind) {
    case MapKind::compression: {
      if (l > n) throw InvalidInput("gen_map: compression needs l <= n");
      spec.blocks.push_back(random_isometry(n, l, rng));
      break;
    }
    case MapKind::kraus: {
      if (l > n) throw InvalidInput("gen_map: kraus needs l <= n");
      // Three Ginibre blocks W_i, renormalized so sum V_i* V_i = I_l:
      // V_i = W_i S^{-1/2} with S = sum W_i* W_i.
      std::vector<Isometry> w;
      for (int b = 0; b < 3; ++b) {
        Isometry g(n, l);
        for (cd& x : g.a) x = rng.cnormal();
        w.push_back(std::move(g));
      }
      CMatrix s(l);
      for (const Isometry& wi : w) s += rect_adj_times_rect(wi, wi);
      const CMatrix s_half_inv = hpd_power(re_part(s), -0.5);
      for (const Isometry& wi : w) spec.blocks.push_back(rect_times_square(wi, s_half_inv));
      break;
    }
    case MapKind::trace: {
      break;  // no data; Phi(A) = (tr A / n) I_l
    }
    case MapKind::tensor_compression: {
      const long nk = ipow_checked(n, k);
      if (l > nk) throw InvalidInput("gen_map: tensor_compression needs l <= n^k");
      spec.blocks.push_back(random_isometry(static_cast<int>(nk), l, rng));
      break;
    }
  }
  return spec;
}

MapSpec identity_compression(int n) {
  if (n < 1) throw InvalidInput("identity_compression: n must be positive");
  MapSpec spec;
  spec.kind = MapKind::compression;
  spec.k = 1;
  spec.n = n;
  spec.l = n;
  spec.seed = 0;
  spec.normalized = true;
  Isometry v(n, n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;
  spec.blocks.push_back(std::move(v));
  return spec;
}

CMatrix apply_map(const MapSpec& phi, const std::vector<CMatrix>& args) {
  if (static_cast<int>(args.size()) != phi.k)
    throw InvalidInput("apply_map: wrong number of arguments for the map arity");
  for (const CMatrix& a : args)
    if (a.dim() != phi.n) throw InvalidInput("apply_map: argument dimension mismatch");

  switch (phi.kind) {
    case MapKind::compression:
      return compress(args[0], phi.blocks.at(0));
    case MapKind::kraus: {
      CMatrix acc(phi.l);
      for (const Isometry& v : phi.blocks) acc += compress(args[0], v);
      return acc;
    }
    case MapKind::trace: {
      const cd t = args[0].trace() / static_cast<double>(phi.n);
      return t * CMatrix::identity(phi.l);
    }
    case MapKind::tensor_compression: {
      CMatrix t = args[0];
      for (size_t i = 1; i < args.size(); ++i) t = kron(t, args[i]);
      return compress(t, phi.blocks.at(0));
    }
  }
  throw InvalidInput("apply_map: unknown map kind");
}

CMatrix apply_map1(const MapSpec& phi, const CMatrix& a) { return apply_map(phi, {a}); }

}  // namespace sectorix
