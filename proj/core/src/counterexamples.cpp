#include <algorithm>
#include <cmath>

#include "sectorix/checks.hpp"

// Two fixed Hermitian 3x3 pairs showing that the top-singular-value and
// determinant product bounds genuinely need their angle-dependent constants:
// with the constants removed, both quantities on the left exceed the product
// on the right. The matrices are indefinite, so no sector hypothesis holds.

namespace sectorix {
namespace {

CMatrix eye3_plus(const CMatrix& x) { return CMatrix::identity(3) + x; }

}  // namespace

CounterexampleResult counterexample_sv() {
  CounterexampleResult r;
  r.id = "sv";
  r.a = CMatrix::from_real({{1, -1, 1}, {-1, 1, 3}, {1, 3, 20}});
  r.b = CMatrix::from_real({{100, 2, -3}, {2, 1, 4}, {-3, 4, 1}});
  r.first_label = "s1((A+B)^-1)";
  r.second_label = "s1(I+(A+B)^-1)";
  r.product_label = "s1(I+A^-1)*s1(I+B^-1)";
  const CMatrix sum_inv = inverse(r.a + r.b);
  r.first = op_norm(sum_inv);
  r.second = op_norm(eye3_plus(sum_inv));
  r.product = op_norm(eye3_plus(inverse(r.a))) * op_norm(eye3_plus(inverse(r.b)));
  r.violated = std::min(r.first, r.second) > r.product;
  return r;
}

CounterexampleResult counterexample_det() {
  CounterexampleResult r;
  r.id = "det";
  r.a = CMatrix::from_real({{1, -1, 2.5}, {-1, 2, -2}, {2.5, -2, 1}});
  r.b = CMatrix::from_real({{-1, 1, -3}, {1, -1, 1}, {-3, 1, -1}});
  r.first_label = "|det((A+B)^-1)|";
  r.second_label = "|det(I+(A+B)^-1)|";
  r.product_label = "|det(I+A^-1)|*|det(I+B^-1)|";
  const CMatrix sum_inv = inverse(r.a + r.b);
  r.first = std::abs(det(sum_inv));
  r.second = std::abs(det(eye3_plus(sum_inv)));
  r.product = std::abs(det(eye3_plus(inverse(r.a)))) *
              std::abs(det(eye3_plus(inverse(r.b))));
  r.violated = std::min(r.first, r.second) > r.product;
  return r;
}

}  // namespace sectorix
