#include "efgc/ringkit/matrix.hpp"

namespace efgc {

Matrix Matrix::identity(const Ring& ring, long n) {
  return Matrix(ring, mat_identity(n, RingValue::zero(ring), RingValue::one(ring)));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  return Matrix(a.ring(), mat_mul<RingValue>(a, b, a.zero()));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

RingValue det_division_free(const Matrix& m) { return det_division_free<RingValue>(m, m.zero(), m.one()); }
RingValue det_berkowitz(const Matrix& m) { return det_berkowitz<RingValue>(m, m.zero(), m.one()); }
RingValue det_permutation(const Matrix& m) { return det_permutation<RingValue>(m, m.zero(), m.one()); }
Matrix adjugate(const Matrix& m) { return Matrix(m.ring(), adjugate<RingValue>(m, m.zero(), m.one())); }
std::vector<RingValue> charpoly(const Matrix& m) { return charpoly_berkowitz<RingValue>(m, m.zero(), m.one()); }

RingValue trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "trace of non-square matrix");
  RingValue t = m.zero();
  for (long i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace efgc
