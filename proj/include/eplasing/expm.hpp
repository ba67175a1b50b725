#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "eplasing/error.hpp"
#include "eplasing/lattice.hpp"

namespace eplasing {

namespace detail {

// Largest 1-norms for which the [m/m] Pade approximant of exp meets unit
// roundoff in double precision (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).
inline constexpr std::array<double, 5> kPadeTheta = {
    1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
    2.097847961257068e0, 5.371920351148152e0};

inline void pade_low_order(const ComplexMatrix& a, int degree, ComplexMatrix& u,
                           ComplexMatrix& v) {
  static constexpr double b3[] = {120., 60., 12., 1.};
  static constexpr double b5[] = {30240., 15120., 3360., 420., 30., 1.};
  static constexpr double b7[] = {17297280., 8648640., 1995840., 277200.,
                                  25200.,    1512.,    56.,      1.};
  static constexpr double b9[] = {17643225600., 8821612800., 2075673600., 302702400.,
                                  30270240.,    2162160.,    110880.,     3960.,
                                  90.,          1.};
  const double* b = degree == 3 ? b3 : degree == 5 ? b5 : degree == 7 ? b7 : b9;

  const Eigen::Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = id;
  ComplexMatrix odd = b[1] * id;
  v = b[0] * id;
  for (int k = 2; k <= degree; k += 2) {
    power = power * a2;
    odd += b[k + 1] * power;
    v += b[k] * power;
  }
  u = a * odd;
}

inline void pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
  static constexpr double b[] = {
      64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
      129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
      1323241920.,        40840800.,          960960.,           16380.,
      182.,               1.};
  const Eigen::Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const ComplexMatrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

}  // namespace detail

/// Matrix exponential by scaling and squaring with diagonal Pade
/// approximants (degree 3..13 chosen from the 1-norm).
///
/// Works for defective matrices; no eigendecomposition is involved.
inline ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ParameterError("expm: matrix must be square");
  if (!a.allFinite()) throw NumericalError("expm: matrix has non-finite entries");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  const double norm = norm1(a);
  ComplexMatrix u;
  ComplexMatrix v;
  int squarings = 0;

  constexpr std::array<int, 4> low_degrees = {3, 5, 7, 9};
  bool done = false;
  for (std::size_t i = 0; i < low_degrees.size(); ++i) {
    if (norm <= detail::kPadeTheta[i]) {
      detail::pade_low_order(a, low_degrees[i], u, v);
      done = true;
      break;
    }
  }
  if (!done) {
    const double ratio = norm / detail::kPadeTheta[4];
    squarings = ratio > 1.0 ? static_cast<int>(std::ceil(std::log2(ratio))) : 0;
    if (squarings > 1000) throw NumericalError("expm: norm too large to scale");
    detail::pade13(std::ldexp(1.0, -squarings) * a, u, v);
  }

  ComplexMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  if (!result.allFinite()) throw NumericalError("expm: overflow while squaring");
  return result;
}

}  // namespace eplasing
