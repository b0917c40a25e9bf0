#pragma once

// Word matrix W over Z[u] and the Riley polynomial w11.

#include <stdexcept>
#include <utility>

#include "riley/exact_arith.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

/// 2x2 matrix with entries in Z[u].
struct Mat2Poly {
  IntPoly w11, w12, w21, w22;

  static Mat2Poly identity() { return {IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}}; }

  IntPoly determinant() const { return w11 * w22 - w12 * w21; }

  friend Mat2Poly operator*(const Mat2Poly& a, const Mat2Poly& b) {
    return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
            a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22};
  }

  friend bool operator==(const Mat2Poly&, const Mat2Poly&) = default;
};

inline void check_exponent(int e) {
  if (e != 1 && e != -1) throw std::invalid_argument("generator exponent must be +1 or -1");
}

/// X^e = [[1, e], [0, 1]].
inline Mat2Poly generator_X(int exponent) {
  check_exponent(exponent);
  return {IntPoly{1}, IntPoly{exponent}, IntPoly{}, IntPoly{1}};
}

/// Y^e = [[1, 0], [-e u, 1]].
inline Mat2Poly generator_Y(int exponent) {
  check_exponent(exponent);
  return {IntPoly{1}, IntPoly{}, IntPoly{0, -exponent}, IntPoly{1}};
}

/// X^{eps_1} Y^{eps_2} ... X^{eps_{n-1}} Y^{eps_n}, multiplied left to right.
inline Mat2Poly word_matrix(const EpsilonSequence& eps) {
  if (eps.size() % 2 != 0) throw std::invalid_argument("epsilon sequence must have even length");
  Mat2Poly w = Mat2Poly::identity();
  for (std::size_t i = 0; i < eps.size(); i += 2) {
    w = w * generator_X(eps[i]);
    w = w * generator_Y(eps[i + 1]);
  }
  return w;
}

inline Mat2Poly word_matrix(const TwoBridgePair& p) { return word_matrix(epsilon_sequence(p)); }

inline IntPoly riley_polynomial(const TwoBridgePair& p) { return word_matrix(p).w11; }

/// One row of the Riley map: the pair, its epsilon sequence and phi.
struct RileyRecord {
  TwoBridgePair pair;
  EpsilonSequence eps;
  IntPoly phi;

  friend bool operator==(const RileyRecord&, const RileyRecord&) = default;
};

inline RileyRecord make_record(const TwoBridgePair& p) {
  auto eps = epsilon_sequence(p);
  auto phi = word_matrix(eps).w11;
  return {p, std::move(eps), std::move(phi)};
}

/// W* of the mirror satisfies w11* = w11, w12* = -w12, w21* = -w21, w22* = w22.
inline bool mirror_entry_check(const TwoBridgePair& p) {
  const Mat2Poly w = word_matrix(p);
  const Mat2Poly m = word_matrix(mirror(p));
  return m.w11 == w.w11 && m.w12 == -w.w12 && m.w21 == -w.w21 && m.w22 == w.w22;
}

}  // namespace riley
