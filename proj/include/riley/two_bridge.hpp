#pragma once

// 2-bridge knots S(alpha, beta) in Schubert normal form.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riley {

enum class PairError {
  kAlphaNotPositive,
  kAlphaEven,
  kBetaEven,
  kBetaOutOfRange,
  kNotCoprime,
};

inline const char* describe(PairError e) noexcept {
  switch (e) {
    case PairError::kAlphaNotPositive: return "alpha must be positive";
    case PairError::kAlphaEven: return "alpha must be odd";
    case PairError::kBetaEven: return "beta must be odd";
    case PairError::kBetaOutOfRange: return "beta must satisfy -alpha < beta < alpha";
    case PairError::kNotCoprime: return "gcd(alpha,beta) must be 1";
  }
  return "invalid pair";
}

class InvalidPair : public std::invalid_argument {
 public:
  explicit InvalidPair(PairError kind) : std::invalid_argument(describe(kind)), kind_(kind) {}
  PairError kind() const noexcept { return kind_; }

 private:
  PairError kind_;
};

/// Schubert parameters of a 2-bridge knot: alpha > 0 and beta odd, coprime,
/// with -alpha < beta < alpha. Only constructible through validate().
class TwoBridgePair {
 public:
  static TwoBridgePair validate(std::int64_t alpha, std::int64_t beta) {
    if (alpha <= 0) throw InvalidPair(PairError::kAlphaNotPositive);
    if (alpha % 2 == 0) throw InvalidPair(PairError::kAlphaEven);
    if (beta % 2 == 0) throw InvalidPair(PairError::kBetaEven);
    if (beta <= -alpha || beta >= alpha) throw InvalidPair(PairError::kBetaOutOfRange);
    if (std::gcd(alpha, beta) != 1) throw InvalidPair(PairError::kNotCoprime);
    return TwoBridgePair(alpha, beta);
  }

  std::int64_t alpha() const noexcept { return alpha_; }
  std::int64_t beta() const noexcept { return beta_; }

  friend bool operator==(const TwoBridgePair&, const TwoBridgePair&) = default;
  friend auto operator<=>(const TwoBridgePair&, const TwoBridgePair&) = default;

 private:
  TwoBridgePair(std::int64_t a, std::int64_t b) : alpha_(a), beta_(b) {}

  std::int64_t alpha_;
  std::int64_t beta_;
};

inline std::string to_string(const TwoBridgePair& p) {
  return "S(" + std::to_string(p.alpha()) + "," + std::to_string(p.beta()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TwoBridgePair& p) { return os << to_string(p); }

/// Accepts the even-beta convention: (alpha, beta) with beta even is the same
/// knot as (alpha, beta - alpha*sign(beta)).
inline TwoBridgePair normalize_odd(std::int64_t alpha, std::int64_t beta) {
  if (alpha <= 0) throw InvalidPair(PairError::kAlphaNotPositive);
  if (alpha % 2 == 0) throw InvalidPair(PairError::kAlphaEven);
  if (beta == 0 || beta <= -alpha || beta >= alpha) throw InvalidPair(PairError::kBetaOutOfRange);
  if (std::gcd(alpha, beta) != 1) throw InvalidPair(PairError::kNotCoprime);
  if (beta % 2 != 0) return TwoBridgePair::validate(alpha, beta);
  return TwoBridgePair::validate(alpha, beta > 0 ? beta - alpha : beta + alpha);
}

/// Floor division, rounding toward minus infinity.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) noexcept {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

constexpr std::int64_t mod_floor(std::int64_t n, std::int64_t m) noexcept { return n - m * floor_div(n, m); }

/// Inverse of b modulo m by the extended Euclidean algorithm; requires gcd = 1.
inline std::int64_t mod_inverse(std::int64_t b, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod_floor(b, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1) throw std::domain_error("value is not invertible modulo " + std::to_string(m));
  return mod_floor(t0, m);
}

/// Exponents eps_1..eps_{alpha-1} of the relator word, each +1 or -1.
class EpsilonSequence {
 public:
  EpsilonSequence() = default;

  explicit EpsilonSequence(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("epsilon entries must be +1 or -1");
  }

  const std::vector<int>& signs() const noexcept { return signs_; }
  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_.at(i); }

  bool is_palindrome() const noexcept {
    return std::equal(signs_.begin(), signs_.end(), signs_.rbegin());
  }

  friend bool operator==(const EpsilonSequence&, const EpsilonSequence&) = default;

 private:
  std::vector<int> signs_;
};

/// eps_i = (-1)^floor(beta*i/alpha), i = 1..alpha-1.
inline EpsilonSequence epsilon_sequence(const TwoBridgePair& p) {
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(p.alpha() - 1));
  for (std::int64_t i = 1; i < p.alpha(); ++i) {
    const std::int64_t f = floor_div(p.beta() * i, p.alpha());
    signs.push_back(mod_floor(f, 2) == 0 ? 1 : -1);
  }
  return EpsilonSequence(std::move(signs));
}

inline TwoBridgePair mirror(const TwoBridgePair& p) { return TwoBridgePair::validate(p.alpha(), -p.beta()); }

/// Residues mod alpha equivalent to beta: beta^{+-1}, and -beta^{+-1} with mirrors.
inline std::vector<std::int64_t> equivalent_residues(const TwoBridgePair& p, bool include_mirror) {
  const std::int64_t a = p.alpha();
  const std::int64_t b = mod_floor(p.beta(), a);
  const std::int64_t inv = mod_inverse(b, a);
  std::vector<std::int64_t> r{b, inv};
  if (include_mirror) {
    r.push_back(mod_floor(-b, a));
    r.push_back(mod_floor(-inv, a));
  }
  return r;
}

inline bool equivalent(const TwoBridgePair& p1, const TwoBridgePair& p2, bool include_mirror) {
  if (p1.alpha() != p2.alpha()) return false;
  const std::int64_t target = mod_floor(p2.beta(), p2.alpha());
  for (std::int64_t r : equivalent_residues(p1, include_mirror))
    if (r == target) return true;
  return false;
}

/// True iff the knot is T(2, alpha), i.e. beta = +-1 mod alpha.
inline bool is_torus(const TwoBridgePair& p) {
  const std::int64_t b = mod_floor(p.beta(), p.alpha());
  return b == 1 || b == p.alpha() - 1;
}

/// The odd representative in (-alpha, alpha) of a residue r in [1, alpha).
constexpr std::int64_t odd_representative(std::int64_t r, std::int64_t alpha) noexcept {
  return r % 2 != 0 ? r : r - alpha;
}

/// Lexicographically smallest positive-beta pair in the knot's class up to mirror.
inline TwoBridgePair canonical_representative(const TwoBridgePair& p) {
  std::int64_t best = p.alpha();
  for (std::int64_t r : equivalent_residues(p, true)) {
    const std::int64_t b = odd_representative(r, p.alpha());
    if (b > 0 && b < best) best = b;
  }
  return TwoBridgePair::validate(p.alpha(), best);
}

/// All valid pairs with 3 <= alpha <= max_alpha and 0 < beta < alpha, in (alpha, beta) order.
inline std::vector<TwoBridgePair> enumerate_S_plus(std::int64_t max_alpha) {
  std::vector<TwoBridgePair> out;
  for (std::int64_t a = 3; a <= max_alpha; a += 2)
    for (std::int64_t b = 1; b < a; b += 2)
      if (std::gcd(a, b) == 1) out.push_back(TwoBridgePair::validate(a, b));
  return out;
}

/// S_+ minus the pairs having a partner (alpha, beta') in S_+ with
/// beta*beta' = 1 mod alpha and beta' < beta.
inline bool in_Sbar(const TwoBridgePair& p) {
  if (p.beta() <= 0) return false;
  const std::int64_t partner = mod_inverse(p.beta(), p.alpha());
  return !(partner % 2 != 0 && partner < p.beta());
}

inline std::vector<TwoBridgePair> enumerate_Sbar(std::int64_t max_alpha) {
  std::vector<TwoBridgePair> out;
  for (const auto& p : enumerate_S_plus(max_alpha))
    if (in_Sbar(p)) out.push_back(p);
  return out;
}

/// S_+ together with every mirror, ordered by (alpha, beta).
inline std::vector<TwoBridgePair> enumerate_S(std::int64_t max_alpha) {
  std::vector<TwoBridgePair> out;
  for (std::int64_t a = 3; a <= max_alpha; a += 2)
    for (std::int64_t b = -a + 2; b < a; b += 2)
      if (std::gcd(a, b) == 1) out.push_back(TwoBridgePair::validate(a, b));
  return out;
}

}  // namespace riley
