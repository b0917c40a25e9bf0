#pragma once

// Epimorphism detection by divisibility of Riley polynomials, plus the
// exhaustive "equal polynomial implies equivalent knots" and injectivity scans.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "riley/exact_arith.hpp"
#include "riley/parallel.hpp"
#include "riley/riley.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

/// Evidence that phi_target divides phi_source: phi_source = phi_target * psi.
struct EpiPair {
  TwoBridgePair source;
  TwoBridgePair target;
  std::vector<Rational> cofactor_rational;
  /// psi, present when it has integer coefficients.
  std::optional<IntPoly> cofactor;

  bool integral() const noexcept { return cofactor.has_value(); }
};

inline std::optional<EpiPair> detects_epimorphism_from(const RileyRecord& k1, const RileyRecord& k2) {
  auto d = poly_divides(k2.phi, k1.phi);
  if (!d.divides) return std::nullopt;
  return EpiPair{k1.pair, k2.pair, std::move(*d.rational_quotient), std::move(d.quotient)};
}

/// A sufficient condition for an epimorphism G(k1) -> G(k2). An empty result
/// says nothing about whether one exists.
inline std::optional<EpiPair> detects_epimorphism(const TwoBridgePair& k1, const TwoBridgePair& k2) {
  return detects_epimorphism_from(make_record(k1), make_record(k2));
}

namespace detail {

// Cheap necessary condition for f | g. When f is primitive, Gauss's lemma
// puts the quotient in Z[u], so f(a) | g(a) for every integer a.
struct DivisorScreen {
  bool primitive = false;
  std::vector<Integer> values;
};

inline const std::vector<Integer>& screen_points() {
  static const std::vector<Integer> pts{2, 3, -2};
  return pts;
}

inline DivisorScreen make_screen(const IntPoly& f) {
  DivisorScreen s;
  s.primitive = !f.is_zero() && content(f) == 1;
  for (const auto& a : screen_points()) s.values.push_back(eval(f, a));
  return s;
}

inline bool may_divide(const DivisorScreen& f, const DivisorScreen& g) {
  if (!f.primitive) return true;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i].is_zero()) {
      if (!g.values[i].is_zero()) return false;
    } else if (Integer(g.values[i] % f.values[i]) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// All (k1, k2) in S_+ with alpha1 > alpha2 and phi_k2 | phi_k1, sorted by
/// (alpha1, beta1, alpha2, beta2).
inline std::vector<EpiPair> scan_epi_pairs(const std::vector<RileyRecord>& records, unsigned jobs = 1) {
  std::vector<RileyRecord> sorted;
  for (const auto& r : records)
    if (r.pair.beta() > 0) sorted.push_back(r);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });

  std::vector<detail::DivisorScreen> screens;
  screens.reserve(sorted.size());
  for (const auto& r : sorted) screens.push_back(detail::make_screen(r.phi));

  std::vector<std::size_t> sources(sorted.size());
  for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = i;

  auto per_source = parallel_map(
      sources,
      [&](std::size_t i) {
        std::vector<EpiPair> found;
        const auto& src = sorted[i];
        for (std::size_t j = 0; j < sorted.size(); ++j) {
          const auto& tgt = sorted[j];
          if (tgt.pair.alpha() >= src.pair.alpha()) break;
          if (tgt.phi.degree() > src.phi.degree()) continue;
          if (!detail::may_divide(screens[j], screens[i])) continue;
          if (auto e = detects_epimorphism_from(src, tgt)) found.push_back(std::move(*e));
        }
        return found;
      },
      jobs);

  std::vector<EpiPair> out;
  for (auto& v : per_source)
    for (auto& e : v) out.push_back(std::move(e));
  return out;
}

inline std::vector<EpiPair> scan_epi_pairs(std::int64_t max_alpha, unsigned jobs = 1) {
  return scan_epi_pairs(parallel_map(enumerate_S_plus(max_alpha), make_record, jobs), jobs);
}

struct PolyGroup {
  IntPoly phi;
  std::vector<TwoBridgePair> members;
};

/// Two pairs sharing a Riley polynomial without being equivalent up to mirror.
struct EquivalenceViolation {
  TwoBridgePair first;
  TwoBridgePair second;
  IntPoly phi;
};

struct ClassificationReport {
  std::int64_t max_alpha = 0;
  std::size_t sbar_size = 0;
  std::vector<PolyGroup> duplicate_groups;
  std::vector<EquivalenceViolation> violations;
};

/// Groups records by exact polynomial; groups ordered by their first member.
inline std::vector<PolyGroup> group_by_polynomial(const std::vector<RileyRecord>& records) {
  std::map<IntPoly, std::vector<TwoBridgePair>> index;
  for (const auto& r : records) index[r.phi].push_back(r.pair);
  std::vector<PolyGroup> groups;
  for (auto& [phi, members] : index) {
    std::sort(members.begin(), members.end());
    groups.push_back({phi, std::move(members)});
  }
  std::sort(groups.begin(), groups.end(),
            [](const PolyGroup& a, const PolyGroup& b) { return a.members.front() < b.members.front(); });
  return groups;
}

/// Every group of pairs with equal Riley polynomials must consist of pairs
/// equivalent up to mirror. `records` should cover S (both signs of beta).
inline ClassificationReport check_equal_polynomials(const std::vector<RileyRecord>& records, std::int64_t max_alpha) {
  ClassificationReport report;
  report.max_alpha = max_alpha;
  report.sbar_size = enumerate_Sbar(max_alpha).size();
  for (auto& g : group_by_polynomial(records)) {
    if (g.members.size() < 2) continue;
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j)
        if (!equivalent(g.members[i], g.members[j], true))
          report.violations.push_back({g.members[i], g.members[j], g.phi});
    report.duplicate_groups.push_back(std::move(g));
  }
  return report;
}

inline ClassificationReport check_equal_polynomials(std::int64_t max_alpha, unsigned jobs = 1) {
  return check_equal_polynomials(parallel_map(enumerate_S(max_alpha), make_record, jobs), max_alpha);
}

/// Reports any two members of S-bar with identical polynomials.
inline ClassificationReport check_injectivity_Sbar(const std::vector<RileyRecord>& records,
                                                   std::int64_t max_alpha) {
  std::vector<RileyRecord> sbar;
  for (const auto& r : records)
    if (r.pair.alpha() <= max_alpha && in_Sbar(r.pair)) sbar.push_back(r);
  ClassificationReport report;
  report.max_alpha = max_alpha;
  report.sbar_size = sbar.size();
  for (auto& g : group_by_polynomial(sbar))
    if (g.members.size() > 1) report.duplicate_groups.push_back(std::move(g));
  return report;
}

inline ClassificationReport check_injectivity_Sbar(std::int64_t max_alpha, unsigned jobs = 1) {
  return check_injectivity_Sbar(parallel_map(enumerate_Sbar(max_alpha), make_record, jobs), max_alpha);
}

}  // namespace riley
