#pragma once

// Batch tables of Riley polynomials, knot classes and the combined report.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "riley/epimorphism.hpp"
#include "riley/parallel.hpp"
#include "riley/riley.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

class RileyTable {
 public:
  RileyTable() = default;

  RileyTable(std::int64_t max_alpha, bool include_mirrors, std::vector<RileyRecord> records)
      : max_alpha_(max_alpha), include_mirrors_(include_mirrors), records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });
    for (const auto& r : records_) index_[r.phi].push_back(r.pair);
  }

  std::int64_t max_alpha() const noexcept { return max_alpha_; }
  bool include_mirrors() const noexcept { return include_mirrors_; }
  const std::vector<RileyRecord>& records() const noexcept { return records_; }
  const std::map<IntPoly, std::vector<TwoBridgePair>>& index() const noexcept { return index_; }

  /// Pairs whose Riley polynomial is exactly phi.
  std::vector<TwoBridgePair> lookup(const IntPoly& phi) const {
    auto it = index_.find(phi);
    return it == index_.end() ? std::vector<TwoBridgePair>{} : it->second;
  }

 private:
  std::int64_t max_alpha_ = 0;
  bool include_mirrors_ = false;
  std::vector<RileyRecord> records_;
  std::map<IntPoly, std::vector<TwoBridgePair>> index_;
};

inline void check_max_alpha(std::int64_t max_alpha) {
  if (max_alpha < 3) throw std::invalid_argument("max_alpha must be at least 3");
}

/// Riley records for S_+ up to max_alpha, plus mirrors when requested.
inline RileyTable build_table(std::int64_t max_alpha, bool include_mirrors = false, unsigned jobs = 1) {
  check_max_alpha(max_alpha);
  const auto pairs = include_mirrors ? enumerate_S(max_alpha) : enumerate_S_plus(max_alpha);
  return RileyTable(max_alpha, include_mirrors, parallel_map(pairs, make_record, jobs));
}

/// Mirror records derived from the stored positive-beta ones, since the
/// mirror shares the Riley polynomial and negates the epsilon sequence.
inline RileyTable with_mirrors(const RileyTable& table) {
  if (table.include_mirrors()) return table;
  std::vector<RileyRecord> all = table.records();
  for (const auto& r : table.records()) {
    std::vector<int> neg(r.eps.signs());
    for (int& s : neg) s = -s;
    all.push_back({mirror(r.pair), EpsilonSequence(std::move(neg)), r.phi});
  }
  return RileyTable(table.max_alpha(), true, std::move(all));
}

struct KnotClass {
  TwoBridgePair canonical;
  std::vector<TwoBridgePair> members;
};

/// Partitions S_+ up to max_alpha into classes of knots equivalent up to mirror.
inline std::vector<KnotClass> knot_classes(std::int64_t max_alpha) {
  check_max_alpha(max_alpha);
  std::vector<KnotClass> classes;
  for (const auto& p : enumerate_S_plus(max_alpha)) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const KnotClass& c) {
      return c.canonical.alpha() == p.alpha() && equivalent(c.members.front(), p, true);
    });
    if (it == classes.end())
      classes.push_back({canonical_representative(p), {p}});
    else
      it->members.push_back(p);
  }
  return classes;
}

struct SbarCount {
  std::int64_t alpha;
  std::size_t sbar_size;
  std::size_t class_count;
};

struct FullReport {
  RileyTable table;
  ClassificationReport equal_polynomials;
  ClassificationReport injectivity;
  std::vector<EpiPair> epi_pairs;
  std::vector<KnotClass> classes;
  std::vector<SbarCount> per_alpha;

  bool passed() const { return equal_polynomials.violations.empty() && injectivity.duplicate_groups.empty(); }
};

/// All scans over one shared table.
inline FullReport full_report(std::int64_t max_alpha, unsigned jobs = 1) {
  FullReport r;
  r.table = build_table(max_alpha, false, jobs);
  const RileyTable all = with_mirrors(r.table);
  r.equal_polynomials = check_equal_polynomials(all.records(), max_alpha);
  r.injectivity = check_injectivity_Sbar(r.table.records(), max_alpha);
  r.epi_pairs = scan_epi_pairs(r.table.records(), jobs);
  r.classes = knot_classes(max_alpha);

  for (std::int64_t a = 3; a <= max_alpha; a += 2) {
    SbarCount c{a, 0, 0};
    for (const auto& rec : r.table.records())
      if (rec.pair.alpha() == a && in_Sbar(rec.pair)) ++c.sbar_size;
    for (const auto& k : r.classes)
      if (k.canonical.alpha() == a) ++c.class_count;
    if (c.sbar_size > 0 || c.class_count > 0) r.per_alpha.push_back(c);
  }
  return r;
}

}  // namespace riley
