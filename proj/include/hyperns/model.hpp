#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperns/errors.hpp"

namespace hyperns {

// Elements of the truncated universe [0, M]. Range checks happen at the
// model's API boundaries, not in the type itself.
using HyperNat = std::uint64_t;

// Either a proper level k in [0, L) or the distinguished top level *N.
class LevelIndex {
public:
  static LevelIndex level(std::size_t k) { return LevelIndex(k); }
  static LevelIndex top() { return LevelIndex(kTop); }

  bool is_top() const { return k_ == kTop; }
  std::size_t value() const {
    if (is_top()) throw std::logic_error("LevelIndex: TOP has no numeric value");
    return k_;
  }

  friend bool operator==(LevelIndex a, LevelIndex b) { return a.k_ == b.k_; }
  friend bool operator!=(LevelIndex a, LevelIndex b) { return a.k_ != b.k_; }
  // TOP compares above every proper level.
  friend bool operator<(LevelIndex a, LevelIndex b) { return a.k_ < b.k_; }
  friend bool operator<=(LevelIndex a, LevelIndex b) { return a.k_ <= b.k_; }

  std::string str() const { return is_top() ? "TOP" : std::to_string(k_); }

private:
  static constexpr std::size_t kTop = std::numeric_limits<std::size_t>::max();
  explicit LevelIndex(std::size_t k) : k_(k) {}
  std::size_t k_;
};

// Closed integer interval [lo, hi]; the interpretation of an omega band.
struct Band {
  HyperNat lo = 0;
  HyperNat hi = 0;
  std::uint64_t size() const { return hi - lo + 1; }
  bool contains(HyperNat n) const { return lo <= n && n <= hi; }
};

// The finite-rank stratified universe: N = [0,t0) c N_1 = [0,t1) c ... c [0,M].
// Immutable after construction; every operation on it is pure.
class HyperModel {
public:
  HyperModel(HyperNat max_element, std::vector<HyperNat> thresholds)
      : max_(max_element), thresholds_(std::move(thresholds)) {
    if (thresholds_.empty())
      throw InputError("model: at least one level threshold required");
    if (thresholds_.front() < 2)
      throw InputError("model: t0 must be >= 2 (0 and 1 are always standard)");
    for (std::size_t i = 0; i + 1 < thresholds_.size(); ++i)
      if (thresholds_[i] >= thresholds_[i + 1])
        throw InputError("model: thresholds must be strictly increasing");
    if (thresholds_.back() >= max_)
      throw InputError("model: every threshold must be strictly below M");
  }

  HyperNat max_element() const { return max_; }
  std::size_t level_count() const { return thresholds_.size(); }
  HyperNat threshold(std::size_t k) const {
    if (k >= thresholds_.size()) throw std::out_of_range("model: no such level");
    return thresholds_[k];
  }
  const std::vector<HyperNat>& thresholds() const { return thresholds_; }

  bool contains(HyperNat n) const { return n <= max_; }
  void require_element(HyperNat n) const {
    if (!contains(n))
      throw std::out_of_range("value " + std::to_string(n) + " outside universe [0," +
                              std::to_string(max_) + "]");
  }

  // One past the largest element of N_k; TOP and k >= L give M+1 (the level
  // chain stabilizes at the full universe).
  HyperNat level_end(LevelIndex k) const {
    if (k.is_top() || k.value() >= thresholds_.size()) return max_ + 1;
    return thresholds_[k.value()];
  }
  HyperNat standard_end() const { return thresholds_.front(); }

  std::string str() const {
    std::ostringstream os;
    os << "M=" << max_ << " levels=";
    for (std::size_t i = 0; i < thresholds_.size(); ++i) {
      if (i) os << ",";
      os << thresholds_[i];
    }
    return os.str();
  }

private:
  HyperNat max_;
  std::vector<HyperNat> thresholds_;
};

// The model used by nearly all shipped examples: three bands, small enough
// for exhaustive omega scans.
inline HyperModel default_model() { return HyperModel(2048, {16, 128}); }

// Parses the model literal, e.g. "M=2048 levels=16,128" (comma or space
// separated between the two fields).
inline HyperModel parse_model(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  // "levels=16 128" after the replacement; re-split on the '=' signs.
  std::istringstream is(s);
  std::uint64_t max = 0;
  bool have_max = false;
  std::vector<HyperNat> thresholds;
  std::string tok;
  enum { None, Levels } pending = None;
  while (is >> tok) {
    if (tok == "model") continue;
    if (tok.rfind("M=", 0) == 0) {
      max = std::stoull(tok.substr(2));
      have_max = true;
      pending = None;
    } else if (tok.rfind("levels=", 0) == 0) {
      thresholds.push_back(std::stoull(tok.substr(7)));
      pending = Levels;
    } else if (pending == Levels && !tok.empty() &&
               std::isdigit(static_cast<unsigned char>(tok[0]))) {
      thresholds.push_back(std::stoull(tok));
    } else {
      throw ParseError("model literal: unexpected token '" + tok + "'", 1, 1);
    }
  }
  if (!have_max || thresholds.empty())
    throw ParseError("model literal needs M=<n> and levels=<t0,..>", 1, 1);
  return HyperModel(max, std::move(thresholds));
}

// Least k with n < t_k, or TOP when n clears every threshold.
inline LevelIndex level_of(const HyperModel& m, HyperNat n) {
  m.require_element(n);
  const auto& t = m.thresholds();
  for (std::size_t k = 0; k < t.size(); ++k)
    if (n < t[k]) return LevelIndex::level(k);
  return LevelIndex::top();
}

inline bool is_k_finite(const HyperModel& m, HyperNat n, LevelIndex k) {
  m.require_element(n);
  return n < m.level_end(k);
}

// [t_k, M], the interpretation of Omega_k. Undefined above the top.
inline Band omega_band(const HyperModel& m, LevelIndex k) {
  if (k.is_top() || k.value() >= m.level_count())
    throw InputError("omega_band: no omega band above the top level");
  return Band{m.threshold(k.value()), m.max_element()};
}

// Deterministic probe set for a band: the boundary elements, the midpoint,
// and seeded pseudo-random fill up to `count` (band permitting). Sorted,
// duplicate-free; the mandatory elements are always present.
inline std::vector<HyperNat> sample_omegas(const HyperModel& m, LevelIndex k,
                                           std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw InputError("sample_omegas: count must be >= 1");
  Band band = omega_band(m, k);
  std::set<HyperNat> picked;
  auto put = [&](HyperNat v) {
    if (band.contains(v)) picked.insert(v);
  };
  put(band.lo);
  put(band.lo + 1);
  put(band.lo + (band.hi - band.lo) / 2);
  put(band.hi - 1);
  put(band.hi);
  std::uint64_t want = std::min<std::uint64_t>(std::max<std::uint64_t>(count, picked.size()),
                                               band.size());
  std::mt19937_64 rng(seed);
  while (picked.size() < want) picked.insert(band.lo + rng() % band.size());
  return {picked.begin(), picked.end()};
}

}  // namespace hyperns
