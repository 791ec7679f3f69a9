#ifndef BRAID_ARRANGEMENT_HPP
#define BRAID_ARRANGEMENT_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid/common.hpp"

namespace braid {

// A deformation of the braid arrangement in R^n: hyperplanes x_i - x_j = s
// for 1 <= i < j <= n and s ranging over a finite integer set S_{i,j}.
// Immutable after construction; derived data (m and the directed S^- tables)
// is precomputed.
//
// For distinct labels a, b the directed table is
//   S^-_{i,j} = { s >= 0 : -s in S_{i,j} }            (i < j)
//   S^-_{j,i} = {0} union { s > 0 : s in S_{i,j} }    (i < j)
// so 0 is always in S^-_{j,i} and every element lies in [0, m].
class ArrangementSpec {
 public:
  using OffsetMap = std::map<std::pair<int, int>, std::vector<int>>;

  ArrangementSpec(int n, OffsetMap offsets) : n_(n), offsets_(std::move(offsets)) {
    if (n_ < 1) throw UsageError("dimension must be >= 1");
    m_ = 0;
    for (auto& [key, set] : offsets_) {
      auto [i, j] = key;
      if (i < 1 || j > n_ || i >= j)
        throw UsageError("offset key (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must satisfy 1 <= i < j <= n");
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      for (int s : set) m_ = std::max(m_, std::abs(s));
    }
    s_minus_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), {});
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        const std::vector<int>* set = find_offsets(i, j);
        std::vector<int> forward;         // S^-_{i,j}
        std::vector<int> backward = {0};  // S^-_{j,i}
        if (set != nullptr) {
          for (int s : *set) {
            if (-s >= 0) forward.push_back(-s);
            if (s > 0) backward.push_back(s);
          }
        }
        std::sort(forward.begin(), forward.end());
        std::sort(backward.begin(), backward.end());
        backward.erase(std::unique(backward.begin(), backward.end()), backward.end());
        s_minus_[index(i, j)] = std::move(forward);
        s_minus_[index(j, i)] = std::move(backward);
      }
    }
  }

  int dimension() const { return n_; }

  // m = max |s| over all offset sets; 0 when every set is empty.
  int max_offset() const { return m_; }

  const OffsetMap& offsets() const { return offsets_; }

  // Offsets for 1 <= i < j <= n; missing key means the empty set.
  const std::vector<int>& offsets_of(int i, int j) const {
    check_pair(i, j);
    if (i >= j) throw UsageError("offsets_of requires i < j");
    const std::vector<int>* set = find_offsets(i, j);
    static const std::vector<int> kEmpty;
    return set != nullptr ? *set : kEmpty;
  }

  const std::vector<int>& s_minus(int a, int b) const {
    check_pair(a, b);
    return s_minus_[index(a, b)];
  }

  bool in_s_minus(int a, int b, long long value) const {
    const std::vector<int>& set = s_minus(a, b);
    return std::binary_search(set.begin(), set.end(), value);
  }

  std::size_t hyperplane_count() const {
    std::size_t total = 0;
    for (const auto& [key, set] : offsets_) total += set.size();
    return total;
  }

 private:
  const std::vector<int>* find_offsets(int i, int j) const {
    auto it = offsets_.find({i, j});
    return it == offsets_.end() ? nullptr : &it->second;
  }

  void check_pair(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_)
      throw UsageError("node label out of range [1, n]");
    if (a == b) throw UsageError("labels must be distinct");
  }

  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * (n_ + 1) + b;
  }

  int n_;
  OffsetMap offsets_;
  int m_;
  std::vector<std::vector<int>> s_minus_;
};

// ---------------------------------------------------------------------------
// Spec documents. JSON shape:
//   {"n": 3, "hyperplanes": [{"i": 1, "j": 2, "s": [0, 1]}, ...]}
// Pairs must satisfy i < j; a duplicated (i,j) entry is an error; a missing
// pair means the empty offset set.
// ---------------------------------------------------------------------------

inline ArrangementSpec parse_arrangement(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad spec document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw UsageError("spec document needs an integer field \"n\"");
  int n = doc["n"].get<int>();
  ArrangementSpec::OffsetMap offsets;
  if (doc.contains("hyperplanes")) {
    if (!doc["hyperplanes"].is_array())
      throw UsageError("\"hyperplanes\" must be an array");
    for (const auto& entry : doc["hyperplanes"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("s") || !entry["i"].is_number_integer() ||
          !entry["j"].is_number_integer() || !entry["s"].is_array())
        throw UsageError("each hyperplane entry needs integer i, j and an array s");
      int i = entry["i"].get<int>();
      int j = entry["j"].get<int>();
      std::vector<int> set;
      for (const auto& v : entry["s"]) {
        if (!v.is_number_integer()) throw UsageError("offsets must be integers");
        set.push_back(v.get<int>());
      }
      if (!offsets.emplace(std::pair{i, j}, std::move(set)).second)
        throw UsageError("duplicate hyperplane entry for pair (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
    }
  }
  return ArrangementSpec(n, std::move(offsets));
}

inline nlohmann::json spec_to_json(const ArrangementSpec& spec) {
  nlohmann::json doc;
  doc["n"] = spec.dimension();
  doc["hyperplanes"] = nlohmann::json::array();
  for (const auto& [key, set] : spec.offsets()) {
    if (set.empty()) continue;
    doc["hyperplanes"].push_back({{"i", key.first}, {"j", key.second}, {"s", set}});
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Presets.
// ---------------------------------------------------------------------------

inline ArrangementSpec preset_braid(int n) {
  ArrangementSpec::OffsetMap offsets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) offsets[{i, j}] = {0};
  return ArrangementSpec(n, std::move(offsets));
}

inline ArrangementSpec preset_shi(int n) {
  ArrangementSpec::OffsetMap offsets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) offsets[{i, j}] = {0, 1};
  return ArrangementSpec(n, std::move(offsets));
}

// Ish-type arrangement from per-column sets: S_{1,j} = columns[j] (j = 2..n),
// every other pair gets {0}. Each column must contain 0.
inline ArrangementSpec preset_ish_type(int n, const std::map<int, std::vector<int>>& columns) {
  ArrangementSpec::OffsetMap offsets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) offsets[{i, j}] = {0};
  for (const auto& [j, set] : columns) {
    if (j < 2 || j > n) throw UsageError("column index out of range");
    if (std::find(set.begin(), set.end(), 0) == set.end())
      throw UsageError("an Ish-type column must contain 0");
    offsets[{1, j}] = set;
  }
  return ArrangementSpec(n, std::move(offsets));
}

inline ArrangementSpec preset_nested_ish(int n, const std::map<int, std::vector<int>>& columns) {
  ArrangementSpec spec = preset_ish_type(n, columns);
  for (int j = 2; j < n; ++j) {
    const std::vector<int>& a = spec.offsets_of(1, j);
    const std::vector<int>& b = spec.offsets_of(1, j + 1);
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
      throw UsageError("nested-ish columns must satisfy S_{1,j} within S_{1,j+1}");
  }
  return spec;
}

inline ArrangementSpec preset_ish(int n) {
  std::map<int, std::vector<int>> columns;
  for (int j = 2; j <= n; ++j) {
    std::vector<int> set(j);
    for (int s = 0; s < j; ++s) set[s] = s;
    columns[j] = std::move(set);
  }
  return preset_nested_ish(n, columns);
}

inline ArrangementSpec preset(const std::string& family, int n,
                              const std::map<int, std::vector<int>>& columns = {}) {
  if (family == "braid") return preset_braid(n);
  if (family == "shi") return preset_shi(n);
  if (family == "ish") return preset_ish(n);
  if (family == "nested-ish") return preset_nested_ish(n, columns);
  if (family == "ish-type") return preset_ish_type(n, columns);
  throw UsageError("unknown preset family: " + family);
}

// ---------------------------------------------------------------------------
// Family predicates.
// ---------------------------------------------------------------------------

// Transitivity: for all distinct i,j,k and nonnegative s not in S^-_{i,j},
// t not in S^-_{j,k}, the sum s+t is not in S^-_{i,k}. Every element of an
// S^- set lies in [0, m], so any s > m (or t > m) gives s + t > m which can
// never land in S^-_{i,k}; quantifying s,t over [0, m] is therefore exact.
// The agreement with an untruncated scan is property-tested.
inline bool transitive_over(const ArrangementSpec& spec, bool exempt_first) {
  int n = spec.dimension();
  int m = spec.max_offset();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (exempt_first && (i == 1 || k == 1)) continue;
        for (int s = 0; s <= m; ++s) {
          if (spec.in_s_minus(i, j, s)) continue;
          for (int t = 0; t <= m; ++t) {
            if (spec.in_s_minus(j, k, t)) continue;
            if (spec.in_s_minus(i, k, s + t)) return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool is_transitive(const ArrangementSpec& spec) {
  return transitive_over(spec, /*exempt_first=*/false);
}

// Almost transitive: the transitivity condition restricted to triples with
// 1 not in {i, k}.
inline bool is_almost_transitive(const ArrangementSpec& spec) {
  return transitive_over(spec, /*exempt_first=*/true);
}

inline bool is_ish_type(const ArrangementSpec& spec) {
  int n = spec.dimension();
  for (int j = 2; j <= n; ++j) {
    const std::vector<int>& top = spec.offsets_of(1, j);
    if (!std::binary_search(top.begin(), top.end(), 0)) return false;
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (spec.offsets_of(i, j) != std::vector<int>{0}) return false;
  return true;
}

inline bool is_nested_ish(const ArrangementSpec& spec) {
  if (!is_ish_type(spec)) return false;
  int n = spec.dimension();
  for (int j = 2; j < n; ++j) {
    const std::vector<int>& a = spec.offsets_of(1, j);
    const std::vector<int>& b = spec.offsets_of(1, j + 1);
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
  }
  return true;
}

inline bool is_ish(const ArrangementSpec& spec) {
  if (!is_ish_type(spec)) return false;
  int n = spec.dimension();
  for (int j = 2; j <= n; ++j) {
    std::vector<int> expect(j);
    for (int s = 0; s < j; ++s) expect[s] = s;
    if (spec.offsets_of(1, j) != expect) return false;
  }
  return true;
}

inline std::set<std::string> classify_family(const ArrangementSpec& spec) {
  std::set<std::string> tags;
  if (is_ish_type(spec)) tags.insert("ish-type");
  if (is_nested_ish(spec)) tags.insert("nested-ish");
  if (is_ish(spec)) tags.insert("ish");
  if (is_transitive(spec)) tags.insert("transitive");
  if (is_almost_transitive(spec)) tags.insert("almost-transitive");
  return tags;
}

}  // namespace braid

#endif  // BRAID_ARRANGEMENT_HPP
