#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "braid/arrangement.hpp"
#include "braid/random_spec.hpp"

using namespace braid;

namespace {

// Independent evaluator of the defining set-builders, straight from the
// two-case definition over a wide window.
std::set<int> s_minus_by_definition(const ArrangementSpec& spec, int a, int b, int window) {
  std::set<int> out;
  int i = std::min(a, b), j = std::max(a, b);
  const std::vector<int>& set = spec.offsets_of(i, j);
  auto contains = [&](int v) { return std::binary_search(set.begin(), set.end(), v); };
  if (a < b) {
    for (int s = 0; s <= window; ++s)
      if (contains(-s)) out.insert(s);
  } else {
    out.insert(0);
    for (int s = 1; s <= window; ++s)
      if (contains(s)) out.insert(s);
  }
  return out;
}

// Untruncated transitivity scan, used to validate the [0, m] truncation.
bool transitive_full_scan(const ArrangementSpec& spec, bool exempt_first, int window) {
  int n = spec.dimension();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (exempt_first && (i == 1 || k == 1)) continue;
        for (int s = 0; s <= window; ++s) {
          if (spec.in_s_minus(i, j, s)) continue;
          for (int t = 0; t <= window; ++t) {
            if (spec.in_s_minus(j, k, t)) continue;
            if (spec.in_s_minus(i, k, s + t)) return false;
          }
        }
      }
  return true;
}

}  // namespace

TEST_CASE("spec document parsing and validation") {
  ArrangementSpec ish3 = parse_arrangement(
      R"({"n":3,"hyperplanes":[{"i":1,"j":2,"s":[0,1]},{"i":1,"j":3,"s":[0,1,2]},{"i":2,"j":3,"s":[0]}]})");
  CHECK(ish3.dimension() == 3);
  CHECK(ish3.max_offset() == 2);
  CHECK(is_ish(ish3));

  ArrangementSpec empty = parse_arrangement(R"({"n":2,"hyperplanes":[{"i":1,"j":2,"s":[]}]})");
  CHECK(empty.max_offset() == 0);
  CHECK(empty.hyperplane_count() == 0);

  CHECK_THROWS_AS(parse_arrangement(R"({"n":3,"hyperplanes":[{"i":2,"j":1,"s":[0]}]})"),
                  UsageError);
  CHECK_THROWS_AS(parse_arrangement(R"({"n":3,"hyperplanes":[{"i":1,"j":4,"s":[0]}]})"),
                  UsageError);
  CHECK_THROWS_AS(parse_arrangement(R"({"n":3,"hyperplanes":[{"i":1,"j":2,"s":[0.5]}]})"),
                  UsageError);
  CHECK_THROWS_AS(
      parse_arrangement(
          R"({"n":3,"hyperplanes":[{"i":1,"j":2,"s":[0]},{"i":1,"j":2,"s":[1]}]})"),
      UsageError);
  CHECK_THROWS_AS(parse_arrangement(R"({"n":0,"hyperplanes":[]})"), UsageError);
  CHECK_THROWS_AS(parse_arrangement("not json"), UsageError);

  // Round trip through the JSON form.
  ArrangementSpec back = parse_arrangement(spec_to_json(ish3).dump());
  CHECK(back.offsets() == ish3.offsets());
}

TEST_CASE("directed S-minus tables") {
  ArrangementSpec ish3 = preset_ish(3);
  CHECK(ish3.s_minus(1, 2) == std::vector<int>{0});
  CHECK(ish3.s_minus(2, 1) == std::vector<int>{0, 1});
  CHECK(ish3.s_minus(1, 3) == std::vector<int>{0});
  CHECK(ish3.s_minus(3, 1) == std::vector<int>{0, 1, 2});

  ArrangementSpec mixed(2, {{{1, 2}, {-2, 0, 3}}});
  CHECK(mixed.s_minus(1, 2) == std::vector<int>{0, 2});
  CHECK(mixed.s_minus(2, 1) == std::vector<int>{0, 3});
  // Cross-check against the brute evaluator of the set-builder.
  for (int a : {1, 2}) {
    int b = 3 - a;
    std::set<int> expect = s_minus_by_definition(mixed, a, b, 10);
    std::set<int> got(mixed.s_minus(a, b).begin(), mixed.s_minus(a, b).end());
    CHECK(got == expect);
  }

  CHECK_THROWS_AS(ish3.s_minus(1, 1), UsageError);
  CHECK_THROWS_AS(ish3.s_minus(0, 2), UsageError);
  CHECK_THROWS_AS(ish3.s_minus(1, 4), UsageError);
}

TEST_CASE("S-minus invariants on random specs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(3));
    int m = static_cast<int>(rng.next_below(4));
    ArrangementSpec spec = sample_spec(rng, n, m, 0.5);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const std::vector<int>& backward = spec.s_minus(j, i);
        CHECK(std::binary_search(backward.begin(), backward.end(), 0));
        for (int v : spec.s_minus(i, j)) {
          CHECK(v >= 0);
          CHECK(v <= spec.max_offset());
        }
        for (int v : backward) {
          CHECK(v >= 0);
          CHECK(v <= spec.max_offset());
        }
      }
  }
}

TEST_CASE("max offset") {
  CHECK(preset_ish(3).max_offset() == 2);
  CHECK(preset_braid(4).max_offset() == 0);
  CHECK(ArrangementSpec(2, {{{1, 2}, {-5, 1}}}).max_offset() == 5);
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(preset_braid(3)));
  CHECK(is_transitive(preset_ish(3)));
  CHECK_FALSE(is_transitive(preset_ish(4)));
  CHECK(is_transitive(preset_shi(3)));

  // Regression value: S_{2,3} = {0,-1}, S_{1,2} = S_{1,3} = {0}.
  ArrangementSpec reg(3, {{{2, 3}, {0, -1}}, {{1, 2}, {0}}, {{1, 3}, {0}}});
  CHECK(is_transitive(reg));
  CHECK(is_almost_transitive(reg));
}

TEST_CASE("almost transitivity") {
  for (int n = 2; n <= 5; ++n) CHECK(is_almost_transitive(preset_ish(n)));
  CHECK(is_almost_transitive(preset_braid(4)));

  // Any transitive spec is almost transitive; sampled.
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    ArrangementSpec spec = sample_spec(rng, 4, 2, 0.4);
    if (is_transitive(spec)) CHECK(is_almost_transitive(spec));
  }
}

TEST_CASE("quantifier truncation agrees with the untruncated scan") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(2));
    int m = static_cast<int>(rng.next_below(4));
    ArrangementSpec spec = sample_spec(rng, n, m, 0.5);
    int window = 3 * spec.max_offset() + 3;
    CHECK(is_transitive(spec) == transitive_full_scan(spec, false, window));
    CHECK(is_almost_transitive(spec) == transitive_full_scan(spec, true, window));
  }
}

TEST_CASE("presets") {
  ArrangementSpec ish3 = preset("ish", 3);
  CHECK(ish3.offsets_of(1, 2) == std::vector<int>{0, 1});
  CHECK(ish3.offsets_of(1, 3) == std::vector<int>{0, 1, 2});
  CHECK(ish3.offsets_of(2, 3) == std::vector<int>{0});

  ArrangementSpec braid4 = preset("braid", 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(braid4.offsets_of(i, j) == std::vector<int>{0});

  std::map<int, std::vector<int>> nest;
  for (int j = 2; j <= 6; ++j) {
    std::vector<int> col;
    for (int s = 0; s <= j - 2; ++s) col.push_back(s);
    nest[j] = col;
  }
  ArrangementSpec nested = preset("nested-ish", 6, nest);
  CHECK(is_nested_ish(nested));
  CHECK(nested.offsets_of(1, 6) == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(preset("nested-ish", 3, {{2, {1}}}), UsageError);           // 0 missing
  CHECK_THROWS_AS(preset("nested-ish", 3, {{2, {0, 1}}, {3, {0}}}), UsageError);  // not nested
  CHECK_THROWS_AS(preset("ish-type", 3, {{2, {1, 2}}}), UsageError);
  CHECK_THROWS_AS(preset("unknown", 3), UsageError);
}

TEST_CASE("family classification") {
  std::set<std::string> ish4 = classify_family(preset_ish(4));
  CHECK(ish4.count("ish-type"));
  CHECK(ish4.count("nested-ish"));
  CHECK(ish4.count("ish"));
  CHECK(ish4.count("almost-transitive"));
  CHECK_FALSE(ish4.count("transitive"));

  std::set<std::string> braid3 = classify_family(preset_braid(3));
  CHECK(braid3 ==
        std::set<std::string>{"ish-type", "nested-ish", "transitive", "almost-transitive"});

  std::set<std::string> shi3 = classify_family(preset_shi(3));
  CHECK_FALSE(shi3.count("ish-type"));
  CHECK(shi3.count("transitive"));
  CHECK(shi3.count("almost-transitive"));

  for (int n = 2; n <= 6; ++n) {
    std::set<std::string> tags = classify_family(preset_ish(n));
    CHECK(tags.count("ish"));
    CHECK(tags.count("nested-ish"));
    CHECK(tags.count("ish-type"));
  }
}
