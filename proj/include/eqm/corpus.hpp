#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eqm/errors.hpp"
#include "eqm/random.hpp"
#include "eqm/realsets.hpp"

namespace eqm {

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

/// "seed:S,count:C" (either order).
inline CorpusSpec parse_corpus_spec(std::string_view text) {
  CorpusSpec spec;
  bool have_seed = false;
  bool have_count = false;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "bad corpus item '" + item + "'");
    const std::string key = item.substr(0, colon);
    const std::string value = item.substr(colon + 1);
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad corpus value '" + value + "'");
    }
    if (key == "seed") {
      spec.seed = v;
      have_seed = true;
    } else if (key == "count") {
      spec.count = v;
      have_count = true;
    } else {
      fail(ErrorCode::ParseError, "unknown corpus key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (!have_seed || !have_count) fail(ErrorCode::ParseError, "corpus needs seed:S,count:C");
  return spec;
}

/// Item `index` of the seeded corpus: N in {1..4} intervals inside [-5, 5],
/// every band at least 0.2 wide and every gap at least 0.1. The free length is
/// split among the 2N + 1 slots (left margin, band extras, gap extras, right
/// margin) in proportion to independent exponential draws.
inline IntervalUnion random_interval_union(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::for_item(seed, index);
  const int n = 1 + static_cast<int>(rng.next() % 4);
  std::vector<double> draws(2 * n + 1);
  double total = 0.0;
  for (double& d : draws) {
    d = rng.exponential();
    total += d;
  }
  const double slack = 10.0 - (0.2 * n + 0.1 * (n - 1));
  const double scale = slack / total;
  std::vector<double> e;
  double x = -5.0 + draws[0] * scale;
  for (int l = 0; l < n; ++l) {
    e.push_back(x);
    x += 0.2 + draws[1 + l] * scale;
    e.push_back(x);
    if (l + 1 < n) x += 0.1 + draws[1 + n + l] * scale;
  }
  return IntervalUnion::from_endpoints(std::move(e));
}

inline std::vector<IntervalUnion> make_corpus(const CorpusSpec& spec) {
  std::vector<IntervalUnion> out;
  out.reserve(spec.count);
  for (std::uint64_t i = 0; i < spec.count; ++i) out.push_back(random_interval_union(spec.seed, i));
  return out;
}

}  // namespace eqm
