#include "polyhahn/domain.hpp"

#include "polyhahn/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace polyhahn {

namespace {

void require_d2(const DomainSpec& spec) {
  if (spec.d() != 2) throw WrongDimension("height functions are defined for d = 2");
}

}  // namespace

std::vector<int> heights_V(const DomainSpec& spec) {
  require_d2(spec);
  std::vector<int> h(static_cast<std::size_t>(spec.ell(1)) + 1, 0);
  const LatticeDomain v(spec);
  for (const auto& x : v.points()) ++h[static_cast<std::size_t>(x[0])];
  return h;
}

std::vector<int> heights_H(const DomainSpec& spec) {
  require_d2(spec);
  const int l1 = spec.ell(1), l2 = spec.ell(2), l3 = spec.ell(3), N = spec.N();
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(l1) + 1);
  for (int n1 = 0; n1 <= l1; ++n1) {
    const int m = std::min({l2, l3, (l2 + l3 - n1) / 2, l1 + l2 + l3 - N - n1, N - n1});
    h.push_back(m + 1);
  }
  return h;
}

std::vector<int> heights_H_counted(const DomainSpec& spec) {
  require_d2(spec);
  std::vector<int> h(static_cast<std::size_t>(spec.ell(1)) + 1, 0);
  const IndexSet hs(spec);
  for (const auto& nu : hs.indices()) ++h[static_cast<std::size_t>(nu[0])];
  return h;
}

bool height_partition_holds(const DomainSpec& spec, const std::vector<int>& heights) {
  require_d2(spec);
  const int l1 = spec.ell(1), l2 = spec.ell(2), l3 = spec.ell(3), N = spec.N();
  const int lo = std::min(l2, l3);
  const int hi = std::max(l2, l3);
  std::vector<int> expected;
  // S1: the flat top
  for (int i = 0; i < hi - lo + 1; ++i) expected.push_back(lo + 1);
  // S2: each value twice, descending from the top
  const int half = std::min(N - hi, l1 + lo - N);
  for (int i = 1; i <= half; ++i) {
    expected.push_back(lo + 1 - i);
    expected.push_back(lo + 1 - i);
  }
  // S3: each value once
  const int s3 = std::abs(2 * N - l1 - l2 - l3);
  const int top3 = std::max(l2 + l3 - N, N - l1);
  for (int i = 0; i < s3; ++i) expected.push_back(top3 - i);

  if (expected.size() != heights.size()) return false;
  std::vector<int> got(heights);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

ShuffleReport verify_shuffle(const DomainSpec& spec) {
  require_d2(spec);
  ShuffleReport r;
  r.heights_v = heights_V(spec);
  r.heights_h = heights_H(spec);
  r.h_closed_form_matches = r.heights_h == heights_H_counted(spec);
  r.partition_v = height_partition_holds(spec, r.heights_v);
  r.partition_h = height_partition_holds(spec, r.heights_h);

  std::vector<bool> used(r.heights_v.size(), false);
  r.tau.assign(r.heights_h.size(), -1);
  bool matched = r.heights_v.size() == r.heights_h.size();
  for (std::size_t i = 0; matched && i < r.heights_h.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < r.heights_v.size(); ++j) {
      if (!used[j] && r.heights_v[j] == r.heights_h[i]) {
        used[j] = true;
        r.tau[i] = static_cast<int>(j);
        found = true;
        break;
      }
    }
    matched = found;
  }
  r.holds = matched;
  if (!matched) r.tau.clear();
  return r;
}

ProjectionShuffleReport projection_shuffle_d3(const DomainSpec& spec) {
  if (spec.d() != 3) throw WrongDimension("projection shuffle experiment is defined for d = 3");
  std::map<std::pair<int, int>, int> cv, ch;
  const LatticeDomain v(spec);
  const IndexSet hs(spec);
  for (const auto& x : v.points()) ++cv[{x[0], x[1]}];
  for (const auto& nu : hs.indices()) ++ch[{nu[0], nu[1]}];
  ProjectionShuffleReport r;
  for (const auto& [k, v] : cv) r.heights_v.push_back(v);
  for (const auto& [k, v] : ch) r.heights_h.push_back(v);
  auto a = r.heights_v, b = r.heights_h;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  r.multisets_equal = a == b;
  return r;
}

}  // namespace polyhahn
