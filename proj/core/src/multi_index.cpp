#include "polyhahn/multi_index.hpp"

#include "polyhahn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polyhahn {

MultiIndex::MultiIndex(std::initializer_list<int> values) : entries_(values) {
  if (std::any_of(entries_.begin(), entries_.end(), [](int v) { return v < 0; }))
    throw OutOfRange("MultiIndex entries must be non-negative");
}

MultiIndex::MultiIndex(std::vector<int> values) : entries_(std::move(values)) {
  if (std::any_of(entries_.begin(), entries_.end(), [](int v) { return v < 0; }))
    throw OutOfRange("MultiIndex entries must be non-negative");
}

long MultiIndex::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

long MultiIndex::prefix(std::size_t j) const {
  if (j > entries_.size()) throw OutOfRange("prefix index out of range");
  return std::accumulate(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(j), 0L);
}

long MultiIndex::suffix(std::size_t j) const {
  if (j < 1 || j > entries_.size() + 1) throw OutOfRange("suffix index out of range");
  return std::accumulate(entries_.begin() + static_cast<std::ptrdiff_t>(j - 1), entries_.end(), 0L);
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const long ta = a.total();
  const long tb = b.total();
  if (ta != tb) return ta < tb;
  return a.vec() < b.vec();
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : m.entries()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill_exact_total(std::size_t dim, int total, std::vector<int>& cur, std::size_t pos,
                      std::vector<MultiIndex>& out) {
  if (pos + 1 == dim) {
    cur[pos] = total;
    out.emplace_back(cur);
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur[pos] = v;
    fill_exact_total(dim, total - v, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<MultiIndex> simplex_points(std::size_t dim, int max_total) {
  std::vector<MultiIndex> out;
  if (dim == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(dim, 0);
  for (int t = 0; t <= max_total; ++t) {
    std::vector<MultiIndex> layer;
    fill_exact_total(dim, t, cur, 0, layer);
    std::sort(layer.begin(), layer.end(), GradedLexLess{});
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace polyhahn
