#include "polyhahn/domain.hpp"

#include "polyhahn/combinatorics.hpp"
#include "polyhahn/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

namespace polyhahn {

DomainSpec check_admissible(int d, int N, const MultiIndex& ell) {
  if (d < 1) throw OutOfRange("dimension d must be >= 1");
  if (N < 1) throw OutOfRange("N must be >= 1");
  if (ell.dim() != static_cast<std::size_t>(d) + 1)
    throw OutOfRange("l must have length d+1 = " + std::to_string(d + 1) + ", got " +
                     std::to_string(ell.dim()));
  for (std::size_t i = 0; i < ell.dim(); ++i) {
    if (ell[i] < 1 || ell[i] > N)
      throw OutOfRange("l_" + std::to_string(i + 1) + " = " + std::to_string(ell[i]) +
                       " is outside [1, N=" + std::to_string(N) + "]");
  }
  DomainSpec spec(d, N, ell);
  for (std::size_t i = 0; i < ell.dim(); ++i) {
    for (std::size_t j = i + 1; j < ell.dim(); ++j) {
      const int s = ell[i] + ell[j];
      if (s < N) {
        const int a = static_cast<int>(i) + 1;
        const int b = static_cast<int>(j) + 1;
        throw Inadmissible(a, b,
                           "inadmissible pair (" + std::to_string(a) + "," + std::to_string(b) +
                               "): l_" + std::to_string(a) + " + l_" + std::to_string(b) + " = " +
                               std::to_string(s) + " < N = " + std::to_string(N));
      }
      if (s == N) spec.degenerate_.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  }
  return spec;
}

bool is_admissible(int d, int N, const MultiIndex& ell) {
  if (d < 1 || N < 1 || ell.dim() != static_cast<std::size_t>(d) + 1) return false;
  for (std::size_t i = 0; i < ell.dim(); ++i) {
    if (ell[i] < 1 || ell[i] > N) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (ell[i] + ell[j] < N) return false;
  }
  return true;
}

DomainSpec simplex_spec(int d, int N) {
  return check_admissible(d, N, MultiIndex(std::vector<int>(static_cast<std::size_t>(d) + 1, N)));
}

std::vector<DomainSpec> admissible_specs(int d, int N) {
  if (d < 1 || N < 1) throw OutOfRange("need d >= 1 and N >= 1");
  std::vector<DomainSpec> out;
  std::vector<int> ell(static_cast<std::size_t>(d) + 1, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == ell.size()) {
      out.push_back(check_admissible(d, N, MultiIndex(ell)));
      return;
    }
    for (int v = 1; v <= N; ++v) {
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) ok = ell[i] + v >= N;
      if (!ok) continue;
      ell[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<DomainSpec> sample_admissible_specs(int d, int N_min, int N_max, std::size_t count,
                                                std::uint64_t seed) {
  if (d < 1 || N_min < 1 || N_max < N_min) throw OutOfRange("need d >= 1 and 1 <= N_min <= N_max");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, N_max);
  std::vector<DomainSpec> out;
  std::vector<int> ell(static_cast<std::size_t>(d) + 1);
  const std::size_t max_attempts = 1000000 + 10000 * count;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt == max_attempts) throw OutOfRange("rejection sampling found too few admissible specs");
    const int N = pick(rng);
    for (auto& v : ell) v = pick(rng);
    if (N < N_min || !is_admissible(d, N, MultiIndex(ell))) continue;
    out.push_back(check_admissible(d, N, MultiIndex(ell)));
  }
  return out;
}

bool in_V(const DomainSpec& spec, const MultiIndex& x) {
  if (x.dim() != static_cast<std::size_t>(spec.d())) return false;
  for (int i = 0; i < spec.d(); ++i)
    if (x[i] < 0 || x[i] > spec.ell()[i]) return false;
  const long t = x.total();
  return t <= spec.N() && t >= spec.N() - spec.ell(spec.d() + 1);
}

namespace {

bool in_H_raw(int d, int N, const MultiIndex& ell, const MultiIndex& nu) {
  if (nu.dim() != static_cast<std::size_t>(d)) return false;
  const long total = nu.total();
  if (total > N || total > ell.total() - N) return false;
  for (int j = 1; j <= d; ++j) {
    if (nu[j - 1] > ell[j - 1]) return false;
    if (nu[j - 1] + 2 * nu.suffix(j + 1) > ell.suffix(j + 1)) return false;
  }
  return true;
}

// Calls visit(point) for every x in the box prod [0, bound_i] with |x| <= cap.
void scan_box(const std::vector<int>& bound, long cap,
              const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t d = bound.size();
  std::vector<int> cur(d, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long used) {
    if (pos == d) {
      visit(cur);
      return;
    }
    const long hi = std::min<long>(bound[pos], cap - used);
    for (long v = 0; v <= hi; ++v) {
      cur[pos] = static_cast<int>(v);
      rec(pos + 1, used + v);
    }
    cur[pos] = 0;
  };
  rec(0, 0);
}

}  // namespace

bool in_H(const DomainSpec& spec, const MultiIndex& nu) {
  return in_H_raw(spec.d(), spec.N(), spec.ell(), nu);
}

LatticeDomain::LatticeDomain(DomainSpec spec) : spec_(std::move(spec)) {
  std::vector<int> bound(spec_.ell().vec().begin(), spec_.ell().vec().end() - 1);
  const long lo = spec_.N() - spec_.ell(spec_.d() + 1);
  scan_box(bound, spec_.N(), [&](const std::vector<int>& x) {
    long t = 0;
    for (int v : x) t += v;
    if (t >= lo) points_.emplace_back(x);
  });
  std::sort(points_.begin(), points_.end(), GradedLexLess{});
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::optional<std::size_t> LatticeDomain::index_of(const MultiIndex& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IndexSet::IndexSet(DomainSpec spec) : spec_(std::move(spec)) {
  const int d = spec_.d();
  std::vector<int> bound(spec_.ell().vec().begin(), spec_.ell().vec().end() - 1);
  const long cap = std::min<long>(spec_.N(), spec_.ell_total() - spec_.N());
  scan_box(bound, cap, [&](const std::vector<int>& v) {
    MultiIndex nu(v);
    if (in_H_raw(d, spec_.N(), spec_.ell(), nu)) indices_.push_back(std::move(nu));
  });
  std::sort(indices_.begin(), indices_.end(), GradedLexLess{});
  index_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) index_.emplace(indices_[i], i);
}

std::optional<std::size_t> IndexSet::index_of(const MultiIndex& nu) const {
  auto it = index_.find(nu);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LatticeDomain enumerate_V(const DomainSpec& spec) { return LatticeDomain(spec); }

IndexSet enumerate_H(const DomainSpec& spec) { return IndexSet(spec); }

Integer count_V_formula(const DomainSpec& spec) {
  const long d = spec.d();
  const long N = spec.N();
  Integer count = binomial(N + d, d);
  for (int i = 1; i <= spec.d() + 1; ++i) count -= binomial(N - spec.ell(i) + d - 1, d);
  return count;
}

long count_H_raw(int d, int N, const MultiIndex& ell) {
  if (ell.dim() != static_cast<std::size_t>(d) + 1) throw OutOfRange("l must have length d+1");
  std::vector<int> bound(ell.vec().begin(), ell.vec().end() - 1);
  for (int& b : bound) b = std::max(b, 0);
  const long cap = std::min<long>(N, ell.total() - N);
  if (cap < 0) return 0;
  long count = 0;
  scan_box(bound, cap, [&](const std::vector<int>& v) {
    // suffix-sum inequalities, checked inline to avoid allocation
    long suffix = 0;
    for (int j = d; j >= 1; --j) {
      const long rhs = [&] {
        long s = 0;
        for (int i = j + 1; i <= d + 1; ++i) s += ell[i - 1];
        return s;
      }();
      if (v[j - 1] + 2 * suffix > rhs) return;
      suffix += v[j - 1];
    }
    ++count;
  });
  return count;
}

MultiIndex homogeneous(const DomainSpec& spec, const MultiIndex& x) {
  std::vector<int> h(x.vec());
  h.push_back(static_cast<int>(spec.N() - x.total()));
  return MultiIndex(std::move(h));
}

Rational weight_homogeneous(int N, const MultiIndex& ell, const MultiIndex& xh) {
  if (ell.dim() != xh.dim()) throw LengthMismatch("weight_homogeneous: length mismatch");
  Rational w = Rational(factorial(N)) / pochhammer(Rational(-ell.total()), N);
  for (std::size_t i = 0; i < ell.dim(); ++i)
    w *= pochhammer(Rational(-ell[i]), xh[i]) / Rational(factorial(xh[i]));
  return w;
}

Rational weight(const DomainSpec& spec, const MultiIndex& x) {
  if (!in_V(spec, x)) throw PointOutsideDomain("point " + x.str() + " is not in V");
  return weight_homogeneous(spec.N(), spec.ell(), homogeneous(spec, x));
}

bool ideal_generators_vanish(const DomainSpec& spec) {
  const LatticeDomain V(spec);
  const int d = spec.d();
  // exponents nu with |nu| = N + 1
  std::vector<MultiIndex> top;
  for (auto& nu : simplex_points(static_cast<std::size_t>(d), spec.N() + 1))
    if (nu.total() == spec.N() + 1) top.push_back(nu);
  for (const auto& x : V.points()) {
    for (int i = 0; i < d; ++i)
      if (sgn(pochhammer(Rational(-x[i]), spec.ell()[i] + 1)) != 0) return false;
    if (sgn(pochhammer(Rational(x.total() - spec.N()), spec.ell(d + 1) + 1)) != 0) return false;
    for (const auto& nu : top) {
      Rational prod = 1;
      for (int i = 0; i < d && sgn(prod) != 0; ++i) prod *= pochhammer(Rational(-x[i]), nu[i]);
      if (sgn(prod) != 0) return false;
    }
  }
  return true;
}

bool CountingReport::all_ok() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const CountingInstance& c) { return c.ok; });
}

namespace {

bool tail_admissible(int N, const MultiIndex& ell) {
  for (std::size_t i = 0; i < ell.dim(); ++i) {
    if (ell[i] < 0 || ell[i] > N) return false;
    for (std::size_t j = i + 1; j < ell.dim(); ++j)
      if (ell[i] + ell[j] < N) return false;
  }
  return true;
}

MultiIndex pad_with_N(int d, int N, const MultiIndex& tail) {
  std::vector<int> full(static_cast<std::size_t>(d) + 1 - tail.dim(), N);
  full.insert(full.end(), tail.vec().begin(), tail.vec().end());
  return MultiIndex(std::move(full));
}

}  // namespace

CountingReport verify_counting_lemmas(int d, int N, const MultiIndex& ell_tail) {
  if (d < 3) throw NeedsDimension("counting lemmas require d >= 3");
  if (ell_tail.dim() < 2 || ell_tail.dim() > static_cast<std::size_t>(d) + 1)
    throw OutOfRange("l tail must have length between 2 and d+1");
  CountingReport report;
  report.d = d;
  report.N = N;
  const MultiIndex ell = pad_with_N(d, N, ell_tail);
  if (!tail_admissible(N, ell)) throw OutOfRange("l violates 0 <= l_i <= N, l_i + l_j >= N");

  if (ell_tail.dim() == 2) {
    CountingInstance inst;
    inst.kind = CountingInstance::Kind::BaseCase;
    inst.ell = ell;
    inst.lhs = count_H_raw(d, N, ell);
    inst.rhs = binomial(N + d, d) - binomial(N - ell[d - 1] + d - 1, d) -
               binomial(N - ell[d] + d - 1, d);
    inst.ok = inst.rhs == inst.lhs;
    report.instances.push_back(std::move(inst));
    return report;
  }
  const int k = d + 2 - static_cast<int>(ell_tail.dim());
  const int lk = ell[k - 1];
  if (lk >= N) return report;  // vacuous
  MultiIndex stepped = ell;
  stepped[k - 1] = lk + 1;
  CountingInstance inst;
  inst.kind = CountingInstance::Kind::Difference;
  inst.k = k;
  inst.ell = ell;
  inst.lhs = count_H_raw(d, N, stepped) - count_H_raw(d, N, ell);
  inst.rhs = binomial(N - lk + d - 2, d - 1);
  inst.ok = inst.rhs == inst.lhs;
  report.instances.push_back(std::move(inst));
  return report;
}

CountingReport verify_counting_lemmas_exhaustive(int d, int N) {
  if (d < 3) throw NeedsDimension("counting lemmas require d >= 3");
  CountingReport report;
  report.d = d;
  report.N = N;
  for (std::size_t len = static_cast<std::size_t>(d) + 1; len >= 2; --len) {
    // scan all tails in [0, N]^len
    std::vector<int> cur(len, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == len) {
        MultiIndex tail(cur);
        if (len > 2 && tail[0] >= N) return;
        if (!tail_admissible(N, pad_with_N(d, N, tail))) return;
        auto r = verify_counting_lemmas(d, N, tail);
        for (auto& inst : r.instances) report.instances.push_back(std::move(inst));
        return;
      }
      for (int v = 0; v <= N; ++v) {
        cur[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return report;
}

}  // namespace polyhahn
