#include "polyhahn/sparse_matrix.hpp"

#include "polyhahn/errors.hpp"

#include <algorithm>

namespace polyhahn {

namespace {

SparseMatrix::Row merge_rows(const SparseMatrix::Row& a, const SparseMatrix::Row& b, int sign) {
  SparseMatrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational v = a[i].second;
      if (sign > 0)
        v += b[j].second;
      else
        v -= b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Rational>& d) {
  SparseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) m.rows_[i].emplace_back(i, d[i]);
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  const Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
  if (j >= rows_.size()) throw OutOfRange("column out of range");
  if (sgn(v) == 0) return;
  Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (sgn(it->second) == 0) r.erase(it);
  } else {
    r.insert(it, Entry(j, v));
  }
}

void SparseMatrix::set_row(std::size_t i, Row entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row out;
  for (auto& e : entries) {
    if (e.first >= rows_.size()) throw OutOfRange("column out of range");
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const Entry& e) { return sgn(e.second) == 0; });
  rows_.at(i) = std::move(out);
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> SparseMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].empty()) return std::make_pair(i, rows_[i].front().first);
  return std::nullopt;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
  return t;  // rows come out sorted because i increases
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != rows_.size()) throw LengthMismatch("vector length does not match matrix");
  std::vector<Rational> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational s = 0;
    for (const auto& [j, a] : rows_[i]) s += a * v[j];
    out[i] = std::move(s);
  }
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (o.size() != size()) throw LengthMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = merge_rows(rows_[i], o.rows_[i], 1);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  if (o.size() != size()) throw LengthMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = merge_rows(rows_[i], o.rows_[i], -1);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.second *= c;
  return *this;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix r(*this);
  for (auto& row : r.rows_)
    for (auto& e : row) e.second = -e.second;
  return r;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.size() != b.size()) throw LengthMismatch("matrix sizes differ");
  const std::size_t n = a.size();
  SparseMatrix out(n);
  // dense accumulator per row
  std::vector<Rational> acc(n);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    touched.clear();
    for (const auto& [k, av] : a.rows_[i]) {
      for (const auto& [j, bv] : b.rows_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = av * bv;
        } else {
          acc[j] += av * bv;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseMatrix::Row row;
    row.reserve(touched.size());
    for (std::size_t j : touched) {
      if (sgn(acc[j]) != 0) row.emplace_back(j, acc[j]);
      used[j] = 0;
    }
    out.rows_[i] = std::move(row);
  }
  return out;
}

}  // namespace polyhahn
