#include "gcond/algebra.hpp"

#include "gcond/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gcond {

namespace {
constexpr int kFactorSumCap = 12;   // 10395 one-factors at n = 12
}

std::vector<OneFactor> enumerate_one_factors(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("one-factors need an even n >= 2");
  if (n > kFactorSumCap)
    throw ResourceLimitError("one-factor enumeration capped at n = " +
                             std::to_string(kFactorSumCap));
  std::vector<OneFactor> out;
  std::vector<char> used(n, 0);
  OneFactor cur;
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      out.push_back(cur);
      return;
    }
    used[i] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      cur.pairs.emplace_back(i, j);
      rec();
      cur.pairs.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
  return out;
}

int crossing_number(const OneFactor& f) {
  int chi = 0;
  for (size_t x = 0; x < f.pairs.size(); ++x)
    for (size_t y = 0; y < f.pairs.size(); ++y) {
      if (x == y) continue;
      auto [a, b] = f.pairs[x];
      auto [c, d] = f.pairs[y];
      if (a < c && c < b && b < d) ++chi;
    }
  return chi;
}

TriangularArray::TriangularArray(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  entries_.resize(static_cast<size_t>(n) * (n > 0 ? n - 1 : 0) / 2, Rational(0));
}

size_t TriangularArray::offset(int i, int j) const {
  if (i < 0 || j >= n_ || i >= j)
    throw std::invalid_argument("triangular array index must satisfy 0 <= i < j < n");
  return static_cast<size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Rational& TriangularArray::at(int i, int j) const { return entries_[offset(i, j)]; }
void TriangularArray::set(int i, int j, Rational value) {
  entries_[offset(i, j)] = std::move(value);
}

SquareMatrix::SquareMatrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  entries_.resize(static_cast<size_t>(n) * n, Rational(0));
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

const Rational& SquareMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("matrix index out of range");
  return entries_[static_cast<size_t>(i) * n_ + j];
}

void SquareMatrix::set(int i, int j, Rational value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("matrix index out of range");
  entries_[static_cast<size_t>(i) * n_ + j] = std::move(value);
}

namespace {

// Expansion along the first live index: Pf = sum_j (-1)^(pos(j)-1)
// t(s0, sj) Pf(rest).
Rational pfaffian_expand(const TriangularArray& t, std::vector<int> live) {
  if (live.empty()) return Rational(1);
  Rational sum(0);
  int s0 = live[0];
  int sign = 1;
  for (size_t j = 1; j < live.size(); ++j) {
    const Rational& entry = t.at(s0, live[j]);
    if (entry != 0) {
      std::vector<int> rest;
      rest.reserve(live.size() - 2);
      for (size_t p = 1; p < live.size(); ++p)
        if (p != j) rest.push_back(live[p]);
      sum += sign * entry * pfaffian_expand(t, std::move(rest));
    }
    sign = -sign;
  }
  return sum;
}

Rational pfaffian_factor_sum(const TriangularArray& t) {
  Rational sum(0);
  for (const auto& f : enumerate_one_factors(t.dim())) {
    Rational term = (crossing_number(f) % 2 == 0) ? Rational(1) : Rational(-1);
    for (auto [i, j] : f.pairs) {
      term *= t.at(i, j);
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

Rational determinant_perm_sum(const SquareMatrix& m) {
  const int n = m.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = (inversions % 2 == 0) ? Rational(1) : Rational(-1);
    for (int i = 0; i < n && term != 0; ++i) term *= m.at(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Rational determinant_bareiss(const SquareMatrix& m) {
  const int n = m.dim();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Rational prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Rational pfaffian(const TriangularArray& t) {
  const int n = t.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("pfaffian of odd dimension is undefined");
  if (n == 0) return Rational(1);

  std::vector<int> live(n);
  std::iota(live.begin(), live.end(), 0);
  Rational by_expansion = pfaffian_expand(t, std::move(live));
  if (n <= kFactorSumCap) {
    Rational by_sum = pfaffian_factor_sum(t);
    if (by_sum != by_expansion)
      throw IntegrityError("pfaffian routes disagree: sum " + to_string(by_sum) +
                           " vs expansion " + to_string(by_expansion));
  }
  return by_expansion;
}

Rational determinant(const SquareMatrix& m) {
  Rational by_elim = determinant_bareiss(m);
  if (m.dim() <= 6) {
    Rational by_sum = determinant_perm_sum(m);
    if (by_sum != by_elim)
      throw IntegrityError("determinant routes disagree: sum " + to_string(by_sum) +
                           " vs elimination " + to_string(by_elim));
  }
  return by_elim;
}

std::pair<Rational, Rational> pfaffian_collapses_to_determinant(
    const TriangularArray& t) {
  const int dim = t.dim();
  if (dim % 2 != 0) throw std::invalid_argument("collapse needs even dimension");
  const int m = dim / 2;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if ((j < m || i >= m) && t.at(i, j) != 0)
        throw std::invalid_argument(
            "collapse precondition: entries within one index half must vanish");

  SquareMatrix block(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) block.set(i, j, t.at(i, dim - 1 - j));

  Rational pf = pfaffian(t);
  Rational det = determinant(block);
  if (pf != det)
    throw IntegrityError("pfaffian did not collapse to the block determinant");
  return {pf, det};
}

}  // namespace gcond
