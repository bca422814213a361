#pragma once

#include "gcond/rational.hpp"

#include <utility>
#include <vector>

namespace gcond {

// Partition of {0..n-1} into unordered pairs, each stored (i, j) with i < j
// and the list sorted by first element.
struct OneFactor {
  std::vector<std::pair<int, int>> pairs;

  auto operator<=>(const OneFactor&) const = default;
};

// All (n-1)!! one-factors of {0..n-1}, lexicographically ordered.
// n must be even and between 2 and 12.
std::vector<OneFactor> enumerate_one_factors(int n);

// Number of interleaved pair-of-pairs (a,b),(c,d) with a < c < b < d; the
// chord-crossing count when 0..n-1 sit on a circle.
int crossing_number(const OneFactor& f);

// Strictly upper triangular exact array: entries defined for i < j only.
class TriangularArray {
 public:
  explicit TriangularArray(int n);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);

 private:
  size_t offset(int i, int j) const;
  int n_;
  std::vector<Rational> entries_;
};

class SquareMatrix {
 public:
  explicit SquareMatrix(int n);
  static SquareMatrix identity(int n);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);

 private:
  int n_;
  std::vector<Rational> entries_;
};

// Pfaffian: sum over one-factors of (-1)^chi(F) times the entry product.
// Computed by the signed sum for n <= 12 and cross-checked against the
// first-row recursive expansion; larger n run the expansion alone.
// Odd dimension is an error, not zero.
Rational pfaffian(const TriangularArray& t);

// Determinant via the signed permutation sum for n <= 6, cross-checked
// against fraction-free (Bareiss) elimination; elimination alone above.
Rational determinant(const SquareMatrix& m);

// For a 2m-dimensional array whose entries vanish unless they straddle the
// two index halves, the Pfaffian equals the determinant of the m x m block
// read with reversed column order. Returns (pfaffian, determinant) and
// raises IntegrityError if the two disagree.
std::pair<Rational, Rational> pfaffian_collapses_to_determinant(const TriangularArray& t);

}  // namespace gcond
