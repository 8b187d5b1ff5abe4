#ifndef ARITH_EXACTLIN_HPP
#define ARITH_EXACTLIN_HPP

#include <stdexcept>
#include <vector>

#include "arith/intpoly.hpp"
#include "arith/zset.hpp"

namespace arith {

/// Dense exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

using RatVector = std::vector<Rat>;

struct BadModulus : std::invalid_argument {
  BadModulus() : std::invalid_argument("set elements collide mod n") {}
};
struct ZeroVector : std::invalid_argument {
  ZeroVector() : std::invalid_argument("zero vector") {}
};

/// Circulant of the system A(K) over Z_n: row g has a 1 at each column
/// (s_i + g) mod n. Throws BadModulus when elements collide mod n; use
/// circulant_counts when collisions should accumulate instead.
RatMatrix circulant_from_set(const ZSet& k, long n);

/// Same layout, but entries count multiplicities of (s_i + g) mod n.
RatMatrix circulant_counts(const ZSet& k, long n);

/// Exact basis of the right kernel. Fraction-free (Bareiss) elimination on a
/// common-denominator integer copy; pivot = first row with a nonzero entry
/// in the current column. Basis size = cols - rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Scale to a primitive integer vector, first nonzero entry positive.
std::vector<Int> clear_denominators(const RatVector& v);

}  // namespace arith

#endif  // ARITH_EXACTLIN_HPP
