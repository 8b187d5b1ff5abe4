#ifndef ARITH_ZSET_HPP
#define ARITH_ZSET_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace arith {

/// Normalized finite subset of Z: sorted, distinct, minimum translated to 0.
/// generates is true iff the nonzero elements are coprime (the standing
/// hypothesis for the arithmetic decision operations).
struct ZSet {
  std::vector<long> elements;
  bool generates = false;

  std::size_t size() const { return elements.size(); }
  long max() const { return elements.empty() ? 0 : elements.back(); }
};

struct DuplicateElements : std::invalid_argument {
  DuplicateElements() : std::invalid_argument("duplicate elements in set") {}
};

ZSet normalize_set(std::vector<long> raw);

}  // namespace arith

#endif  // ARITH_ZSET_HPP
