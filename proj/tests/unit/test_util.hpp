#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>

#include "qtower/tlrep.hpp"

namespace qtower::testing {

using Op = std::function<Vec(const Vec&)>;

// Compares two linear operators on every basis vector.
inline ::testing::AssertionResult same_operator(const TLModule& m, const Op& a, const Op& b) {
  for (int j = 0; j < m.dim(); ++j) {
    Vec x = m.unit(j);
    Vec ya = a(x);
    Vec yb = b(x);
    for (int i = 0; i < m.dim(); ++i)
      if (ya[i] != yb[i])
        return ::testing::AssertionFailure() << "column " << m.basis()[j].key() << " row " << m.basis()[i].key()
                                             << ": " << ya[i].str() << " vs " << yb[i].str();
  }
  return ::testing::AssertionSuccess();
}

inline Op compose(Op a, Op b) {
  return [a, b](const Vec& x) { return a(b(x)); };
}

inline Vec scaled(const Vec& x, const Scalar& c) {
  Vec y = x;
  for (auto& v : y) v *= c;
  return y;
}

inline ::testing::AssertionResult vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return ::testing::AssertionFailure() << "size mismatch";
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return ::testing::AssertionFailure() << "entry " << i << ": " << a[i].str() << " vs " << b[i].str();
  return ::testing::AssertionSuccess();
}

inline Vec random_int_vec(int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec x(dim);
  for (auto& c : x) c = Scalar(d(rng));
  return x;
}

}  // namespace qtower::testing
