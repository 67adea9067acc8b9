#pragma once

#include <vector>

#include "jmwg/partition.hpp"
#include "jmwg/scalar.hpp"

namespace jmwg {

/// e_r of the alphabet, via the product (1 + x_1 t)...(1 + x_k t).
Integer e_eval(int r, const ContentAlphabet& alphabet);

/// h_r of the alphabet, via h_r(x_1..x_k) = h_r(x_1..x_{k-1}) + x_k h_{r-1}(x_1..x_k).
Integer h_eval(int r, const ContentAlphabet& alphabet);

/// h_0..h_R as the truncated product of geometric series 1/(1 - x t).
std::vector<Integer> h_series(const ContentAlphabet& alphabet, int order);

/// All of e_0..e_k (k = |alphabet|).
std::vector<Integer> e_series(const ContentAlphabet& alphabet);

/// Evaluation context for one alphabet; caches e and h values.
/// Not thread-safe; keep one per evaluating thread.
class SymEval {
 public:
  explicit SymEval(ContentAlphabet alphabet);

  const ContentAlphabet& alphabet() const { return alphabet_; }
  const Integer& e(int r);
  const Integer& h(int r);

  /// sum_{k=0..r} (-1)^k e_k h_{r-k} == 0, the coefficient of t^r in E(t)H(-t) - 1.
  bool recurrence_holds(int r);

 private:
  ContentAlphabet alphabet_;
  std::vector<Integer> e_;
  std::vector<Integer> h_;
  Integer zero_ = 0;
};

}  // namespace jmwg
