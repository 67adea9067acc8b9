#include "jmwg/symfun.hpp"

#include <stdexcept>

namespace jmwg {

namespace {
void require_non_negative(int r, const char* what) {
  if (r < 0) throw std::invalid_argument(std::string(what) + ": degree must be non-negative");
}
}  // namespace

std::vector<Integer> e_series(const ContentAlphabet& alphabet) {
  std::vector<Integer> e(alphabet.size() + 1, 0);
  e[0] = 1;
  std::size_t used = 0;
  for (int x : alphabet.values()) {
    ++used;
    for (std::size_t r = used; r >= 1; --r) e[r] += x * e[r - 1];
  }
  return e;
}

Integer e_eval(int r, const ContentAlphabet& alphabet) {
  require_non_negative(r, "e_eval");
  if (static_cast<std::size_t>(r) > alphabet.size()) return 0;
  return e_series(alphabet)[static_cast<std::size_t>(r)];
}

Integer h_eval(int r, const ContentAlphabet& alphabet) {
  require_non_negative(r, "h_eval");
  const auto ur = static_cast<std::size_t>(r);
  // prev[s] = h_s over the letters seen so far.
  std::vector<Integer> prev(ur + 1, 0);
  prev[0] = 1;
  for (int x : alphabet.values()) {
    std::vector<Integer> next(ur + 1);
    next[0] = 1;
    for (std::size_t s = 1; s <= ur; ++s) next[s] = prev[s] + x * next[s - 1];
    prev = std::move(next);
  }
  return prev[ur];
}

std::vector<Integer> h_series(const ContentAlphabet& alphabet, int order) {
  require_non_negative(order, "h_series");
  const auto len = static_cast<std::size_t>(order) + 1;
  std::vector<Integer> series(len, 0);
  series[0] = 1;
  std::vector<Integer> geometric(len);
  for (int x : alphabet.values()) {
    geometric[0] = 1;
    for (std::size_t k = 1; k < len; ++k) geometric[k] = geometric[k - 1] * x;
    std::vector<Integer> product(len, 0);
    for (std::size_t a = 0; a < len; ++a) {
      if (series[a] == 0) continue;
      for (std::size_t b = 0; a + b < len; ++b) product[a + b] += series[a] * geometric[b];
    }
    series = std::move(product);
  }
  return series;
}

SymEval::SymEval(ContentAlphabet alphabet)
    : alphabet_(std::move(alphabet)), e_(e_series(alphabet_)), h_{Integer(1)} {}

const Integer& SymEval::e(int r) {
  require_non_negative(r, "SymEval::e");
  if (static_cast<std::size_t>(r) >= e_.size()) return zero_;
  return e_[static_cast<std::size_t>(r)];
}

const Integer& SymEval::h(int r) {
  require_non_negative(r, "SymEval::h");
  if (static_cast<std::size_t>(r) >= h_.size()) h_ = h_series(alphabet_, std::max(r, 2 * static_cast<int>(h_.size())));
  return h_[static_cast<std::size_t>(r)];
}

bool SymEval::recurrence_holds(int r) {
  if (r < 1) return true;
  Integer sum = 0;
  for (int k = 0; k <= r; ++k) sum += sign_power(k) * e(k) * h(r - k);
  return sum == 0;
}

}  // namespace jmwg
