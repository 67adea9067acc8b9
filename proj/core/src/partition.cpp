#include "jmwg/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace jmwg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value < 1) {
    throw std::invalid_argument("malformed partition token '" + std::string(token) + "' in '" +
                                std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text == "-" || text.empty()) {
    return Partition();
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                              : comma - start));
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(token, text));
    } else {
      const int part = parse_positive(trim(token.substr(0, caret)), text);
      const int times = parse_positive(trim(token.substr(caret + 1)), text);
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_parts(std::move(parts));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

struct PartitionIndex {
  std::vector<Partition> list;
  std::map<Partition, std::size_t> position;
};

const PartitionIndex& index_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const PartitionIndex>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto entry = std::make_unique<PartitionIndex>();
    entry->list = enumerate_partitions(n);
    for (std::size_t i = 0; i < entry->list.size(); ++i) entry->position.emplace(entry->list[i], i);
    it = cache.emplace(n, std::move(entry)).first;
  }
  return *it->second;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) {
    throw std::invalid_argument("enumerate_partitions: n must be non-negative");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

const std::vector<Partition>& partitions_of(int n) { return index_for(n).list; }

std::size_t partition_index(const Partition& mu) {
  const auto& idx = index_for(mu.weight());
  return idx.position.at(mu);
}

int length(const Partition& mu) { return mu.length(); }

ContentAlphabet::ContentAlphabet(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

long long ContentAlphabet::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

ContentAlphabet contents(const Partition& lambda) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(lambda.weight()));
  for (int row = 0; row < lambda.length(); ++row) {
    for (int col = 0; col < lambda[static_cast<std::size_t>(row)]; ++col) {
      values.push_back(col - row);
    }
  }
  return ContentAlphabet(std::move(values));
}

Integer hook_product(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer product = 1;
  for (int row = 0; row < lambda.length(); ++row) {
    const int row_len = lambda[static_cast<std::size_t>(row)];
    for (int col = 0; col < row_len; ++col) {
      const int arm = row_len - col - 1;
      const int leg = conj[static_cast<std::size_t>(col)] - row - 1;
      product *= arm + leg + 1;
    }
  }
  return product;
}

Integer dimension(const Partition& lambda) {
  return factorial(lambda.weight()) / hook_product(lambda);
}

Integer catalan(int N) {
  if (N < 0) {
    throw std::invalid_argument("catalan: N must be non-negative");
  }
  return binomial(2 * N, N) / (N + 1);
}

Integer moebius(const Partition& mu) {
  Integer value = sign_power(mu.weight() - mu.length());
  for (int part : mu.parts()) value *= catalan(part - 1);
  return value;
}

}  // namespace jmwg
