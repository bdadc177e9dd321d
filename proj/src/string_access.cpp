#include "gaped/string_access.hpp"

#include <algorithm>
#include <string>

namespace gaped {

Str from_ascii(std::string_view s) {
  Str out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(c);
  return out;
}

std::string to_ascii(const Str& s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol c : s) out.push_back(static_cast<char>(c));
  return out;
}

void QueryCounter::charge(std::uint64_t units) {
  units_ += units;
  for (auto it = budgets_.rbegin(); it != budgets_.rend(); ++it) {
    QueryBudget* b = *it;
    b->spent += units;
    if (b->spent > b->limit) throw BudgetExhausted(b);
  }
}

QueriedString::QueriedString(Str data, std::shared_ptr<QueryCounter> counter, char label)
    : data_(std::make_shared<const Str>(std::move(data))),
      counter_(std::move(counter)),
      label_(label) {
  len_ = data_->size();
  if (!counter_) throw std::invalid_argument("charged string needs a counter");
}

QueriedString QueriedString::oracle(Str data, char label) {
  QueriedString q(std::move(data), std::make_shared<QueryCounter>(), label);
  q.counter_.reset();
  return q;
}

Symbol QueriedString::read(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("read past end of string");
  if (counter_) counter_->charge_read();
  return (*data_)[off_ + i];
}

QueriedString QueriedString::view(long long i, long long j) const {
  const long long n = static_cast<long long>(size());
  const long long a = std::clamp(i, 0LL, n);
  const long long b = std::clamp(j, a, n);
  QueriedString out(*this);
  out.off_ = off_ + static_cast<std::size_t>(a);
  out.len_ = static_cast<std::size_t>(b - a);
  return out;
}

Fragment QueriedString::whole() const { return Fragment(*this, 0, size()); }

Fragment QueriedString::slice(long long i, long long j) const {
  const long long n = static_cast<long long>(size());
  const long long a = std::clamp(i, 0LL, n);
  const long long b = std::clamp(j, a, n);
  return Fragment(*this, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

Symbol Fragment::read(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("fragment offset out of range");
  return src_->read(start_ + i);
}

Symbol Fragment::rotation_read(long long shift, std::size_t i) const {
  if (empty()) throw std::out_of_range("rotation of an empty fragment");
  const long long m = static_cast<long long>(size());
  long long idx = (static_cast<long long>(i) + shift) % m;
  if (idx < 0) idx += m;
  return read(static_cast<std::size_t>(idx));
}

Fragment Fragment::slice(long long i, long long j) const {
  const long long m = static_cast<long long>(size());
  const long long a = std::clamp(i, 0LL, m);
  const long long b = std::clamp(j, a, m);
  return Fragment(*src_, start_ + a, start_ + b);
}

Str Fragment::materialize() const {
  Str out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = read(i);
  return out;
}

}  // namespace gaped
