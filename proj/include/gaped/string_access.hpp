#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaped {

using Symbol = std::uint32_t;
using Str = std::vector<Symbol>;

Str from_ascii(std::string_view s);
std::string to_ascii(const Str& s);

struct QueryBudget {
  std::uint64_t limit = 0;
  std::uint64_t spent = 0;
};

// Thrown when a charge would push an active budget past its limit.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const QueryBudget* owner)
      : std::runtime_error("operation budget exhausted"), owner_(owner) {}
  const QueryBudget* owner() const { return owner_; }

 private:
  const QueryBudget* owner_;
};

// Shared tally for one solver run. Reads cost one query and one unit; other
// work is charged in units only. Every charge counts against all budgets on
// the stack, innermost first.
class QueryCounter {
 public:
  void charge_read() {
    ++queries_;
    charge(1);
  }
  void charge(std::uint64_t units);

  std::uint64_t queries() const { return queries_; }
  std::uint64_t units() const { return units_; }

  void push_budget(QueryBudget* b) { budgets_.push_back(b); }
  void pop_budget() { budgets_.pop_back(); }

 private:
  std::uint64_t queries_ = 0;
  std::uint64_t units_ = 0;
  std::vector<QueryBudget*> budgets_;
};

class BudgetScope {
 public:
  BudgetScope(QueryCounter& c, QueryBudget& b) : c_(c) { c_.push_budget(&b); }
  ~BudgetScope() { c_.pop_budget(); }
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  QueryCounter& c_;
};

class Fragment;

class QueriedString {
 public:
  QueriedString(Str data, std::shared_ptr<QueryCounter> counter, char label = 'X');

  // Uncharged oracle mode: reads are free and never touch a tally.
  static QueriedString oracle(Str data, char label = 'X');

  std::size_t size() const { return len_; }
  char label() const { return label_; }
  bool charged() const { return counter_ != nullptr; }
  QueryCounter* counter() const { return counter_.get(); }

  Symbol read(std::size_t i) const;
  Fragment whole() const;
  Fragment slice(long long i, long long j) const;
  // Clamped view [i, j) sharing storage and tally; offsets restart at 0.
  QueriedString view(long long i, long long j) const;

  // Direct access for oracles and generators; never used by charged routines.
  std::span<const Symbol> raw() const { return std::span<const Symbol>(*data_).subspan(off_, len_); }

 private:
  std::shared_ptr<const Str> data_;
  std::size_t off_ = 0;
  std::size_t len_ = 0;
  std::shared_ptr<QueryCounter> counter_;
  char label_;
};

// Half-open view [start, end) of a queried string.
class Fragment {
 public:
  Fragment(const QueriedString& src, std::size_t start, std::size_t end)
      : src_(&src), start_(start), end_(end) {}

  std::size_t size() const { return end_ - start_; }
  bool empty() const { return end_ == start_; }
  std::size_t start() const { return start_; }
  std::size_t end() const { return end_; }
  const QueriedString& source() const { return *src_; }

  Symbol read(std::size_t i) const;
  Symbol rotation_read(long long shift, std::size_t i) const;
  // Clamped sub-fragment in local coordinates.
  Fragment slice(long long i, long long j) const;
  // Reads every character (charged).
  Str materialize() const;

 private:
  const QueriedString* src_;
  std::size_t start_;
  std::size_t end_;
};

}  // namespace gaped
