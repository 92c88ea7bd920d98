#ifndef PTMC_SRC_DANCING_LINKS_HPP
#define PTMC_SRC_DANCING_LINKS_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ptmc/cover_search.hpp"

namespace ptmc::detail {

using Clock = std::chrono::steady_clock;

/// Stop conditions polled during a search.
struct SearchControl {
  std::optional<Clock::time_point> deadline;
  /// Abort once *best drops below `subtree` (a lower subtree already won).
  const std::atomic<std::size_t> *best = nullptr;
  std::size_t subtree = 0;
  std::uint64_t nodes = 0;
};

enum class SearchStop { exhausted, halted, timeout, aborted };

// Knuth's Algorithm X over circular doubly linked lists, index based.
// Columns are universe cells (header i == cell i), rows are tiles.
class DancingLinks {
public:
  explicit DancingLinks(const ExactCoverInstance &inst);

  /// Covers every column of the row; false if one of them is already gone.
  bool select_row(std::size_t row);

  /// Column with fewest remaining rows, least index on ties; -1 when all
  /// columns are covered.
  int choose_column() const;
  std::size_t column_size(int c) const { return size_[static_cast<std::size_t>(c)]; }
  std::vector<std::size_t> rows_in_column(int c) const;

  const std::vector<std::size_t> &chosen() const { return chosen_; }

  /// Depth-first search from the current state. `visit(rows)` receives each
  /// cover (rows in selection order) and returns false to halt.
  template <typename Visit> SearchStop search(Visit &visit, SearchControl &ctl);

private:
  void cover(std::size_t c);
  void uncover(std::size_t c);
  bool poll(SearchControl &ctl) const;

  std::size_t root_ = 0;
  std::vector<std::size_t> left_, right_, up_, down_, col_, row_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> row_head_;
  std::vector<bool> column_live_;
  std::vector<std::size_t> chosen_;
};

template <typename Visit> SearchStop DancingLinks::search(Visit &visit, SearchControl &ctl) {
  ++ctl.nodes;
  if (!poll(ctl)) {
    if (ctl.best && ctl.best->load(std::memory_order_relaxed) < ctl.subtree) return SearchStop::aborted;
    return SearchStop::timeout;
  }
  if (right_[root_] == root_) return visit(chosen_) ? SearchStop::exhausted : SearchStop::halted;

  const int picked = choose_column();
  const auto c = static_cast<std::size_t>(picked);
  if (size_[c] == 0) return SearchStop::exhausted;
  cover(c);
  for (std::size_t r = down_[c]; r != c; r = down_[r]) {
    chosen_.push_back(row_[r]);
    for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
    const SearchStop s = search(visit, ctl);
    for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
    chosen_.pop_back();
    if (s != SearchStop::exhausted) {
      uncover(c);
      return s;
    }
  }
  uncover(c);
  return SearchStop::exhausted;
}

} // namespace ptmc::detail

#endif // PTMC_SRC_DANCING_LINKS_HPP
