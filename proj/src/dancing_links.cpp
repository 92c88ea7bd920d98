#include "dancing_links.hpp"

#include <limits>

namespace ptmc::detail {

namespace {
constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();
}

DancingLinks::DancingLinks(const ExactCoverInstance &inst) {
  const std::size_t ncols = inst.universe.size();
  root_ = ncols;
  const std::size_t headers = ncols + 1;
  auto push_node = [&](std::size_t c, std::size_t r) {
    const std::size_t id = left_.size();
    left_.push_back(id);
    right_.push_back(id);
    up_.push_back(id);
    down_.push_back(id);
    col_.push_back(c);
    row_.push_back(r);
    return id;
  };
  for (std::size_t c = 0; c < headers; ++c) push_node(c, kNoRow);
  for (std::size_t c = 0; c < headers; ++c) {
    left_[c] = c == 0 ? root_ : c - 1;
    right_[c] = c == root_ ? 0 : c + 1;
  }
  size_.assign(ncols, 0);
  column_live_.assign(ncols, true);
  row_head_.assign(inst.tiles.size(), kNoRow);

  for (std::size_t r = 0; r < inst.tiles.size(); ++r) {
    std::size_t first = kNoRow;
    for (std::uint32_t cell : inst.tiles[r].cells) {
      const std::size_t id = push_node(cell, r);
      up_[id] = up_[cell];
      down_[id] = cell;
      down_[up_[cell]] = id;
      up_[cell] = id;
      ++size_[cell];
      if (first == kNoRow) {
        first = id;
      } else {
        left_[id] = left_[first];
        right_[id] = first;
        right_[left_[first]] = id;
        left_[first] = id;
      }
    }
    row_head_[r] = first;
  }
}

void DancingLinks::cover(std::size_t c) {
  column_live_[c] = false;
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::size_t i = down_[c]; i != c; i = down_[i])
    for (std::size_t j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[col_[j]];
    }
}

void DancingLinks::uncover(std::size_t c) {
  for (std::size_t i = up_[c]; i != c; i = up_[i])
    for (std::size_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[col_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
  column_live_[c] = true;
}

bool DancingLinks::select_row(std::size_t row) {
  const std::size_t head = row_head_.at(row);
  if (head == kNoRow) return false;
  std::size_t j = head;
  do {
    if (!column_live_[col_[j]]) return false;
    j = right_[j];
  } while (j != head);
  j = head;
  do {
    cover(col_[j]);
    j = right_[j];
  } while (j != head);
  chosen_.push_back(row);
  return true;
}

int DancingLinks::choose_column() const {
  if (right_[root_] == root_) return -1;
  std::size_t best = right_[root_];
  for (std::size_t c = right_[best]; c != root_; c = right_[c])
    if (size_[c] < size_[best]) best = c;
  return static_cast<int>(best);
}

std::vector<std::size_t> DancingLinks::rows_in_column(int c) const {
  std::vector<std::size_t> rows;
  const auto col = static_cast<std::size_t>(c);
  for (std::size_t i = down_[col]; i != col; i = down_[i]) rows.push_back(row_[i]);
  return rows;
}

bool DancingLinks::poll(SearchControl &ctl) const {
  if (ctl.best && ctl.best->load(std::memory_order_relaxed) < ctl.subtree) return false;
  if (ctl.deadline && (ctl.nodes & 1023) == 1 && Clock::now() > *ctl.deadline) return false;
  return true;
}

} // namespace ptmc::detail
