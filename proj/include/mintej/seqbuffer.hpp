#pragma once
// FIFO staging buffer and the line-oriented buffer the editor works on.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mintej/errors.hpp"

namespace mintej {

// Fixed-capacity FIFO with explicit head/tail indices. write advances the
// tail, read advances the head, neither ever wraps; a drained buffer is done.
class SequentialBuffer {
public:
  explicit SequentialBuffer(std::size_t capacity);

  void write(std::string datum);  // throws BufferFullError when tail == capacity
  std::string read();             // throws BufferEmptyError when head == tail

  std::size_t size() const noexcept { return tail_ - head_; }
  bool empty() const noexcept { return head_ == tail_; }
  bool full() const noexcept { return tail_ == capacity_; }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t head() const noexcept { return head_; }
  std::size_t tail() const noexcept { return tail_; }

  // Unread cells, in arrival order.
  std::vector<std::string> contents() const;

private:
  std::vector<std::string> cells_;
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
};

// Inclusive 1-based line range, written "N" or "A:B".
struct LineRange {
  std::size_t start = 1;
  std::size_t end = 1;

  static std::optional<LineRange> parse(std::string_view text);
  std::size_t count() const noexcept { return end - start + 1; }
};

// 1-based contiguous lines with no stored terminators. Loading accepts both
// "\n" and "\r\n"; rendering always uses "\n" and terminates a non-empty
// buffer with a final newline.
class LineBuffer {
public:
  LineBuffer() = default;

  static LineBuffer load(std::string_view text);
  std::string render() const;

  std::size_t line_count() const noexcept { return lines_.size(); }
  const std::string& line(std::size_t n) const;  // 1-based
  const std::vector<std::string>& lines() const noexcept { return lines_; }

  void append(std::string line);
  void remove(LineRange range);
  void copy_lines(LineRange src, std::size_t dest);  // dest in [1, count+1]
  void insert_blank(std::size_t at);                 // at in [1, count+1]
  void comment(LineRange range);
  void uncomment(LineRange range);

  bool dirty() const noexcept { return dirty_; }
  void mark_saved() noexcept { dirty_ = false; }

  bool operator==(const LineBuffer& other) const { return lines_ == other.lines_; }

private:
  void check_range(const LineRange& range) const;

  std::vector<std::string> lines_;
  bool dirty_ = false;
};

}  // namespace mintej
