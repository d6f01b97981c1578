#include "mintej/seqbuffer.hpp"

#include <algorithm>
#include <charconv>

namespace mintej {

SequentialBuffer::SequentialBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("buffer capacity must be positive");
  cells_.resize(capacity);
}

void SequentialBuffer::write(std::string datum) {
  if (full()) throw BufferFullError(capacity_);
  cells_[tail_] = std::move(datum);
  ++tail_;
}

std::string SequentialBuffer::read() {
  if (empty()) throw BufferEmptyError();
  std::string out = std::move(cells_[head_]);
  ++head_;
  return out;
}

std::vector<std::string> SequentialBuffer::contents() const {
  return std::vector<std::string>(cells_.begin() + static_cast<long>(head_),
                                  cells_.begin() + static_cast<long>(tail_));
}

namespace {

std::optional<std::size_t> parse_count(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<LineRange> LineRange::parse(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    auto n = parse_count(trim(text));
    if (!n || *n == 0) return std::nullopt;
    return LineRange{*n, *n};
  }
  auto a = parse_count(trim(text.substr(0, colon)));
  auto b = parse_count(trim(text.substr(colon + 1)));
  if (!a || !b || *a == 0 || *b == 0 || *a > *b) return std::nullopt;
  return LineRange{*a, *b};
}

LineBuffer LineBuffer::load(std::string_view text) {
  LineBuffer buf;
  if (text.empty()) return buf;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      // final line without terminator
      buf.lines_.emplace_back(text.substr(start));
      break;
    }
    std::size_t len = nl - start;
    if (len > 0 && text[nl - 1] == '\r') --len;  // tolerate CRLF input
    buf.lines_.emplace_back(text.substr(start, len));
    start = nl + 1;
    if (start == text.size()) break;  // trailing terminator: no phantom line
  }
  return buf;
}

std::string LineBuffer::render() const {
  std::string out;
  for (const auto& line : lines_) {
    out += line;
    out += '\n';
  }
  return out;
}

const std::string& LineBuffer::line(std::size_t n) const {
  if (n == 0 || n > lines_.size()) throw RangeError("line number out of range", n);
  return lines_[n - 1];
}

void LineBuffer::append(std::string line) {
  lines_.push_back(std::move(line));
  dirty_ = true;
}

void LineBuffer::check_range(const LineRange& range) const {
  if (range.start == 0 || range.start > range.end)
    throw RangeError("invalid line range", range.start);
  if (range.end > lines_.size()) throw RangeError("line number out of range", range.end);
}

void LineBuffer::remove(LineRange range) {
  check_range(range);
  lines_.erase(lines_.begin() + static_cast<long>(range.start - 1),
               lines_.begin() + static_cast<long>(range.end));
  dirty_ = true;
}

void LineBuffer::copy_lines(LineRange src, std::size_t dest) {
  check_range(src);
  if (dest == 0 || dest > lines_.size() + 1) throw RangeError("destination out of range", dest);
  std::vector<std::string> copies(lines_.begin() + static_cast<long>(src.start - 1),
                                  lines_.begin() + static_cast<long>(src.end));
  lines_.insert(lines_.begin() + static_cast<long>(dest - 1),
                std::make_move_iterator(copies.begin()), std::make_move_iterator(copies.end()));
  dirty_ = true;
}

void LineBuffer::insert_blank(std::size_t at) {
  if (at == 0 || at > lines_.size() + 1) throw RangeError("position out of range", at);
  lines_.insert(lines_.begin() + static_cast<long>(at - 1), std::string());
  dirty_ = true;
}

void LineBuffer::comment(LineRange range) {
  check_range(range);
  for (std::size_t i = range.start; i <= range.end; ++i) lines_[i - 1].insert(0, 1, '#');
  dirty_ = true;
}

void LineBuffer::uncomment(LineRange range) {
  check_range(range);
  for (std::size_t i = range.start; i <= range.end; ++i) {
    std::string& line = lines_[i - 1];
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && line[pos] == '#') line.erase(pos, 1);
  }
  dirty_ = true;
}

}  // namespace mintej
