#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mintej {

class BufferFullError : public std::runtime_error {
public:
  explicit BufferFullError(std::size_t capacity)
      : std::runtime_error("buffer full (capacity " + std::to_string(capacity) + ")") {}
};

class BufferEmptyError : public std::runtime_error {
public:
  BufferEmptyError() : std::runtime_error("buffer empty") {}
};

// Out-of-bounds or malformed line range; carries the offending bound so
// callers can report it when re-prompting.
class RangeError : public std::runtime_error {
public:
  RangeError(const std::string& what, std::size_t offending)
      : std::runtime_error(what), offending_(offending) {}
  std::size_t offending() const noexcept { return offending_; }

private:
  std::size_t offending_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, std::string file)
      : std::runtime_error(message), line_(line), file_(std::move(file)) {}
  int line() const noexcept { return line_; }
  const std::string& file() const noexcept { return file_; }

private:
  int line_;
  std::string file_;
};

class EvalError : public std::runtime_error {
public:
  EvalError(const std::string& message, int line) : std::runtime_error(message), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

class SyntaxDbError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mintej
