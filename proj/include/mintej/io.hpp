#pragma once
// Console abstraction: every prompt, read, and printed line in the editor
// flows through an Io, so whole sessions can be driven from a scripted input
// list and checked against a recorded transcript.

#include <optional>
#include <string>
#include <vector>

namespace mintej {

class Io {
public:
  virtual ~Io() = default;

  // Shows `prompt` (possibly empty, e.g. for bare pause reads) and reads one
  // line. nullopt means the input source is exhausted (EOF / script drained).
  virtual std::optional<std::string> read_line(const std::string& prompt) = 0;

  virtual void print_line(const std::string& text) = 0;
  virtual void clear_screen() = 0;

  void print_lines(const std::vector<std::string>& lines) {
    for (const auto& l : lines) print_line(l);
  }
};

// Interactive stdin/stdout.
class ConsoleIo : public Io {
public:
  std::optional<std::string> read_line(const std::string& prompt) override;
  void print_line(const std::string& text) override;
  void clear_screen() override;
};

// Replays a fixed list of inputs and records everything as a transcript.
// A prompted read appears as one line "<prompt><input>"; a promptless read
// echoes the input as its own line (matching what a terminal shows when the
// user types at column zero). Reading past the script appends a single
// "<<script exhausted>>" marker and then reports end-of-input forever.
class ScriptIo : public Io {
public:
  explicit ScriptIo(std::vector<std::string> inputs) : inputs_(std::move(inputs)) {}

  std::optional<std::string> read_line(const std::string& prompt) override;
  void print_line(const std::string& text) override;
  void clear_screen() override;

  const std::vector<std::string>& transcript() const noexcept { return transcript_; }
  std::string transcript_text() const;

private:
  std::vector<std::string> inputs_;
  std::size_t next_ = 0;
  bool marked_exhausted_ = false;
  std::vector<std::string> transcript_;
};

}  // namespace mintej
