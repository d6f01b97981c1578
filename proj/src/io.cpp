#include "mintej/io.hpp"

#include <cstdio>
#include <iostream>

namespace mintej {

std::optional<std::string> ConsoleIo::read_line(const std::string& prompt) {
  if (!prompt.empty()) {
    std::fputs(prompt.c_str(), stdout);
    std::fflush(stdout);
  }
  std::string line;
  if (!std::getline(std::cin, line)) return std::nullopt;
  return line;
}

void ConsoleIo::print_line(const std::string& text) {
  std::fputs(text.c_str(), stdout);
  std::fputc('\n', stdout);
}

void ConsoleIo::clear_screen() {
  // ANSI clear + home; fine for the terminals this runs in.
  std::fputs("\x1b[2J\x1b[H", stdout);
  std::fflush(stdout);
}

std::optional<std::string> ScriptIo::read_line(const std::string& prompt) {
  if (next_ >= inputs_.size()) {
    if (!marked_exhausted_) {
      transcript_.push_back("<<script exhausted>>");
      marked_exhausted_ = true;
    }
    return std::nullopt;
  }
  std::string input = inputs_[next_++];
  transcript_.push_back(prompt + input);
  return input;
}

void ScriptIo::print_line(const std::string& text) { transcript_.push_back(text); }

void ScriptIo::clear_screen() { transcript_.push_back("<CLEAR>"); }

std::string ScriptIo::transcript_text() const {
  std::string out;
  for (const auto& l : transcript_) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace mintej
