#include "mintej/session.hpp"

namespace mintej {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Main: return "main";
    case Mode::Edm: return "edm";
    case Mode::Fms: return "fms";
    case Mode::Exe: return "exe";
    case Mode::Db: return "db";
    case Mode::Syntax: return "syntax";
  }
  return "main";
}

const char* mode_prompt(Mode mode) {
  switch (mode) {
    case Mode::Main: return "MinTEJ>>";
    case Mode::Edm: return "edm>>";
    case Mode::Fms: return "fms>>";
    case Mode::Exe: return "exe>>";
    case Mode::Db: return "db>>";
    case Mode::Syntax: return "syntax>>";
  }
  return "MinTEJ>>";
}

Session::Session(Io& io_, std::filesystem::path workdir_)
    : io(io_), workdir(std::filesystem::absolute(workdir_).lexically_normal()) {}

std::filesystem::path Session::resolve(const std::filesystem::path& name) const {
  if (name.is_absolute()) return name.lexically_normal();
  return (workdir / name).lexically_normal();
}

void Session::log_transition(Mode from, Mode to) {
  transitions.push_back(std::string(mode_name(from)) + "->" + mode_name(to));
}

}  // namespace mintej
