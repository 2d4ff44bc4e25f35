#pragma once

#include <stdexcept>
#include <string>

namespace gnorm {

// Thrown when a computation would exceed a documented size guard.
// The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files; carries file and position context.
// The CLI maps this (and std::invalid_argument) to exit code 2.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& file, const std::string& where, const std::string& what)
      : std::runtime_error(file + ": " + where + ": " + what), file_(file), where_(where) {}
  const std::string& file() const { return file_; }
  const std::string& where() const { return where_; }

 private:
  std::string file_;
  std::string where_;
};

}  // namespace gnorm
