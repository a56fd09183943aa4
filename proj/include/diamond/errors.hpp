/*
   Copyright 2026 The diamond authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace diamond {

/// Caller violated a precondition or supplied malformed input.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured limit (basis size, queue, matrix dimension, prefix cap)
/// was exceeded. Computations may attach partial results.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text failed to parse; carries a 1-based line/column position.
class parse_error : public usage_error {
 public:
  parse_error(int line, int col, const std::string& msg)
      : usage_error(format(line, col, msg)), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string format(int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << line << ":" << col << ": " << msg;
    return os.str();
  }
  int line_;
  int col_;
};

}  // namespace diamond
