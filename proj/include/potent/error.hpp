#pragma once

#include <stdexcept>
#include <string>

namespace potent {

enum class ErrorKind {
  Parse,    // malformed sequence text
  Domain,   // input outside an operation's domain (zero terms, non-graphic, bad n, ...)
  Cap,      // oracle vertex cap exceeded
  Invalid,  // malformed arguments (bad tag, bad embedding, index out of range)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace potent
