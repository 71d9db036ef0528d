#pragma once

#include <stdexcept>
#include <string>

namespace treelabel {

// Raised when a value cannot be represented in the requested layout.
class EncodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a label or bit string is malformed or truncated.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed tree / label documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treelabel
