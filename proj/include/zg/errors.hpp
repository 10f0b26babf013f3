// zg/errors.hpp
//
// Error taxonomy for the workbench. A `parse_error` is malformed input text,
// a `precondition_error` is a violated operation contract, a `budget_error`
// is an exceeded size/enumeration cap. All three map to CLI exit code 2;
// a mathematical FAIL verdict is reported data, never an exception.

#pragma once

#include <stdexcept>
#include <string>

namespace zg {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace zg
