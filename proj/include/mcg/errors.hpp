#ifndef MCG_ERRORS_HPP_
#define MCG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SystemMismatch : public Error {
 public:
  SystemMismatch() : Error("operands belong to different curve systems") {}
};

class UnknownCurve : public Error {
 public:
  explicit UnknownCurve(const std::string& name)
      : Error("unknown curve '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A curve is declared but carries no homology class (an opaque curve).
class NoHomologyData : public Error {
 public:
  explicit NoHomologyData(const std::string& name)
      : Error("curve '" + name + "' has no declared homology class"),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotSymplectic : public Error {
 public:
  NotSymplectic() : Error("matrix does not preserve the symplectic form") {}
};

class NotARelator : public Error {
 public:
  NotARelator() : Error("word is not a homological relator") {}
};

class MalformedRelation : public Error {
 public:
  using Error::Error;
};

class InvalidRelation : public Error {
 public:
  explicit InvalidRelation(const std::string& name)
      : Error("relation '" + name + "' fails homological validation") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SubstMismatch : public Error {
 public:
  SubstMismatch(std::string expected, std::string found)
      : Error("substitution pattern mismatch: expected " + expected +
              ", found " + found),
        expected_(std::move(expected)),
        found_(std::move(found)) {}
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

// Syntax or resolution error in a text input, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             std::string token, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message +
              (token.empty() ? std::string() : " near '" + token + "'")),
        file_(std::move(file)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

// A parsed system whose declarations contradict each other.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "curve system validation failed:";
    for (auto const& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace mcg

#endif  // MCG_ERRORS_HPP_
