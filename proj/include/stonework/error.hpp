#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stonework {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t requested, std::size_t cap)
      : Error("enumeration cap exceeded: requested " + std::to_string(requested) +
              ", cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateGenerator : public Error {
 public:
  explicit DuplicateGenerator(const std::string& name)
      : Error("duplicate generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A source relation is not sent to 0 by a proposed morphism.
class RelationNotKilled : public Error {
 public:
  explicit RelationNotKilled(std::size_t index)
      : Error("relation " + std::to_string(index) + " is not sent to 0"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotDisjoint : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class SquareNotCommuting : public Error {
 public:
  explicit SquareNotCommuting(std::size_t level)
      : Error("levelwise square does not commute at level " + std::to_string(level)),
        level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

class RelationNotPreserved : public Error {
 public:
  using Error::Error;
};

class InvariantViolated : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace stonework
