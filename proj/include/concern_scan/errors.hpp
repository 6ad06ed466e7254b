#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace concern_scan {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotReadable : public Error {
 public:
  explicit FileNotReadable(std::string path)
      : Error("cannot read file: " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  RangeError(std::size_t line, std::string field)
      : Error("line " + std::to_string(line) + ": " + field + " out of range"),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class UnknownEmotion : public Error {
 public:
  UnknownEmotion(std::size_t line, std::string name)
      : Error("line " + std::to_string(line) + ": unknown emotion '" + name + "'"),
        line_(line),
        name_(std::move(name)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t line_;
  std::string name_;
};

class MissingColumn : public Error {
 public:
  explicit MissingColumn(std::string name)
      : Error("missing column: " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class EmptyReport : public Error {
 public:
  EmptyReport() : Error("report has no sentences") {}
};

class NotNegativeSentence : public Error {
 public:
  NotNegativeSentence() : Error("sentence is not negative") {}
};

class TooFewPoints : public Error {
 public:
  explicit TooFewPoints(std::size_t n)
      : Error("regression needs at least 3 points, got " + std::to_string(n)) {}
};

class DegenerateX : public Error {
 public:
  DegenerateX() : Error("regression x values are all equal") {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus contains no valid reports") {}
};

/// Wraps a module error with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace concern_scan
