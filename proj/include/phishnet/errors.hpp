#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace phishnet {

// Root of every error the library throws. The CLI maps the subclasses onto
// its exit-code classes (data/format vs model/shape).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  ExtractionError(std::string indicator, std::string url, const std::string& what)
      : Error("indicator '" + indicator + "' on '" + url + "': " + what),
        indicator_(std::move(indicator)),
        url_(std::move(url)) {}

  const std::string& indicator() const noexcept { return indicator_; }
  const std::string& url() const noexcept { return url_; }

 private:
  std::string indicator_;
  std::string url_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// A single bad row in an otherwise usable input. `row` is 1-based and counts
// physical lines including the header.
struct RowError {
  std::size_t row = 0;
  std::string message;
};

class ModelLoadError : public Error {
 public:
  using Error::Error;
};

class VersionError : public ModelLoadError {
 public:
  using ModelLoadError::ModelLoadError;
};

class CorruptFileError : public ModelLoadError {
 public:
  using ModelLoadError::ModelLoadError;
};

class ModelShapeError : public ModelLoadError {
 public:
  using ModelLoadError::ModelLoadError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FetchError : public Error {
 public:
  using Error::Error;
};

}  // namespace phishnet
