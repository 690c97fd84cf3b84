#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqdist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Sturm count was requested on an interval whose endpoint is a root.
class EndpointIsRoot : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// 0 is a main eigenvalue, so j is not in the column space.
class JNotInRange : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class RelationCoverError : public Error {
 public:
  using Error::Error;
};

class NonCommutingError : public Error {
 public:
  using Error::Error;
};

/// The four type cases are exhaustive; reaching this means an arithmetic bug.
class InconsistentTypeError : public Error {
 public:
  using Error::Error;
};

class DegenerateRelationError : public Error {
 public:
  using Error::Error;
};

class TierExceededError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  CheckpointError(const std::string& what, std::ptrdiff_t record = -1)
      : Error(record >= 0 ? what + " (record " + std::to_string(record) + ")"
                          : what),
        record_(record) {}
  /// Offending record index, or -1 when the failure is not record-specific.
  std::ptrdiff_t record() const noexcept { return record_; }

 private:
  std::ptrdiff_t record_;
};

class ToleranceExceeded : public Error {
 public:
  ToleranceExceeded(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

}  // namespace pqdist
