#pragma once

#include <stdexcept>
#include <string>

namespace fedsim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class IncongruentTreesError : public Error {
 public:
  using Error::Error;
};

class EmptyTermListError : public Error {
 public:
  using Error::Error;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

class NoBucketFitsError : public Error {
 public:
  using Error::Error;
};

class CohortTooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidHyperparameterError : public Error {
 public:
  using Error::Error;
};

class EmptyCohortError : public Error {
 public:
  using Error::Error;
};

class ZeroTotalWeightError : public Error {
 public:
  using Error::Error;
};

// Raised by the round loop when server parameters stop being finite.
// Carries the 0-based index of the round that produced them.
class NonFiniteParamsError : public Error {
 public:
  NonFiniteParamsError(const std::string& what, long round)
      : Error(what), round_(round) {}
  long round() const { return round_; }

 private:
  long round_;
};

// A client's functions raised during for_each_client; the whole call aborts.
class ClientFailedError : public Error {
 public:
  ClientFailedError(const std::string& client_id, const std::string& what)
      : Error("client '" + client_id + "' failed: " + what),
        client_id_(client_id) {}
  const std::string& client_id() const { return client_id_; }

 private:
  std::string client_id_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// Configuration errors carry the offending field path in the message.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fedsim
