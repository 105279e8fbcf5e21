#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Loop, duplicate edge, improper coloring or out-of-range vertex id.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class BipartitionError : public Error {
 public:
  using Error::Error;
};

class WorkCapExceeded : public Error {
 public:
  WorkCapExceeded(const std::string& what, double estimate, std::uint64_t cap)
      : Error(what + ": estimated work " + std::to_string(estimate) +
              " exceeds cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}
  double estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  double estimate_;
  std::uint64_t cap_;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class DegreeZero : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A conclusion that a lemma guarantees did not hold: an implementation bug.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class PartitionFailure : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class OddOrder : public Error {
 public:
  using Error::Error;
};

class TooManyEdges : public Error {
 public:
  using Error::Error;
};

// Default budget of elementary updates for every exact counter.
inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;

struct WorkCap {
  std::uint64_t limit = kDefaultWorkCap;

  void check(const std::string& what, double estimate) const {
    if (estimate > static_cast<double>(limit)) throw WorkCapExceeded(what, estimate, limit);
  }
};

}  // namespace rainbow
