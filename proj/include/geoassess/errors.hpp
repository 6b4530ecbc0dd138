#pragma once

#include <stdexcept>
#include <string>

namespace geoassess {

// A covariance (or conditioning) matrix failed its Cholesky factorization.
// Surfaced, never papered over with jitter: callers decide how to report it.
class NotPositiveDefiniteError : public std::runtime_error {
public:
  explicit NotPositiveDefiniteError(const std::string& what)
      : std::runtime_error(what) {}
};

// A tile needed more singular values than the configured maximum rank allows.
class RankOverflowError : public std::runtime_error {
public:
  explicit RankOverflowError(const std::string& what)
      : std::runtime_error(what) {}
};

// Low-rank-plus-diagonal model with a singular implied covariance.
class RankDeficientError : public std::runtime_error {
public:
  explicit RankDeficientError(const std::string& what)
      : std::runtime_error(what) {}
};

// Every likelihood evaluation attempted by the optimizer failed.
class FitFailureError : public std::runtime_error {
public:
  explicit FitFailureError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace geoassess
