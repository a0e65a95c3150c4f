//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_ERROR_HPP_
#define IGT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace igt {

/// Base class of every recoverable error thrown by the toolkit.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries a 1-based line number when one is known.
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  long line() const { return line_; }

private:
  long line_;
};

/// A structure file that parsed but yielded no atoms.
class EmptyStructureError : public Error {
public:
  using Error::Error;
};

/// No receptor atom within the pocket cutoff of the ligand.
class EmptyPocketError : public Error {
public:
  using Error::Error;
};

/// No ligand-receptor atom pair within the intermolecular cutoff.
class NoContactError : public Error {
public:
  using Error::Error;
};

/// An attention layer was handed a graph with zero nodes.
class EmptyGraphError : public Error {
public:
  using Error::Error;
};

/// Incompatible tensor or coordinate shapes; the message names both shapes.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A forward operation produced NaN or Inf.
class NumericError : public Error {
public:
  using Error::Error;
};

/// backward() invoked twice on the same tape without a reset.
class StaleTapeError : public Error {
public:
  using Error::Error;
};

/// Metric undefined for the given inputs (e.g. single-class label set).
class UndefinedMetricError : public Error {
public:
  using Error::Error;
};

/// A metric operating point outside its valid open interval.
class DegenerateRangeError : public Error {
public:
  using Error::Error;
};

/// Dataset split impossible (fewer units than partitions).
class SplitError : public Error {
public:
  using Error::Error;
};

/// Invalid or unknown run-configuration key or value.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace igt

#endif // IGT_ERROR_HPP_
