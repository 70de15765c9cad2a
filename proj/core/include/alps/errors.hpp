#pragma once

#include <stdexcept>
#include <string>

namespace alps {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor shapes incompatible with the requested operation.
class InvalidShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented API precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Bad or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable, malformed, or missing input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Evaluation protocol cannot be applied to the given data.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// Metric is mathematically undefined for the given inputs
/// (e.g. AUROC with a single class present).
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint file problems; subclasses distinguish the failure mode.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

class BadMagicError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class VersionError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class TruncatedError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

}  // namespace alps
