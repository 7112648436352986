#ifndef TOPCP_ERRORS_HPP
#define TOPCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace topcp {

/// Malformed instance file; message names the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Model construction or mutation rejected (unknown variable, bad row).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// The model admits no feasible point (e.g. c_da > L).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Hard solver failure: misconfigured adapter, unrecoverable numerics.
class BackendError : public std::runtime_error {
 public:
  explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

/// Size guard violated (oracle limits).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topcp

#endif
