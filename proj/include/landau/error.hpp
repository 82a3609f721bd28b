#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace landau {

enum class ErrorKind {
  invalid_permutation,
  cap_exceeded,
  not_a_member,
  not_a_subgroup,
  not_normal,
  not_in_subgroup,
  unsupported_spec,
  domain_error,
  out_of_range,
  wrong_graph_shape,
  precondition_violated,
  schema_mismatch,
  order_mismatch,
  duplicate_id,
  incomplete_catalog,
  io_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Catalog parse failures remember the offending line (1-based, 0 if unknown).
class CatalogError : public Error {
 public:
  CatalogError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace landau
