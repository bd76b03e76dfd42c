#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frucht {

// Every library error carries one of these codes; the CLI maps them 1:1 to
// process exit codes (documented in --help).
enum class ErrorCode : int {
  ok = 0,
  check_failed = 1,  // a verification check reported false (not an exception)
  usage = 2,
  not_latin_square = 3,
  not_associative = 4,
  no_identity = 5,
  unknown_family = 6,
  parameter_out_of_range = 7,
  invalid_handle = 8,
  out_of_range = 9,
  index_below_two = 10,
  missing_terminator = 11,
  group_mismatch = 12,
  malformed_image = 13,
  search_budget_exceeded = 14,
  invalid_input = 15,
  io = 16,
  internal = 17,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

#define FRUCHT_DEFINE_ERROR(NAME, CODE)              \
  struct NAME : Error {                              \
    explicit NAME(const std::string& what)           \
        : Error(ErrorCode::CODE, what) {}            \
  }

FRUCHT_DEFINE_ERROR(UsageError, usage);
FRUCHT_DEFINE_ERROR(NotLatinSquareError, not_latin_square);
FRUCHT_DEFINE_ERROR(NotAssociativeError, not_associative);
FRUCHT_DEFINE_ERROR(NoIdentityError, no_identity);
FRUCHT_DEFINE_ERROR(UnknownFamilyError, unknown_family);
FRUCHT_DEFINE_ERROR(ParameterOutOfRangeError, parameter_out_of_range);
FRUCHT_DEFINE_ERROR(InvalidHandleError, invalid_handle);
FRUCHT_DEFINE_ERROR(OutOfRangeError, out_of_range);
FRUCHT_DEFINE_ERROR(IndexBelowTwoError, index_below_two);
FRUCHT_DEFINE_ERROR(MissingTerminatorError, missing_terminator);
FRUCHT_DEFINE_ERROR(GroupMismatchError, group_mismatch);
FRUCHT_DEFINE_ERROR(MalformedImageError, malformed_image);
FRUCHT_DEFINE_ERROR(InvalidInputError, invalid_input);
FRUCHT_DEFINE_ERROR(IoError, io);
FRUCHT_DEFINE_ERROR(InternalError, internal);

#undef FRUCHT_DEFINE_ERROR

// Thrown when the automorphism search exhausts its node budget; carries the
// partial progress made before giving up.
struct SearchBudgetExceededError : Error {
  SearchBudgetExceededError(const std::string& what, std::uint64_t nodes,
                            std::size_t found)
      : Error(ErrorCode::search_budget_exceeded, what),
        nodes_visited(nodes),
        automorphisms_found(found) {}
  std::uint64_t nodes_visited;
  std::size_t automorphisms_found;
};

}  // namespace frucht
