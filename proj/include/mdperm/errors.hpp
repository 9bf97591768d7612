#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mdperm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- permutation construction
struct NotABijection : Error { using Error::Error; };
struct RaggedRows : Error { using Error::Error; };
struct EmptyPermutation : Error { using Error::Error; };

// -- enumeration
struct StateSpaceTooLarge : Error {
  mpz_class state_count;
  StateSpaceTooLarge(std::string msg, mpz_class count)
      : Error(std::move(msg)), state_count(std::move(count)) {}
};
struct UnknownPredicate : Error { using Error::Error; };

// -- formulas
struct DomainError : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct OutOfTheoremScope : Error { using Error::Error; };

// -- series
struct ZeroConstantTerm : Error { using Error::Error; };
struct InsufficientOrder : Error { using Error::Error; };

// -- polynomials
struct ZeroPolynomial : Error { using Error::Error; };
struct EndpointIsRoot : Error { using Error::Error; };
struct NotSquareFree : Error { using Error::Error; };
struct NotRealRooted : Error { using Error::Error; };
struct DegreeGapTooLarge : Error { using Error::Error; };

// -- b-file ingestion
struct MalformedLine : Error {
  long line_number;
  MalformedLine(std::string msg, long line) : Error(std::move(msg)), line_number(line) {}
};
struct NonMonotoneIndex : Error {
  long line_number;
  NonMonotoneIndex(std::string msg, long line) : Error(std::move(msg)), line_number(line) {}
};
struct UnknownGenerator : Error { using Error::Error; };
struct OffsetMismatch : Error { using Error::Error; };

} // namespace mdperm
