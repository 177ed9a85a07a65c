/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include <stdexcept>
#include <string>

namespace valsat {

/* Base of every error the engine raises. */
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct MalformedAlgebraic : Error { using Error::Error; };
struct OracleFailure : Error { using Error::Error; };
struct ComparisonUndecidedAtPrecision : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

struct TruncationInsufficient : Error { using Error::Error; };
struct NegativeValuation : Error { using Error::Error; };
struct ClassMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

struct PreconditionViolated : Error { using Error::Error; };

struct SyntaxError : Error {
	std::string detail;
	std::size_t column; /* 1-based */
	SyntaxError(const std::string &msg, std::size_t col)
	: Error(msg + " at column " + std::to_string(col)), detail(msg), column(col) {}
	/* same error, reported relative to an enclosing text */
	SyntaxError shifted(std::size_t offset) const { return SyntaxError(detail, column + offset); }
};
struct UnboundSymbol : Error { using Error::Error; };
struct Unsatisfiable : Error { using Error::Error; };
struct NonlinearUnsupported : Error { using Error::Error; };
struct NotGroupFragment : Error { using Error::Error; };

struct BoundaryUndecided : Error { using Error::Error; };
struct NodeNotInTree : Error { using Error::Error; };
struct NotAChain : Error { using Error::Error; };

struct NotFinitelySatisfiable : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };
struct PseudoLimitUnverified : Error { using Error::Error; };
struct OracleInconsistent : Error { using Error::Error; };

} // namespace valsat
