#ifndef BCHZ_ERROR_HPP
#define BCHZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bchz {

enum class ErrorCode {
	DivisionByZero,
	GeneratorCountMismatch,
	AlphabetMismatch,
	NotAugmentation,
	AlgebraMismatch,
	NotNilpotent,
	NotUnipotent,
	NotInvertible,
	DegreeOutOfRange,
	NotTabulated,
	KindMismatch,
	UnknownIdentity,
	InsufficientModel,
	IndexOutOfRange,
	ParseError,
};

constexpr std::string_view to_string(ErrorCode c)
{
	switch (c)
	{
	case ErrorCode::DivisionByZero: return "DivisionByZero";
	case ErrorCode::GeneratorCountMismatch: return "GeneratorCountMismatch";
	case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
	case ErrorCode::NotAugmentation: return "NotAugmentation";
	case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
	case ErrorCode::NotNilpotent: return "NotNilpotent";
	case ErrorCode::NotUnipotent: return "NotUnipotent";
	case ErrorCode::NotInvertible: return "NotInvertible";
	case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
	case ErrorCode::NotTabulated: return "NotTabulated";
	case ErrorCode::KindMismatch: return "KindMismatch";
	case ErrorCode::UnknownIdentity: return "UnknownIdentity";
	case ErrorCode::InsufficientModel: return "InsufficientModel";
	case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
	case ErrorCode::ParseError: return "ParseError";
	}
	return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code.
/// Callers that need a value instead of an exception can catch and inspect
/// code().
class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, std::string const &what)
	    : std::runtime_error(std::string(to_string(code)) + ": " + what),
	      code_(code)
	{}

	ErrorCode code() const noexcept { return code_; }

  private:
	ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const &what)
{
	throw Error(code, what);
}

} // namespace bchz

#endif
