#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace liesymp {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
	using Error::Error;
};
struct MissingAssignment : Error {
	using Error::Error;
};
struct NotALieAlgebra : Error {
	// violating triple (1-based basis indices)
	std::array<int, 3> triple{};
	NotALieAlgebra(const std::string &msg, std::array<int, 3> t)
	    : Error(msg), triple(t)
	{}
};
struct InvalidParameter : Error {
	using Error::Error;
};
struct OddDimension : Error {
	using Error::Error;
};
struct DegenerateForm : Error {
	using Error::Error;
};
struct SingularMap : Error {
	using Error::Error;
};
struct NotARepresentation : Error {
	using Error::Error;
};
struct NotACocycle : Error {
	using Error::Error;
};
struct NotADerivation : Error {
	using Error::Error;
};
struct IncompatibleDerivation : Error {
	std::array<int, 3> triple{};
	IncompatibleDerivation(const std::string &msg, std::array<int, 3> t)
	    : Error(msg), triple(t)
	{}
};
struct NotReducible : Error {
	using Error::Error;
};
struct ParseError : Error {
	using Error::Error;
};

} // namespace liesymp
