#pragma once

#include "liesymp/poly.hpp"

#include <map>
#include <memory>
#include <string>

namespace liesymp {

// Arithmetic expression over named variables: + - * / ^ and parentheses.
// Used to read polynomial conditions and matrix-entry formulas from the
// reference data files.
class Expr {
public:
	static Expr parse(const std::string &s);

	// collapse to a polynomial; division must be by constants
	Poly to_poly() const;
	Rational eval(const std::map<std::string, Rational> &assignment) const;

private:
	enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };
	Op op_ = Op::Const;
	Rational value_;
	std::string name_;
	int exponent_ = 1;
	std::shared_ptr<Expr> lhs_, rhs_;
	friend class ExprParser;
};

} // namespace liesymp
