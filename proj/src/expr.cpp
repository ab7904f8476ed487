#include "liesymp/expr.hpp"

#include "liesymp/errors.hpp"

#include <cctype>

namespace liesymp {

class ExprParser {
public:
	explicit ExprParser(const std::string &s) : s_(s) {}

	Expr run()
	{
		Expr e = sum();
		skip_ws();
		if (pos_ != s_.size())
			throw ParseError("trailing input in expression: '" + s_ + "'");
		return e;
	}

private:
	const std::string &s_;
	size_t pos_ = 0;

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
			++pos_;
	}
	bool eat(char c)
	{
		skip_ws();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}
	char peek()
	{
		skip_ws();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	static Expr node(Expr::Op op, Expr l, Expr r)
	{
		Expr e;
		e.op_ = op;
		e.lhs_ = std::make_shared<Expr>(std::move(l));
		e.rhs_ = std::make_shared<Expr>(std::move(r));
		return e;
	}

	Expr sum()
	{
		Expr e = product();
		for (;;) {
			if (eat('+'))
				e = node(Expr::Op::Add, std::move(e), product());
			else if (eat('-'))
				e = node(Expr::Op::Sub, std::move(e), product());
			else
				return e;
		}
	}

	Expr product()
	{
		Expr e = unary();
		for (;;) {
			if (eat('*'))
				e = node(Expr::Op::Mul, std::move(e), unary());
			else if (eat('/'))
				e = node(Expr::Op::Div, std::move(e), unary());
			else
				return e;
		}
	}

	Expr unary()
	{
		if (eat('-')) {
			Expr e;
			e.op_ = Expr::Op::Neg;
			e.lhs_ = std::make_shared<Expr>(unary());
			return e;
		}
		return power();
	}

	Expr power()
	{
		Expr base = atom();
		if (eat('^')) {
			skip_ws();
			size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
				++pos_;
			if (start == pos_)
				throw ParseError("expected exponent in '" + s_ + "'");
			Expr e;
			e.op_ = Expr::Op::Pow;
			e.exponent_ = std::stoi(s_.substr(start, pos_ - start));
			e.lhs_ = std::make_shared<Expr>(std::move(base));
			return e;
		}
		return base;
	}

	Expr atom()
	{
		skip_ws();
		if (pos_ >= s_.size())
			throw ParseError("unexpected end of expression: '" + s_ + "'");
		if (eat('(')) {
			Expr e = sum();
			if (!eat(')'))
				throw ParseError("missing ')' in '" + s_ + "'");
			return e;
		}
		char c = s_[pos_];
		if (std::isdigit((unsigned char)c)) {
			size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
				++pos_;
			Expr e;
			e.op_ = Expr::Op::Const;
			e.value_ = Rational(BigInt(s_.substr(start, pos_ - start)));
			return e;
		}
		if (std::isalpha((unsigned char)c) || c == '_') {
			size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
				++pos_;
			Expr e;
			e.op_ = Expr::Op::Var;
			e.name_ = s_.substr(start, pos_ - start);
			return e;
		}
		throw ParseError("unexpected character '" + std::string(1, c) +
		                 "' in '" + s_ + "'");
	}
};

Expr Expr::parse(const std::string &s) { return ExprParser(s).run(); }

Poly Expr::to_poly() const
{
	switch (op_) {
	case Op::Const:
		return Poly(value_);
	case Op::Var:
		return Poly::var(name_);
	case Op::Add:
		return lhs_->to_poly() + rhs_->to_poly();
	case Op::Sub:
		return lhs_->to_poly() - rhs_->to_poly();
	case Op::Mul:
		return lhs_->to_poly() * rhs_->to_poly();
	case Op::Div: {
		Poly d = rhs_->to_poly();
		if (!d.is_constant())
			throw ParseError("polynomial division by non-constant");
		Poly n = lhs_->to_poly();
		n /= d.constant_value();
		return n;
	}
	case Op::Neg:
		return -lhs_->to_poly();
	case Op::Pow: {
		Poly b = lhs_->to_poly();
		Poly r(1);
		for (int i = 0; i < exponent_; ++i)
			r = r * b;
		return r;
	}
	}
	throw Error("unreachable");
}

Rational Expr::eval(const std::map<std::string, Rational> &assignment) const
{
	switch (op_) {
	case Op::Const:
		return value_;
	case Op::Var: {
		auto it = assignment.find(name_);
		if (it == assignment.end())
			throw MissingAssignment("no value for '" + name_ + "'");
		return it->second;
	}
	case Op::Add:
		return lhs_->eval(assignment) + rhs_->eval(assignment);
	case Op::Sub:
		return lhs_->eval(assignment) - rhs_->eval(assignment);
	case Op::Mul:
		return lhs_->eval(assignment) * rhs_->eval(assignment);
	case Op::Div:
		return lhs_->eval(assignment) / rhs_->eval(assignment);
	case Op::Neg:
		return -lhs_->eval(assignment);
	case Op::Pow: {
		Rational b = lhs_->eval(assignment), r(1);
		for (int i = 0; i < exponent_; ++i)
			r *= b;
		return r;
	}
	}
	throw Error("unreachable");
}

Poly Poly::parse(const std::string &s) { return Expr::parse(s).to_poly(); }

} // namespace liesymp
