#pragma once

#include "liesymp/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace liesymp {

// Monomial: variable name -> positive exponent. Empty map = 1.
using Monomial = std::map<std::string, int>;

// Sparse multivariate polynomial over Rational. No zero coefficients are
// stored; the variable set is the (ordered) union of the monomial keys.
class Poly {
public:
	Poly() = default;
	Poly(const Rational &c)
	{
		if (!c.is_zero())
			terms_[Monomial{}] = c;
	}
	Poly(int c) : Poly(Rational(c)) {}
	static Poly var(const std::string &name, int exp = 1);

	const std::map<Monomial, Rational> &terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() ||
		       (terms_.size() == 1 && terms_.begin()->first.empty());
	}
	Rational constant_value() const; // requires is_constant()
	int total_degree() const;
	std::vector<std::string> vars() const;

	Poly operator-() const;
	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	Poly &operator*=(const Poly &o) { return *this = *this * o; }
	Poly &operator*=(const Rational &c);
	friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
	friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
	Poly &operator/=(const Rational &c);

	friend bool operator==(const Poly &a, const Poly &b)
	{
		return a.terms_ == b.terms_;
	}
	friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }
	bool operator<(const Poly &o) const { return terms_ < o.terms_; }

	Rational eval(const std::map<std::string, Rational> &assignment) const;
	Poly subst(const std::map<std::string, Rational> &assignment) const;

	// leading (largest in monomial order) term; requires !is_zero()
	std::pair<Monomial, Rational> leading() const;

	// q != 0 and p == c*q for a rational c != 0; returns c through `unit`
	static bool proportional(const Poly &p, const Poly &q, Rational &unit);

	std::string str() const;
	static Poly parse(const std::string &s); // see expr.hpp

private:
	std::map<Monomial, Rational> terms_;
	void add_term(const Monomial &m, const Rational &c);
	friend class Expr;
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

inline bool poly_is_zero(const Poly &p) { return p.is_zero(); }
Rational poly_eval(const Poly &p,
                   const std::map<std::string, Rational> &assignment);

} // namespace liesymp
