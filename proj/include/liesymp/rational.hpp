#pragma once

#include "liesymp/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace liesymp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with positive
// denominator (cpp_rational canonicalizes on every operation).
class Rational {
public:
	using rep = boost::multiprecision::cpp_rational;

	Rational() = default;
	Rational(int n) : v_(n) {}
	Rational(long long n) : v_(n) {}
	Rational(const BigInt &n) : v_(n) {}
	Rational(const BigInt &num, const BigInt &den)
	{
		if (den == 0)
			throw Error("Rational: zero denominator");
		v_ = den < 0 ? rep(-num, BigInt(-den)) : rep(num, den);
	}
	explicit Rational(rep v) : v_(std::move(v)) {}

	BigInt numerator() const { return boost::multiprecision::numerator(v_); }
	BigInt denominator() const
	{
		return boost::multiprecision::denominator(v_);
	}

	bool is_zero() const { return v_ == 0; }
	int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

	Rational operator-() const { return Rational(rep(-v_)); }
	Rational &operator+=(const Rational &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw Error("Rational: division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.v_ == b.v_;
	}
	friend bool operator!=(const Rational &a, const Rational &b)
	{
		return a.v_ != b.v_;
	}
	friend bool operator<(const Rational &a, const Rational &b)
	{
		return a.v_ < b.v_;
	}
	friend bool operator<=(const Rational &a, const Rational &b)
	{
		return a.v_ <= b.v_;
	}
	friend bool operator>(const Rational &a, const Rational &b)
	{
		return a.v_ > b.v_;
	}
	friend bool operator>=(const Rational &a, const Rational &b)
	{
		return a.v_ >= b.v_;
	}

	// "p/q" or "p"
	std::string str() const;
	static Rational parse(const std::string &s);

	// exact square root when the value is a perfect square of a rational;
	// returns false otherwise
	static bool sqrt(const Rational &x, Rational &out);

private:
	rep v_{};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

inline Rational abs(const Rational &r) { return r < 0 ? -r : r; }

} // namespace liesymp
