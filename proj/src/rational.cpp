#include "liesymp/rational.hpp"

#include <ostream>

namespace liesymp {

std::string Rational::str() const
{
	std::string s = numerator().str();
	if (denominator() != 1)
		s += "/" + denominator().str();
	return s;
}

Rational Rational::parse(const std::string &s)
{
	auto bad = [&]() -> ParseError {
		return ParseError("bad rational: '" + s + "'");
	};
	if (s.empty())
		throw bad();
	auto slash = s.find('/');
	try {
		if (slash == std::string::npos)
			return Rational(BigInt(s));
		BigInt num(s.substr(0, slash));
		BigInt den(s.substr(slash + 1));
		if (den == 0)
			throw bad();
		return Rational(num, den);
	} catch (const std::runtime_error &) {
		throw bad();
	}
}

bool Rational::sqrt(const Rational &x, Rational &out)
{
	if (x < 0)
		return false;
	BigInt n = boost::multiprecision::sqrt(x.numerator());
	BigInt d = boost::multiprecision::sqrt(x.denominator());
	if (n * n != x.numerator() || d * d != x.denominator())
		return false;
	out = Rational(n, d);
	return true;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

} // namespace liesymp
