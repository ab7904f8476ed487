#include "liesymp/poly.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace liesymp {

Poly Poly::var(const std::string &name, int exp)
{
	Poly p;
	if (exp < 0)
		throw Error("Poly: negative exponent");
	if (exp == 0)
		return Poly(1);
	p.terms_[Monomial{{name, exp}}] = Rational(1);
	return p;
}

Rational Poly::constant_value() const
{
	if (terms_.empty())
		return Rational(0);
	if (!is_constant())
		throw Error("Poly: not a constant: " + str());
	return terms_.begin()->second;
}

int Poly::total_degree() const
{
	int d = 0;
	for (auto &[m, c] : terms_) {
		int t = 0;
		for (auto &[v, e] : m)
			t += e;
		d = std::max(d, t);
	}
	return d;
}

std::vector<std::string> Poly::vars() const
{
	std::set<std::string> s;
	for (auto &[m, c] : terms_)
		for (auto &[v, e] : m)
			s.insert(v);
	return {s.begin(), s.end()};
}

void Poly::add_term(const Monomial &m, const Rational &c)
{
	auto it = terms_.find(m);
	if (it == terms_.end()) {
		if (!c.is_zero())
			terms_.emplace(m, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

Poly &Poly::operator+=(const Poly &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
	Poly r;
	for (auto &[ma, ca] : a.terms_) {
		for (auto &[mb, cb] : b.terms_) {
			Monomial m = ma;
			for (auto &[v, e] : mb)
				m[v] += e;
			r.add_term(m, ca * cb);
		}
	}
	return r;
}

Poly &Poly::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, coeff] : terms_)
		coeff *= c;
	return *this;
}

Poly &Poly::operator/=(const Rational &c)
{
	if (c.is_zero())
		throw Error("Poly: division by zero");
	for (auto &[m, coeff] : terms_)
		coeff /= c;
	return *this;
}

Rational Poly::eval(const std::map<std::string, Rational> &assignment) const
{
	Rational sum(0);
	for (auto &[m, c] : terms_) {
		Rational t = c;
		for (auto &[v, e] : m) {
			auto it = assignment.find(v);
			if (it == assignment.end())
				throw MissingAssignment("poly_eval: no value for '" + v + "'");
			for (int k = 0; k < e; ++k)
				t *= it->second;
		}
		sum += t;
	}
	return sum;
}

Poly Poly::subst(const std::map<std::string, Rational> &assignment) const
{
	Poly r;
	for (auto &[m, c] : terms_) {
		Rational coeff = c;
		Monomial rest;
		for (auto &[v, e] : m) {
			auto it = assignment.find(v);
			if (it == assignment.end()) {
				rest[v] = e;
				continue;
			}
			for (int k = 0; k < e; ++k)
				coeff *= it->second;
		}
		r.add_term(rest, coeff);
	}
	return r;
}

std::pair<Monomial, Rational> Poly::leading() const
{
	if (terms_.empty())
		throw Error("Poly: leading term of zero");
	return *terms_.rbegin();
}

bool Poly::proportional(const Poly &p, const Poly &q, Rational &unit)
{
	if (q.is_zero() || p.is_zero())
		return false;
	if (p.terms_.size() != q.terms_.size())
		return false;
	Rational c = p.leading().second / q.leading().second;
	auto ip = p.terms_.begin();
	auto iq = q.terms_.begin();
	for (; ip != p.terms_.end(); ++ip, ++iq) {
		if (ip->first != iq->first || ip->second != c * iq->second)
			return false;
	}
	unit = c;
	return true;
}

static void print_monomial(std::ostream &os, const Monomial &m)
{
	bool first = true;
	for (auto &[v, e] : m) {
		if (!first)
			os << "*";
		first = false;
		os << v;
		if (e != 1)
			os << "^" << e;
	}
}

std::string Poly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	// print highest monomial first
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const auto &[m, c] = *it;
		Rational a = c;
		if (first) {
			if (a < 0) {
				os << "-";
				a = -a;
			}
		} else {
			os << (a < 0 ? " - " : " + ");
			if (a < 0)
				a = -a;
		}
		first = false;
		if (m.empty()) {
			os << a.str();
		} else {
			if (a != Rational(1))
				os << a.str() << "*";
			print_monomial(os, m);
		}
	}
	return os.str();
}

std::ostream &operator<<(std::ostream &os, const Poly &p)
{
	return os << p.str();
}

Rational poly_eval(const Poly &p,
                   const std::map<std::string, Rational> &assignment)
{
	return p.eval(assignment);
}

} // namespace liesymp
