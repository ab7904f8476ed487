#pragma once

#include "liesymp/linalg.hpp"
#include "liesymp/poly.hpp"

#include <map>
#include <vector>

namespace liesymp {

// strictly increasing 1-based basis indices, length = form degree
using MultiIndex = std::vector<int>;

// all C(n,k) multi-indices of degree k in lexicographic order
std::vector<MultiIndex> multi_indices(int n, int k);
// position of `mi` in multi_indices(n, k)
size_t multi_index_rank(int n, const MultiIndex &mi);
size_t binomial(int n, int k);

// Element of Lambda^k of the dual of an n-dimensional space, with Poly
// coefficients in the fixed dual basis e^1..e^n. Evaluation follows the
// determinant convention: (e^{i1} ^ ... ^ e^{ik})(e_{i1},...,e_{ik}) = 1.
class KForm {
public:
	KForm() = default;
	KForm(int degree, int ambient_dim);
	static KForm basis(int ambient_dim, const MultiIndex &mi); // e^{i1..ik}
	static KForm zero(int degree, int ambient_dim)
	{
		return KForm(degree, ambient_dim);
	}

	int degree() const { return degree_; }
	int ambient_dim() const { return ambient_; }
	const std::map<MultiIndex, Poly> &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	bool has_constant_coeffs() const;

	void set(const MultiIndex &mi, Poly c);
	void add(const MultiIndex &mi, const Poly &c);
	Poly coeff(const MultiIndex &mi) const;

	KForm operator-() const;
	KForm &operator+=(const KForm &o);
	KForm &operator-=(const KForm &o);
	friend KForm operator+(KForm a, const KForm &b) { return a += b; }
	friend KForm operator-(KForm a, const KForm &b) { return a -= b; }
	KForm &operator*=(const Poly &c);
	friend KForm operator*(const Poly &c, KForm a) { return a *= c; }
	friend KForm operator*(const Rational &c, KForm a)
	{
		return a *= Poly(c);
	}
	friend bool operator==(const KForm &a, const KForm &b)
	{
		return a.degree_ == b.degree_ && a.ambient_ == b.ambient_ &&
		       a.coeffs_ == b.coeffs_;
	}
	friend bool operator!=(const KForm &a, const KForm &b)
	{
		return !(a == b);
	}

	// coefficient vector in the multi_indices(n, k) basis (constant
	// coefficients only)
	Vec to_vec() const;
	static KForm from_vec(int degree, int ambient_dim, const Vec &v);

	// value on a tuple of coordinate vectors (degree many)
	Poly evaluate(const std::vector<Vec> &vectors) const;

	// substitute values for polynomial variables in all coefficients
	KForm subst(const std::map<std::string, Rational> &assignment) const;

	std::string str() const;

private:
	int degree_ = 0;
	int ambient_ = 0;
	std::map<MultiIndex, Poly> coeffs_;
};

KForm wedge(const KForm &a, const KForm &b);
KForm power(const KForm &w, int m);

// sort `idx` ascending; returns the sign of the permutation, or 0 if an
// index repeats
int sort_sign(MultiIndex &idx);

std::ostream &operator<<(std::ostream &os, const KForm &w);

} // namespace liesymp
