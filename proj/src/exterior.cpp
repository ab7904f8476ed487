#include "liesymp/exterior.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace liesymp {

size_t binomial(int n, int k)
{
	if (k < 0 || k > n)
		return 0;
	size_t r = 1;
	for (int i = 0; i < k; ++i)
		r = r * (size_t)(n - i) / (size_t)(i + 1);
	return r;
}

std::vector<MultiIndex> multi_indices(int n, int k)
{
	std::vector<MultiIndex> out;
	if (k < 0 || k > n)
		return out;
	MultiIndex cur(k);
	// lexicographic enumeration of k-subsets of {1..n}
	std::function<void(int, int)> rec = [&](int pos, int start) {
		if (pos == k) {
			out.push_back(cur);
			return;
		}
		for (int v = start; v <= n - (k - pos - 1); ++v) {
			cur[pos] = v;
			rec(pos + 1, v + 1);
		}
	};
	rec(0, 1);
	return out;
}

size_t multi_index_rank(int n, const MultiIndex &mi)
{
	// number of k-subsets lexicographically before mi
	size_t rank = 0;
	int k = (int)mi.size();
	int prev = 0;
	for (int pos = 0; pos < k; ++pos) {
		for (int v = prev + 1; v < mi[pos]; ++v)
			rank += binomial(n - v, k - pos - 1);
		prev = mi[pos];
	}
	return rank;
}

int sort_sign(MultiIndex &idx)
{
	int sign = 1;
	for (size_t i = 1; i < idx.size(); ++i) {
		size_t j = i;
		while (j > 0 && idx[j - 1] > idx[j]) {
			std::swap(idx[j - 1], idx[j]);
			sign = -sign;
			--j;
		}
	}
	for (size_t i = 1; i < idx.size(); ++i)
		if (idx[i - 1] == idx[i])
			return 0;
	return sign;
}

KForm::KForm(int degree, int ambient_dim)
    : degree_(degree), ambient_(ambient_dim)
{
	if (degree < 0 || ambient_dim < 0 || degree > ambient_dim)
		throw DimMismatch("KForm: bad degree/dimension");
}

KForm KForm::basis(int ambient_dim, const MultiIndex &mi)
{
	KForm w((int)mi.size(), ambient_dim);
	w.set(mi, Poly(1));
	return w;
}

bool KForm::has_constant_coeffs() const
{
	for (auto &[mi, c] : coeffs_)
		if (!c.is_constant())
			return false;
	return true;
}

void KForm::set(const MultiIndex &mi, Poly c)
{
	if ((int)mi.size() != degree_)
		throw DimMismatch("KForm: index degree");
	for (size_t i = 0; i < mi.size(); ++i) {
		if (mi[i] < 1 || mi[i] > ambient_)
			throw DimMismatch("KForm: index out of range");
		if (i && mi[i - 1] >= mi[i])
			throw DimMismatch("KForm: index not increasing");
	}
	if (c.is_zero())
		coeffs_.erase(mi);
	else
		coeffs_[mi] = std::move(c);
}

void KForm::add(const MultiIndex &mi, const Poly &c)
{
	if (c.is_zero())
		return;
	auto it = coeffs_.find(mi);
	if (it == coeffs_.end()) {
		set(mi, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		coeffs_.erase(it);
}

Poly KForm::coeff(const MultiIndex &mi) const
{
	auto it = coeffs_.find(mi);
	return it == coeffs_.end() ? Poly() : it->second;
}

KForm KForm::operator-() const
{
	KForm r = *this;
	for (auto &[mi, c] : r.coeffs_)
		c = -c;
	return r;
}

KForm &KForm::operator+=(const KForm &o)
{
	if (degree_ != o.degree_ || ambient_ != o.ambient_)
		throw DimMismatch("KForm: sum degree/dimension");
	for (auto &[mi, c] : o.coeffs_)
		add(mi, c);
	return *this;
}

KForm &KForm::operator-=(const KForm &o)
{
	if (degree_ != o.degree_ || ambient_ != o.ambient_)
		throw DimMismatch("KForm: diff degree/dimension");
	for (auto &[mi, c] : o.coeffs_)
		add(mi, -c);
	return *this;
}

KForm &KForm::operator*=(const Poly &c)
{
	if (c.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto &[mi, coeff] : coeffs_)
		coeff = coeff * c;
	return *this;
}

Vec KForm::to_vec() const
{
	Vec v(binomial(ambient_, degree_));
	for (auto &[mi, c] : coeffs_)
		v[multi_index_rank(ambient_, mi)] = c.constant_value();
	return v;
}

KForm KForm::from_vec(int degree, int ambient_dim, const Vec &v)
{
	auto mis = multi_indices(ambient_dim, degree);
	if (v.size() != mis.size())
		throw DimMismatch("KForm: coefficient vector size");
	KForm w(degree, ambient_dim);
	for (size_t i = 0; i < mis.size(); ++i)
		if (!v[i].is_zero())
			w.set(mis[i], Poly(v[i]));
	return w;
}

Poly KForm::evaluate(const std::vector<Vec> &vectors) const
{
	if ((int)vectors.size() != degree_)
		throw DimMismatch("KForm: evaluate arity");
	for (auto &v : vectors)
		if ((int)v.size() != ambient_)
			throw DimMismatch("KForm: evaluate vector size");
	Poly total;
	for (auto &[mi, c] : coeffs_) {
		// det of the k x k matrix with rows (v_r restricted to mi)
		Mat m(degree_, degree_);
		for (int r = 0; r < degree_; ++r)
			for (int s = 0; s < degree_; ++s)
				m(r, s) = vectors[r][mi[s] - 1];
		total += c * Poly(m.det());
	}
	return total;
}

KForm KForm::subst(const std::map<std::string, Rational> &assignment) const
{
	KForm r(degree_, ambient_);
	for (auto &[mi, c] : coeffs_)
		r.add(mi, c.subst(assignment));
	return r;
}

KForm wedge(const KForm &a, const KForm &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimMismatch("wedge: ambient dimension mismatch");
	int n = a.ambient_dim();
	int k = a.degree() + b.degree();
	if (k > n)
		return KForm(std::min(k, n), n); // zero form
	KForm r(k, n);
	for (auto &[ma, ca] : a.coeffs()) {
		for (auto &[mb, cb] : b.coeffs()) {
			MultiIndex m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			int s = sort_sign(m);
			if (s == 0)
				continue;
			Poly c = ca * cb;
			if (s < 0)
				c = -c;
			r.add(m, c);
		}
	}
	return r;
}

KForm power(const KForm &w, int m)
{
	if (m < 0)
		throw Error("power: negative exponent");
	if (w.degree() * m > w.ambient_dim())
		throw DimMismatch("power: degree exceeds ambient dimension");
	KForm r(0, w.ambient_dim());
	r.set({}, Poly(1));
	for (int i = 0; i < m; ++i)
		r = wedge(r, w);
	return r;
}

std::string KForm::str() const
{
	if (coeffs_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[mi, c] : coeffs_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		for (size_t i = 0; i < mi.size(); ++i)
			os << (i ? "^e" : "*e") << mi[i];
		if (mi.empty())
			os << "*1";
	}
	return os.str();
}

std::ostream &operator<<(std::ostream &os, const KForm &w)
{
	return os << w.str();
}

} // namespace liesymp
