#include "liesymp/linalg.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liesymp {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows)
{
	rows_ = rows.size();
	cols_ = rows_ ? rows.begin()->size() : 0;
	a_.reserve(rows_ * cols_);
	for (auto &r : rows) {
		if (r.size() != cols_)
			throw DimMismatch("Mat: ragged initializer");
		for (auto &x : r)
			a_.push_back(x);
	}
}

Mat Mat::identity(size_t n)
{
	Mat m(n, n);
	for (size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows)
{
	Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
	for (size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != m.cols_)
			throw DimMismatch("Mat: ragged rows");
		for (size_t j = 0; j < m.cols_; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

Mat Mat::from_cols(const std::vector<Vec> &cols)
{
	Mat m(cols.empty() ? 0 : cols[0].size(), cols.size());
	for (size_t j = 0; j < cols.size(); ++j) {
		if (cols[j].size() != m.rows_)
			throw DimMismatch("Mat: ragged cols");
		for (size_t i = 0; i < m.rows_; ++i)
			m(i, j) = cols[j][i];
	}
	return m;
}

Vec Mat::row(size_t i) const
{
	Vec v(cols_);
	for (size_t j = 0; j < cols_; ++j)
		v[j] = (*this)(i, j);
	return v;
}

Vec Mat::col(size_t j) const
{
	Vec v(rows_);
	for (size_t i = 0; i < rows_; ++i)
		v[i] = (*this)(i, j);
	return v;
}

Mat Mat::transposed() const
{
	Mat t(cols_, rows_);
	for (size_t i = 0; i < rows_; ++i)
		for (size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

Mat operator*(const Mat &a, const Mat &b)
{
	if (a.cols_ != b.rows_)
		throw DimMismatch("Mat: product shape");
	Mat c(a.rows_, b.cols_);
	for (size_t i = 0; i < a.rows_; ++i)
		for (size_t k = 0; k < a.cols_; ++k) {
			const Rational &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (size_t j = 0; j < b.cols_; ++j)
				c(i, j) += aik * b(k, j);
		}
	return c;
}

Mat operator+(const Mat &a, const Mat &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw DimMismatch("Mat: sum shape");
	Mat c = a;
	for (size_t i = 0; i < c.a_.size(); ++i)
		c.a_[i] += b.a_[i];
	return c;
}

Mat operator-(const Mat &a, const Mat &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw DimMismatch("Mat: diff shape");
	Mat c = a;
	for (size_t i = 0; i < c.a_.size(); ++i)
		c.a_[i] -= b.a_[i];
	return c;
}

Mat Mat::operator-() const
{
	Mat c = *this;
	for (auto &x : c.a_)
		x = -x;
	return c;
}

Mat &Mat::operator*=(const Rational &c)
{
	for (auto &x : a_)
		x *= c;
	return *this;
}

Vec Mat::apply(const Vec &v) const
{
	if (v.size() != cols_)
		throw DimMismatch("Mat: apply shape");
	Vec r(rows_);
	for (size_t i = 0; i < rows_; ++i)
		for (size_t j = 0; j < cols_; ++j)
			if (!(*this)(i, j).is_zero())
				r[i] += (*this)(i, j) * v[j];
	return r;
}

bool Mat::is_zero() const
{
	return std::all_of(a_.begin(), a_.end(),
	                   [](const Rational &x) { return x.is_zero(); });
}

Rational Mat::trace() const
{
	Rational t(0);
	for (size_t i = 0; i < std::min(rows_, cols_); ++i)
		t += (*this)(i, i);
	return t;
}

std::vector<size_t> Mat::rref()
{
	std::vector<size_t> pivots;
	size_t r = 0;
	for (size_t c = 0; c < cols_ && r < rows_; ++c) {
		size_t p = r;
		while (p < rows_ && (*this)(p, c).is_zero())
			++p;
		if (p == rows_)
			continue;
		if (p != r)
			for (size_t j = 0; j < cols_; ++j)
				std::swap((*this)(p, j), (*this)(r, j));
		Rational inv = Rational(1) / (*this)(r, c);
		for (size_t j = 0; j < cols_; ++j)
			(*this)(r, j) *= inv;
		for (size_t i = 0; i < rows_; ++i) {
			if (i == r || (*this)(i, c).is_zero())
				continue;
			Rational f = (*this)(i, c);
			for (size_t j = 0; j < cols_; ++j)
				(*this)(i, j) -= f * (*this)(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

size_t Mat::rank() const
{
	Mat m = *this;
	return m.rref().size();
}

Rational Mat::det() const
{
	if (rows_ != cols_)
		throw DimMismatch("Mat: det of non-square");
	Mat m = *this;
	Rational d(1);
	for (size_t c = 0; c < cols_; ++c) {
		size_t p = c;
		while (p < rows_ && m(p, c).is_zero())
			++p;
		if (p == rows_)
			return Rational(0);
		if (p != c) {
			for (size_t j = 0; j < cols_; ++j)
				std::swap(m(p, j), m(c, j));
			d = -d;
		}
		d *= m(c, c);
		Rational inv = Rational(1) / m(c, c);
		for (size_t i = c + 1; i < rows_; ++i) {
			if (m(i, c).is_zero())
				continue;
			Rational f = m(i, c) * inv;
			for (size_t j = c; j < cols_; ++j)
				m(i, j) -= f * m(c, j);
		}
	}
	return d;
}

bool Mat::inverse(Mat &out) const
{
	if (rows_ != cols_)
		throw DimMismatch("Mat: inverse of non-square");
	Mat aug(rows_, 2 * cols_);
	for (size_t i = 0; i < rows_; ++i) {
		for (size_t j = 0; j < cols_; ++j)
			aug(i, j) = (*this)(i, j);
		aug(i, cols_ + i) = 1;
	}
	auto piv = aug.rref();
	if (piv.size() != rows_ || piv.back() >= cols_)
		return false;
	out = Mat(rows_, cols_);
	for (size_t i = 0; i < rows_; ++i)
		for (size_t j = 0; j < cols_; ++j)
			out(i, j) = aug(i, cols_ + j);
	return true;
}

std::vector<Vec> Mat::kernel() const
{
	Mat m = *this;
	auto pivots = m.rref();
	std::vector<bool> is_pivot(cols_, false);
	for (auto c : pivots)
		is_pivot[c] = true;
	std::vector<Vec> basis;
	for (size_t free = 0; free < cols_; ++free) {
		if (is_pivot[free])
			continue;
		Vec v(cols_);
		v[free] = 1;
		for (size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -m(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

bool Mat::solve(const Vec &b, Vec &x) const
{
	if (b.size() != rows_)
		throw DimMismatch("Mat: solve shape");
	Mat aug(rows_, cols_ + 1);
	for (size_t i = 0; i < rows_; ++i) {
		for (size_t j = 0; j < cols_; ++j)
			aug(i, j) = (*this)(i, j);
		aug(i, cols_) = b[i];
	}
	auto piv = aug.rref();
	if (!piv.empty() && piv.back() == cols_)
		return false;
	x.assign(cols_, Rational(0));
	for (size_t r = 0; r < piv.size(); ++r)
		x[piv[r]] = aug(r, cols_);
	return true;
}

std::vector<Rational> Mat::char_poly() const
{
	if (rows_ != cols_)
		throw DimMismatch("Mat: char_poly of non-square");
	size_t n = rows_;
	// Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
	// M_{k+1} = A (M_k + c_{n-k} I)
	std::vector<Rational> c(n + 1);
	c[n] = 1;
	Mat M = *this;
	for (size_t k = 1; k <= n; ++k) {
		Rational ck = -M.trace() / Rational((long long)k);
		c[n - k] = ck;
		if (k < n) {
			for (size_t i = 0; i < n; ++i)
				M(i, i) += ck;
			M = (*this) * M;
		}
	}
	return c;
}

bool Mat::is_nilpotent() const
{
	auto c = char_poly();
	for (size_t i = 0; i + 1 < c.size(); ++i)
		if (!c[i].is_zero())
			return false;
	return true;
}

std::string Mat::str() const
{
	std::ostringstream os;
	for (size_t i = 0; i < rows_; ++i) {
		os << "[";
		for (size_t j = 0; j < cols_; ++j)
			os << (j ? " " : "") << (*this)(i, j);
		os << "]" << (i + 1 < rows_ ? "\n" : "");
	}
	return os.str();
}

Vec operator+(const Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw DimMismatch("Vec: sum");
	Vec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

Vec operator-(const Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw DimMismatch("Vec: diff");
	Vec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Vec operator*(const Rational &c, const Vec &a)
{
	Vec r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = c * a[i];
	return r;
}

bool is_zero(const Vec &v)
{
	return std::all_of(v.begin(), v.end(),
	                   [](const Rational &x) { return x.is_zero(); });
}

Vec unit_vec(size_t n, size_t i)
{
	Vec v(n);
	v[i] = 1;
	return v;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec> &vectors)
{
	Subspace s(ambient);
	if (vectors.empty())
		return s;
	Mat m = Mat::from_rows(vectors);
	if (m.cols() != ambient)
		throw DimMismatch("Subspace: ambient mismatch");
	size_t r = m.rref().size();
	for (size_t i = 0; i < r; ++i)
		s.basis_.push_back(m.row(i));
	return s;
}

Subspace Subspace::full(size_t ambient)
{
	Subspace s(ambient);
	for (size_t i = 0; i < ambient; ++i)
		s.basis_.push_back(unit_vec(ambient, i));
	return s;
}

bool Subspace::contains(const Vec &v) const
{
	if (v.size() != ambient_)
		throw DimMismatch("Subspace: contains");
	Vec w = v;
	for (const auto &b : basis_) {
		size_t p = 0;
		while (p < ambient_ && b[p].is_zero())
			++p;
		if (p < ambient_ && !w[p].is_zero()) {
			Rational f = w[p]; // pivot coefficient is 1
			for (size_t j = 0; j < ambient_; ++j)
				w[j] -= f * b[j];
		}
	}
	return is_zero(w);
}

bool Subspace::contains(const Subspace &other) const
{
	for (const auto &b : other.basis_)
		if (!contains(b))
			return false;
	return true;
}

bool Subspace::operator<(const Subspace &o) const
{
	if (ambient_ != o.ambient_)
		return ambient_ < o.ambient_;
	return basis_ < o.basis_;
}

Subspace Subspace::sum(const Subspace &other) const
{
	if (ambient_ != other.ambient_)
		throw DimMismatch("Subspace: sum ambient");
	std::vector<Vec> all = basis_;
	all.insert(all.end(), other.basis_.begin(), other.basis_.end());
	return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace &other) const
{
	if (ambient_ != other.ambient_)
		throw DimMismatch("Subspace: intersect ambient");
	// x in U cap W  <=>  x = sum a_i u_i = sum b_j w_j; solve for (a, b)
	size_t du = dim(), dw = other.dim();
	if (du == 0 || dw == 0)
		return Subspace(ambient_);
	Mat m(ambient_, du + dw);
	for (size_t i = 0; i < du; ++i)
		for (size_t r = 0; r < ambient_; ++r)
			m(r, i) = basis_[i][r];
	for (size_t j = 0; j < dw; ++j)
		for (size_t r = 0; r < ambient_; ++r)
			m(r, du + j) = -other.basis_[j][r];
	std::vector<Vec> vecs;
	for (const auto &k : m.kernel()) {
		Vec v(ambient_);
		for (size_t i = 0; i < du; ++i)
			v = v + k[i] * basis_[i];
		vecs.push_back(v);
	}
	return span(ambient_, vecs);
}

bool Subspace::coordinates(const Vec &v, Vec &coords) const
{
	Mat m = Mat::from_rows(basis_).transposed();
	return m.solve(v, coords);
}

std::vector<Vec> Subspace::complement_basis() const
{
	std::vector<Vec> extra;
	Subspace cur = *this;
	for (size_t i = 0; i < ambient_ && cur.dim() < ambient_; ++i) {
		Vec e = unit_vec(ambient_, i);
		if (!cur.contains(e)) {
			extra.push_back(e);
			std::vector<Vec> all = cur.basis_;
			all.push_back(e);
			cur = span(ambient_, all);
		}
	}
	return extra;
}

std::string Subspace::str() const
{
	std::ostringstream os;
	os << "span{";
	for (size_t i = 0; i < basis_.size(); ++i) {
		os << (i ? "; " : "");
		for (size_t j = 0; j < ambient_; ++j)
			os << (j ? "," : "(") << basis_[i][j];
		os << ")";
	}
	os << "}";
	return os.str();
}

} // namespace liesymp
