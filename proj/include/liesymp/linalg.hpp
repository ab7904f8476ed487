#pragma once

#include "liesymp/rational.hpp"

#include <initializer_list>
#include <vector>

namespace liesymp {

using Vec = std::vector<Rational>;

// Dense matrix over Rational, row-major.
class Mat {
public:
	Mat() = default;
	Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols)
	{}
	Mat(std::initializer_list<std::initializer_list<Rational>> rows);
	static Mat identity(size_t n);
	static Mat from_rows(const std::vector<Vec> &rows);
	static Mat from_cols(const std::vector<Vec> &cols);

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }
	Rational &operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
	const Rational &operator()(size_t i, size_t j) const
	{
		return a_[i * cols_ + j];
	}
	Vec row(size_t i) const;
	Vec col(size_t j) const;

	Mat transposed() const;
	friend Mat operator*(const Mat &a, const Mat &b);
	friend Mat operator+(const Mat &a, const Mat &b);
	friend Mat operator-(const Mat &a, const Mat &b);
	Mat operator-() const;
	Mat &operator*=(const Rational &c);
	friend Mat operator*(const Rational &c, Mat a) { return a *= c; }
	Vec apply(const Vec &v) const; // matrix * column vector
	friend bool operator==(const Mat &a, const Mat &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
	}

	bool is_zero() const;
	Rational trace() const;
	Rational det() const;
	bool inverse(Mat &out) const; // false if singular
	size_t rank() const;

	// in-place reduced row echelon form; returns pivot columns
	std::vector<size_t> rref();

	// basis of the null space {x : A x = 0}
	std::vector<Vec> kernel() const;

	// one solution of A x = b; false if inconsistent
	bool solve(const Vec &b, Vec &x) const;

	// characteristic polynomial coefficients c[0..n], c[n] = 1 (Faddeev-
	// LeVerrier, exact)
	std::vector<Rational> char_poly() const;

	bool is_nilpotent() const;
	std::string str() const;

private:
	size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> a_;
};

// vector helpers
Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Rational &c, const Vec &a);
bool is_zero(const Vec &v);
Vec unit_vec(size_t n, size_t i);

// Rational row space in canonical reduced echelon form. Two equal subspaces
// have byte-identical basis matrices.
class Subspace {
public:
	Subspace() = default;
	explicit Subspace(size_t ambient) : ambient_(ambient) {}
	static Subspace span(size_t ambient, const std::vector<Vec> &vectors);
	static Subspace full(size_t ambient);

	size_t ambient_dim() const { return ambient_; }
	size_t dim() const { return basis_.size(); }
	const std::vector<Vec> &basis() const { return basis_; }

	bool contains(const Vec &v) const;
	bool contains(const Subspace &other) const;
	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
	}
	friend bool operator!=(const Subspace &a, const Subspace &b)
	{
		return !(a == b);
	}
	bool operator<(const Subspace &o) const; // for use as map/set key

	Subspace sum(const Subspace &other) const;
	Subspace intersect(const Subspace &other) const;

	// coordinates of v in the echelon basis; false if v is outside
	bool coordinates(const Vec &v, Vec &coords) const;

	// greedily extend this basis to a basis of the ambient space; returns
	// only the new vectors (unit vectors)
	std::vector<Vec> complement_basis() const;

	std::string str() const;

private:
	size_t ambient_ = 0;
	std::vector<Vec> basis_; // canonical RREF rows, no zero rows
};

} // namespace liesymp
