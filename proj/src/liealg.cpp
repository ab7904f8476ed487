#include "liesymp/liealg.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liesymp {

LieAlgebra::LieAlgebra(int dim, const std::vector<Entry> &entries,
                       std::vector<std::string> labels)
    : n_(dim), labels_(std::move(labels))
{
	if (dim < 0)
		throw Error("LieAlgebra: negative dimension");
	brackets_.assign(n_, std::vector<Vec>(n_));
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			brackets_[i][j] = Vec(n_, Rational(0));
	for (const auto &e : entries) {
		if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > n_ || e.j > n_ ||
		    e.k > n_ || e.i >= e.j)
			throw Error("LieAlgebra: bad structure constant indices");
		brackets_[e.i - 1][e.j - 1][e.k - 1] += e.c;
	}
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j)
			for (int k = 0; k < n_; ++k)
				brackets_[j][i][k] = -brackets_[i][j][k];
	check_jacobi();
}

void LieAlgebra::check_jacobi() const
{
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j)
			for (int l = j + 1; l < n_; ++l) {
				Vec s = bracket(brackets_[i][j], unit_vec(n_, l));
				s = s + bracket(brackets_[j][l], unit_vec(n_, i));
				s = s + bracket(brackets_[l][i], unit_vec(n_, j));
				if (!is_zero(s))
					throw NotALieAlgebra(
					    "Jacobi identity fails on basis triple (" +
					        std::to_string(i + 1) + "," + std::to_string(j + 1) +
					        "," + std::to_string(l + 1) + ")",
					    {i + 1, j + 1, l + 1});
			}
}

Vec LieAlgebra::bracket(const Vec &x, const Vec &y) const
{
	if ((int)x.size() != n_ || (int)y.size() != n_)
		throw DimMismatch("LieAlgebra: bracket vector size");
	Vec r(n_);
	for (int i = 0; i < n_; ++i) {
		if (x[i].is_zero())
			continue;
		for (int j = 0; j < n_; ++j) {
			if (y[j].is_zero() || i == j)
				continue;
			Rational f = x[i] * y[j];
			const Vec &b = brackets_[i][j];
			for (int k = 0; k < n_; ++k)
				if (!b[k].is_zero())
					r[k] += f * b[k];
		}
	}
	return r;
}

Vec LieAlgebra::bracket_basis(int i, int j) const
{
	return brackets_.at(i - 1).at(j - 1);
}

Mat LieAlgebra::ad(const Vec &x) const
{
	Mat m(n_, n_);
	for (int j = 0; j < n_; ++j) {
		Vec col = bracket(x, unit_vec(n_, j));
		for (int i = 0; i < n_; ++i)
			m(i, j) = col[i];
	}
	return m;
}

Mat LieAlgebra::ad_basis(int i) const { return ad(unit_vec(n_, i - 1)); }

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const
{
	std::vector<Entry> es;
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j)
			for (int k = 0; k < n_; ++k)
				if (!brackets_[i][j][k].is_zero())
					es.push_back({i + 1, j + 1, k + 1, brackets_[i][j][k]});
	return es;
}

LieAlgebra LieAlgebra::conjugate(const Mat &P) const
{
	if ((int)P.rows() != n_ || (int)P.cols() != n_)
		throw DimMismatch("conjugate: matrix size");
	Mat Pinv;
	if (!P.inverse(Pinv))
		throw SingularMap("conjugate: singular change of basis");
	std::vector<Entry> es;
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j) {
			Vec b = Pinv.apply(bracket(P.col(i), P.col(j)));
			for (int k = 0; k < n_; ++k)
				if (!b[k].is_zero())
					es.push_back({i + 1, j + 1, k + 1, b[k]});
		}
	return LieAlgebra(n_, es);
}

LieAlgebra from_structure_constants(int n,
                                    const std::vector<LieAlgebra::Entry> &es)
{
	return LieAlgebra(n, es);
}

// ---- catalog ----------------------------------------------------------------

const std::vector<Family> &all_families()
{
	static const std::vector<Family> fams = {
	    Family::R4,       Family::rh3,    Family::rr3,  Family::rr3_lam,
	    Family::rr3p_gam, Family::r2r2,   Family::r2p,  Family::n4,
	    Family::r4,       Family::r4_mu,  Family::r4_ab, Family::r4p_gd,
	    Family::d4,       Family::d4_lam, Family::d4p_del, Family::h4,
	};
	return fams;
}

std::string family_name(Family f)
{
	switch (f) {
	case Family::R4: return "R4";
	case Family::rh3: return "rh3";
	case Family::rr3: return "rr3";
	case Family::rr3_lam: return "rr3_lam";
	case Family::rr3p_gam: return "rr3p_gam";
	case Family::r2r2: return "r2r2";
	case Family::r2p: return "r2p";
	case Family::n4: return "n4";
	case Family::r4: return "r4";
	case Family::r4_mu: return "r4_mu";
	case Family::r4_ab: return "r4_ab";
	case Family::r4p_gd: return "r4p_gd";
	case Family::d4: return "d4";
	case Family::d4_lam: return "d4_lam";
	case Family::d4p_del: return "d4p_del";
	case Family::h4: return "h4";
	}
	throw Error("unknown family");
}

size_t family_param_count(Family f)
{
	switch (f) {
	case Family::rr3_lam:
	case Family::rr3p_gam:
	case Family::r4_mu:
	case Family::d4_lam:
	case Family::d4p_del:
		return 1;
	case Family::r4_ab:
	case Family::r4p_gd:
		return 2;
	default:
		return 0;
	}
}

std::string CatalogId::str() const
{
	std::string s = family_name(family);
	for (size_t i = 0; i < params.size(); ++i)
		s += (i ? "," : ":") + params[i].str();
	return s;
}

CatalogId CatalogId::parse(const std::string &s)
{
	auto colon = s.find(':');
	std::string name = s.substr(0, colon);
	CatalogId id{Family::R4, {}};
	bool found = false;
	for (Family f : all_families())
		if (family_name(f) == name) {
			id.family = f;
			found = true;
			break;
		}
	if (!found)
		throw InvalidParameter("unknown catalog family '" + name + "'");
	if (colon != std::string::npos) {
		std::string rest = s.substr(colon + 1);
		size_t pos = 0;
		while (pos <= rest.size()) {
			auto comma = rest.find(',', pos);
			std::string tok = rest.substr(
			    pos, comma == std::string::npos ? std::string::npos
			                                    : comma - pos);
			id.params.push_back(Rational::parse(tok));
			if (comma == std::string::npos)
				break;
			pos = comma + 1;
		}
	}
	if (id.params.size() != family_param_count(id.family))
		throw InvalidParameter("catalog family '" + name + "' takes " +
		                       std::to_string(family_param_count(id.family)) +
		                       " parameter(s)");
	return id;
}

LieAlgebra catalog(const CatalogId &id)
{
	using E = LieAlgebra::Entry;
	const auto &p = id.params;
	if (p.size() != family_param_count(id.family))
		throw InvalidParameter("catalog: wrong parameter count for " +
		                       family_name(id.family));
	auto reject = [&](const std::string &why) {
		throw InvalidParameter("catalog " + id.str() + ": " + why);
	};
	const Rational one(1), half(1, 2);
	switch (id.family) {
	case Family::R4:
		return LieAlgebra(4, {});
	case Family::rh3:
		return LieAlgebra(4, {E{1, 2, 3, one}});
	case Family::rr3:
		return LieAlgebra(4, {E{1, 2, 2, one}, E{1, 3, 2, one},
		                      E{1, 3, 3, one}});
	case Family::rr3_lam: {
		if (p[0] < Rational(-1) || p[0] > one)
			reject("lambda must lie in [-1,1]");
		return LieAlgebra(4, {E{1, 2, 2, one}, E{1, 3, 3, p[0]}});
	}
	case Family::rr3p_gam: {
		if (p[0] < Rational(0))
			reject("gamma must be >= 0");
		return LieAlgebra(4, {E{1, 2, 2, p[0]}, E{1, 2, 3, Rational(-1)},
		                      E{1, 3, 2, one}, E{1, 3, 3, p[0]}});
	}
	case Family::r2r2:
		return LieAlgebra(4, {E{1, 2, 2, one}, E{3, 4, 4, one}});
	case Family::r2p:
		return LieAlgebra(4, {E{1, 3, 3, one}, E{1, 4, 4, one},
		                      E{2, 3, 4, one}, E{2, 4, 3, Rational(-1)}});
	case Family::n4:
		return LieAlgebra(4, {E{1, 4, 2, Rational(-1)},
		                      E{2, 4, 3, Rational(-1)}});
	case Family::r4:
		return LieAlgebra(4, {E{1, 4, 1, Rational(-1)},
		                      E{2, 4, 1, Rational(-1)},
		                      E{2, 4, 2, Rational(-1)},
		                      E{3, 4, 2, Rational(-1)},
		                      E{3, 4, 3, Rational(-1)}});
	case Family::r4_mu: {
		return LieAlgebra(4, {E{1, 4, 1, Rational(-1)}, E{2, 4, 2, -p[0]},
		                      E{3, 4, 2, Rational(-1)}, E{3, 4, 3, -p[0]}});
	}
	case Family::r4_ab: {
		const Rational &a = p[0], &b = p[1];
		bool branch1 = Rational(-1) < a && a <= b && b <= one &&
		               !(a * b).is_zero();
		bool branch2 = a == Rational(-1) && a <= b && b <= Rational(0);
		if (!branch1 && !branch2)
			reject("(alpha,beta) outside admissible ranges");
		return LieAlgebra(4, {E{1, 4, 1, Rational(-1)}, E{2, 4, 2, -a},
		                      E{3, 4, 3, -b}});
	}
	case Family::r4p_gd: {
		const Rational &g = p[0], &d = p[1];
		if (d <= Rational(0))
			reject("delta must be > 0");
		return LieAlgebra(4, {E{1, 4, 1, Rational(-1)}, E{2, 4, 2, -g},
		                      E{2, 4, 3, d}, E{3, 4, 2, -d},
		                      E{3, 4, 3, -g}});
	}
	case Family::d4:
		return LieAlgebra(4, {E{1, 2, 3, one}, E{1, 4, 1, Rational(-1)},
		                      E{2, 4, 2, one}});
	case Family::d4_lam: {
		if (p[0] < half)
			reject("lambda must be >= 1/2");
		return LieAlgebra(4, {E{1, 2, 3, one}, E{3, 4, 3, Rational(-1)},
		                      E{1, 4, 1, -p[0]},
		                      E{2, 4, 2, -(one - p[0])}});
	}
	case Family::d4p_del: {
		const Rational &d = p[0];
		if (d < Rational(0))
			reject("delta must be >= 0");
		return LieAlgebra(4, {E{1, 2, 3, one}, E{1, 4, 1, -d * half},
		                      E{1, 4, 2, one}, E{2, 4, 1, Rational(-1)},
		                      E{2, 4, 2, -d * half}, E{3, 4, 3, -d}});
	}
	case Family::h4:
		return LieAlgebra(4, {E{1, 2, 3, one}, E{3, 4, 3, Rational(-1)},
		                      E{1, 4, 1, -half}, E{2, 4, 1, Rational(-1)},
		                      E{2, 4, 2, -half}});
	}
	throw Error("unknown family");
}

// ---- structural invariants --------------------------------------------------

Subspace bracket_span(const LieAlgebra &g, const Subspace &a,
                      const Subspace &b)
{
	std::vector<Vec> vecs;
	for (const auto &x : a.basis())
		for (const auto &y : b.basis())
			vecs.push_back(g.bracket(x, y));
	return Subspace::span(g.dim(), vecs);
}

Subspace derived_subalgebra(const LieAlgebra &g)
{
	Subspace full = Subspace::full(g.dim());
	return bracket_span(g, full, full);
}

std::vector<Subspace> derived_series(const LieAlgebra &g)
{
	std::vector<Subspace> series{Subspace::full(g.dim())};
	for (;;) {
		Subspace next = bracket_span(g, series.back(), series.back());
		if (next == series.back())
			break;
		series.push_back(next);
		if (next.dim() == 0)
			break;
	}
	return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra &g)
{
	Subspace full = Subspace::full(g.dim());
	std::vector<Subspace> series{full};
	for (;;) {
		Subspace next = bracket_span(g, full, series.back());
		if (next == series.back())
			break;
		series.push_back(next);
		if (next.dim() == 0)
			break;
	}
	return series;
}

Subspace center(const LieAlgebra &g)
{
	// x with [x, e_j] = 0 for all j: stack the ad-columns
	int n = g.dim();
	Mat m(n * n, n);
	for (int j = 0; j < n; ++j) {
		// column of constraints: bracket(x, e_j) = sum_i x_i [e_i, e_j]
		for (int i = 0; i < n; ++i) {
			Vec b = g.bracket(unit_vec(n, i), unit_vec(n, j));
			for (int k = 0; k < n; ++k)
				m(j * n + k, i) = b[k];
		}
	}
	return Subspace::span(n, m.kernel());
}

bool is_abelian(const LieAlgebra &g)
{
	return derived_subalgebra(g).dim() == 0;
}

bool is_nilpotent_algebra(const LieAlgebra &g)
{
	return lower_central_series(g).back().dim() == 0;
}

bool is_solvable(const LieAlgebra &g)
{
	return derived_series(g).back().dim() == 0;
}

bool is_unimodular(const LieAlgebra &g)
{
	for (int i = 1; i <= g.dim(); ++i)
		if (!g.ad_basis(i).trace().is_zero())
			return false;
	return true;
}

bool is_ideal(const LieAlgebra &g, const Subspace &w)
{
	return w.contains(bracket_span(g, Subspace::full(g.dim()), w));
}

bool is_subalgebra(const LieAlgebra &g, const Subspace &w)
{
	return w.contains(bracket_span(g, w, w));
}

std::vector<Mat> derivations(const LieAlgebra &g)
{
	int n = g.dim();
	// unknowns D(r,c) indexed r*n + c
	std::vector<Vec> rows;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			Vec bij = g.bracket(unit_vec(n, i), unit_vec(n, j));
			// D[e_i,e_j] - [De_i, e_j] - [e_i, De_j] = 0, one row per
			// component k
			for (int k = 0; k < n; ++k) {
				Vec row(n * n, Rational(0));
				// D applied to bij: component k = sum_c D(k,c) bij[c]
				for (int c = 0; c < n; ++c)
					row[k * n + c] += bij[c];
				// [De_i, e_j] = sum_r D(r,i) [e_r, e_j]
				for (int r = 0; r < n; ++r) {
					Vec b = g.bracket(unit_vec(n, r), unit_vec(n, j));
					row[r * n + i] -= b[k];
				}
				for (int r = 0; r < n; ++r) {
					Vec b = g.bracket(unit_vec(n, i), unit_vec(n, r));
					row[r * n + j] -= b[k];
				}
				rows.push_back(std::move(row));
			}
		}
	std::vector<Mat> basis;
	if (rows.empty()) {
		for (int r = 0; r < n; ++r)
			for (int c = 0; c < n; ++c) {
				Mat d(n, n);
				d(r, c) = 1;
				basis.push_back(d);
			}
		return basis;
	}
	Mat sys = Mat::from_rows(rows);
	for (const auto &k : sys.kernel()) {
		Mat d(n, n);
		for (int r = 0; r < n; ++r)
			for (int c = 0; c < n; ++c)
				d(r, c) = k[r * n + c];
		basis.push_back(d);
	}
	return basis;
}

bool is_derivation(const LieAlgebra &g, const Mat &d)
{
	int n = g.dim();
	if ((int)d.rows() != n || (int)d.cols() != n)
		throw DimMismatch("is_derivation: matrix size");
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			Vec lhs = d.apply(g.bracket(unit_vec(n, i), unit_vec(n, j)));
			Vec rhs = g.bracket(d.col(i), unit_vec(n, j)) +
			          g.bracket(unit_vec(n, i), d.col(j));
			if (!is_zero(lhs - rhs))
				return false;
		}
	return true;
}

Subspace nilradical(const LieAlgebra &g)
{
	if (!is_solvable(g))
		throw Error("nilradical: algebra is not solvable");
	int n = g.dim();
	// associative closure of the ad operators
	std::vector<Mat> gens;
	for (int i = 1; i <= n; ++i)
		gens.push_back(g.ad_basis(i));
	auto flatten = [n](const Mat &m) {
		Vec v(n * n);
		for (int r = 0; r < n; ++r)
			for (int c = 0; c < n; ++c)
				v[r * n + c] = m(r, c);
		return v;
	};
	std::vector<Mat> basis;
	Subspace spanned(n * n);
	auto insert = [&](const Mat &m) {
		Vec v = flatten(m);
		if (spanned.contains(v))
			return false;
		basis.push_back(m);
		std::vector<Vec> vecs;
		for (auto &b : basis)
			vecs.push_back(flatten(b));
		spanned = Subspace::span(n * n, vecs);
		return true;
	};
	for (auto &m : gens)
		insert(m);
	for (size_t i = 0; i < basis.size(); ++i)
		for (size_t j = 0; j < basis.size(); ++j)
			insert(basis[i] * basis[j]);
	// x belongs to the nilradical iff ad_x lies in the (Jacobson) radical of
	// that associative algebra: tr(ad_x b) = 0 for all b (char 0)
	std::vector<Vec> rows;
	for (auto &b : basis) {
		Vec row(n, Rational(0));
		for (int i = 0; i < n; ++i)
			row[i] = (g.ad_basis(i + 1) * b).trace();
		rows.push_back(std::move(row));
	}
	Subspace nil =
	    rows.empty() ? Subspace::full(n)
	                 : Subspace::span(n, Mat::from_rows(rows).kernel());
	if (!is_ideal(g, nil))
		throw Error("nilradical: internal consistency check failed");
	return nil;
}

Quotient quotient(const LieAlgebra &g, const Subspace &w)
{
	int n = g.dim();
	if (!is_ideal(g, w))
		throw Error("quotient: subspace is not an ideal");
	std::vector<Vec> section = w.complement_basis();
	int m = (int)section.size();
	// change of basis: columns = w-basis then section
	std::vector<Vec> cols = w.basis();
	cols.insert(cols.end(), section.begin(), section.end());
	Mat B = Mat::from_cols(cols);
	Mat Binv;
	if (!B.inverse(Binv))
		throw Error("quotient: basis assembly failed");
	Mat proj(m, n);
	for (int r = 0; r < m; ++r)
		for (int c = 0; c < n; ++c)
			proj(r, c) = Binv((int)w.dim() + r, c);
	std::vector<LieAlgebra::Entry> es;
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j) {
			Vec b = proj.apply(g.bracket(section[i], section[j]));
			for (int k = 0; k < m; ++k)
				if (!b[k].is_zero())
					es.push_back({i + 1, j + 1, k + 1, b[k]});
		}
	return Quotient{LieAlgebra(m, es), section, proj};
}

} // namespace liesymp
