#include "liesymp/cecoh.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>

namespace liesymp {

// d e^k = - sum_{i<j} c^k_{ij} e^i ^ e^j
static KForm d_basis_one_form(const LieAlgebra &g, int k)
{
	int n = g.dim();
	KForm r(2, n);
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j) {
			Rational c = g.bracket_basis(i, j)[k - 1];
			if (!c.is_zero())
				r.add({i, j}, Poly(-c));
		}
	return r;
}

KForm d(const LieAlgebra &g, const KForm &w)
{
	int n = g.dim();
	KForm out(std::min(w.degree() + 1, n), n);
	if (w.degree() + 1 > n)
		return out;
	for (auto &[mi, c] : w.coeffs()) {
		// antiderivation over the factors of e^{mi}
		for (size_t t = 0; t < mi.size(); ++t) {
			KForm dt = d_basis_one_form(g, mi[t]);
			// sign (-1)^t, wedge with the remaining factors
			MultiIndex rest;
			for (size_t s = 0; s < mi.size(); ++s)
				if (s != t)
					rest.push_back(mi[s]);
			for (auto &[pair, pc] : dt.coeffs()) {
				MultiIndex full = pair;
				full.insert(full.end(), rest.begin(), rest.end());
				int sign = sort_sign(full);
				if (sign == 0)
					continue;
				Poly term = c * pc;
				if (t % 2)
					term = -term;
				if (sign < 0)
					term = -term;
				out.add(full, term);
			}
		}
	}
	return out;
}

ChainMap ce_differential(const LieAlgebra &g, int k)
{
	int n = g.dim();
	if (k < 0 || k >= n)
		throw DimMismatch("ce_differential: degree out of range");
	auto dom = multi_indices(n, k);
	auto cod = multi_indices(n, k + 1);
	Mat m(cod.size(), dom.size());
	for (size_t c = 0; c < dom.size(); ++c) {
		KForm img = d(g, KForm::basis(n, dom[c]));
		for (auto &[mi, coeff] : img.coeffs())
			m(multi_index_rank(n, mi), c) = coeff.constant_value();
	}
	return ChainMap{k, std::move(m)};
}

Subspace closed_forms(const LieAlgebra &g, int k)
{
	int n = g.dim();
	size_t dim_k = binomial(n, k);
	if (k == n)
		return Subspace::full(dim_k);
	Mat dk = ce_differential(g, k).m;
	return Subspace::span(dim_k, dk.kernel());
}

Subspace exact_forms(const LieAlgebra &g, int k)
{
	int n = g.dim();
	size_t dim_k = binomial(n, k);
	if (k == 0 || k > n)
		return Subspace(dim_k);
	Mat dprev = ce_differential(g, k - 1).m;
	std::vector<Vec> cols;
	for (size_t j = 0; j < dprev.cols(); ++j)
		cols.push_back(dprev.col(j));
	return Subspace::span(dim_k, cols);
}

int betti(const LieAlgebra &g, int k)
{
	if (k < 0 || k > g.dim())
		return 0;
	return (int)closed_forms(g, k).dim() - (int)exact_forms(g, k).dim();
}

std::vector<int> betti_vector(const LieAlgebra &g)
{
	std::vector<int> b;
	for (int k = 0; k <= g.dim(); ++k)
		b.push_back(betti(g, k));
	return b;
}

std::vector<KForm> representatives(const LieAlgebra &g, int k)
{
	int n = g.dim();
	Subspace closed = closed_forms(g, k);
	Subspace exact = exact_forms(g, k);
	// lexicographically smallest echelon basis of a complement of the
	// exact forms inside the closed ones
	std::vector<Vec> picked = exact.basis();
	size_t base = picked.size();
	Subspace cur = exact;
	for (const auto &v : closed.basis()) {
		if (cur.contains(v))
			continue;
		picked.push_back(v);
		cur = Subspace::span(binomial(n, k), picked);
		picked = cur.basis(); // keep canonical
		if (cur.dim() == closed.dim())
			break;
	}
	// re-extract: complement vectors are those echelon rows not in `exact`
	std::vector<KForm> reps;
	for (const auto &v : cur.basis())
		if (!exact.contains(v))
			reps.push_back(KForm::from_vec(k, n, v));
	(void)base;
	return reps;
}

bool is_closed(const LieAlgebra &g, const KForm &w)
{
	return d(g, w).is_zero();
}

bool is_exact(const LieAlgebra &g, const KForm &w, KForm *primitive)
{
	int n = g.dim();
	int k = w.degree();
	if (k == 0)
		return w.is_zero();
	Mat dprev = ce_differential(g, k - 1).m;
	Vec x;
	if (!dprev.solve(w.to_vec(), x))
		return false;
	if (primitive)
		*primitive = KForm::from_vec(k - 1, n, x);
	return true;
}

// ---- with coefficients -------------------------------------------------------

void validate_representation(const LieAlgebra &h, const Module &m)
{
	int n = h.dim();
	if ((int)m.action.size() != n)
		throw NotARepresentation("module: one action matrix per basis vector");
	for (auto &a : m.action)
		if ((int)a.rows() != m.dim || (int)a.cols() != m.dim)
			throw NotARepresentation("module: action matrix size");
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j) {
			Vec b = h.bracket_basis(i, j);
			Mat lhs(m.dim, m.dim);
			for (int k = 0; k < n; ++k)
				if (!b[k].is_zero()) {
					Mat t = m.action[k];
					t *= b[k];
					lhs = lhs + t;
				}
			Mat rhs = m.action[i - 1] * m.action[j - 1] -
			          m.action[j - 1] * m.action[i - 1];
			if (!(lhs == rhs))
				throw NotARepresentation(
				    "rho([e" + std::to_string(i) + ",e" + std::to_string(j) +
				    "]) != [rho(e" + std::to_string(i) + "),rho(e" +
				    std::to_string(j) + ")]");
		}
}

Mat ce_differential_with_coeffs(const LieAlgebra &h, const Module &mod, int k)
{
	int n = h.dim();
	int md = mod.dim;
	auto dom = multi_indices(n, k);
	auto cod = multi_indices(n, k + 1);
	Mat out(cod.size() * md, dom.size() * md);
	// (d a)(x_0..x_k) = sum_i (-1)^i rho(x_i) a(..hat i..)
	//                 + sum_{i<j} (-1)^{i+j} a([x_i,x_j], ..hat i, hat j..)
	for (size_t ci = 0; ci < cod.size(); ++ci) {
		const MultiIndex &xs = cod[ci];
		// action terms
		for (int i = 0; i <= k; ++i) {
			MultiIndex rest;
			for (int s = 0; s <= k; ++s)
				if (s != i)
					rest.push_back(xs[s]);
			size_t col_mi = multi_index_rank(n, rest);
			const Mat &act = mod.action[xs[i] - 1];
			for (int r = 0; r < md; ++r)
				for (int c = 0; c < md; ++c) {
					Rational v = act(r, c);
					if (v.is_zero())
						continue;
					if (i % 2)
						v = -v;
					out(ci * md + r, col_mi * md + c) += v;
				}
		}
		// bracket terms
		for (int i = 0; i <= k; ++i)
			for (int j = i + 1; j <= k; ++j) {
				Vec b = h.bracket_basis(xs[i], xs[j]);
				MultiIndex rest;
				for (int s = 0; s <= k; ++s)
					if (s != i && s != j)
						rest.push_back(xs[s]);
				for (int l = 0; l < n; ++l) {
					if (b[l].is_zero())
						continue;
					MultiIndex arg;
					arg.push_back(l + 1);
					arg.insert(arg.end(), rest.begin(), rest.end());
					int sign = sort_sign(arg);
					if (sign == 0)
						continue;
					Rational v = b[l];
					if ((i + j) % 2)
						v = -v;
					if (sign < 0)
						v = -v;
					size_t col_mi = multi_index_rank(n, arg);
					for (int r = 0; r < md; ++r)
						out(ci * md + r, col_mi * md + r) += v;
				}
			}
	}
	return out;
}

CoeffCohomology cohomology_with_coeffs(const LieAlgebra &h, const Module &mod,
                                       int k)
{
	validate_representation(h, mod);
	int n = h.dim();
	int md = mod.dim;
	size_t dim_k = binomial(n, k) * md;
	Subspace closed(dim_k);
	if (k == n) {
		closed = Subspace::full(dim_k);
	} else {
		Mat dk = ce_differential_with_coeffs(h, mod, k);
		closed = Subspace::span(dim_k, dk.kernel());
	}
	Subspace exact(dim_k);
	if (k > 0 && k <= n) {
		Mat dprev = ce_differential_with_coeffs(h, mod, k - 1);
		std::vector<Vec> cols;
		for (size_t j = 0; j < dprev.cols(); ++j)
			cols.push_back(dprev.col(j));
		exact = Subspace::span(dim_k, cols);
	}
	CoeffCohomology result;
	result.dim = (int)closed.dim() - (int)exact.dim();
	// complement representatives, echelon choice as in the scalar case
	std::vector<Vec> picked = exact.basis();
	Subspace cur = exact;
	for (const auto &v : closed.basis()) {
		if (cur.contains(v))
			continue;
		picked.push_back(v);
		cur = Subspace::span(dim_k, picked);
		picked = cur.basis();
	}
	auto mis = multi_indices(n, k);
	for (const auto &v : cur.basis()) {
		if (exact.contains(v))
			continue;
		Cochain c;
		for (size_t mi = 0; mi < mis.size(); ++mi) {
			Vec coeff(md);
			bool nz = false;
			for (int r = 0; r < md; ++r) {
				coeff[r] = v[mi * md + r];
				nz = nz || !coeff[r].is_zero();
			}
			if (nz)
				c[mis[mi]] = coeff;
		}
		result.reps.push_back(std::move(c));
	}
	return result;
}

} // namespace liesymp
