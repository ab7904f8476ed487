#include "liesymp/construct.hpp"

#include "liesymp/errors.hpp"

#include <algorithm>

namespace liesymp {

CotangentFlags check_cotangent_conditions(const CotangentData &data)
{
	const LieAlgebra &h = data.h;
	int m = h.dim();
	validate_representation(h, data.rho);
	auto alpha = [&](int i, int j) -> Vec {
		if (i == j)
			return Vec(m, Rational(0));
		int sign = 1;
		if (i > j) {
			std::swap(i, j);
			sign = -1;
		}
		auto it = data.alpha.find({i, j});
		Vec v = it == data.alpha.end() ? Vec(m, Rational(0)) : it->second;
		if (sign < 0)
			for (auto &x : v)
				x = -x;
		return v;
	};
	CotangentFlags f;
	// 2-cocycle condition for the action:
	// sum_cyc alpha([x1,x2], x3) = sum_cyc x3 . alpha(x1,x2)
	f.lie = true;
	for (int a = 1; a <= m && f.lie; ++a)
		for (int b = a + 1; b <= m && f.lie; ++b)
			for (int c = b + 1; c <= m && f.lie; ++c) {
				Vec lhs(m, Rational(0)), rhs(m, Rational(0));
				int tri[3] = {a, b, c};
				for (int t = 0; t < 3; ++t) {
					int x1 = tri[t], x2 = tri[(t + 1) % 3],
					    x3 = tri[(t + 2) % 3];
					Vec br = h.bracket(unit_vec(m, x1 - 1),
					                   unit_vec(m, x2 - 1));
					Vec term(m, Rational(0));
					for (int l = 0; l < m; ++l)
						if (!br[l].is_zero())
							term = term + br[l] * alpha(l + 1, x3);
					lhs = lhs + term;
					rhs = rhs + data.rho.action[x3 - 1].apply(alpha(x1, x2));
				}
				if (!is_zero(lhs - rhs))
					f.lie = false;
			}
	// Bianchi: sum_cyc < alpha(x1,x2), x3 > = 0
	f.bianchi = true;
	for (int a = 1; a <= m && f.bianchi; ++a)
		for (int b = a + 1; b <= m && f.bianchi; ++b)
			for (int c = b + 1; c <= m && f.bianchi; ++c) {
				Rational s = alpha(a, b)[c - 1] + alpha(b, c)[a - 1] +
				             alpha(c, a)[b - 1];
				if (!s.is_zero())
					f.bianchi = false;
			}
	// pairing compatibility: <x.phi, y> - <y.phi, x> + <phi, [x,y]> = 0
	f.coborde = true;
	for (int i = 1; i <= m && f.coborde; ++i)
		for (int j = i + 1; j <= m && f.coborde; ++j) {
			Vec br = h.bracket_basis(i, j);
			for (int k = 1; k <= m; ++k) {
				Rational s = data.rho.action[i - 1](j - 1, k - 1) -
				             data.rho.action[j - 1](i - 1, k - 1) +
				             br[k - 1];
				if (!s.is_zero()) {
					f.coborde = false;
					break;
				}
			}
		}
	return f;
}

KForm canonical_pairing_form(int m)
{
	KForm w(2, 2 * m);
	for (int i = 1; i <= m; ++i)
		w.set({i, m + i}, Poly(1));
	return w;
}

CotangentExtension cotangent_extension(const CotangentData &data)
{
	CotangentFlags f = check_cotangent_conditions(data);
	if (!f.lie)
		throw NotACocycle("cotangent_extension: alpha is not a 2-cocycle");
	const LieAlgebra &h = data.h;
	int m = h.dim();
	int n = 2 * m;
	std::vector<LieAlgebra::Entry> es;
	// [x_i, phi_j] = rho(x_i) phi_j; in global indices x_i = m+i, phi_j = j
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= m; ++j) {
			// stored pair (j, m+i): [phi_j, x_i] = -rho(x_i) phi_j
			Vec v = data.rho.action[i - 1].col(j - 1);
			for (int k = 0; k < m; ++k)
				if (!v[k].is_zero())
					es.push_back({j, m + i, k + 1, -v[k]});
		}
	// [x_i, x_j] = [x_i,x_j]_h + alpha(x_i,x_j)
	for (int i = 1; i <= m; ++i)
		for (int j = i + 1; j <= m; ++j) {
			Vec br = h.bracket_basis(i, j);
			for (int k = 0; k < m; ++k)
				if (!br[k].is_zero())
					es.push_back({m + i, m + j, m + k + 1, br[k]});
			auto it = data.alpha.find({i, j});
			if (it != data.alpha.end())
				for (int k = 0; k < m; ++k)
					if (!it->second[k].is_zero())
						es.push_back({m + i, m + j, k + 1, it->second[k]});
		}
	CotangentExtension ext{LieAlgebra(n, es), canonical_pairing_form(m),
	                       f.bianchi && f.coborde};
	// the two closedness descriptions must agree
	if (is_closed(ext.g, ext.omega0) != ext.is_solution)
		throw Error("cotangent_extension: closedness flags disagree");
	return ext;
}

LieAlgebra semidirect(const LieAlgebra &h, int v_dim,
                      const std::vector<Mat> &action)
{
	int m = h.dim();
	Module mod{v_dim, action};
	validate_representation(h, mod);
	int n = v_dim + m;
	std::vector<LieAlgebra::Entry> es;
	// [h_i, v_j] = action_i v_j; h_i = v_dim + i
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= v_dim; ++j) {
			Vec v = action[i - 1].col(j - 1);
			for (int k = 0; k < v_dim; ++k)
				if (!v[k].is_zero())
					es.push_back({j, v_dim + i, k + 1, -v[k]});
		}
	for (int i = 1; i <= m; ++i)
		for (int j = i + 1; j <= m; ++j) {
			Vec br = h.bracket_basis(i, j);
			for (int k = 0; k < m; ++k)
				if (!br[k].is_zero())
					es.push_back(
					    {v_dim + i, v_dim + j, v_dim + k + 1, br[k]});
		}
	return LieAlgebra(n, es);
}

LieAlgebra extension_by_derivation(const LieAlgebra &N, const Mat &D)
{
	if (!is_derivation(N, D))
		throw NotADerivation("extension_by_derivation: not a derivation");
	int m = N.dim();
	std::vector<LieAlgebra::Entry> es = N.entries();
	for (int i = 1; i <= m; ++i) {
		Vec col = D.col(i - 1);
		for (int k = 0; k < m; ++k)
			if (!col[k].is_zero())
				es.push_back({i, m + 1, k + 1, -col[k]});
	}
	return LieAlgebra(m + 1, es);
}

LieAlgebra trivial_extension(const LieAlgebra &g)
{
	int n = g.dim();
	std::vector<LieAlgebra::Entry> es;
	for (const auto &e : g.entries())
		es.push_back(e);
	return LieAlgebra(n + 1, es);
}

DoubleExtension double_extension(const DoubleExtData &data)
{
	const LieAlgebra &B = data.B;
	int k = B.dim();
	if ((int)data.omega_prime.ambient_dim() != k ||
	    data.omega_prime.degree() != 2)
		throw DimMismatch("double_extension: omega' shape");
	if (!is_closed(B, data.omega_prime))
		throw DegenerateForm("double_extension: omega' is not closed");
	if (pfaffian(data.omega_prime).is_zero())
		throw DegenerateForm("double_extension: omega' is degenerate");
	if (!is_derivation(B, data.delta))
		throw NotADerivation("double_extension: delta is not a derivation");
	if ((int)data.z.size() != k)
		throw DimMismatch("double_extension: z size");
	int n = k + 2; // basis d, b_1..b_k, e
	auto wp = [&](const Vec &x, const Vec &y) {
		return form_value(data.omega_prime, x, y);
	};
	std::vector<LieAlgebra::Entry> es;
	// [b_i, b_j] = [b_i,b_j]_B + (w'(delta b_i, b_j) - w'(delta b_j, b_i)) e
	for (int i = 1; i <= k; ++i)
		for (int j = i + 1; j <= k; ++j) {
			Vec br = B.bracket_basis(i, j);
			for (int l = 0; l < k; ++l)
				if (!br[l].is_zero())
					es.push_back({i + 1, j + 1, l + 2, br[l]});
			Rational c = wp(data.delta.col(i - 1), unit_vec(k, j - 1)) -
			             wp(data.delta.col(j - 1), unit_vec(k, i - 1));
			if (!c.is_zero())
				es.push_back({i + 1, j + 1, n, c});
		}
	// [d, b_i] = -w'(z, b_i) e - delta b_i
	for (int i = 1; i <= k; ++i) {
		Rational c = -wp(data.z, unit_vec(k, i - 1));
		if (!c.is_zero())
			es.push_back({1, i + 1, n, c});
		Vec dcol = data.delta.col(i - 1);
		for (int l = 0; l < k; ++l)
			if (!dcol[l].is_zero())
				es.push_back({1, i + 1, l + 2, -dcol[l]});
	}
	DoubleExtension out;
	try {
		out.A = LieAlgebra(n, es);
	} catch (const NotALieAlgebra &e) {
		throw IncompatibleDerivation(
		    std::string("double_extension: ") + e.what(), e.triple);
	}
	// omega = omega' on B, omega(e, d) = 1
	out.omega = KForm(2, n);
	for (auto &[mi, c] : data.omega_prime.coeffs())
		out.omega.set({mi[0] + 1, mi[1] + 1}, c);
	out.omega.set({1, n}, Poly(-1)); // omega(d, e) = -1
	// e central, omega closed and nondegenerate
	Vec e_vec = unit_vec(n, n - 1);
	for (int i = 0; i < n; ++i)
		if (!is_zero(out.A.bracket(e_vec, unit_vec(n, i))))
			throw Error("double_extension: e is not central");
	if (!is_closed(out.A, out.omega))
		throw Error("double_extension: omega is not closed");
	if (pfaffian(out.omega).is_zero())
		throw Error("double_extension: omega is degenerate");
	return out;
}

Reduction symplectic_reduction(const LieAlgebra &g, const KForm &omega,
                               const Subspace &h)
{
	int n = g.dim();
	// h must be an isotropic ideal
	for (size_t i = 0; i < h.basis().size(); ++i)
		for (size_t j = i + 1; j < h.basis().size(); ++j)
			if (!form_value(omega, h.basis()[i], h.basis()[j]).is_zero())
				throw Error("symplectic_reduction: h is not isotropic");
	if (!is_ideal(g, h))
		throw Error("symplectic_reduction: h is not an ideal");
	Subspace perp = omega_orthogonal(g, omega, h);
	if (!is_ideal(g, perp))
		throw NotReducible("symplectic_reduction: h_perp is not an ideal");
	// basis of perp extending h
	std::vector<Vec> lifts;
	Subspace cur = h;
	for (const auto &v : perp.basis()) {
		if (cur.contains(v))
			continue;
		lifts.push_back(v);
		std::vector<Vec> all = cur.basis();
		all.push_back(v);
		cur = Subspace::span(n, all);
	}
	int q = (int)lifts.size();
	// coordinates: [h-basis | lifts]
	std::vector<Vec> cols = h.basis();
	cols.insert(cols.end(), lifts.begin(), lifts.end());
	Mat Bm = Mat::from_cols(cols); // n x (dim h + q)
	auto coords_mod_h = [&](const Vec &v) {
		Vec x;
		if (!Bm.solve(v, x))
			throw Error("symplectic_reduction: bracket leaves h_perp");
		Vec w(q);
		for (int i = 0; i < q; ++i)
			w[i] = x[h.dim() + i];
		return w;
	};
	std::vector<LieAlgebra::Entry> es;
	for (int i = 1; i <= q; ++i)
		for (int j = i + 1; j <= q; ++j) {
			Vec w = coords_mod_h(g.bracket(lifts[i - 1], lifts[j - 1]));
			for (int l = 0; l < q; ++l)
				if (!w[l].is_zero())
					es.push_back({i, j, l + 1, w[l]});
		}
	Reduction red;
	red.W = LieAlgebra(q, es);
	red.omega_reduced = KForm(2, q);
	for (int i = 1; i <= q; ++i)
		for (int j = i + 1; j <= q; ++j) {
			Rational v = form_value(omega, lifts[i - 1], lifts[j - 1]);
			if (!v.is_zero())
				red.omega_reduced.set({i, j}, Poly(v));
		}
	red.section = lifts;
	if (!is_closed(red.W, red.omega_reduced))
		throw Error("symplectic_reduction: reduced form is not closed");
	if (q % 2 == 0 && pfaffian(red.omega_reduced).is_zero())
		throw Error("symplectic_reduction: reduced form is degenerate");
	return red;
}

bool sequence_split_check(const LieAlgebra &g, const KForm &omega,
                          const Subspace &h)
{
	Subspace perp = omega_orthogonal(g, omega, h);
	if (!is_ideal(g, perp))
		throw NotReducible("sequence_split_check: h_perp is not an ideal");
	size_t c = g.dim() - perp.dim();
	if (c == 0)
		return true; // quotient is trivial
	if (c == 1)
		return true; // a line is closed under bracket
	// search complements among sums of characteristic subspaces and
	// coordinate subspaces
	std::vector<Vec> extra = perp.complement_basis();
	Subspace candidate = Subspace::span(g.dim(), extra);
	if (candidate.dim() == c && is_subalgebra(g, candidate))
		return true;
	throw Error("sequence_split_check: undecided for codimension >= 2");
}

bool central_extension_trivial(const LieAlgebra &g, const KForm &omega,
                               const Subspace &h)
{
	Subspace perp = omega_orthogonal(g, omega, h);
	// h central in perp and perp/h abelian here; the class is trivial iff
	// the extension is a direct product, i.e. [perp, perp] = 0 modulo a
	// coboundary. For an abelian quotient the coboundaries vanish, so
	// triviality means [perp, perp] = 0 exactly.
	for (size_t i = 0; i < perp.basis().size(); ++i)
		for (size_t j = i + 1; j < perp.basis().size(); ++j)
			if (!is_zero(g.bracket(perp.basis()[i], perp.basis()[j])))
				return false;
	return true;
}

LieAlgebra heisenberg(int n)
{
	if (n < 1)
		throw InvalidParameter("heisenberg: n must be >= 1");
	std::vector<LieAlgebra::Entry> es;
	for (int k = 0; k < n; ++k)
		es.push_back({2 * k + 1, 2 * k + 2, 2 * n + 1, Rational(1)});
	return LieAlgebra(2 * n + 1, es);
}

LieAlgebra heisenberg_extension(const Mat &A, const Rational &lambda)
{
	int two_n = (int)A.rows();
	if (A.cols() != A.rows() || two_n % 2)
		throw InvalidParameter("heisenberg_extension: A must be 2n x 2n");
	int n = two_n / 2;
	LieAlgebra h = heisenberg(n);
	int hd = 2 * n + 1;
	Mat D(hd, hd);
	for (int i = 0; i < two_n; ++i)
		for (int j = 0; j < two_n; ++j)
			D(i, j) = A(i, j);
	D(hd - 1, hd - 1) = lambda;
	if (!is_derivation(h, D))
		throw NotADerivation(
		    "heisenberg_extension: block matrix is not a derivation");
	return extension_by_derivation(h, D);
}

LieAlgebra abelian_semidirect(const std::vector<Rational> &eigs)
{
	int m = (int)eigs.size();
	Mat D(m, m);
	for (int i = 0; i < m; ++i)
		D(i, i) = eigs[i];
	return semidirect(LieAlgebra(1, {}), m, {D});
}

LieAlgebra nilpotent_chain(int N)
{
	if (N < 2)
		throw InvalidParameter("nilpotent_chain: N must be >= 2");
	int m = N - 1;
	Mat D(m, m);
	for (int i = 2; i <= m; ++i)
		D(i - 2, i - 1) = 1; // e_i -> e_{i-1}
	return semidirect(LieAlgebra(1, {}), m, {D});
}

CotangentModel cotangent_model(const LieAlgebra &g, const KForm &omega,
                               const Subspace &J)
{
	int n = g.dim();
	if (n % 2)
		throw OddDimension("cotangent_model: odd dimension");
	int m = n / 2;
	if ((int)J.dim() != m)
		throw Error("cotangent_model: J is not half-dimensional");
	for (size_t i = 0; i < J.basis().size(); ++i)
		for (size_t j = i + 1; j < J.basis().size(); ++j)
			if (!form_value(omega, J.basis()[i], J.basis()[j]).is_zero())
				throw Error("cotangent_model: J is not isotropic");
	if (!is_ideal(g, J))
		throw Error("cotangent_model: J is not an ideal");
	if (!is_closed(g, omega) || pfaffian(omega).is_zero())
		throw DegenerateForm("cotangent_model: omega is not symplectic");

	// lagrangian complement: pick vectors outside J + span(V) and correct
	// them inside J to be omega-orthogonal to the previous ones
	std::vector<Vec> V;
	Subspace spanned = J;
	for (int step = 0; step < m; ++step) {
		Vec cand;
		for (int i = 0; i < n; ++i) {
			Vec e = unit_vec(n, i);
			if (!spanned.contains(e)) {
				cand = e;
				break;
			}
		}
		if (cand.empty())
			throw Error("cotangent_model: complement search failed");
		// solve omega(v_r, cand + sum_l j_l J_l) = 0 for all r
		if (!V.empty()) {
			Mat sys(V.size(), m);
			Vec rhs(V.size());
			for (size_t r = 0; r < V.size(); ++r) {
				for (int l = 0; l < m; ++l)
					sys(r, l) = form_value(omega, V[r], J.basis()[l]);
				rhs[r] = -form_value(omega, V[r], cand);
			}
			Vec sol;
			if (!sys.solve(rhs, sol))
				throw Error("cotangent_model: correction solve failed");
			for (int l = 0; l < m; ++l)
				cand = cand + sol[l] * J.basis()[l];
		}
		V.push_back(cand);
		std::vector<Vec> all = spanned.basis();
		all.push_back(cand);
		spanned = Subspace::span(n, all);
	}

	// quotient h = g/J on the V basis
	std::vector<Vec> cols = J.basis();
	cols.insert(cols.end(), V.begin(), V.end());
	Mat Bm = Mat::from_cols(cols);
	Mat Binv;
	if (!Bm.inverse(Binv))
		throw Error("cotangent_model: complement is not transverse");
	auto j_coords = [&](const Vec &v) {
		Vec x = Binv.apply(v);
		Vec out(m);
		for (int l = 0; l < m; ++l)
			out[l] = x[l];
		return out;
	};
	auto v_coords = [&](const Vec &v) {
		Vec x = Binv.apply(v);
		Vec out(m);
		for (int l = 0; l < m; ++l)
			out[l] = x[m + l];
		return out;
	};
	std::vector<LieAlgebra::Entry> hes;
	for (int i = 1; i <= m; ++i)
		for (int j = i + 1; j <= m; ++j) {
			Vec w = v_coords(g.bracket(V[i - 1], V[j - 1]));
			for (int l = 0; l < m; ++l)
				if (!w[l].is_zero())
					hes.push_back({i, j, l + 1, w[l]});
		}
	LieAlgebra h(m, hes);

	// beta: J -> h*, beta(w) = (omega(w, v_1), ..., omega(w, v_m))
	Mat beta(m, m);
	for (int r = 0; r < m; ++r)
		for (int l = 0; l < m; ++l)
			beta(r, l) = form_value(omega, J.basis()[l], V[r]);
	Mat beta_inv;
	if (!beta.inverse(beta_inv))
		throw Error("cotangent_model: pairing is degenerate");

	// transported action: rho(x_i) = beta ad(v_i)|_J beta^{-1}
	CotangentData data;
	data.h = h;
	data.rho.dim = m;
	for (int i = 0; i < m; ++i) {
		Mat adJ(m, m);
		for (int l = 0; l < m; ++l) {
			Vec img = j_coords(g.bracket(V[i], J.basis()[l]));
			for (int r = 0; r < m; ++r)
				adJ(r, l) = img[r];
		}
		data.rho.action.push_back(beta * adJ * beta_inv);
	}
	// alpha(x_i, x_j) = beta(J-part of [v_i, v_j] minus the h-lift)
	for (int i = 1; i <= m; ++i)
		for (int j = i + 1; j <= m; ++j) {
			Vec br = g.bracket(V[i - 1], V[j - 1]);
			Vec hpart = h.bracket_basis(i, j);
			Vec lift(n, Rational(0));
			for (int l = 0; l < m; ++l)
				lift = lift + hpart[l] * V[l];
			Vec jpart = j_coords(br - lift);
			Vec a = beta.apply(jpart);
			if (!is_zero(a))
				data.alpha[{i, j}] = a;
		}

	CotangentExtension ext = cotangent_extension(data);
	CotangentModel out;
	out.model = ext.g;
	out.omega0 = ext.omega0;
	out.data = data;
	// iso: J_l -> (beta column l, 0), v_i -> (0, x_i)
	Mat T(n, n);
	for (int l = 0; l < m; ++l)
		for (int r = 0; r < m; ++r)
			T(r, l) = beta(r, l);
	for (int i = 0; i < m; ++i)
		T(m + i, m + i) = 1;
	out.iso = T * Binv; // standard coordinates -> model coordinates
	if (!is_isomorphism(g, out.model, out.iso))
		throw Error("cotangent_model: transport is not an isomorphism");
	if (pullback(out.iso, out.omega0) != omega)
		throw Error("cotangent_model: omega0 does not pull back to omega");
	if (!ext.is_solution)
		throw Error("cotangent_model: model fails the closedness flags");
	return out;
}

} // namespace liesymp
