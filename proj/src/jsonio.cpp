#include "liesymp/jsonio.hpp"

#include "liesymp/errors.hpp"
#include "liesymp/expr.hpp"

namespace liesymp {

Json algebra_to_json(const LieAlgebra &g)
{
	Json j;
	j["dim"] = g.dim();
	Json brackets = Json::array();
	for (const auto &e : g.entries()) {
		Json b;
		b["i"] = e.i;
		b["j"] = e.j;
		b["k"] = e.k;
		b["c"] = e.c.str();
		brackets.push_back(b);
	}
	j["brackets"] = brackets;
	return j;
}

LieAlgebra algebra_from_json(const Json &j)
{
	if (!j.contains("dim") || !j.contains("brackets"))
		throw ParseError("algebra json: need 'dim' and 'brackets'");
	int n = j.at("dim").get<int>();
	std::vector<LieAlgebra::Entry> es;
	for (const auto &b : j.at("brackets")) {
		LieAlgebra::Entry e;
		e.i = b.at("i").get<int>();
		e.j = b.at("j").get<int>();
		e.k = b.at("k").get<int>();
		e.c = Rational::parse(b.at("c").get<std::string>());
		es.push_back(e);
	}
	return LieAlgebra(n, es);
}

Json form_to_json(const KForm &w)
{
	Json j = Json::array();
	for (auto &[mi, c] : w.coeffs()) {
		Json t;
		t["idx"] = mi;
		t["c"] = c.str();
		j.push_back(t);
	}
	return j;
}

KForm form_from_json(int degree, int ambient, const Json &j,
                     const std::map<std::string, Rational> &params)
{
	KForm w(degree, ambient);
	for (const auto &t : j) {
		MultiIndex mi = t.at("idx").get<std::vector<int>>();
		Expr e = Expr::parse(t.at("c").get<std::string>());
		w.add(mi, Poly(e.eval(params)));
	}
	return w;
}

Json subspace_to_json(const Subspace &s)
{
	Json j = Json::array();
	for (const auto &row : s.basis())
		j.push_back(vec_to_json(row));
	return j;
}

Subspace subspace_from_json(int ambient, const Json &j)
{
	std::vector<Vec> rows;
	for (const auto &r : j)
		rows.push_back(vec_from_json(r, {}));
	return Subspace::span(ambient, rows);
}

Mat mat_from_json(const Json &j, const std::map<std::string, Rational> &params)
{
	std::vector<Vec> rows;
	for (const auto &r : j)
		rows.push_back(vec_from_json(r, params));
	return Mat::from_rows(rows);
}

Json mat_to_json(const Mat &m)
{
	Json j = Json::array();
	for (size_t i = 0; i < m.rows(); ++i)
		j.push_back(vec_to_json(m.row(i)));
	return j;
}

Vec vec_from_json(const Json &j, const std::map<std::string, Rational> &params)
{
	Vec v;
	for (const auto &x : j)
		v.push_back(Expr::parse(x.get<std::string>()).eval(params));
	return v;
}

Json vec_to_json(const Vec &v)
{
	Json j = Json::array();
	for (const auto &x : v)
		j.push_back(x.str());
	return j;
}

std::map<std::string, Rational> params_from_json(const Json &j)
{
	std::map<std::string, Rational> m;
	for (auto it = j.begin(); it != j.end(); ++it)
		m[it.key()] = Rational::parse(it.value().get<std::string>());
	return m;
}

Json fingerprint_to_json(const Fingerprint &fp)
{
	Json j;
	j["dim"] = fp.dim;
	j["derived"] = fp.dim_derived;
	j["derived2"] = fp.dim_derived2;
	j["center"] = fp.dim_center;
	j["lcs"] = fp.dim_lcs;
	j["unimodular"] = fp.unimodular;
	j["betti"] = fp.betti;
	j["derivations"] = fp.dim_der;
	j["nilradical"] = fp.nilradical_dim;
	if (fp.ad_key) {
		Json k = Json::array();
		for (const auto &x : fp.ad_key->normalized)
			k.push_back(x.str());
		j["ad_key"] = k;
	}
	return j;
}

} // namespace liesymp
