#include "liesymp/cecoh.hpp"
#include "liesymp/errors.hpp"
#include "liesymp/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liesymp {

bool operator==(const Fingerprint &a, const Fingerprint &b)
{
	return a.dim == b.dim && a.dim_derived == b.dim_derived &&
	       a.dim_derived2 == b.dim_derived2 &&
	       a.dim_center == b.dim_center && a.dim_lcs == b.dim_lcs &&
	       a.unimodular == b.unimodular && a.betti == b.betti &&
	       a.dim_der == b.dim_der &&
	       a.nilradical_dim == b.nilradical_dim &&
	       ((!a.ad_key && !b.ad_key) ||
	        (a.ad_key && b.ad_key && *a.ad_key == *b.ad_key));
}

std::string Fingerprint::str() const
{
	std::ostringstream os;
	os << "dim=" << dim << " g'=" << dim_derived << " g''=" << dim_derived2
	   << " z=" << dim_center << " lcs=[";
	for (size_t i = 0; i < dim_lcs.size(); ++i)
		os << (i ? "," : "") << dim_lcs[i];
	os << "] unimod=" << (unimodular ? "yes" : "no") << " betti=(";
	for (size_t i = 0; i < betti.size(); ++i)
		os << (i ? "," : "") << betti[i];
	os << ") der=" << dim_der << " nilrad=" << nilradical_dim;
	if (ad_key) {
		os << " adkey=[";
		for (size_t i = 0; i < ad_key->normalized.size(); ++i)
			os << (i ? "," : "") << ad_key->normalized[i];
		os << "]";
	}
	return os.str();
}

// characteristic polynomial of ad_{e0} restricted to the nilradical, with
// the scale of e0 quotiented out
static std::optional<AdSpectrumKey> ad_spectrum_key(const LieAlgebra &g,
                                                    const Subspace &nil)
{
	int n = g.dim();
	if ((int)nil.dim() != n - 1)
		return std::nullopt;
	Vec e0 = nil.complement_basis().at(0);
	// restriction matrix of ad_{e0} on the echelon basis of nil
	int m = (int)nil.dim();
	Mat r(m, m);
	for (int j = 0; j < m; ++j) {
		Vec img = g.bracket(e0, nil.basis()[j]);
		Vec coords;
		if (!nil.coordinates(img, coords))
			throw Error("ad_spectrum_key: nilradical not ad-invariant");
		for (int i = 0; i < m; ++i)
			r(i, j) = coords[i];
	}
	std::vector<Rational> c = r.char_poly(); // c[0..m], monic
	AdSpectrumKey key;
	Rational p = c[m - 1];
	if (!p.is_zero()) {
		// rescale e0 so the trace becomes 1: c_k -> c_k / p^{m-k}
		key.normalized.push_back(Rational(0)); // branch tag
		Rational pw(1);
		std::vector<Rational> vals;
		for (int k = m - 1; k >= 0; --k) {
			pw *= p;
			vals.push_back(c[k] / pw);
		}
		key.normalized.insert(key.normalized.end(), vals.begin(), vals.end());
		return key;
	}
	// trace-free: use scale-invariant combinations of the lower coefficients
	if (m >= 2 && !c[m - 2].is_zero()) {
		Rational q = c[m - 2];
		key.normalized.push_back(Rational(1));
		key.normalized.push_back(Rational(q.sign()));
		if (m >= 3) {
			// c_{m-3}^2 / q^3 is invariant under e0 -> t e0
			Rational k3 = c[m - 3] * c[m - 3] / (q * q * q);
			key.normalized.push_back(k3);
		}
		return key;
	}
	if (m >= 3 && !c[m - 3].is_zero()) {
		key.normalized.push_back(Rational(2));
		return key;
	}
	bool nilpotent = true;
	for (int k = 0; k < m; ++k)
		nilpotent = nilpotent && c[k].is_zero();
	key.normalized.push_back(Rational(nilpotent ? 3 : 4));
	return key;
}

Fingerprint fingerprint(const LieAlgebra &g)
{
	Fingerprint fp;
	fp.dim = g.dim();
	auto ds = derived_series(g);
	fp.dim_derived = ds.size() > 1 ? (int)ds[1].dim() : 0;
	fp.dim_derived2 = ds.size() > 2 ? (int)ds[2].dim() : 0;
	fp.dim_center = (int)center(g).dim();
	for (const auto &s : lower_central_series(g))
		fp.dim_lcs.push_back((int)s.dim());
	fp.unimodular = is_unimodular(g);
	fp.betti = betti_vector(g);
	fp.dim_der = (int)derivations(g).size();
	Subspace nil = nilradical(g);
	fp.nilradical_dim = (int)nil.dim();
	fp.ad_key = ad_spectrum_key(g, nil);
	return fp;
}

// ---- identification ---------------------------------------------------------

// all rational roots (with multiplicity, via deflation) of the polynomial
// sum c[k] x^k; returns false if the attempt was abandoned (coefficients too
// large to factor)
static bool rational_roots(std::vector<Rational> c, std::vector<Rational> &out)
{
	// clear denominators
	BigInt lcm = 1;
	for (auto &x : c)
		lcm = boost::multiprecision::lcm(lcm, x.denominator());
	std::vector<BigInt> a;
	for (auto &x : c)
		a.push_back(x.numerator() * (lcm / x.denominator()));
	while (!a.empty() && a.back() == 0)
		a.pop_back();
	if (a.empty())
		return false; // zero polynomial
	auto divisors = [](BigInt v, std::vector<BigInt> &ds) {
		if (v < 0)
			v = -v;
		if (v > BigInt(1000000000000LL))
			return false;
		for (BigInt d = 1; d * d <= v; ++d) {
			if (v % d == 0) {
				ds.push_back(d);
				ds.push_back(v / d);
			}
		}
		return true;
	};
	for (;;) {
		if (a.size() <= 1)
			return true;
		// strip root 0
		if (a[0] == 0) {
			out.push_back(Rational(0));
			a.erase(a.begin());
			continue;
		}
		std::vector<BigInt> ps, qs;
		if (!divisors(a[0], ps) || !divisors(a.back(), qs))
			return false;
		bool found = false;
		for (const auto &p : ps) {
			for (const auto &q : qs) {
				for (int sgn : {1, -1}) {
					Rational cand(sgn * p, q);
					// evaluate by Horner
					Rational v(0);
					for (size_t k = a.size(); k-- > 0;)
						v = v * cand + Rational(a[k]);
					if (v.is_zero()) {
						out.push_back(cand);
						// deflate: a(x) = (x - cand) b(x)
						std::vector<Rational> b(a.size() - 1);
						Rational carry(0);
						for (size_t k = a.size(); k-- > 1;) {
							b[k - 1] = Rational(a[k]) + carry;
							carry = b[k - 1] * cand;
						}
						// re-clear denominators
						BigInt l2 = 1;
						for (auto &x : b)
							l2 = boost::multiprecision::lcm(
							    l2, x.denominator());
						a.clear();
						for (auto &x : b)
							a.push_back(x.numerator() *
							            (l2 / x.denominator()));
						found = true;
						break;
					}
				}
				if (found)
					break;
			}
			if (found)
				break;
		}
		if (!found)
			return true; // no further rational roots
	}
}

static std::vector<Rational> solve_quadratic(const Rational &a,
                                             const Rational &b,
                                             const Rational &c)
{
	std::vector<Rational> roots;
	if (a.is_zero()) {
		if (!b.is_zero())
			roots.push_back(-c / b);
		return roots;
	}
	Rational disc = b * b - Rational(4) * a * c;
	Rational s;
	if (!Rational::sqrt(disc, s))
		return roots;
	roots.push_back((-b + s) / (Rational(2) * a));
	if (!s.is_zero())
		roots.push_back((-b - s) / (Rational(2) * a));
	return roots;
}

namespace {

// data extracted from ad_{e0}|nilradical for parameter recovery
struct AdData {
	bool codim1 = false;
	int m = 0;
	std::vector<Rational> coeffs; // raw char poly, monic
	bool trace_nonzero = false;
	// canonical (trace -> 1) coefficients x^3 + x^2 + qbar x + rbar
	Rational qbar, rbar;
};

AdData extract_ad_data(const LieAlgebra &g, const Subspace &nil)
{
	AdData d;
	int n = g.dim();
	if ((int)nil.dim() != n - 1)
		return d;
	d.codim1 = true;
	d.m = (int)nil.dim();
	Vec e0 = nil.complement_basis().at(0);
	Mat r(d.m, d.m);
	for (int j = 0; j < d.m; ++j) {
		Vec coords;
		if (!nil.coordinates(g.bracket(e0, nil.basis()[j]), coords))
			throw Error("identify: nilradical not ad-invariant");
		for (int i = 0; i < d.m; ++i)
			r(i, j) = coords[i];
	}
	d.coeffs = r.char_poly();
	Rational p = d.coeffs[d.m - 1];
	d.trace_nonzero = !p.is_zero();
	if (d.trace_nonzero && d.m == 3) {
		d.qbar = d.coeffs[1] / (p * p);
		d.rbar = d.coeffs[0] / (p * p * p);
	}
	return d;
}

void push_unique(std::vector<CatalogId> &v, const CatalogId &id)
{
	for (const auto &x : v)
		if (x == id)
			return;
	v.push_back(id);
}

// parameter candidates per family, from the normalized spectrum data
std::vector<CatalogId> family_candidates(Family f, const AdData &ad)
{
	std::vector<CatalogId> out;
	if (!ad.codim1 || ad.m != 3)
		return out;
	const Rational &q = ad.coeffs[1];
	const Rational &r0 = ad.coeffs[0];
	// roots of the canonical cubic (trace-normalized), when available
	std::vector<Rational> roots;
	bool have_roots = false;
	if (ad.trace_nonzero) {
		have_roots = rational_roots(
		    {ad.rbar, ad.qbar, Rational(1), Rational(1)}, roots);
		have_roots = have_roots && roots.size() == 3;
	}
	switch (f) {
	case Family::rr3_lam: {
		if (ad.trace_nonzero) {
			if (!ad.rbar.is_zero())
				break;
			// lambda/(1+lambda)^2 = qbar
			for (const auto &l : solve_quadratic(
			         ad.qbar, Rational(2) * ad.qbar - Rational(1), ad.qbar))
				if (l >= Rational(-1) && l <= Rational(1))
					push_unique(out, {f, {l}});
			if (ad.qbar.is_zero())
				push_unique(out, {f, {Rational(0)}});
		} else if (q < Rational(0) && r0.is_zero()) {
			push_unique(out, {f, {Rational(-1)}});
		}
		break;
	}
	case Family::rr3p_gam: {
		if (ad.trace_nonzero) {
			// gamma^2 = 1/(4 qbar - 1), root 0 present
			if (!ad.rbar.is_zero())
				break;
			Rational den = Rational(4) * ad.qbar - Rational(1);
			if (den <= Rational(0))
				break;
			Rational g2 = Rational(1) / den, gam;
			if (Rational::sqrt(g2, gam) && gam > Rational(0))
				push_unique(out, {f, {gam}});
		} else if (q > Rational(0) && r0.is_zero()) {
			push_unique(out, {f, {Rational(0)}});
		}
		break;
	}
	case Family::r4_mu: {
		if (ad.trace_nonzero) {
			// (mu^2+2mu) = qbar (1+2mu)^2
			Rational a = Rational(1) - Rational(4) * ad.qbar;
			Rational b = Rational(2) - Rational(4) * ad.qbar;
			for (const auto &mu : solve_quadratic(a, b, -ad.qbar))
				push_unique(out, {f, {mu}});
		} else {
			push_unique(out, {f, {Rational(-1, 2)}});
		}
		break;
	}
	case Family::r4_ab: {
		auto try_roots = [&](const std::vector<Rational> &rs) {
			for (int t = 0; t < 3; ++t) {
				if (rs[t].is_zero())
					continue;
				Rational a = rs[(t + 1) % 3] / rs[t];
				Rational b = rs[(t + 2) % 3] / rs[t];
				if (a > b)
					std::swap(a, b);
				bool ok1 = Rational(-1) < a && a <= b && b <= Rational(1) &&
				           !(a * b).is_zero();
				bool ok2 = a == Rational(-1) && b <= Rational(0);
				if (ok1 || ok2)
					push_unique(out, {f, {a, b}});
			}
		};
		if (ad.trace_nonzero) {
			if (have_roots)
				try_roots(roots);
		} else {
			std::vector<Rational> rs;
			if (rational_roots({r0, q, Rational(0), Rational(1)}, rs) &&
			    rs.size() == 3)
				try_roots(rs);
		}
		break;
	}
	case Family::r4p_gd: {
		if (ad.trace_nonzero) {
			// rational eigenvalue r, complex pair (gamma +- i delta) u
			std::vector<Rational> rs;
			if (!rational_roots({ad.rbar, ad.qbar, Rational(1), Rational(1)},
			                    rs))
				break;
			for (const auto &root : rs) {
				if (root.is_zero())
					continue;
				// deflated quadratic x^2 + Bx + C with B = 1 + root
				Rational B = Rational(1) + root;
				Rational C = -ad.rbar / root;
				Rational gam = (-Rational(1) - root) / (Rational(2) * root);
				Rational d2 = C / (root * root) - gam * gam, del;
				if (Rational::sqrt(d2, del) && del > Rational(0))
					push_unique(out, {f, {gam, del}});
				(void)B;
			}
		} else {
			// gamma = -1/2: K = P^2/(P-1)^3 with P = 1/4 + delta^2
			if (r0.is_zero())
				break;
			Rational K = r0 * r0 / (q * q * q);
			std::vector<Rational> Ps;
			// (P-1)^3 K = P^2
			// K P^3 - (3K+1) P^2 + 3K P - K = 0
			if (!rational_roots({-K, Rational(3) * K,
			                     -(Rational(3) * K + Rational(1)), K},
			                    Ps))
				break;
			for (const auto &P : Ps) {
				Rational d2 = P - Rational(1, 4), del;
				if (Rational::sqrt(d2, del) && del > Rational(0))
					push_unique(out, {f, {Rational(-1, 2), del}});
			}
		}
		break;
	}
	case Family::d4_lam: {
		if (!ad.trace_nonzero)
			break;
		// lambda(1-lambda) = 4 qbar - 1
		for (const auto &l : solve_quadratic(
		         Rational(1), Rational(-1), Rational(4) * ad.qbar - Rational(1))) {
			Rational lam = l >= Rational(1, 2) ? l : Rational(1) - l;
			if (lam >= Rational(1, 2))
				push_unique(out, {f, {lam}});
		}
		break;
	}
	case Family::d4p_del: {
		if (ad.trace_nonzero) {
			// delta^2 = 4 / (16 qbar - 1)
			Rational den = Rational(16) * ad.qbar - Rational(1);
			if (den <= Rational(0))
				break;
			Rational d2 = Rational(4) / den, del;
			if (Rational::sqrt(d2, del) && del > Rational(0))
				push_unique(out, {f, {del}});
		} else if (q > Rational(0) && r0.is_zero()) {
			push_unique(out, {f, {Rational(0)}});
		}
		break;
	}
	default:
		break;
	}
	return out;
}

} // namespace

IdentifyResult identify(const LieAlgebra &g)
{
	IdentifyResult res;
	res.kind = IdentifyResult::Kind::Unknown;
	if (g.dim() != 4 || !is_solvable(g))
		return res;
	Fingerprint fp = fingerprint(g);
	Subspace nil = nilradical(g);
	AdData ad = extract_ad_data(g, nil);
	std::vector<CatalogId> matches;
	for (Family f : all_families()) {
		if (family_param_count(f) == 0) {
			CatalogId id{f, {}};
			if (fingerprint(catalog(id)) == fp)
				push_unique(matches, id);
			continue;
		}
		for (const auto &id : family_candidates(f, ad)) {
			try {
				if (fingerprint(catalog(id)) == fp)
					push_unique(matches, id);
			} catch (const InvalidParameter &) {
			}
		}
	}
	if (matches.empty())
		return res;
	if (matches.size() == 1) {
		res.kind = IdentifyResult::Kind::Identified;
		res.id = matches[0];
		return res;
	}
	res.kind = IdentifyResult::Kind::Ambiguous;
	res.candidates = matches;
	return res;
}

std::string IdentifyResult::str() const
{
	switch (kind) {
	case Kind::Identified:
		return id.str();
	case Kind::Unknown:
		return "unknown";
	case Kind::Ambiguous: {
		std::string s = "ambiguous:";
		for (const auto &c : candidates)
			s += " " + c.str();
		return s;
	}
	}
	return "unknown";
}

} // namespace liesymp
