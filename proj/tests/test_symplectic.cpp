#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesymp/symplectic.hpp"

#include <random>

using namespace liesymp;

namespace {

std::mt19937 rng(5150);

KForm basis_form(int n, std::initializer_list<int> idx)
{
	return KForm::basis(n, MultiIndex(idx));
}

Subspace span_of_units(int n, std::initializer_list<int> idx)
{
	std::vector<Vec> v;
	for (int i : idx)
		v.push_back(unit_vec(n, i - 1));
	return Subspace::span(n, v);
}

// reference Pfaffian of a skew matrix by recursive expansion along the
// first row (independent of the wedge-power route)
Poly pfaffian_recursive(const std::vector<std::vector<Poly>> &m)
{
	size_t n = m.size();
	if (n == 0)
		return Poly(1);
	if (n % 2)
		return Poly();
	if (n == 2)
		return m[0][1];
	Poly total;
	for (size_t j = 1; j < n; ++j) {
		// remove rows/cols 0 and j
		std::vector<std::vector<Poly>> sub;
		for (size_t r = 0; r < n; ++r) {
			if (r == 0 || r == j)
				continue;
			std::vector<Poly> row;
			for (size_t c = 0; c < n; ++c) {
				if (c == 0 || c == j)
					continue;
				row.push_back(m[r][c]);
			}
			sub.push_back(std::move(row));
		}
		Poly term = m[0][j] * pfaffian_recursive(sub);
		if (j % 2 == 0)
			term = -term;
		total += term;
	}
	return total;
}

Poly pfaffian_oracle(const KForm &w)
{
	int n = w.ambient_dim();
	std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
	for (auto &[mi, c] : w.coeffs()) {
		m[mi[0] - 1][mi[1] - 1] = c;
		m[mi[1] - 1][mi[0] - 1] = -c;
	}
	return pfaffian_recursive(m);
}

KForm random_two_form(int n)
{
	KForm w(2, n);
	for (const auto &mi : multi_indices(n, 2))
		w.add(mi, Poly(Rational((int)(rng() % 9) - 4)));
	return w;
}

} // namespace

TEST_CASE("pfaffian matches the recursive oracle")
{
	// generic symbolic form in dimension 4
	KForm w(2, 4);
	for (const auto &mi : multi_indices(4, 2))
		w.set(mi, Poly::var("a" + std::to_string(mi[0]) +
		                    std::to_string(mi[1])));
	CHECK(pfaffian(w) == pfaffian_oracle(w));
	// random constant forms in dimensions 4 and 6
	for (int t = 0; t < 10; ++t) {
		KForm a = random_two_form(4);
		CHECK(pfaffian(a) == pfaffian_oracle(a));
		KForm b = random_two_form(6);
		CHECK(pfaffian(b) == pfaffian_oracle(b));
	}
	CHECK_THROWS_AS(pfaffian(KForm(2, 5)), OddDimension);
}

TEST_CASE("closed 2-form spaces of reference algebras")
{
	// one bracket only: a34 never appears
	ClosedFormSpace rh3 = closed_two_forms(catalog(Family::rh3));
	CHECK(rh3.basis.size() == 5);
	std::vector<Vec> expect;
	for (auto idx : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})
		expect.push_back(basis_form(4, {idx.first, idx.second}).to_vec());
	CHECK(Subspace::span(6, expect) == closed_forms(catalog(Family::rh3), 2));

	// full space for the abelian algebra
	CHECK(closed_two_forms(catalog(Family::R4)).basis.size() == 6);

	// rotation structure: dimension 3 with tied coefficients
	ClosedFormSpace r2p = closed_two_forms(catalog(Family::r2p));
	CHECK(r2p.basis.size() == 3);
	Subspace r2p_space = closed_forms(catalog(Family::r2p), 2);
	CHECK(r2p_space.contains(basis_form(4, {1, 2}).to_vec()));
	CHECK(r2p_space.contains(
	    (basis_form(4, {1, 3}) - basis_form(4, {2, 4})).to_vec()));
	CHECK(r2p_space.contains(
	    (basis_form(4, {1, 4}) + basis_form(4, {2, 3})).to_vec()));
	CHECK_FALSE(r2p_space.contains(basis_form(4, {1, 3}).to_vec()));
}

TEST_CASE("pfaffian on closed forms: reference conditions")
{
	// rh3: a14 a23 - a13 a24 in suitable coordinates
	LieAlgebra rh3 = catalog(Family::rh3);
	std::vector<KForm> basis = {
	    basis_form(4, {1, 2}), basis_form(4, {1, 3}), basis_form(4, {1, 4}),
	    basis_form(4, {2, 3}), basis_form(4, {2, 4})};
	Poly pf = pfaffian_of_span(
	    4, basis, {"a12", "a13", "a14", "a23", "a24"});
	CHECK(pf == Poly::parse("a14*a23 - a13*a24"));

	// rr3_lam at 0: a12 a34
	LieAlgebra rr30 = catalog(CatalogId::parse("rr3_lam:0"));
	std::vector<KForm> b0 = {basis_form(4, {1, 2}), basis_form(4, {1, 3}),
	                         basis_form(4, {1, 4}), basis_form(4, {3, 4})};
	CHECK(pfaffian_of_span(4, b0, {"a12", "a13", "a14", "a34"}) ==
	      Poly::parse("a12*a34"));

	// r2p: sum of two squares in the tied coordinates
	std::vector<KForm> b2 = {
	    basis_form(4, {1, 2}),
	    basis_form(4, {1, 3}) - basis_form(4, {2, 4}),
	    basis_form(4, {1, 4}) + basis_form(4, {2, 3})};
	CHECK(pfaffian_of_span(4, b2, {"a12", "a13m24", "a14p23"}) ==
	      Poly::parse("a13m24^2 + a14p23^2"));
}

TEST_CASE("symplectic existence decisions")
{
	auto n4 = admits_symplectic(catalog(Family::n4));
	CHECK(n4.symplectic);
	REQUIRE(n4.witness);
	CHECK(is_closed(catalog(Family::n4), n4.witness->form));
	CHECK_FALSE(pfaffian(n4.witness->form).constant_value().is_zero());

	CHECK_FALSE(admits_symplectic(catalog(Family::rr3)).symplectic);
	CHECK_FALSE(admits_symplectic(catalog(Family::r4)).symplectic);
	CHECK_FALSE(admits_symplectic(catalog(Family::d4)).symplectic);
	CHECK(admits_symplectic(catalog(Family::R4)).symplectic);
	CHECK(admits_symplectic(catalog(CatalogId::parse("d4p_del:1"))).symplectic);
}

TEST_CASE("exact symplectic decisions")
{
	auto r2r2 = exact_symplectic(catalog(Family::r2r2));
	CHECK(r2r2.symplectic);
	REQUIRE(r2r2.witness);
	CHECK(is_exact(catalog(Family::r2r2), r2r2.witness->form));

	CHECK_FALSE(exact_symplectic(catalog(Family::rh3)).symplectic);
	CHECK_FALSE(exact_symplectic(catalog(Family::R4)).symplectic);
	CHECK(exact_symplectic(catalog(Family::h4)).symplectic);
	CHECK(exact_symplectic(catalog(CatalogId::parse("d4_lam:1"))).symplectic);
	CHECK_FALSE(exact_symplectic(catalog(Family::n4)).symplectic);
}

TEST_CASE("orthogonal complements")
{
	LieAlgebra ab = catalog(Family::R4);
	KForm std_form = basis_form(4, {1, 2}) + basis_form(4, {3, 4});
	Subspace w = span_of_units(4, {1});
	Subspace perp = omega_orthogonal(ab, std_form, w);
	CHECK(perp == span_of_units(4, {1, 3, 4}));

	LieAlgebra rh3 = catalog(Family::rh3);
	KForm omega = basis_form(4, {1, 4}) + basis_form(4, {2, 3});
	Subspace lag = span_of_units(4, {3, 4});
	CHECK(omega_orthogonal(rh3, omega, lag) == lag);

	CHECK(omega_orthogonal(ab, std_form, Subspace(4)) ==
	      Subspace::full(4));
	CHECK_THROWS_AS(
	    omega_orthogonal(ab, basis_form(4, {1, 2}), w), DegenerateForm);
}

TEST_CASE("orthogonal complement properties on random data")
{
	LieAlgebra ab = catalog(Family::R4);
	int done = 0;
	while (done < 50) {
		KForm omega = random_two_form(4);
		if (pfaffian(omega).constant_value().is_zero())
			continue;
		// random subspace
		std::vector<Vec> vs;
		int k = 1 + (int)(rng() % 3);
		for (int i = 0; i < k; ++i) {
			Vec v(4);
			for (auto &x : v)
				x = Rational((int)(rng() % 7) - 3);
			vs.push_back(v);
		}
		Subspace w = Subspace::span(4, vs);
		Subspace perp = omega_orthogonal(ab, omega, w);
		CHECK(w.dim() + perp.dim() == 4);
		CHECK(omega_orthogonal(ab, omega, perp) == w);
		++done;
	}
}

TEST_CASE("isotropic ideal reports")
{
	LieAlgebra rh3 = catalog(Family::rh3);
	KForm omega = basis_form(4, {1, 4}) + basis_form(4, {2, 3});
	auto reports = isotropic_ideals(rh3, omega);
	bool found_lagrangian = false;
	for (const auto &r : reports) {
		if (r.ideal == span_of_units(4, {3, 4})) {
			CHECK(r.isotropic);
			CHECK(r.lagrangian);
			CHECK(r.abelian);
			found_lagrangian = true;
		}
		if (r.isotropic)
			CHECK(r.abelian);
	}
	CHECK(found_lagrangian);
}

TEST_CASE("exhaustive two-dimensional ideal enumeration")
{
	// the rotation algebras each have exactly one 2-dimensional ideal
	auto i1 = two_dim_ideals(catalog(CatalogId::parse("rr3p_gam:0")));
	REQUIRE(i1.size() == 1);
	CHECK(i1[0] == span_of_units(4, {2, 3}));

	auto i2 = two_dim_ideals(catalog(CatalogId::parse("r4p_gd:0,1")));
	REQUIRE(i2.size() == 1);
	CHECK(i2[0] == span_of_units(4, {2, 3}));

	auto i3 = two_dim_ideals(catalog(CatalogId::parse("d4p_del:1")));
	CHECK(i3.empty());

	// distinct-eigenvalue diagonal actions: the coordinate planes
	auto i4 = two_dim_ideals(catalog(CatalogId::parse("r4_ab:-1,-1/2")));
	CHECK(i4.size() == 3);
}

TEST_CASE("no lagrangian ideal certificates")
{
	CHECK(no_lagrangian_ideal(catalog(CatalogId::parse("rr3p_gam:0"))));
	CHECK(no_lagrangian_ideal(catalog(CatalogId::parse("r4p_gd:0,2"))));
	CHECK(no_lagrangian_ideal(catalog(CatalogId::parse("d4p_del:1/2"))));
	// sanity: algebras with lagrangian ideals are not certified
	CHECK_FALSE(no_lagrangian_ideal(catalog(CatalogId::parse("r4_ab:-1,-1/2"))));
}

TEST_CASE("pullback")
{
	KForm omega = basis_form(4, {1, 4}) + basis_form(4, {2, 3});
	CHECK(pullback(Mat::identity(4), omega) == omega);

	// sigma e1 = e1, sigma e2 = e2 + a e4, sigma e3 = c e3 - b e4,
	// sigma e4 = b e3 + c e4 pulls e14 + e23 back to
	// a e12 + b (e13 - e24) + c (e14 + e23)
	Rational a(2), b(3), c(5);
	Mat sigma(4, 4);
	sigma(0, 0) = 1;
	sigma(1, 1) = 1;
	sigma(3, 1) = a;
	sigma(2, 2) = c;
	sigma(3, 2) = -b;
	sigma(2, 3) = b;
	sigma(3, 3) = c;
	KForm pulled = pullback(sigma, omega);
	KForm expect = a * basis_form(4, {1, 2}) +
	               b * (basis_form(4, {1, 3}) - basis_form(4, {2, 4})) +
	               c * (basis_form(4, {1, 4}) + basis_form(4, {2, 3}));
	CHECK(pulled == expect);

	Mat diag = Mat::identity(4);
	diag(0, 0) = 2;
	CHECK(pullback(diag, basis_form(4, {1, 2})) ==
	      Rational(2) * basis_form(4, {1, 2}));

	Mat sing(4, 4);
	CHECK_THROWS_AS(pullback(sing, omega), SingularMap);
}

TEST_CASE("automorphism checks")
{
	LieAlgebra rh3 = catalog(Family::rh3);
	CHECK(is_automorphism(rh3, Mat::identity(4)));
	// a11..a22 block with a33 = det block
	Mat sigma(4, 4);
	sigma(0, 0) = 2;
	sigma(0, 1) = 1;
	sigma(1, 0) = 1;
	sigma(1, 1) = 1;
	sigma(2, 2) = 1; // det of the block
	sigma(3, 3) = 1;
	sigma(2, 0) = 7; // a31 free
	sigma(2, 1) = -2;
	sigma(3, 0) = 1;
	CHECK(is_automorphism(rh3, sigma));
	Mat bad = sigma;
	bad(2, 2) += 1;
	CHECK_FALSE(is_automorphism(rh3, bad));
}
