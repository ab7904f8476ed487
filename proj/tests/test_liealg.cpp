#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesymp/cecoh.hpp"
#include "liesymp/liealg.hpp"

#include <random>

using namespace liesymp;

namespace {

std::mt19937 rng(90210);

Mat random_invertible(int n)
{
	for (;;) {
		Mat m(n, n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				m(i, j) = Rational((int)(rng() % 7) - 3);
		if (!m.det().is_zero())
			return m;
	}
}

Subspace span_of_units(int n, std::initializer_list<int> idx)
{
	std::vector<Vec> v;
	for (int i : idx)
		v.push_back(unit_vec(n, i - 1));
	return Subspace::span(n, v);
}

} // namespace

TEST_CASE("structure constants validated against Jacobi")
{
	LieAlgebra g(4, {{1, 2, 3, Rational(1)}});
	CHECK(g.bracket_basis(1, 2) == unit_vec(4, 2));
	LieAlgebra ab(4, {});
	CHECK(is_abelian(ab));
	// [e1,e2]=e3, [e4,e1]=e1, [e4,e2]=e2 violates Jacobi on (1,2,4)
	CHECK_THROWS_AS(LieAlgebra(4, {{1, 2, 3, Rational(1)},
	                               {1, 4, 1, Rational(-1)},
	                               {2, 4, 2, Rational(-1)}}),
	                NotALieAlgebra);
	try {
		LieAlgebra(4, {{1, 2, 3, Rational(1)},
		               {1, 4, 1, Rational(-1)},
		               {2, 4, 2, Rational(-1)}});
	} catch (const NotALieAlgebra &e) {
		CHECK(e.triple == std::array<int, 3>{1, 2, 4});
	}
}

TEST_CASE("catalog bracket tables")
{
	LieAlgebra rh3 = catalog(Family::rh3);
	CHECK(rh3.bracket_basis(1, 2) == unit_vec(4, 2));
	CHECK(is_zero(rh3.bracket_basis(1, 3)));

	LieAlgebra n4 = catalog(Family::n4);
	// [e4,e1] = e2, [e4,e2] = e3
	CHECK(n4.bracket(unit_vec(4, 3), unit_vec(4, 0)) == unit_vec(4, 1));
	CHECK(n4.bracket(unit_vec(4, 3), unit_vec(4, 1)) == unit_vec(4, 2));

	LieAlgebra r2p = catalog(Family::r2p);
	CHECK(r2p.bracket(unit_vec(4, 0), unit_vec(4, 2)) == unit_vec(4, 2));
	CHECK(r2p.bracket(unit_vec(4, 1), unit_vec(4, 2)) == unit_vec(4, 3));
	Vec m3 = r2p.bracket(unit_vec(4, 1), unit_vec(4, 3));
	CHECK(m3 == Vec{Rational(0), Rational(0), Rational(-1), Rational(0)});

	LieAlgebra rr30 = catalog(CatalogId::parse("rr3_lam:0"));
	CHECK(rr30.bracket_basis(1, 2) == unit_vec(4, 1));
	CHECK(is_zero(rr30.bracket_basis(1, 3)));

	LieAlgebra h4 = catalog(Family::h4);
	// [e4,e2] = e1 + e2/2
	Vec v = h4.bracket(unit_vec(4, 3), unit_vec(4, 1));
	CHECK(v == Vec{Rational(1), Rational(1, 2), Rational(0), Rational(0)});
}

TEST_CASE("catalog parameter ranges")
{
	CHECK_THROWS_AS(catalog(CatalogId::parse("rr3_lam:2")),
	                InvalidParameter);
	CHECK_THROWS_AS(catalog(CatalogId::parse("rr3p_gam:-1")),
	                InvalidParameter);
	CHECK_THROWS_AS(catalog(CatalogId::parse("d4_lam:0")), InvalidParameter);
	CHECK_THROWS_AS(catalog(CatalogId::parse("r4p_gd:1,0")),
	                InvalidParameter);
	CHECK_THROWS_AS(catalog(CatalogId::parse("r4_ab:1/2,0")),
	                InvalidParameter);
	CHECK_THROWS_AS(catalog(CatalogId::parse("r4_ab:-1,1/2")),
	                InvalidParameter);
	CHECK_NOTHROW(catalog(CatalogId::parse("r4_ab:-1,-1/2")));
	CHECK_NOTHROW(catalog(CatalogId::parse("r4_ab:-1,0")));
	CHECK_THROWS_AS(CatalogId::parse("nosuch"), InvalidParameter);
	CHECK_THROWS_AS(CatalogId::parse("rr3_lam"), InvalidParameter);
	CHECK(CatalogId::parse("d4_lam:3/4").str() == "d4_lam:3/4");
	CHECK(all_families().size() == 16);
}

TEST_CASE("series, center, unimodularity")
{
	LieAlgebra rh3 = catalog(Family::rh3);
	CHECK(center(rh3) == span_of_units(4, {3, 4}));

	LieAlgebra ab = catalog(Family::R4);
	auto ds = derived_series(ab);
	CHECK(ds.size() == 2);
	CHECK(ds[1].dim() == 0);

	LieAlgebra n4 = catalog(Family::n4);
	CHECK(derived_subalgebra(n4) == span_of_units(4, {2, 3}));
	CHECK(is_unimodular(n4));
	CHECK_FALSE(is_unimodular(catalog(Family::r2r2)));
	CHECK(is_unimodular(ab));
	CHECK(is_unimodular(catalog(CatalogId::parse("rr3_lam:-1"))));
	CHECK(is_unimodular(catalog(CatalogId::parse("rr3p_gam:0"))));
	CHECK(is_unimodular(catalog(CatalogId::parse("r4_mu:-1/2"))));
	CHECK(is_unimodular(catalog(CatalogId::parse("r4_ab:-2/3,-1/3"))));
	CHECK(is_unimodular(catalog(CatalogId::parse("r4p_gd:-1/2,2"))));
	CHECK(is_unimodular(catalog(Family::d4)));
	CHECK(is_unimodular(catalog(CatalogId::parse("d4p_del:0"))));
	CHECK_FALSE(is_unimodular(catalog(Family::h4)));
	CHECK_FALSE(is_unimodular(catalog(Family::rr3)));

	auto lcs = lower_central_series(n4);
	CHECK(lcs.back().dim() == 0);
	CHECK(is_nilpotent_algebra(n4));
	CHECK_FALSE(is_nilpotent_algebra(catalog(Family::rr3)));
	CHECK(is_solvable(catalog(Family::d4)));
}

TEST_CASE("derivations")
{
	CHECK(derivations(catalog(Family::R4)).size() == 16);
	CHECK(derivations(catalog(Family::rh3)).size() == 10);
	for (const auto &d : derivations(catalog(Family::d4)))
		CHECK(is_derivation(catalog(Family::d4), d));
	Mat bad = Mat::identity(4);
	CHECK_FALSE(is_derivation(catalog(Family::rh3), bad));
}

TEST_CASE("nilradical")
{
	CHECK(nilradical(catalog(Family::R4)).dim() == 4);
	CHECK(nilradical(catalog(Family::rh3)).dim() == 4); // nilpotent algebra
	CHECK(nilradical(catalog(Family::rr3)) == span_of_units(4, {2, 3, 4}));
	CHECK(nilradical(catalog(Family::r2r2)) == span_of_units(4, {2, 4}));
	CHECK(nilradical(catalog(Family::r2p)) == span_of_units(4, {3, 4}));
	CHECK(nilradical(catalog(Family::h4)) == span_of_units(4, {1, 2, 3}));
	CHECK(nilradical(catalog(CatalogId::parse("rr3_lam:1/2"))) ==
	      span_of_units(4, {2, 3, 4}));
}

TEST_CASE("quotient by an ideal")
{
	LieAlgebra d4 = catalog(Family::d4);
	Subspace w = span_of_units(4, {3});
	REQUIRE(is_ideal(d4, w));
	Quotient q = quotient(d4, w);
	CHECK(q.algebra.dim() == 3);
	CHECK(q.algebra.bracket(unit_vec(3, 2), unit_vec(3, 0)) ==
	      unit_vec(3, 0));
}

TEST_CASE("fingerprint basics")
{
	Fingerprint rh3 = fingerprint(catalog(Family::rh3));
	CHECK(rh3.dim_center == 2);
	CHECK(rh3.betti == std::vector<int>{1, 3, 4, 3, 1});
	CHECK(rh3.dim_der == 10);
	CHECK(rh3.unimodular);
	Fingerprint ab = fingerprint(catalog(Family::R4));
	CHECK(ab.dim_derived == 0);
	CHECK(ab.dim_center == 4);
	CHECK(ab.betti == std::vector<int>{1, 4, 6, 4, 1});
	CHECK(ab.dim_der == 16);
	CHECK(ab.nilradical_dim == 4);
}

TEST_CASE("fingerprint is invariant under change of basis")
{
	for (const char *id : {"rh3", "n4", "d4_lam:3/4", "r4_ab:-1,-1/2",
	                       "rr3p_gam:2", "h4"}) {
		LieAlgebra g = catalog(CatalogId::parse(id));
		Fingerprint fp = fingerprint(g);
		for (int t = 0; t < 3; ++t) {
			LieAlgebra conj = g.conjugate(random_invertible(4));
			CHECK_MESSAGE(fingerprint(conj) == fp, "algebra ", id);
		}
	}
}

TEST_CASE("identify: catalog round trips")
{
	for (const char *id :
	     {"R4", "rh3", "rr3", "rr3_lam:0", "rr3_lam:-1", "rr3_lam:1/2",
	      "rr3p_gam:0", "rr3p_gam:2", "r2r2", "r2p", "n4", "r4", "r4_mu:0",
	      "r4_mu:-1", "r4_mu:-1/2", "r4_ab:-1,-1", "r4_ab:-1,-1/2",
	      "r4_ab:-1/2,1/2", "r4_ab:-2/3,-1/3", "r4p_gd:0,1", "r4p_gd:-1/2,2",
	      "r4p_gd:1,1", "d4", "d4_lam:1", "d4_lam:2", "d4_lam:3/4", "h4",
	      "d4p_del:0", "d4p_del:1"}) {
		CatalogId cid = CatalogId::parse(id);
		IdentifyResult r = identify(catalog(cid));
		REQUIRE_MESSAGE(r.kind == IdentifyResult::Kind::Identified,
		                "failed on ", id, " -> ", r.str());
		CHECK_MESSAGE(r.id == cid, "expected ", id, " got ", r.str());
	}
}

TEST_CASE("identify survives a random change of basis")
{
	CatalogId id = CatalogId::parse("d4_lam:3/4");
	LieAlgebra g = catalog(id);
	for (int t = 0; t < 5; ++t) {
		LieAlgebra conj = g.conjugate(random_invertible(4));
		IdentifyResult r = identify(conj);
		REQUIRE(r.kind == IdentifyResult::Kind::Identified);
		CHECK(r.id == id);
	}
}

TEST_CASE("b1 equals codimension of the derived subalgebra")
{
	for (const char *id : {"rh3", "rr3", "rr3_lam:0", "r2r2", "r2p", "n4",
	                       "r4", "d4", "h4", "d4_lam:3"}) {
		LieAlgebra g = catalog(CatalogId::parse(id));
		CHECK(betti(g, 1) == 4 - (int)derived_subalgebra(g).dim());
	}
}
