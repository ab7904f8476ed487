#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesymp/linalg.hpp"

#include <random>

using namespace liesymp;

namespace {

std::mt19937 rng(777);

Mat random_matrix(size_t n)
{
	Mat m(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			m(i, j) = Rational((int)(rng() % 11) - 5, (int)(rng() % 3) + 1);
	return m;
}

Mat random_invertible(size_t n)
{
	for (;;) {
		Mat m = random_matrix(n);
		if (!m.det().is_zero())
			return m;
	}
}

} // namespace

TEST_CASE("rref, rank, kernel")
{
	Mat m{{Rational(1), Rational(2), Rational(3)},
	      {Rational(2), Rational(4), Rational(6)},
	      {Rational(1), Rational(0), Rational(1)}};
	CHECK(m.rank() == 2);
	auto ker = m.kernel();
	REQUIRE(ker.size() == 1);
	CHECK(is_zero(m.apply(ker[0])));
}

TEST_CASE("det and inverse agree")
{
	for (int i = 0; i < 25; ++i) {
		Mat m = random_invertible(4);
		Mat inv;
		REQUIRE(m.inverse(inv));
		CHECK(m * inv == Mat::identity(4));
		CHECK(inv * m == Mat::identity(4));
		CHECK(m.det() * inv.det() == Rational(1));
	}
	Mat sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
	Mat out;
	CHECK_FALSE(sing.inverse(out));
	CHECK(sing.det().is_zero());
}

TEST_CASE("solve")
{
	Mat m{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
	Vec x;
	REQUIRE(m.solve({Rational(3), Rational(1)}, x));
	CHECK(x == Vec{Rational(2), Rational(1)});
	Mat inc{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
	CHECK_FALSE(inc.solve({Rational(0), Rational(1)}, x));
}

TEST_CASE("characteristic polynomial via Faddeev-LeVerrier")
{
	Mat m{{Rational(2), Rational(1)}, {Rational(0), Rational(3)}};
	auto c = m.char_poly(); // x^2 - 5x + 6
	REQUIRE(c.size() == 3);
	CHECK(c[2] == Rational(1));
	CHECK(c[1] == Rational(-5));
	CHECK(c[0] == Rational(6));
	// Cayley-Hamilton on random matrices
	for (int i = 0; i < 10; ++i) {
		Mat a = random_matrix(3);
		auto p = a.char_poly();
		Mat acc(3, 3), power = Mat::identity(3);
		for (size_t k = 0; k < p.size(); ++k) {
			Mat term = power;
			term *= p[k];
			acc = acc + term;
			power = power * a;
		}
		CHECK(acc.is_zero());
	}
	Mat nil{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
	CHECK(nil.is_nilpotent());
	CHECK_FALSE(Mat::identity(2).is_nilpotent());
}

TEST_CASE("subspace canonical form")
{
	// two spanning sets of the same plane yield identical bases
	Subspace a = Subspace::span(
	    3, {{Rational(1), Rational(1), Rational(0)},
	        {Rational(0), Rational(1), Rational(1)}});
	Subspace b = Subspace::span(
	    3, {{Rational(2), Rational(3), Rational(1)},
	        {Rational(1), Rational(2), Rational(1)}});
	CHECK(a == b);
	CHECK(a.dim() == 2);
	CHECK(a.contains(Vec{Rational(1), Rational(0), Rational(-1)}));
	CHECK_FALSE(a.contains(Vec{Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("subspace sum and intersection")
{
	Subspace x = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
	Subspace y = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
	CHECK(x.sum(y).dim() == 2);
	CHECK(x.intersect(y).dim() == 0);
	Subspace plane = Subspace::span(
	    3, {{Rational(1), Rational(0), Rational(0)},
	        {Rational(0), Rational(1), Rational(0)}});
	CHECK(plane.intersect(x) == x);
	// dim(U + W) + dim(U cap W) = dim U + dim W on random subspaces
	for (int i = 0; i < 20; ++i) {
		std::vector<Vec> us, ws;
		for (int k = 0; k < 2; ++k) {
			us.push_back(random_matrix(4).row(0));
			ws.push_back(random_matrix(4).row(1));
		}
		Subspace u = Subspace::span(4, us), w = Subspace::span(4, ws);
		CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
	}
}

TEST_CASE("complement basis")
{
	Subspace s = Subspace::span(
	    4, {{Rational(1), Rational(2), Rational(0), Rational(0)},
	        {Rational(0), Rational(0), Rational(1), Rational(5)}});
	auto extra = s.complement_basis();
	CHECK(extra.size() == 2);
	std::vector<Vec> all = s.basis();
	all.insert(all.end(), extra.begin(), extra.end());
	CHECK(Subspace::span(4, all).dim() == 4);
}

TEST_CASE("coordinates in the subspace basis")
{
	Subspace s = Subspace::span(
	    3, {{Rational(1), Rational(0), Rational(1)},
	        {Rational(0), Rational(1), Rational(2)}});
	Vec v{Rational(2), Rational(3), Rational(8)};
	Vec coords;
	REQUIRE(s.coordinates(v, coords));
	Vec rebuilt(3, Rational(0));
	for (size_t i = 0; i < coords.size(); ++i)
		rebuilt = rebuilt + coords[i] * s.basis()[i];
	CHECK(rebuilt == v);
	CHECK_FALSE(s.coordinates(Vec{Rational(0), Rational(0), Rational(1)},
	                          coords));
}
