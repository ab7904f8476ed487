#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesymp/exterior.hpp"

#include <random>

using namespace liesymp;

namespace {

std::mt19937 rng(424242);

Rational rnd()
{
	return Rational((int)(rng() % 9) - 4, (int)(rng() % 2) + 1);
}

KForm random_form(int degree, int n, int terms)
{
	auto mis = multi_indices(n, degree);
	KForm w(degree, n);
	for (int t = 0; t < terms; ++t)
		w.add(mis[rng() % mis.size()], Poly(rnd()));
	return w;
}

Vec random_vec(int n)
{
	Vec v(n);
	for (auto &x : v)
		x = rnd();
	return v;
}

// independent oracle for the wedge product: evaluate (a ^ b) on vectors via
// the shuffle sum  sum_sigma sign(sigma) a(v_sigma(1..p)) b(v_sigma(p+1..))
Rational wedge_eval_oracle(const KForm &a, const KForm &b,
                           const std::vector<Vec> &vectors)
{
	int p = a.degree(), q = b.degree();
	std::vector<int> idx(p + q);
	for (int i = 0; i < p + q; ++i)
		idx[i] = i;
	// enumerate p-subsets for the first factor
	std::vector<int> comb(p);
	Rational total(0);
	std::function<void(int, int)> rec = [&](int pos, int start) {
		if (pos == p) {
			std::vector<Vec> va, vb;
			std::vector<bool> used(p + q, false);
			for (int i : comb) {
				va.push_back(vectors[i]);
				used[i] = true;
			}
			for (int i = 0; i < p + q; ++i)
				if (!used[i])
					vb.push_back(vectors[i]);
			// sign of the shuffle: count inversions of (comb, rest)
			int inv = 0;
			for (int i = 0; i < p; ++i)
				inv += comb[i] - i;
			Rational term = a.evaluate(va).constant_value() *
			                b.evaluate(vb).constant_value();
			total += (inv % 2 ? -term : term);
			return;
		}
		for (int v = start; v <= p + q - (p - pos); ++v) {
			comb[pos] = v;
			rec(pos + 1, v + 1);
		}
	};
	if (p == 0)
		return a.coeff({}).constant_value() *
		       b.evaluate(vectors).constant_value();
	rec(0, 0);
	return total;
}

} // namespace

TEST_CASE("multi-index bookkeeping")
{
	for (int n : {3, 4, 6, 8})
		for (int k = 0; k <= n; ++k) {
			auto mis = multi_indices(n, k);
			CHECK(mis.size() == binomial(n, k));
			for (size_t r = 0; r < mis.size(); ++r)
				CHECK(multi_index_rank(n, mis[r]) == r);
		}
}

TEST_CASE("wedge basic identities")
{
	KForm e1 = KForm::basis(4, {1});
	KForm e2 = KForm::basis(4, {2});
	CHECK(wedge(e1, e2) == KForm::basis(4, {1, 2}));
	CHECK(wedge(e1, e1).is_zero());
	// (e14 + e23) ^ (e14 + e23) = 2 e1234
	KForm w = KForm::basis(4, {1, 4}) + KForm::basis(4, {2, 3});
	KForm sq = wedge(w, w);
	KForm expect = Rational(2) * KForm::basis(4, {1, 2, 3, 4});
	CHECK(sq == expect);
}

TEST_CASE("power of the standard symplectic form")
{
	KForm w = KForm::basis(4, {1, 2}) + KForm::basis(4, {3, 4});
	CHECK(power(w, 2) == Rational(2) * KForm::basis(4, {1, 2, 3, 4}));
	CHECK(power(KForm::basis(4, {1, 2}), 2).is_zero());
	CHECK_THROWS_AS(power(w, 3), DimMismatch);
}

TEST_CASE("generic 2-form squares to twice its Pfaffian")
{
	KForm w(2, 4);
	for (const auto &mi : multi_indices(4, 2)) {
		std::string name = "a" + std::to_string(mi[0]) +
		                   std::to_string(mi[1]);
		w.set(mi, Poly::var(name));
	}
	KForm sq = power(w, 2);
	Poly expect = Poly::parse("2*(a12*a34 - a13*a24 + a14*a23)");
	CHECK(sq.coeff({1, 2, 3, 4}) == expect);
}

TEST_CASE("graded commutativity and associativity on random forms")
{
	for (int trial = 0; trial < 30; ++trial) {
		int n = 4 + (int)(rng() % 2) * 2;
		int p = 1 + (int)(rng() % 2), q = 1 + (int)(rng() % 2),
		    r = 1 + (int)(rng() % 2);
		KForm a = random_form(p, n, 3), b = random_form(q, n, 3),
		      c = random_form(r, n, 2);
		KForm ab = wedge(a, b), ba = wedge(b, a);
		if ((p * q) % 2)
			CHECK(ab == -ba);
		else
			CHECK(ab == ba);
		CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
		// bilinearity
		CHECK(wedge(a + a, b) == ab + ab);
	}
}

TEST_CASE("wedge agrees with the shuffle evaluation oracle")
{
	for (int trial = 0; trial < 40; ++trial) {
		int n = 4;
		int p = 1 + (int)(rng() % 2), q = 1 + (int)(rng() % 2);
		if (p + q > n)
			continue;
		KForm a = random_form(p, n, 3), b = random_form(q, n, 3);
		KForm ab = wedge(a, b);
		std::vector<Vec> vs;
		for (int i = 0; i < p + q; ++i)
			vs.push_back(random_vec(n));
		CHECK(ab.evaluate(vs).constant_value() ==
		      wedge_eval_oracle(a, b, vs));
	}
}

TEST_CASE("determinant evaluation convention")
{
	// (e1 ^ e2)(e1, e2) = 1, no 1/k! factor
	KForm w = KForm::basis(4, {1, 2});
	CHECK(w.evaluate({unit_vec(4, 0), unit_vec(4, 1)}).constant_value() ==
	      Rational(1));
	CHECK(w.evaluate({unit_vec(4, 1), unit_vec(4, 0)}).constant_value() ==
	      Rational(-1));
}

TEST_CASE("coefficient vector round trip")
{
	KForm w = random_form(2, 4, 4);
	// random constant form: to_vec/from_vec round trip
	CHECK(KForm::from_vec(2, 4, w.to_vec()) == w);
}

TEST_CASE("degree and dimension guards")
{
	CHECK_THROWS_AS(KForm(5, 4), DimMismatch);
	KForm a(2, 4), b(2, 5);
	CHECK_THROWS_AS(wedge(a, b), DimMismatch);
	KForm w(2, 4);
	CHECK_THROWS_AS(w.set({2, 1}, Poly(1)), DimMismatch);
	CHECK_THROWS_AS(w.set({1, 5}, Poly(1)), DimMismatch);
}
