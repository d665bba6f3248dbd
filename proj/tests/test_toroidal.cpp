#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torvex/toroidal.hpp"

using namespace torvex;

static std::string failures(const Report& r)
{
    std::string s;
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i)
        s += r.violations[i].identity + " @ " + r.violations[i].witness + "\n";
    return s;
}

TEST_CASE("gauge eliminates one central symbol per degree")
{
    AlgebraTable t = load_algebra("sl2");
    ToroidalAlgebra tor(t, 2);

    CHECK(ToroidalAlgebra::gauge_index({0, 0}) == 0);
    CHECK(ToroidalAlgebra::gauge_index({1, 0}) == 1);
    CHECK(ToroidalAlgebra::gauge_index({1, -2}) == 2);

    // Degree-zero K_i are genuine central elements: nothing to eliminate.
    ToroidalElement k1 = tor.central_symbol({0, 0}, 1, Rat(1));
    CHECK(k1.size() == 1);

    // t^m K_2 with m = (2,3): gauge index is 2, so it rewrites to
    // -(2/3) t^m K_1 via sum_i m_i t^m K_i = 0.
    ToroidalElement g = tor.central_symbol({2, 3}, 2, Rat(1));
    CHECK(g.size() == 1);
    ToroidalSymbol k1m{ToroidalSymbol::central, 1, {2, 3}};
    CHECK(g.coeff(k1m) == Rat(-2, 3));

    // The gauged symbol at its own index is untouched.
    ToroidalElement h = tor.central_symbol({2, 3}, 1, Rat(1));
    CHECK(h == ToroidalElement(k1m));

    // d(t^m) t^{-m} lands at degree zero where every K_i survives.
    ToroidalElement c = tor.two_cocycle({1, 1}, {-1, -1});
    CHECK(c.coeff({ToroidalSymbol::central, 1, {0, 0}}) == Rat(1));
    CHECK(c.coeff({ToroidalSymbol::central, 2, {0, 0}}) == Rat(1));
}

TEST_CASE("bracket reproduces loop, central, and derivation rules")
{
    AlgebraTable t = load_algebra("sl2");
    int b = *t.find_root_by_name("b");
    int mb = *t.find_root_by_name("mb");
    ToroidalAlgebra tor(t, 2);

    ToroidalSymbol xb{ToroidalSymbol::rootvec, b, {1, 0}};
    ToroidalSymbol xmb{ToroidalSymbol::rootvec, mb, {-1, 0}};

    // [X(b) t_1, X(-b) t_1^{-1}] = H1 + (X(b),X(-b)) t^0 K_1
    ToroidalElement br = tor.bracket(xb, xmb);
    CHECK(br.coeff({ToroidalSymbol::cartan, 1, {0, 0}}) == Rat(1));
    CHECK(br.coeff({ToroidalSymbol::central, 1, {0, 0}}) == Rat(1));
    CHECK(br.size() == 2);

    // Central symbols commute with everything.
    ToroidalSymbol k{ToroidalSymbol::central, 1, {2, 3}};
    CHECK(tor.bracket(k, xb).is_zero());
    CHECK(tor.bracket(xb, k).is_zero());

    // [d_i, X (x) t^m] = m_i X (x) t^m
    ToroidalSymbol d1{ToroidalSymbol::derivation, 1, {0, 0}};
    ToroidalSymbol d2{ToroidalSymbol::derivation, 2, {0, 0}};
    CHECK(tor.bracket(d1, xb) == ToroidalElement(xb, Rat(1)));
    CHECK(tor.bracket(d2, xb).is_zero());
    ToroidalSymbol xdeep{ToroidalSymbol::rootvec, b, {2, -1}};
    CHECK(tor.bracket(d2, xdeep) == ToroidalElement(xdeep, Rat(-1)));
    // [d_i, t^m K_j] = m_i t^m K_j
    CHECK(tor.bracket(d1, k) == ToroidalElement(k, Rat(2)));

    // Cartan-Cartan at opposite degrees: pure central term (H1,H1) m_1 K_1.
    ToroidalSymbol h1{ToroidalSymbol::cartan, 1, {1, 0}};
    ToroidalSymbol h2{ToroidalSymbol::cartan, 1, {-1, 0}};
    ToroidalElement hh = tor.bracket(h1, h2);
    CHECK(hh == ToroidalElement({ToroidalSymbol::central, 1, {0, 0}}, Rat(2)));
}

TEST_CASE("weights are additive under the bracket")
{
    AlgebraTable t = load_algebra("sl2");
    int b = *t.find_root_by_name("b");
    ToroidalAlgebra tor(t, 2);

    ToroidalSymbol xb{ToroidalSymbol::rootvec, b, {1, -2}};
    ToroidalWeight w = tor.weight_of(xb);
    CHECK(w.root_coords == std::vector<int>{1});
    CHECK(w.delta == std::vector<int>{1, -2});

    ToroidalSymbol d1{ToroidalSymbol::derivation, 1, {0, 0}};
    ToroidalWeight wd = tor.weight_of(d1);
    CHECK(wd.delta == std::vector<int>{0, 0});
}

TEST_CASE("B_lambda acts as a degree shear")
{
    AlgebraTable t = load_algebra("sl2");
    int b = *t.find_root_by_name("b");
    ToroidalAlgebra tor(t, 2);

    auto bmat = tor.b_lambda_matrix({2});
    CHECK(bmat == std::vector<std::vector<int>>{{1, 2}, {0, 1}});

    // t^{(1,0)} -> t^{(1,2)}
    ToroidalSymbol xb{ToroidalSymbol::rootvec, b, {1, 0}};
    ToroidalElement img = tor.b_lambda({2}, ToroidalElement(xb));
    CHECK(img == ToroidalElement({ToroidalSymbol::rootvec, b, {1, 2}}));

    // Degree (0, m_2) is fixed.
    ToroidalSymbol xv{ToroidalSymbol::rootvec, b, {0, 3}};
    CHECK(tor.b_lambda({2}, ToroidalElement(xv)) == ToroidalElement(xv));

    // d_2 -> d_2 - 2 d_1 (inverse transpose), d_1 fixed.
    ToroidalSymbol d1{ToroidalSymbol::derivation, 1, {0, 0}};
    ToroidalSymbol d2{ToroidalSymbol::derivation, 2, {0, 0}};
    CHECK(tor.b_lambda({2}, ToroidalElement(d1)) == ToroidalElement(d1));
    ToroidalElement d2img = tor.b_lambda({2}, ToroidalElement(d2));
    CHECK(d2img.coeff(d2) == Rat(1));
    CHECK(d2img.coeff(d1) == Rat(-2));
}

TEST_CASE("relation sweep passes for sl2, n = 2 and n = 3")
{
    AlgebraTable t = load_algebra("sl2");
    {
        ToroidalAlgebra tor(t, 2);
        Report r = verify_toroidal_algebra(tor, 2, 1);
        INFO(failures(r));
        CHECK(r.passed());
        CHECK(r.checked > 1000);
    }
    {
        ToroidalAlgebra tor(t, 3);
        Report r = verify_toroidal_algebra(tor, 1, 1);
        INFO(failures(r));
        CHECK(r.passed());
    }
}

TEST_CASE("relation sweep passes for osp(1|2) with odd symbols")
{
    AlgebraTable t = load_algebra("osp12");
    ToroidalAlgebra tor(t, 2);
    Report r = verify_toroidal_algebra(tor, 1, 1);
    INFO(failures(r));
    CHECK(r.passed());

    // Odd-odd bracket is symmetric: [x, y] = [y, x] for odd x, y.
    auto odd = [&](const std::string& name) {
        return ToroidalSymbol{ToroidalSymbol::rootvec, *t.find_root_by_name(name), {1, 0}};
    };
    ToroidalSymbol f = odd("rm1");
    CHECK(tor.parity(f) == Parity::odd);
    CHECK(tor.bracket(f, f) == tor.bracket(f, f));
    CHECK(!tor.bracket(f, f).is_zero());
}

TEST_CASE("defect detection: perturbed structure constant breaks Jacobi")
{
    AlgebraTable t = load_algebra("sl2");
    int b = *t.find_root_by_name("b");
    BasisSymbol h1{BasisSymbol::cartan, 1};
    BasisSymbol xb{BasisSymbol::rootvec, b};
    t.set_bracket(h1, xb, AlgebraElement(xb, Rat(3))); // true constant is 2
    ToroidalAlgebra tor(t, 2);
    Report r = verify_toroidal_algebra(tor, 1, 1);
    CHECK(!r.passed());
}
