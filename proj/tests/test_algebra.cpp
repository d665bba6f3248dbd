#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torvex/algebra.hpp"

using namespace torvex;

static std::string failures(const Report& r)
{
    std::string s;
    for (auto& v : r.violations)
        s += v.identity + " @ " + v.witness + "\n";
    return s;
}

TEST_CASE("sl2 table basics")
{
    AlgebraTable t = load_algebra("sl2");
    CHECK(t.rank == 1);
    CHECK(t.roots.size() == 2);

    int b = *t.find_root_by_name("b");
    int mb = *t.find_root_by_name("mb");
    BasisSymbol xb{BasisSymbol::rootvec, b}, xmb{BasisSymbol::rootvec, mb};
    BasisSymbol h1{BasisSymbol::cartan, 1};

    // [H1, X(b)] = 2 X(b); [X(b), X(-b)] = H(b) = H1 since sigma_b = 1
    AlgebraElement lhs = bracket(t, AlgebraElement(h1), AlgebraElement(xb));
    CHECK(lhs == AlgebraElement(xb, Rat(2)));
    AlgebraElement ef = bracket(t, AlgebraElement(xb), AlgebraElement(xmb));
    CHECK(ef == AlgebraElement(h1));

    CHECK(invariant_form(t, AlgebraElement(xb), AlgebraElement(xmb)) == Rat(1));
    CHECK(invariant_form(t, AlgebraElement(h1), AlgebraElement(h1)) == Rat(2));
    CHECK(invariant_form(t, AlgebraElement(h1), AlgebraElement(xb)) == Rat(0));
    CHECK(t.root(b).norm == Rat(2));
    CHECK(t.root(b).sigma == 1);
    CHECK(t.root(mb).sigma == 1);
}

TEST_CASE("exhaustive verification of all shipped tables")
{
    for (auto& name : builtin_algebra_names()) {
        AlgebraTable t = load_algebra(name);
        Report r = verify_algebra(t);
        INFO(name, ": ", failures(r));
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("osp(1|2): odd self-bracket and sigma on negative odd roots")
{
    AlgebraTable t = load_algebra("osp12");
    int rp1 = *t.find_root_by_name("rp1");
    int rm1 = *t.find_root_by_name("rm1");
    CHECK(t.root(rp1).parity == Parity::odd);
    CHECK(t.root(rm1).sigma == -1);
    CHECK(t.root(rp1).sigma == 1);

    BasisSymbol x{BasisSymbol::rootvec, rp1};
    AlgebraElement sq = bracket(t, AlgebraElement(x), AlgebraElement(x));
    CHECK(!sq.is_zero());
    CHECK(homogeneous_parity(t, sq) == Parity::even);

    // even single symbol brackets to zero with itself
    BasisSymbol h1{BasisSymbol::cartan, 1};
    CHECK(bracket(t, AlgebraElement(h1), AlgebraElement(h1)).is_zero());

    // mixed-parity form values vanish
    CHECK(invariant_form(t, AlgebraElement(x), AlgebraElement(h1)) == Rat(0));
}

TEST_CASE("sl3: Chevalley constants are root-string integers")
{
    AlgebraTable t = load_algebra("sl3");
    CHECK(t.rank == 2);
    CHECK(t.roots.size() == 6);
    int a = *t.find_root(std::vector<int>{1, 0});
    int b = *t.find_root(std::vector<int>{0, 1});
    AlgebraElement n = bracket(t, AlgebraElement(BasisSymbol{BasisSymbol::rootvec, a}),
                               AlgebraElement(BasisSymbol{BasisSymbol::rootvec, b}));
    CHECK(n.size() == 1);
    // alpha-string through beta has r = 0, so |N| = 1
    Rat c = n.terms().begin()->second;
    CHECK((c == 1 || c == -1));
}

TEST_CASE("defect detection: perturbed constant breaks Jacobi")
{
    AlgebraTable t = load_algebra("sl2");
    int b = *t.find_root_by_name("b");
    int mb = *t.find_root_by_name("mb");
    BasisSymbol xb{BasisSymbol::rootvec, b}, xmb{BasisSymbol::rootvec, mb};
    AlgebraElement wrong(BasisSymbol{BasisSymbol::cartan, 1}, Rat(2));
    t.set_bracket(xb, xmb, wrong);
    t.set_bracket(xmb, xb, -wrong);
    Report r = verify_algebra(t);
    CHECK(!r.passed());
}

TEST_CASE("parser rejects malformed tables")
{
    CHECK_THROWS(parse_algebra_table(std::string("algebra x\nrank 0\n")));
    CHECK_THROWS(load_algebra("nosuch"));
}
