#include "torvex/toroidal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torvex {

namespace {

std::string multi_degree_string(const std::vector<int>& m)
{
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

bool is_zero_degree(const std::vector<int>& m)
{
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

// Exact inverse of an integer matrix by Gauss-Jordan over Rat.
std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<int>>& b)
{
    std::size_t n = b.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(b[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("singular matrix");
        std::swap(a[p], a[c]);
        Rat inv = Rat(1) / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a[r][c] != 0) {
                Rat f = a[r][c];
                for (std::size_t j = 0; j < 2 * n; ++j)
                    a[r][j] -= f * a[c][j];
            }
    }
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = a[i][n + j];
    return out;
}

} // namespace

ToroidalAlgebra::ToroidalAlgebra(const AlgebraTable& alg, int n) : alg_(alg), n_(n)
{
    if (n < 2)
        throw std::invalid_argument("toroidal algebra needs n >= 2");
}

Parity ToroidalAlgebra::parity(const ToroidalSymbol& s) const
{
    return s.kind == ToroidalSymbol::rootvec ? alg_.root(s.index).parity : Parity::even;
}

std::string ToroidalAlgebra::symbol_string(const ToroidalSymbol& s) const
{
    switch (s.kind) {
    case ToroidalSymbol::rootvec:
        return "X(" + alg_.root(s.index).name + ")@" + multi_degree_string(s.m);
    case ToroidalSymbol::cartan:
        return "H" + std::to_string(s.index) + "@" + multi_degree_string(s.m);
    case ToroidalSymbol::central:
        return "t^" + multi_degree_string(s.m) + "K" + std::to_string(s.index);
    default:
        return "d" + std::to_string(s.index);
    }
}

std::string ToroidalAlgebra::element_string(const ToroidalElement& e) const
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (auto& [sym, c] : e.terms()) {
        if (!s.empty())
            s += " + ";
        s += rat_to_string(c) + "*" + symbol_string(sym);
    }
    return s;
}

int ToroidalAlgebra::gauge_index(const std::vector<int>& m)
{
    for (int j = int(m.size()); j >= 1; --j)
        if (m[std::size_t(j - 1)] != 0)
            return j;
    return 0;
}

ToroidalElement ToroidalAlgebra::central_symbol(const std::vector<int>& m, int i,
                                                const Rat& coeff) const
{
    ToroidalElement out;
    int j = gauge_index(m);
    if (j == 0 || i != j) {
        out.add({ToroidalSymbol::central, i, m}, coeff);
        return out;
    }
    // t^m K_j = -(1/m_j) sum_{i != j} m_i t^m K_i
    Rat scale = -coeff / Rat(m[std::size_t(j - 1)]);
    for (int k = 1; k <= n_; ++k)
        if (k != j && m[std::size_t(k - 1)] != 0)
            out.add({ToroidalSymbol::central, k, m}, scale * Rat(m[std::size_t(k - 1)]));
    return out;
}

ToroidalElement ToroidalAlgebra::two_cocycle(const std::vector<int>& m,
                                             const std::vector<int>& k) const
{
    std::vector<int> sum(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        sum[i] = m[i] + k[i];
    ToroidalElement out;
    for (int i = 1; i <= n_; ++i)
        if (m[std::size_t(i - 1)] != 0)
            out += central_symbol(sum, i, Rat(m[std::size_t(i - 1)]));
    return out;
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalSymbol& a, const ToroidalSymbol& b) const
{
    using TS = ToroidalSymbol;
    ToroidalElement out;
    bool a_loop = a.kind == TS::rootvec || a.kind == TS::cartan;
    bool b_loop = b.kind == TS::rootvec || b.kind == TS::cartan;
    if (a.kind == TS::derivation && b.kind == TS::derivation)
        return out;
    if (a.kind == TS::derivation) {
        out.add(b, Rat(b.m[std::size_t(a.index - 1)]));
        return out;
    }
    if (b.kind == TS::derivation) {
        out.add(a, Rat(-a.m[std::size_t(b.index - 1)]));
        return out;
    }
    if (a.kind == TS::central || b.kind == TS::central)
        return out;
    if (a_loop && b_loop) {
        BasisSymbol xa{a.kind == TS::rootvec ? BasisSymbol::rootvec : BasisSymbol::cartan,
                       a.index};
        BasisSymbol xb{b.kind == TS::rootvec ? BasisSymbol::rootvec : BasisSymbol::cartan,
                       b.index};
        std::vector<int> sum(a.m.size());
        for (std::size_t i = 0; i < a.m.size(); ++i)
            sum[i] = a.m[i] + b.m[i];
        for (auto& [sym, c] : alg_.bracket_entry(xa, xb).terms())
            out.add({sym.kind == BasisSymbol::rootvec ? TS::rootvec : TS::cartan, sym.index, sum},
                    c);
        Rat f = alg_.form_entry(xa, xb);
        if (f != 0) {
            ToroidalElement cz = two_cocycle(a.m, b.m);
            cz *= f;
            out += cz;
        }
    }
    return out;
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalElement& a, const ToroidalElement& b) const
{
    ToroidalElement out;
    for (auto& [sa, ca] : a.terms())
        for (auto& [sb, cb] : b.terms()) {
            ToroidalElement e = bracket(sa, sb);
            e *= ca * cb;
            out += e;
        }
    return out;
}

ToroidalWeight ToroidalAlgebra::weight_of(const ToroidalSymbol& s) const
{
    ToroidalWeight w;
    w.delta = s.m.empty() ? std::vector<int>(std::size_t(n_), 0) : s.m;
    w.root_coords = std::vector<int>(std::size_t(alg_.rank), 0);
    if (s.kind == ToroidalSymbol::rootvec)
        w.root_coords = alg_.root(s.index).coords;
    return w;
}

ToroidalElement ToroidalAlgebra::gl_action(const std::vector<std::vector<int>>& b,
                                           const ToroidalSymbol& s) const
{
    using TS = ToroidalSymbol;
    auto act_degree = [&](const std::vector<int>& m) {
        std::vector<int> l(std::size_t(n_), 0);
        for (int k = 1; k <= n_; ++k)
            for (int i = 1; i <= n_; ++i)
                l[std::size_t(k - 1)] +=
                    b[std::size_t(i - 1)][std::size_t(k - 1)] * m[std::size_t(i - 1)];
        return l;
    };
    ToroidalElement out;
    switch (s.kind) {
    case TS::rootvec:
    case TS::cartan:
        out.add({s.kind, s.index, act_degree(s.m)}, Rat(1));
        break;
    case TS::central: {
        std::vector<int> l = act_degree(s.m);
        for (int k = 1; k <= n_; ++k) {
            int bik = b[std::size_t(s.index - 1)][std::size_t(k - 1)];
            if (bik != 0)
                out += central_symbol(l, k, Rat(bik));
        }
        break;
    }
    default: {
        // d_i -> sum_k (B^T)^{-1}_{ik} d_k
        auto inv = invert_matrix(b); // B^{-1}; (B^T)^{-1}_{ik} = B^{-1}_{ki}
        for (int k = 1; k <= n_; ++k) {
            Rat c = inv[std::size_t(k - 1)][std::size_t(s.index - 1)];
            if (c != 0)
                out.add({TS::derivation, k, std::vector<int>(std::size_t(n_), 0)}, c);
        }
        break;
    }
    }
    return out;
}

ToroidalElement ToroidalAlgebra::gl_action(const std::vector<std::vector<int>>& b,
                                           const ToroidalElement& e) const
{
    ToroidalElement out;
    for (auto& [s, c] : e.terms()) {
        ToroidalElement img = gl_action(b, s);
        img *= c;
        out += img;
    }
    return out;
}

std::vector<std::vector<int>> ToroidalAlgebra::b_lambda_matrix(const std::vector<int>& lam) const
{
    if (int(lam.size()) != n_ - 1)
        throw std::invalid_argument("lambda must lie in the span of d_1..d_{n-1}");
    std::vector<std::vector<int>> b(std::size_t(n_), std::vector<int>(std::size_t(n_), 0));
    for (int i = 1; i <= n_; ++i)
        b[std::size_t(i - 1)][std::size_t(i - 1)] = 1;
    for (int i = 1; i < n_; ++i)
        b[std::size_t(i - 1)][std::size_t(n_ - 1)] = lam[std::size_t(i - 1)];
    return b;
}

ToroidalElement ToroidalAlgebra::b_lambda(const std::vector<int>& lam,
                                          const ToroidalElement& e) const
{
    return gl_action(b_lambda_matrix(lam), e);
}

std::vector<ToroidalSymbol> ToroidalAlgebra::symbols_in_window(int window) const
{
    std::vector<ToroidalSymbol> out;
    std::vector<int> m(std::size_t(n_), -window);
    auto advance = [&]() {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < window) {
                ++m[i];
                std::fill(m.begin(), m.begin() + long(i), -window);
                return true;
            }
        }
        return false;
    };
    do {
        for (int r = 0; r < int(alg_.roots.size()); ++r)
            out.push_back({ToroidalSymbol::rootvec, r, m});
        for (int i = 1; i <= alg_.rank; ++i)
            out.push_back({ToroidalSymbol::cartan, i, m});
        int j = gauge_index(m);
        for (int i = 1; i <= n_; ++i)
            if (i != j)
                out.push_back({ToroidalSymbol::central, i, m});
    } while (advance());
    std::vector<int> zero(std::size_t(n_), 0);
    for (int i = 1; i <= n_; ++i)
        out.push_back({ToroidalSymbol::derivation, i, zero});
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_toroidal_algebra(const ToroidalAlgebra& t, int window, int jacobi_window)
{
    Report rep;
    rep.suite = "toroidal:" + t.table().name;
    auto syms = t.symbols_in_window(window);

    auto parity_of = [&](const ToroidalSymbol& s) { return t.parity(s); };

    // Antisymmetry with the cocycle gauge: the central terms of the two
    // orientations must cancel after reduction.
    for (auto& a : syms)
        for (auto& b : syms) {
            bool both_odd =
                parity_of(a) == Parity::odd && parity_of(b) == Parity::odd;
            ToroidalElement lhs = t.bracket(a, b);
            ToroidalElement rhs = t.bracket(b, a);
            if (!both_odd)
                rhs = -rhs;
            ++rep.checked;
            if (!(lhs - rhs).is_zero())
                rep.fail("super antisymmetry",
                         "[" + t.symbol_string(a) + ", " + t.symbol_string(b) + "]");
            // Weight additivity on nonzero brackets of weight-homogeneous symbols.
            if (!lhs.is_zero() && a.kind != ToroidalSymbol::derivation &&
                b.kind != ToroidalSymbol::derivation) {
                ToroidalWeight want = t.weight_of(a);
                ToroidalWeight wb = t.weight_of(b);
                for (std::size_t i = 0; i < want.delta.size(); ++i)
                    want.delta[i] += wb.delta[i];
                for (std::size_t i = 0; i < want.root_coords.size(); ++i)
                    want.root_coords[i] += wb.root_coords[i];
                bool ok = true;
                for (auto& [s, c] : lhs.terms()) {
                    ToroidalWeight ws = t.weight_of(s);
                    if (ws.delta != want.delta)
                        ok = false;
                    // Central and Cartan symbols carry zero root part; a root
                    // part can only match when the sum is a root or zero.
                    if (s.kind == ToroidalSymbol::rootvec && ws.root_coords != want.root_coords)
                        ok = false;
                }
                ++rep.checked;
                if (!ok)
                    rep.fail("weight additivity",
                             "[" + t.symbol_string(a) + ", " + t.symbol_string(b) + "]");
            }
        }

    // Super Jacobi on the smaller window.
    auto jsyms = t.symbols_in_window(jacobi_window);
    for (auto& x : jsyms)
        for (auto& y : jsyms)
            for (auto& z : jsyms) {
                int px = int(parity_of(x)), py = int(parity_of(y));
                ToroidalElement lhs = t.bracket(t.bracket(ToroidalElement(x), ToroidalElement(y)),
                                                ToroidalElement(z));
                ToroidalElement r1 = t.bracket(ToroidalElement(x),
                                               t.bracket(ToroidalElement(y), ToroidalElement(z)));
                ToroidalElement r2 = t.bracket(ToroidalElement(y),
                                               t.bracket(ToroidalElement(x), ToroidalElement(z)));
                if (px * py)
                    r1 += r2;
                else
                    r1 -= r2;
                ++rep.checked;
                if (!(lhs - r1).is_zero())
                    rep.fail("super Jacobi", "(" + t.symbol_string(x) + ", " +
                                                 t.symbol_string(y) + ", " + t.symbol_string(z) +
                                                 ")");
            }

    // B_lambda: automorphism property and inverse, for a few lambda.
    std::vector<std::vector<int>> lams;
    if (t.n() == 2)
        lams = {{0}, {1}, {2}, {-1}};
    else {
        std::vector<int> z(std::size_t(t.n() - 1), 0);
        lams.push_back(z);
        auto e1 = z;
        e1[0] = 1;
        lams.push_back(e1);
        auto e12 = e1;
        e12[1] = 1;
        lams.push_back(e12);
    }
    for (auto& lam : lams) {
        std::vector<int> neg(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i)
            neg[i] = -lam[i];
        for (auto& a : jsyms) {
            ToroidalElement ea(a);
            ++rep.checked;
            if (!(t.b_lambda(neg, t.b_lambda(lam, ea)) - ea).is_zero())
                rep.fail("B_lambda inverse", t.symbol_string(a));
            for (auto& b : jsyms) {
                ToroidalElement eb(b);
                ToroidalElement lhs = t.b_lambda(lam, t.bracket(ea, eb));
                ToroidalElement rhs = t.bracket(t.b_lambda(lam, ea), t.b_lambda(lam, eb));
                ++rep.checked;
                if (!(lhs - rhs).is_zero())
                    rep.fail("B_lambda automorphism",
                             "[" + t.symbol_string(a) + ", " + t.symbol_string(b) + "]");
            }
        }
    }
    return rep;
}

} // namespace torvex
