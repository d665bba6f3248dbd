#include "torvex/algebra.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torvex {

namespace {

Rat parity_sign(Parity a, Parity b)
{
    return (a == Parity::odd && b == Parity::odd) ? Rat(-1) : Rat(1);
}

// Solves M x = rhs exactly. Returns nullopt when M is singular.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs[i] / m[i][i];
    return x;
}

Rat det_exact(std::vector<std::vector<Rat>> m)
{
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

const AlgebraElement kZeroElement{};

} // namespace

std::optional<int> AlgebraTable::find_root(const std::vector<int>& coords) const
{
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].coords == coords)
            return int(i);
    return std::nullopt;
}

std::optional<int> AlgebraTable::find_root_by_name(const std::string& n) const
{
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].name == n)
            return int(i);
    return std::nullopt;
}

int AlgebraTable::negative_of(int root_index) const
{
    std::vector<int> neg = root(root_index).coords;
    for (int& c : neg)
        c = -c;
    auto r = find_root(neg);
    return r ? *r : -1;
}

std::vector<BasisSymbol> AlgebraTable::basis() const
{
    std::vector<BasisSymbol> out;
    for (int i = 1; i <= rank; ++i)
        out.push_back({BasisSymbol::cartan, i});
    for (int r = 0; r < int(roots.size()); ++r)
        out.push_back({BasisSymbol::rootvec, r});
    return out;
}

Parity AlgebraTable::parity(const BasisSymbol& s) const
{
    return s.kind == BasisSymbol::cartan ? Parity::even : root(s.index).parity;
}

std::string AlgebraTable::symbol_name(const BasisSymbol& s) const
{
    if (s.kind == BasisSymbol::cartan)
        return "H" + std::to_string(s.index);
    return "X(" + root(s.index).name + ")";
}

std::string AlgebraTable::element_string(const AlgebraElement& e) const
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (auto& [sym, c] : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += rat_to_string(c) + " " + symbol_name(sym);
    }
    return out;
}

bool AlgebraTable::root_is_positive(int root_index) const
{
    for (int c : root(root_index).coords) {
        if (c > 0)
            return true;
        if (c < 0)
            return false;
    }
    return false;
}

const AlgebraElement& AlgebraTable::bracket_entry(const BasisSymbol& a, const BasisSymbol& b) const
{
    auto it = brackets_.find({a, b});
    return it == brackets_.end() ? kZeroElement : it->second;
}

Rat AlgebraTable::form_entry(const BasisSymbol& a, const BasisSymbol& b) const
{
    auto it = form_.find({a, b});
    return it == form_.end() ? Rat(0) : it->second;
}

void AlgebraTable::set_bracket(const BasisSymbol& a, const BasisSymbol& b, AlgebraElement v)
{
    brackets_[{a, b}] = std::move(v);
}

void AlgebraTable::set_form(const BasisSymbol& a, const BasisSymbol& b, const Rat& v)
{
    form_[{a, b}] = v;
}

void AlgebraTable::finalize()
{
    // Complete the missing orientation of each stored bracket and form value.
    auto bcopy = brackets_;
    for (auto& [key, val] : bcopy) {
        auto rev = std::make_pair(key.second, key.first);
        if (brackets_.find(rev) == brackets_.end()) {
            AlgebraElement flipped = val;
            flipped *= -parity_sign(parity(key.first), parity(key.second));
            brackets_[rev] = std::move(flipped);
        }
    }
    auto fcopy = form_;
    for (auto& [key, val] : fcopy) {
        auto rev = std::make_pair(key.second, key.first);
        if (form_.find(rev) == form_.end())
            form_[rev] = parity_sign(parity(key.first), parity(key.second)) * val;
    }

    // alpha(H(i)) comes from [H(i), X(alpha)].
    for (int r = 0; r < int(roots.size()); ++r) {
        roots[r].alpha_h.assign(std::size_t(rank), Rat(0));
        for (int i = 1; i <= rank; ++i) {
            const AlgebraElement& br =
                bracket_entry({BasisSymbol::cartan, i}, {BasisSymbol::rootvec, r});
            roots[r].alpha_h[std::size_t(i - 1)] = br.coeff({BasisSymbol::rootvec, r});
        }
    }

    // Coroots: solve Gram(h) * c = alpha, then (alpha,alpha) = c . alpha.
    std::vector<std::vector<Rat>> gram(std::size_t(rank),
                                       std::vector<Rat>(std::size_t(rank), Rat(0)));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            gram[std::size_t(i - 1)][std::size_t(j - 1)] =
                form_entry({BasisSymbol::cartan, i}, {BasisSymbol::cartan, j});
    for (auto& rt : roots) {
        auto c = solve_exact(gram, rt.alpha_h);
        if (!c)
            throw std::runtime_error("algebra '" + name +
                                     "': form is degenerate on the Cartan subalgebra");
        rt.coroot = *c;
        rt.norm = 0;
        for (int i = 0; i < rank; ++i)
            rt.norm += rt.coroot[std::size_t(i)] * rt.alpha_h[std::size_t(i)];
    }
}

AlgebraElement bracket(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y)
{
    AlgebraElement out;
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms()) {
            AlgebraElement e = t.bracket_entry(a, b);
            e *= ca * cb;
            out += e;
        }
    return out;
}

Rat invariant_form(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y)
{
    Rat out = 0;
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms())
            out += ca * cb * t.form_entry(a, b);
    return out;
}

std::optional<Parity> homogeneous_parity(const AlgebraTable& t, const AlgebraElement& e)
{
    std::optional<Parity> p;
    for (auto& [sym, c] : e.terms()) {
        Parity q = t.parity(sym);
        if (!p)
            p = q;
        else if (*p != q)
            return std::nullopt;
    }
    return p;
}

namespace {

AlgebraElement coroot_element(const AlgebraTable& t, int root_index)
{
    AlgebraElement h;
    for (int i = 1; i <= t.rank; ++i)
        h.add({BasisSymbol::cartan, i}, t.root(root_index).coroot[std::size_t(i - 1)]);
    return h;
}

Rat eval_on_coroot(const AlgebraTable& t, int beta, int alpha)
{
    // beta(H(alpha))
    Rat v = 0;
    for (int i = 0; i < t.rank; ++i)
        v += t.root(alpha).coroot[std::size_t(i)] * t.root(beta).alpha_h[std::size_t(i)];
    return v;
}

int root_string_r(const AlgebraTable& t, int alpha, int beta)
{
    // largest r with beta - j*alpha in Delta for all j = 1..r
    int r = 0;
    std::vector<int> cur = t.root(beta).coords;
    for (;;) {
        for (int i = 0; i < t.rank; ++i)
            cur[std::size_t(i)] -= t.root(alpha).coords[std::size_t(i)];
        if (!t.find_root(cur))
            return r;
        ++r;
    }
}

} // namespace

Report verify_algebra(const AlgebraTable& t)
{
    Report rep;
    rep.suite = "algebra:" + t.name;
    const auto basis = t.basis();

    auto witness2 = [&](const BasisSymbol& a, const BasisSymbol& b) {
        return "(" + t.symbol_name(a) + ", " + t.symbol_name(b) + ")";
    };

    // Super-antisymmetry, parity grading, and form supersymmetry/evenness.
    for (auto& a : basis)
        for (auto& b : basis) {
            Parity pa = t.parity(a), pb = t.parity(b);
            AlgebraElement br = t.bracket_entry(a, b);
            AlgebraElement rev = t.bracket_entry(b, a);
            rev *= parity_sign(pa, pb);
            ++rep.checked;
            if (!(br + rev).is_zero())
                rep.fail("super-antisymmetry", witness2(a, b));
            Parity expect = pa + pb;
            for (auto& [sym, c] : br.terms()) {
                ++rep.checked;
                if (t.parity(sym) != expect) {
                    rep.fail("parity grading of bracket", witness2(a, b));
                    break;
                }
            }
            ++rep.checked;
            if (t.form_entry(a, b) != parity_sign(pa, pb) * t.form_entry(b, a))
                rep.fail("form supersymmetry", witness2(a, b));
            ++rep.checked;
            if (pa != pb && t.form_entry(a, b) != 0)
                rep.fail("form evenness", witness2(a, b));
        }

    // Super Jacobi and form invariance, all ordered triples.
    for (auto& x : basis)
        for (auto& y : basis) {
            Rat sxy = parity_sign(t.parity(x), t.parity(y));
            AlgebraElement xy = t.bracket_entry(x, y);
            for (auto& z : basis) {
                AlgebraElement lhs = bracket(t, xy, AlgebraElement(z));
                AlgebraElement rhs = bracket(t, AlgebraElement(x), t.bracket_entry(y, z)) -
                                     sxy * bracket(t, AlgebraElement(y), t.bracket_entry(x, z));
                ++rep.checked;
                if (!(lhs - rhs).is_zero())
                    rep.fail("super Jacobi", "(" + t.symbol_name(x) + ", " + t.symbol_name(y) +
                                                 ", " + t.symbol_name(z) + ")");
                ++rep.checked;
                if (invariant_form(t, xy, AlgebraElement(z)) !=
                    invariant_form(t, AlgebraElement(x), t.bracket_entry(y, z)))
                    rep.fail("form invariance", "(" + t.symbol_name(x) + ", " + t.symbol_name(y) +
                                                    ", " + t.symbol_name(z) + ")");
            }
        }

    // Non-degeneracy on h.
    {
        std::vector<std::vector<Rat>> gram(std::size_t(t.rank),
                                           std::vector<Rat>(std::size_t(t.rank)));
        for (int i = 1; i <= t.rank; ++i)
            for (int j = 1; j <= t.rank; ++j)
                gram[std::size_t(i - 1)][std::size_t(j - 1)] =
                    t.form_entry({BasisSymbol::cartan, i}, {BasisSymbol::cartan, j});
        ++rep.checked;
        if (det_exact(gram) == 0)
            rep.fail("form non-degenerate on h", t.name);
    }

    // Chevalley conditions (b), (c), (d1)-(d3), sigma and norm bookkeeping.
    for (int i = 1; i <= t.rank; ++i) {
        for (int j = 1; j <= t.rank; ++j) {
            ++rep.checked;
            if (!t.bracket_entry({BasisSymbol::cartan, i}, {BasisSymbol::cartan, j}).is_zero())
                rep.fail("(b) [H,H] = 0", "(H" + std::to_string(i) + ", H" + std::to_string(j) + ")");
        }
        for (int r = 0; r < int(t.roots.size()); ++r) {
            BasisSymbol xr{BasisSymbol::rootvec, r};
            AlgebraElement expect(xr, t.root(r).alpha_h[std::size_t(i - 1)]);
            ++rep.checked;
            if (t.bracket_entry({BasisSymbol::cartan, i}, xr) != expect)
                rep.fail("(b) [H(i),X(a)] = a(H(i)) X(a)",
                         "(H" + std::to_string(i) + ", X(" + t.root(r).name + "))");
        }
    }

    for (int a = 0; a < int(t.roots.size()); ++a) {
        const Root& ra = t.root(a);
        ++rep.checked;
        if (ra.sigma != 1 && ra.sigma != -1)
            rep.fail("sigma in {+1,-1}", ra.name);
        bool neg_odd = ra.parity == Parity::odd && !t.root_is_positive(a);
        ++rep.checked;
        if ((ra.sigma == -1) != neg_odd)
            rep.fail("sigma = -1 exactly on negative odd roots", ra.name);
        ++rep.checked;
        if (ra.norm != eval_on_coroot(t, a, a))
            rep.fail("norm = alpha(H(alpha))", ra.name);

        int na = t.negative_of(a);
        ++rep.checked;
        if (na < 0) {
            rep.fail("root set closed under negation", ra.name);
            continue;
        }
        // (c)
        AlgebraElement expect = coroot_element(t, a);
        expect *= Rat(ra.sigma);
        ++rep.checked;
        if (t.bracket_entry({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, na}) != expect)
            rep.fail("(c) [X(a),X(-a)] = sigma_a H(a)", ra.name);

        for (int b = 0; b < int(t.roots.size()); ++b) {
            if (b == na)
                continue;
            const Root& rb = t.root(b);
            std::vector<int> sum = ra.coords;
            for (int i = 0; i < t.rank; ++i)
                sum[std::size_t(i)] += rb.coords[std::size_t(i)];
            auto target = t.find_root(sum);
            AlgebraElement br =
                t.bracket_entry({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, b});
            ++rep.checked;
            if (!target) {
                if (!br.is_zero())
                    rep.fail("(d1) N = 0 off Delta", witness2({BasisSymbol::rootvec, a},
                                                              {BasisSymbol::rootvec, b}));
                continue;
            }
            BasisSymbol xs{BasisSymbol::rootvec, *target};
            Rat n = br.coeff(xs);
            ++rep.checked;
            if (br != AlgebraElement(xs, n))
                rep.fail("(d) bracket is a multiple of X(a+b)",
                         witness2({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, b}));
            ++rep.checked;
            if (denominator(n) != 1)
                rep.fail("(d1) N integral",
                         witness2({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, b}));
            if (ra.norm != 0 || rb.norm != 0) {
                int r = root_string_r(t, a, b);
                ++rep.checked;
                if (n * n != Rat((r + 1) * (r + 1)))
                    rep.fail("(d2) |N| = r+1",
                             witness2({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, b}) +
                                 " r=" + std::to_string(r) + " N=" + rat_to_string(n));
            } else {
                Rat bh = eval_on_coroot(t, b, a);
                ++rep.checked;
                if (n * n != bh * bh)
                    rep.fail("(d3) |N| = |beta(H(alpha))|",
                             witness2({BasisSymbol::rootvec, a}, {BasisSymbol::rootvec, b}));
            }
        }
    }
    return rep;
}

namespace {

BasisSymbol parse_symbol(const AlgebraTable& t, const std::string& tok)
{
    if (tok.size() > 1 && tok[0] == 'H') {
        int i = std::stoi(tok.substr(1));
        if (i < 1 || i > t.rank)
            throw std::runtime_error("Cartan index out of range: " + tok);
        return {BasisSymbol::cartan, i};
    }
    if (tok.size() > 3 && tok.rfind("X(", 0) == 0 && tok.back() == ')') {
        std::string rn = tok.substr(2, tok.size() - 3);
        auto r = t.find_root_by_name(rn);
        if (!r)
            throw std::runtime_error("unknown root in symbol: " + tok);
        return {BasisSymbol::rootvec, *r};
    }
    throw std::runtime_error("malformed basis symbol: " + tok);
}

AlgebraElement parse_element(const AlgebraTable& t, std::istringstream& ss)
{
    AlgebraElement out;
    std::string tok;
    while (ss >> tok) {
        if (tok == "+")
            continue;
        if (tok == "0" && out.is_zero() && ss.eof())
            return out;
        Rat c = rat_from_string(tok);
        std::string sym;
        if (!(ss >> sym))
            throw std::runtime_error("coefficient without symbol");
        out.add(parse_symbol(t, sym), c);
    }
    return out;
}

} // namespace

AlgebraTable parse_algebra_table(std::istream& in)
{
    AlgebraTable t;
    std::string line;
    std::vector<std::string> deferred; // bracket/form lines parsed after roots
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("algebra table line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw) || kw[0] == '#')
            continue;
        if (kw == "algebra") {
            if (!(ss >> t.name))
                fail("missing algebra name");
        } else if (kw == "rank") {
            if (!(ss >> t.rank) || t.rank < 1)
                fail("rank must be a positive integer");
        } else if (kw == "root") {
            if (t.rank < 1)
                fail("root before rank");
            Root r;
            if (!(ss >> r.name))
                fail("missing root name");
            r.coords.resize(std::size_t(t.rank));
            for (int i = 0; i < t.rank; ++i)
                if (!(ss >> r.coords[std::size_t(i)]))
                    fail("root needs " + std::to_string(t.rank) + " coordinates");
            std::string par, sig;
            if (!(ss >> par >> sig))
                fail("root needs parity and sigma");
            if (par == "even")
                r.parity = Parity::even;
            else if (par == "odd")
                r.parity = Parity::odd;
            else
                fail("parity must be even|odd");
            if (sig == "+1" || sig == "+")
                r.sigma = 1;
            else if (sig == "-1" || sig == "-")
                r.sigma = -1;
            else
                fail("sigma must be +1|-1");
            if (t.find_root(r.coords))
                fail("duplicate root coordinates");
            t.roots.push_back(std::move(r));
        } else if (kw == "bracket" || kw == "form") {
            deferred.push_back(line);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (t.name.empty())
        throw std::runtime_error("algebra table: missing 'algebra <name>' header");
    if (t.rank < 1)
        throw std::runtime_error("algebra table: missing 'rank'");

    for (const std::string& l : deferred) {
        std::istringstream ss(l);
        std::string kw, sa, sb, arrow;
        ss >> kw >> sa >> sb >> arrow;
        if (arrow != "->")
            throw std::runtime_error("expected '->' in: " + l);
        BasisSymbol a = parse_symbol(t, sa);
        BasisSymbol b = parse_symbol(t, sb);
        if (kw == "bracket") {
            t.set_bracket(a, b, parse_element(t, ss));
        } else {
            std::string tok;
            if (!(ss >> tok))
                throw std::runtime_error("missing form value in: " + l);
            t.set_form(a, b, rat_from_string(tok));
        }
    }
    t.finalize();
    return t;
}

AlgebraTable parse_algebra_table(const std::string& text)
{
    std::istringstream ss(text);
    return parse_algebra_table(ss);
}

// Defined in builtin_tables.cpp (generated from data/*.alg).
const char* builtin_algebra_text(const std::string& name);

std::vector<std::string> builtin_algebra_names() { return {"sl2", "sl3", "osp12"}; }

AlgebraTable load_algebra(const std::string& name)
{
    if (const char* text = builtin_algebra_text(name))
        return parse_algebra_table(std::string(text));
    std::ifstream f(name);
    if (!f)
        throw std::runtime_error("unknown algebra '" + name + "' (not builtin, not a readable file)");
    return parse_algebra_table(f);
}

} // namespace torvex
