#include "torvex/affine.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace torvex {

Parity affine_parity(const AlgebraTable& t, const AffineGenerator& g)
{
    return g.kind == AffineGenerator::rootvec ? t.root(g.index).parity : Parity::even;
}

std::string affine_generator_string(const AlgebraTable& t, const AffineGenerator& g)
{
    switch (g.kind) {
    case AffineGenerator::rootvec:
        return "X(" + t.root(g.index).name + ")@" + std::to_string(g.degree);
    case AffineGenerator::cartan:
        return "H" + std::to_string(g.index) + "@" + std::to_string(g.degree);
    case AffineGenerator::center:
        return "K";
    default:
        return "d";
    }
}

namespace {

BasisSymbol to_symbol(const AffineGenerator& g)
{
    if (g.kind == AffineGenerator::rootvec)
        return {BasisSymbol::rootvec, g.index};
    return {BasisSymbol::cartan, g.index};
}

AffineGenerator loop_generator(const BasisSymbol& s, int degree)
{
    if (s.kind == BasisSymbol::rootvec)
        return {AffineGenerator::rootvec, s.index, degree};
    return {AffineGenerator::cartan, s.index, degree};
}

AffineCombination bracket_generators(const AlgebraTable& t, const AffineGenerator& a,
                                     const AffineGenerator& b)
{
    using AG = AffineGenerator;
    AffineCombination out;
    if (a.kind == AG::center || b.kind == AG::center)
        return out;
    if (a.kind == AG::derivation && b.kind == AG::derivation)
        return out;
    if (a.kind == AG::derivation) {
        out.add(b, Rat(b.degree));
        return out;
    }
    if (b.kind == AG::derivation) {
        out.add(a, Rat(-a.degree));
        return out;
    }
    // loop generators
    BasisSymbol xa = to_symbol(a), xb = to_symbol(b);
    const AlgebraElement& br = t.bracket_entry(xa, xb);
    for (auto& [sym, c] : br.terms())
        out.add(loop_generator(sym, a.degree + b.degree), c);
    if (a.degree + b.degree == 0 && a.degree != 0) {
        Rat f = t.form_entry(xa, xb);
        if (f != 0)
            out.add({AG::center, 0, 0}, f * Rat(a.degree));
    }
    return out;
}

} // namespace

AffineCombination affine_bracket(const AlgebraTable& t, const AffineCombination& a,
                                 const AffineCombination& b)
{
    AffineCombination out;
    for (auto& [ga, ca] : a.terms())
        for (auto& [gb, cb] : b.terms()) {
            AffineCombination e = bracket_generators(t, ga, gb);
            e *= ca * cb;
            out += e;
        }
    return out;
}

HighestWeightModule::HighestWeightModule(const AlgebraTable& alg, std::vector<Rat> lambda,
                                         Rat level, Rat p_eig, int depth_cap)
    : alg_(alg), lambda_(std::move(lambda)), level_(std::move(level)), p_(std::move(p_eig)),
      depth_cap_(depth_cap)
{
    if (level_ == 0)
        throw std::invalid_argument("highest-weight module requires nonzero level K");
    if (depth_cap_ < 0)
        throw std::invalid_argument("depth cap must be >= 0");
    if (int(lambda_.size()) != alg_.rank)
        throw std::invalid_argument("lambda needs one coordinate per Cartan generator");
}

bool HighestWeightModule::is_lowering(const AffineGenerator& g) const
{
    if (g.kind == AffineGenerator::center || g.kind == AffineGenerator::derivation)
        return false;
    if (g.degree < 0)
        return true;
    if (g.degree > 0)
        return false;
    return g.kind == AffineGenerator::rootvec && !alg_.root_is_positive(g.index);
}

int HighestWeightModule::monomial_depth(const PBWMonomial& m)
{
    int d = 0;
    for (auto& g : m.factors)
        d += g.degree < 0 ? -g.degree : 1;
    return d;
}

int HighestWeightModule::monomial_tdegree(const PBWMonomial& m)
{
    int d = 0;
    for (auto& g : m.factors)
        d += g.degree;
    return d;
}

Rat HighestWeightModule::dn_eigenvalue(const PBWMonomial& m) const
{
    return p_ + Rat(monomial_tdegree(m));
}

std::vector<Rat> HighestWeightModule::h_weight(const PBWMonomial& m) const
{
    std::vector<Rat> w = lambda_;
    for (auto& g : m.factors)
        if (g.kind == AffineGenerator::rootvec)
            for (int i = 0; i < alg_.rank; ++i)
                w[std::size_t(i)] += alg_.root(g.index).alpha_h[std::size_t(i)];
    return w;
}

std::vector<int> HighestWeightModule::descent_coords(const PBWMonomial& m) const
{
    std::vector<int> d(std::size_t(alg_.rank), 0);
    for (auto& g : m.factors)
        if (g.kind == AffineGenerator::rootvec)
            for (int i = 0; i < alg_.rank; ++i)
                d[std::size_t(i)] -= alg_.root(g.index).coords[std::size_t(i)];
    return d;
}

const AffineVector& HighestWeightModule::act_on_monomial(const AffineGenerator& g,
                                                         const PBWMonomial& m) const
{
    auto key = std::make_pair(g, m);
    auto hit = cache_.find(key);
    if (hit != cache_.end())
        return hit->second;

    using AG = AffineGenerator;
    AffineVector out;
    if (m.factors.empty()) {
        if (is_lowering(g)) {
            out = AffineVector(PBWMonomial{{g}});
        } else if (g.kind == AG::center) {
            out = AffineVector(PBWMonomial{}, level_);
        } else if (g.kind == AG::derivation) {
            out = AffineVector(PBWMonomial{}, p_);
        } else if (g.degree == 0 && g.kind == AG::cartan) {
            out = AffineVector(PBWMonomial{}, lambda_[std::size_t(g.index - 1)]);
        }
        // positive degree or degree-0 positive root vector: kills v_hw
    } else {
        const AffineGenerator h = m.factors.front();
        PBWMonomial rest{std::vector<AffineGenerator>(m.factors.begin() + 1, m.factors.end())};
        Parity pg = affine_parity(alg_, g), ph = affine_parity(alg_, h);
        bool both_odd = pg == Parity::odd && ph == Parity::odd;
        if (is_lowering(g) && g == h && both_odd) {
            // x x rest = (1/2) [x,x] rest
            out = act(affine_bracket(alg_, AffineCombination(g), AffineCombination(g)),
                      AffineVector(rest));
            out *= Rat(1, 2);
        } else if (is_lowering(g) && g <= h) {
            PBWMonomial nm = m;
            nm.factors.insert(nm.factors.begin(), g);
            out = AffineVector(nm);
        } else {
            // g h rest = (-1)^{|g||h|} h (g rest) + [g,h] rest
            AffineVector inner = act_on_monomial(g, rest);
            AffineVector swapped = act(h, inner);
            if (both_odd)
                swapped *= Rat(-1);
            out = swapped + act(affine_bracket(alg_, AffineCombination(g), AffineCombination(h)),
                                AffineVector(rest));
        }
    }
    return cache_[key] = std::move(out);
}

AffineVector HighestWeightModule::act(const AffineGenerator& g, const AffineVector& v) const
{
    AffineVector out;
    for (auto& [m, c] : v.terms())
        out.add_scaled(act_on_monomial(g, m), c);
    return out;
}

AffineVector HighestWeightModule::act(const AffineCombination& g, const AffineVector& v) const
{
    AffineVector out;
    for (auto& [gen, c] : g.terms())
        out.add_scaled(act(gen, v), c);
    return out;
}

std::vector<AffineGenerator> HighestWeightModule::lowering_generators(int max_depth) const
{
    std::vector<AffineGenerator> gens;
    for (int r = 0; r < int(alg_.roots.size()); ++r)
        if (!alg_.root_is_positive(r))
            gens.push_back({AffineGenerator::rootvec, r, 0});
    for (int d = -1; d >= -max_depth; --d) {
        for (int i = 1; i <= alg_.rank; ++i)
            gens.push_back({AffineGenerator::cartan, i, d});
        for (int r = 0; r < int(alg_.roots.size()); ++r)
            gens.push_back({AffineGenerator::rootvec, r, d});
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

namespace {

// Largest L1 root-coordinate weight of any single factor; used to cap the
// number of degree-0 factors in a graded piece at fixed t-depth.
int max_coord_weight(const AlgebraTable& t)
{
    int c = 1;
    for (auto& r : t.roots) {
        int s = 0;
        for (int x : r.coords)
            s += x < 0 ? -x : x;
        c = std::max(c, s);
    }
    return c;
}

} // namespace

AffineVector HighestWeightModule::apply_monomial(const PBWMonomial& m, const AffineVector& v) const
{
    AffineVector out = v;
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
        out = act(*it, out);
    return out;
}

namespace {

// Maintain a reduced echelon basis: each row has pivot coefficient 1 (pivot =
// smallest monomial key) and vanishes at every other row's pivot.
void echelon_insert(std::vector<AffineVector>& ech, AffineVector v)
{
    for (auto& e : ech) {
        Rat c = v.coeff(e.terms().front().first);
        if (c != 0)
            v.add_scaled(e, -c);
    }
    if (v.is_zero())
        return;
    v *= Rat(1) / v.terms().front().second;
    for (auto& e : ech) {
        Rat c = e.coeff(v.terms().front().first);
        if (c != 0)
            e.add_scaled(v, -c);
    }
    ech.push_back(std::move(v));
}

AffineVector echelon_reduce(const std::vector<AffineVector>& ech, AffineVector v)
{
    for (auto& e : ech) {
        Rat c = v.coeff(e.terms().front().first);
        if (c != 0)
            v.add_scaled(e, -c);
    }
    return v;
}

} // namespace

std::vector<AffineVector> HighestWeightModule::singular_vectors(int max_depth) const
{
    auto hit = singular_cache_.find(max_depth);
    if (hit != singular_cache_.end())
        return hit->second;

    // Raising generators of t-degree 0 and 1 generate the whole annihilator
    // of a genuine highest-weight vector, so kernel membership below is both
    // necessary and sufficient.
    std::vector<AffineGenerator> raising;
    for (int r = 0; r < int(alg_.roots.size()); ++r) {
        if (alg_.root_is_positive(r))
            raising.push_back({AffineGenerator::rootvec, r, 0});
        raising.push_back({AffineGenerator::rootvec, r, 1});
    }
    for (int i = 1; i <= alg_.rank; ++i)
        raising.push_back({AffineGenerator::cartan, i, 1});

    // Graded pieces reachable within the depth bound.
    std::set<std::pair<std::vector<int>, int>> pieces;
    for (auto& m : basis_up_to_depth(max_depth))
        pieces.insert({descent_coords(m), -monomial_tdegree(m)});
    pieces.erase({std::vector<int>(std::size_t(alg_.rank), 0), 0}); // v_hw itself

    std::vector<AffineVector> out;
    for (auto& [descent, tdepth] : pieces) {
        auto basis = graded_basis(descent, tdepth);
        if (basis.empty())
            continue;
        // Matrix of the stacked raising operators, columns = piece basis.
        std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> row_of;
        std::vector<std::vector<Rat>> mat;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t gi = 0; gi < raising.size(); ++gi) {
                AffineVector img = act(raising[gi], AffineVector(basis[j]));
                for (auto& [key, c] : img.terms()) {
                    auto [it, fresh] = row_of.try_emplace({gi, key}, mat.size());
                    if (fresh)
                        mat.emplace_back(basis.size(), Rat(0));
                    mat[it->second][j] = c;
                }
            }
        // Nullspace by Gaussian elimination.
        std::vector<std::size_t> pivot_row(basis.size(), SIZE_MAX);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < basis.size() && rank < mat.size(); ++c) {
            std::size_t p = rank;
            while (p < mat.size() && mat[p][c] == 0)
                ++p;
            if (p == mat.size())
                continue;
            std::swap(mat[p], mat[rank]);
            for (std::size_t q = 0; q < mat.size(); ++q)
                if (q != rank && mat[q][c] != 0) {
                    Rat f = mat[q][c] / mat[rank][c];
                    for (std::size_t j = c; j < basis.size(); ++j)
                        mat[q][j] -= f * mat[rank][j];
                }
            pivot_row[c] = rank;
            ++rank;
        }
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (pivot_row[c] != SIZE_MAX)
                continue; // pivot column
            AffineVector ker(basis[c]);
            for (std::size_t d = 0; d < basis.size(); ++d)
                if (pivot_row[d] != SIZE_MAX && mat[pivot_row[d]][c] != 0) {
                    AffineVector t(basis[d], -mat[pivot_row[d]][c] / mat[pivot_row[d]][d]);
                    ker += t;
                }
            out.push_back(std::move(ker));
        }
    }
    return singular_cache_[max_depth] = out;
}

AffineVector HighestWeightModule::quotient_reduce(const AffineVector& v, int scan_depth) const
{
    if (v.is_zero())
        return v;
    auto sing = singular_vectors(scan_depth);
    if (sing.empty())
        return v;

    // Split v into graded components and reduce each against the span of the
    // submodule generated by the singular vectors in that piece.
    std::map<std::pair<std::vector<int>, int>, AffineVector> comps;
    for (auto& [m, c] : v.terms())
        comps[{descent_coords(m), -monomial_tdegree(m)}].add(m, c);

    AffineVector out;
    for (auto& [piece, w] : comps) {
        const auto& [descent, tdepth] = piece;
        std::tuple<int, std::vector<int>, int> key{scan_depth, descent, tdepth};
        auto hit = span_cache_.find(key);
        if (hit == span_cache_.end()) {
            std::vector<AffineVector> ech;
            for (auto& s : sing) {
                const PBWMonomial& lead = s.terms().front().first;
                int tdiff = tdepth - (-monomial_tdegree(lead));
                if (tdiff < 0)
                    continue;
                std::vector<int> ddiff = descent;
                auto sdesc = descent_coords(lead);
                for (std::size_t i = 0; i < ddiff.size(); ++i)
                    ddiff[i] -= sdesc[i];
                for (auto& m : graded_basis(ddiff, tdiff)) {
                    AffineVector row = apply_monomial(m, s);
                    if (!row.is_zero())
                        echelon_insert(ech, std::move(row));
                }
            }
            hit = span_cache_.emplace(std::move(key), std::move(ech)).first;
        }
        out += echelon_reduce(hit->second, w);
    }
    return out;
}

std::vector<PBWMonomial> HighestWeightModule::basis_up_to_depth(int depth) const
{
    auto gens = lowering_generators(depth);
    std::vector<PBWMonomial> out;
    std::vector<AffineGenerator> cur;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        out.push_back(PBWMonomial{cur});
        for (std::size_t i = idx; i < gens.size(); ++i) {
            int cost = gens[i].degree < 0 ? -gens[i].degree : 1;
            if (cost > remaining)
                continue;
            bool odd = affine_parity(alg_, gens[i]) == Parity::odd;
            cur.push_back(gens[i]);
            // odd generators square to a bracket, never to a basis monomial
            self(self, i + (odd ? 1 : 0), remaining - cost);
            cur.pop_back();
        }
    };
    rec(rec, 0, depth);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PBWMonomial> HighestWeightModule::graded_basis(const std::vector<int>& descent,
                                                           int tdepth) const
{
    int descent_l1 = 0;
    for (int c : descent)
        descent_l1 += c < 0 ? -c : c;
    const int zero_cap = descent_l1 + tdepth * max_coord_weight(alg_);

    auto gens = lowering_generators(tdepth);
    std::vector<PBWMonomial> out;
    std::vector<AffineGenerator> cur;
    std::vector<int> desc(descent.size(), 0);
    int zeros = 0;
    auto rec = [&](auto&& self, std::size_t idx, int trem) -> void {
        if (trem == 0 && desc == descent)
            out.push_back(PBWMonomial{cur});
        for (std::size_t i = idx; i < gens.size(); ++i) {
            const AffineGenerator& g = gens[i];
            int cost = -g.degree;
            if (cost > trem)
                continue;
            if (cost == 0 && zeros >= zero_cap)
                continue;
            bool odd = affine_parity(alg_, g) == Parity::odd;
            cur.push_back(g);
            zeros += cost == 0 ? 1 : 0;
            if (g.kind == AffineGenerator::rootvec)
                for (std::size_t j = 0; j < desc.size(); ++j)
                    desc[j] -= alg_.root(g.index).coords[j];
            self(self, i + (odd ? 1 : 0), trem - cost);
            if (g.kind == AffineGenerator::rootvec)
                for (std::size_t j = 0; j < desc.size(); ++j)
                    desc[j] += alg_.root(g.index).coords[j];
            zeros -= cost == 0 ? 1 : 0;
            cur.pop_back();
        }
    };
    rec(rec, 0, tdepth);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long HighestWeightModule::graded_dimension_by_counting(const std::vector<int>& descent,
                                                            int tdepth) const
{
    int descent_l1 = 0;
    for (int c : descent)
        descent_l1 += c < 0 ? -c : c;
    const int zero_cap = descent_l1 + tdepth * max_coord_weight(alg_);

    // DP state: (descent so far, t-depth used, degree-0 factors used).
    using State = std::tuple<std::vector<int>, int, int>;
    std::map<State, long long> dp;
    dp[{std::vector<int>(descent.size(), 0), 0, 0}] = 1;
    for (auto& g : lowering_generators(tdepth)) {
        bool odd = affine_parity(alg_, g) == Parity::odd;
        int cost = -g.degree;
        std::map<State, long long> next;
        for (auto& [st, cnt] : dp) {
            State cur = st;
            next[cur] += cnt;
            int rep = 0;
            while (true) {
                ++rep;
                if (odd && rep > 1)
                    break;
                std::get<1>(cur) += cost;
                if (std::get<1>(cur) > tdepth)
                    break;
                std::get<2>(cur) += cost == 0 ? 1 : 0;
                if (std::get<2>(cur) > zero_cap)
                    break;
                if (g.kind == AffineGenerator::rootvec)
                    for (std::size_t j = 0; j < descent.size(); ++j)
                        std::get<0>(cur)[j] -= alg_.root(g.index).coords[j];
                next[cur] += cnt;
                if (cost == 0 && g.kind != AffineGenerator::rootvec)
                    break; // identical state forever; avoid an infinite loop
            }
        }
        dp = std::move(next);
    }
    long long total = 0;
    for (auto& [st, cnt] : dp)
        if (std::get<0>(st) == descent && std::get<1>(st) == tdepth)
            total += cnt;
    return total;
}

std::string HighestWeightModule::monomial_string(const PBWMonomial& m) const
{
    if (m.factors.empty())
        return "v_hw";
    std::string s;
    for (auto& g : m.factors)
        s += affine_generator_string(alg_, g) + " ";
    return s + "v_hw";
}

Report verify_affine_relations(const HighestWeightModule& mod, int window,
                               const std::vector<PBWMonomial>& samples)
{
    const AlgebraTable& t = mod.algebra();
    Report rep;
    rep.suite = "affine:" + t.name;

    std::vector<AffineGenerator> gens;
    for (int d = -window; d <= window; ++d) {
        for (int i = 1; i <= t.rank; ++i)
            gens.push_back({AffineGenerator::cartan, i, d});
        for (int r = 0; r < int(t.roots.size()); ++r)
            gens.push_back({AffineGenerator::rootvec, r, d});
    }
    gens.push_back({AffineGenerator::center, 0, 0});
    gens.push_back({AffineGenerator::derivation, 0, 0});

    for (auto& g1 : gens)
        for (auto& g2 : gens) {
            AffineCombination br =
                affine_bracket(t, AffineCombination(g1), AffineCombination(g2));
            bool both_odd = affine_parity(t, g1) == Parity::odd &&
                            affine_parity(t, g2) == Parity::odd;
            for (auto& m : samples) {
                AffineVector v(m);
                AffineVector lhs = mod.act(g1, mod.act(g2, v));
                AffineVector sw = mod.act(g2, mod.act(g1, v));
                if (both_odd)
                    lhs += sw;
                else
                    lhs -= sw;
                AffineVector rhs = mod.act(br, v);
                ++rep.checked;
                if (!(lhs - rhs).is_zero())
                    rep.fail("affine commutation",
                             "[" + affine_generator_string(t, g1) + ", " +
                                 affine_generator_string(t, g2) + "] on " +
                                 mod.monomial_string(m));
            }
        }

    // Restrictedness witness and level consistency on the samples.
    for (auto& m : samples) {
        AffineVector v(m);
        int bound = mod.annihilation_bound(m);
        for (int extra = 1; extra <= 2; ++extra) {
            for (int r = 0; r < int(t.roots.size()); ++r) {
                ++rep.checked;
                if (!mod.act({AffineGenerator::rootvec, r, bound + extra}, v).is_zero())
                    rep.fail("restrictedness", mod.monomial_string(m));
            }
            for (int i = 1; i <= t.rank; ++i) {
                ++rep.checked;
                if (!mod.act({AffineGenerator::cartan, i, bound + extra}, v).is_zero())
                    rep.fail("restrictedness", mod.monomial_string(m));
            }
        }
        AffineVector kv = mod.act({AffineGenerator::center, 0, 0}, v);
        AffineVector want = v;
        want *= mod.level();
        ++rep.checked;
        if (!(kv - want).is_zero())
            rep.fail("level consistency", mod.monomial_string(m));
    }
    return rep;
}

} // namespace torvex
