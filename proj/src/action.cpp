#include "torvex/action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torvex {

namespace {

long long to_ll(const Int& v)
{
    return v;
}

std::vector<int> lam_to_coords(const ToroidalAlgebra& talg, const std::vector<int>& lam)
{
    int n = talg.n();
    if (int(lam.size()) != n - 1)
        throw std::invalid_argument("lambda must lie in the span of d_1..d_{n-1}");
    std::vector<int> coords(std::size_t(2 * (n - 1)), 0);
    for (int i = 0; i < n - 1; ++i)
        coords[std::size_t(n - 1 + i)] = lam[std::size_t(i)];
    return coords;
}

} // namespace

TensorVector tensor(const AffineVector& a, const FockVector& f)
{
    TensorVector out;
    for (auto& [am, ac] : a.terms())
        for (auto& [fm, fc] : f.terms())
            out.add({am, fm}, ac * fc);
    return out;
}

ModuleAction::ModuleAction(const ToroidalAlgebra& talg, const HighestWeightModule& mod,
                           const FockOps& ops)
    : talg_(talg), mod_(mod), ops_(ops), level_(mod.level())
{
    if (&talg.table() != &mod.algebra())
        throw std::invalid_argument("toroidal algebra and module disagree on g");
}

std::pair<long long, long long> ModuleAction::loop_sum_bounds(const std::vector<int>& m_under,
                                                              int m_n, const LatticeVector& alpha,
                                                              const TensorMonomial& mono) const
{
    (void)m_under;
    long long hi = mod_.annihilation_bound(mono.aff);
    long long nf = to_ll(ops_.annihilation_bound(alpha, mono.fock));
    return {m_n - nf, hi};
}

const TensorVector& ModuleAction::act_on_monomial(const ToroidalSymbol& s,
                                                  const TensorMonomial& m) const
{
    auto key = std::make_pair(s, m);
    auto hit = cache_.find(key);
    if (hit != cache_.end())
        return hit->second;

    using TS = ToroidalSymbol;
    const Lattice& lat = ops_.lattice();
    const int n = talg_.n();
    TensorVector out;

    if (s.kind == TS::rootvec || s.kind == TS::cartan) {
        std::vector<int> m_under(s.m.begin(), s.m.end() - 1);
        int m_n = s.m.back();
        LatticeVector alpha = lat.delta_underline(m_under);
        auto [lo, hi] = loop_sum_bounds(m_under, m_n, alpha, m);
        for (long long k = lo; k <= hi; ++k) {
            AffineGenerator g{s.kind == TS::rootvec ? AffineGenerator::rootvec
                                                    : AffineGenerator::cartan,
                              s.index, int(k)};
            AffineVector av = mod_.act(g, AffineVector(m.aff));
            if (av.is_zero())
                continue;
            FockVector fv =
                ops_.vertex_coefficient_act(int(m_n - k), alpha, FockVector(m.fock));
            out += tensor(av, fv);
        }
    } else if (s.kind == TS::central) {
        std::vector<int> m_under(s.m.begin(), s.m.end() - 1);
        int m_n = s.m.back();
        LatticeVector alpha = lat.delta_underline(m_under);
        FockVector fv;
        if (s.index == n)
            fv = ops_.vertex_coefficient_act(m_n, alpha, FockVector(m.fock));
        else
            fv = ops_.t_operator_act(lat.delta(s.index), m_n, alpha, FockVector(m.fock));
        fv *= level_;
        out = tensor(AffineVector(m.aff), fv);
    } else { // derivation
        if (s.index < n) {
            out = tensor(AffineVector(m.aff),
                         ops_.heisenberg_act(lat.dvec(s.index), 0, FockVector(m.fock)));
        } else {
            Rat eig = mod_.dn_eigenvalue(m.aff) + ops_.l0_eigenvalue(m.fock);
            out = TensorVector(m, eig);
        }
    }
    // Tensor-level results are heavy; a bounded cache keeps long sweeps from
    // exhausting memory. The affine and Fock layers keep their own caches, so
    // recomputation after a purge stays cheap.
    if (cache_.size() >= 1000000)
        cache_.clear();
    return cache_[key] = std::move(out);
}

TensorVector ModuleAction::act(const ToroidalSymbol& s, const TensorVector& v) const
{
    TensorVector out;
    // the reference from act_on_monomial is consumed before the next call,
    // which may purge the cache
    for (auto& [m, c] : v.terms())
        out.add_scaled(act_on_monomial(s, m), c);
    return out;
}

TensorVector ModuleAction::act(const ToroidalElement& e, const TensorVector& v) const
{
    TensorVector out;
    for (auto& [s, c] : e.terms())
        out.add_scaled(act(s, v), c);
    return out;
}

TensorWeight ModuleAction::weight_of(const TensorMonomial& m) const
{
    const Lattice& lat = ops_.lattice();
    const int n = talg_.n();
    TensorWeight w;
    w.h = mod_.h_weight(m.aff);
    for (int i = 1; i < n; ++i)
        w.k.push_back(level_ * Rat(lat.pairing(m.fock.gamma, lat.delta(i))));
    w.k.push_back(level_);
    for (int i = 1; i < n; ++i)
        w.d.push_back(Rat(lat.pairing(m.fock.gamma, lat.dvec(i))));
    w.d.push_back(mod_.dn_eigenvalue(m.aff) + ops_.l0_eigenvalue(m.fock));
    return w;
}

std::string ModuleAction::monomial_string(const TensorMonomial& m) const
{
    return mod_.monomial_string(m.aff) + " (x) " + fock_monomial_string(ops_.lattice(), m.fock);
}

std::vector<TensorMonomial> enumerate_tensor_basis(const ModuleAction& act, int depth,
                                                   int gamma_bound, bool q_creations_only)
{
    auto affs = act.module().basis_up_to_depth(depth);
    auto focks =
        enumerate_fock_basis(act.fock().lattice(), gamma_bound, depth, q_creations_only);
    std::vector<TensorMonomial> out;
    for (auto& a : affs)
        for (auto& f : focks)
            if (HighestWeightModule::monomial_depth(a) + f.creation_degree() <= depth)
                out.push_back({a, f});
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_toroidal_relations(const ModuleAction& act, int window,
                                 const std::vector<TensorMonomial>& samples)
{
    const ToroidalAlgebra& t = act.toroidal();
    Report rep;
    rep.suite = "action:" + t.table().name;
    auto syms = t.symbols_in_window(window);

    for (auto& x : syms)
        for (auto& y : syms) {
            bool both_odd =
                t.parity(x) == Parity::odd && t.parity(y) == Parity::odd;
            ToroidalElement br = t.bracket(x, y);
            for (auto& m : samples) {
                TensorVector v(m);
                TensorVector lhs = act.act(x, act.act(y, v));
                TensorVector sw = act.act(y, act.act(x, v));
                if (both_odd)
                    lhs += sw;
                else
                    lhs -= sw;
                TensorVector rhs = act.act(br, v);
                ++rep.checked;
                if (!(lhs - rhs).is_zero())
                    rep.fail("homomorphism",
                             "[" + t.symbol_string(x) + ", " + t.symbol_string(y) + "] on " +
                                 act.monomial_string(m));
            }
        }

    // k-sum bound certification: two terms beyond each end must vanish.
    const Lattice& lat = act.fock().lattice();
    std::vector<std::vector<int>> m_unders;
    if (t.n() == 2)
        m_unders = {{0}, {1}, {-1}, {2}};
    else
        m_unders = {std::vector<int>(std::size_t(t.n() - 1), 0), {1, 0}, {0, -1}, {1, 1}};
    for (auto& m : samples)
        for (auto& mu : m_unders) {
            LatticeVector alpha = lat.delta_underline(mu);
            auto [lo, hi] = act.loop_sum_bounds(mu, 0, alpha, m);
            for (long long k : {hi + 1, hi + 2}) {
                for (int r = 0; r < int(t.table().roots.size()); ++r) {
                    ++rep.checked;
                    if (!act.module()
                             .act({AffineGenerator::rootvec, r, int(k)}, AffineVector(m.aff))
                             .is_zero())
                        rep.fail("k-sum upper bound", act.monomial_string(m));
                }
            }
            for (long long k : {lo - 1, lo - 2}) {
                ++rep.checked;
                if (!act.fock()
                         .vertex_coefficient_act(int(-k), alpha, FockVector(m.fock))
                         .is_zero())
                    rep.fail("k-sum lower bound", act.monomial_string(m));
            }
        }
    return rep;
}

TensorVector phi_map(const ModuleAction& act, const std::vector<int>& lam, const TensorVector& v)
{
    const Lattice& lat = act.fock().lattice();
    std::vector<int> lamc = lam_to_coords(act.toroidal(), lam);
    TensorVector out;
    for (auto& [m, c] : v.terms()) {
        FockMonomial f = m.fock;
        for (std::size_t i = 0; i < lamc.size(); ++i)
            f.gamma[i] -= lamc[i];
        // after removing lambda the d-part must vanish, i.e. gamma was in lambda + Q
        for (std::size_t i = std::size_t(lat.dim() / 2); i < std::size_t(lat.dim()); ++i)
            if (f.gamma[i] != 0)
                throw std::invalid_argument("vector not in the lambda sector");
        out.add({m.aff, f}, c);
    }
    return out;
}

Report verify_intertwining(const ModuleAction& act, const std::vector<int>& lam, int window,
                           const std::vector<TensorMonomial>& sector_zero_samples)
{
    const ToroidalAlgebra& t = act.toroidal();
    const Lattice& lat = act.fock().lattice();
    std::vector<int> lamc = lam_to_coords(t, lam);
    Report rep;
    rep.suite = "intertwining:" + t.table().name;
    auto syms = t.symbols_in_window(window);
    for (auto& m0 : sector_zero_samples) {
        for (std::size_t i = std::size_t(lat.dim() / 2); i < std::size_t(lat.dim()); ++i)
            if (m0.fock.gamma[i] != 0)
                throw std::invalid_argument("samples must lie in the zero sector");
        TensorMonomial ml = m0;
        for (std::size_t i = 0; i < lamc.size(); ++i)
            ml.fock.gamma[i] += lamc[i];
        TensorVector v_lam(ml);
        TensorVector v0(m0);
        for (auto& x : syms) {
            TensorVector lhs = phi_map(act, lam, act.act(x, v_lam));
            TensorVector rhs = act.act(t.b_lambda(lam, ToroidalElement(x)), v0);
            ++rep.checked;
            if (!(lhs - rhs).is_zero())
                rep.fail("intertwining", t.symbol_string(x) + " on " + act.monomial_string(ml));
        }
    }
    return rep;
}

std::map<std::vector<int>, TensorVector> sector_decompose(const ModuleAction& act,
                                                          const TensorVector& v)
{
    const Lattice& lat = act.fock().lattice();
    std::map<std::vector<int>, TensorVector> out;
    for (auto& [m, c] : v.terms()) {
        std::vector<int> dpart(m.fock.gamma.begin() + lat.dim() / 2, m.fock.gamma.end());
        out[dpart].add(m, c);
    }
    return out;
}

namespace {

// Number of creation monomials of total degree s over `nsym` symbols.
long long count_creations(int nsym, int s)
{
    std::vector<long long> dp(std::size_t(s) + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= s; ++k)
        for (int sym = 0; sym < nsym; ++sym)
            for (int d = k; d <= s; ++d)
                dp[std::size_t(d)] += dp[std::size_t(d - k)];
    return dp[std::size_t(s)];
}

// All creation multisets of total degree s over the first `nsym` symbols.
void enumerate_creations(int nsym, int s, std::vector<std::pair<CreationMode, int>>& cur,
                         int min_sym, int min_mode,
                         std::vector<std::vector<std::pair<CreationMode, int>>>& out)
{
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (int sym = min_sym; sym < nsym; ++sym)
        for (int mode = (sym == min_sym ? min_mode : 1); mode <= s; ++mode) {
            cur.push_back({{sym, mode}, 1});
            // coalesce equal modes into exponents at the end
            enumerate_creations(nsym, s - mode, cur, sym, mode, out);
            cur.pop_back();
        }
}

std::vector<std::vector<std::pair<CreationMode, int>>> creation_multisets(int nsym, int s)
{
    std::vector<std::vector<std::pair<CreationMode, int>>> raw;
    std::vector<std::pair<CreationMode, int>> cur;
    enumerate_creations(nsym, s, cur, 0, 1, raw);
    for (auto& v : raw) {
        std::vector<std::pair<CreationMode, int>> packed;
        for (auto& [cm, e] : v) {
            if (!packed.empty() && packed.back().first == cm)
                packed.back().second += e;
            else
                packed.push_back({cm, e});
        }
        v = std::move(packed);
    }
    return raw;
}

bool rat_is_int(const Rat& r)
{
    return denominator(r) == 1;
}

} // namespace

WeightSpaceResult weight_space(const ModuleAction& act, const TensorWeight& w,
                               const WeightCaps& caps)
{
    const Lattice& lat = act.fock().lattice();
    const HighestWeightModule& mod = act.module();
    const AlgebraTable& alg = mod.algebra();
    const int n = act.toroidal().n();
    WeightSpaceResult res;

    if (int(w.h.size()) != alg.rank || int(w.k.size()) != n || int(w.d.size()) != n)
        return res;
    if (w.k.back() != act.level())
        return res;

    // gamma is fully determined: delta-part from the d_i eigenvalues, d-part
    // from the K_i eigenvalues.
    LatticeVector gamma = lat.zero();
    for (int i = 0; i < n - 1; ++i) {
        const Rat& a = w.d[std::size_t(i)];
        Rat b = w.k[std::size_t(i)] / act.level();
        if (!rat_is_int(a) || !rat_is_int(b))
            return res;
        gamma[std::size_t(i)] = int(numerator(a));
        gamma[std::size_t(n - 1 + i)] = int(numerator(b));
    }

    // The affine descent matching w.h is unique: solve over the simple roots.
    std::vector<std::vector<Rat>> a_mat(std::size_t(alg.rank),
                                        std::vector<Rat>(std::size_t(alg.rank)));
    for (int i = 0; i < alg.rank; ++i) {
        std::vector<int> e(std::size_t(alg.rank), 0);
        e[std::size_t(i)] = 1;
        auto ri = alg.find_root(e);
        if (!ri)
            return res;
        for (int j = 0; j < alg.rank; ++j)
            a_mat[std::size_t(j)][std::size_t(i)] = alg.root(*ri).alpha_h[std::size_t(j)];
    }
    std::vector<Rat> rhs(std::size_t(alg.rank));
    for (int j = 0; j < alg.rank; ++j)
        rhs[std::size_t(j)] = w.h[std::size_t(j)] - mod.lambda()[std::size_t(j)];
    // Gaussian elimination (small rank).
    std::vector<Rat> x(std::size_t(alg.rank), Rat(0));
    {
        auto m2 = a_mat;
        auto b2 = rhs;
        std::size_t r = std::size_t(alg.rank);
        for (std::size_t c = 0; c < r; ++c) {
            std::size_t p = c;
            while (p < r && m2[p][c] == 0)
                ++p;
            if (p == r)
                return res; // degenerate simple-root data
            std::swap(m2[p], m2[c]);
            std::swap(b2[p], b2[c]);
            for (std::size_t q = 0; q < r; ++q)
                if (q != c && m2[q][c] != 0) {
                    Rat f = m2[q][c] / m2[c][c];
                    for (std::size_t j = c; j < r; ++j)
                        m2[q][j] -= f * m2[c][j];
                    b2[q] -= f * b2[c];
                }
        }
        for (std::size_t c = 0; c < r; ++c)
            x[c] = b2[c] / m2[c][c];
    }
    std::vector<int> descent(std::size_t(alg.rank));
    for (int i = 0; i < alg.rank; ++i) {
        if (!rat_is_int(x[std::size_t(i)]))
            return res;
        descent[std::size_t(i)] = -int(numerator(x[std::size_t(i)]));
    }

    // d_n eigenvalue: (P + tdeg) - ((gamma,gamma)/2 + s). With tdeg = C + s,
    // C = w.d_n - P + (gamma,gamma)/2, the pairs (s, tdepth = -C - s) are the
    // finitely many splits with s >= 0, tdepth >= 0.
    FockMonomial probe = vacuum_monomial(lat, gamma);
    Rat c_val = w.d.back() - mod.p_eigenvalue() - act.fock().l0_eigenvalue(probe);
    // l0_eigenvalue(vacuum) = -(gamma,gamma)/2, so c_val = w.d_n - P + (g,g)/2
    if (!rat_is_int(c_val))
        return res;
    long long c_ll = numerator(c_val);
    res.certified = true;
    if (c_ll > 0)
        return res; // would need positive t-degree: empty
    long long smax = -c_ll;
    if (smax > caps.fock_depth || smax > caps.affine_depth)
        res.certified = false;
    int nsym = caps.q_creations_only ? n - 1 : 2 * (n - 1);

    for (long long s = 0; s <= smax; ++s) {
        int tdepth = int(smax - s);
        if (s > caps.fock_depth || tdepth > caps.affine_depth)
            continue;
        auto affs = mod.graded_basis(descent, tdepth);
        auto cms = creation_multisets(nsym, int(s));
        for (auto& am : affs)
            for (auto& cm : cms) {
                FockMonomial f;
                f.gamma = gamma;
                f.creations = cm;
                res.basis.push_back({am, f});
            }
        res.counted_dimension +=
            mod.graded_dimension_by_counting(descent, tdepth) * count_creations(nsym, int(s));
    }
    std::sort(res.basis.begin(), res.basis.end());
    return res;
}

NilpotencyResult nilpotency_probe(const ModuleAction& act, const ToroidalSymbol& x,
                                  const TensorVector& v, int cap, int scan_depth)
{
    const AlgebraTable& alg = act.toroidal().table();
    for (auto& r : alg.roots)
        if (r.parity == Parity::odd)
            throw std::invalid_argument(
                "nilpotency probes are defined for the Lie algebra case only");
    TensorVector cur = v;
    for (int l = 1; l <= cap; ++l) {
        cur = act.act(x, cur);
        if (cur.is_zero())
            return {l, false};
        // Zero in the quotient iff every affine component (per Fock monomial)
        // lies in the singular-generated submodule.
        std::map<FockMonomial, AffineVector> comps;
        for (auto& [m, c] : cur.terms())
            comps[m.fock].add(m.aff, c);
        bool all_in = true;
        for (auto& [f, a] : comps)
            if (!act.module().quotient_reduce(a, scan_depth).is_zero()) {
                all_in = false;
                break;
            }
        if (all_in)
            return {l, true};
    }
    return {-1, false};
}

TensorVector lift_module_map(const AffineMap& f, const TensorVector& v)
{
    TensorVector out;
    for (auto& [m, c] : v.terms()) {
        AffineVector img = f(m.aff);
        img *= c;
        out += tensor(img, FockVector(m.fock));
    }
    return out;
}

Report verify_lifted_map(const ModuleAction& src, const ModuleAction& dst, const AffineMap& f,
                         int window, const std::vector<TensorMonomial>& samples)
{
    Report rep;
    rep.suite = "lifted-map:" + src.toroidal().table().name;
    auto syms = src.toroidal().symbols_in_window(window);
    for (auto& m : samples) {
        TensorVector v(m);
        for (auto& x : syms) {
            TensorVector lhs = lift_module_map(f, src.act(x, v));
            TensorVector rhs = dst.act(x, lift_module_map(f, v));
            ++rep.checked;
            if (!(lhs - rhs).is_zero())
                rep.fail("lifted-map equivariance",
                         src.toroidal().symbol_string(x) + " on " + src.monomial_string(m));
        }
    }
    return rep;
}

} // namespace torvex
