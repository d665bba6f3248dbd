#include "torvex/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torvex {

Lattice::Lattice(int n) : n_(n)
{
    if (n < 2)
        throw std::invalid_argument("lattice needs n >= 2");
    if (n > 9)
        throw std::invalid_argument("lattice rank capped at n = 9");
    int d = dim();
    pairing_.assign(std::size_t(d), std::vector<Int>(std::size_t(d), Int(0)));
    // <delta_i, d_j> = delta_ij, everything else 0.
    for (int i = 0; i < n_ - 1; ++i) {
        pairing_[std::size_t(i)][std::size_t(n_ - 1 + i)] = 1;
        pairing_[std::size_t(n_ - 1 + i)][std::size_t(i)] = 1;
    }
}

LatticeVector Lattice::delta(int i) const
{
    LatticeVector v = zero();
    v.at(std::size_t(i - 1)) = 1;
    return v;
}

LatticeVector Lattice::dvec(int i) const
{
    LatticeVector v = zero();
    v.at(std::size_t(n_ - 1 + i - 1)) = 1;
    return v;
}

LatticeVector Lattice::delta_underline(const std::vector<int>& m_under) const
{
    if (int(m_under.size()) != n_ - 1)
        throw std::invalid_argument("delta_underline needs n-1 coordinates");
    LatticeVector v = zero();
    for (int i = 0; i < n_ - 1; ++i)
        v[std::size_t(i)] = m_under[std::size_t(i)];
    return v;
}

Int Lattice::pairing(const LatticeVector& a, const LatticeVector& b) const
{
    Int s = 0;
    for (int i = 0; i < dim(); ++i) {
        if (a[std::size_t(i)] == 0)
            continue;
        for (int j = 0; j < dim(); ++j)
            if (b[std::size_t(j)] != 0)
                s += Int(a[std::size_t(i)]) * pairing_[std::size_t(i)][std::size_t(j)] *
                     Int(b[std::size_t(j)]);
    }
    return s;
}

bool Lattice::in_q(const LatticeVector& a) const
{
    for (int i = n_ - 1; i < dim(); ++i)
        if (a[std::size_t(i)] != 0)
            return false;
    return true;
}

bool Lattice::in_d_span(const LatticeVector& a) const
{
    for (int i = 0; i < n_ - 1; ++i)
        if (a[std::size_t(i)] != 0)
            return false;
    return true;
}

FockMonomial vacuum_monomial(const Lattice& lat, const LatticeVector& gamma)
{
    (void)lat;
    return FockMonomial{gamma, {}};
}

std::string fock_monomial_string(const Lattice& lat, const FockMonomial& m)
{
    std::ostringstream out;
    out << "e^(";
    for (int i = 0; i < lat.dim(); ++i)
        out << (i ? "," : "") << m.gamma[std::size_t(i)];
    out << ")";
    for (auto& [c, e] : m.creations) {
        std::string sym = c.sym < lat.n() - 1 ? "delta" + std::to_string(c.sym + 1)
                                              : "d" + std::to_string(c.sym - lat.n() + 2);
        out << " " << sym << "(-" << c.mode << ")";
        if (e > 1)
            out << "^" << e;
    }
    return out.str();
}

FockVector FockOps::heisenberg_act(const LatticeVector& a, int m, const FockVector& v) const
{
    FockVector out;
    const int d = lat_.dim();
    for (auto& [mono, c] : v.terms()) {
        if (m == 0) {
            out.add(mono, c * Rat(lat_.pairing(mono.gamma, a)));
        } else if (m < 0) {
            for (int s = 0; s < d; ++s) {
                if (a[std::size_t(s)] == 0)
                    continue;
                FockMonomial nm = mono;
                CreationMode cm{s, -m};
                auto it = std::lower_bound(nm.creations.begin(), nm.creations.end(),
                                           std::make_pair(cm, 0),
                                           [](auto& x, auto& y) { return x.first < y.first; });
                if (it != nm.creations.end() && it->first == cm)
                    ++it->second;
                else
                    nm.creations.insert(it, {cm, 1});
                out.add(nm, c * Rat(a[std::size_t(s)]));
            }
        } else {
            for (std::size_t idx = 0; idx < mono.creations.size(); ++idx) {
                auto [cm, e] = mono.creations[idx];
                if (cm.mode != m)
                    continue;
                Int pair = lat_.pairing_unit(a, cm.sym);
                if (pair == 0)
                    continue;
                FockMonomial nm = mono;
                if (e == 1)
                    nm.creations.erase(nm.creations.begin() + long(idx));
                else
                    --nm.creations[idx].second;
                out.add(nm, c * Rat(e) * Rat(m) * Rat(pair));
            }
        }
    }
    return out;
}

Int FockOps::annihilation_bound(const LatticeVector& alpha, const FockMonomial& m) const
{
    Int bound = -lat_.pairing(alpha, m.gamma);
    for (auto& [cm, e] : m.creations)
        if (lat_.pairing_unit(alpha, cm.sym) != 0)
            bound += Int(cm.mode) * Int(e);
    return bound;
}

FockVector FockOps::schur_operator(int p, const LatticeVector& delta) const
{
    if (p < 0)
        return {};
    if (p == 0)
        return FockVector(FockMonomial{lat_.zero(), {}});
    auto key = std::make_pair(delta, p);
    auto it = schur_cache_.find(key);
    if (it != schur_cache_.end())
        return it->second;
    // p S_p = sum_{k=1}^{p} delta(-k) S_{p-k}
    FockVector acc;
    for (int k = 1; k <= p; ++k)
        acc += heisenberg_act(delta, -k, schur_operator(p - k, delta));
    acc *= Rat(1, p);
    schur_cache_[key] = acc;
    return acc;
}

FockVector FockOps::multiply_creations(const FockMonomial& target, const FockVector& poly,
                                       const Rat& coeff) const
{
    FockVector out;
    for (auto& [pm, pc] : poly.terms()) {
        FockMonomial nm = target;
        for (auto& [cm, e] : pm.creations) {
            auto it = std::lower_bound(nm.creations.begin(), nm.creations.end(),
                                       std::make_pair(cm, 0),
                                       [](auto& x, auto& y) { return x.first < y.first; });
            if (it != nm.creations.end() && it->first == cm)
                it->second += e;
            else
                nm.creations.insert(it, {cm, e});
        }
        out.add(nm, coeff * pc);
    }
    return out;
}

void FockOps::vertex_accumulate(int m, const LatticeVector& alpha, const FockMonomial& mono,
                                const Rat& scale, FockVector& out) const
{
    // alpha lies in Q, so the Q-part of gamma pairs to zero with alpha and
    // with every creation symbol alpha touches: it only translates the
    // result. Cache with the Q-part zeroed and shift the output back.
    bool has_q_part = false;
    for (int i = 0; i < lat_.n() - 1; ++i)
        if (mono.gamma[std::size_t(i)] != 0) {
            has_q_part = true;
            break;
        }
    if (!has_q_part) {
        const FockVector& base = vertex_canonical(m, alpha, mono);
        FockVector::map_type scaled;
        scaled.reserve(base.size());
        for (auto& [mm, c] : base.terms())
            scaled.emplace_back(mm, scale * c);
        out += FockVector::from_sorted(std::move(scaled));
        return;
    }
    FockMonomial canon = mono;
    int q_part[8] = {};
    for (int i = 0; i < lat_.n() - 1; ++i) {
        q_part[i] = canon.gamma[std::size_t(i)];
        canon.gamma[std::size_t(i)] = 0;
    }
    const FockVector& base = vertex_canonical(m, alpha, canon);
    // Translating every gamma by the same vector preserves the sort order.
    FockVector::map_type shifted;
    shifted.reserve(base.size());
    for (auto& [mm, c] : base.terms()) {
        FockMonomial t = mm;
        for (int i = 0; i < lat_.n() - 1; ++i)
            t.gamma[std::size_t(i)] += q_part[i];
        shifted.emplace_back(std::move(t), scale * c);
    }
    out += FockVector::from_sorted(std::move(shifted));
}

FockVector FockOps::vertex_on_monomial(int m, const LatticeVector& alpha,
                                       const FockMonomial& mono) const
{
    FockVector out;
    vertex_accumulate(m, alpha, mono, Rat(1), out);
    return out;
}

const FockVector& FockOps::vertex_canonical(int m, const LatticeVector& alpha,
                                            const FockMonomial& mono) const
{
    XmKey key{alpha, m, mono};
    auto hit = xm_cache_.find(key);
    if (hit != xm_cache_.end())
        return hit->second;

    // Annihilation side: exp T_+(alpha,z) mono, graded by the total mode q it
    // removed. Each application of T_+ strictly lowers creation degree, so the
    // exponential series is finite on any monomial.
    std::map<int, FockVector> ann;
    std::map<int, FockVector> cur;
    cur[0] = FockVector(mono);
    ann = cur;
    int maxmode = 0;
    for (auto& [cm, e] : mono.creations)
        maxmode = std::max(maxmode, cm.mode);
    for (int j = 1; !cur.empty(); ++j) {
        std::map<int, FockVector> nxt;
        for (auto& [q, w] : cur)
            for (int k = 1; k <= maxmode; ++k) {
                FockVector t = heisenberg_act(alpha, k, w);
                if (!t.is_zero()) {
                    t *= Rat(-1, k);
                    nxt[q + k] += t;
                    if (nxt[q + k].is_zero())
                        nxt.erase(q + k);
                }
            }
        for (auto it2 = nxt.begin(); it2 != nxt.end();) {
            it2->second *= Rat(1, j);
            if (it2->second.is_zero())
                it2 = nxt.erase(it2);
            else
                ++it2;
        }
        for (auto& [q, w] : nxt)
            ann[q] += w;
        cur = std::move(nxt);
    }

    Int pa = lat_.pairing(alpha, mono.gamma);
    LatticeVector shifted = mono.gamma;
    for (int i = 0; i < lat_.dim(); ++i)
        shifted[std::size_t(i)] += alpha[std::size_t(i)];

    FockVector out;
    for (auto& [q, w] : ann) {
        Int p_big = Int(q) - Int(m) - pa;
        if (p_big < 0)
            continue;
        int p = int(p_big);
        FockVector s = schur_operator(p, alpha);
        for (auto& [mm, c] : w.terms()) {
            FockMonomial t = mm;
            t.gamma = shifted;
            out += multiply_creations(t, s, c);
        }
    }
    return xm_cache_[std::move(key)] = std::move(out);
}

FockVector FockOps::vertex_coefficient_act(int m, const LatticeVector& alpha,
                                           const FockVector& v) const
{
    if (!lat_.in_q(alpha))
        throw std::invalid_argument("vertex operator argument must lie in Q");
    FockVector out;
    for (auto& [mono, c] : v.terms())
        vertex_accumulate(m, alpha, mono, c, out);
    return out;
}

FockVector FockOps::t_operator_act(const LatticeVector& h, int k, const LatticeVector& alpha,
                                   const FockVector& v) const
{
    if (!lat_.in_q(alpha))
        throw std::invalid_argument("vertex operator argument must lie in Q");
    FockVector out;
    for (auto& [mono, c] : v.terms()) {
        // h^-(z) X(alpha,z): creations after the vertex coefficient.
        Int bound = annihilation_bound(alpha, mono);
        if (Int(k) <= bound) {
            int mlow = int(Int(k) - bound);
            for (int m = mlow; m <= -1; ++m) {
                FockVector w;
                vertex_accumulate(k - m, alpha, mono, c, w);
                out += heisenberg_act(h, m, w);
            }
        }
        // X(alpha,z) h^+(z): annihilators and h(0) first.
        int maxmode = 0;
        for (auto& [cm, e] : mono.creations)
            maxmode = std::max(maxmode, cm.mode);
        for (int m = 0; m <= maxmode; ++m) {
            FockVector hv = heisenberg_act(h, m, FockVector(mono, c));
            if (!hv.is_zero())
                out += vertex_coefficient_act(k - m, alpha, hv);
        }
    }
    return out;
}

Rat FockOps::l0_eigenvalue(const FockMonomial& m) const
{
    return -(Rat(lat_.pairing(m.gamma, m.gamma)) / 2 + Rat(m.creation_degree()));
}

FockVector FockOps::l0_act(const FockVector& v) const
{
    FockVector out;
    for (auto& [mono, c] : v.terms())
        out.add(mono, c * l0_eigenvalue(mono));
    return out;
}

std::vector<FockMonomial> enumerate_fock_basis(const Lattice& lat, int gamma_bound, int depth,
                                               bool q_creations_only)
{
    std::vector<FockMonomial> out;
    const int d = lat.dim();
    const int nsym = q_creations_only ? lat.n() - 1 : d;

    // All creation multisets of degree <= depth over the allowed symbols.
    std::vector<std::vector<std::pair<CreationMode, int>>> multisets;
    std::vector<std::pair<CreationMode, int>> cur;
    std::vector<CreationMode> items;
    for (int s = 0; s < nsym; ++s)
        for (int k = 1; k <= depth; ++k)
            items.push_back({s, k});
    std::sort(items.begin(), items.end());
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        multisets.push_back(cur);
        for (std::size_t i = idx; i < items.size(); ++i) {
            if (items[i].mode > remaining)
                continue;
            cur.push_back({items[i], 1});
            int left = remaining - items[i].mode;
            while (true) {
                self(self, i + 1, left);
                if (left < items[i].mode)
                    break;
                ++cur.back().second;
                left -= items[i].mode;
            }
            cur.pop_back();
        }
    };
    rec(rec, 0, depth);

    LatticeVector gamma(std::size_t(d), -gamma_bound);
    for (;;) {
        for (auto& ms : multisets) {
            FockMonomial m{gamma, ms};
            std::sort(m.creations.begin(), m.creations.end());
            out.push_back(std::move(m));
        }
        int i = 0;
        while (i < d && gamma[std::size_t(i)] == gamma_bound)
            gamma[std::size_t(i++)] = -gamma_bound;
        if (i == d)
            break;
        ++gamma[std::size_t(i)];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Q-vectors delta_m for |m|_inf <= bound.
std::vector<LatticeVector> q_window(const Lattice& lat, int bound)
{
    std::vector<LatticeVector> out;
    std::vector<int> m(std::size_t(lat.n() - 1), -bound);
    for (;;) {
        out.push_back(lat.delta_underline(m));
        std::size_t i = 0;
        while (i < m.size() && m[i] == bound)
            m[i++] = -bound;
        if (i == m.size())
            break;
        ++m[i];
    }
    return out;
}

// Small representative set for the quadratic (pair) identities.
std::vector<LatticeVector> q_reps(const Lattice& lat)
{
    std::vector<LatticeVector> out;
    out.push_back(lat.zero());
    out.push_back(lat.delta(1));
    LatticeVector neg = lat.delta(1);
    neg[0] = -1;
    out.push_back(neg);
    if (lat.n() >= 3) {
        LatticeVector mix = lat.delta(1);
        mix[1] = 1;
        out.push_back(mix);
    }
    return out;
}

std::string lv_string(const LatticeVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

Report verify_fock_identities(const FockOps& ops, const FockSweepParams& params)
{
    const Lattice& lat = ops.lattice();
    Report rep;
    rep.suite = "fock:n=" + std::to_string(lat.n());

    auto alphas = q_window(lat, params.alpha_bound);
    auto reps = q_reps(lat);
    const int W = params.window;

    std::vector<LatticeVector> p_syms;
    for (int i = 1; i <= lat.n() - 1; ++i) {
        p_syms.push_back(lat.delta(i));
        p_syms.push_back(lat.dvec(i));
    }

    // Per-identity checks, shared between the thorough and full-basis phases.
    auto check_hv = [&](const FockMonomial& mono, const FockVector& v, const LatticeVector& b,
                        int k, const LatticeVector& alpha, int m) {
        // [b(k), X_m(alpha)] = <b,alpha> X_{m+k}(alpha)
        FockVector xv = ops.vertex_coefficient_act(m, alpha, v);
        FockVector lhs = ops.heisenberg_act(b, k, xv) -
                         ops.vertex_coefficient_act(m, alpha, ops.heisenberg_act(b, k, v));
        FockVector rhs = ops.vertex_coefficient_act(m + k, alpha, v);
        rhs *= Rat(lat.pairing(b, alpha));
        ++rep.checked;
        if (!(lhs - rhs).is_zero())
            rep.fail("heisenberg-vertex commutator",
                     "alpha=" + lv_string(alpha) + " b=" + lv_string(b) +
                         " m=" + std::to_string(m) + " k=" + std::to_string(k) + " on " +
                         fock_monomial_string(lat, mono));
    };

    auto check_comm = [&](const FockMonomial& mono, const FockVector& v,
                          const LatticeVector& alpha, int m, const LatticeVector& beta, int k) {
        // [X_m(alpha), X_k(beta)] = 0
        FockVector lhs =
            ops.vertex_coefficient_act(m, alpha, ops.vertex_coefficient_act(k, beta, v)) -
            ops.vertex_coefficient_act(k, beta, ops.vertex_coefficient_act(m, alpha, v));
        ++rep.checked;
        if (!lhs.is_zero())
            rep.fail("vertex commutativity",
                     "alpha=" + lv_string(alpha) + " beta=" + lv_string(beta) +
                         " m=" + std::to_string(m) + " k=" + std::to_string(k) + " on " +
                         fock_monomial_string(lat, mono));
    };

    auto check_top = [&](const FockMonomial& mono, const FockVector& v, const LatticeVector& alpha,
                         int mn) {
        // T^{alpha}_{m}(alpha) + m X_{m}(alpha) = 0 for isotropic alpha
        FockVector lhs = ops.t_operator_act(alpha, mn, alpha, v);
        FockVector rhs = ops.vertex_coefficient_act(mn, alpha, v);
        rhs *= Rat(mn);
        ++rep.checked;
        if (!(lhs + rhs).is_zero())
            rep.fail("T-operator identity", "alpha=" + lv_string(alpha) +
                                                " mn=" + std::to_string(mn) + " on " +
                                                fock_monomial_string(lat, mono));
    };

    auto check_deriv = [&](const FockMonomial& mono, const FockVector& v,
                           const LatticeVector& alpha, int m) {
        // derivative rule, componentwise: -m X_m = sum_r alpha(r) X_{m-r}
        if (lat.in_d_span(alpha))
            return; // alpha = 0 in Q: identity is 0 = 0
        FockVector lhs = ops.vertex_coefficient_act(m, alpha, v);
        lhs *= Rat(-m);
        FockVector rhs;
        Int bound = ops.annihilation_bound(alpha, mono);
        int rlow = int(Int(m) - bound) - 2;
        int rhigh = mono.creation_degree() + 2;
        for (int r = rlow; r <= rhigh; ++r) {
            if (r == 0)
                continue;
            rhs += ops.heisenberg_act(alpha, r, ops.vertex_coefficient_act(m - r, alpha, v));
        }
        // r = 0 term: alpha(0) X_m(alpha) v
        rhs += ops.heisenberg_act(alpha, 0, ops.vertex_coefficient_act(m, alpha, v));
        ++rep.checked;
        if (!(lhs - rhs).is_zero())
            rep.fail("vertex derivative rule", "alpha=" + lv_string(alpha) +
                                                   " m=" + std::to_string(m) + " on " +
                                                   fock_monomial_string(lat, mono));
    };

    auto check_prod = [&](const FockMonomial& mono, const FockVector& v,
                          const LatticeVector& alpha, const LatticeVector& beta, int m) {
        // product rule, componentwise: X_m(alpha+beta) = sum_j X_j(alpha) X_{m-j}(beta)
        LatticeVector sum = alpha;
        for (int i = 0; i < lat.dim(); ++i)
            sum[std::size_t(i)] += beta[std::size_t(i)];
        FockVector lhs = ops.vertex_coefficient_act(m, sum, v);
        FockVector rhs;
        Int nb = ops.annihilation_bound(beta, mono);
        Int na = ops.annihilation_bound(alpha, mono); // beta adds only Q-creations
        int jlow = int(Int(m) - nb) - 2;
        int jhigh = int(na) + 2;
        for (int j = jlow; j <= jhigh; ++j)
            rhs += ops.vertex_coefficient_act(j, alpha, ops.vertex_coefficient_act(m - j, beta, v));
        ++rep.checked;
        if (!(lhs - rhs).is_zero())
            rep.fail("vertex product rule", "alpha=" + lv_string(alpha) +
                                                " beta=" + lv_string(beta) +
                                                " m=" + std::to_string(m) + " on " +
                                                fock_monomial_string(lat, mono));
    };

    auto check_l0 = [&](const FockMonomial& mono, const FockVector& v, const LatticeVector& alpha,
                        int k) {
        // L0 grading: [L0, X_k(alpha)] = k X_k(alpha)
        FockVector xv = ops.vertex_coefficient_act(k, alpha, v);
        FockVector lhs = ops.l0_act(xv) - ops.vertex_coefficient_act(k, alpha, ops.l0_act(v));
        FockVector rhs = xv;
        rhs *= Rat(k);
        ++rep.checked;
        if (!(lhs - rhs).is_zero())
            rep.fail("L0 grading", "alpha=" + lv_string(alpha) + " k=" + std::to_string(k) +
                                       " on " + fock_monomial_string(lat, mono));
    };

    // Thorough phase: full operator windows over the shallow sub-basis. For
    // rank > 2 lattices, gammas with many nonzero coordinates are left to the
    // full-basis phase; the thorough phase is about operator-tuple richness.
    const int shallow_depth = std::min(params.depth, params.thorough_depth);
    auto shallow = enumerate_fock_basis(lat, params.gamma_bound, shallow_depth,
                                        params.q_creations_only);
    for (auto& mono : shallow) {
        int nonzero = 0;
        for (int i = 0; i < lat.dim(); ++i)
            if (mono.gamma[std::size_t(i)] != 0)
                ++nonzero;
        if (nonzero > 2)
            continue;
        FockVector v(mono);
        for (auto& alpha : reps)
            for (auto& b : p_syms)
                for (int m = -W; m <= W; ++m)
                    for (int k = -W; k <= W; ++k)
                        check_hv(mono, v, b, k, alpha, m);
        for (auto& alpha : reps)
            for (auto& beta : reps)
                for (int m = -W; m <= W; ++m)
                    for (int k = -W; k <= W; ++k)
                        check_comm(mono, v, alpha, m, beta, k);
        for (auto& alpha : alphas)
            for (int mn = -W; mn <= W; ++mn)
                check_top(mono, v, alpha, mn);
        for (auto& alpha : alphas)
            for (int m = -W; m <= W; ++m)
                check_deriv(mono, v, alpha, m);
        for (auto& alpha : reps)
            for (auto& beta : reps)
                for (int m = -W; m <= W; ++m)
                    check_prod(mono, v, alpha, beta, m);
        for (auto& alpha : alphas)
            for (int k = -W; k <= W; ++k)
                check_l0(mono, v, alpha, k);
    }

    // Full-basis phase: every identity on every basis monomial up to the full
    // depth, with a fixed set of nontrivial operator tuples.
    {
        const LatticeVector a1 = lat.delta(1);
        LatticeVector a2 = lat.delta(1);
        a2[0] = -1;
        LatticeVector a3 = a1;
        if (lat.n() >= 3)
            a3[1] = 1;
        const LatticeVector d1 = lat.dvec(1);
        const LatticeVector q1 = lat.delta(1);

        auto basis = enumerate_fock_basis(lat, params.gamma_bound, params.depth,
                                          params.q_creations_only);
        for (auto& mono : basis) {
            if (mono.creation_degree() <= shallow_depth) {
                int nonzero = 0;
                for (int i = 0; i < lat.dim(); ++i)
                    if (mono.gamma[std::size_t(i)] != 0)
                        ++nonzero;
                if (nonzero <= 2)
                    continue; // covered by the thorough phase
            }
            FockVector v(mono);
            check_hv(mono, v, d1, 1, a1, -1);
            check_hv(mono, v, d1, -1, a1, 1);
            check_hv(mono, v, q1, 1, a2, 0);
            if (lat.n() >= 3)
                check_hv(mono, v, lat.dvec(2), 1, a3, -1);
            check_comm(mono, v, a1, 1, a2, -1);
            check_comm(mono, v, a1, -1, a1, -1);
            if (lat.n() >= 3)
                check_comm(mono, v, a3, 0, a2, 1);
            check_top(mono, v, a1, 1);
            check_top(mono, v, a1, -1);
            check_top(mono, v, a2, 0);
            check_deriv(mono, v, a1, -1);
            check_deriv(mono, v, a1, 1);
            if (lat.n() >= 3)
                check_deriv(mono, v, a3, -1);
            check_prod(mono, v, a1, a2, 0);
            check_prod(mono, v, a1, a1, -1);
            if (lat.n() >= 3)
                check_prod(mono, v, a1, a3, -1);
            check_l0(mono, v, a1, 1);
            check_l0(mono, v, a2, -1);
        }
    }

    // Three-case vacuum formula for X_m(alpha) e^gamma.
    {
        auto basis = enumerate_fock_basis(lat, params.gamma_bound, 0, params.q_creations_only);
        for (auto& mono : basis) {
            for (auto& alpha : alphas)
                for (int m = -W - 2; m <= W + 2; ++m) {
                    FockVector got = ops.vertex_coefficient_act(m, alpha, FockVector(mono));
                    Int c = Int(m) + lat.pairing(mono.gamma, alpha);
                    FockVector want;
                    if (c > 0) {
                        // zero
                    } else {
                        LatticeVector g = mono.gamma;
                        for (int i = 0; i < lat.dim(); ++i)
                            g[std::size_t(i)] += alpha[std::size_t(i)];
                        FockMonomial t{g, {}};
                        want = ops.multiply_creations(t, ops.schur_operator(int(-c), alpha),
                                                      Rat(1));
                    }
                    ++rep.checked;
                    if (!(got - want).is_zero())
                        rep.fail("vacuum formula", "alpha=" + lv_string(alpha) +
                                                       " m=" + std::to_string(m) + " on " +
                                                       fock_monomial_string(lat, mono));
                }
        }
    }

    return rep;
}

} // namespace torvex
