#pragma once

#include "torvex/algebra.hpp" // Report
#include "torvex/linear.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace torvex {

// Integer vector in the Gamma basis (delta_1..delta_{n-1}, d_1..d_{n-1}).
// Also used for elements of p = C (x) Gamma that happen to have integer
// coordinates, which is all the construction ever needs.
using LatticeVector = std::vector<int>;

// The rank-2(n-1) hyperbolic lattice <delta_i,d_j> = delta_ij. The pairing
// matrix can be overridden (tests use this to inject defects).
class Lattice {
  public:
    explicit Lattice(int n);

    int n() const { return n_; }
    int dim() const { return 2 * (n_ - 1); }

    LatticeVector zero() const { return LatticeVector(std::size_t(dim()), 0); }
    LatticeVector delta(int i) const;       // delta_i, 1 <= i <= n-1
    LatticeVector dvec(int i) const;        // d_i,     1 <= i <= n-1
    LatticeVector delta_underline(const std::vector<int>& m_under) const;

    Int pairing(const LatticeVector& a, const LatticeVector& b) const;
    // <a, e_s> against the s-th basis symbol, without building a vector.
    Int pairing_unit(const LatticeVector& a, int s) const
    {
        Int t = 0;
        for (int i = 0; i < dim(); ++i)
            if (a[std::size_t(i)] != 0)
                t += Int(a[std::size_t(i)]) * pairing_[std::size_t(i)][std::size_t(s)];
        return t;
    }
    bool in_q(const LatticeVector& a) const; // supported on delta coordinates only
    bool in_d_span(const LatticeVector& a) const;

    void set_pairing_entry(int i, int j, Int v) { pairing_[std::size_t(i)][std::size_t(j)] = v; }

  private:
    int n_;
    std::vector<std::vector<Int>> pairing_;
};

struct CreationMode {
    int sym;  // 0..n-2 = delta_{sym+1}, n-1..2n-3 = d_{sym-n+2}
    int mode; // k >= 1, the symbol a(-k)
    auto operator<=>(const CreationMode&) const = default;
};

struct FockMonomial {
    LatticeVector gamma;
    std::vector<std::pair<CreationMode, int>> creations; // sorted, exponents >= 1
    auto operator<=>(const FockMonomial&) const = default;

    int creation_degree() const
    {
        int d = 0;
        for (auto& [c, e] : creations)
            d += c.mode * e;
        return d;
    }
};

using FockVector = LinComb<FockMonomial>;

FockMonomial vacuum_monomial(const Lattice& lat, const LatticeVector& gamma);
std::string fock_monomial_string(const Lattice& lat, const FockMonomial& m);

// Operator algebra on V(Gamma, M), with memoized vertex-operator coefficients.
class FockOps {
  public:
    explicit FockOps(const Lattice& lat) : lat_(lat) {}
    const Lattice& lattice() const { return lat_; }

    // a(m): m < 0 multiplies, m = 0 acts by (gamma, a), m > 0 is the
    // derivation b(-k) -> delta_{m,k} m <a,b>. The central c acts as id.
    FockVector heisenberg_act(const LatticeVector& a, int m, const FockVector& v) const;

    // X_j(alpha) kills the monomial for every j strictly above this bound.
    // Only creations pairing nontrivially with alpha can absorb annihilators.
    Int annihilation_bound(const LatticeVector& alpha, const FockMonomial& m) const;

    // z^{-m} coefficient of exp T_-(a,z) e^a z^{a(0)} exp T_+(a,z). alpha must
    // lie in Q (throws otherwise).
    FockVector vertex_coefficient_act(int m, const LatticeVector& alpha, const FockVector& v) const;

    // S_p(delta): degree-p coefficient of exp T_-(delta,z), as a polynomial in
    // creation operators (a FockVector based at gamma = 0).
    FockVector schur_operator(int p, const LatticeVector& delta) const;

    // T^h_k(alpha): z^{-k-1} coefficient of h^-(z)X(alpha,z) + X(alpha,z)h^+(z).
    FockVector t_operator_act(const LatticeVector& h, int k, const LatticeVector& alpha,
                              const FockVector& v) const;

    FockVector l0_act(const FockVector& v) const;
    Rat l0_eigenvalue(const FockMonomial& m) const; // -((gamma,gamma)/2 + sum k_i)

    // e^{gamma_shift} translation combined with creation-polynomial multiply.
    FockVector multiply_creations(const FockMonomial& target, const FockVector& poly,
                                  const Rat& coeff) const;

  private:
    FockVector vertex_on_monomial(int m, const LatticeVector& alpha, const FockMonomial& mono) const;
    // Adds scale * X_m(alpha) mono into out, reading from the cache without
    // intermediate copies.
    void vertex_accumulate(int m, const LatticeVector& alpha, const FockMonomial& mono,
                           const Rat& scale, FockVector& out) const;
    // Cached evaluation for monomials whose gamma has no Q-part.
    const FockVector& vertex_canonical(int m, const LatticeVector& alpha,
                                       const FockMonomial& mono) const;

    struct XmKey {
        LatticeVector alpha;
        int m;
        FockMonomial mono;
        bool operator==(const XmKey&) const = default;
    };
    struct XmKeyHash {
        std::size_t operator()(const XmKey& k) const
        {
            std::size_t h = std::size_t(k.m) * 0x9e3779b97f4a7c15ULL;
            auto mix = [&h](std::size_t v) {
                h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            };
            for (int x : k.alpha)
                mix(std::size_t(x));
            for (int x : k.mono.gamma)
                mix(std::size_t(x));
            for (auto& [cm, e] : k.mono.creations) {
                mix(std::size_t(cm.sym));
                mix(std::size_t(cm.mode));
                mix(std::size_t(e));
            }
            return h;
        }
    };

    const Lattice& lat_;
    mutable std::map<std::pair<LatticeVector, int>, FockVector> schur_cache_;
    mutable std::unordered_map<XmKey, FockVector, XmKeyHash> xm_cache_;
};

// All monomials with |gamma_i| <= gamma_bound and creation degree <= depth.
// With q_creations_only, creation symbols are restricted to the delta_i
// (the V(Gamma) of the construction); otherwise the full V(Gamma, b).
std::vector<FockMonomial> enumerate_fock_basis(const Lattice& lat, int gamma_bound, int depth,
                                               bool q_creations_only);

struct FockSweepParams {
    int depth = 4;          // creation-degree cap of the sample basis
    int gamma_bound = 1;    // sup-norm cap on gamma
    int window = 2;         // mode window for m, k
    int alpha_bound = 1;    // sup-norm cap on the underline part of alpha
    int thorough_depth = 2; // full operator windows up to this depth; above
                            // it, every monomial is still checked against a
                            // fixed set of nontrivial operator tuples
    bool q_creations_only = false;
};

// Componentwise sweep of the Heisenberg commutation rules, the operator
// identities [h(m), X_k(a)] = (h,a) X_{k+m}(a) and d/dz X(a,z) = T(a,z),
// the product rule X(a,z)X(b,z) = X(a+b,z), and the three-case vacuum
// formula for X_m(a) e^gamma.
Report verify_fock_identities(const FockOps& ops, const FockSweepParams& params);

} // namespace torvex
