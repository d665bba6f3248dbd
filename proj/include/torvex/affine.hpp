#pragma once

#include "torvex/algebra.hpp"

#include <map>
#include <vector>

namespace torvex {

// Generator of g_aff: X(alpha) (x) t^m, H(i) (x) t^m, K_n, dbar_n.
struct AffineGenerator {
    enum Kind { rootvec = 0, cartan = 1, center = 2, derivation = 3 };
    int kind = center;
    int index = 0;  // root index or Cartan index; 0 for center/derivation
    int degree = 0; // t_n exponent; 0 for center/derivation
    auto operator<=>(const AffineGenerator&) const = default;
};

using AffineCombination = LinComb<AffineGenerator>;

Parity affine_parity(const AlgebraTable& t, const AffineGenerator& g);
std::string affine_generator_string(const AlgebraTable& t, const AffineGenerator& g);

// [X (x) t^m, Y (x) t^k] = [X,Y] (x) t^{m+k} + (X,Y) m delta_{m+k,0} K_n,
// K_n central, [dbar_n, X (x) t^m] = m X (x) t^m.
AffineCombination affine_bracket(const AlgebraTable& t, const AffineCombination& a,
                                 const AffineCombination& b);

// Product of lowering generators in canonical non-decreasing order, applied to
// the highest-weight vector. The empty monomial is v_hw.
struct PBWMonomial {
    std::vector<AffineGenerator> factors;
    auto operator<=>(const PBWMonomial&) const = default;
};

using AffineVector = LinComb<PBWMonomial>;

// Truncated Verma-type restricted module of level K != 0. The depth cap only
// bounds basis enumeration; operator application is exact and unbounded.
class HighestWeightModule {
  public:
    HighestWeightModule(const AlgebraTable& alg, std::vector<Rat> lambda, Rat level, Rat p_eig,
                        int depth_cap);

    const AlgebraTable& algebra() const { return alg_; }
    const std::vector<Rat>& lambda() const { return lambda_; }
    const Rat& level() const { return level_; }
    const Rat& p_eigenvalue() const { return p_; }
    int depth_cap() const { return depth_cap_; }

    bool is_lowering(const AffineGenerator& g) const;

    // Straightening action, exact, memoized per generator/monomial pair.
    AffineVector act(const AffineGenerator& g, const AffineVector& v) const;
    AffineVector act(const AffineCombination& g, const AffineVector& v) const;

    // depth = sum of |t-degrees| plus one per degree-0 lowering factor.
    static int monomial_depth(const PBWMonomial& m);
    static int monomial_tdegree(const PBWMonomial& m); // sum of t-degrees (<= 0)

    Rat dn_eigenvalue(const PBWMonomial& m) const; // P + sum of t-degrees
    // Weight of the monomial vector as values on H(1..l).
    std::vector<Rat> h_weight(const PBWMonomial& m) const;
    // Weight descent from lambda, in simple-root coordinates.
    std::vector<int> descent_coords(const PBWMonomial& m) const;

    // X_k(alpha) m = 0 and H_k(i) m = 0 for all k above this (restrictedness).
    int annihilation_bound(const PBWMonomial& m) const { return -monomial_tdegree(m); }

    // Apply the factors of m (rightmost first) to an arbitrary vector.
    AffineVector apply_monomial(const PBWMonomial& m, const AffineVector& v) const;

    // Nonzero vectors other than v_hw killed by every raising generator of
    // t-degree 0 and 1, found by a kernel scan of every graded piece reachable
    // within the given monomial depth.
    std::vector<AffineVector> singular_vectors(int max_depth) const;

    // Remainder of v modulo the submodule generated by the singular vectors
    // found within scan_depth. A zero remainder certifies that v vanishes in
    // the quotient by that submodule. The check is restricted: singular
    // vectors deeper than scan_depth are not seen.
    AffineVector quotient_reduce(const AffineVector& v, int scan_depth) const;

    std::vector<PBWMonomial> basis_up_to_depth(int depth) const;
    // Exact graded piece: all monomials with the given descent (simple-root
    // coordinates) and total t-degree -tdepth.
    std::vector<PBWMonomial> graded_basis(const std::vector<int>& descent, int tdepth) const;
    // Independent count of the same graded piece by dynamic programming over
    // the generator list (no monomials are materialized).
    long long graded_dimension_by_counting(const std::vector<int>& descent, int tdepth) const;

    std::string monomial_string(const PBWMonomial& m) const;

  private:
    const AffineVector& act_on_monomial(const AffineGenerator& g, const PBWMonomial& m) const;
    std::vector<AffineGenerator> lowering_generators(int max_depth) const;

    const AlgebraTable& alg_;
    std::vector<Rat> lambda_;
    Rat level_;
    Rat p_;
    int depth_cap_;
    mutable std::map<std::pair<AffineGenerator, PBWMonomial>, AffineVector> cache_;
    mutable std::map<int, std::vector<AffineVector>> singular_cache_;
    // Echelonized span of the singular-generated submodule in one graded
    // piece, keyed by (scan depth, descent, t-depth).
    mutable std::map<std::tuple<int, std::vector<int>, int>, std::vector<AffineVector>>
        span_cache_;
};

// Exact sweep of A(1)-A(3): [g1,g2] v = g1 g2 v -+ g2 g1 v for all generator
// pairs with |degree| <= window, on every sample vector.
Report verify_affine_relations(const HighestWeightModule& mod, int window,
                               const std::vector<PBWMonomial>& samples);

} // namespace torvex
