#pragma once

#include "torvex/affine.hpp"
#include "torvex/fock.hpp"
#include "torvex/toroidal.hpp"

#include <functional>
#include <map>
#include <vector>

namespace torvex {

struct TensorMonomial {
    PBWMonomial aff;
    FockMonomial fock;
    auto operator<=>(const TensorMonomial&) const = default;
};

using TensorVector = LinComb<TensorMonomial>;

TensorVector tensor(const AffineVector& a, const FockVector& f);

// Weight of a basis tensor with respect to the extended Cartan subalgebra:
// h-eigenvalues, eigenvalues of the degree-zero central symbols (K_1..K_{n-1}
// act by (gamma, delta_i), K_n by the level), and the derivation eigenvalues.
struct TensorWeight {
    std::vector<Rat> h;
    std::vector<Rat> k;
    std::vector<Rat> d;
    auto operator<=>(const TensorWeight&) const = default;
};

// The action of the extended toroidal algebra on V (x) V(Gamma). The level
// used in the central rows is settable independently of the module's K so
// tests can inject a mismatch.
class ModuleAction {
  public:
    ModuleAction(const ToroidalAlgebra& talg, const HighestWeightModule& mod, const FockOps& ops);

    const ToroidalAlgebra& toroidal() const { return talg_; }
    const HighestWeightModule& module() const { return mod_; }
    const FockOps& fock() const { return ops_; }
    const Rat& level() const { return level_; }
    void set_level(Rat k) { level_ = std::move(k); }

    TensorVector act(const ToroidalSymbol& s, const TensorVector& v) const;
    TensorVector act(const ToroidalElement& e, const TensorVector& v) const;

    TensorWeight weight_of(const TensorMonomial& m) const;

    // Bounds of the loop-row k-sum on a single tensor monomial: contributions
    // vanish outside [m_n - N_f, N_v].
    std::pair<long long, long long> loop_sum_bounds(const std::vector<int>& m_under, int m_n,
                                                    const LatticeVector& alpha,
                                                    const TensorMonomial& mono) const;

    std::string monomial_string(const TensorMonomial& m) const;

  private:
    const TensorVector& act_on_monomial(const ToroidalSymbol& s, const TensorMonomial& m) const;

    const ToroidalAlgebra& talg_;
    const HighestWeightModule& mod_;
    const FockOps& ops_;
    Rat level_;
    mutable std::map<std::pair<ToroidalSymbol, TensorMonomial>, TensorVector> cache_;
};

// All basis tensors with affine depth + Fock creation degree <= depth and
// |gamma_i| <= gamma_bound.
std::vector<TensorMonomial> enumerate_tensor_basis(const ModuleAction& act, int depth,
                                                   int gamma_bound, bool q_creations_only);

// Master sweep: pi(x)pi(y)v -+ pi(y)pi(x)v = pi([x,y])v for every homogeneous
// symbol pair in the window, on every sample, plus k-sum bound certification.
Report verify_toroidal_relations(const ModuleAction& act, int window,
                                 const std::vector<TensorMonomial>& samples);

// Sector relabeling phi: v (x) e^{lambda+delta} (x) u -> v (x) e^{delta} (x) u
// for lambda = sum lam_i d_i. Throws if v is not in the lambda sector.
TensorVector phi_map(const ModuleAction& act, const std::vector<int>& lam,
                     const TensorVector& v);

// phi o pi_lambda(x) = pi_0(B_lambda x) o phi over the window, on samples
// taken inside the lambda sector (their gamma is shifted by lambda).
Report verify_intertwining(const ModuleAction& act, const std::vector<int>& lam, int window,
                           const std::vector<TensorMonomial>& sector_zero_samples);

// Splits by the coset gamma + Q (i.e. by the d-part of gamma).
std::map<std::vector<int>, TensorVector> sector_decompose(const ModuleAction& act,
                                                          const TensorVector& v);

struct WeightSpaceResult {
    std::vector<TensorMonomial> basis;
    long long counted_dimension = 0; // independent counting strategy
    bool certified = false;          // caps were wide enough to close the space
};

struct WeightCaps {
    int affine_depth = 4;
    int fock_depth = 4;
    int gamma_bound = 1;
    bool q_creations_only = true;
};

// Enumerates the weight space of the given weight twice: by direct scan of
// the tensor basis, and by pairing Fock monomials with DP counts of affine
// graded pieces.
WeightSpaceResult weight_space(const ModuleAction& act, const TensorWeight& w,
                               const WeightCaps& caps);

struct NilpotencyResult {
    int degree = -1;            // smallest l with pi(x)^l v = 0, or -1 within the cap
    bool used_quotient = false; // vanishing holds only in the quotient by the
                                // submodule generated by singular vectors
};

// Probes pi(x)^l v for l = 1..cap. A power that is nonzero in the free module
// but lies in the submodule generated by the singular vectors found within
// scan_depth counts as zero, with used_quotient set; this is a restricted
// check, valid on orbits that stay inside the scanned depth. Rejects super
// algebras.
NilpotencyResult nilpotency_probe(const ModuleAction& act, const ToroidalSymbol& x,
                                  const TensorVector& v, int cap, int scan_depth = 4);

// Lift of an affine module map to the tensor modules: f~ (v (x) w) = f(v) (x) w.
using AffineMap = std::function<AffineVector(const PBWMonomial&)>;
TensorVector lift_module_map(const AffineMap& f, const TensorVector& v);

// Equivariance of the lifted map: f~ (pi_src(x) v) = pi_dst(x) f~(v).
Report verify_lifted_map(const ModuleAction& src, const ModuleAction& dst, const AffineMap& f,
                         int window, const std::vector<TensorMonomial>& samples);

} // namespace torvex
