#pragma once

#include "torvex/algebra.hpp"

#include <vector>

namespace torvex {

// Basis symbol of the extended toroidal algebra: X(alpha) (x) t^m, H(i) (x) t^m,
// t^m K_i (in gauged form), or d_i. The multi-degree m has length n; it is all
// zeros for derivations.
struct ToroidalSymbol {
    enum Kind { rootvec = 0, cartan = 1, central = 2, derivation = 3 };
    int kind = central;
    int index = 0; // root index, Cartan index 1..l, or K_i/d_i index 1..n
    std::vector<int> m;
    auto operator<=>(const ToroidalSymbol&) const = default;
};

using ToroidalElement = LinComb<ToroidalSymbol>;

// Weight data of a homogeneous symbol: root part (simple-root coordinates,
// empty for purely central/Cartan symbols) plus the t-multi-degree.
struct ToroidalWeight {
    std::vector<int> root_coords;
    std::vector<int> delta;
    bool operator==(const ToroidalWeight&) const = default;
};

class ToroidalAlgebra {
  public:
    ToroidalAlgebra(const AlgebraTable& alg, int n);

    const AlgebraTable& table() const { return alg_; }
    int n() const { return n_; }

    Parity parity(const ToroidalSymbol& s) const;
    std::string symbol_string(const ToroidalSymbol& s) const;
    std::string element_string(const ToroidalElement& e) const;

    // Largest index j with m_j != 0, or 0 when m = 0. The gauge zeroes the
    // K_j coefficient at degree m, eliminating sum_i m_i t^m K_i = 0.
    static int gauge_index(const std::vector<int>& m);

    // t^m K_i reduced to gauged form.
    ToroidalElement central_symbol(const std::vector<int>& m, int i, const Rat& coeff) const;
    // d(t^m) t^k = sum_i m_i t^{m+k} K_i, gauged.
    ToroidalElement two_cocycle(const std::vector<int>& m, const std::vector<int>& k) const;

    ToroidalElement bracket(const ToroidalSymbol& a, const ToroidalSymbol& b) const;
    ToroidalElement bracket(const ToroidalElement& a, const ToroidalElement& b) const;

    ToroidalWeight weight_of(const ToroidalSymbol& s) const;

    // Image of a symbol under B in GL(n, Z), acting by t^m -> t^{B.m} with
    // (B.m)_k = sum_i b_ik m_i, t^r K_i -> sum_k b_ik t^{B.r} K_k, and on the
    // d_i by the inverse transpose.
    ToroidalElement gl_action(const std::vector<std::vector<int>>& b,
                              const ToroidalSymbol& s) const;
    ToroidalElement gl_action(const std::vector<std::vector<int>>& b,
                              const ToroidalElement& e) const;

    // B_lambda for lambda = sum lam_i d_i (lam has length n-1): the identity
    // matrix with column n replaced by (lam_1, ..., lam_{n-1}, 1)^T rows.
    std::vector<std::vector<int>> b_lambda_matrix(const std::vector<int>& lam) const;
    ToroidalElement b_lambda(const std::vector<int>& lam, const ToroidalElement& e) const;

    // All gauged basis symbols with every |m_i| <= window (derivations included).
    std::vector<ToroidalSymbol> symbols_in_window(int window) const;

  private:
    const AlgebraTable& alg_;
    int n_;
};

// Super Jacobi / antisymmetry / gauge-consistency / weight-additivity sweep,
// plus the automorphism property of B_lambda, over the given window.
Report verify_toroidal_algebra(const ToroidalAlgebra& t, int window, int jacobi_window);

} // namespace torvex
