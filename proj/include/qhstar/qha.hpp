// Quasi-Hopf structure container and its axiom suite.
//
// A structure bundles an algebra with a co-product Δ (algebra homomorphism
// H → H⊗H), co-unit ε, an invertible co-associator Φ ∈ H⊗H⊗H mediating
// (1⊗Δ)Δ(a) = Φ⁻¹ (Δ⊗1)Δ(a) Φ, and an antipode triple (S, α, β) subject to
//
//     Σ S(X_ν) α Y_ν β S(Z_ν) = 1 = Σ X̄_ν β S(Ȳ_ν) α Z̄_ν,
//     Σ S(a₍₁₎) α a₍₂₎ = ε(a) α,   Σ a₍₁₎ β S(a₍₂₎) = ε(a) β.
//
// Axiom checks iterate over basis elements; linearity makes that sufficient.

#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "tensor.hpp"

namespace qhstar {

struct CandidateNotAntipode : std::runtime_error {
    explicit CandidateNotAntipode(const std::string& what) : std::runtime_error(what) {}
};
struct InconsistentMediator : std::runtime_error {
    explicit InconsistentMediator(const std::string& what) : std::runtime_error(what) {}
};

struct QuasiHopfData {
    AlgebraPtr alg;
    LinearMapData coproduct;        // n² x n
    LinearMapData counit;           // 1 x n
    TensorElement coassociator;     // order 3, invertible
    TensorElement coassociator_inv; // cached
    LinearMapData antipode;         // n x n, bijective
    LinearMapData antipode_inv;     // cached
    TensorElement alpha;            // order 1
    TensorElement beta;             // order 1
};

inline LinearMapData invert_map(const LinearMapData& m) {
    if (m.rows != m.cols) throw std::invalid_argument("invert_map: matrix must be square");
    Eigen::MatrixXcd M(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) M(r, c) = m.at(r, c);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible()) throw SingularElement("invert_map: matrix is singular");
    Eigen::MatrixXcd I = lu.inverse();
    LinearMapData out{m.rows, m.cols, std::vector<cplx>(m.matrix.size()), m.antilinear};
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = I(r, c);
    return out;
}

inline QuasiHopfData make_qha(AlgebraPtr alg, LinearMapData coproduct, LinearMapData counit,
                              TensorElement coassociator, LinearMapData antipode, TensorElement alpha,
                              TensorElement beta, const ToleranceConfig& tol = {}) {
    const int n = alg->dim;
    if (coproduct.rows != n * n || coproduct.cols != n) throw std::invalid_argument("make_qha: coproduct must be n² x n");
    if (counit.rows != 1 || counit.cols != n) throw std::invalid_argument("make_qha: counit must be 1 x n");
    if (antipode.rows != n || antipode.cols != n) throw std::invalid_argument("make_qha: antipode must be n x n");
    if (coassociator.order != 3) throw std::invalid_argument("make_qha: coassociator must have order 3");
    QuasiHopfData H;
    H.alg = std::move(alg);
    H.coproduct = std::move(coproduct);
    H.counit = std::move(counit);
    H.coassociator = std::move(coassociator);
    H.coassociator_inv = invert(H.coassociator, tol);
    H.antipode = std::move(antipode);
    H.antipode_inv = invert_map(H.antipode);
    H.alpha = std::move(alpha);
    H.beta = std::move(beta);
    return H;
}

// small accessors
inline TensorElement basis1(const QuasiHopfData& H, int i) { return basis_tensor(H.alg, i); }
inline TensorElement coproduct_of(const QuasiHopfData& H, const TensorElement& x) { return apply_map(H.coproduct, x); }
inline TensorElement antipode_of(const QuasiHopfData& H, const TensorElement& x) { return apply_map(H.antipode, x); }
inline TensorElement antipode_inv_of(const QuasiHopfData& H, const TensorElement& x) { return apply_map(H.antipode_inv, x); }
inline cplx counit_of(const QuasiHopfData& H, const TensorElement& x) { return functional_value(H.counit, x); }

/// Σ L(a₍₁₎) · mid · R(a₍₂₎) for a single coproduct application.
inline TensorElement sweedler_sandwich(const QuasiHopfData& H, const TensorElement& a, const LinearMapData& mapL,
                                       const TensorElement& mid, const LinearMapData& mapR) {
    TensorElement d = coproduct_of(H, a);
    d = apply_on_legs(mapL, {1}, d);
    d = apply_on_legs(mapR, {2}, d);
    return collapse_product(d, {mid});
}

/// Quasi-bialgebra axiom suite: co-unit laws, quasi-co-associativity per basis
/// element, the pentagon, and the co-unit/co-associator compatibilities.
inline CheckReport check_qba(const QuasiHopfData& H, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    const auto& Phi = H.coassociator;
    const auto& PhiInv = H.coassociator_inv;
    TensorElement one1 = unit_tensor(H.alg, 1);
    TensorElement one2 = unit_tensor(H.alg, 2);
    TensorElement one3 = unit_tensor(H.alg, 3);

    // structural: algebra laws and homomorphism properties
    {
        double r_assoc = 0.0, scale = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    TensorElement lhs = mul1(mul1(basis1(H, i), basis1(H, j)), basis1(H, k));
                    TensorElement rhs = mul1(basis1(H, i), mul1(basis1(H, j), basis1(H, k)));
                    r_assoc = std::max(r_assoc, max_abs_diff(lhs, rhs));
                    scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
                }
        rep.add("associativity", r_assoc, tol.threshold(scale));

        double r_unit = 0.0;
        for (int i = 0; i < n; ++i) {
            TensorElement e = basis1(H, i);
            r_unit = std::max(r_unit, max_abs_diff(mul1(one1, e), e));
            r_unit = std::max(r_unit, max_abs_diff(mul1(e, one1), e));
        }
        rep.add("unit-laws", r_unit, tol.threshold(1.0));
    }
    {
        double r = 0.0, scale = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TensorElement lhs = coproduct_of(H, mul1(basis1(H, i), basis1(H, j)));
                TensorElement rhs = tensor_mul(coproduct_of(H, basis1(H, i)), coproduct_of(H, basis1(H, j)));
                r = std::max(r, max_abs_diff(lhs, rhs));
                scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
            }
        rep.add("coproduct-homomorphism", r, tol.threshold(scale));

        double re = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx lhs = counit_of(H, mul1(basis1(H, i), basis1(H, j)));
                cplx rhs = counit_of(H, basis1(H, i)) * counit_of(H, basis1(H, j));
                re = std::max(re, std::abs(lhs - rhs));
            }
        rep.add("counit-homomorphism", re, tol.threshold(1.0));
        rep.add_cmp("coproduct-unit", coproduct_of(H, one1), one2, tol);
        rep.add_scalar("counit-unit", counit_of(H, one1), cplx{1, 0}, tol);
    }

    // (ε⊗1)Δ = 1 = (1⊗ε)Δ
    {
        double rl = 0.0, rr = 0.0;
        for (int i = 0; i < n; ++i) {
            TensorElement d = coproduct_of(H, basis1(H, i));
            rl = std::max(rl, max_abs_diff(apply_on_legs(H.counit, {1}, d), basis1(H, i)));
            rr = std::max(rr, max_abs_diff(apply_on_legs(H.counit, {2}, d), basis1(H, i)));
        }
        rep.add("counit-left", rl, tol.threshold(1.0));
        rep.add("counit-right", rr, tol.threshold(1.0));
    }

    // (1⊗Δ)Δ(a) = Φ⁻¹ (Δ⊗1)Δ(a) Φ, one entry per basis element
    for (int i = 0; i < n; ++i) {
        TensorElement d = coproduct_of(H, basis1(H, i));
        TensorElement lhs = apply_on_legs(H.coproduct, {2}, d);
        TensorElement rhs = mul(PhiInv, apply_on_legs(H.coproduct, {1}, d), Phi);
        double scale = std::max(max_abs(lhs), max_abs(rhs));
        rep.add("quasi-coassociativity[" + H.alg->basis_labels[static_cast<std::size_t>(i)] + "]",
                max_abs_diff(lhs, rhs), tol.threshold(scale));
    }

    // pentagon: (Δ⊗1⊗1)Φ (1⊗1⊗Δ)Φ = (Φ⊗1) (1⊗Δ⊗1)Φ (1⊗Φ)
    {
        TensorElement lhs = tensor_mul(apply_on_legs(H.coproduct, {1}, Phi), apply_on_legs(H.coproduct, {3}, Phi));
        TensorElement rhs = mul(embed_legs(Phi, {1, 2, 3}, 4), apply_on_legs(H.coproduct, {2}, Phi),
                                embed_legs(Phi, {2, 3, 4}, 4));
        double scale = std::max(max_abs(lhs), max_abs(rhs));
        rep.add("pentagon", max_abs_diff(lhs, rhs), tol.threshold(scale));
    }

    // (1⊗ε⊗1)Φ = 1⊗1, plus the derived (ε⊗1⊗1)Φ = 1⊗1 = (1⊗1⊗ε)Φ
    rep.add_cmp("epsilon-phi", apply_on_legs(H.counit, {2}, Phi), one2, tol);
    rep.add_cmp("epsilon-phi-left", apply_on_legs(H.counit, {1}, Phi), one2, tol);
    rep.add_cmp("epsilon-phi-right", apply_on_legs(H.counit, {3}, Phi), one2, tol);

    rep.add_cmp("coassociator-invertible", tensor_mul(Phi, PhiInv), one3, tol);
    return rep;
}

/// Antipode axiom suite for the triple (S, α, β).
inline CheckReport check_antipode(const QuasiHopfData& H, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    const auto& Phi = H.coassociator;
    const auto& PhiInv = H.coassociator_inv;
    TensorElement one1 = unit_tensor(H.alg, 1);

    {
        double r = 0.0, scale = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TensorElement lhs = antipode_of(H, mul1(basis1(H, i), basis1(H, j)));
                TensorElement rhs = mul1(antipode_of(H, basis1(H, j)), antipode_of(H, basis1(H, i)));
                r = std::max(r, max_abs_diff(lhs, rhs));
                scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
            }
        rep.add("antipode-antihomomorphism", r, tol.threshold(scale));
        rep.add_cmp("antipode-unit", antipode_of(H, one1), one1, tol);

        LinearMapData round = compose_maps(H.antipode, H.antipode_inv);
        LinearMapData id = identity_map(n);
        double ri = 0.0;
        for (std::size_t i = 0; i < round.matrix.size(); ++i) ri = std::max(ri, std::abs(round.matrix[i] - id.matrix[i]));
        rep.add("antipode-invertible", ri, tol.threshold(1.0));
    }

    // Σ S(X_ν) α Y_ν β S(Z_ν) = 1
    {
        TensorElement T = apply_on_legs(H.antipode, {1}, Phi);
        T = apply_on_legs(H.antipode, {3}, T);
        rep.add_cmp("canonical-left", collapse_product(T, {H.alpha, H.beta}), one1, tol);
    }
    // Σ X̄_ν β S(Ȳ_ν) α Z̄_ν = 1
    {
        TensorElement T = apply_on_legs(H.antipode, {2}, PhiInv);
        rep.add_cmp("canonical-right", collapse_product(T, {H.beta, H.alpha}), one1, tol);
    }

    // Σ S(a₍₁₎) α a₍₂₎ = ε(a) α and Σ a₍₁₎ β S(a₍₂₎) = ε(a) β, per basis element
    LinearMapData id = identity_map(n);
    for (int i = 0; i < n; ++i) {
        TensorElement a = basis1(H, i);
        cplx eps = counit_of(H, a);
        rep.add_cmp("antipode-alpha[" + H.alg->basis_labels[static_cast<std::size_t>(i)] + "]",
                    sweedler_sandwich(H, a, H.antipode, H.alpha, id), scale(H.alpha, eps), tol);
        rep.add_cmp("antipode-beta[" + H.alg->basis_labels[static_cast<std::size_t>(i)] + "]",
                    sweedler_sandwich(H, a, id, H.beta, H.antipode), scale(H.beta, eps), tol);
    }

    // derived: ε(α)ε(β) = 1 and ε(S(a)) = ε(S⁻¹(a)) = ε(a)
    rep.add_scalar("epsilon-alpha-beta", counit_of(H, H.alpha) * counit_of(H, H.beta), cplx{1, 0}, tol);
    {
        double r = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx e = counit_of(H, basis1(H, i));
            r = std::max(r, std::abs(counit_of(H, antipode_of(H, basis1(H, i))) - e));
            r = std::max(r, std::abs(counit_of(H, antipode_inv_of(H, basis1(H, i))) - e));
        }
        rep.add("epsilon-antipode", r, tol.threshold(1.0));
    }
    return rep;
}

/// The structure with reversed co-product: Δᵀ, Φᵀ = (Φ⁻¹)₍₃₂₁₎, antipode S⁻¹,
/// and canonical elements S⁻¹(α), S⁻¹(β).
inline QuasiHopfData opposite(const QuasiHopfData& H) {
    const int n = H.alg->dim;
    QuasiHopfData op;
    op.alg = H.alg;
    op.counit = H.counit;
    // Δᵀ as a matrix: swap the two output legs of each column
    op.coproduct = LinearMapData{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n), false};
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) op.coproduct.at(q * n + p, j) = H.coproduct.at(p * n + q, j);
    op.coassociator = permute_legs(H.coassociator_inv, {3, 2, 1});
    op.coassociator_inv = permute_legs(H.coassociator, {3, 2, 1});
    op.antipode = H.antipode_inv;
    op.antipode_inv = H.antipode;
    op.alpha = antipode_inv_of(H, H.alpha);
    op.beta = antipode_inv_of(H, H.beta);
    return op;
}

/// Given a second antipode triple (S₂, α₂, β₂) for the same co-algebra data,
/// returns the unique invertible mediator v with v·α = α₂, β₂·v = β and
/// S₂(a) = v S(a) v⁻¹. Cross-checks the independent expression for v⁻¹.
inline TensorElement antipode_equivalence(const QuasiHopfData& H, const LinearMapData& S2,
                                          const TensorElement& alpha2, const TensorElement& beta2,
                                          const ToleranceConfig& tol = {}) {
    QuasiHopfData H2 = H;
    H2.antipode = S2;
    H2.antipode_inv = invert_map(S2);
    H2.alpha = alpha2;
    H2.beta = beta2;
    CheckReport pre = check_antipode(H2, tol);
    if (!pre.overall) throw CandidateNotAntipode("antipode_equivalence: candidate triple fails the antipode axioms");

    // v = Σ S₂(X_ν) α₂ Y_ν β S(Z_ν)
    TensorElement T = apply_on_legs(S2, {1}, H.coassociator);
    T = apply_on_legs(H.antipode, {3}, T);
    TensorElement v = collapse_product(T, {alpha2, H.beta});

    // v⁻¹ = Σ S(X_ν) α Y_ν β₂ S₂(Z_ν)
    TensorElement Ti = apply_on_legs(H.antipode, {1}, H.coassociator);
    Ti = apply_on_legs(S2, {3}, Ti);
    TensorElement v_inv = collapse_product(Ti, {H.alpha, beta2});

    TensorElement one1 = unit_tensor(H.alg, 1);
    double scale = std::max({max_abs(v), max_abs(v_inv), 1.0});
    if (!tol.pass(max_abs_diff(mul1(v, v_inv), one1), scale) ||
        !tol.pass(max_abs_diff(mul1(v_inv, v), one1), scale))
        throw InconsistentMediator("antipode_equivalence: the two explicit expressions are not mutually inverse");

    double r = max_abs_diff(mul1(v, H.alpha), alpha2);
    r = std::max(r, max_abs_diff(mul1(beta2, v), H.beta));
    for (int i = 0; i < H.alg->dim; ++i) {
        TensorElement lhs = apply_map(S2, basis1(H, i));
        TensorElement rhs = mul(v, antipode_of(H, basis1(H, i)), v_inv);
        r = std::max(r, max_abs_diff(lhs, rhs));
    }
    if (!tol.pass(r, scale))
        throw InconsistentMediator("antipode_equivalence: mediator fails the defining identities (residual " +
                                   std::to_string(r) + ")");
    return v;
}

}  // namespace qhstar
