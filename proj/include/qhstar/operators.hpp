// The mediator w between the antipode S and its conjugate S̃ = †∘S⁻¹∘†.
//
// On a star quasi-Hopf algebra the twisted structure induced by Ω and the
// conjugated (tilde) structure share co-product and co-associator, so their
// antipode triples are related by a unique invertible w:
//
//     w S⁻¹(β)† = α_Ω,   β_Ω w = S⁻¹(α)†,   S(a) = w S̃(a) w⁻¹.
//
// Explicitly, over (Φ†)⁻¹ = Σ X⊗Y⊗Z,
//
//     w   = Σ S(X) α_Ω Y  S⁻¹(α)†  S̃(Z)
//     w⁻¹ = Σ S̃(X) S⁻¹(β)†  Y β_Ω  S(Z)
//
// and the Ω† counterpart w̄ uses α_{Ω†}, β_{Ω†} in place of α_Ω, β_Ω.
// c = w⁻¹w̄ is central. w is twist invariant.

#pragma once

#include "star.hpp"

namespace qhstar {

struct OperatorSet {
    TensorElement w, w_inv;
    TensorElement w_bar, w_bar_inv;
    TensorElement c, c_inv;
    TensorElement W, W_inv;  // S⁻¹(w)⊗S⁻¹(w) and its inverse
};

inline double centrality_residual(const QuasiHopfData& H, const TensorElement& z) {
    double r = 0.0;
    for (int i = 0; i < H.alg->dim; ++i) {
        TensorElement e = basis1(H, i);
        r = std::max(r, max_abs_diff(mul1(z, e), mul1(e, z)));
    }
    return r;
}

inline bool is_central(const QuasiHopfData& H, const TensorElement& z, const ToleranceConfig& tol = {}) {
    return tol.pass(centrality_residual(H, z), std::max(1.0, max_abs(z)));
}

namespace detail {

// Shared explicit construction, parameterized by the canonical twist variant.
inline std::pair<TensorElement, TensorElement> w_pair(const QuasiHopfData& H, const StarData& st,
                                                      const TwistData& omega_variant, const ToleranceConfig& tol) {
    LinearMapData Stl = conjugated_antipode(H, st);
    TensorElement aO = twisted_alpha(H, omega_variant);
    TensorElement bO = twisted_beta(H, omega_variant);
    TensorElement sa_dag = dag1(st, antipode_inv_of(H, H.alpha));  // S⁻¹(α)†
    TensorElement sb_dag = dag1(st, antipode_inv_of(H, H.beta));   // S⁻¹(β)†

    TensorElement T = dagger_all(st, H.coassociator_inv);  // (Φ†)⁻¹
    TensorElement Tw = apply_on_legs(Stl, {3}, apply_on_legs(H.antipode, {1}, T));
    TensorElement w = collapse_product(Tw, {aO, sa_dag});

    TensorElement Ti = apply_on_legs(H.antipode, {3}, apply_on_legs(Stl, {1}, T));
    TensorElement w_inv = collapse_product(Ti, {sb_dag, bO});

    TensorElement one1 = unit_tensor(H.alg, 1);
    double sc = std::max({max_abs(w), max_abs(w_inv), 1.0});
    double r = std::max(max_abs_diff(mul1(w, w_inv), one1), max_abs_diff(mul1(w_inv, w), one1));
    if (!tol.pass(r, sc))
        throw FormulaMismatch("w-operator: explicit expressions for w and w⁻¹ are not mutually inverse (residual " +
                              std::to_string(r) + ")");

    r = std::max(max_abs_diff(mul1(w, sb_dag), aO), max_abs_diff(mul1(bO, w), sa_dag));
    if (!tol.pass(r, std::max(sc, std::max(max_abs(aO), max_abs(bO)))))
        throw FormulaMismatch("w-operator: canonical-element identities fail (residual " + std::to_string(r) + ")");

    double ri = 0.0;
    for (int i = 0; i < H.alg->dim; ++i) {
        TensorElement lhs = antipode_of(H, basis1(H, i));
        TensorElement rhs = mul(w, apply_map(Stl, basis1(H, i)), w_inv);
        ri = std::max(ri, max_abs_diff(lhs, rhs));
    }
    if (!tol.pass(ri, sc))
        throw FormulaMismatch("w-operator: antipode mediation S(a) = w S̃(a) w⁻¹ fails (residual " +
                              std::to_string(ri) + ")");
    return {w, w_inv};
}

}  // namespace detail

/// The w-operator (with Ω). Verifies the defining identities and the
/// alternative expression before returning.
inline TensorElement compute_w(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    auto [w, w_inv] = detail::w_pair(H, st, st.omega, tol);

    // alternative form over Φ: w = Σ S(X) α Y  S⁻¹(α_{Ω†})†  S̃(Z)
    TwistData omd = dagger_twist(st, st.omega);
    TensorElement a_omd = twisted_alpha(H, omd);
    TensorElement mid = dag1(st, antipode_inv_of(H, a_omd));
    LinearMapData Stl = conjugated_antipode(H, st);
    TensorElement Ta = apply_on_legs(Stl, {3}, apply_on_legs(H.antipode, {1}, H.coassociator));
    TensorElement w_alt = collapse_product(Ta, {H.alpha, mid});
    if (!tol.pass(max_abs_diff(w, w_alt), std::max(max_abs(w), max_abs(w_alt))))
        throw FormulaMismatch("compute_w: alternative expression disagrees with the canonical one");
    return w;
}

/// The Ω† counterpart.
inline TensorElement compute_w_bar(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    return detail::w_pair(H, st, dagger_twist(st, st.omega), tol).first;
}

inline OperatorSet compute_operator_set(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    OperatorSet ops;
    auto wp = detail::w_pair(H, st, st.omega, tol);
    ops.w = wp.first;
    ops.w_inv = wp.second;
    auto wb = detail::w_pair(H, st, dagger_twist(st, st.omega), tol);
    ops.w_bar = wb.first;
    ops.w_bar_inv = wb.second;

    ops.c = mul1(ops.w_inv, ops.w_bar);
    ops.c_inv = mul1(ops.w, ops.w_bar_inv);
    double r = std::max(max_abs_diff(ops.c, mul1(ops.w_bar, ops.w_inv)),
                        max_abs_diff(ops.c_inv, mul1(ops.w_bar_inv, ops.w)));
    if (!tol.pass(r, std::max(max_abs(ops.c), 1.0)))
        throw FormulaMismatch("compute_operator_set: the two product orders for c disagree");

    TensorElement siw = antipode_inv_of(H, ops.w);
    TensorElement siw_inv = antipode_inv_of(H, ops.w_inv);
    ops.W = tensor_product(siw, siw);
    ops.W_inv = tensor_product(siw_inv, siw_inv);
    return ops;
}

/// Every ledger identity tying w, w̄, c, the antipodes and the conjugation.
inline CheckReport verify_operator_ledger(const QuasiHopfData& H, const StarData& st, const OperatorSet& ops,
                                          const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    LinearMapData Stl = conjugated_antipode(H, st);
    LinearMapData Stl_inv = conjugated_antipode_inv(H, st);
    TwistData omd = dagger_twist(st, st.omega);
    TensorElement aO = twisted_alpha(H, st.omega), bO = twisted_beta(H, st.omega);
    TensorElement aOd = twisted_alpha(H, omd), bOd = twisted_beta(H, omd);
    TensorElement s_alpha_inv = antipode_inv_of(H, H.alpha);
    TensorElement s_beta_inv = antipode_inv_of(H, H.beta);

    auto max_over_basis = [&](auto&& f) {
        double r = 0.0;
        for (int i = 0; i < n; ++i) r = std::max(r, f(basis1(H, i)));
        return r;
    };

    rep.add("tilde-of-antipode-inv",
            max_over_basis([&](const TensorElement& a) {
                return max_abs_diff(apply_map(Stl, antipode_inv_of(H, a)), mul(ops.w_inv, a, ops.w));
            }),
            tol.threshold(std::max(1.0, max_abs(ops.w))));
    rep.add("antipode-of-tilde-inv",
            max_over_basis([&](const TensorElement& a) {
                return max_abs_diff(antipode_of(H, apply_map(Stl_inv, a)), mul(ops.w, a, ops.w_inv));
            }),
            tol.threshold(std::max(1.0, max_abs(ops.w))));
    {
        double r = std::max(max_abs_diff(antipode_of(H, apply_map(Stl_inv, ops.w)), ops.w),
                            max_abs_diff(apply_map(Stl, antipode_inv_of(H, ops.w)), ops.w));
        rep.add("w-roundtrip-fixed", r, tol.threshold(std::max(1.0, max_abs(ops.w))));
    }
    {
        double r = std::max(max_abs_diff(dag1(st, antipode_inv_of(H, ops.w)), antipode_of(H, dag1(st, ops.w))),
                            max_abs_diff(dag1(st, antipode_inv_of(H, ops.w_inv)), antipode_of(H, dag1(st, ops.w_inv))));
        rep.add("antipode-inv-conjugate-of-w", r, tol.threshold(std::max(1.0, max_abs(ops.w))));
    }
    rep.add("antipode-inv-via-w",
            max_over_basis([&](const TensorElement& a) {
                TensorElement lhs = antipode_inv_of(H, a);
                TensorElement rhs = mul(antipode_inv_of(H, ops.w), apply_map(Stl_inv, a), antipode_inv_of(H, ops.w_inv));
                return max_abs_diff(lhs, rhs);
            }),
            tol.threshold(std::max(1.0, max_abs(ops.w))));
    rep.add("antipode-inv-via-w-tilde",
            max_over_basis([&](const TensorElement& a) {
                TensorElement lhs = antipode_inv_of(H, a);
                TensorElement rhs = mul(apply_map(Stl_inv, ops.w), apply_map(Stl_inv, a), apply_map(Stl_inv, ops.w_inv));
                return max_abs_diff(lhs, rhs);
            }),
            tol.threshold(std::max(1.0, max_abs(ops.w))));
    rep.add_cmp("central-antipode-agreement", antipode_inv_of(H, ops.c), apply_map(Stl_inv, ops.c), tol);
    rep.add_cmp("central-antipode-conjugate", dag1(st, antipode_inv_of(H, ops.c)), antipode_of(H, dag1(st, ops.c)), tol);

    rep.add_cmp("alpha-omega-conjugate", dag1(st, aO), mul1(s_beta_inv, antipode_inv_of(H, ops.w_bar)), tol);
    rep.add_cmp("beta-omega-conjugate", dag1(st, bO), mul1(antipode_inv_of(H, ops.w_bar_inv), s_alpha_inv), tol);
    rep.add_cmp("alpha-omega-dagger-conjugate", dag1(st, aOd), mul1(s_beta_inv, antipode_inv_of(H, ops.w)), tol);
    rep.add_cmp("beta-omega-dagger-conjugate", dag1(st, bOd), mul1(antipode_inv_of(H, ops.w_inv), s_alpha_inv), tol);

    rep.add_cmp("w-dagger", dag1(st, ops.w), antipode_inv_of(H, ops.w_bar), tol);
    rep.add_cmp("wbar-dagger", dag1(st, ops.w_bar), antipode_inv_of(H, ops.w), tol);
    rep.add_cmp("wbar-from-w-dagger", ops.w_bar, antipode_of(H, dag1(st, ops.w)), tol);

    rep.add_cmp("c-consistency", ops.c, mul1(ops.w_bar, ops.w_inv), tol);
    rep.add("c-central", centrality_residual(H, ops.c), tol.threshold(std::max(1.0, max_abs(ops.c))));
    rep.add_cmp("c-dagger", dag1(st, ops.c), antipode_inv_of(H, ops.c_inv), tol);
    rep.add_cmp("c-inverse", mul1(ops.c, ops.c_inv), unit_tensor(H.alg, 1), tol);

    // explicit conjugate expansions over Φ⁻¹ (legs read in reverse order)
    {
        TensorElement Trev = permute_legs(H.coassociator_inv, {3, 2, 1});
        TensorElement T1 = apply_on_legs(Stl_inv, {3}, apply_on_legs(H.antipode_inv, {1}, Trev));
        rep.add_cmp("w-dagger-explicit", dag1(st, ops.w),
                    collapse_product(T1, {antipode_inv_of(H, H.alpha), dag1(st, aO)}), tol);
        TensorElement T2 = apply_on_legs(H.antipode_inv, {3}, apply_on_legs(Stl_inv, {1}, Trev));
        rep.add_cmp("winv-dagger-explicit", dag1(st, ops.w_inv),
                    collapse_product(T2, {dag1(st, bO), antipode_inv_of(H, H.beta)}), tol);
    }
    {
        LinearMapData s_stinv = compose_maps(H.antipode, Stl_inv);
        TensorElement T = H.coassociator_inv;
        TensorElement T1 = apply_on_legs(H.antipode, {2}, apply_on_legs(s_stinv, {1}, T));
        rep.add_cmp("wbar-explicit", ops.w_bar,
                    collapse_product(T1, {antipode_of(H, dag1(st, aO)), H.alpha}), tol);
        TensorElement T2 = apply_on_legs(s_stinv, {3}, apply_on_legs(H.antipode, {2}, T));
        rep.add_cmp("wbarinv-explicit", ops.w_bar_inv,
                    collapse_product(T2, {H.beta, antipode_of(H, dag1(st, bO))}), tol);
        // the same expansions with Ω† give back w and w⁻¹
        rep.add_cmp("w-explicit-via-dagger", ops.w,
                    collapse_product(T1, {antipode_of(H, dag1(st, aOd)), H.alpha}), tol);
        rep.add_cmp("winv-explicit-via-dagger", ops.w_inv,
                    collapse_product(T2, {H.beta, antipode_of(H, dag1(st, bOd))}), tol);
    }

    rep.add_bool("star-compat-iff-w-central",
                 is_star_compatible_antipode(H, st, tol) == is_central(H, ops.w, tol));
    return rep;
}

/// Conjugates of the canonicals induced by an arbitrary twist F:
///   Δ_F(a)† = Δ_G(a†),  (Φ_F†)⁻¹ = Φ_G,  α_F† = S⁻¹(β_G) S⁻¹(w),
///   β_F† = S⁻¹(w⁻¹) S⁻¹(α_G)   with G = (F†)⁻¹Ω.
inline CheckReport conjugate_twisted_canonicals(const QuasiHopfData& H, const StarData& st, const TwistData& F,
                                                const OperatorSet& ops, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    TwistData G{tensor_mul(dagger_all(st, F.inverse), st.omega.element),
                tensor_mul(st.omega.inverse, dagger_all(st, F.element))};
    QuasiHopfData HF = twist_structure(H, F);
    QuasiHopfData HG = twist_structure(H, G);

    double r = 0.0, sc = 1.0;
    for (int i = 0; i < n; ++i) {
        TensorElement lhs = dagger_all(st, coproduct_of(HF, basis1(H, i)));
        TensorElement rhs = coproduct_of(HG, dag1(st, basis1(H, i)));
        r = std::max(r, max_abs_diff(lhs, rhs));
        sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
    }
    rep.add("twisted-coproduct-conjugate", r, tol.threshold(sc));
    rep.add_cmp("twisted-coassociator-conjugate", dagger_all(st, HF.coassociator_inv), HG.coassociator, tol);
    rep.add_cmp("twisted-coassociator-conjugate-inv", dagger_all(st, HF.coassociator), HG.coassociator_inv, tol);
    rep.add_cmp("twisted-alpha-conjugate", dag1(st, HF.alpha),
                mul1(antipode_inv_of(H, HG.beta), antipode_inv_of(H, ops.w)), tol);
    rep.add_cmp("twisted-beta-conjugate", dag1(st, HF.beta),
                mul1(antipode_inv_of(H, ops.w_inv), antipode_inv_of(H, HG.alpha)), tol);
    return rep;
}

}  // namespace qhstar
