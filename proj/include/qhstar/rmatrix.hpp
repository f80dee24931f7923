// Quasi-triangular structures and their star classification.
//
// An R-matrix is an invertible R ∈ H⊗H with
//     Δᵀ(a) R = R Δ(a)
//     (Δ⊗1)R = Φ₍₂₃₁₎⁻¹ R₁₃ Φ₍₁₃₂₎ R₂₃ Φ₍₁₂₃₎⁻¹
//     (1⊗Δ)R = Φ₍₃₁₂₎ R₁₃ Φ₍₂₁₃₎⁻¹ R₁₂ Φ₍₁₂₃₎
// from which (ε⊗1)R = (1⊗ε)R = 1 follows, so R qualifies as a twist.
//
// On a star structure two classes arise, distinguished by
//     (R†)⁻¹ = Ωᵀ R Ω⁻¹          (type I)
//     (R†)⁻¹ = Ωᵀ (Rᵀ)⁻¹ Ω⁻¹     (type II)
// which degenerate at Ω = 1⊗1 to the antireal (R† = R⁻¹) and real (R† = Rᵀ)
// cases. In the triangular case RᵀR = 1⊗1 the two coincide.

#pragma once

#include "drinfeld.hpp"

namespace qhstar {

struct RMatrixData {
    TensorElement r;          // order 2
    TensorElement r_inverse;  // cached
};

enum class QtKind { TypeI, TypeII, Both, Neither };

struct QtClassification {
    QtKind kind = QtKind::Neither;
    double residual_I = 0.0;
    double residual_II = 0.0;
};

inline const char* to_string(QtKind k) {
    switch (k) {
        case QtKind::TypeI: return "TypeI";
        case QtKind::TypeII: return "TypeII";
        case QtKind::Both: return "Both";
        case QtKind::Neither: return "Neither";
    }
    return "Neither";
}

inline RMatrixData make_rmatrix(const QuasiHopfData& H, TensorElement element, const ToleranceConfig& tol = {}) {
    TwistData t = make_twist(H, std::move(element), tol);
    return RMatrixData{std::move(t.element), std::move(t.inverse)};
}

inline TwistData as_twist(const RMatrixData& R) { return TwistData{R.r, R.r_inverse}; }

/// Intertwining, both co-product splitting relations, the co-unit property,
/// and the derived quasi-Yang-Baxter consistency obtained by composing the
/// splitting relations with the intertwiner.
inline CheckReport check_quasi_triangular(const QuasiHopfData& H, const RMatrixData& R,
                                          const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    const auto& Phi = H.coassociator;
    const auto& PhiInv = H.coassociator_inv;

    {
        TensorElement one1 = unit_tensor(H.alg, 1);
        rep.add_cmp("r-counit-left", apply_on_legs(H.counit, {1}, R.r), one1, tol);
        rep.add_cmp("r-counit-right", apply_on_legs(H.counit, {2}, R.r), one1, tol);
        rep.add_cmp("r-invertible", tensor_mul(R.r, R.r_inverse), unit_tensor(H.alg, 2), tol);
    }
    for (int i = 0; i < n; ++i) {
        TensorElement d = coproduct_of(H, basis1(H, i));
        TensorElement lhs = tensor_mul(swap_legs(d), R.r);
        TensorElement rhs = tensor_mul(R.r, d);
        double sc = std::max(max_abs(lhs), max_abs(rhs));
        rep.add("intertwining[" + H.alg->basis_labels[static_cast<std::size_t>(i)] + "]", max_abs_diff(lhs, rhs),
                tol.threshold(sc));
    }

    TensorElement r13 = embed_legs(R.r, {1, 3}, 3);
    TensorElement r23 = embed_legs(R.r, {2, 3}, 3);
    TensorElement r12 = embed_legs(R.r, {1, 2}, 3);
    {
        TensorElement lhs = apply_on_legs(H.coproduct, {1}, R.r);
        TensorElement rhs = mul(mul(permute_legs(PhiInv, {2, 3, 1}), r13, permute_legs(Phi, {1, 3, 2})),
                                r23, PhiInv);
        rep.add_cmp("hexagon-left", lhs, rhs, tol);
    }
    {
        TensorElement lhs = apply_on_legs(H.coproduct, {2}, R.r);
        TensorElement rhs = mul(mul(permute_legs(Phi, {3, 1, 2}), r13, permute_legs(PhiInv, {2, 1, 3})),
                                r12, Phi);
        rep.add_cmp("hexagon-right", lhs, rhs, tol);
    }
    {
        // R₁₂ Φ₍₂₃₁₎⁻¹ R₁₃ Φ₍₁₃₂₎ R₂₃ Φ₍₁₂₃₎⁻¹ = Φ₍₃₂₁₎⁻¹ R₂₃ Φ₍₃₁₂₎ R₁₃ Φ₍₂₁₃₎⁻¹ R₁₂
        TensorElement lhs = mul(mul(r12, permute_legs(PhiInv, {2, 3, 1}), r13),
                                mul(permute_legs(Phi, {1, 3, 2}), r23, PhiInv));
        TensorElement rhs = mul(mul(permute_legs(PhiInv, {3, 2, 1}), r23, permute_legs(Phi, {3, 1, 2})),
                                mul(r13, permute_legs(PhiInv, {2, 1, 3}), r12));
        rep.add_cmp("quasi-yang-baxter", lhs, rhs, tol);
    }
    return rep;
}

/// The implementer of S², built from the splitting of Φ:
///   u = Σ S(Y β S(Z)) α_R X = Σ S(Z̄) α_R Ȳ S⁻¹(β) S⁻¹(X̄)
/// with α_R, β_R the canonicals twisted by R. Both displayed forms of u and of
/// u⁻¹ must agree; S²(a) = u a u⁻¹ and u S⁻¹(α) = α_R, β_R u = S⁻¹(β).
inline std::pair<TensorElement, TensorElement> compute_u_pair(const QuasiHopfData& H, const RMatrixData& R,
                                                              const ToleranceConfig& tol = {}) {
    const int n = H.alg->dim;
    TwistData Rt = as_twist(R);
    TensorElement aR = twisted_alpha(H, Rt);
    TensorElement bR = twisted_beta(H, Rt);

    // u, first form: fold legs (Y,Z) of Φ through S(e_y β S(e_z))
    TensorElement u1;
    {
        std::vector<TensorElement> q;
        q.reserve(static_cast<std::size_t>(n) * n);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                q.push_back(antipode_of(H, mul1(mul1(basis1(H, y), H.beta), antipode_of(H, basis1(H, z)))));
        std::vector<TensorElement> folded(static_cast<std::size_t>(n), zero_tensor(H.alg, 1));
        int dg[3];
        const std::int64_t total = static_cast<std::int64_t>(H.coassociator.coeffs.size());
        for (std::int64_t idx = 0; idx < total; ++idx) {
            cplx c = H.coassociator.coeffs[static_cast<std::size_t>(idx)];
            if (c == cplx{0, 0}) continue;
            detail::decode_digits(idx, n, 3, dg);
            const auto& img = q[static_cast<std::size_t>(dg[1]) * n + dg[2]];
            auto& dst = folded[static_cast<std::size_t>(dg[0])];
            for (std::size_t i = 0; i < img.coeffs.size(); ++i) dst.coeffs[i] += c * img.coeffs[i];
        }
        u1 = zero_tensor(H.alg, 1);
        for (int x = 0; x < n; ++x) u1 = add(u1, mul(folded[static_cast<std::size_t>(x)], aR, basis1(H, x)));
    }
    // u, second form: Σ S(Z̄) α_R Ȳ S⁻¹(β) S⁻¹(X̄)
    {
        TensorElement T = permute_legs(H.coassociator_inv, {3, 2, 1});
        T = apply_on_legs(H.antipode, {1}, T);
        T = apply_on_legs(H.antipode_inv, {3}, T);
        TensorElement u2 = collapse_product(T, {aR, antipode_inv_of(H, H.beta)});
        if (!tol.pass(max_abs_diff(u1, u2), std::max(max_abs(u1), max_abs(u2))))
            throw VariantMismatch("compute_u: the two displayed forms of u disagree");
    }
    // u⁻¹, first form: Σ Z β_R S(S(X) α Y)
    TensorElement v1;
    {
        std::vector<TensorElement> p;
        p.reserve(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                p.push_back(antipode_of(H, mul1(mul1(antipode_of(H, basis1(H, x)), H.alpha), basis1(H, y))));
        std::vector<TensorElement> folded(static_cast<std::size_t>(n), zero_tensor(H.alg, 1));
        int dg[3];
        const std::int64_t total = static_cast<std::int64_t>(H.coassociator.coeffs.size());
        for (std::int64_t idx = 0; idx < total; ++idx) {
            cplx c = H.coassociator.coeffs[static_cast<std::size_t>(idx)];
            if (c == cplx{0, 0}) continue;
            detail::decode_digits(idx, n, 3, dg);
            const auto& img = p[static_cast<std::size_t>(dg[0]) * n + dg[1]];
            auto& dst = folded[static_cast<std::size_t>(dg[2])];
            for (std::size_t i = 0; i < img.coeffs.size(); ++i) dst.coeffs[i] += c * img.coeffs[i];
        }
        v1 = zero_tensor(H.alg, 1);
        for (int z = 0; z < n; ++z) v1 = add(v1, mul(basis1(H, z), bR, folded[static_cast<std::size_t>(z)]));
    }
    // u⁻¹, second form: Σ S⁻¹(Z̄) S⁻¹(α) Ȳ β_R S(X̄)
    {
        TensorElement T = permute_legs(H.coassociator_inv, {3, 2, 1});
        T = apply_on_legs(H.antipode_inv, {1}, T);
        T = apply_on_legs(H.antipode, {3}, T);
        TensorElement v2 = collapse_product(T, {antipode_inv_of(H, H.alpha), bR});
        if (!tol.pass(max_abs_diff(v1, v2), std::max(max_abs(v1), max_abs(v2))))
            throw VariantMismatch("compute_u: the two displayed forms of u⁻¹ disagree");
    }

    TensorElement one1 = unit_tensor(H.alg, 1);
    double sc = std::max({max_abs(u1), max_abs(v1), 1.0});
    double r = std::max(max_abs_diff(mul1(u1, v1), one1), max_abs_diff(mul1(v1, u1), one1));
    if (!tol.pass(r, sc)) throw VariantMismatch("compute_u: u and u⁻¹ fail to multiply to 1");

    r = std::max(max_abs_diff(mul1(u1, antipode_inv_of(H, H.alpha)), aR),
                 max_abs_diff(mul1(bR, u1), antipode_inv_of(H, H.beta)));
    if (!tol.pass(r, sc)) throw VariantMismatch("compute_u: canonical-element identities fail");

    double ri = 0.0;
    for (int i = 0; i < n; ++i) {
        TensorElement lhs = antipode_of(H, antipode_of(H, basis1(H, i)));
        ri = std::max(ri, max_abs_diff(lhs, mul(u1, basis1(H, i), v1)));
    }
    if (!tol.pass(ri, sc)) throw VariantMismatch("compute_u: S²(a) = u a u⁻¹ fails");
    return {u1, v1};
}

inline TensorElement compute_u(const QuasiHopfData& H, const RMatrixData& R, const ToleranceConfig& tol = {}) {
    return compute_u_pair(H, R, tol).first;
}

/// z_u = u S(u) = S(u) u, central.
inline TensorElement central_zu(const QuasiHopfData& H, const TensorElement& u, const ToleranceConfig& tol = {}) {
    TensorElement z = mul1(u, antipode_of(H, u));
    TensorElement z2 = mul1(antipode_of(H, u), u);
    if (!tol.pass(max_abs_diff(z, z2), std::max(max_abs(z), 1.0)))
        throw FormulaMismatch("central_zu: the two product orders disagree");
    return z;
}

/// R̄ = (Ωᵀ)⁻¹ (R†)⁻¹ Ω, again an R-matrix for the same structure.
inline RMatrixData r_bar(const QuasiHopfData& H, const StarData& st, const RMatrixData& R,
                         const ToleranceConfig& tol = {}) {
    TensorElement el = mul(swap_legs(st.omega.inverse), dagger_all(st, R.r_inverse), st.omega.element);
    TensorElement inv = mul(st.omega.inverse, dagger_all(st, R.r), swap_legs(st.omega.element));
    TensorElement one2 = unit_tensor(H.alg, 2);
    double r = max_abs_diff(tensor_mul(el, inv), one2);
    if (!tol.pass(r, std::max({max_abs(el), max_abs(inv), 1.0})))
        throw FormulaMismatch("r_bar: assembled inverse fails");
    return RMatrixData{std::move(el), std::move(inv)};
}

/// Classification by the two conjugation laws. A kind is assigned only when the
/// competing residual is at least 10³ larger; coincidence means triangular.
inline QtClassification classify_star_qt(const QuasiHopfData& H, const StarData& st, const RMatrixData& R,
                                         const ToleranceConfig& tol = {}) {
    TensorElement target = dagger_all(st, R.r_inverse);  // (R†)⁻¹
    TensorElement rhs_I = mul(swap_legs(st.omega.element), R.r, st.omega.inverse);
    TensorElement rhs_II = mul(swap_legs(st.omega.element), swap_legs(R.r_inverse), st.omega.inverse);
    QtClassification out;
    out.residual_I = max_abs_diff(target, rhs_I);
    out.residual_II = max_abs_diff(target, rhs_II);
    double sc = std::max({max_abs(target), max_abs(rhs_I), max_abs(rhs_II), 1.0});
    bool pass_I = tol.pass(out.residual_I, sc);
    bool pass_II = tol.pass(out.residual_II, sc);
    constexpr double kMargin = 1e3;
    constexpr double kFloor = 1e-300;
    if (pass_I && pass_II) {
        TensorElement prod = tensor_mul(swap_legs(R.r), R.r);
        out.kind = tol.pass(max_abs_diff(prod, unit_tensor(H.alg, 2)), std::max(max_abs(prod), 1.0))
                       ? QtKind::Both
                       : QtKind::Neither;
    } else if (pass_I && out.residual_II >= kMargin * std::max(out.residual_I, kFloor)) {
        out.kind = QtKind::TypeI;
    } else if (pass_II && out.residual_I >= kMargin * std::max(out.residual_II, kFloor)) {
        out.kind = QtKind::TypeII;
    } else {
        out.kind = QtKind::Neither;
    }
    return out;
}

/// Identity ledger for the star/quasi-triangular interplay: the conjugates of
/// u and z_u, the mediator for the conjugated antipode, the opposite
/// structure, and the canonical-twist restrictions.
inline CheckReport verify_qt_star_ledger(const QuasiHopfData& H, const StarData& st, const RMatrixData& R,
                                         const OperatorSet& ops, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    QtClassification cls = classify_star_qt(H, st, R, tol);
    rep.add_bool("classified", cls.kind == QtKind::TypeI || cls.kind == QtKind::TypeII || cls.kind == QtKind::Both);
    // In the triangular case both branches apply; default to the type I forms.
    bool type_one = (cls.kind == QtKind::TypeI || cls.kind == QtKind::Both);

    auto [u, u_inv] = compute_u_pair(H, R, tol);
    RMatrixData Rb = r_bar(H, st, R, tol);
    auto [ub, ub_inv] = compute_u_pair(H, Rb, tol);
    TwistData Rt = as_twist(R);
    TensorElement aR = twisted_alpha(H, Rt), bR = twisted_beta(H, Rt);
    TwistData Rbt = as_twist(Rb);
    TensorElement aRb = twisted_alpha(H, Rbt), bRb = twisted_beta(H, Rbt);
    LinearMapData Stl = conjugated_antipode(H, st);
    LinearMapData Stl_inv = conjugated_antipode_inv(H, st);

    // Σ S̃⁻¹(Ω₁) β_R† Ω₂ = S⁻¹(w⁻¹) S⁻¹(α_R̄)
    rep.add_cmp("omega-sandwich-beta-conjugate",
                collapse_product(apply_on_legs(Stl_inv, {1}, st.omega.element), {dag1(st, bR)}),
                mul1(antipode_inv_of(H, ops.w_inv), antipode_inv_of(H, aRb)), tol);
    // Σ Ω̄₁ α_R† S̃⁻¹(Ω̄₂) = S⁻¹(β_R̄) S⁻¹(w)
    rep.add_cmp("omega-sandwich-alpha-conjugate",
                collapse_product(apply_on_legs(Stl_inv, {2}, st.omega.inverse), {dag1(st, aR)}),
                mul1(antipode_inv_of(H, bRb), antipode_inv_of(H, ops.w)), tol);

    TensorElement u_dag = dag1(st, u);
    TensorElement wsw = mul1(ops.w_inv, antipode_of(H, ops.w));
    rep.add_cmp("u-conjugate", u_dag, mul1(wsw, antipode_inv_of(H, ub_inv)), tol);

    TensorElement zu = central_zu(H, u, tol);
    TensorElement zu_inv = invert(zu, tol);
    rep.add("zu-central", centrality_residual(H, zu), tol.threshold(std::max(1.0, max_abs(zu))));
    if (type_one) {
        rep.add_cmp("ubar-typed", ub, u, tol);
        rep.add_cmp("u-conjugate-typed", u_dag, mul1(wsw, antipode_of(H, u_inv)), tol);
        rep.add_cmp("u-conjugate-zu-form", u_dag, mul1(wsw, mul1(zu_inv, u)), tol);
        rep.add_cmp("zu-conjugate", dag1(st, zu), zu_inv, tol);
    } else {
        rep.add_cmp("ubar-typed", ub, antipode_of(H, u_inv), tol);
        rep.add_cmp("u-conjugate-typed", u_dag, mul1(wsw, u), tol);
        rep.add_cmp("u-conjugate-zu-form", u_dag, mul1(wsw, mul1(zu, antipode_of(H, u_inv))), tol);
        rep.add_cmp("zu-conjugate", dag1(st, zu), zu, tol);
    }
    rep.add_cmp("antipode-of-u-inverse", antipode_of(H, u_inv), antipode_inv_of(H, u_inv), tol);

    // v = w⁻¹ S(w) u mediates the conjugated antipode: S̃(a) = v S̃⁻¹(a) v⁻¹
    {
        TensorElement v = mul1(wsw, u);
        TensorElement v_inv = mul1(u_inv, mul1(antipode_of(H, ops.w_inv), ops.w));
        double r = 0.0, sc = 1.0;
        for (int i = 0; i < n; ++i) {
            TensorElement lhs = apply_map(Stl, basis1(H, i));
            TensorElement rhs = mul(v, apply_map(Stl_inv, basis1(H, i)), v_inv);
            r = std::max(r, max_abs_diff(lhs, rhs));
            sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
        }
        rep.add("tilde-mediator", r, tol.threshold(sc));

        TensorElement ud_inv = dag1(st, u_inv);
        r = 0.0;
        for (int i = 0; i < n; ++i) {
            TensorElement lhs = apply_map(Stl, basis1(H, i));
            TensorElement rhs = mul(u_dag, apply_map(Stl_inv, basis1(H, i)), ud_inv);
            r = std::max(r, max_abs_diff(lhs, rhs));
        }
        rep.add("tilde-mediator-conjugate", r, tol.threshold(sc));
    }

    // opposite structure: same type with R-matrix Rᵀ and canonical twist Ωᵀ
    {
        QuasiHopfData Hop = opposite(H);
        StarData stop = opposite_star(H, st);
        RMatrixData Rop{swap_legs(R.r), swap_legs(R.r_inverse)};
        QtClassification cop = classify_star_qt(Hop, stop, Rop, tol);
        rep.add_bool("opposite-type-preserved", cop.kind == cls.kind);
    }

    // Ω⁻¹Ω† is a compatible twist that also fixes R under C ↦ Cᵀ R C⁻¹
    {
        TwistData C{tensor_mul(st.omega.inverse, dagger_all(st, st.omega.element)),
                    tensor_mul(dagger_all(st, st.omega.inverse), st.omega.element)};
        auto [ok, crep] = is_compatible_twist(H, C, tol);
        rep.add_bool("canonical-ratio-compatible", ok);
        rep.add_cmp("canonical-ratio-qt-compatible", mul(swap_legs(C.element), R.r, C.inverse), R.r, tol);
        // hence Ω† classifies identically
        QtClassification cd = classify_star_qt(H, StarData{st.dagger, dagger_twist(st, st.omega)}, R, tol);
        rep.add_bool("conjugate-canonical-same-type", cd.kind == cls.kind);
    }
    return rep;
}

/// Twists the full triple: structure, star data, and R_F = Fᵀ R F⁻¹.
inline std::tuple<QuasiHopfData, StarData, RMatrixData> twist_qt_star(const QuasiHopfData& H, const StarData& st,
                                                                      const RMatrixData& R, const TwistData& F) {
    QuasiHopfData HF = twist_structure(H, F);
    StarData stF = star_twist(H, st, F);
    RMatrixData RF{mul(swap_legs(F.element), R.r, F.inverse), mul(F.element, R.r_inverse, swap_legs(F.inverse))};
    return {std::move(HF), std::move(stF), std::move(RF)};
}

}  // namespace qhstar
