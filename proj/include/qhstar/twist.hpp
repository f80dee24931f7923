// Twists (gauge transformations) and the twisted structure.
//
// A twist is an invertible F ∈ H⊗H with (ε⊗1)F = (1⊗ε)F = 1. Twisting induces
//   Δ_F(a) = F Δ(a) F⁻¹
//   Φ_F    = (F⊗1) (Δ⊗1)F Φ (1⊗Δ)F⁻¹ (1⊗F⁻¹)
//   α_F    = Σ S(f̄_i) α f̄^i,   β_F = Σ f_i β S(f^i)
// with ε and S unchanged.

#pragma once

#include "qha.hpp"

namespace qhstar {

struct NotATwist : std::runtime_error {
    explicit NotATwist(const std::string& what) : std::runtime_error(what) {}
};

struct TwistData {
    TensorElement element;  // order 2
    TensorElement inverse;  // cached
};

inline TwistData identity_twist(const AlgebraPtr& alg) {
    TensorElement one2 = unit_tensor(alg, 2);
    return TwistData{one2, one2};
}

inline CheckReport twist_counit_report(const QuasiHopfData& H, const TensorElement& f, const ToleranceConfig& tol) {
    CheckReport rep;
    TensorElement one1 = unit_tensor(H.alg, 1);
    rep.add_cmp("twist-counit-left", apply_on_legs(H.counit, {1}, f), one1, tol);
    rep.add_cmp("twist-counit-right", apply_on_legs(H.counit, {2}, f), one1, tol);
    return rep;
}

/// Builds a twist from its element, computing and validating the inverse.
inline TwistData make_twist(const QuasiHopfData& H, TensorElement element, const ToleranceConfig& tol = {}) {
    if (element.order != 2) throw std::invalid_argument("make_twist: twist must have order 2");
    CheckReport counit = twist_counit_report(H, element, tol);
    if (!counit.overall)
        throw NotATwist("make_twist: co-unit property fails (residual " + std::to_string(counit.max_residual()) + ")");
    TensorElement inv = invert(element, tol);  // throws SingularElement if not invertible
    return TwistData{std::move(element), std::move(inv)};
}

inline std::pair<bool, CheckReport> is_twist(const QuasiHopfData& H, const TensorElement& f,
                                             const ToleranceConfig& tol = {}) {
    CheckReport rep = twist_counit_report(H, f, tol);
    try {
        TensorElement inv = invert(f, tol);
        rep.add_cmp("twist-invertible", tensor_mul(f, inv), unit_tensor(H.alg, 2), tol);
    } catch (const SingularElement&) {
        rep.add_bool("twist-invertible", false);
    } catch (const RightInverseMismatch&) {
        rep.add_bool("twist-invertible", false);
    }
    return {rep.overall, rep};
}

inline TensorElement twisted_alpha(const QuasiHopfData& H, const TwistData& F) {
    return collapse_product(apply_on_legs(H.antipode, {1}, F.inverse), {H.alpha});
}

inline TensorElement twisted_beta(const QuasiHopfData& H, const TwistData& F) {
    return collapse_product(apply_on_legs(H.antipode, {2}, F.element), {H.beta});
}

inline LinearMapData twisted_coproduct_map(const QuasiHopfData& H, const TwistData& F) {
    const int n = H.alg->dim;
    LinearMapData D{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n), false};
    for (int j = 0; j < n; ++j) {
        TensorElement col = mul(F.element, coproduct_of(H, basis1(H, j)), F.inverse);
        for (int r = 0; r < n * n; ++r) D.at(r, j) = col.coeffs[static_cast<std::size_t>(r)];
    }
    return D;
}

inline TensorElement twisted_coassociator(const QuasiHopfData& H, const TwistData& F) {
    TensorElement t = embed_legs(F.element, {1, 2}, 3);
    t = tensor_mul(t, apply_on_legs(H.coproduct, {1}, F.element));
    t = tensor_mul(t, H.coassociator);
    t = tensor_mul(t, apply_on_legs(H.coproduct, {2}, F.inverse));
    return tensor_mul(t, embed_legs(F.inverse, {2, 3}, 3));
}

/// The full structure induced by a twist; ε and S are unchanged.
inline QuasiHopfData twist_structure(const QuasiHopfData& H, const TwistData& F) {
    QuasiHopfData out;
    out.alg = H.alg;
    out.counit = H.counit;
    out.antipode = H.antipode;
    out.antipode_inv = H.antipode_inv;
    out.coproduct = twisted_coproduct_map(H, F);
    out.coassociator = twisted_coassociator(H, F);
    // inverse assembled from the factor inverses in reverse order
    {
        TensorElement t = embed_legs(F.element, {2, 3}, 3);
        t = tensor_mul(t, apply_on_legs(H.coproduct, {2}, F.element));
        t = tensor_mul(t, H.coassociator_inv);
        t = tensor_mul(t, apply_on_legs(H.coproduct, {1}, F.inverse));
        out.coassociator_inv = tensor_mul(t, embed_legs(F.inverse, {1, 2}, 3));
    }
    out.alpha = twisted_alpha(H, F);
    out.beta = twisted_beta(H, F);
    return out;
}

/// Composite twist: first G, then F on the G-twisted structure, so the induced
/// data satisfies X_{FG} = (X_G)_F. The element is the product F·G.
inline TwistData compose_twists(const TwistData& F, const TwistData& G) {
    return TwistData{tensor_mul(F.element, G.element), tensor_mul(G.inverse, F.inverse)};
}

inline TwistData inverse_twist(const TwistData& F) { return TwistData{F.inverse, F.element}; }

/// A compatible twist leaves both Δ and Φ unchanged.
inline std::pair<bool, CheckReport> is_compatible_twist(const QuasiHopfData& H, const TwistData& C,
                                                        const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    double r = 0.0, sc = 1.0;
    for (int j = 0; j < n; ++j) {
        TensorElement d = coproduct_of(H, basis1(H, j));
        TensorElement td = mul(C.element, d, C.inverse);
        r = std::max(r, max_abs_diff(td, d));
        sc = std::max({sc, max_abs(d), max_abs(td)});
    }
    rep.add("compatible-coproduct", r, tol.threshold(sc));
    rep.add_cmp("compatible-coassociator", twisted_coassociator(H, C), H.coassociator, tol);
    return {rep.overall, rep};
}

}  // namespace qhstar
