// Conjugation (star) structures.
//
// A conjugation is an antilinear involutive anti-homomorphism † with
// ε(a†) = conj(ε(a)). On tensor factors it acts leg-wise: (a⊗b)† = a†⊗b†.
// A star structure on a quasi-Hopf algebra carries a canonical twist Ω with
//
//     Δ(a)† = Ω Δ(a†) Ω⁻¹            (per basis element)
//     (Φ†)⁻¹ = Φ_Ω                    (co-associator conjugation)
//
// and Ω⁻¹Ω† is then forced to commute with the co-product image. When Ω = 1⊗1
// the coproduct condition degenerates to plain compatibility Δ(a†) = Δ(a)†.

#pragma once

#include "twist.hpp"

namespace qhstar {

struct NotCanonical : std::runtime_error {
    explicit NotCanonical(const std::string& what) : std::runtime_error(what) {}
};

struct StarData {
    LinearMapData dagger;  // antilinear, n x n
    TwistData omega;
};

inline StarData make_star(LinearMapData dagger, TwistData omega) {
    if (!dagger.antilinear) throw std::invalid_argument("make_star: dagger must be antilinear");
    if (dagger.rows != dagger.cols) throw std::invalid_argument("make_star: dagger must be square");
    return StarData{std::move(dagger), std::move(omega)};
}

inline TensorElement dag1(const StarData& st, const TensorElement& x) { return apply_map(st.dagger, x); }

/// Leg-wise conjugation of an order-k element.
inline TensorElement dagger_all(const StarData& st, const TensorElement& t) {
    std::vector<int> legs(static_cast<std::size_t>(t.order));
    for (int i = 0; i < t.order; ++i) legs[static_cast<std::size_t>(i)] = i + 1;
    return apply_on_legs(st.dagger, legs, t);
}

/// F† as a twist; (F†)⁻¹ = (F⁻¹)†.
inline TwistData dagger_twist(const StarData& st, const TwistData& F) {
    return TwistData{dagger_all(st, F.element), dagger_all(st, F.inverse)};
}

inline TwistData transpose_twist(const TwistData& F) {
    return TwistData{swap_legs(F.element), swap_legs(F.inverse)};
}

inline bool omega_is_trivial(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    TensorElement one2 = unit_tensor(H.alg, 2);
    return tol.pass(max_abs_diff(st.omega.element, one2), std::max(1.0, max_abs(st.omega.element)));
}

/// S̃ = † ∘ S⁻¹ ∘ † (a linear map: two antilinear factors compose linearly).
inline LinearMapData conjugated_antipode(const QuasiHopfData& H, const StarData& st) {
    return compose_maps(st.dagger, compose_maps(H.antipode_inv, st.dagger));
}

/// S̃⁻¹ = † ∘ S ∘ †.
inline LinearMapData conjugated_antipode_inv(const QuasiHopfData& H, const StarData& st) {
    return compose_maps(st.dagger, compose_maps(H.antipode, st.dagger));
}

/// Star-algebra suite: involution, anti-homomorphism, co-unit conjugation.
/// When Ω is trivial the co-product compatibility Δ(a†) = Δ(a)† is included.
inline CheckReport check_star_algebra(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    {
        double r = 0.0;
        for (int i = 0; i < n; ++i) {
            TensorElement e = basis1(H, i);
            r = std::max(r, max_abs_diff(dag1(st, dag1(st, e)), e));
        }
        rep.add("involution", r, tol.threshold(1.0));
    }
    {
        double r = 0.0, sc = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TensorElement lhs = dag1(st, mul1(basis1(H, i), basis1(H, j)));
                TensorElement rhs = mul1(dag1(st, basis1(H, j)), dag1(st, basis1(H, i)));
                r = std::max(r, max_abs_diff(lhs, rhs));
                sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
            }
        rep.add("conjugation-antihomomorphism", r, tol.threshold(sc));
    }
    {
        double r = 0.0;
        for (int i = 0; i < n; ++i)
            r = std::max(r, std::abs(counit_of(H, dag1(st, basis1(H, i))) - std::conj(counit_of(H, basis1(H, i)))));
        rep.add("counit-conjugation", r, tol.threshold(1.0));
    }
    if (omega_is_trivial(H, st, tol)) {
        double r = 0.0, sc = 1.0;
        for (int i = 0; i < n; ++i) {
            TensorElement lhs = coproduct_of(H, dag1(st, basis1(H, i)));
            TensorElement rhs = dagger_all(st, coproduct_of(H, basis1(H, i)));
            r = std::max(r, max_abs_diff(lhs, rhs));
            sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
        }
        rep.add("coproduct-conjugation", r, tol.threshold(sc));
    }
    return rep;
}

/// Star-QHA suite: Ω twist laws, co-unit conjugation, the per-basis co-product
/// conjugation through Ω, the co-associator conjugation, and the consequence
/// that Ω⁻¹Ω† commutes with every Δ(a).
inline CheckReport check_star_qha(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {}) {
    CheckReport rep;
    const int n = H.alg->dim;
    const TwistData& Om = st.omega;

    rep.merge(twist_counit_report(H, Om.element, tol));
    rep.add_cmp("omega-invertible", tensor_mul(Om.element, Om.inverse), unit_tensor(H.alg, 2), tol);

    {
        double r = 0.0;
        for (int i = 0; i < n; ++i) {
            TensorElement e = basis1(H, i);
            r = std::max(r, max_abs_diff(dag1(st, dag1(st, e)), e));
        }
        rep.add("involution", r, tol.threshold(1.0));
    }
    {
        double r = 0.0, sc = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                TensorElement lhs = dag1(st, mul1(basis1(H, i), basis1(H, j)));
                TensorElement rhs = mul1(dag1(st, basis1(H, j)), dag1(st, basis1(H, i)));
                r = std::max(r, max_abs_diff(lhs, rhs));
                sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
            }
        rep.add("conjugation-antihomomorphism", r, tol.threshold(sc));
    }
    {
        double r = 0.0;
        for (int i = 0; i < n; ++i)
            r = std::max(r, std::abs(counit_of(H, dag1(st, basis1(H, i))) - std::conj(counit_of(H, basis1(H, i)))));
        rep.add("counit-conjugation", r, tol.threshold(1.0));
    }

    // Δ(a)† = Ω Δ(a†) Ω⁻¹ per basis element
    for (int i = 0; i < n; ++i) {
        TensorElement lhs = dagger_all(st, coproduct_of(H, basis1(H, i)));
        TensorElement rhs = mul(Om.element, coproduct_of(H, dag1(st, basis1(H, i))), Om.inverse);
        double sc = std::max(max_abs(lhs), max_abs(rhs));
        rep.add("coproduct-conjugation[" + H.alg->basis_labels[static_cast<std::size_t>(i)] + "]",
                max_abs_diff(lhs, rhs), tol.threshold(sc));
    }

    // (Φ†)⁻¹ = Φ_Ω; the left side equals (Φ⁻¹)† since † is a leg-wise anti-map
    rep.add_cmp("coassociator-conjugation", dagger_all(st, H.coassociator_inv), twisted_coassociator(H, Om), tol);

    // Ω⁻¹Ω† commutes with Δ(a)
    {
        TensorElement K = tensor_mul(Om.inverse, dagger_all(st, Om.element));
        double r = 0.0, sc = 1.0;
        for (int i = 0; i < n; ++i) {
            TensorElement d = coproduct_of(H, basis1(H, i));
            TensorElement lhs = tensor_mul(K, d);
            TensorElement rhs = tensor_mul(d, K);
            r = std::max(r, max_abs_diff(lhs, rhs));
            sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
        }
        rep.add("quasi-self-adjointness", r, tol.threshold(sc));
    }
    return rep;
}

/// The conjugated structure: Δ̃(a) = Δ(a†)†, Φ̃ = (Φ†)⁻¹, S̃ = †∘S⁻¹∘†,
/// α̃ = S⁻¹(β)†, β̃ = S⁻¹(α)†. Its canonical twist is Ω⁻¹.
inline QuasiHopfData tilde_structure(const QuasiHopfData& H, const StarData& st) {
    const int n = H.alg->dim;
    QuasiHopfData out;
    out.alg = H.alg;
    out.counit = H.counit;
    out.coproduct = LinearMapData{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n), false};
    for (int j = 0; j < n; ++j) {
        TensorElement col = dagger_all(st, coproduct_of(H, dag1(st, basis1(H, j))));
        for (int r = 0; r < n * n; ++r) out.coproduct.at(r, j) = col.coeffs[static_cast<std::size_t>(r)];
    }
    out.coassociator = dagger_all(st, H.coassociator_inv);
    out.coassociator_inv = dagger_all(st, H.coassociator);
    out.antipode = conjugated_antipode(H, st);
    out.antipode_inv = conjugated_antipode_inv(H, st);
    out.alpha = dag1(st, antipode_inv_of(H, H.beta));
    out.beta = dag1(st, antipode_inv_of(H, H.alpha));
    return out;
}

/// Star structure for twist_structure(H, F): same †, Ω_F = (F†)⁻¹ Ω F⁻¹.
inline StarData star_twist(const QuasiHopfData& /*H*/, const StarData& st, const TwistData& F) {
    TensorElement el = mul(dagger_all(st, F.inverse), st.omega.element, F.inverse);
    TensorElement inv = mul(F.element, st.omega.inverse, dagger_all(st, F.element));
    return StarData{st.dagger, TwistData{std::move(el), std::move(inv)}};
}

/// Star structure for opposite(H): same †, canonical twist Ωᵀ.
inline StarData opposite_star(const QuasiHopfData& /*H*/, const StarData& st) {
    return StarData{st.dagger, transpose_twist(st.omega)};
}

inline bool is_self_conjugate(const QuasiHopfData& /*H*/, const StarData& st, const ToleranceConfig& tol = {}) {
    TensorElement od = dagger_all(st, st.omega.element);
    return tol.pass(max_abs_diff(st.omega.element, od), std::max(max_abs(st.omega.element), max_abs(od)));
}

/// S is star-compatible when S(a)† = S⁻¹(a†) on every basis element.
inline bool is_star_compatible_antipode(const QuasiHopfData& H, const StarData& st, const ToleranceConfig& tol = {},
                                        double* residual_out = nullptr) {
    double r = 0.0, sc = 1.0;
    for (int i = 0; i < H.alg->dim; ++i) {
        TensorElement lhs = dag1(st, antipode_of(H, basis1(H, i)));
        TensorElement rhs = antipode_inv_of(H, dag1(st, basis1(H, i)));
        r = std::max(r, max_abs_diff(lhs, rhs));
        sc = std::max({sc, max_abs(lhs), max_abs(rhs)});
    }
    if (residual_out) *residual_out = r;
    return tol.pass(r, sc);
}

/// Factors a candidate canonical twist as Γ = Ω·C and certifies Γ iff C is
/// compatible. Also re-verifies that Ω⁻¹Ω† is compatible, which must hold on
/// any valid star structure.
inline TwistData canonical_element_factor(const QuasiHopfData& H, const StarData& st, const TwistData& gamma,
                                          const ToleranceConfig& tol = {}) {
    TwistData self_check{tensor_mul(st.omega.inverse, dagger_all(st, st.omega.element)),
                         tensor_mul(dagger_all(st, st.omega.inverse), st.omega.element)};
    if (!is_compatible_twist(H, self_check, tol).first)
        throw NotCanonical("canonical_element_factor: Ω⁻¹Ω† is not compatible — the star structure itself is invalid");

    TwistData C{tensor_mul(st.omega.inverse, gamma.element), tensor_mul(gamma.inverse, st.omega.element)};
    auto [ok, rep] = is_compatible_twist(H, C, tol);
    if (!ok)
        throw NotCanonical("canonical_element_factor: Ω⁻¹Γ is not a compatible twist (residual " +
                           std::to_string(rep.max_residual()) + ")");
    return C;
}

}  // namespace qhstar
