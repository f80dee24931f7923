// Built-in example structures with closed-form oracles.
//
//   group_hopf_star(n)      ℂ[Z_n], Δ(g)=g⊗g, S(g)=g⁻¹, g†=g⁻¹, Φ and Ω trivial
//   dual_group_cocycle(n)   functions on Z_n with the standard 3-cocycle
//                           co-associator ω(a,b,c) = exp(2πi·a·carry(b,c)/n)
//   char_twisted_star(n,s)  ℂ[Z_n] with a central canonical shift, twisted by a
//                           seeded diagonal character twist F, Ω = (FF†)⁻¹
//   z2_triangular           ℂ[Z_2] with the triangular R = 1⊗1 − 2p₋⊗p₋
//   bicharacter_qt(n,k)     ℂ[Z_n] with R = Σ ω^{k·pq} E_p⊗E_q (type I)
//
// All randomness flows through a fixed 64-bit generator so example files are
// reproducible from their recorded seed.

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "rmatrix.hpp"

namespace qhstar {

struct SeededRng {
    std::mt19937_64 eng;
    explicit SeededRng(std::uint64_t seed) : eng(seed) {}
    // raw-bit construction keeps streams identical across standard libraries
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    cplx phase() {
        double t = uniform(0.0, 6.283185307179586476925286766559);
        return cplx{std::cos(t), std::sin(t)};
    }
};

struct ExampleBundle {
    std::string name;
    QuasiHopfData H;
    std::optional<StarData> star;
    std::optional<RMatrixData> rmatrix;
    std::uint64_t seed = 0;
};

namespace detail {

inline cplx root_of_unity(int n, long long power) {
    const double t = 6.283185307179586476925286766559 * static_cast<double>(((power % n) + n) % n) / n;
    return cplx{std::cos(t), std::sin(t)};
}

// Σ_p vals[p] E_p for the cyclic group algebra, E_p = (1/n) Σ_a ω^{-pa} g^a.
inline TensorElement from_dual1(const AlgebraPtr& alg, const std::vector<cplx>& vals) {
    const int n = alg->dim;
    std::vector<cplx> coeffs(static_cast<std::size_t>(n), cplx{0, 0});
    for (int a = 0; a < n; ++a) {
        cplx acc{0, 0};
        for (int p = 0; p < n; ++p) acc += vals[static_cast<std::size_t>(p)] * root_of_unity(n, -static_cast<long long>(p) * a);
        coeffs[static_cast<std::size_t>(a)] = acc / static_cast<double>(n);
    }
    return TensorElement{alg, 1, std::move(coeffs)};
}

// Σ_{p,q} vals[p][q] E_p ⊗ E_q
inline TensorElement from_dual2(const AlgebraPtr& alg, const std::vector<cplx>& vals) {
    const int n = alg->dim;
    std::vector<cplx> coeffs(static_cast<std::size_t>(n) * n, cplx{0, 0});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cplx acc{0, 0};
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    acc += vals[static_cast<std::size_t>(p) * n + q] *
                           root_of_unity(n, -static_cast<long long>(p) * a - static_cast<long long>(q) * b);
            coeffs[static_cast<std::size_t>(a) * n + b] = acc / static_cast<double>(n * n);
        }
    return TensorElement{alg, 2, std::move(coeffs)};
}

inline std::string power_label(int k) {
    if (k == 0) return "e";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
}

}  // namespace detail

/// ℂ[Z_n] as a Hopf algebra with unitary group-element conjugation.
inline ExampleBundle example_group_hopf_star(int n) {
    if (n < 1) throw std::invalid_argument("group_hopf_star: n must be positive");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back(detail::power_label(k));
    std::vector<cplx> mult(static_cast<std::size_t>(n) * n * n, cplx{0, 0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[(static_cast<std::size_t>(i) * n + j) * n + (i + j) % n] = 1.0;
    std::vector<cplx> unit(static_cast<std::size_t>(n), cplx{0, 0});
    unit[0] = 1.0;
    AlgebraPtr alg = make_algebra(n, labels, mult, unit);

    LinearMapData D{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k) D.at(k * n + k, k) = 1.0;
    LinearMapData eps{1, n, std::vector<cplx>(static_cast<std::size_t>(n), cplx{1.0, 0.0}), false};
    LinearMapData S{n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k) S.at((n - k) % n, k) = 1.0;
    TensorElement one3 = unit_tensor(alg, 3);
    TensorElement a1 = unit_tensor(alg, 1);

    ExampleBundle b;
    b.name = "group_hopf_star(" + std::to_string(n) + ")";
    b.H = make_qha(alg, D, eps, one3, S, a1, a1);
    LinearMapData dagger = S;
    dagger.antilinear = true;
    b.star = make_star(dagger, identity_twist(alg));
    return b;
}

/// Functions on Z_n with the standard 3-cocycle co-associator. The canonical
/// element β is pinned by the antipode axioms: β_x = ω(x,−x,x).
inline ExampleBundle example_dual_group_cocycle(int n) {
    if (n < 2) throw std::invalid_argument("dual_group_cocycle: n must be at least 2");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("d" + std::to_string(k));
    std::vector<cplx> mult(static_cast<std::size_t>(n) * n * n, cplx{0, 0});
    for (int i = 0; i < n; ++i) mult[(static_cast<std::size_t>(i) * n + i) * n + i] = 1.0;
    std::vector<cplx> unit(static_cast<std::size_t>(n), cplx{1.0, 0.0});
    AlgebraPtr alg = make_algebra(n, labels, mult, unit);

    LinearMapData D{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) D.at(a * n + ((k - a) % n + n) % n, k) = 1.0;
    LinearMapData eps{1, n, std::vector<cplx>(static_cast<std::size_t>(n), cplx{0, 0}), false};
    eps.at(0, 0) = 1.0;
    LinearMapData S{n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k) S.at((n - k) % n, k) = 1.0;

    auto carry = [n](int b, int c) { return (b + c >= n) ? 1 : 0; };
    auto omega3 = [&](int a, int b, int c) { return detail::root_of_unity(n, static_cast<long long>(a) * carry(b, c)); };
    TensorElement Phi = zero_tensor(alg, 3);
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb)
            for (int c = 0; c < n; ++c)
                Phi.coeffs[(static_cast<std::size_t>(a) * n + bb) * n + c] = omega3(a, bb, c);

    TensorElement alpha = unit_tensor(alg, 1);
    TensorElement beta = zero_tensor(alg, 1);
    for (int x = 0; x < n; ++x) beta.coeffs[static_cast<std::size_t>(x)] = omega3(x, (n - x) % n, x);

    ExampleBundle b;
    b.name = "dual_group_cocycle(" + std::to_string(n) + ")";
    b.H = make_qha(alg, D, eps, Phi, S, alpha, beta);
    LinearMapData dagger = identity_map(n);
    dagger.antilinear = true;
    b.star = make_star(dagger, identity_twist(alg));
    return b;
}

/// dual_group_cocycle with the co-associator phases perturbed away from the
/// cocycle condition (the antipodal diagonal stays paired so the antipode
/// axioms survive). Exactly the pentagon fails.
inline ExampleBundle example_broken_pentagon(int n, std::uint64_t seed) {
    ExampleBundle b = example_dual_group_cocycle(n);
    SeededRng rng(seed);
    std::vector<double> theta(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int a = 1; a < n; ++a)
        for (int bb = 1; bb < n; ++bb)
            for (int c = 1; c < n; ++c) theta[(static_cast<std::size_t>(a) * n + bb) * n + c] = rng.uniform(0.2, 1.2);
    // keep the pairs η(x,−x,x)·η(−x,x,−x) = 1 used by the antipode identities
    for (int x = 1; x < n; ++x) {
        int y = (n - x) % n;
        if (x == y) {
            theta[(static_cast<std::size_t>(x) * n + y) * n + x] = 0.0;
        } else {
            theta[(static_cast<std::size_t>(y) * n + x) * n + y] = -theta[(static_cast<std::size_t>(x) * n + y) * n + x];
        }
    }
    TensorElement Phi = b.H.coassociator;
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb)
            for (int c = 0; c < n; ++c) {
                std::size_t idx = (static_cast<std::size_t>(a) * n + bb) * n + c;
                double t = theta[idx];
                Phi.coeffs[idx] *= cplx{std::cos(t), std::sin(t)};
            }
    TensorElement beta = zero_tensor(b.H.alg, 1);
    for (int x = 0; x < n; ++x) {
        int y = (n - x) % n;
        beta.coeffs[static_cast<std::size_t>(x)] = Phi.coeffs[(static_cast<std::size_t>(x) * n + y) * n + x];
    }
    b.name = "broken_pentagon(" + std::to_string(n) + ")";
    b.seed = seed;
    b.H = make_qha(b.H.alg, b.H.coproduct, b.H.counit, Phi, b.H.antipode, b.H.alpha, beta);
    return b;
}

/// Diagonal character twist on ℂ[Z_n]: F = Σ φ(p,q) E_p⊗E_q with the co-unit
/// row and column pinned to 1. Non-unit moduli make (FF†)⁻¹ a nontrivial
/// self-adjoint twist.
inline TwistData diagonal_character_twist(const QuasiHopfData& H, std::uint64_t seed, bool with_moduli = true) {
    const int n = H.alg->dim;
    SeededRng rng(seed);
    std::vector<cplx> vals(static_cast<std::size_t>(n) * n, cplx{1.0, 0.0});
    for (int p = 1; p < n; ++p)
        for (int q = 1; q < n; ++q) {
            double rho = with_moduli ? rng.uniform(0.8, 1.25) : 1.0;
            vals[static_cast<std::size_t>(p) * n + q] = rho * rng.phase();
        }
    return make_twist(H, detail::from_dual2(H.alg, vals));
}

/// A central invertible element of ℂ[Z_n] with ε(v) = 1 and non-unimodular
/// spectrum, derived deterministically from the seed.
inline TensorElement central_shift_element(const AlgebraPtr& alg, std::uint64_t seed) {
    const int n = alg->dim;
    SeededRng rng(seed);
    std::vector<cplx> vals(static_cast<std::size_t>(n), cplx{1.0, 0.0});
    for (int p = 1; p < n; ++p) vals[static_cast<std::size_t>(p)] = 1.2 * rng.phase();
    return detail::from_dual1(alg, vals);
}

/// ℂ[Z_n] with canonical elements shifted by a central v (so the antipode
/// mediator of the star calculus is a nontrivial central element), twisted by
/// a seeded diagonal character twist F, carrying Ω = (FF†)⁻¹.
inline ExampleBundle example_char_twisted_star(int n, std::uint64_t seed) {
    ExampleBundle base = example_group_hopf_star(n);
    TensorElement v = central_shift_element(base.H.alg, seed);
    QuasiHopfData Hs = make_qha(base.H.alg, base.H.coproduct, base.H.counit, base.H.coassociator, base.H.antipode,
                                v, invert(v));
    TwistData F = diagonal_character_twist(Hs, seed ^ 0x9e3779b97f4a7c15ull, true);

    const StarData& st0 = *base.star;
    TensorElement ff_dag = tensor_mul(F.element, dagger_all(st0, F.element));
    TwistData omega{invert(ff_dag), ff_dag};

    ExampleBundle b;
    b.name = "char_twisted_star(" + std::to_string(n) + ")";
    b.seed = seed;
    b.H = twist_structure(Hs, F);
    b.H.coassociator_inv = invert(b.H.coassociator);  // re-derive to keep the cache tight
    b.star = make_star(st0.dagger, omega);
    return b;
}

/// ℂ[Z_2] with the triangular R = 1⊗1 − 2p₋⊗p₋ (both classification laws hold).
inline ExampleBundle example_z2_triangular() {
    ExampleBundle b = example_group_hopf_star(2);
    std::vector<cplx> vals = {cplx{1, 0}, cplx{1, 0}, cplx{1, 0}, cplx{-1, 0}};
    b.rmatrix = make_rmatrix(b.H, detail::from_dual2(b.H.alg, vals));
    b.name = "z2_triangular";
    return b;
}

/// ℂ[Z_n] with the bicharacter R = Σ ω^{k·pq} E_p⊗E_q — a type I structure
/// with trivial Ω (the conjugate of each phase is its inverse).
inline ExampleBundle example_bicharacter_qt(int n, int k) {
    ExampleBundle b = example_group_hopf_star(n);
    std::vector<cplx> vals(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            vals[static_cast<std::size_t>(p) * n + q] = detail::root_of_unity(n, static_cast<long long>(k) * p * q);
    b.rmatrix = make_rmatrix(b.H, detail::from_dual2(b.H.alg, vals));
    b.name = "bicharacter_qt(" + std::to_string(n) + "," + std::to_string(k) + ")";
    return b;
}

/// Generic small twist on any structure: 1⊗1 + X with X projected onto the
/// kernel of both co-unit legs.
inline TwistData random_twist(const QuasiHopfData& H, std::uint64_t seed, double eps = 0.25) {
    const int n = H.alg->dim;
    SeededRng rng(seed);
    TensorElement X = zero_tensor(H.alg, 2);
    for (auto& c : X.coeffs) c = eps * rng.uniform(-1.0, 1.0) + cplx{0, 1} * (eps * rng.uniform(-1.0, 1.0));
    TensorElement one1 = unit_tensor(H.alg, 1);
    TensorElement el = apply_on_legs(H.counit, {1}, X);  // (ε⊗1)X
    TensorElement er = apply_on_legs(H.counit, {2}, X);  // (1⊗ε)X
    cplx ee = functional_value(H.counit, el);            // (ε⊗ε)X
    X = sub(X, tensor_product(one1, el));
    X = sub(X, tensor_product(er, one1));
    X = add(X, scale(tensor_product(one1, one1), ee));
    return make_twist(H, add(unit_tensor(H.alg, 2), X));
}

/// Dispatcher used by the command-line `example` subcommand.
inline ExampleBundle make_example(const std::string& name, const std::vector<long long>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("example '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "group_hopf_star") {
        need(1);
        return example_group_hopf_star(static_cast<int>(params[0]));
    }
    if (name == "dual_group_cocycle") {
        need(1);
        return example_dual_group_cocycle(static_cast<int>(params[0]));
    }
    if (name == "char_twisted_star") {
        need(2);
        return example_char_twisted_star(static_cast<int>(params[0]), static_cast<std::uint64_t>(params[1]));
    }
    if (name == "z2_triangular") {
        need(0);
        return example_z2_triangular();
    }
    if (name == "bicharacter_qt") {
        need(2);
        return example_bicharacter_qt(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace qhstar
