// Shared fixtures and independent oracles for the test suites. Everything in
// here recomputes expectations from first principles (group tables, pointwise
// phase arithmetic, brute-force cochain conditions) so the checks stay
// independent of the library's own evaluation paths.

#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <qhstar/qhstar.hpp>

namespace oracle {

using namespace qhstar;

constexpr double kTau = 6.283185307179586476925286766559;

// 2x2 complex matrix algebra: a small noncommutative stress case for the
// kernel. Basis E11, E12, E21, E22 with E_{ab} E_{cd} = δ_{bc} E_{ad}.
inline AlgebraPtr matrix_algebra_2x2() {
    const int n = 4;
    auto at = [](int a, int b) { return a * 2 + b; };
    std::vector<cplx> mult(n * n * n, cplx{0, 0});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) mult[(static_cast<std::size_t>(at(a, b)) * n + at(c, d)) * n + at(a, d)] = 1.0;
    std::vector<cplx> unit(n, cplx{0, 0});
    unit[at(0, 0)] = 1.0;
    unit[at(1, 1)] = 1.0;
    return make_algebra(n, {"E11", "E12", "E21", "E22"}, mult, unit);
}

// Product in C[Z_m]^{⊗k} computed as a convolution over the product group
// (Z_m)^k, bypassing the structure-constant machinery entirely.
inline TensorElement group_convolution(const TensorElement& a, const TensorElement& b, int m) {
    REQUIRE(a.order == b.order);
    const int k = a.order;
    TensorElement out = zero_tensor(a.alg, k);
    std::vector<int> da(k), db(k);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == cplx{0, 0}) continue;
        {
            std::size_t r = i;
            for (int t = k - 1; t >= 0; --t) { da[t] = static_cast<int>(r % m); r /= m; }
        }
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == cplx{0, 0}) continue;
            std::size_t r = j;
            for (int t = k - 1; t >= 0; --t) { db[t] = static_cast<int>(r % m); r /= m; }
            std::size_t idx = 0;
            for (int t = 0; t < k; ++t) idx = idx * m + (da[t] + db[t]) % m;
            out.coeffs[idx] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

// Dense triple-loop product oracle straight from the structure constants.
inline TensorElement dense_mul_order1(const AlgebraPtr& alg, const TensorElement& a, const TensorElement& b) {
    const int n = alg->dim;
    TensorElement out = zero_tensor(alg, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.coeffs[k] += a.coeffs[i] * b.coeffs[j] * alg->m(i, j, k);
    return out;
}

// The standard 3-cochain used by the diagonal example family.
inline cplx omega3(int n, int a, int b, int c) {
    int carry = (b + c >= n) ? 1 : 0;
    double t = kTau * static_cast<double>(((a * carry) % n + n) % n) / n;
    return cplx{std::cos(t), std::sin(t)};
}

// Brute-force coboundary of a 3-cochain over (Z_n)^4; the cocycle condition
// is dω ≡ 1.
inline double max_coboundary_defect(int n, const TensorElement& phi) {
    auto val = [&](int a, int b, int c) { return phi.coeffs[(static_cast<std::size_t>(a) * n + b) * n + c]; };
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    cplx lhs = val(b, c, d) * val(a, (b + c) % n, d) * val(a, b, c);
                    cplx rhs = val((a + b) % n, c, d) * val(a, b, (c + d) % n);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

inline TensorElement projector_plus(const AlgebraPtr& z2) {
    return make_element(z2, 1, {cplx{0.5, 0}, cplx{0.5, 0}});
}
inline TensorElement projector_minus(const AlgebraPtr& z2) {
    return make_element(z2, 1, {cplx{0.5, 0}, cplx{-0.5, 0}});
}

// 1⊗1 − 2 p₋⊗p₋ on C[Z_2]
inline TensorElement z2_projector_twist_element(const AlgebraPtr& z2) {
    TensorElement pm = projector_minus(z2);
    return sub(unit_tensor(z2, 2), scale(tensor_product(pm, pm), 2.0));
}

inline double unit_distance(const QuasiHopfData& H, const TensorElement& x) {
    return max_abs_diff(x, unit_tensor(H.alg, x.order));
}

// The smallest noncommutative group Hopf structure: C[S_3] with Δ(g) = g⊗g,
// S(g) = g⁻¹, g† = g⁻¹. Severe stress case for operand ordering in the long
// identity chains, which the abelian examples cannot see.
inline ExampleBundle symmetric_group_hopf() {
    // permutations of {0,1,2}: e, three transpositions, two 3-cycles
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e", "s01", "s02", "s12", "r", "rr"};
    const int n = 6;
    auto compose = [&](int i, int j) {  // (σ_i ∘ σ_j)(x) = σ_i(σ_j(x))
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
        for (int k = 0; k < n; ++k)
            if (perms[static_cast<std::size_t>(k)] == c) return k;
        throw std::logic_error("S3 table");
    };
    std::vector<cplx> mult(n * n * n, cplx{0, 0});
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = compose(i, j);
            mult[(static_cast<std::size_t>(i) * n + j) * n + k] = 1.0;
            if (k == 0) inverse[static_cast<std::size_t>(i)] = j;
        }
    std::vector<cplx> unit(n, cplx{0, 0});
    unit[0] = 1.0;
    AlgebraPtr alg = make_algebra(n, labels, mult, unit);

    LinearMapData D{n * n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k) D.at(k * n + k, k) = 1.0;
    LinearMapData eps{1, n, std::vector<cplx>(static_cast<std::size_t>(n), cplx{1.0, 0.0}), false};
    LinearMapData S{n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n, cplx{0, 0}), false};
    for (int k = 0; k < n; ++k) S.at(inverse[static_cast<std::size_t>(k)], k) = 1.0;

    ExampleBundle b;
    b.name = "symmetric_group_hopf";
    b.H = make_qha(alg, D, eps, unit_tensor(alg, 3), S, unit_tensor(alg, 1), unit_tensor(alg, 1));
    LinearMapData dagger = S;
    dagger.antilinear = true;
    b.star = make_star(dagger, identity_twist(alg));
    return b;
}

}  // namespace oracle
