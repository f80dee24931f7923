// Dense complex tensor kernel for finite-dimensional algebra calculus.
//
// An algebra is given by structure constants m[i][j][k] (e_i·e_j = Σ_k m[i][j][k] e_k)
// and a unit vector. Elements of H^⊗k are flat coefficient vectors of length n^k,
// row-major with leg 1 most significant:
//
//     index(i_1,…,i_k) = i_1·n^{k-1} + i_2·n^{k-2} + … + i_k.
//
// This flattening convention is fixed once, here, and shared by the on-disk format.
// All operations are pure functions over immutable values; summations are sequential
// and deterministic.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qhstar {

using cplx = std::complex<double>;

struct SingularElement : std::runtime_error {
    explicit SingularElement(const std::string& what) : std::runtime_error(what) {}
};
struct RightInverseMismatch : std::runtime_error {
    explicit RightInverseMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct VariantMismatch : std::runtime_error {
    explicit VariantMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct FormulaMismatch : std::runtime_error {
    explicit FormulaMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Residual r against operands of max-norm M passes iff r <= atol + rtol*M.
struct ToleranceConfig {
    double atol = 1e-9;
    double rtol = 1e-9;
    double threshold(double scale) const { return atol + rtol * scale; }
    bool pass(double residual, double scale) const { return residual <= threshold(scale); }
};

struct AlgebraData;
using AlgebraPtr = std::shared_ptr<const AlgebraData>;

struct AlgebraData {
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<cplx> mult;  // dim^3 row-major [i][j][k]
    std::vector<cplx> unit;  // dim

    struct MulTerm {
        int k;
        cplx v;
    };
    // Sparse view of mult, one term list per basis pair (i,j).
    std::vector<std::vector<MulTerm>> table;
    // Monomial algebras (at most one product term per basis pair) cover group
    // algebras and diagonal function algebras; they get a branch-free product loop.
    bool monomial = false;
    std::vector<std::int32_t> mono_tgt;  // dim², -1 when the row is empty
    std::vector<cplx> mono_val;

    cplx m(int i, int j, int k) const { return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
};

inline AlgebraPtr make_algebra(int dim, std::vector<std::string> labels, std::vector<cplx> mult,
                               std::vector<cplx> unit) {
    if (dim <= 0) throw std::invalid_argument("make_algebra: dim must be positive");
    auto n = static_cast<std::size_t>(dim);
    if (labels.size() != n) throw std::invalid_argument("make_algebra: wrong number of basis labels");
    if (mult.size() != n * n * n) throw std::invalid_argument("make_algebra: mult must have dim^3 entries");
    if (unit.size() != n) throw std::invalid_argument("make_algebra: unit must have dim entries");

    auto alg = std::make_shared<AlgebraData>();
    alg->dim = dim;
    alg->basis_labels = std::move(labels);
    alg->mult = std::move(mult);
    alg->unit = std::move(unit);
    alg->table.assign(n * n, {});
    alg->mono_tgt.assign(n * n, -1);
    alg->mono_val.assign(n * n, cplx{0.0, 0.0});
    alg->monomial = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& row = alg->table[i * n + j];
            for (std::size_t k = 0; k < n; ++k) {
                cplx v = alg->mult[(i * n + j) * n + k];
                if (v != cplx{0.0, 0.0}) row.push_back({static_cast<int>(k), v});
            }
            if (row.size() > 1) alg->monomial = false;
            if (row.size() == 1) {
                alg->mono_tgt[i * n + j] = row[0].k;
                alg->mono_val[i * n + j] = row[0].v;
            }
        }
    return alg;
}

/// An element of H^⊗order as a flat coefficient vector of length dim^order.
struct TensorElement {
    AlgebraPtr alg;
    int order = 1;
    std::vector<cplx> coeffs;
};

/// A (anti)linear map between coefficient spaces. Action is x ↦ matrix·x,
/// or x ↦ matrix·conj(x) when antilinear.
struct LinearMapData {
    int rows = 0, cols = 0;
    std::vector<cplx> matrix;  // rows×cols row-major
    bool antilinear = false;

    cplx at(int r, int c) const { return matrix[static_cast<std::size_t>(r) * cols + c]; }
    cplx& at(int r, int c) { return matrix[static_cast<std::size_t>(r) * cols + c]; }
};

inline LinearMapData identity_map(int n) {
    LinearMapData m{n, n, std::vector<cplx>(static_cast<std::size_t>(n) * n, cplx{0, 0}), false};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

/// Composition A∘B (apply B first). Two antilinear maps compose to a linear one.
inline LinearMapData compose_maps(const LinearMapData& a, const LinearMapData& b) {
    if (a.cols != b.rows) throw std::invalid_argument("compose_maps: dimension mismatch");
    LinearMapData out{a.rows, b.cols, std::vector<cplx>(static_cast<std::size_t>(a.rows) * b.cols, cplx{0, 0}),
                      a.antilinear != b.antilinear};
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            cplx av = a.at(r, k);
            if (av == cplx{0, 0}) continue;
            for (int c = 0; c < b.cols; ++c) {
                cplx bv = b.at(k, c);
                out.at(r, c) += av * (a.antilinear ? std::conj(bv) : bv);
            }
        }
    return out;
}

inline std::vector<cplx> apply_map_vec(const LinearMapData& m, const std::vector<cplx>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("apply_map_vec: dimension mismatch");
    std::vector<cplx> y(static_cast<std::size_t>(m.rows), cplx{0, 0});
    for (int r = 0; r < m.rows; ++r) {
        cplx acc{0, 0};
        for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * (m.antilinear ? std::conj(x[c]) : x[c]);
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

// ── basic constructors ────────────────────────────────────────────────────────

inline std::int64_t pow_i64(int base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline TensorElement make_element(AlgebraPtr alg, int order, std::vector<cplx> coeffs) {
    if (order < 1) throw std::invalid_argument("make_element: order must be >= 1");
    if (static_cast<std::int64_t>(coeffs.size()) != pow_i64(alg->dim, order))
        throw std::invalid_argument("make_element: coefficient length must be dim^order");
    return TensorElement{std::move(alg), order, std::move(coeffs)};
}

inline TensorElement zero_tensor(AlgebraPtr alg, int order) {
    return TensorElement{alg, order, std::vector<cplx>(static_cast<std::size_t>(pow_i64(alg->dim, order)), cplx{0, 0})};
}

inline TensorElement basis_tensor(AlgebraPtr alg, std::int64_t flat_index, int order = 1) {
    auto t = zero_tensor(alg, order);
    t.coeffs[static_cast<std::size_t>(flat_index)] = 1.0;
    return t;
}

/// unit^⊗k, the identity of H^⊗k.
inline TensorElement unit_tensor(AlgebraPtr alg, int order) {
    std::vector<cplx> cur = alg->unit;
    for (int t = 1; t < order; ++t) {
        std::vector<cplx> next(cur.size() * alg->unit.size());
        std::size_t pos = 0;
        for (const cplx& a : cur)
            for (const cplx& b : alg->unit) next[pos++] = a * b;
        cur = std::move(next);
    }
    return TensorElement{alg, order, std::move(cur)};
}

inline TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    if (a.alg->dim != b.alg->dim) throw std::invalid_argument("tensor_product: dimension mismatch");
    TensorElement out{a.alg, a.order + b.order, std::vector<cplx>(a.coeffs.size() * b.coeffs.size())};
    std::size_t pos = 0;
    for (const cplx& x : a.coeffs)
        for (const cplx& y : b.coeffs) out.coeffs[pos++] = x * y;
    return out;
}

// ── elementwise helpers ───────────────────────────────────────────────────────

inline TensorElement add(const TensorElement& a, const TensorElement& b) {
    if (a.order != b.order || a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("add: shape mismatch");
    TensorElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

inline TensorElement sub(const TensorElement& a, const TensorElement& b) {
    if (a.order != b.order || a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("sub: shape mismatch");
    TensorElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

inline TensorElement scale(const TensorElement& a, cplx s) {
    TensorElement out = a;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

inline double max_abs(const TensorElement& a) {
    double m = 0.0;
    for (const cplx& c : a.coeffs) m = std::max(m, std::abs(c));
    return m;
}

inline double max_abs_diff(const TensorElement& a, const TensorElement& b) {
    if (a.order != b.order || a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
    return m;
}

// ── product in H^⊗k ──────────────────────────────────────────────────────────

namespace detail {

inline void decode_digits(std::int64_t index, int n, int k, int* out) {
    for (int t = k - 1; t >= 0; --t) {
        out[t] = static_cast<int>(index % n);
        index /= n;
    }
}

struct NzEntry {
    std::int64_t idx;
    cplx val;
};

inline std::vector<NzEntry> nonzeros(const TensorElement& a) {
    std::vector<NzEntry> nz;
    nz.reserve(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != cplx{0, 0}) nz.push_back({static_cast<std::int64_t>(i), a.coeffs[i]});
    return nz;
}

inline void mul_rec(const AlgebraData& A, const int* dj, const int* dl, const std::int64_t* stride, int k, int t,
                    std::int64_t idx, cplx val, std::vector<cplx>& out) {
    if (t == k) {
        out[static_cast<std::size_t>(idx)] += val;
        return;
    }
    const auto& terms = A.table[static_cast<std::size_t>(dj[t]) * A.dim + dl[t]];
    for (const auto& term : terms) mul_rec(A, dj, dl, stride, k, t + 1, idx + term.k * stride[t], val * term.v, out);
}

}  // namespace detail

/// Componentwise product of two elements of H^⊗k (same k, same algebra).
inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    if (!a.alg || !b.alg) throw std::invalid_argument("tensor_mul: missing algebra");
    if (a.alg->dim != b.alg->dim) throw std::invalid_argument("tensor_mul: dimension mismatch");
    if (a.order != b.order) throw std::invalid_argument("tensor_mul: order mismatch");

    const AlgebraData& A = *a.alg;
    const int n = A.dim;
    const int k = a.order;
    TensorElement out = zero_tensor(a.alg, k);

    auto nza = detail::nonzeros(a);
    auto nzb = detail::nonzeros(b);
    if (nza.empty() || nzb.empty()) return out;

    std::vector<std::int64_t> stride(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) stride[static_cast<std::size_t>(t)] = pow_i64(n, k - 1 - t);

    // digit tables for each distinct flat index appearing in either factor
    std::vector<int> digA(nza.size() * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < nza.size(); ++i) detail::decode_digits(nza[i].idx, n, k, &digA[i * k]);
    std::vector<int> digB(nzb.size() * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < nzb.size(); ++i) detail::decode_digits(nzb[i].idx, n, k, &digB[i * k]);

    if (A.monomial) {
        for (std::size_t ia = 0; ia < nza.size(); ++ia) {
            const int* dj = &digA[ia * k];
            const cplx av = nza[ia].val;
            for (std::size_t ib = 0; ib < nzb.size(); ++ib) {
                const int* dl = &digB[ib * k];
                std::int64_t idx = 0;
                cplx val = av * nzb[ib].val;
                bool alive = true;
                for (int t = 0; t < k; ++t) {
                    const std::size_t cell = static_cast<std::size_t>(dj[t]) * n + dl[t];
                    const std::int32_t tgt = A.mono_tgt[cell];
                    if (tgt < 0) {
                        alive = false;
                        break;
                    }
                    idx += tgt * stride[static_cast<std::size_t>(t)];
                    val *= A.mono_val[cell];
                }
                if (alive) out.coeffs[static_cast<std::size_t>(idx)] += val;
            }
        }
    } else {
        for (std::size_t ia = 0; ia < nza.size(); ++ia)
            for (std::size_t ib = 0; ib < nzb.size(); ++ib)
                detail::mul_rec(A, &digA[ia * k], &digB[ib * k], stride.data(), k, 0, 0,
                                nza[ia].val * nzb[ib].val, out.coeffs);
    }
    return out;
}

inline TensorElement mul(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

inline TensorElement mul(const TensorElement& a, const TensorElement& b, const TensorElement& c) {
    return tensor_mul(tensor_mul(a, b), c);
}

// ── leg permutation and embedding ─────────────────────────────────────────────

/// Subscript convention: sigma = (s_1,…,s_k) places factor s_t in slot t,
/// e.g. permute_legs(X⊗Y⊗Z, {3,1,2}) = Z⊗X⊗Y.
inline TensorElement permute_legs(const TensorElement& a, const std::vector<int>& sigma) {
    const int k = a.order;
    const int n = a.alg->dim;
    if (static_cast<int>(sigma.size()) != k) throw std::invalid_argument("permute_legs: wrong permutation length");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int s : sigma) {
        if (s < 1 || s > k || seen[static_cast<std::size_t>(s - 1)])
            throw std::invalid_argument("permute_legs: not a permutation of 1..order");
        seen[static_cast<std::size_t>(s - 1)] = true;
    }
    TensorElement out = zero_tensor(a.alg, k);
    std::vector<int> dj(static_cast<std::size_t>(k)), dp(static_cast<std::size_t>(k));
    const std::int64_t total = static_cast<std::int64_t>(a.coeffs.size());
    for (std::int64_t idx = 0; idx < total; ++idx) {
        detail::decode_digits(idx, n, k, dj.data());
        // slot t of the output carries factor sigma[t]
        for (int t = 0; t < k; ++t) dp[static_cast<std::size_t>(sigma[static_cast<std::size_t>(t)] - 1)] = dj[static_cast<std::size_t>(t)];
        std::int64_t src = 0;
        for (int t = 0; t < k; ++t) src = src * n + dp[static_cast<std::size_t>(t)];
        out.coeffs[static_cast<std::size_t>(idx)] = a.coeffs[static_cast<std::size_t>(src)];
    }
    return out;
}

inline TensorElement swap_legs(const TensorElement& a) { return permute_legs(a, {2, 1}); }

/// Places factor t of `a` at slot slots[t] of an order-k element, unit elsewhere.
/// Slots are distinct but order-sensitive: embed_legs(R, {2,1}, 2) = R^T.
inline TensorElement embed_legs(const TensorElement& a, const std::vector<int>& slots, int target_order) {
    const int n = a.alg->dim;
    if (static_cast<int>(slots.size()) != a.order) throw std::invalid_argument("embed_legs: slot count must equal order");
    std::vector<int> slot_of_leg(static_cast<std::size_t>(target_order), -1);
    for (int t = 0; t < a.order; ++t) {
        int s = slots[static_cast<std::size_t>(t)];
        if (s < 1 || s > target_order) throw std::invalid_argument("embed_legs: slot out of range");
        if (slot_of_leg[static_cast<std::size_t>(s - 1)] != -1) throw std::invalid_argument("embed_legs: duplicate slot");
        slot_of_leg[static_cast<std::size_t>(s - 1)] = t;
    }
    TensorElement out = zero_tensor(a.alg, target_order);
    std::vector<int> dg(static_cast<std::size_t>(target_order));
    const std::int64_t total = static_cast<std::int64_t>(out.coeffs.size());
    for (std::int64_t idx = 0; idx < total; ++idx) {
        detail::decode_digits(idx, n, target_order, dg.data());
        cplx v{1.0, 0.0};
        std::int64_t src = 0;
        bool alive = true;
        for (int s = 0; s < target_order && alive; ++s) {
            if (slot_of_leg[static_cast<std::size_t>(s)] < 0) {
                v *= a.alg->unit[static_cast<std::size_t>(dg[static_cast<std::size_t>(s)])];
                if (v == cplx{0, 0}) alive = false;
            }
        }
        if (!alive) continue;
        for (int t = 0; t < a.order; ++t) src = src * n + dg[static_cast<std::size_t>(slots[static_cast<std::size_t>(t)] - 1)];
        out.coeffs[static_cast<std::size_t>(idx)] = v * a.coeffs[static_cast<std::size_t>(src)];
    }
    return out;
}

// ── leg-wise map application ──────────────────────────────────────────────────

namespace detail {

// Applies an n -> n^m linear map to a single leg; the image legs replace it in place.
inline TensorElement apply_single_leg(const LinearMapData& map, int leg, const TensorElement& a) {
    const int n = a.alg->dim;
    const int k = a.order;
    int m = 0;
    {
        std::int64_t r = map.rows;
        while (r > 1) {
            if (r % n != 0) throw std::invalid_argument("apply_on_legs: map rows must be a power of dim");
            r /= n;
            ++m;
        }
    }
    if (k - 1 + m < 1) throw std::invalid_argument("apply_on_legs: result would have order 0");
    const std::int64_t outer = pow_i64(n, leg - 1);
    const std::int64_t inner = pow_i64(n, k - leg);
    TensorElement out = zero_tensor(a.alg, k - 1 + m);
    for (std::int64_t o = 0; o < outer; ++o)
        for (int r = 0; r < map.rows; ++r) {
            for (int j = 0; j < n; ++j) {
                cplx mv = map.at(r, j);
                if (mv == cplx{0, 0}) continue;
                const std::size_t src_base = static_cast<std::size_t>((o * n + j) * inner);
                const std::size_t dst_base = static_cast<std::size_t>((o * map.rows + r) * inner);
                for (std::int64_t i = 0; i < inner; ++i)
                    out.coeffs[dst_base + static_cast<std::size_t>(i)] += mv * a.coeffs[src_base + static_cast<std::size_t>(i)];
            }
        }
    return out;
}

}  // namespace detail

/// Applies a single-leg map (n -> n^m; m = 0 removes the leg, m = 2 splits it)
/// independently to each listed leg. Antilinear maps conjugate the global
/// coefficient and are therefore only defined on all legs jointly.
inline TensorElement apply_on_legs(const LinearMapData& map, std::vector<int> legs, const TensorElement& a) {
    const int n = a.alg->dim;
    const int k = a.order;
    if (legs.empty()) throw std::invalid_argument("apply_on_legs: empty leg set");
    std::sort(legs.begin(), legs.end());
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i] < 1 || legs[i] > k) throw std::invalid_argument("apply_on_legs: leg out of range");
        if (i > 0 && legs[i] == legs[i - 1]) throw std::invalid_argument("apply_on_legs: duplicate leg");
    }
    if (map.cols != n) throw std::invalid_argument("apply_on_legs: map must act on a single leg (cols == dim)");

    if (map.antilinear) {
        if (static_cast<int>(legs.size()) != k)
            throw std::invalid_argument("apply_on_legs: antilinear map on a proper subset of legs is not defined");
        if (map.rows != n) throw std::invalid_argument("apply_on_legs: antilinear map must be dim x dim");
        TensorElement conj_a = a;
        for (auto& c : conj_a.coeffs) c = std::conj(c);
        LinearMapData lin{map.rows, map.cols, map.matrix, false};
        TensorElement out = conj_a;
        for (int leg = k; leg >= 1; --leg) out = detail::apply_single_leg(lin, leg, out);
        return out;
    }

    // Process legs in descending position so earlier indices stay valid when a
    // leg expands or disappears.
    TensorElement out = a;
    for (auto it = legs.rbegin(); it != legs.rend(); ++it) out = detail::apply_single_leg(map, *it, out);
    return out;
}

/// Applies an n -> n^m map to an order-1 element (the m = 1 case is a matvec).
inline TensorElement apply_map(const LinearMapData& map, const TensorElement& x) {
    if (x.order != 1) throw std::invalid_argument("apply_map: expected order-1 element");
    return apply_on_legs(map, {1}, x);
}

/// Evaluates a linear functional (1 x n map) on an order-1 element.
inline cplx functional_value(const LinearMapData& map, const TensorElement& x) {
    if (map.rows != 1 || map.cols != x.alg->dim || x.order != 1)
        throw std::invalid_argument("functional_value: shape mismatch");
    cplx acc{0, 0};
    for (int c = 0; c < map.cols; ++c)
        acc += map.at(0, c) * (map.antilinear ? std::conj(x.coeffs[static_cast<std::size_t>(c)]) : x.coeffs[static_cast<std::size_t>(c)]);
    return acc;
}

// ── inversion via the left regular representation ─────────────────────────────

inline Eigen::MatrixXcd regular_representation(const TensorElement& a) {
    const std::int64_t N = static_cast<std::int64_t>(a.coeffs.size());
    Eigen::MatrixXcd M(N, N);
    for (std::int64_t j = 0; j < N; ++j) {
        TensorElement col = tensor_mul(a, basis_tensor(a.alg, j, a.order));
        for (std::int64_t i = 0; i < N; ++i) M(i, j) = col.coeffs[static_cast<std::size_t>(i)];
    }
    return M;
}

/// Two-sided inverse in H^⊗k. Solves L(a)x = 1^⊗k, then verifies x·a = 1^⊗k.
inline TensorElement invert(const TensorElement& a, const ToleranceConfig& tol = {}) {
    Eigen::MatrixXcd M = regular_representation(a);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible())
        throw SingularElement("invert: regular representation is rank-deficient (rank " +
                              std::to_string(lu.rank()) + " of " + std::to_string(M.rows()) + ")");
    TensorElement one = unit_tensor(a.alg, a.order);
    Eigen::VectorXcd rhs(M.rows());
    for (std::int64_t i = 0; i < M.rows(); ++i) rhs(i) = one.coeffs[static_cast<std::size_t>(i)];
    Eigen::VectorXcd x = lu.solve(rhs);
    TensorElement inv = zero_tensor(a.alg, a.order);
    for (std::int64_t i = 0; i < M.rows(); ++i) inv.coeffs[static_cast<std::size_t>(i)] = x(i);

    const double scale = std::max(max_abs(a), max_abs(inv));
    const double r_right = max_abs_diff(tensor_mul(a, inv), one);
    const double r_left = max_abs_diff(tensor_mul(inv, a), one);
    if (!tol.pass(std::max(r_right, r_left), scale))
        throw RightInverseMismatch("invert: solved inverse fails the two-sided check (residual " +
                                   std::to_string(std::max(r_right, r_left)) + ")");
    return inv;
}

// ── sandwich products ─────────────────────────────────────────────────────────

/// Σ_I T[I] · e_{i_1} · mids[0] · e_{i_2} · mids[1] · … · e_{i_k}  (an order-1 element).
/// Any leg maps must already be applied to T.
inline TensorElement collapse_product(const TensorElement& T, const std::vector<TensorElement>& mids) {
    const int k = T.order;
    const int n = T.alg->dim;
    if (static_cast<int>(mids.size()) != k - 1)
        throw std::invalid_argument("collapse_product: need order-1 mids between consecutive legs");
    TensorElement out = zero_tensor(T.alg, 1);

    // depth-first over digit prefixes, sharing partial products
    auto rec = [&](auto&& self, int t, std::int64_t prefix, const TensorElement& partial) -> void {
        for (int d = 0; d < n; ++d) {
            TensorElement p = tensor_mul(partial, basis_tensor(T.alg, d));
            std::int64_t idx = prefix * n + d;
            if (t == k - 1) {
                // leaf: scale by the stored coefficient
                cplx c = T.coeffs[static_cast<std::size_t>(idx)];
                if (c != cplx{0, 0})
                    for (int i = 0; i < n; ++i) out.coeffs[static_cast<std::size_t>(i)] += c * p.coeffs[static_cast<std::size_t>(i)];
            } else {
                self(self, t + 1, idx, tensor_mul(p, mids[static_cast<std::size_t>(t)]));
            }
        }
    };
    rec(rec, 0, 0, unit_tensor(T.alg, 1));
    return out;
}

/// Order-1 product of elements a·b (order 1 each).
inline TensorElement mul1(const TensorElement& a, const TensorElement& b) {
    if (a.order != 1 || b.order != 1) throw std::invalid_argument("mul1: expected order-1 elements");
    return tensor_mul(a, b);
}

}  // namespace qhstar
