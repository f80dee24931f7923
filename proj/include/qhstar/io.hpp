// Self-describing on-disk format: every structure tensor of one algebra in a
// single JSON document. Complex numbers are two-element [re, im] arrays;
// flattening is row-major with leg 1 most significant, matching tensor.hpp.
//
// Required fields: format_version, dim, basis_labels, unit, mult[i][j][k],
// coproduct (per basis element, flattened n²), counit, coassociator (n³),
// antipode (n×n rows), alpha, beta.
// Optional: dagger (n×n rows), omega (n²), r_matrix (n²), tolerance, meta.
// Optional sections gate which check suites apply.

#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "examples.hpp"

namespace qhstar {

struct SpecFileError : std::runtime_error {
    explicit SpecFileError(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

using nlohmann::json;

inline json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline cplx parse_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SpecFileError("field '" + field + "': complex entries must be [re, im] number pairs");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<cplx> parse_complex_vector(const json& j, std::size_t expect, const std::string& field) {
    if (!j.is_array() || j.size() != expect)
        throw SpecFileError("field '" + field + "': expected " + std::to_string(expect) + " entries, got " +
                            (j.is_array() ? std::to_string(j.size()) : std::string("non-array")));
    std::vector<cplx> out(expect);
    for (std::size_t i = 0; i < expect; ++i) out[i] = parse_complex(j[i], field + "[" + std::to_string(i) + "]");
    return out;
}

inline json vector_to_json(const std::vector<cplx>& v) {
    json out = json::array();
    for (const cplx& c : v) out.push_back(to_json(c));
    return out;
}

}  // namespace io_detail

struct LoadedSpec {
    QuasiHopfData H;
    std::optional<StarData> star;
    std::optional<RMatrixData> rmatrix;
    ToleranceConfig tol;
    std::string name;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

inline nlohmann::json bundle_to_json(const QuasiHopfData& H, const std::optional<StarData>& star,
                                     const std::optional<RMatrixData>& rmatrix, const std::string& name = "",
                                     const std::uint64_t* seed = nullptr) {
    using nlohmann::json;
    const int n = H.alg->dim;
    json j;
    j["format_version"] = "1.0";
    j["dim"] = n;
    j["basis_labels"] = H.alg->basis_labels;
    j["unit"] = io_detail::vector_to_json(H.alg->unit);

    json mult = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int k = 0; k < n; ++k) {
            json inner = json::array();
            for (int l = 0; l < n; ++l) inner.push_back(io_detail::to_json(H.alg->m(i, k, l)));
            row.push_back(inner);
        }
        mult.push_back(row);
    }
    j["mult"] = mult;

    json cop = json::array();
    for (int c = 0; c < n; ++c) {
        std::vector<cplx> col(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n * n; ++r) col[static_cast<std::size_t>(r)] = H.coproduct.at(r, c);
        cop.push_back(io_detail::vector_to_json(col));
    }
    j["coproduct"] = cop;
    j["counit"] = io_detail::vector_to_json(H.counit.matrix);
    j["coassociator"] = io_detail::vector_to_json(H.coassociator.coeffs);

    json S = json::array();
    for (int r = 0; r < n; ++r) {
        std::vector<cplx> row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = H.antipode.at(r, c);
        S.push_back(io_detail::vector_to_json(row));
    }
    j["antipode"] = S;
    j["alpha"] = io_detail::vector_to_json(H.alpha.coeffs);
    j["beta"] = io_detail::vector_to_json(H.beta.coeffs);

    if (star) {
        json dg = json::array();
        for (int r = 0; r < n; ++r) {
            std::vector<cplx> row(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = star->dagger.at(r, c);
            dg.push_back(io_detail::vector_to_json(row));
        }
        j["dagger"] = dg;
        j["omega"] = io_detail::vector_to_json(star->omega.element.coeffs);
    }
    if (rmatrix) j["r_matrix"] = io_detail::vector_to_json(rmatrix->r.coeffs);
    if (!name.empty() || seed) {
        nlohmann::json meta;
        if (!name.empty()) meta["name"] = name;
        if (seed) meta["seed"] = *seed;
        j["meta"] = meta;
    }
    return j;
}

inline nlohmann::json bundle_to_json(const ExampleBundle& b) {
    return bundle_to_json(b.H, b.star, b.rmatrix, b.name, &b.seed);
}

inline LoadedSpec load_spec(const nlohmann::json& j, const ToleranceConfig& default_tol = {}) {
    using nlohmann::json;
    auto require = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw SpecFileError(std::string("missing required field '") + field + "'");
        return j.at(field);
    };
    if (!j.is_object()) throw SpecFileError("top level: expected a JSON object");
    std::string version = require("format_version").is_string() ? j["format_version"].get<std::string>() : "";
    if (version != "1.0") throw SpecFileError("field 'format_version': unsupported version '" + version + "'");
    if (!require("dim").is_number_integer() || j["dim"].get<int>() <= 0)
        throw SpecFileError("field 'dim': expected a positive integer");
    const int n = j["dim"].get<int>();
    const std::size_t nn = static_cast<std::size_t>(n);

    std::vector<std::string> labels;
    {
        const json& jl = require("basis_labels");
        if (!jl.is_array() || jl.size() != nn) throw SpecFileError("field 'basis_labels': expected dim strings");
        for (const auto& s : jl) {
            if (!s.is_string()) throw SpecFileError("field 'basis_labels': expected dim strings");
            labels.push_back(s.get<std::string>());
        }
    }
    std::vector<cplx> unit = io_detail::parse_complex_vector(require("unit"), nn, "unit");
    std::vector<cplx> mult(nn * nn * nn);
    {
        const json& jm = require("mult");
        if (!jm.is_array() || jm.size() != nn) throw SpecFileError("field 'mult': expected dim outer rows");
        for (std::size_t i = 0; i < nn; ++i) {
            if (!jm[i].is_array() || jm[i].size() != nn)
                throw SpecFileError("field 'mult[" + std::to_string(i) + "]': expected dim rows");
            for (std::size_t k = 0; k < nn; ++k) {
                auto row = io_detail::parse_complex_vector(jm[i][k], nn,
                                                           "mult[" + std::to_string(i) + "][" + std::to_string(k) + "]");
                for (std::size_t l = 0; l < nn; ++l) mult[(i * nn + k) * nn + l] = row[l];
            }
        }
    }
    AlgebraPtr alg = make_algebra(n, labels, mult, unit);

    LinearMapData D{n * n, n, std::vector<cplx>(nn * nn * nn), false};
    {
        const json& jc = require("coproduct");
        if (!jc.is_array() || jc.size() != nn) throw SpecFileError("field 'coproduct': expected one row per basis element");
        for (std::size_t c = 0; c < nn; ++c) {
            auto col = io_detail::parse_complex_vector(jc[c], nn * nn, "coproduct[" + std::to_string(c) + "]");
            for (std::size_t r = 0; r < nn * nn; ++r) D.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
        }
    }
    LinearMapData eps{1, n, io_detail::parse_complex_vector(require("counit"), nn, "counit"), false};
    TensorElement Phi{alg, 3, io_detail::parse_complex_vector(require("coassociator"), nn * nn * nn, "coassociator")};
    LinearMapData S{n, n, std::vector<cplx>(nn * nn), false};
    {
        const json& js = require("antipode");
        if (!js.is_array() || js.size() != nn) throw SpecFileError("field 'antipode': expected dim rows");
        for (std::size_t r = 0; r < nn; ++r) {
            auto row = io_detail::parse_complex_vector(js[r], nn, "antipode[" + std::to_string(r) + "]");
            for (std::size_t c = 0; c < nn; ++c) S.at(static_cast<int>(r), static_cast<int>(c)) = row[c];
        }
    }
    TensorElement alpha{alg, 1, io_detail::parse_complex_vector(require("alpha"), nn, "alpha")};
    TensorElement beta{alg, 1, io_detail::parse_complex_vector(require("beta"), nn, "beta")};

    LoadedSpec out;
    out.tol = default_tol;
    if (j.contains("tolerance")) {
        const json& jt = j["tolerance"];
        if (!jt.is_object()) throw SpecFileError("field 'tolerance': expected an object");
        if (jt.contains("atol")) out.tol.atol = jt["atol"].get<double>();
        if (jt.contains("rtol")) out.tol.rtol = jt["rtol"].get<double>();
    }
    try {
        out.H = make_qha(alg, D, eps, Phi, S, alpha, beta, out.tol);
    } catch (const SingularElement& e) {
        throw SpecFileError(std::string("structure rejected: ") + e.what());
    }

    if (j.contains("dagger")) {
        const json& jd = j["dagger"];
        if (!jd.is_array() || jd.size() != nn) throw SpecFileError("field 'dagger': expected dim rows");
        LinearMapData dg{n, n, std::vector<cplx>(nn * nn), true};
        for (std::size_t r = 0; r < nn; ++r) {
            auto row = io_detail::parse_complex_vector(jd[r], nn, "dagger[" + std::to_string(r) + "]");
            for (std::size_t c = 0; c < nn; ++c) dg.at(static_cast<int>(r), static_cast<int>(c)) = row[c];
        }
        TwistData omega = identity_twist(alg);
        if (j.contains("omega")) {
            TensorElement om{alg, 2, io_detail::parse_complex_vector(j["omega"], nn * nn, "omega")};
            try {
                omega = make_twist(out.H, om, out.tol);
            } catch (const std::exception& e) {
                throw SpecFileError(std::string("field 'omega': not a twist: ") + e.what());
            }
        }
        out.star = make_star(dg, omega);
    } else if (j.contains("omega")) {
        throw SpecFileError("field 'omega': requires a 'dagger' section");
    }

    if (j.contains("r_matrix")) {
        TensorElement r{alg, 2, io_detail::parse_complex_vector(j["r_matrix"], nn * nn, "r_matrix")};
        try {
            out.rmatrix = make_rmatrix(out.H, r, out.tol);
        } catch (const std::exception& e) {
            throw SpecFileError(std::string("field 'r_matrix': not invertible with co-unit property: ") + e.what());
        }
    }
    if (j.contains("meta") && j["meta"].is_object()) {
        if (j["meta"].contains("name") && j["meta"]["name"].is_string()) out.name = j["meta"]["name"].get<std::string>();
        if (j["meta"].contains("seed") && j["meta"]["seed"].is_number_unsigned()) {
            out.seed = j["meta"]["seed"].get<std::uint64_t>();
            out.has_seed = true;
        }
    }
    return out;
}

inline LoadedSpec load_spec_file(const std::string& path, const ToleranceConfig& default_tol = {}) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecFileError("parse error in '" + path + "': " + e.what());
    }
    return load_spec(j, default_tol);
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw SpecFileError("cannot write '" + path + "'");
    out << j.dump(1) << "\n";
}

// twist documents: {"dim": n, "element": [...], "inverse": [...] (optional)}
inline nlohmann::json twist_to_json(const TwistData& F) {
    nlohmann::json j;
    j["dim"] = F.element.alg->dim;
    j["element"] = io_detail::vector_to_json(F.element.coeffs);
    j["inverse"] = io_detail::vector_to_json(F.inverse.coeffs);
    return j;
}

inline TwistData load_twist(const nlohmann::json& j, const QuasiHopfData& H, const ToleranceConfig& tol = {}) {
    const std::size_t nn = static_cast<std::size_t>(H.alg->dim);
    if (!j.is_object() || !j.contains("element")) throw SpecFileError("twist file: missing 'element'");
    TensorElement el{H.alg, 2, io_detail::parse_complex_vector(j["element"], nn * nn, "element")};
    return make_twist(H, el, tol);
}

inline TwistData load_twist_file(const std::string& path, const QuasiHopfData& H, const ToleranceConfig& tol = {}) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecFileError("parse error in '" + path + "': " + e.what());
    }
    return load_twist(j, H, tol);
}

// ── report output ─────────────────────────────────────────────────────────────

inline std::string format_report_lines(const std::string& suite, const CheckReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        os << suite << "." << e.name;
        os << " residual=" << std::scientific << e.max_residual;
        os << " threshold=" << std::scientific << e.threshold;
        os << (e.passed ? " PASS" : " FAIL") << "\n";
    }
    return os.str();
}

inline nlohmann::json report_to_json(const std::string& suite, const CheckReport& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json r;
        r["suite"] = suite;
        r["name"] = e.name;
        r["residual"] = e.max_residual;
        r["threshold"] = e.threshold;
        r["pass"] = e.passed;
        arr.push_back(r);
    }
    return arr;
}

}  // namespace qhstar
