// Command-line front end: structure verification, twisting, canonical twists,
// operator computation and star/quasi-triangular classification over the JSON
// algebra format.
//
// Exit codes: 0 all checks pass, 1 some identity fails, 2 malformed input.

#include <iostream>

#include <CLI11.hpp>

#include <qhstar/qhstar.hpp>

namespace {

using namespace qhstar;

struct SuiteRun {
    std::vector<std::pair<std::string, CheckReport>> suites;
    bool overall = true;

    void add(const std::string& name, CheckReport rep) {
        overall = overall && rep.overall;
        suites.emplace_back(name, std::move(rep));
    }
};

SuiteRun run_suites(const LoadedSpec& spec, const std::string& which) {
    SuiteRun run;
    const bool all = which == "all";
    if (all || which == "qba") run.add("qba", check_qba(spec.H, spec.tol));
    if (all || which == "antipode") run.add("antipode", check_antipode(spec.H, spec.tol));
    if ((all || which == "star") && spec.star) {
        run.add("star", check_star_algebra(spec.H, *spec.star, spec.tol));
        if (!omega_is_trivial(spec.H, *spec.star, spec.tol))
            run.add("star", check_star_qha(spec.H, *spec.star, spec.tol));
    }
    if ((all || which == "qt") && spec.rmatrix) run.add("qt", check_quasi_triangular(spec.H, *spec.rmatrix, spec.tol));
    if (!all && which == "star" && !spec.star)
        throw SpecFileError("suite 'star' requested but the file has no 'dagger' section");
    if (!all && which == "qt" && !spec.rmatrix)
        throw SpecFileError("suite 'qt' requested but the file has no 'r_matrix' section");
    return run;
}

void print_run(const SuiteRun& run, bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [name, rep] : run.suites)
            for (const auto& rec : report_to_json(name, rep)) arr.push_back(rec);
        std::cout << arr.dump(1) << "\n";
    } else {
        for (const auto& [name, rep] : run.suites) std::cout << format_report_lines(name, rep);
    }
}

void print_element(const std::string& label, const TensorElement& x) {
    std::cout << label << " = [";
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << x.coeffs[i].real() << (x.coeffs[i].imag() < 0 ? "" : "+") << x.coeffs[i].imag() << "i";
    }
    std::cout << "]\n";
}

TwistData resolve_twist(const std::string& spec, const LoadedSpec& input) {
    if (spec == "identity") return identity_twist(input.H.alg);
    if (spec.rfind("random:", 0) == 0) return random_twist(input.H, std::stoull(spec.substr(7)));
    if (spec.rfind("diagonal:", 0) == 0) return diagonal_character_twist(input.H, std::stoull(spec.substr(9)));
    return load_twist_file(spec, input.H, input.tol);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional quasi-Hopf star-algebra verification"};
    app.require_subcommand(1);

    std::string file, twist_spec, out_path, suite = "all", example_name;
    double tol_override = -1.0;
    bool as_json = false, second = false;
    std::vector<long long> example_params;

    auto* c_check = app.add_subcommand("check", "run identity suites on an algebra file");
    c_check->add_option("file", file)->required();
    c_check->add_option("--tol", tol_override, "override atol and rtol");
    c_check->add_option("--suite", suite)->check(CLI::IsMember({"qba", "antipode", "star", "qt", "all"}));
    c_check->add_flag("--json", as_json, "emit records as a JSON array");

    auto* c_twist = app.add_subcommand("twist", "write the structure twisted by F");
    c_twist->add_option("file", file)->required();
    c_twist->add_option("--twist", twist_spec, "twist file or identity|random:SEED|diagonal:SEED")->required();
    c_twist->add_option("-o,--out", out_path)->required();

    auto* c_drin = app.add_subcommand("drinfeld", "compute the canonical twist and its verification report");
    c_drin->add_option("file", file)->required();
    c_drin->add_flag("--second", second, "emit the S-inverse counterpart instead");
    c_drin->add_option("-o,--out", out_path)->required();

    auto* c_ops = app.add_subcommand("operators", "compute w, w-bar, c, u, z_u with their identity residuals");
    c_ops->add_option("file", file)->required();

    auto* c_cls = app.add_subcommand("classify", "star/quasi-triangular classification");
    c_cls->add_option("file", file)->required();

    auto* c_ex = app.add_subcommand("example", "write a built-in example");
    c_ex->add_option("name", example_name)->required();
    c_ex->add_option("params", example_params, "integer parameters (n, k or seed)");
    c_ex->add_option("-o,--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_check) {
            ToleranceConfig base_tol;
            if (tol_override >= 0.0) base_tol = ToleranceConfig{tol_override, tol_override};
            LoadedSpec spec = load_spec_file(file, base_tol);
            if (tol_override >= 0.0) spec.tol = ToleranceConfig{tol_override, tol_override};
            SuiteRun run = run_suites(spec, suite);
            print_run(run, as_json);
            return run.overall ? 0 : 1;
        }
        if (*c_twist) {
            LoadedSpec spec = load_spec_file(file);
            TwistData F = resolve_twist(twist_spec, spec);
            QuasiHopfData HF = twist_structure(spec.H, F);
            std::optional<StarData> starF;
            if (spec.star) starF = star_twist(spec.H, *spec.star, F);
            std::optional<RMatrixData> rF;
            if (spec.rmatrix)
                rF = RMatrixData{mul(swap_legs(F.element), spec.rmatrix->r, F.inverse),
                                 mul(F.element, spec.rmatrix->r_inverse, swap_legs(F.inverse))};
            std::string name = (spec.name.empty() ? std::string("twisted") : spec.name + "-twisted") + "[" +
                               twist_spec + "]";
            write_json_file(out_path, bundle_to_json(HF, starF, rF, name));
            return 0;
        }
        if (*c_drin) {
            LoadedSpec spec = load_spec_file(file);
            CheckReport rep = verify_drinfeld(spec.H, spec.tol);
            std::cout << format_report_lines("drinfeld", rep);
            TwistData F = second ? second_drinfeld_twist(spec.H, spec.tol) : drinfeld_twist(spec.H, spec.tol);
            write_json_file(out_path, twist_to_json(F));
            return rep.overall ? 0 : 1;
        }
        if (*c_ops) {
            LoadedSpec spec = load_spec_file(file);
            bool ok = true;
            if (spec.star) {
                OperatorSet ops = compute_operator_set(spec.H, *spec.star, spec.tol);
                print_element("w", ops.w);
                print_element("w_bar", ops.w_bar);
                print_element("c", ops.c);
                CheckReport rep = verify_operator_ledger(spec.H, *spec.star, ops, spec.tol);
                std::cout << format_report_lines("operators", rep);
                ok = ok && rep.overall;
            } else {
                std::cout << "operators.w skipped (no dagger section)\n";
            }
            if (spec.rmatrix) {
                auto [u, u_inv] = compute_u_pair(spec.H, *spec.rmatrix, spec.tol);
                print_element("u", u);
                TensorElement zu = central_zu(spec.H, u, spec.tol);
                print_element("z_u", zu);
                CheckReport rep;
                rep.add("zu-central", centrality_residual(spec.H, zu), spec.tol.threshold(std::max(1.0, max_abs(zu))));
                if (spec.star) {
                    OperatorSet ops = compute_operator_set(spec.H, *spec.star, spec.tol);
                    rep.merge(verify_qt_star_ledger(spec.H, *spec.star, *spec.rmatrix, ops, spec.tol));
                }
                std::cout << format_report_lines("qt-operators", rep);
                ok = ok && rep.overall;
            }
            return ok ? 0 : 1;
        }
        if (*c_cls) {
            LoadedSpec spec = load_spec_file(file);
            if (!spec.star || !spec.rmatrix)
                throw SpecFileError("classify requires both 'dagger' and 'r_matrix' sections");
            QtClassification cls = classify_star_qt(spec.H, *spec.star, *spec.rmatrix, spec.tol);
            std::cout << to_string(cls.kind) << "\n";
            std::cout << "residual_I=" << std::scientific << cls.residual_I
                      << " residual_II=" << std::scientific << cls.residual_II << "\n";
            return 0;
        }
        if (*c_ex) {
            ExampleBundle b = make_example(example_name, example_params);
            write_json_file(out_path, bundle_to_json(b));
            return 0;
        }
    } catch (const SpecFileError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
