// Acceptance suite: end-to-end criteria at fixed tolerances, one verdict line
// per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <qhstar/qhstar.hpp>

using namespace qhstar;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void verdict(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << std::setw(2) << number << " [" << name << "] " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << x;
    return os.str();
}

double report_worst(const CheckReport& rep) { return rep.max_residual(); }

// ── 1: star bootstrap over twisted group algebras ────────────────────────────
void criterion_bootstrap() {
    Timer t;
    double worst = 0.0;
    bool ok = true;
    for (int n : {2, 3, 4, 6}) {
        auto base = example_group_hopf_star(n);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            TwistData F = diagonal_character_twist(base.H, seed * 977 + n);
            QuasiHopfData HF = twist_structure(base.H, F);
            TensorElement ffd = tensor_mul(F.element, dagger_all(*base.star, F.element));
            StarData st{base.star->dagger, TwistData{invert(ffd), ffd}};
            for (const CheckReport& rep : {check_qba(HF), check_antipode(HF), check_star_qha(HF, st)}) {
                worst = std::max(worst, report_worst(rep));
                ok = ok && rep.overall;
            }
        }
    }
    double secs = t.seconds();
    ok = ok && worst < 1e-9 && secs < 5.0;
    verdict(1, "star bootstrap, 4 group sizes x 20 twists", ok,
            "max residual " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ── 2: pentagon oracle ────────────────────────────────────────────────────────
void criterion_pentagon() {
    Timer t;
    auto good = example_dual_group_cocycle(3);
    CheckReport rep_good = check_qba(good.H);
    bool ok = rep_good.overall && check_antipode(good.H).overall;

    auto bad = example_broken_pentagon(3, 424242);
    CheckReport rep_bad = check_qba(bad.H);
    const CheckEntry* pent = rep_bad.find("pentagon");
    ok = ok && pent && !pent->passed && rep_bad.all_pass_except({"pentagon"});
    double secs = t.seconds();
    ok = ok && secs < 1.0;
    verdict(2, "pentagon holds iff the cochain closes", ok,
            "good " + fmt(report_worst(rep_good)) + ", broken pentagon residual " +
                (pent ? fmt(pent->max_residual) : std::string("-")) + ", " + fmt(secs) + " s");
}

// ── 3: canonical-twist self-consistency ──────────────────────────────────────
void criterion_drinfeld() {
    Timer t;
    double worst = 0.0;
    bool ok = true;
    for (auto b : {example_dual_group_cocycle(3), example_char_twisted_star(4, 11)}) {
        CheckReport rep = verify_drinfeld(b.H);
        worst = std::max(worst, report_worst(rep));
        ok = ok && rep.overall;
    }
    double secs = t.seconds();
    ok = ok && worst < 1e-9 && secs < 10.0;
    verdict(3, "canonical twist: variants, inverse, primed structure", ok,
            "max residual " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ── 4: transport law of the inverse canonical twist ──────────────────────────
void criterion_twist_law() {
    double worst = 0.0;
    bool ok = true;
    for (auto b : {example_dual_group_cocycle(3), example_char_twisted_star(4, 11)}) {
        TwistData Fd = drinfeld_twist(b.H);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            CheckReport rep = verify_drinfeld_twist_law(b.H, Fd, random_twist(b.H, seed * 31 + 7));
            worst = std::max(worst, report_worst(rep));
            ok = ok && rep.overall;
        }
    }
    ok = ok && worst < 1e-9;
    verdict(4, "inverse canonical twist transports as G F' (S⊗S)G^T", ok, "max residual " + fmt(worst));
}

// ── 5: operator ledger ────────────────────────────────────────────────────────
void criterion_operator_ledger() {
    bool ok = true;
    double worst = 0.0;
    auto b = example_char_twisted_star(4, 11);
    try {
        OperatorSet ops = compute_operator_set(b.H, *b.star);  // explicit forms, inverses, mediation
        CheckReport rep = verify_operator_ledger(b.H, *b.star, ops);
        worst = std::max(worst, report_worst(rep));
        ok = ok && rep.overall;
        CheckReport conj = conjugate_twisted_canonicals(b.H, *b.star, random_twist(b.H, 5), ops);
        CheckReport conj_dag = conjugate_twisted_canonicals(b.H, *b.star, dagger_twist(*b.star, b.star->omega), ops);
        worst = std::max({worst, report_worst(conj), report_worst(conj_dag)});
        ok = ok && conj.overall && conj_dag.overall;
    } catch (const std::exception& e) {
        ok = false;
    }
    double hopf_worst = 0.0;
    for (int n : {2, 3, 4, 6}) {
        auto h = example_group_hopf_star(n);
        OperatorSet ops = compute_operator_set(h.H, *h.star);
        TensorElement one1 = unit_tensor(h.H.alg, 1);
        hopf_worst = std::max({hopf_worst, max_abs_diff(ops.w, one1), max_abs_diff(ops.w_bar, one1),
                               max_abs_diff(ops.c, one1)});
    }
    ok = ok && worst < 1e-9 && hopf_worst < 1e-12;
    verdict(5, "mediator ledger; trivial mediator on plain structures", ok,
            "ledger " + fmt(worst) + ", plain-case deviation " + fmt(hopf_worst));
}

// ── 6: conjugates of the canonical twists ─────────────────────────────────────
void criterion_twist_conjugates() {
    auto b = example_char_twisted_star(4, 11);
    OperatorSet ops = compute_operator_set(b.H, *b.star);
    DrinfeldSet ds = compute_drinfeld_set(b.H);
    CheckReport rep = verify_conjugation_ledger(b.H, *b.star, ops, ds);
    double worst = report_worst(rep);
    bool ok = rep.overall && worst < 1e-9;
    for (const char* name : {"canonical-twist-conjugate", "second-twist-conjugate", "primed-canonical-twist",
                             "zero-canonical-twist"}) {
        const CheckEntry* e = rep.find(name);
        ok = ok && e && e->passed;
    }
    verdict(6, "conjugates of both canonical twists and their carried elements", ok, "max residual " + fmt(worst));
}

// ── 7: scaling-operator placement adjudication ────────────────────────────────
void criterion_placement() {
    auto b = example_char_twisted_star(4, 11);
    OperatorSet ops = compute_operator_set(b.H, *b.star);
    DrinfeldSet ds = compute_drinfeld_set(b.H);
    // guard: the mediator square must be distinguishable from 1 on this example
    double wsq = max_abs_diff(mul1(ops.w, ops.w), unit_tensor(b.H.alg, 1));
    PlacementProbe probe = probe_commutant_placement(b.H, *b.star, ops, ds);
    bool pass_winv = probe.residual_with_W_inv < 1e-9;
    bool pass_w = probe.residual_with_W < 1e-9;
    bool ok = (pass_winv != pass_w) && wsq > 1e-3;
    std::string which = pass_winv ? "inverse placement is the identity" : "direct placement is the identity";
    verdict(7, "commutant normalization: exactly one scaling placement", ok,
            which + "; W " + fmt(probe.residual_with_W) + ", W-inv " + fmt(probe.residual_with_W_inv));
}

// ── 8: quasi-triangular ledger ────────────────────────────────────────────────
void criterion_qt_ledger() {
    bool ok = true;
    std::string detail;
    {
        auto bq = example_bicharacter_qt(3, 1);
        QtClassification cls = classify_star_qt(bq.H, *bq.star, *bq.rmatrix);
        double ratio = cls.residual_II / std::max(cls.residual_I, 1e-300);
        ok = ok && cls.kind == QtKind::TypeI && ratio > 1e3;
        TensorElement u = compute_u(bq.H, *bq.rmatrix);  // verifies S²(a) = u a u⁻¹ internally
        TensorElement zu = central_zu(bq.H, u);
        double r_unitary = max_abs_diff(dag1(*bq.star, zu), invert(zu));
        ok = ok && r_unitary < 1e-9;
        detail += "bicharacter TypeI ratio " + fmt(ratio) + ", unitary-law " + fmt(r_unitary);
    }
    {
        auto z2 = example_z2_triangular();
        QtClassification cls = classify_star_qt(z2.H, *z2.star, *z2.rmatrix);
        ok = ok && cls.kind == QtKind::Both;
        TensorElement u = compute_u(z2.H, *z2.rmatrix);
        TensorElement zu = central_zu(z2.H, u);
        double r_selfadj = max_abs_diff(dag1(*z2.star, zu), zu);
        ok = ok && r_selfadj < 1e-9;
        detail += "; triangular Both, self-adjoint-law " + fmt(r_selfadj);
    }
    verdict(8, "type classification and central-element conjugation laws", ok, detail);
}

// ── 9: classification is twist invariant ─────────────────────────────────────
void criterion_type_invariance() {
    auto bq = example_bicharacter_qt(3, 1);
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        TwistData F = (seed % 2 == 0) ? random_twist(bq.H, seed * 13 + 5)
                                      : diagonal_character_twist(bq.H, seed * 13 + 5);
        auto [H2, st2, R2] = twist_qt_star(bq.H, *bq.star, *bq.rmatrix, F);
        ok = ok && classify_star_qt(H2, st2, R2).kind == QtKind::TypeI;
    }
    verdict(9, "type I survives 20 seeded twists", ok, "");
}

// ── 10: mediator universality ─────────────────────────────────────────────────
void criterion_w_universality() {
    auto b = example_char_twisted_star(4, 11);
    OperatorSet ops = compute_operator_set(b.H, *b.star);
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TwistData G = random_twist(b.H, seed * 101 + 3);
        OperatorSet moved = compute_operator_set(twist_structure(b.H, G), star_twist(b.H, *b.star, G));
        worst = std::max(worst, max_abs_diff(moved.w, ops.w));
    }
    verdict(10, "mediator unchanged under 10 twists", worst < 1e-9, "max deviation " + fmt(worst));
}

// ── 11: command-line contract ─────────────────────────────────────────────────
int run_cli(const std::string& args, std::string& out) {
    static const std::string bin = QHSTAR_CLI_PATH;
    fs::path of = fs::temp_directory_path() / "qhstar_acc_stdout.txt";
    int rc = std::system((bin + " " + args + " >" + of.string() + " 2>&1").c_str());
    std::ifstream in(of);
    std::ostringstream os;
    os << in.rdbuf();
    out = os.str();
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void criterion_cli() {
    bool ok = true;
    std::string detail;
    fs::path dir = fs::temp_directory_path();
    fs::path z2 = dir / "qhstar_acc_z2.json";
    fs::path bq = dir / "qhstar_acc_bq.json";
    fs::path broken = dir / "qhstar_acc_broken.json";
    write_json_file(z2.string(), bundle_to_json(example_z2_triangular()));
    write_json_file(bq.string(), bundle_to_json(example_bicharacter_qt(3, 1)));
    write_json_file(broken.string(), bundle_to_json(example_broken_pentagon(3, 424242)));

    std::string out;
    int rc = run_cli("check " + z2.string(), out);
    ok = ok && rc == 0;
    detail += "check=" + std::to_string(rc);

    rc = run_cli("classify " + bq.string(), out);
    ok = ok && rc == 0 && out.rfind("TypeI", 0) == 0;
    detail += " classify=" + std::to_string(rc);

    rc = run_cli("check " + broken.string(), out);
    bool named = out.find("qba.pentagon") != std::string::npos && out.find("FAIL") != std::string::npos;
    ok = ok && rc == 1 && named;
    detail += " broken=" + std::to_string(rc);

    // byte-exact round trip through the file format
    auto b = example_char_twisted_star(4, 11);
    nlohmann::json j1 = bundle_to_json(b);
    fs::path rt = dir / "qhstar_acc_rt.json";
    write_json_file(rt.string(), j1);
    LoadedSpec spec = load_spec_file(rt.string());
    nlohmann::json j2 = bundle_to_json(spec.H, spec.star, spec.rmatrix, spec.name, &spec.seed);
    bool bit_exact = j1.dump() == j2.dump();
    ok = ok && bit_exact;
    detail += std::string(" roundtrip=") + (bit_exact ? "bit-exact" : "mismatch");
    verdict(11, "command-line contract and file round trip", ok, detail);
}

}  // namespace

int main() {
    Timer total;
    criterion_bootstrap();
    criterion_pentagon();
    criterion_drinfeld();
    criterion_twist_law();
    criterion_operator_ledger();
    criterion_twist_conjugates();
    criterion_placement();
    criterion_qt_ledger();
    criterion_type_invariance();
    criterion_w_universality();
    criterion_cli();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << " in " << std::fixed << std::setprecision(2) << total.seconds() << " s\n";
    return failures;
}
