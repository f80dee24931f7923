// End-to-end runs over a noncommutative base algebra. Every identity chain in
// the calculus multiplies long products whose operand order the abelian
// examples cannot distinguish; C[S_3] under a generic twist does.

#include "test_helpers.hpp"

using namespace qhstar;

namespace {

struct NcFixture {
    QuasiHopfData H;
    StarData st;
    TwistData F;
};

NcFixture twisted_s3(std::uint64_t seed) {
    auto base = oracle::symmetric_group_hopf();
    TwistData F = random_twist(base.H, seed, 0.18);
    TensorElement ffd = tensor_mul(F.element, dagger_all(*base.star, F.element));
    return NcFixture{twist_structure(base.H, F),
                     StarData{base.star->dagger, TwistData{invert(ffd), ffd}}, F};
}

}  // namespace

TEST_CASE("the symmetric-group base passes every suite exactly") {
    auto b = oracle::symmetric_group_hopf();
    // genuinely noncommutative
    TensorElement s01 = basis_tensor(b.H.alg, 1), r = basis_tensor(b.H.alg, 4);
    REQUIRE(max_abs_diff(mul1(s01, r), mul1(r, s01)) > 0.5);
    CHECK(check_qba(b.H).max_residual() == 0.0);
    CHECK(check_antipode(b.H).max_residual() == 0.0);
    CHECK(check_star_algebra(b.H, *b.star).overall);
    CHECK(check_star_qha(b.H, *b.star).overall);
    OperatorSet ops = compute_operator_set(b.H, *b.star);
    CHECK(max_abs_diff(ops.w, unit_tensor(b.H.alg, 1)) < 1e-12);
}

TEST_CASE("a generic twist of the symmetric group keeps every ledger green") {
    NcFixture t = twisted_s3(2027);
    // the twisted coproduct is no longer cocommutative and the coassociator is
    // nontrivial, so operand order matters everywhere below
    REQUIRE(max_abs_diff(t.H.coassociator, unit_tensor(t.H.alg, 3)) > 1e-2);

    SECTION("axiom suites") {
        CHECK(check_qba(t.H).overall);
        CHECK(check_antipode(t.H).overall);
        CheckReport sq = check_star_qha(t.H, t.st);
        INFO(format_report_lines("star", sq));
        CHECK(sq.overall);
    }
    SECTION("mediator ledger") {
        OperatorSet ops = compute_operator_set(t.H, t.st);
        CheckReport rep = verify_operator_ledger(t.H, t.st, ops);
        INFO(format_report_lines("operators", rep));
        CHECK(rep.overall);
        CHECK(rep.max_residual() < 1e-10);
        CheckReport conj = conjugate_twisted_canonicals(t.H, t.st, random_twist(t.H, 5, 0.15), ops);
        CHECK(conj.overall);
    }
    SECTION("canonical-twist machinery") {
        CheckReport rep = verify_drinfeld(t.H);
        INFO(format_report_lines("drinfeld", rep));
        CHECK(rep.overall);
        CHECK(rep.max_residual() < 1e-9);
        OperatorSet ops = compute_operator_set(t.H, t.st);
        DrinfeldSet ds = compute_drinfeld_set(t.H);
        CheckReport led = verify_conjugation_ledger(t.H, t.st, ops, ds);
        INFO(format_report_lines("conjugation", led));
        CHECK(led.overall);
        CHECK(led.max_residual() < 1e-9);
    }
    SECTION("transport of the inverse canonical twist") {
        TwistData Fd = drinfeld_twist(t.H);
        CheckReport rep = verify_drinfeld_twist_law(t.H, Fd, random_twist(t.H, 6, 0.15));
        CHECK(rep.overall);
    }
}

TEST_CASE("quasi-triangular calculus on the twisted symmetric group") {
    auto base = oracle::symmetric_group_hopf();
    RMatrixData R0 = make_rmatrix(base.H, unit_tensor(base.H.alg, 2));  // cocommutative, trivial R
    REQUIRE(check_quasi_triangular(base.H, R0).overall);

    TwistData F = random_twist(base.H, 2028, 0.18);
    auto [H2, st2raw, R2] = twist_qt_star(base.H, *base.star, R0, F);
    // the transported R-matrix now genuinely intertwines a noncocommutative coproduct
    REQUIRE(max_abs_diff(R2.r, unit_tensor(H2.alg, 2)) > 1e-2);
    StarData st2 = st2raw;

    CheckReport qt = check_quasi_triangular(H2, R2);
    INFO(format_report_lines("qt", qt));
    CHECK(qt.overall);
    CHECK(qt.max_residual() < 1e-10);

    QtClassification cls = classify_star_qt(H2, st2, R2);
    CHECK(cls.kind == QtKind::Both);  // triangular before twisting, hence after

    OperatorSet ops = compute_operator_set(H2, st2);
    CheckReport led = verify_qt_star_ledger(H2, st2, R2, ops);
    INFO(format_report_lines("qt-star", led));
    CHECK(led.overall);
    CHECK(led.max_residual() < 1e-10);

    RMatrixData rb = r_bar(H2, st2, R2);
    CHECK(check_quasi_triangular(H2, rb).overall);
}
