// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the listed
// criteria run (e.g. "acceptance 3 6"). Exit status is 0 iff every selected criterion passes.

#include "index_oracle.hpp"

#include "octalg/identities.hpp"
#include "octalg/random.hpp"
#include "octalg/reference.hpp"
#include "octalg/report.hpp"
#include "octalg/super_affine.hpp"
#include "octalg/three_algebra.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace octalg;

namespace {

struct Outcome {
    bool pass{true};
    std::vector<std::string> details;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            details.push_back(what);
        }
    }
    void note(const std::string &what) { details.push_back(what); }
};

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string kname(AlgebraKind k) { return std::string(kind_name(k)); }

void require_check(Outcome &o, AlgebraKind k, const CheckResult &r) {
    o.require(r.pass(), kname(k) + " " + r.name + ": " + std::to_string(r.failures) + " failures, first " +
                            r.first_failure);
}

void within(Outcome &o, const Stopwatch &w, double limit) {
    const double s = w.seconds();
    o.require(s < limit, "took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s");
}

Outcome table_consistency() {
    Outcome o;
    Stopwatch w;
    for (auto k : kAllKinds) {
        const auto v = check_table(cayley_table(k));
        o.require(v.empty(), kname(k) + " table: " + (v.empty() ? "" : v.front().message));
        const auto c = unified_product_crosscheck(cayley_table(k));
        o.require(c.pass() && c.pairs_checked == 64, kname(k) + " unified product cross-check");
    }
    within(o, w, 1.0);
    return o;
}

Outcome structure_data() {
    Outcome o;
    for (auto k : kAllKinds) {
        const auto &t = structure_tensors(k);
        for (const auto &r : {compare_gamma_reference(t), compare_b_reference(t), compare_B_reference(t)}) {
            require_check(o, k, r);
            for (const auto &n : r.notes) {
                o.note(kname(k) + " " + r.name + ": " + n);
            }
        }
    }
    return o;
}

Outcome appendix_identities() {
    Outcome o;
    Stopwatch w;
    std::vector<IdentityReport> reports[2];
    for (std::size_t i = 0; i < 2; ++i) {
        for (auto id : all_identities()) {
            reports[i].push_back(verify_identity(kAllKinds[i], id));
        }
    }
    within(o, w, 30.0);

    const auto &oct = structure_tensors(AlgebraKind::Octonion);
    o.require(b_squared(oct) == -42, "octonion b^2 = " + std::to_string(b_squared(oct)));
    o.require(B_squared(oct) == 168, "octonion B^2 = " + std::to_string(B_squared(oct)));
    for (const auto &r : reports[0]) {
        if (!r.pass()) {
            const auto &p = r.readings.front();
            std::string d = "octonion " + identity_label(r.id) + " nonzero residuals (" +
                            std::string(reading_name(p.reading)) + " " + std::to_string(p.nonzero) + "/" +
                            std::to_string(p.tuples);
            for (std::size_t i = 1; i < r.readings.size(); ++i) {
                d += ", " + std::string(reading_name(r.readings[i].reading)) + " " +
                     std::to_string(r.readings[i].nonzero) + "/" + std::to_string(r.readings[i].tuples);
            }
            o.require(false, d + ")");
        }
    }

    const auto &split = structure_tensors(AlgebraKind::SplitOctonion);
    o.require(b_squared(split) == -42, "split b^2 = " + std::to_string(b_squared(split)));
    const auto tables = oracle::tables_from(cayley_table(AlgebraKind::SplitOctonion));
    std::size_t split_nonzero = 0;
    for (auto id : all_identities()) {
        for (auto rd : readings_for(id)) {
            std::map<std::string, std::string> rename;
            if (rd == Reading::TauAsLambda) {
                rename["tau"] = "lambda";
            }
            const oracle::Equation eq(std::string(identity_formula(id)), rename);
            const auto expected = eq.residuals(tables, free_indices(id, rd));
            const auto got = identity_residuals(split, id, rd);
            std::size_t diff = 0;
            for (std::size_t i = 0; i < expected.size(); ++i) {
                diff += got.at(i) != make_rational(expected[i], eq.denominator()) ? 1 : 0;
            }
            o.require(diff == 0 && got.size() == expected.size(),
                      "split " + identity_label(id) + " differs from the oracle on " + std::to_string(diff) +
                          " tuples");
            split_nonzero += rd == Reading::Printed && got.nonzero_count() ? 1 : 0;
        }
    }
    o.note("split residuals match the oracle; " + std::to_string(split_nonzero) +
           " identities have nonzero residuals as printed");
    return o;
}

Outcome malcev() {
    Outcome o;
    Stopwatch w;
    for (auto k : kAllKinds) {
        int bad = 0;
        for_each_tuple<3>(0, 7, [&](const auto &t) {
            bad += malcev_check(k, Element::basis(t[0]), Element::basis(t[1]), Element::basis(t[2])).pass ? 0 : 1;
        });
        ElementSampler rng(0);
        for (int i = 0; i < 1000; ++i) {
            bad += malcev_check(k, rng.element(), rng.element(), rng.element()).pass ? 0 : 1;
        }
        o.require(bad == 0, kname(k) + ": " + std::to_string(bad) + " violations");
    }
    within(o, w, 5.0);
    return o;
}

Outcome jacobian_relation() {
    Outcome o;
    for (auto k : kAllKinds) {
        const auto r = jacobian_tensor_check(k);
        o.require(!r.first_violation && r.triples_checked == 343, kname(k) + " J = -3 B E");
        o.require(!r.first_element_violation && r.element_triples_checked == 343, kname(k) + " J(x,y,z) = 3 B_XYZE");
    }
    return o;
}

Outcome lie3_axioms() {
    Outcome o;
    Stopwatch w;
    for (auto k : kAllKinds) {
        const auto fi = sweep_fundamental_identity(k);
        o.require(fi.checked == 32768, "fundamental identity coverage");
        require_check(o, k, fi);
        const auto mc = sweep_metric_compatibility(k, 0, 0);
        o.require(mc.checked == 4096, "metric compatibility coverage");
        require_check(o, k, mc);
        require_check(o, k, sweep_additional_symmetry(k));
        const auto lb = sweep_leibniz(k);
        o.require(lb.checked == 4096, "Leibniz coverage");
        require_check(o, k, lb);
    }
    within(o, w, 60.0);
    return o;
}

Outcome derivation_dual_path() {
    Outcome o;
    for (auto k : kAllKinds) {
        require_check(o, k, sweep_derivation_dual_path(k, 0, 0));
        require_check(o, k, sweep_operator_closed_forms(k));
    }
    return o;
}

Outcome f_constants() {
    Outcome o;
    for (auto k : kAllKinds) {
        const FTensor &f = f_tensor(k);
        require_check(o, k, f_zero_patterns(f));
        const auto sym = f_symmetry_violations(f);
        o.require(sym.empty(), kname(k) + " f pair symmetries: " + (sym.empty() ? "" : sym.front()));
        const auto ref = compare_f_reference(f);
        if (ref.global_sign) {
            o.note(kname(k) + " global sign " + std::to_string(*ref.global_sign));
        }
        o.require(ref.global_sign.has_value(), kname(k) + ": no global sign fits the listed f values");
        for (const auto &m : ref.mismatches) {
            const auto &i = m.indices;
            o.require(false, kname(k) + " f_{" + std::to_string(i[0]) + std::to_string(i[1]) + std::to_string(i[2]) +
                                 std::to_string(i[3]) + "} computed " + to_string(f.f(i[0], i[1], i[2], i[3])) +
                                 ", listed " + std::to_string(m.expected));
        }
        for (const auto &p : ref.pair_mismatches) {
            o.require(false, kname(k) + " " + p);
        }
        const auto d = decompose_f(f);
        o.require(d.exact(), kname(k) + " t+p reconstruction");
        const auto c = coset_correspondence(k);
        o.require(c.pass() && c.entries.size() == 7, kname(k) + " coset correspondence");
    }
    return o;
}

Outcome super_affine() {
    Outcome o;
    Stopwatch w;
    for (auto k : kAllKinds) {
        for (const auto &c : BracketConvention::all()) {
            for (const auto &r : {graded_antisymmetry_check(k, c, 2), bracket_invariants_check(k, c, 2),
                                  mode_zero_homomorphism_check(k, c)}) {
                o.require(r.pass(), kname(k) + " " + c.name() + " " + r.name + ": " + r.first_failure);
            }
        }
        std::vector<std::string> passers;
        for (const auto &out : convention_search(k, 2)) {
            if (out.pass()) {
                passers.push_back(out.convention.name());
            }
        }
        o.require(!passers.empty(), kname(k) + ": no convention passes the graded Malcev sweep");
        o.note(kname(k) + ": " + std::to_string(passers.size()) + " passing conventions");
    }
    within(o, w, 120.0);
    return o;
}

Outcome negative_path_and_determinism() {
    Outcome o;
    std::ifstream in(std::string(OCTALG_FIXTURE_DIR) + "/corrupted_octonion.json");
    std::ostringstream ss;
    ss << in.rdbuf();
    SuiteSelection bad;
    bad.algebra = AlgebraChoice::Octonion;
    bad.suites = {Suite::Tables};
    bad.table_override = load_table_json(ss.str());
    const RunReport r = run(bad);
    o.require(r.exit_code() == 1, "corrupted table exit code " + std::to_string(r.exit_code()));
    o.require(r.markdown().find("E1*E2") != std::string::npos, "corrupted table report does not name E1*E2");

    SuiteSelection all;
    all.seed = 7;
    const RunReport a = run(all);
    const RunReport b = run(all);
    o.require(a.markdown() == b.markdown() && a.json() == b.json(), "seed 7 reports differ between runs");

    const Element zd = multiply(AlgebraKind::SplitOctonion, Element::basis(0) + Element::basis(1),
                                Element::basis(0) - Element::basis(1));
    o.require(zd.is_zero(), "split (E0+E1)(E0-E1) = " + to_string(zd));
    return o;
}

struct Criterion {
    int number;
    const char *title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria{
        {1, "table consistency", table_consistency},
        {2, "structure data reproduction", structure_data},
        {3, "contraction identities", appendix_identities},
        {4, "Malcev identity", malcev},
        {5, "Jacobian relation", jacobian_relation},
        {6, "Lie-3 axioms", lie3_axioms},
        {7, "derivation dual path", derivation_dual_path},
        {8, "f constants", f_constants},
        {9, "super-affine algebra", super_affine},
        {10, "negative path and determinism", negative_path_and_determinism},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    bool all_pass = true;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) {
            continue;
        }
        const Outcome o = c.run();
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.title << "\n";
        for (const auto &d : o.details) {
            std::cout << "    " << d << "\n";
        }
        std::cout.flush();
    }
    return all_pass ? 0 : 1;
}
