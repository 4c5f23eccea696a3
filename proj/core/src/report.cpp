#include "octalg/report.hpp"

#include "octalg/check.hpp"
#include "octalg/identities.hpp"
#include "octalg/random.hpp"
#include "octalg/reference.hpp"
#include "octalg/subalgebra.hpp"
#include "octalg/super_affine.hpp"
#include "octalg/three_algebra.hpp"
#include "octalg/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octalg {

using ojson = nlohmann::ordered_json;

std::string_view library_version() noexcept { return kVersion; }

std::string_view choice_name(AlgebraChoice c) noexcept {
    switch (c) {
    case AlgebraChoice::Octonion:
        return "octonion";
    case AlgebraChoice::Split:
        return "split";
    case AlgebraChoice::Both:
        return "both";
    }
    return "both";
}

std::optional<AlgebraChoice> parse_choice(std::string_view name) noexcept {
    for (auto c : {AlgebraChoice::Octonion, AlgebraChoice::Split, AlgebraChoice::Both}) {
        if (name == choice_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<AlgebraKind> kinds_of(AlgebraChoice c) {
    switch (c) {
    case AlgebraChoice::Octonion:
        return {AlgebraKind::Octonion};
    case AlgebraChoice::Split:
        return {AlgebraKind::SplitOctonion};
    case AlgebraChoice::Both:
        break;
    }
    return {AlgebraKind::Octonion, AlgebraKind::SplitOctonion};
}

std::string_view suite_name(Suite s) noexcept {
    switch (s) {
    case Suite::Tables:
        return "tables";
    case Suite::Tensors:
        return "tensors";
    case Suite::Identities:
        return "identities";
    case Suite::Malcev:
        return "malcev";
    case Suite::Lie3:
        return "lie3";
    case Suite::FConst:
        return "fconst";
    case Suite::SuperAffine:
        return "superaffine";
    }
    return "";
}

std::vector<Suite> all_suites() {
    return {Suite::Tables, Suite::Tensors, Suite::Identities, Suite::Malcev,
            Suite::Lie3,   Suite::FConst,  Suite::SuperAffine};
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
    for (Suite s : all_suites()) {
        if (name == suite_name(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::vector<Suite> parse_suites(const std::vector<std::string> &names) {
    std::set<Suite> chosen;
    for (const auto &n : names) {
        if (n == "all") {
            const auto every = all_suites();
            chosen.insert(every.begin(), every.end());
        } else if (auto s = parse_suite(n)) {
            chosen.insert(*s);
        } else {
            throw std::invalid_argument("unknown suite '" + n + "'");
        }
    }
    return {chosen.begin(), chosen.end()};
}

namespace {

Element E(int i) { return Element::basis(i); }

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
    std::string out;
    for (const auto &p : parts) {
        if (!out.empty()) {
            out += sep;
        }
        out += p;
    }
    return out;
}

std::string digits(const std::vector<int> &idx) {
    std::string s;
    for (int i : idx) {
        s += std::to_string(i);
    }
    return s;
}

ReportLine line_from(const CheckResult &r, bool counted = true) {
    ReportLine l{r.name, r.pass(), counted, r.checked, r.failures, {}};
    std::vector<std::string> parts;
    if (!r.pass()) {
        std::string first = "first failure " + r.first_failure;
        if (r.failures > 1) {
            first += " (" + std::to_string(r.failures) + " failures)";
        }
        parts.push_back(first);
    }
    parts.insert(parts.end(), r.notes.begin(), r.notes.end());
    l.detail = join(parts, "; ");
    return l;
}

ReportLine make_line(std::string check, bool pass, std::size_t checked, std::size_t failures, std::string detail,
                     bool counted = true) {
    return {std::move(check), pass, counted, checked, failures, std::move(detail)};
}

// --- tables ---------------------------------------------------------------

SuiteReport tables_suite(AlgebraKind kind, const SuiteSelection &sel) {
    SuiteReport rep{Suite::Tables, kind, {}, {}, {}};
    const bool overridden = sel.table_override && sel.table_override->kind() == kind;
    const CayleyTable &table = overridden ? *sel.table_override : cayley_table(kind);
    if (overridden) {
        rep.notes.push_back("table rules, cross-check and zero-divisor lines use the supplied table; the "
                            "remaining lines use the built-in table");
    }

    const auto violations = check_table(table);
    std::vector<std::string> msgs;
    for (const auto &v : violations) {
        msgs.push_back(v.message);
    }
    rep.lines.push_back(make_line("table rules (identity, antisymmetry, diagonal)", violations.empty(),
                                  kDim * kDim, violations.size(), join(msgs, "; ")));

    const CrosscheckReport cross = unified_product_crosscheck(table);
    std::string cross_detail = cross.error;
    if (!cross.mismatches.empty()) {
        const auto &m = cross.mismatches.front();
        cross_detail = "E" + std::to_string(m.i) + "*E" + std::to_string(m.j) + ": table " + m.table_value +
                       ", unified " + m.unified_value;
    }
    rep.lines.push_back(make_line("unified product against table", cross.pass(),
                                  static_cast<std::size_t>(cross.pairs_checked),
                                  cross.mismatches.size() + (cross.error.empty() ? 0 : 1), cross_detail));

    rep.lines.push_back(line_from(compare_subalgebra_reference(classify_subalgebras(kind))));

    {
        const Element p = multiply(table, E(0) + E(1), E(0) - E(1));
        const bool split = kind == AlgebraKind::SplitOctonion;
        const bool ok = split ? p.is_zero() : !p.is_zero();
        rep.lines.push_back(make_line(split ? "zero divisor (E0+E1)(E0-E1) = 0" : "(E0+E1)(E0-E1) != 0", ok, 1,
                                      ok ? 0 : 1, "(E0+E1)(E0-E1) = " + to_string(p)));
    }

    ElementSampler rng(sel.seed);
    {
        CheckResult r("alternativity (a,a,b) = (a,b,b) = 0");
        auto test = [&](const Element &a, const Element &b, const std::string &where) {
            ++r.checked;
            if (!associator(kind, a, a, b).is_zero() || !associator(kind, a, b, b).is_zero()) {
                r.fail(where);
            }
        };
        for_each_tuple<2>(0, kDim - 1, [&](const auto &t) { test(E(t[0]), E(t[1]), "basis " + tuple_string(t)); });
        for (int i = 0; i < sel.trials; ++i) {
            test(rng.element(), rng.element(), "random trial " + std::to_string(i));
        }
        rep.lines.push_back(line_from(r));
    }

    const auto flex = flexibility_sweeps(kind);
    rep.lines.push_back(line_from(flex[0]));
    rep.lines.push_back(line_from(flex[1], false));

    {
        CheckResult r("conjugation reverses products");
        auto test = [&](const Element &a, const Element &b, const std::string &where) {
            ++r.checked;
            if (conjugate(multiply(kind, a, b)) != multiply(kind, conjugate(b), conjugate(a))) {
                r.fail(where);
            }
        };
        for_each_tuple<2>(0, kDim - 1, [&](const auto &t) { test(E(t[0]), E(t[1]), "basis " + tuple_string(t)); });
        for (int i = 0; i < sel.trials; ++i) {
            test(rng.element(), rng.element(), "random trial " + std::to_string(i));
        }
        rep.lines.push_back(line_from(r));
    }

    {
        CheckResult r("norm composition N(ab) = N(a)N(b)");
        for (int i = 0; i < sel.trials; ++i) {
            const Element a = rng.element();
            const Element b = rng.element();
            const Element ab = multiply(kind, a, b);
            ++r.checked;
            if (bilinear_form(kind, ab, ab) != bilinear_form(kind, a, a) * bilinear_form(kind, b, b)) {
                r.fail("random trial " + std::to_string(i));
            }
        }
        rep.lines.push_back(line_from(r));
    }

    {
        int pos = 0;
        int neg = 0;
        bool symmetric = true;
        for (int i = 0; i < kDim; ++i) {
            const int s = sgn(bilinear_form(kind, E(i), E(i)));
            pos += s > 0 ? 1 : 0;
            neg += s < 0 ? 1 : 0;
            for (int j = 0; j < kDim; ++j) {
                symmetric = symmetric && bilinear_form(kind, E(i), E(j)) == bilinear_form(kind, E(j), E(i));
            }
        }
        const bool expected = kind == AlgebraKind::Octonion ? pos == 8 && neg == 0 : pos == 4 && neg == 4;
        rep.lines.push_back(make_line("bilinear form (a,b) = Re(a conj b) signature", expected && symmetric,
                                      kDim * kDim, expected && symmetric ? 0 : 1,
                                      "signature (" + std::to_string(pos) + "," + std::to_string(neg) + ")" +
                                          (symmetric ? "" : ", not symmetric")));
    }

    {
        std::size_t checked = 0;
        std::size_t literal_bad = 0;
        std::size_t relation_bad = 0;
        auto test = [&](const Element &a, const Element &b) {
            ++checked;
            const Rational form = bilinear_form(kind, a, b);
            const Rational contracted = dot(kind, a, b);
            literal_bad += form != contracted ? 1 : 0;
            relation_bad += form != a.real() * b.real() - contracted ? 1 : 0;
        };
        for_each_tuple<2>(0, kDim - 1, [&](const auto &t) { test(E(t[0]), E(t[1])); });
        for (int i = 0; i < sel.trials; ++i) {
            test(rng.element(), rng.element());
        }
        std::string detail = std::to_string(literal_bad) + " pairs differ";
        if (relation_bad == 0) {
            detail += "; (a,b) = A_0 B_0 - gamma^{mu nu} A_mu B_nu holds on every pair";
        }
        rep.lines.push_back(make_line("(a,b) = gamma^{mu nu} A_mu B_nu", literal_bad == 0, checked, literal_bad,
                                      detail, false));
    }
    return rep;
}

// --- tensors ----------------------------------------------------------------

SuiteReport tensors_suite(AlgebraKind kind) {
    SuiteReport rep{Suite::Tensors, kind, {}, {}, {}};
    const StructureTensors &t = structure_tensors(kind);
    rep.lines.push_back(line_from(compare_gamma_reference(t)));
    rep.lines.push_back(line_from(compare_b_reference(t)));
    rep.lines.push_back(line_from(compare_B_reference(t)));
    rep.lines.push_back(make_line("b totally antisymmetric", is_totally_antisymmetric(t.b), Tensor3::kSize,
                                  is_totally_antisymmetric(t.b) ? 0 : 1, ""));
    rep.lines.push_back(make_line("B totally antisymmetric", is_totally_antisymmetric(t.B), Tensor4::kSize,
                                  is_totally_antisymmetric(t.B) ? 0 : 1, ""));

    const auto sign = round_trip_sign(t.b, t.gamma);
    rep.lines.push_back(make_line("dual of B returns +-b", sign.has_value(), Tensor3::kSize, sign ? 0 : 1,
                                  sign ? "sign " + std::to_string(*sign) : "no single sign"));
    if (sign) {
        rep.scalars.emplace_back("dual round-trip sign", std::to_string(*sign));
    }
    rep.scalars.emplace_back("epsilon_1234567", "+1");

    const JacobianReport jac = jacobian_tensor_check(kind);
    auto where = [](const std::optional<std::array<int, 3>> &v) {
        return v ? "first failure " + tuple_string(*v) : std::string();
    };
    rep.lines.push_back(make_line("J_{mu nu kappa} = -3 B_{mu nu kappa}^sigma E_sigma", !jac.first_violation,
                                  static_cast<std::size_t>(jac.triples_checked), jac.first_violation ? 1 : 0,
                                  where(jac.first_violation)));
    rep.lines.push_back(make_line("J(x,y,z) = 3 B_{XYZE}", !jac.first_element_violation,
                                  static_cast<std::size_t>(jac.element_triples_checked),
                                  jac.first_element_violation ? 1 : 0, where(jac.first_element_violation)));
    const bool unit = jac.bracket_ratio && *jac.bracket_ratio == 1;
    rep.lines.push_back(make_line("J_{mu nu kappa} = b_{[nu kappa}^lambda b_{mu] lambda E}, unit weight", unit,
                                  static_cast<std::size_t>(jac.triples_checked), unit ? 0 : 1,
                                  jac.bracket_ratio ? "J = " + to_string(*jac.bracket_ratio) + " x bracket"
                                                    : "no single ratio",
                                  false));
    return rep;
}

// --- identities -----------------------------------------------------------------

SuiteReport identities_suite(AlgebraKind kind) {
    SuiteReport rep{Suite::Identities, kind, {}, {}, {}};
    const StructureTensors &t = structure_tensors(kind);
    for (IdentityId id : all_identities()) {
        const IdentityReport ir = verify_identity(t, id);
        std::size_t checked = 0;
        std::vector<std::string> parts;
        for (const auto &rr : ir.readings) {
            checked += rr.tuples;
            std::string s = std::string(reading_name(rr.reading)) + ": ";
            if (rr.holds()) {
                s += "holds on " + std::to_string(rr.tuples) + " tuples";
            } else {
                s += std::to_string(rr.nonzero) + "/" + std::to_string(rr.tuples) + " nonzero";
                std::vector<std::string> samples;
                for (const auto &r : rr.samples) {
                    samples.push_back((r.indices.empty() ? std::string("()") : digits(r.indices)) + " -> " +
                                      to_string(r.value));
                }
                if (!samples.empty()) {
                    s += ", e.g. " + join(samples, ", ");
                }
            }
            parts.push_back(s);
        }
        if (ir.scalar) {
            parts.push_back("value " + to_string(*ir.scalar));
        }
        const std::size_t printed_nonzero = ir.readings.front().nonzero;
        rep.lines.push_back(make_line(identity_label(id) + ": " + std::string(identity_formula(id)), ir.pass(), checked,
                                      ir.pass() ? 0 : printed_nonzero, join(parts, "; ")));
    }
    rep.scalars.emplace_back("b^2", std::to_string(b_squared(t)));
    rep.scalars.emplace_back("B^2", std::to_string(B_squared(t)));
    return rep;
}

// --- malcev -------------------------------------------------------------------

SuiteReport malcev_suite(AlgebraKind kind, const SuiteSelection &sel) {
    SuiteReport rep{Suite::Malcev, kind, {}, {}, {}};
    CheckResult basis("J(x,y,[x,z]) = [J(x,y,z),x], basis triples");
    for_each_tuple<3>(0, kDim - 1, [&](const auto &t) {
        ++basis.checked;
        const MalcevResult m = malcev_check(kind, E(t[0]), E(t[1]), E(t[2]));
        if (!m.pass) {
            basis.fail(tuple_string(t) + ": " + to_string(m.discrepancy));
        }
    });
    rep.lines.push_back(line_from(basis));

    ElementSampler rng(sel.seed);
    CheckResult random("J(x,y,[x,z]) = [J(x,y,z),x], random triples");
    CheckResult anti("[x,x] = 0 and [x,y] = -[y,x], random pairs");
    for (int i = 0; i < sel.trials; ++i) {
        const Element x = rng.element();
        const Element y = rng.element();
        const Element z = rng.element();
        ++random.checked;
        const MalcevResult m = malcev_check(kind, x, y, z);
        if (!m.pass) {
            random.fail("trial " + std::to_string(i) + ": " + to_string(m.discrepancy));
        }
        ++anti.checked;
        if (!commutator(kind, x, x).is_zero() || commutator(kind, x, y) != -commutator(kind, y, x)) {
            anti.fail("trial " + std::to_string(i));
        }
    }
    rep.lines.push_back(line_from(random));
    rep.lines.push_back(line_from(anti));
    return rep;
}

// --- lie3 ---------------------------------------------------------------------

SuiteReport lie3_suite(AlgebraKind kind, const SuiteSelection &sel) {
    SuiteReport rep{Suite::Lie3, kind, {}, {}, {}};
    rep.lines.push_back(line_from(sweep_derivation_dual_path(kind, sel.trials, sel.seed)));
    rep.lines.push_back(line_from(sweep_derivation_antisymmetry(kind)));
    rep.lines.push_back(line_from(sweep_operator_closed_forms(kind)));
    rep.lines.push_back(line_from(sweep_leibniz(kind)));
    rep.lines.push_back(line_from(sweep_fundamental_identity(kind)));
    rep.lines.push_back(line_from(sweep_metric_compatibility(kind, sel.trials, sel.seed)));
    rep.lines.push_back(line_from(sweep_additional_symmetry(kind)));
    rep.lines.push_back(line_from(sweep_pair_exchange(kind)));

    const auto lemmas = bilinear_lemma_sweeps(kind);
    rep.lines.push_back(line_from(lemmas[0], false));
    rep.lines.push_back(line_from(lemmas[1]));
    rep.lines.push_back(line_from(lemmas[2], false));
    rep.lines.push_back(line_from(lemmas[3]));

    const int span = derivation_span_dimension(kind);
    rep.lines.push_back(make_line("span of D_{E_mu,E_nu} has dimension 14", span == 14, kDim * kDim,
                                  span == 14 ? 0 : 1, "dimension " + std::to_string(span)));
    rep.scalars.emplace_back("derivation span dimension", std::to_string(span));
    rep.notes.push_back("Leibniz is checked as D(xy) = (Dx)y + x(Dy); the fundamental identity with c in the "
                        "third slot of its middle term");
    return rep;
}

// --- fconst -------------------------------------------------------------------

AlgebraKind other_kind(AlgebraKind k) {
    return k == AlgebraKind::Octonion ? AlgebraKind::SplitOctonion : AlgebraKind::Octonion;
}

std::string f_name(const std::array<int, 4> &i) { return "f_{" + digits({i[0], i[1], i[2], i[3]}) + "}"; }

SuiteReport fconst_suite(AlgebraKind kind) {
    SuiteReport rep{Suite::FConst, kind, {}, {}, {}};
    FTensor f;
    try {
        f = extract_f(kind);
    } catch (const FSymmetryError &e) {
        rep.lines.push_back(make_line("f extraction", false, 0, 1, e.what()));
        return rep;
    }
    const auto sym = f_symmetry_violations(f);
    rep.lines.push_back(make_line("f_{mu nu kappa lambda} = -f_{nu mu kappa lambda} = -f_{mu nu lambda kappa} = "
                                  "f_{kappa lambda mu nu}",
                                  sym.empty(), FTensor::kSize, sym.size(), sym.empty() ? "" : sym.front()));
    rep.lines.push_back(line_from(f_zero_patterns(f)));

    {
        const FTensor &g = f_tensor(other_kind(kind));
        std::size_t diff = 0;
        std::string first;
        for_each_tuple<4>(0, kDim - 1, [&](const auto &t) {
            const bool a = sgn(f.f(t[0], t[1], t[2], t[3])) != 0;
            const bool b = sgn(g.f(t[0], t[1], t[2], t[3])) != 0;
            if (a != b && diff++ == 0) {
                first = "first difference " + tuple_string(t);
            }
        });
        rep.lines.push_back(make_line("nonzero pattern shared with the " +
                                          std::string(kind_name(other_kind(kind))) + " algebra",
                                      diff == 0, FTensor::kSize, diff, first));
    }

    const FReferenceReport ref = compare_f_reference(f);
    {
        const Tensor3 &b = structure_tensors(kind).b;
        std::vector<std::string> parts;
        if (ref.global_sign) {
            parts.push_back("global sign " + std::string(*ref.global_sign > 0 ? "+1" : "-1"));
            rep.scalars.emplace_back("f global sign", *ref.global_sign > 0 ? "+1" : "-1");
        } else {
            parts.push_back("no global sign fits");
        }
        const int s = ref.global_sign.value_or(1);
        for (const auto &m : ref.mismatches) {
            const auto &i = m.indices;
            std::string d = f_name(i) + " = " + to_string(s * f.f(i[0], i[1], i[2], i[3])) + ", listed " +
                            std::to_string(m.expected);
            std::set<int> rest{1, 2, 3, 4, 5, 6, 7};
            for (int x : i) {
                rest.erase(x);
            }
            if (rest.size() == 3) {
                const std::vector<int> c(rest.begin(), rest.end());
                d += "; complement {" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                     std::to_string(c[2]) + "} " + (b(c[0], c[1], c[2]) != 0 ? "is" : "is not") +
                     " an associative triple";
            }
            std::vector<std::string> near;
            for (int slot = 0; slot < 4; ++slot) {
                for (int v = 1; v <= kImag; ++v) {
                    auto j = i;
                    j[slot] = v;
                    if (v != i[slot] && s * f.f(j[0], j[1], j[2], j[3]) == Rational(m.expected)) {
                        near.push_back(f_name(j));
                    }
                }
            }
            if (!near.empty()) {
                d += "; the listed value is taken by " + join(near, ", ");
            }
            parts.push_back(d);
        }
        for (const auto &p : ref.pair_mismatches) {
            parts.push_back(p);
        }
        rep.lines.push_back(make_line("listed f components and f_{mu nu mu nu} rule", ref.pass(),
                                      ref.entries.size() + ref.pair_components,
                                      ref.mismatches.size() + ref.pair_mismatches.size(), join(parts, "; ")));
    }

    const FDecomposition d = decompose_f(f);
    rep.lines.push_back(make_line("f = t + (delta delta - delta delta) p", d.exact(), FTensor::kSize,
                                  d.unexplained.size(), d.exact() ? "" : d.unexplained.front()));

    const CosetReport coset = coset_correspondence(kind);
    {
        std::vector<std::string> quads;
        for (const auto &e : coset.entries) {
            quads.push_back(digits({e.triple[0], e.triple[1], e.triple[2]}) + "->" +
                            digits({e.complement[0], e.complement[1], e.complement[2], e.complement[3]}));
        }
        std::string detail = std::to_string(coset.nonzero_t_quadruples.size()) + " nonzero t quadruples";
        if (!coset.problems.empty()) {
            detail += "; " + join(coset.problems, "; ");
        } else {
            detail += "; " + join(quads, " ");
        }
        rep.lines.push_back(make_line("nonzero t quadruples are complements of associative triples", coset.pass(),
                                      coset.entries.size(), coset.problems.size() + (coset.bijective ? 0 : 1),
                                      detail));
    }
    return rep;
}

// --- superaffine ------------------------------------------------------------

SuiteReport superaffine_suite(AlgebraKind kind, const SuiteSelection &sel) {
    SuiteReport rep{Suite::SuperAffine, kind, {}, {}, {}};
    const auto convs = BracketConvention::all();

    auto over_all = [&](const std::string &name, const std::function<CheckResult(const BracketConvention &)> &f) {
        CheckResult total(name + ", all 16 conventions");
        for (const auto &c : convs) {
            const CheckResult r = f(c);
            total.checked += r.checked;
            if (!r.pass()) {
                total.fail(c.name() + ": " + r.first_failure);
                total.failures += r.failures - 1;
            }
        }
        rep.lines.push_back(line_from(total));
    };
    const int m = sel.mode_bound;
    over_all("graded antisymmetry", [&](const auto &c) { return graded_antisymmetry_check(kind, c, m); });
    over_all("K central, modes additive", [&](const auto &c) { return bracket_invariants_check(kind, c, m); });
    over_all("mode-0 even part reproduces the commutator",
             [&](const auto &c) { return mode_zero_homomorphism_check(kind, c); });
    over_all("mode-0 super-Jacobian against the element Jacobian",
             [&](const auto &c) { return even_super_jacobian_check(kind, c); });

    const auto outcomes = convention_search(kind, m);
    std::vector<std::string> passers;
    std::uint64_t triples = 0;
    for (const auto &o : outcomes) {
        triples += o.malcev.triples_checked;
        if (o.pass()) {
            passers.push_back(o.convention.name());
            rep.notes.push_back(o.convention.name() + ": passes (" + std::to_string(o.malcev.triples_checked) +
                                " triples)");
        } else if (o.malcev.counterexample) {
            const auto &ce = *o.malcev.counterexample;
            rep.notes.push_back(o.convention.name() + ": fails at (" + to_string(ce.x) + ", " + to_string(ce.y) +
                                ", " + to_string(ce.z) + ") -> " + ce.residual);
        } else {
            rep.notes.push_back(o.convention.name() + ": graded antisymmetry fails");
        }
    }
    rep.lines.push_back(make_line("graded Malcev identity (Grassmann envelope), convention search", !passers.empty(),
                                  triples, outcomes.size() - passers.size(),
                                  std::to_string(passers.size()) + " of 16 pass: " + join(passers, "; ")));
    rep.scalars.emplace_back("passing conventions", std::to_string(passers.size()));

    CheckResult literal("graded Malcev identity, literal super-Jacobian reading, passing conventions");
    for (const auto &o : outcomes) {
        if (!o.pass()) {
            continue;
        }
        const SuperMalcevResult r = super_malcev_check(kind, o.convention, m, MalcevReading::LiteralSuperJacobian);
        literal.checked += r.triples_checked;
        if (r.counterexample) {
            const auto &ce = *r.counterexample;
            literal.fail(o.convention.name() + ": (" + to_string(ce.x) + ", " + to_string(ce.y) + ", " +
                         to_string(ce.z) + ") -> " + ce.residual);
        }
    }
    rep.lines.push_back(line_from(literal, false));
    return rep;
}

SuiteReport run_suite(Suite s, AlgebraKind kind, const SuiteSelection &sel) {
    switch (s) {
    case Suite::Tables:
        return tables_suite(kind, sel);
    case Suite::Tensors:
        return tensors_suite(kind);
    case Suite::Identities:
        return identities_suite(kind);
    case Suite::Malcev:
        return malcev_suite(kind, sel);
    case Suite::Lie3:
        return lie3_suite(kind, sel);
    case Suite::FConst:
        return fconst_suite(kind);
    case Suite::SuperAffine:
        return superaffine_suite(kind, sel);
    }
    throw std::logic_error("unknown suite");
}

bool suite_pass(const SuiteReport &s) {
    return std::all_of(s.lines.begin(), s.lines.end(), [](const ReportLine &l) { return l.pass || !l.counted; });
}

std::string status(const ReportLine &l) {
    if (l.counted) {
        return l.pass ? "PASS" : "FAIL";
    }
    return l.pass ? "note: holds" : "note: fails";
}

std::string cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out;
}

std::string suites_list(const SuiteSelection &sel) {
    std::vector<std::string> names;
    for (Suite s : sel.suites) {
        names.emplace_back(suite_name(s));
    }
    return join(names, ", ");
}

} // namespace

RunReport run(const SuiteSelection &selection) {
    if (selection.trials < 1 || selection.mode_bound < 1) {
        throw std::invalid_argument("trials and mode_bound must be positive");
    }
    RunReport report{selection, {}};
    for (Suite s : selection.suites) {
        for (AlgebraKind k : kinds_of(selection.algebra)) {
            report.suites.push_back(run_suite(s, k, selection));
        }
    }
    return report;
}

std::size_t RunReport::failures() const {
    std::size_t n = 0;
    for (const auto &s : suites) {
        for (const auto &l : s.lines) {
            n += l.counted && !l.pass ? 1 : 0;
        }
    }
    return n;
}

std::string RunReport::markdown() const {
    std::ostringstream out;
    out << "# octalg verification report\n\n";
    out << "- version: " << library_version() << "\n";
    out << "- algebra: " << choice_name(selection.algebra) << "\n";
    out << "- suites: " << suites_list(selection) << "\n";
    out << "- seed: " << selection.seed << "\n";
    out << "- trials: " << selection.trials << "\n";
    out << "- mode bound: " << selection.mode_bound << "\n";
    if (selection.table_override) {
        out << "- table: supplied " << kind_name(selection.table_override->kind()) << " table\n";
    }
    std::size_t checks = 0;
    std::size_t notes = 0;
    for (const auto &s : suites) {
        out << "\n## " << suite_name(s.suite) << " / " << kind_name(s.kind) << ": "
            << (suite_pass(s) ? "PASS" : "FAIL") << "\n\n";
        out << "| check | result | checked | detail |\n|---|---|---|---|\n";
        for (const auto &l : s.lines) {
            (l.counted ? checks : notes) += 1;
            out << "| " << cell(l.check) << " | " << status(l) << " | " << l.checked << " | " << cell(l.detail)
                << " |\n";
        }
        if (!s.scalars.empty()) {
            out << "\n";
            for (const auto &[k, v] : s.scalars) {
                out << "- " << k << " = " << v << "\n";
            }
        }
        if (!s.notes.empty()) {
            out << "\n";
            for (const auto &n : s.notes) {
                out << "- " << n << "\n";
            }
        }
    }
    out << "\n## summary\n\n";
    out << checks << " checks, " << failures() << " failed, " << notes << " informational findings. Exit code "
        << exit_code() << ".\n";
    return out.str();
}

std::string RunReport::json() const {
    ojson j;
    j["version"] = std::string(library_version());
    j["selection"] = {{"algebra", choice_name(selection.algebra)},
                      {"suites", [&] {
                           ojson a = ojson::array();
                           for (Suite s : selection.suites) {
                               a.push_back(suite_name(s));
                           }
                           return a;
                       }()},
                      {"seed", selection.seed},
                      {"trials", selection.trials},
                      {"mode_bound", selection.mode_bound},
                      {"table_override", selection.table_override
                                             ? ojson(kind_name(selection.table_override->kind()))
                                             : ojson(nullptr)}};
    ojson suites_j = ojson::array();
    for (const auto &s : suites) {
        ojson sj;
        sj["suite"] = suite_name(s.suite);
        sj["algebra"] = kind_name(s.kind);
        sj["pass"] = suite_pass(s);
        ojson lines = ojson::array();
        for (const auto &l : s.lines) {
            lines.push_back({{"check", l.check},
                             {"pass", l.pass},
                             {"counted", l.counted},
                             {"checked", l.checked},
                             {"failures", l.failures},
                             {"detail", l.detail}});
        }
        sj["checks"] = lines;
        ojson scalars = ojson::object();
        for (const auto &[k, v] : s.scalars) {
            scalars[k] = v;
        }
        sj["scalars"] = scalars;
        sj["notes"] = s.notes;
        suites_j.push_back(sj);
    }
    j["suites"] = suites_j;
    j["failures"] = failures();
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Export

std::string_view tensor_name(ExportTensor t) noexcept {
    switch (t) {
    case ExportTensor::Gamma:
        return "gamma";
    case ExportTensor::b:
        return "b";
    case ExportTensor::B:
        return "B";
    case ExportTensor::f:
        return "f";
    case ExportTensor::t:
        return "t";
    case ExportTensor::p:
        return "p";
    }
    return "";
}

std::optional<ExportTensor> parse_tensor(std::string_view name) noexcept {
    for (auto t : {ExportTensor::Gamma, ExportTensor::b, ExportTensor::B, ExportTensor::f, ExportTensor::t,
                   ExportTensor::p}) {
        if (name == tensor_name(t)) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept {
    if (name == "json") {
        return ExportFormat::Json;
    }
    if (name == "csv") {
        return ExportFormat::Csv;
    }
    return std::nullopt;
}

std::vector<ExportRecord> export_records(AlgebraKind kind, ExportTensor tensor) {
    std::vector<ExportRecord> out;
    const StructureTensors &st = structure_tensors(kind);
    switch (tensor) {
    case ExportTensor::Gamma:
        for (int i = 0; i < kDim; ++i) {
            out.push_back({{i, i}, Rational(st.gamma.diag(i))});
        }
        break;
    case ExportTensor::b:
        for_each_tuple<3>(1, kImag, [&](const auto &t) {
            if (const int v = st.b(t[0], t[1], t[2])) {
                out.push_back({{t.begin(), t.end()}, Rational(v)});
            }
        });
        break;
    case ExportTensor::B:
        for_each_tuple<4>(1, kImag, [&](const auto &t) {
            if (const int v = st.B(t[0], t[1], t[2], t[3])) {
                out.push_back({{t.begin(), t.end()}, Rational(v)});
            }
        });
        break;
    case ExportTensor::f:
    case ExportTensor::t: {
        const FTensor &f = f_tensor(kind);
        const FDecomposition d = tensor == ExportTensor::t ? decompose_f(f) : FDecomposition{};
        for_each_tuple<4>(0, kDim - 1, [&](const auto &t) {
            const Rational &v =
                tensor == ExportTensor::f ? f.f(t[0], t[1], t[2], t[3]) : d.t_at(t[0], t[1], t[2], t[3]);
            if (sgn(v) != 0) {
                out.push_back({{t.begin(), t.end()}, v});
            }
        });
        break;
    }
    case ExportTensor::p: {
        const FDecomposition d = decompose_f(f_tensor(kind));
        for_each_tuple<2>(0, kDim - 1, [&](const auto &t) {
            if (sgn(d.p[t[0]][t[1]]) != 0) {
                out.push_back({{t.begin(), t.end()}, d.p[t[0]][t[1]]});
            }
        });
        break;
    }
    }
    return out;
}

namespace {

std::vector<std::string> conventions_for(ExportTensor t) {
    std::vector<std::string> c{"element components are contravariant: a = A_0 E_0 + A^mu E_mu",
                               "all tensor indices are lowered with gamma"};
    switch (t) {
    case ExportTensor::Gamma:
        c.push_back("gamma_{ij} = Re(E_i E_j), indices 0..7");
        break;
    case ExportTensor::b:
        c.push_back("E_mu E_nu = gamma_{mu nu} + b_{mu nu}^kappa E_kappa, indices 1..7");
        break;
    case ExportTensor::B:
        c.push_back("B_{mu nu rho sigma} = (1/6) epsilon_{mu nu rho sigma kappa lambda eta} b^{kappa lambda eta}, "
                    "epsilon_1234567 = +1, indices 1..7");
        break;
    case ExportTensor::f:
        c.push_back("[E_mu,E_nu,E_kappa] = f_{mu nu kappa}^lambda E_lambda, f_{mu nu kappa lambda} = "
                    "f_{mu nu kappa}^sigma gamma_{sigma lambda}, indices 0..7");
        break;
    case ExportTensor::t:
        c.push_back("t = unit-weight total antisymmetrization of f, indices 0..7");
        break;
    case ExportTensor::p:
        c.push_back("p_{mu nu} = f_{mu nu mu nu}, indices 0..7");
        break;
    }
    return c;
}

std::string value_text(const Rational &v) { return v.get_den() == 1 ? v.get_num().get_str() : ("\"" + v.get_str() + "\""); }

Rational value_from_json(const ojson &v) {
    if (v.is_number_integer()) {
        return make_rational(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        Rational r(v.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("record value must be an integer or a rational string");
}

} // namespace

std::string render_export(AlgebraKind kind, ExportTensor tensor, ExportFormat format) {
    const auto records = export_records(kind, tensor);
    std::ostringstream out;
    if (format == ExportFormat::Csv) {
        const std::size_t rank = tensor == ExportTensor::Gamma || tensor == ExportTensor::p ? 2
                                 : tensor == ExportTensor::b                                ? 3
                                                                                            : 4;
        for (std::size_t i = 1; i <= rank; ++i) {
            out << "i" << i << ",";
        }
        out << "value\n";
        for (const auto &r : records) {
            for (int i : r.indices) {
                out << i << ",";
            }
            out << r.value.get_str() << "\n";
        }
        return out.str();
    }
    out << "{\n";
    out << "  \"algebra\": " << ojson(kind_name(kind)).dump() << ",\n";
    out << "  \"tensor\": " << ojson(tensor_name(tensor)).dump() << ",\n";
    out << "  \"tool_version\": " << ojson(library_version()).dump() << ",\n";
    out << "  \"conventions\": " << ojson(conventions_for(tensor)).dump() << ",\n";
    out << "  \"entries\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out << (i ? ",\n    " : "\n    ") << "{\"indices\":" << ojson(records[i].indices).dump()
            << ",\"value\":" << value_text(records[i].value) << "}";
    }
    out << (records.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

std::vector<ExportRecord> parse_export(std::string_view text, ExportFormat format) {
    std::vector<ExportRecord> out;
    if (format == ExportFormat::Json) {
        ojson j;
        try {
            j = ojson::parse(text);
        } catch (const ojson::exception &e) {
            throw std::invalid_argument(e.what());
        }
        if (!j.contains("entries") || !j["entries"].is_array()) {
            throw std::invalid_argument("missing entries array");
        }
        for (const auto &e : j["entries"]) {
            out.push_back({e.at("indices").get<std::vector<int>>(), value_from_json(e.at("value"))});
        }
        return out;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(f);
        }
        if (fields.size() < 2) {
            throw std::invalid_argument("malformed csv row: " + line);
        }
        ExportRecord r;
        for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
            r.indices.push_back(std::stoi(fields[i]));
        }
        r.value = Rational(fields.back());
        r.value.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

int integral(const Rational &v) {
    if (v.get_den() != 1 || !v.get_num().fits_sint_p()) {
        throw std::invalid_argument("component " + v.get_str() + " is not a small integer");
    }
    return static_cast<int>(v.get_num().get_si());
}

void require_rank(const ExportRecord &r, std::size_t rank, int lo) {
    if (r.indices.size() != rank) {
        throw std::invalid_argument("record has " + std::to_string(r.indices.size()) + " indices, expected " +
                                    std::to_string(rank));
    }
    for (int i : r.indices) {
        if (i < lo || i > kImag) {
            throw std::invalid_argument("index out of range in record");
        }
    }
}

} // namespace

Metric metric_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records) {
    std::array<int, kDim> diag{};
    for (const auto &r : records) {
        require_rank(r, 2, 0);
        if (r.indices[0] != r.indices[1]) {
            throw std::invalid_argument("off-diagonal metric component");
        }
        diag[r.indices[0]] = integral(r.value);
    }
    return Metric(kind, diag);
}

Tensor3 tensor3_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records) {
    Tensor3 t(kind);
    for (const auto &r : records) {
        require_rank(r, 3, 1);
        t.at(r.indices[0], r.indices[1], r.indices[2]) = integral(r.value);
    }
    return t;
}

Tensor4 tensor4_from_records(AlgebraKind kind, const std::vector<ExportRecord> &records) {
    Tensor4 t(kind);
    for (const auto &r : records) {
        require_rank(r, 4, 1);
        t.at(r.indices[0], r.indices[1], r.indices[2], r.indices[3]) = integral(r.value);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Tables

std::optional<TableFormat> parse_table_format(std::string_view name) noexcept {
    if (name == "ascii") {
        return TableFormat::Ascii;
    }
    if (name == "json") {
        return TableFormat::Json;
    }
    return std::nullopt;
}

std::string render_table(const CayleyTable &table, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::Ascii) {
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                out << (j ? " " : "") << to_string(table.at(i, j));
            }
            out << "\n";
        }
        return out.str();
    }
    out << "{\n  \"algebra\": " << ojson(kind_name(table.kind())).dump() << ",\n  \"rows\": [\n";
    for (int i = 0; i < kDim; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < kDim; ++j) {
            row.push_back(to_string(table.at(i, j)));
        }
        out << "    " << ojson(row).dump() << (i + 1 < kDim ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

CayleyTable load_table_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::exception &e) {
        throw std::invalid_argument(std::string("table json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("algebra") || !j.contains("rows")) {
        throw std::invalid_argument("table json needs \"algebra\" and \"rows\"");
    }
    const auto kind = parse_kind(j["algebra"].is_string() ? j["algebra"].get<std::string>() : std::string());
    if (!kind) {
        throw std::invalid_argument("table json: unknown algebra");
    }
    const auto &rows = j["rows"];
    if (!rows.is_array() || rows.size() != kDim) {
        throw std::invalid_argument("table json: expected 8 rows");
    }
    TableEntries entries{};
    for (int i = 0; i < kDim; ++i) {
        const auto &row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != kDim) {
            throw std::invalid_argument("table json: row " + std::to_string(i) + " needs 8 entries");
        }
        for (int j2 = 0; j2 < kDim; ++j2) {
            const auto &e = row[static_cast<std::size_t>(j2)];
            if (!e.is_string()) {
                throw std::invalid_argument("table json: entries are strings such as \"-0\" or \"4\"");
            }
            entries[i][j2] = parse_signed_basis(e.get<std::string>());
        }
    }
    return CayleyTable(*kind, entries);
}

} // namespace octalg
