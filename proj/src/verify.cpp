#include "picard/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "picard/cells.hpp"
#include "picard/config.hpp"
#include "picard/spine.hpp"

namespace picard {

using nlohmann::json;

namespace {

using T = ConfigTag;

std::string join(const std::vector<std::size_t>& v, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

std::string qmatrix_text(const QMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? " / " : "";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? " " : "") + std::to_string(m[i][j]);
    }
    return s;
}

std::string structure(const GroupInvariants& inv) {
    if (inv.order == 1) return "1";
    if (inv.abelian) {
        std::string s;
        for (std::size_t k = 0; k < inv.abelian_invariants.size(); ++k)
            s += (k ? " x Z/" : "Z/") + std::to_string(inv.abelian_invariants[k]);
        return s;
    }
    if (inv.order == 6) return "S3";
    std::ostringstream os;
    os << "order " << inv.order << ", exponent " << inv.exponent << ", center ";
    os << (inv.center.empty() ? "1" : "Z/" + join(inv.center, " x Z/"));
    os << ", " << inv.max_elem_abelian_classes << " maximal elementary abelian classes";
    return os.str();
}

struct StatedStabilizer {
    T tag;
    std::size_t order;
    const char* structure;
    std::vector<const char*> generators;
};

const std::vector<StatedStabilizer>& stated_stabilizers() {
    static const std::vector<StatedStabilizer> s = {
        {T::J21, 8, "Z/2 x Z/4", {"e w", "e"}},
        {T::J22, 8, "Z/8", {"x"}},
        {T::J31, 12, "Z/12", {"t e w"}},
        {T::J32, 6, "S3", {"e w", "s e^2"}},
        {T::J33, 1, "1", {}},
        {T::J41, 1, "1", {}},
        {T::J42, 2, "Z/2", {"e w"}},
        {T::J5, 2, "Z/2", {"s e^2"}},
        {T::J8, 32, "order 32, exponent 8, center Z/4, 2 maximal elementary abelian classes", {"e w", "x^2"}},
    };
    return s;
}

const std::vector<QMatrix>& stated_qmatrices() {
    static const std::vector<QMatrix> q = {
        {{0, 1}, {1, 0}},
        {{0, 2}, {2, 0}},
        {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
        {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
        {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}},
        {{0, 1, 1, 2}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 1, 1, 0}},
        {{0, 1, 1, 2}, {1, 0, 2, 1}, {1, 2, 0, 1}, {2, 1, 1, 0}},
        {{0, 1, 1, 1, 2}, {1, 0, 1, 2, 1}, {1, 1, 0, 1, 1}, {1, 2, 1, 0, 1}, {2, 1, 1, 1, 0}},
        {{0, 1, 2, 1, 1, 2, 1, 4},
         {1, 0, 1, 2, 2, 1, 4, 1},
         {2, 1, 0, 1, 1, 4, 1, 2},
         {1, 2, 1, 0, 4, 1, 2, 1},
         {1, 2, 1, 4, 0, 1, 2, 1},
         {2, 1, 4, 1, 1, 0, 1, 2},
         {1, 4, 1, 2, 2, 1, 0, 1},
         {4, 1, 2, 1, 1, 2, 1, 0}},
    };
    return q;
}

std::size_t tag_index(T t) {
    const auto& tags = admissible_tags();
    for (std::size_t k = 0; k < tags.size(); ++k)
        if (tags[k] == t) return k;
    throw std::invalid_argument("not a strongly admissible tag: " + tag_name(t));
}

// Boundary counts stated in the cell descriptions (row cell type in the
// boundary of the col cell). (J3_3, J2_1) differs from the table.
const std::map<std::pair<T, T>, int>& described_faces() {
    static const std::map<std::pair<T, T>, int> d = {
        {{T::J31, T::J21}, 2},  {{T::J32, T::J21}, 4},  {{T::J33, T::J21}, 16}, {{T::J41, T::J21}, 40},
        {{T::J42, T::J21}, 16}, {{T::J5, T::J21}, 32},  {{T::J8, T::J21}, 4},   {{T::J33, T::J22}, 8},
        {{T::J41, T::J22}, 8},  {{T::J42, T::J22}, 8},  {{T::J5, T::J22}, 8},   {{T::J8, T::J22}, 2},
        {{T::J41, T::J31}, 12}, {{T::J5, T::J31}, 12},  {{T::J41, T::J32}, 6},  {{T::J5, T::J32}, 6},
        {{T::J41, T::J33}, 2},  {{T::J42, T::J33}, 2},  {{T::J5, T::J33}, 3},   {{T::J8, T::J33}, 1},
        {{T::J5, T::J41}, 2},   {{T::J5, T::J42}, 1},   {{T::J8, T::J42}, 1},
    };
    return d;
}

std::string point_text(const Point& z) {
    std::ostringstream os;
    os.precision(12);
    os << "(y=" << z.y << ", beta=" << z.beta.real() << (z.beta.imag() < 0 ? "" : "+") << z.beta.imag()
       << "i, r=" << z.r << ")";
    return os.str();
}

void suite_stabilizers(Report& rep) {
    rep.columns = {"class", "order", "structure", "generators"};
    for (const auto& st : stated_stabilizers()) {
        const Configuration& c = representative(st.tag);
        FiniteGroup g = stabilizer(c);
        GroupInvariants inv = group_invariants(g);
        std::string s = structure(inv);
        std::vector<Word> gens;
        std::string gtext;
        for (const char* w : st.generators) {
            gens.push_back(Word::parse(w));
            gtext += (gtext.empty() ? "" : ", ") + std::string(w);
        }
        rep.add_row({tag_name(st.tag), g.order(), s, gtext.empty() ? "e" : gtext});
        const std::string n = tag_name(st.tag);
        rep.check(n + " order", g.order() == st.order,
                  g.order() == st.order ? "" : "computed " + std::to_string(g.order()) + ", expected " + std::to_string(st.order));
        rep.check(n + " structure", s == st.structure, s == st.structure ? "" : "computed " + s);
        bool same = g == close_subgroup(gens);
        rep.check(n + " generated by " + (gtext.empty() ? "e" : gtext), same,
                  same ? "" : "stabilizer differs from the generated subgroup");
        std::string bad;
        for (const auto& x : g.elements())
            if (!c.transformed(x).same_set(c)) {
                bad = "element " + to_json(x).dump() + " moves the set";
                break;
            }
        rep.check(n + " elements preserve the set", bad.empty(), bad);
    }
}

void suite_incidence(Report& rep) {
    rep.columns = {"row", "col", "computed", "table", "described"};
    json notes = json::array();
    for (T r : admissible_tags())
        for (T c : admissible_tags()) {
            int expected = reference_incidence(r, c);
            if (expected < 0) continue;
            Incidence inc = incidence_counts(r, c);
            long got = representative(r).size() > representative(c).size() ? inc.below : inc.above;
            auto it = described_faces().find({r, c});
            json described = it == described_faces().end() ? json(nullptr) : json(it->second);
            rep.add_row({tag_name(r), tag_name(c), got, expected, described});
            const std::string name = tag_name(r) + " / " + tag_name(c);
            if (it != described_faces().end() && it->second != expected) {
                // the table and the description disagree; the description is asserted
                rep.check(name + " (described)", got == it->second,
                          "computed " + std::to_string(got) + ", described " + std::to_string(it->second));
                notes.push_back(name + ": table " + std::to_string(expected) + ", described " +
                                std::to_string(it->second) + ", computed " + std::to_string(got));
            } else {
                rep.check(name, got == expected,
                          got == expected ? "" : "computed " + std::to_string(got) + ", table " + std::to_string(expected));
            }
        }
    rep.results["discrepancies"] = notes;
}

void suite_qmatrix(Report& rep) {
    rep.columns = {"class", "span", "qmatrix"};
    std::vector<std::pair<std::vector<long>, int>> prints;
    for (T t : admissible_tags()) {
        const Configuration& c = representative(t);
        QMatrix q = q_matrix(c);
        int span = span_dimension(c);
        rep.add_row({tag_name(t), span, qmatrix_text(q)});
        const QMatrix& want = stated_qmatrices()[tag_index(t)];
        bool ok = q_matrix_equivalent(q, want);
        rep.check(tag_name(t) + " qmatrix", ok, ok ? "" : "computed " + qmatrix_text(q) + ", expected " + qmatrix_text(want));
        std::vector<long> entries;
        for (const auto& row : q) entries.insert(entries.end(), row.begin(), row.end());
        std::sort(entries.begin(), entries.end());
        prints.push_back({entries, span});
    }
    std::string clash;
    for (std::size_t a = 0; a < prints.size(); ++a)
        for (std::size_t b = a + 1; b < prints.size(); ++b)
            if (prints[a] == prints[b])
                clash = tag_name(admissible_tags()[a]) + " and " + tag_name(admissible_tags()[b]);
    rep.check("fingerprints (entries, span) separate the classes", clash.empty(), clash);
    bool same31 = q_matrix_equivalent(q_matrix(representative(T::J31)), q_matrix(representative(T::J32)));
    rep.check("J3_1 and J3_2 share a qmatrix and differ in span", same31 &&
                  span_dimension(representative(T::J31)) != span_dimension(representative(T::J32)));
}

void suite_strong_admissibility(Report& rep, double margin) {
    rep.columns = {"class", "value", "spread", "runner_up", "gap"};
    rep.inputs["margin"] = margin;
    rep.results["runner_up"] = "best value outside the set, searched down to 3/4 of the set's value";
    for (T t : admissible_tags()) {
        AdmissibilityCheck a = verify_strong_admissibility(t, margin);
        json runner = a.runner_up > 0 ? json(a.runner_up) : json(nullptr);
        json gap = a.runner_up > 0 ? json(a.value - a.runner_up) : json(nullptr);
        rep.add_row({tag_name(t), a.value, a.spread, runner, gap});
        rep.check(tag_name(t), a.pass, a.detail);
    }
}

void suite_bounds(Report& rep, const VerifyOptions& opts) {
    const double lower4 = std::pow(5.0, -0.25), lower2 = 1 / std::sqrt(2.0);
    rep.inputs["seed"] = opts.seed;
    rep.inputs["samples"] = opts.samples;
    rep.columns = {"cell", "samples", "attempts", "min", "max"};
    for (T cell : {T::J21, T::J22}) {
        SpineSampling s = sample_spine_cell(cell, opts.samples, opts.seed + (cell == T::J21 ? 0 : 1));
        double lo = 2, hi = 0;
        std::string bad4, bad2;
        for (const auto& x : s.samples) {
            lo = std::min(lo, x.value);
            hi = std::max(hi, x.value);
            if (bad4.empty() && !(x.value > lower4 && x.value <= 1 + 1e-12))
                bad4 = point_text(x.z) + " value " + std::to_string(x.value);
            if (bad2.empty() && !(x.value >= lower2 - 1e-9 && x.value <= 1 + 1e-12))
                bad2 = point_text(x.z) + " value " + std::to_string(x.value);
        }
        const std::string n = "D(" + tag_name(cell) + ")";
        rep.add_row({tag_name(cell), s.samples.size(), s.attempts, lo, hi});
        rep.check(n + " sample count", s.samples.size() == opts.samples,
                  std::to_string(s.samples.size()) + " of " + std::to_string(opts.samples));
        rep.check(n + " spine values in (5^-1/4, 1]", bad4.empty(), bad4);
        rep.check(n + " spine values in [1/sqrt2 - 1e-9, 1]", bad2.empty(), bad2);
    }
    for (T t : admissible_tags()) {
        Point z = first_contact_point(t);
        SpineValue v = spine_value(z);
        bool ok = v.value >= lower2 - 1e-9 && v.value <= 1 + 1e-12;
        rep.check("z(" + tag_name(t) + ") value in [1/sqrt2 - 1e-9, 1]", ok,
                  ok ? "" : point_text(z) + " value " + std::to_string(v.value));
    }
}

void suite_flags(Report& rep) {
    const CellDataset& cells = shipped_cells();
    rep.columns = {"differential", "terms", "agree"};
    for (int p = 0; p < 3; ++p) {
        auto rec = differential_terms(cells, p);
        bool same = same_terms(rec, display_terms(p));
        rep.add_row({"d" + std::to_string(p), rec.size(), same});
        rep.check("d" + std::to_string(p) + " boundary records match the stated differential", same,
                  same ? "" : "term lists differ");
    }
    GroupRingCheck g = group_ring_dd_check(cells);
    rep.check("d d = 0 in the group ring", g.ok, g.detail);
    auto mism = stabilizer_mismatches(cells);
    std::string m;
    for (const auto& s : mism) m += (m.empty() ? "" : "; ") + s;
    rep.check("cell stabilizer orders", mism.empty(), m);
}

void suite_classification(Report& rep) {
    rep.columns = {"class", "extensions", "reached"};
    auto forms = pair_normal_forms(2);
    std::string bad;
    json fj = json::array();
    for (const auto& v : forms) {
        T t = classify(Configuration({{1, 0, 0}, v})).tag;
        fj.push_back({{"v", to_json(v)}, {"class", tag_name(t)}});
        if (t != T::J21 && t != T::J22) bad = to_string(v) + " gives " + tag_name(t);
    }
    rep.results["order_two_forms"] = fj;
    rep.check("order-2 2-bounded sets with (1,0,0) reduce to J2_1 or J2_2", bad.empty() && !forms.empty(), bad);

    BoundedClosure bc = bounded_closure(2);
    for (const auto& st : bc.steps) {
        std::string reached;
        for (const auto& [t, n] : st.reached) reached += (reached.empty() ? "" : " ") + tag_name(t) + "=" + std::to_string(n);
        rep.add_row({tag_name(st.from), st.extensions, reached});
    }
    std::string cls;
    for (T t : bc.classes) cls += (cls.empty() ? "" : " ") + tag_name(t);
    const std::set<T> eight = {T::J21, T::J22, T::J31, T::J32, T::J33, T::J41, T::J42, T::J5};
    rep.check("2-bounded extensions close on the eight classes", bc.closed && bc.classes == eight, cls);
    bool j8 = classify(representative(T::J8)).tag == T::J8 && !is_c_bounded(representative(T::J8), 2) &&
              is_c_bounded(representative(T::J8), 4);
    rep.check("J8 is 4-bounded, not 2-bounded, and classified", j8);
    auto ext = enumerate_extensions(representative(T::J8), 4);
    rep.check("no 4-bounded proper superset of J8", ext.empty(),
              ext.empty() ? "" : "extension " + to_string(ext.front()));
}

std::vector<Representation> shipped_reps(int symn_max) {
    std::vector<Representation> r = {trivial_rep(Mode::IntegerLattice), trivial_rep(Mode::GaussianField),
                                     standard_rep(Mode::IntegerLattice), standard_rep(Mode::GaussianField),
                                     dual_rep()};
    for (int n = 1; n <= symn_max; ++n) r.push_back(symn_rep(n));
    return r;
}

void suite_properties(Report& rep, const VerifyOptions& opts) {
    rep.inputs["seed"] = opts.seed;
    rep.inputs["random_reps"] = opts.random_reps;
    rep.inputs["symn_max"] = opts.symn_max;
    rep.columns = {"rep", "dd", "h0_kernel", "h0_fixed", "h3", "eigen_bound", "rank_bound"};

    GroupRingCheck g = group_ring_dd_check();
    rep.check("d d = 0 in the group ring", g.ok, g.detail);

    std::vector<CohomologyResult> table = opts.symn_results;
    if (table.size() != std::size_t(std::max(opts.symn_max, 0))) table = symn_table(1, opts.symn_max, {}, opts.jobs);

    const CohomologyOptions copts;
    std::string dd_bad, h0_bad, h3_bad;
    for (const auto& r : shipped_reps(opts.symn_max)) {
        std::string dd;
        if (r.dim() <= copts.exact_dim_limit) {
            bool ok = dd_zero(assemble(r));
            dd = ok ? "exact" : "FAIL";
            if (!ok && dd_bad.empty()) dd_bad = r.name() + " (" + mode_name(r.mode()) + ")";
        } else {
            bool ok = dd_zero_mod(r, mod_primes()[0]);
            dd = ok ? "mod p" : "FAIL";
            if (!ok && dd_bad.empty()) dd_bad = r.name() + " mod " + std::to_string(mod_primes()[0].p);
        }
        H0Check h0 = h0_identity_check(r, copts);
        if (!h0.equal && h0_bad.empty())
            h0_bad = r.name() + " (" + mode_name(r.mode()) + "): ker D0 " + std::to_string(h0.kernel_dim) +
                     ", fixed " + std::to_string(h0.fixed_dim);
        json h3 = nullptr, eb = nullptr, rb = nullptr;
        if (r.name().rfind("symn:", 0) == 0) {
            int n = std::stoi(r.name().substr(5));
            const CohomologyResult& res = table[n - 1];
            H3Bounds b = h3_bounds(r, res.h[3].rank);
            h3 = b.actual;
            eb = b.eigen_bound ? json(*b.eigen_bound) : json(nullptr);
            rb = b.rank_bound;
            if (!b.holds && h3_bad.empty())
                h3_bad = r.name() + ": h3 " + std::to_string(b.actual) + ", eigen " +
                         (b.eigen_bound ? std::to_string(*b.eigen_bound) : "-") + ", rank " + std::to_string(b.rank_bound);
        }
        rep.add_row({r.name() + " (" + mode_name(r.mode()) + ")", dd, h0.kernel_dim, h0.fixed_dim, h3, eb, rb});
    }
    rep.check("D D = 0 for the shipped representations", dd_bad.empty(), dd_bad);

    std::mt19937_64 rng(opts.seed);
    std::string rnd_bad;
    for (std::size_t k = 0; k < opts.random_reps; ++k) {
        Representation r = random_small_rep(rng);
        if (!dd_zero(assemble(r)) && rnd_bad.empty()) rnd_bad = r.name();
    }
    rep.check("D D = 0 exactly for " + std::to_string(opts.random_reps) + " random representations", rnd_bad.empty(),
              rnd_bad);
    rep.check("h0 = fixed space of <e, w, t, s>", h0_bad.empty(), h0_bad);
    rep.check("h3 <= dim(E+ cap E-) <= dim E - dim E^(e w)", h3_bad.empty(), h3_bad);

    Report bounds;
    suite_bounds(bounds, opts);
    for (const auto& c : bounds.checks) rep.checks.push_back(c);
    rep.results["spine_samples"] = bounds.to_json()["rows"];
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s = {"stabilizers", "incidence",      "qmatrix",    "strong-admissibility",
                                               "bounds",      "flags",          "classification", "properties"};
    return s;
}

Report verify_suite(const std::string& suite, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify " + suite;
    if (suite == "stabilizers") suite_stabilizers(rep);
    else if (suite == "incidence") suite_incidence(rep);
    else if (suite == "qmatrix") suite_qmatrix(rep);
    else if (suite == "strong-admissibility") suite_strong_admissibility(rep, opts.margin);
    else if (suite == "bounds") suite_bounds(rep, opts);
    else if (suite == "flags") suite_flags(rep);
    else if (suite == "classification") suite_classification(rep);
    else if (suite == "properties") suite_properties(rep, opts);
    else throw std::invalid_argument("unknown suite: " + suite);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

const std::vector<std::array<std::size_t, 4>>& reference_symn_table() {
    static const std::vector<std::array<std::size_t, 4>> t = {
        {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1},  {0, 0, 3, 0},  {0, 0, 1, 0},  {0, 0, 2, 0},
        {0, 0, 2, 1}, {0, 0, 5, 0}, {0, 0, 1, 0}, {0, 0, 2, 0},  {0, 1, 3, 1},  {0, 0, 7, 0},  {0, 0, 4, 0},
        {0, 3, 5, 0}, {0, 4, 4, 1}, {0, 2, 9, 0}, {0, 5, 5, 0},  {0, 8, 7, 0},  {0, 11, 5, 1},
    };
    return t;
}

int reference_incidence(ConfigTag row, ConfigTag col) {
    static const int table[9][9] = {
        {-1, -1, 3, 3, 2, 5, 4, 8, 16},   {-1, -1, 0, 0, 1, 1, 2, 2, 8},   {2, 0, -1, -1, -1, 1, 0, 2, 0},
        {4, 0, -1, -1, -1, 1, 0, 2, 0},   {12, 8, -1, -1, -1, 2, 4, 6, 32}, {40, 8, 12, 6, 2, -1, -1, 4, 0},
        {16, 8, 0, 0, 2, -1, -1, 1, 16},  {32, 8, 12, 6, 3, 2, 1, -1, -1},  {4, 2, 0, 0, 1, 0, 1, -1, -1},
    };
    return table[tag_index(row)][tag_index(col)];
}

}  // namespace picard
