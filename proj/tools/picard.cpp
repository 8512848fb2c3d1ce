// picard: classification, cohomology and verification front end.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "picard/cells.hpp"
#include "picard/complex.hpp"
#include "picard/config.hpp"
#include "picard/json_io.hpp"
#include "picard/report.hpp"
#include "picard/spine.hpp"
#include "picard/verify.hpp"

using namespace picard;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(what + ": " + e.what());
    }
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Report& r, const std::string& format) {
    if (format == "json") std::cout << r.to_json().dump(2) << "\n";
    else if (format == "csv") std::cout << r.to_csv();
    else std::cout << r.to_table();
}

json point_json(const Point& z) {
    return {{"y", z.y}, {"beta", {z.beta.real(), z.beta.imag()}}, {"r", z.r}};
}

json witnesses_json(const std::vector<Witness>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back({{"v", to_json(w.v)}, {"value", w.value}});
    return a;
}

// ---- classify

int cmd_classify(const std::string& path, const std::string& format) {
    const auto t0 = std::chrono::steady_clock::now();
    json j = parse_json(read_file(path), path);
    if (j.is_object() && j.contains("vectors")) j = j["vectors"];
    if (!j.is_array()) throw UsageError("expected an array of vectors or {\"vectors\": [...]}");
    std::vector<GVec3> vs;
    for (const auto& v : j) vs.push_back(vector_from_json(v));
    Configuration c(vs);
    Classification cl = classify(c);

    Report r;
    r.command = "classify";
    r.inputs["file"] = path;
    r.columns = {"index", "vector", "normalized"};
    for (std::size_t k = 0; k < vs.size(); ++k) r.add_row({k, to_json(vs[k]).dump(), to_json(c[k]).dump()});
    r.results["tag"] = tag_name(cl.tag);
    if (cl.conjugator) {
        r.results["conjugator"] = word_for_element(*cl.conjugator).str();
        r.results["conjugator_matrix"] = to_json(*cl.conjugator);
    } else {
        r.results["conjugator"] = nullptr;
    }
    r.results["qmatrix"] = q_matrix(c);
    r.results["span"] = span_dimension(c);
    r.seconds = elapsed(t0);
    emit(r, format);
    return kPass;
}

// ---- cohomology

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like A..B");
    try {
        int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
        if (a < 0 || b < a) throw UsageError("empty or negative range " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("range must look like A..B");
    }
}

std::vector<std::string> degree_strings(const CohomologyResult& res) {
    std::vector<std::string> out;
    for (const auto& g : res.h) out.push_back(g.str(res.mode));
    return out;
}

json run_json(const CohomologyResult& res) {
    return {{"rep", res.rep},
            {"ring", mode_name(res.mode)},
            {"method", method_name(res.method)},
            {"primes", res.primes},
            {"cochain_dims", res.cochain_dims},
            {"ranks", res.ranks},
            {"h", degree_strings(res)},
            {"euler", res.euler_cochains()}};
}

int cmd_cohomology(const std::string& desc, const std::string& ring, const std::string& range,
                   const std::string& format, std::size_t jobs, const CohomologyOptions& opts,
                   const std::string& cells_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const Mode mode = ring == "Z" ? Mode::IntegerLattice : Mode::GaussianField;
    std::optional<CellDataset> custom;
    if (!cells_path.empty()) custom = CellDataset::from_json(parse_json(read_file(cells_path), cells_path));
    const CellDataset& cells = custom ? *custom : shipped_cells();

    const bool symn = desc == "symn" || desc.rfind("symn:", 0) == 0;
    if (symn && mode == Mode::IntegerLattice)
        throw UsageError("unsupported combination: Sym^n coefficients are only available over Qi");
    if (!range.empty() && desc != "symn") throw UsageError("--range goes with the descriptor symn");
    if (desc == "symn" && range.empty()) throw UsageError("symn needs --range A..B, or use symn:N");

    Report r;
    r.inputs = {{"coefficients", desc}, {"ring", ring}};
    if (desc == "symn") {
        auto [a, b] = parse_range(range);
        r.command = "cohomology symn --range " + range;
        r.inputs["range"] = range;
        std::vector<CohomologyResult> rows;
        if (custom) {
            for (int n = a; n <= b; ++n) rows.push_back(cohomology(symn_rep(n), opts, cells));
        } else {
            rows = symn_table(a, b, opts, jobs);
        }
        // rows h0..h3, one column per n
        r.columns = {"degree"};
        for (int n = a; n <= b; ++n) r.columns.push_back(std::to_string(n));
        for (int p = 0; p < 4; ++p) {
            std::vector<json> row{"h" + std::to_string(p)};
            for (const auto& res : rows) row.push_back(res.h[p].rank);
            r.add_row(row);
        }
        json runs = json::array();
        for (const auto& res : rows) runs.push_back(run_json(res));
        r.results["runs"] = runs;
    } else {
        std::optional<Representation> rep;
        if (desc == "trivial") rep = trivial_rep(mode);
        else if (desc == "standard") rep = standard_rep(mode);
        else if (desc == "dual") {
            if (mode == Mode::IntegerLattice) throw UsageError("unsupported combination: dual is only available over Qi");
            rep = dual_rep();
        } else if (desc.rfind("symn:", 0) == 0) {
            int n;
            try {
                std::size_t used = 0;
                n = std::stoi(desc.substr(5), &used);
                if (used != desc.size() - 5 || n < 0) throw std::invalid_argument("");
            } catch (const std::logic_error&) {
                throw UsageError("bad descriptor " + desc);
            }
            rep = symn_rep(n);
        } else {
            throw UsageError("unknown coefficients " + desc + " (trivial, standard, dual, symn:N, symn)");
        }
        r.command = "cohomology " + desc + " --ring " + ring;
        CohomologyResult res = cohomology(*rep, opts, cells);
        r.columns = {"degree", "group", "cochains"};
        auto hs = degree_strings(res);
        for (int p = 0; p < 4; ++p) r.add_row({p, hs[p], res.cochain_dims[p]});
        json run = run_json(res);
        for (const auto& [k, v] : run.items())
            if (k != "h") r.results[k] = v;
        r.results["summary"] = hs[0] + ", " + hs[1] + ", " + hs[2] + ", " + hs[3];
    }
    r.seconds = elapsed(t0);
    emit(r, format);
    return kPass;
}

// ---- verify

int cmd_verify(const std::vector<std::string>& suites, const VerifyOptions& opts, const std::string& format) {
    std::vector<std::string> names;
    for (const auto& s : suites) {
        if (s == "all") names.insert(names.end(), verify_suites().begin(), verify_suites().end());
        else if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
            throw UsageError("unknown suite " + s);
        else names.push_back(s);
    }
    bool ok = true;
    json all = json::array();
    for (const auto& s : names) {
        Report r = verify_suite(s, opts);
        ok = ok && r.pass();
        if (format == "json") all.push_back(r.to_json());
        else emit(r, format);
        if (!r.pass() && format != "json")
            for (const auto& c : r.checks)
                if (!c.pass) std::cerr << "FAIL " << s << ": " << c.name << "  " << c.detail << "\n";
    }
    if (format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return ok ? kPass : kFail;
}

// ---- spine

int emit_point(const std::string& command, const Point& z, const std::vector<Witness>& ws, double value,
               const std::string& format) {
    json j = {{"command", command}, {"point", point_json(z)}, {"value", value}, {"witnesses", witnesses_json(ws)}};
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    Report r;
    r.command = command;
    r.inputs["point"] = j["point"];
    r.results["value"] = value;
    r.columns = {"witness", "value"};
    for (const auto& w : ws) r.add_row({to_string(w.v), w.value});
    emit(r, format);
    return kPass;
}

int cmd_spine_value(double y, double bre, double bim, double rr, const std::string& format) {
    if (!(y > 0)) throw UsageError("y must be positive");
    Point z{y, {bre, bim}, rr};
    SpineValue v = spine_value(z);
    return emit_point("spine-value", z, v.dominating, v.value, format);
}

int cmd_first_contact(const std::string& tag, const std::string& format) {
    ConfigTag t;
    try {
        t = tag_from_name(tag);
    } catch (const std::exception&) {
        throw UsageError("unknown class " + tag);
    }
    if (std::find(admissible_tags().begin(), admissible_tags().end(), t) == admissible_tags().end())
        throw UsageError("not a strongly admissible class: " + tag);
    AdmissibilityCheck a = verify_strong_admissibility(t);
    std::vector<Witness> members;
    for (const auto& w : a.witnesses)
        if (representative(t).contains(w.v)) members.push_back(w);
    return emit_point("first-contact " + tag_name(t), first_contact_point(t), members, a.value, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cell structure and cohomology of SU(2,1; Z[i])"};
    app.require_subcommand(1);
    std::string format = "table";
    const std::vector<std::string> formats = {"json", "table", "csv"};

    auto* classify_cmd = app.add_subcommand("classify", "Classify a configuration of isotropic vectors");
    std::string config_path;
    classify_cmd->add_option("file", config_path, "JSON file: [[n, p, q], ...], entries [re, im]; - for stdin")
        ->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* coh_cmd = app.add_subcommand("cohomology", "Cohomology of the group with the given coefficients");
    std::string desc, ring = "Qi", range, cells_path;
    std::size_t jobs = 1;
    CohomologyOptions copts;
    coh_cmd->add_option("coefficients", desc, "trivial | standard | dual | symn:N | symn (with --range)")->required();
    coh_cmd->add_option("--ring", ring, "Z or Qi")->check(CLI::IsMember({"Z", "Qi"}));
    coh_cmd->add_option("--range", range, "A..B, for symn");
    coh_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    coh_cmd->add_option("--jobs", jobs, "worker threads for --range")->check(CLI::Range(1, 256));
    coh_cmd->add_option("--primes", copts.primes, "primes for modular ranks")->check(CLI::Range(1, 4));
    coh_cmd->add_option("--exact-limit", copts.exact_dim_limit, "largest Qi dimension ranked exactly");
    coh_cmd->add_flag("--modular", copts.force_modular, "modular ranks at every dimension");
    coh_cmd->add_option("--cells", cells_path, "cell dataset to use instead of the shipped one");

    auto* ver_cmd = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites;
    VerifyOptions vopts;
    std::string suite_help = "all";
    for (const auto& s : verify_suites()) suite_help += " | " + s;
    ver_cmd->add_option("suite", suites, suite_help)->required();
    ver_cmd->add_option("--seed", vopts.seed, "seed for sampling suites");
    ver_cmd->add_option("--samples", vopts.samples, "spine samples per cell");
    ver_cmd->add_option("--jobs", vopts.jobs, "worker threads")->check(CLI::Range(1, 256));
    ver_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* sv_cmd = app.add_subcommand("spine-value", "max over parabolics of f_P at a point, with the maximizers");
    double y = 1, bre = 0, bim = 0, rr = 0;
    sv_cmd->add_option("y", y)->required();
    sv_cmd->add_option("beta_re", bre)->required();
    sv_cmd->add_option("beta_im", bim)->required();
    sv_cmd->add_option("r", rr)->required();
    std::string point_format = "json";
    sv_cmd->add_option("--format", point_format)->check(CLI::IsMember(formats));

    auto* fc_cmd = app.add_subcommand("first-contact", "First-contact point z(I) of a representative");
    std::string tag;
    fc_cmd->add_option("class", tag, "J2_1 ... J8")->required();
    fc_cmd->add_option("--format", point_format)->check(CLI::IsMember(formats));

    auto* dump_cmd = app.add_subcommand("dump-cells", "Print the cell dataset");
    std::string dump_path;
    dump_cmd->add_option("--cells", dump_path, "validate and print this dataset instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(config_path, format);
        if (*coh_cmd) return cmd_cohomology(desc, ring, range, format, jobs, copts, cells_path);
        if (*ver_cmd) return cmd_verify(suites, vopts, format);
        if (*sv_cmd) return cmd_spine_value(y, bre, bim, rr, point_format);
        if (*fc_cmd) return cmd_first_contact(tag, point_format);
        if (*dump_cmd) {
            if (dump_path.empty()) std::cout << shipped_cells_text();
            else std::cout << CellDataset::from_json(parse_json(read_file(dump_path), dump_path)).to_json().dump(2) << "\n";
            return kPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
