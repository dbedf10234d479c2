#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subcubic/bounds.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/errors.hpp"
#include "subcubic/families.hpp"
#include "subcubic/graph6.hpp"
#include "subcubic/matching.hpp"
#include "subcubic/polytope.hpp"
#include "subcubic/structure.hpp"

namespace subcubic::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::atomic<bool> g_interrupt{false};

struct Interrupted {};

void check_interrupt() {
    if (g_interrupt.load(std::memory_order_relaxed)) throw Interrupted{};
}

CoefficientTriple parse_triple(const std::vector<std::string>& parts) {
    if (parts.size() != 3) throw ParseError("expected three fractions");
    return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_text(bool b) { return b ? "true" : "false"; }

// ---- polytope --------------------------------------------------------------

struct PolytopeArgs {
    std::string vertices_of = "Pplus";
    std::string member_of = "P";
    bool maximal = false;
    std::vector<std::string> triple;
    std::string lambda;
};

Polyhedron pick_polyhedron(const std::string& which) {
    if (which == "P") return polyhedron_P();
    if (which == "Pplus" || which == "P+") return polyhedron_P_plus();
    throw ParseError("unknown polyhedron '" + which + "' (P or Pplus)");
}

int polytope_vertices(const PolytopeArgs& a, std::ostream& out) {
    auto vs = vertices(pick_polyhedron(a.vertices_of));
    if (a.maximal) vs = maximal_vertices(vs);
    for (const auto& v : vs) out << v.to_string() << '\n';
    return kExitOk;
}

int polytope_contains(const PolytopeArgs& a, std::ostream& out) {
    const Polyhedron p = pick_polyhedron(a.member_of);
    const Membership m = contains(p, parse_triple(a.triple));
    if (m.inside()) {
        out << "inside\n";
        return kExitOk;
    }
    out << "violated: ";
    for (std::size_t i = 0; i < m.violated.size(); ++i) {
        if (i) out << "; ";
        out << p.halfspaces[m.violated[i]].label();
    }
    out << '\n';
    return kExitOk;
}

int polytope_project(const PolytopeArgs& a, std::ostream& out) {
    out << project_to_Pplus(parse_triple(a.triple)).to_string() << '\n';
    return kExitOk;
}

int polytope_shift(const PolytopeArgs& a, std::ostream& out) {
    const CoefficientTriple s = shift_transform(parse_triple(a.triple), Rational::parse(a.lambda));
    out << s.to_string() << " in P: " << yes_no(contains(polyhedron_P(), s).inside()) << '\n';
    return kExitOk;
}

// ---- graph sources ---------------------------------------------------------

struct SourceArgs {
    int enumerate = 0;
    std::string file;
    std::vector<std::string> graph6;
    int random = 0;
    int max_order = 16;
    std::uint64_t seed = 1;
    bool disconnected = false;
    bool skip_invalid = false;
    unsigned jobs = 1;
    bool json = false;
    std::string manifest;
};

void add_source_options(CLI::App* cmd, SourceArgs& s) {
    auto* src = cmd->add_option_group("source", "graph source (exactly one)");
    src->add_option("--enumerate", s.enumerate, "every subcubic graph on 1..N vertices (N <= 12)");
    src->add_option("--file", s.file, "graph6 file, one graph per line");
    src->add_option("--graph6", s.graph6, "graph6 strings");
    src->add_option("--random", s.random, "number of seeded random connected subcubic graphs");
    src->require_option(1);
    cmd->add_option("--max-order", s.max_order, "largest order for --random")->check(CLI::Range(1, 1 << 20));
    cmd->add_option("--seed", s.seed, "first seed for --random");
    cmd->add_flag("--disconnected", s.disconnected, "include disconnected graphs with --enumerate");
    cmd->add_flag("--skip-invalid", s.skip_invalid, "ignore malformed or non-subcubic inputs for the exit code");
    cmd->add_option("--jobs", s.jobs, "worker threads (0 = hardware)");
    cmd->add_flag("--json", s.json, "JSON Lines output");
    cmd->add_option("--manifest", s.manifest, "write the run manifest here instead of stderr");
}

std::string source_name(const SourceArgs& s) {
    if (s.enumerate) return "enumerate:" + std::to_string(s.enumerate) + (s.disconnected ? ":all" : ":connected");
    if (!s.file.empty()) return "file:" + s.file;
    if (!s.graph6.empty()) return "graph6:" + std::to_string(s.graph6.size());
    return "random:" + std::to_string(s.random) + ":n<=" + std::to_string(s.max_order) + ":seed=" +
           std::to_string(s.seed);
}

// Feeds every record of the source to fn, in a deterministic order.
void for_each_record(const SourceArgs& s, const std::function<void(Graph6Record&&)>& fn) {
    if (s.enumerate) {
        std::size_t index = 0;
        enumerate_subcubic({s.enumerate, !s.disconnected, true}, [&](const Graph& g) {
            check_interrupt();
            fn(Graph6Record{++index, emit_graph6(g), g, {}});
        });
    } else if (!s.file.empty()) {
        std::ifstream in(s.file, std::ios::binary);
        if (!in) throw ParseError("cannot open '" + s.file + "'");
        Graph6Reader reader(in);
        while (auto rec = reader.next()) {
            check_interrupt();
            fn(std::move(*rec));
        }
    } else if (!s.graph6.empty()) {
        std::size_t index = 0;
        for (const auto& text : s.graph6) {
            Graph6Record rec{++index, text, std::nullopt, {}};
            try {
                rec.graph = parse_graph6(text);
            } catch (const MalformedGraph6& e) {
                rec.error = e.what();
            }
            fn(std::move(rec));
        }
    } else {
        for (int i = 0; i < s.random; ++i) {
            check_interrupt();
            const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
            const int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(s.max_order));
            const Graph g = random_subcubic(n, seed);
            fn(Graph6Record{static_cast<std::size_t>(i + 1), emit_graph6(g), g, {}});
        }
    }
}

struct ItemResult {
    std::string out;
    std::string err;
    std::int64_t checked = 0;
    std::int64_t reports = 0;
    std::int64_t invalid = 0;
    std::int64_t violations = 0;
    std::int64_t tight = 0;
    std::int64_t failures = 0;
};

struct Totals {
    std::int64_t checked = 0;
    std::int64_t reports = 0;
    std::int64_t invalid = 0;
    std::int64_t violations = 0;
    std::int64_t tight = 0;
    std::int64_t failures = 0;

    void add(const ItemResult& r) {
        checked += r.checked;
        reports += r.reports;
        invalid += r.invalid;
        violations += r.violations;
        tight += r.tight;
        failures += r.failures;
    }
};

// Processes records in batches across worker threads; results are emitted in
// input order so output does not depend on the thread count.
class Pipeline {
public:
    using Work = std::function<ItemResult(const Graph6Record&)>;

    Pipeline(unsigned jobs, Work work, std::ostream& out, std::ostream& err)
        : jobs_(jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs),
          work_(std::move(work)),
          out_(out),
          err_(err) {}

    void push(Graph6Record&& rec) {
        pending_.push_back(std::move(rec));
        if (pending_.size() >= kBatch * jobs_) flush();
    }

    void flush() {
        std::vector<ItemResult> results(pending_.size());
        auto one = [&](std::size_t i) {
            try {
                results[i] = work_(pending_[i]);
            } catch (const std::exception& e) {
                results[i] = ItemResult{};
                results[i].invalid = 1;
                results[i].err = "line " + std::to_string(pending_[i].line_number) + ": " + e.what() + "\n";
            }
        };
        if (jobs_ <= 1 || pending_.size() < 2) {
            for (std::size_t i = 0; i < pending_.size(); ++i) one(i);
        } else {
            std::vector<std::thread> workers;
            for (unsigned w = 0; w < jobs_; ++w) {
                workers.emplace_back([&, w] {
                    for (std::size_t i = w; i < pending_.size(); i += jobs_) one(i);
                });
            }
            for (auto& t : workers) t.join();
        }
        for (const auto& r : results) {
            out_ << r.out;
            err_ << r.err;
            totals.add(r);
        }
        pending_.clear();
    }

    Totals totals;

private:
    static constexpr std::size_t kBatch = 256;
    unsigned jobs_;
    Work work_;
    std::ostream& out_;
    std::ostream& err_;
    std::vector<Graph6Record> pending_;
};

// Shared driver for verify and ge: runs the pipeline, then writes the
// manifest even when interrupted.
int drive(const std::string& command, const SourceArgs& s, ordered_json config, const Pipeline::Work& work,
          std::ostream& out, std::ostream& err, std::function<void(const Totals&)> summary) {
    const auto start = std::chrono::steady_clock::now();
    Pipeline pipe(s.jobs, work, out, err);
    bool partial = false;
    try {
        for_each_record(s, [&](Graph6Record&& rec) { pipe.push(std::move(rec)); });
    } catch (const Interrupted&) {
        partial = true;
    }
    pipe.flush();
    out.flush();
    const Totals& t = pipe.totals;
    if (!s.json) summary(t);

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ordered_json manifest;
    manifest["command"] = command;
    manifest["config"] = std::move(config);
    manifest["source"] = source_name(s);
    manifest["counts"] = {{"graphs_checked", t.checked}, {"reports", t.reports}, {"violations", t.violations},
                          {"tight", t.tight},           {"invalid", t.invalid}, {"failures", t.failures}};
    manifest["wall_time_seconds"] = seconds;
    manifest["partial"] = partial;
    if (s.manifest.empty()) {
        err << manifest.dump() << '\n';
    } else {
        std::ofstream mf(s.manifest);
        if (!mf) throw ParseError("cannot write manifest '" + s.manifest + "'");
        mf << manifest.dump(2) << '\n';
    }

    if (partial) return kExitInterrupted;
    if (t.violations > 0 || t.failures > 0) return kExitViolations;
    if (t.invalid > 0 && !s.skip_invalid) return kExitUsage;
    return kExitOk;
}

// Returns the graph of a record, or records why it cannot be used.
const Graph* usable_graph(const Graph6Record& rec, ItemResult& r) {
    std::string why = rec.error;
    if (rec.graph && why.empty()) {
        if (is_subcubic(*rec.graph)) return &*rec.graph;
        why = "graph is not subcubic (maximum degree " + std::to_string(rec.graph->max_degree()) + ")";
    }
    r.invalid = 1;
    r.err = "line " + std::to_string(rec.line_number) + ": " + why + "\n";
    return nullptr;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    SourceArgs source;
    std::string bounds;
    std::vector<std::string> triple;
    std::string k = "0";
    bool tight_only = false;
};

std::vector<BoundSpec> selected_bounds(const VerifyArgs& a) {
    std::vector<BoundSpec> specs;
    const std::string list = a.bounds.empty() && a.triple.empty() ? "all" : a.bounds;
    if (list == "all") {
        specs = theorem3_bounds();
    } else if (!list.empty()) {
        std::stringstream ss(list);
        std::string id;
        while (std::getline(ss, id, ',')) {
            auto spec = theorem3_bound(id);
            if (!spec) throw ParseError("unknown bound '" + id + "' (b1..b5 or all)");
            specs.push_back(*spec);
        }
    }
    if (!a.triple.empty()) {
        const CoefficientTriple x = parse_triple(a.triple);
        specs.push_back(BoundSpec{x.to_string(), x, Rational::parse(a.k), true});
    }
    return specs;
}

std::string report_line(const std::string& g6, const BoundSpec& spec, const BoundReport& r, bool json) {
    if (json) {
        ordered_json j;
        j["graph"] = g6;
        j["bound"] = spec.id;
        j["nu"] = r.nu;
        j["rhs"] = r.rhs.to_string();
        j["slack"] = r.slack.to_string();
        j["tight"] = r.tight;
        return j.dump() + "\n";
    }
    std::string status = r.violated() ? "VIOLATED" : (r.tight ? "tight" : "ok");
    return g6 + " " + spec.id + " nu=" + std::to_string(r.nu) + " rhs=" + r.rhs.to_string() +
           " slack=" + r.slack.to_string() + " (~" + r.slack.to_decimal() + ") " + status + "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const std::vector<BoundSpec> specs = selected_bounds(a);
    if (specs.empty()) throw ParseError("no bounds selected");
    const bool json = a.source.json;
    const bool tight_only = a.tight_only;

    auto work = [&](const Graph6Record& rec) {
        ItemResult r;
        const Graph* g = usable_graph(rec, r);
        if (!g) return r;
        r.checked = 1;
        const DegreeProfile p = degree_profile(*g);
        const int nu = matching_number(*g);
        for (const auto& spec : specs) {
            const BoundReport rep = evaluate_bound(p, nu, spec);
            ++r.reports;
            r.violations += rep.violated();
            r.tight += rep.tight;
            if (!tight_only || rep.tight) r.out += report_line(rec.text, spec, rep, json);
        }
        return r;
    };

    ordered_json config;
    ordered_json ids = ordered_json::array();
    for (const auto& s : specs) ids.push_back(s.id);
    config["bounds"] = ids;
    if (!a.triple.empty()) config["k"] = Rational::parse(a.k).to_string();
    config["tight_only"] = tight_only;
    config["skip_invalid"] = a.source.skip_invalid;
    return drive("verify", a.source, config, work, out, err, [&](const Totals& t) {
        out << "graphs=" << t.checked << " reports=" << t.reports << " violations=" << t.violations
            << " tight=" << t.tight << " invalid=" << t.invalid << '\n';
    });
}

// ---- ge --------------------------------------------------------------------

int cmd_ge(const SourceArgs& s, std::ostream& out, std::ostream& err) {
    auto work = [&](const Graph6Record& rec) {
        ItemResult r;
        const Graph* g = usable_graph(rec, r);
        if (!g) return r;
        r.checked = 1;
        const GEDecomposition d = gallai_edmonds(*g);
        const GEReport rep = verify_ge_properties(*g, d);
        r.failures = !rep.all();
        if (s.json) {
            ordered_json j;
            j["graph"] = rec.text;
            j["A"] = d.A.size();
            j["B"] = d.B.size();
            j["C"] = d.C.size();
            j["a_components_hypomatchable"] = rep.a_components_hypomatchable;
            j["c_has_perfect_matching"] = rep.c_has_perfect_matching;
            j["b_has_surplus"] = rep.b_has_surplus;
            r.out = j.dump() + "\n";
        } else {
            std::ostringstream line;
            line << rec.text << " A=" << d.A.size() << " B=" << d.B.size() << " C=" << d.C.size()
                 << " hypomatchable=" << bool_text(rep.a_components_hypomatchable)
                 << " perfect=" << bool_text(rep.c_has_perfect_matching)
                 << " surplus=" << bool_text(rep.b_has_surplus) << '\n';
            r.out = line.str();
        }
        return r;
    };
    return drive("ge", s, ordered_json::object(), work, out, err, [&](const Totals& t) {
        out << "graphs=" << t.checked << " failures=" << t.failures << " invalid=" << t.invalid << '\n';
    });
}

// ---- family ----------------------------------------------------------------

struct FamilyArgs {
    std::string name;
    std::int64_t t = 0;
    std::string emit = "graph6";
    bool stats = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    const auto f = parse_family(a.name);
    if (!f) throw ParseError("unknown family '" + a.name + "' (G1..G6)");
    const FamilySpec spec{*f, a.t};
    validate(spec);
    if (a.stats || a.emit == "stats") {
        const DegreeProfile p = closed_profile(spec);
        out << to_string(*f) << "(" << a.t << ") n=" << p.order() << " n3=" << p.n3 << " n2=" << p.n2
            << " n1=" << p.n1 << " c=" << p.c << " nu=" << closed_nu(spec);
        if (p.order() <= kMatchingCertifyLimit) out << " certified_nu=" << matching_number(generate(spec));
        out << '\n';
        return kExitOk;
    }
    if (a.emit != "graph6") throw ParseError("--emit must be graph6 or stats");
    out << emit_graph6(generate(spec)) << '\n';
    return kExitOk;
}

// ---- counterexample --------------------------------------------------------

int cmd_counterexample(const std::vector<std::string>& triple, const std::string& k, std::ostream& out) {
    const CoefficientTriple x = parse_triple(triple);
    const Counterexample cx = counterexample(x, Rational::parse(k));
    const DegreeProfile p = closed_profile(cx.family);
    out << "triple: " << x.to_string() << '\n';
    out << "violated: " << polyhedron_P().halfspaces[cx.halfspace].label() << '\n';
    out << "family: " << to_string(cx.family.family) << " t=" << cx.family.t << '\n';
    out << "profile: n=" << p.order() << " n3=" << p.n3 << " n2=" << p.n2 << " n1=" << p.n1 << '\n';
    out << "nu: " << cx.report.nu << '\n';
    out << "rhs: " << cx.report.rhs.to_string() << '\n';
    out << "slack: " << cx.report.slack.to_string() << " (~" << cx.report.slack.to_decimal() << ")\n";
    out << "certified: " << (cx.certified_by_matching ? "max_matching" : "closed form") << '\n';
    if (cx.graph) out << "graph6: " << emit_graph6(*cx.graph) << '\n';
    return kExitOk;
}

}  // namespace

void request_interrupt() noexcept { g_interrupt.store(true, std::memory_order_relaxed); }
void clear_interrupt() noexcept { g_interrupt.store(false, std::memory_order_relaxed); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear lower bounds on the matching number of subcubic graphs", "subcubic-bounds"};
    app.require_subcommand(1);

    PolytopeArgs poly;
    auto* polytope = app.add_subcommand("polytope", "extreme points, membership and transforms");
    polytope->require_subcommand(1);
    auto* p_vertices = polytope->add_subcommand("vertices", "extreme points, sorted");
    p_vertices->add_option("--polyhedron", poly.vertices_of, "P or Pplus");
    p_vertices->add_flag("--maximal", poly.maximal, "only coordinatewise maximal points");
    auto* p_contains = polytope->add_subcommand("contains", "membership with violated constraints");
    p_contains->add_option("triple", poly.triple, "x3 x2 x1")->expected(3)->required();
    p_contains->add_option("--polyhedron", poly.member_of, "P or Pplus");
    auto* p_project = polytope->add_subcommand("project", "map a point of P into P+");
    p_project->add_option("triple", poly.triple, "x3 x2 x1")->expected(3)->required();
    auto* p_shift = polytope->add_subcommand("shift", "(x3 - l, x2, x1 + l)");
    p_shift->add_option("triple", poly.triple, "x3 x2 x1")->expected(3)->required();
    p_shift->add_option("--lambda", poly.lambda, "shift amount, p/q >= 0")->required();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check bounds on a corpus");
    add_source_options(v, verify.source);
    v->add_option("--bounds", verify.bounds, "all or a comma list of b1..b5");
    v->add_option("--triple", verify.triple, "custom coefficients x3 x2 x1")->expected(3);
    v->add_option("--k", verify.k, "constant for --triple, per component");
    v->add_flag("--tight-only", verify.tight_only, "print only tight reports");

    SourceArgs ge_source;
    auto* ge = app.add_subcommand("ge", "Gallai-Edmonds decomposition and its properties");
    add_source_options(ge, ge_source);

    FamilyArgs fam;
    auto* family = app.add_subcommand("family", "extremal family members");
    family->add_option("family", fam.name, "G1..G6")->required();
    family->add_option("t", fam.t, "parameter")->required();
    family->add_option("--emit", fam.emit, "graph6 or stats");
    family->add_flag("--stats", fam.stats, "same as --emit stats");

    std::vector<std::string> cx_triple;
    std::string cx_k = "0";
    auto* cx = app.add_subcommand("counterexample", "family instance violating a bound outside P");
    cx->add_option("triple", cx_triple, "x3 x2 x1")->expected(3)->required();
    cx->add_option("--k", cx_k, "constant K");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (p_vertices->parsed()) return polytope_vertices(poly, out);
        if (p_contains->parsed()) return polytope_contains(poly, out);
        if (p_project->parsed()) return polytope_project(poly, out);
        if (p_shift->parsed()) return polytope_shift(poly, out);
        if (v->parsed()) return cmd_verify(verify, out, err);
        if (ge->parsed()) return cmd_ge(ge_source, out, err);
        if (family->parsed()) return cmd_family(fam, out);
        if (cx->parsed()) return cmd_counterexample(cx_triple, cx_k, out);
    } catch (const TripleInP&) {
        err << "error: triple lies in P; every bound it defines holds with a finite constant\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace subcubic::cli
