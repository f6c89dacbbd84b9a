#include "melonic/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "melonic/families.hpp"
#include "melonic/io.hpp"
#include "melonic/oracle.hpp"

namespace melonic::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned workers_from_env() {
    const char* v = std::getenv("MELONIC_WORKERS");
    if (v == nullptr || *v == '\0') return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw UsageError("MELONIC_WORKERS must be an integer in [1, 1024]");
    return static_cast<unsigned>(n);
}

// Inline JSON when it starts with '{', otherwise a file path.
Json load_json(const std::string& arg) {
    std::string text = arg;
    if (arg.find_first_not_of(" \t\n") == std::string::npos || arg[arg.find_first_not_of(" \t\n")] != '{') {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open " + arg);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

struct Input {
    std::string dsl, shorthand, json;

    void attach(CLI::App* app) {
        app->add_option("--dsl", dsl, "construction as \"(1,3,5)@0.1; (2,3,2)@1.2\"");
        app->add_option("--shorthand", shorthand, "valence-4 shorthand \"(0,1+,2-)\"");
        app->add_option("--json", json, "construction JSON, inline or a file path");
    }
    bool given() const { return !dsl.empty() || !shorthand.empty() || !json.empty(); }

    MelonicConstruction construction() const {
        const int n = int(!dsl.empty()) + int(!shorthand.empty()) + int(!json.empty());
        if (n != 1) throw UsageError("give exactly one of --dsl, --shorthand, --json");
        MelonicConstruction c;
        if (!dsl.empty()) c = parse_dsl(dsl);
        else if (!shorthand.empty()) c = parse_valence4_shorthand(shorthand);
        else c = construction_from_json(load_json(json));
        require_valid(c);
        return c;
    }
};

std::string render(const IntPoly& p, const std::string& format) {
    if (format == "latex") return render_latex(p);
    return render_factored(p);
}

Basis basis_of(const std::string& b) {
    try {
        return parse_basis(b);
    } catch (const std::exception&) {
        throw UsageError("basis must be L, T or S");
    }
}

std::vector<int> parse_qs(const std::string& list) {
    std::vector<int> qs;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int q = std::stoi(tok, &used);
            if (used != tok.size() || q < 2 || q > 5) throw std::invalid_argument(tok);
            qs.push_back(q);
        } catch (const std::exception&) {
            throw UsageError("--q takes a comma list drawn from 2,3,4,5");
        }
    }
    if (qs.empty()) throw UsageError("--q is empty");
    return qs;
}

void emit_failure(std::ostream& out, Json record) {
    record["status"] = "FAIL";
    out << record.dump() << '\n';
}

// ---------------------------------------------------------------------------

struct ClassCmd {
    Input input;
    std::string basis = "T", format = "text";

    int operator()(std::ostream& out) const {
        const MelonicConstruction c = input.construction();
        const GrothendieckClass u = class_of(c);
        const IntPoly p = change_basis(u.poly, basis_of(basis));
        if (format == "json") {
            Json j = to_json(p);
            j["edges"] = u.edges;
            out << j.dump() << '\n';
        } else if (format == "latex") {
            out << render_latex(p) << '\n';
        } else {
            out << render_factored(p) << '\n' << render_expanded(p) << '\n';
        }
        return kExitOk;
    }
};

struct EnumerateCmd {
    int edges = 0;
    bool count_only = false;
    std::string basis = "T", format = "text";

    int operator()(std::ostream& out, unsigned workers) const {
        if (edges < 1) throw UsageError("--edges must be >= 1");
        const ClassCatalogue cat = distinct_classes(edges, workers);
        const Basis b = basis_of(basis);
        auto shown = [&](const std::vector<IntPoly>& v) {
            std::vector<IntPoly> s;
            for (const auto& p : v) s.push_back(change_basis(p, b));
            std::sort(s.begin(), s.end(), IntPolyLess{});
            return s;
        };
        if (count_only) {
            if (format == "json") {
                Json j = Json::array();
                for (const auto& [e, v] : cat) j.push_back(v.size());
                out << j.dump() << '\n';
            } else {
                bool first = true;
                for (const auto& [e, v] : cat) {
                    out << (first ? "" : " ") << v.size();
                    first = false;
                }
                out << '\n';
            }
            return kExitOk;
        }
        if (format == "json") {
            Json j = Json::object();
            for (const auto& [e, v] : cat) {
                Json arr = Json::array();
                for (const auto& p : shown(v)) arr.push_back(to_json(p));
                j[std::to_string(e)] = std::move(arr);
            }
            out << j.dump() << '\n';
        } else if (format == "csv") {
            out << "edges,class\n";
            for (const auto& [e, v] : cat)
                for (const auto& p : shown(v)) out << e << ',' << render_expanded(p) << '\n';
        } else {
            for (const auto& [e, v] : cat) {
                out << "# " << e << " edges: " << v.size() << " classes\n";
                for (const auto& p : shown(v)) out << render_expanded(p) << '\n';
            }
        }
        return kExitOk;
    }
};

struct FamilyCmd {
    std::string name;
    int n = -1, n_max = -1, v = 4, rays = 1;
    bool check = false;
    std::string basis = "T", format = "text";
    std::string base, minus;
    bool bridge = false;
    int order = 6;

    struct Row {
        int n;
        GrothendieckClass u;
        std::optional<IntPoly> extra;  // the sigma polynomial
        std::optional<bool> ok;
    };

    Row compute(int k) const {
        Row r{k, {}, std::nullopt, std::nullopt};
        std::optional<GrothendieckClass> recursed;
        if (name == "gamma") {
            r.u = gamma_class(k);
            if (check) recursed = class_of(gamma_construction(k));
        } else if (name == "gammaprime") {
            r.u = gammaprime_class(k);
            if (check) recursed = class_of(gammaprime_construction(k));
        } else if (name == "gamma3" || (name == "gammav" && v == 3)) {
            r.u = gamma3_class(k);
            if (check) recursed = class_of(gammav_construction(3, k));
        } else if (name == "gammav") {
            r.u = gammav_class(v, k);
            if (check) recursed = class_of(gammav_construction(v, k));
        } else {
            r.u = sigma_class(rays, k);
            r.extra = sigma_poly(rays, k);
            if (check) {
                const OvalConstruction oc = sigma_construction(rays, k);
                const GrothendieckClass full = class_of(oc.construction);
                recursed = GrothendieckClass{
                    exact_div(full.poly, IntPoly::linear_power(1, static_cast<unsigned>(oc.subdivision_correction))),
                    full.edges - oc.subdivision_correction};
            }
        }
        if (recursed) r.ok = *recursed == r.u;
        return r;
    }

    int tower(std::ostream& out) const {
        if (base.empty()) throw UsageError("tower needs --base");
        const GrothendieckClass g = class_from_json(load_json(base));
        std::optional<GrothendieckClass> gm;
        if (!minus.empty()) gm = class_from_json(load_json(minus));
        if (!bridge && !gm) throw UsageError("a non-bridge tower needs --minus (the class of G with e deleted)");
        if (order < 0) throw UsageError("--order must be >= 0");
        const PolySeries s = tower_series(g, bridge, gm, static_cast<std::size_t>(order));
        const Basis b = basis_of(basis);
        Json rows = Json::array();
        for (std::size_t k = 0; k <= s.order(); ++k) {
            const IntPoly p = change_basis(s[k], b);
            if (format == "json") {
                Json j = to_json(p);
                j["n"] = k;
                j["edges"] = g.edges + 4 * static_cast<int>(k);
                rows.push_back(std::move(j));
            } else if (format == "csv") {
                if (k == 0) out << "family,n,edges,class\n";
                out << "tower," << k << ',' << g.edges + 4 * static_cast<int>(k) << ',' << render_expanded(p) << '\n';
            } else {
                out << "n=" << k << " edges=" << g.edges + 4 * static_cast<int>(k) << ": " << render(p, format) << '\n';
            }
        }
        if (format == "json") out << rows.dump() << '\n';
        if (check) {
            const bool ok = satisfies_tower_recursion(s.coeffs(), 1);
            if (!ok) {
                emit_failure(out, Json{{"check", "tower-recursion"}, {"family", "tower"}});
                return kExitVerifyFailed;
            }
            out << "PASS\n";
        }
        return kExitOk;
    }

    int operator()(std::ostream& out) const {
        static const std::set<std::string> known{"gamma", "gammaprime", "gamma3", "gammav", "sigma", "tower"};
        if (!known.count(name)) throw UsageError("unknown family " + name);
        if (name == "tower") return tower(out);
        const int lo = name == "gammaprime" ? 2 : 1;
        if (n < 0 && n_max < 0) throw UsageError("give --n or --n-max");
        const int from = n >= 0 ? n : lo, to = n >= 0 ? n : n_max;
        if (from < lo) throw UsageError("n is below the family's minimum " + std::to_string(lo));
        if (name == "gammav" && v < 3) throw UsageError("--v must be >= 3");
        if (name == "sigma" && rays < 1) throw UsageError("--rays must be >= 1");
        const Basis b = basis_of(basis);
        bool all_ok = true;
        Json rows = Json::array();
        if (format == "csv") out << "family,n,edges,class\n";
        for (int k = from; k <= to; ++k) {
            const Row r = compute(k);
            const IntPoly p = change_basis(r.u.poly, b);
            if (format == "json") {
                Json j = to_json(p);
                j["family"] = name;
                j["n"] = k;
                j["edges"] = r.u.edges;
                if (r.extra) j["sigma"] = to_json(*r.extra);
                if (r.ok) j["check"] = *r.ok ? "PASS" : "FAIL";
                rows.push_back(std::move(j));
            } else if (format == "csv") {
                out << name << ',' << k << ',' << r.u.edges << ',' << render_expanded(p) << '\n';
            } else if (format == "latex") {
                out << k << " & " << r.u.edges << " & $" << render_latex(p) << "$ \\\\\n";
            } else {
                if (r.extra) out << "sigma(s=" << rays << ",n=" << k << ") = " << render_expanded(*r.extra) << '\n';
                out << name << " n=" << k << " edges=" << r.u.edges << ": " << render_factored(p) << '\n';
                if (r.ok) out << (*r.ok ? "PASS" : "FAIL") << '\n';
            }
            if (r.ok && !*r.ok) {
                all_ok = false;
                if (format != "text") emit_failure(out, Json{{"check", "recursion"}, {"family", name}, {"n", k}});
            }
        }
        if (format == "json") out << rows.dump() << '\n';
        return all_ok ? kExitOk : kExitVerifyFailed;
    }
};

struct VerifyCmd {
    int edges = 0;
    bool positivity = false, log_concavity = false, oracle = false;
    std::string qs = "2,3";
    std::uint64_t budget = kDefaultPointBudget;

    int operator()(std::ostream& out, unsigned workers) const {
        if (edges < 1) throw UsageError("--edges must be >= 1");
        const std::vector<int> q_list = oracle ? parse_qs(qs) : std::vector<int>{};
        ClassEngine engine;
        std::set<IntPoly, IntPolyLess> distinct;
        std::size_t trees = 0, failures = 0, oracle_bad = 0;
        auto fail = [&](const char* check, const MelonicConstruction& c, const std::string& detail) {
            ++(check == std::string_view("oracle") ? oracle_bad : failures);
            emit_failure(out, Json{{"check", check}, {"construction", to_dsl(c)}, {"detail", detail}});
        };
        enumerate_reduced(edges, [&](const MelonTree& t) {
            ++trees;
            const IntPoly u = engine.class_poly(t);
            const int e = t.edge_count();
            const IntPoly in_l = change_basis(u, Basis::L);
            if (in_l.degree() != e || in_l.leading() != 1) fail("degree", from_tree(t), render_expanded(in_l));
            const Graph g = realize_graph(from_tree(t));
            if ((eval_int(u, 0) == 0) != (g.loop_number() > 0)) fail("loop-at-T=0", from_tree(t), render_expanded(u));
            if (oracle) {
                const VerifyReport r = verify_class(g, {u, e}, q_list, budget, workers);
                if (!r.ok) fail("oracle", from_tree(t), r.failure);
            }
            distinct.insert(u);
        });
        std::size_t pos_bad = 0, lc_bad = 0;
        for (const auto& u : distinct) {
            const IntPoly s = change_basis(u, Basis::S);
            if (positivity && !is_nonneg_coeffs(s)) {
                ++pos_bad;
                emit_failure(out, Json{{"check", "positivity"}, {"class_S", render_expanded(s)}});
            }
            if (log_concavity && !is_log_concave(s)) {
                ++lc_bad;
                emit_failure(out, Json{{"check", "log-concavity"}, {"class_S", render_expanded(s)}});
            }
        }
        out << "constructions: " << trees << ", distinct classes: " << distinct.size() << '\n';
        out << "structure: " << (failures == 0 ? "PASS" : "FAIL") << '\n';
        if (positivity) out << "positivity: " << (pos_bad == 0 ? "PASS" : "FAIL") << '\n';
        if (log_concavity) out << "log-concavity: " << (lc_bad == 0 ? "PASS" : "FAIL") << '\n';
        if (oracle) out << "oracle (q=" << qs << "): " << (oracle_bad == 0 ? "PASS" : "FAIL") << '\n';
        return failures + pos_bad + lc_bad + oracle_bad == 0 ? kExitOk : kExitVerifyFailed;
    }
};

struct MeasureCmd {
    Input input;
    bool euler = false, hodge = false;
    int point = 0;

    int operator()(std::ostream& out) const {
        if (int(euler) + int(hodge) + int(point != 0) != 1)
            throw UsageError("give exactly one of --euler, --point q, --hodge-deligne");
        const GrothendieckClass u = class_of(input.construction());
        if (euler) out << euler_characteristic(u.poly) << '\n';
        else if (hodge) out << specialize_hodge_deligne(u.poly).render() << '\n';
        else {
            if (point < 2) throw UsageError("--point needs q >= 2");
            out << eval_int(change_basis(u.poly, Basis::L), point) << '\n';
        }
        return kExitOk;
    }
};

struct OracleCmd {
    Input input;
    std::string graph;
    std::string qs = "2,3";
    std::uint64_t budget = kDefaultPointBudget;

    int operator()(std::ostream& out, unsigned workers) const {
        if (!graph.empty() && input.given()) throw UsageError("give a construction or --graph, not both");
        const std::vector<int> q_list = parse_qs(qs);
        if (!graph.empty()) {
            const Graph g = graph_from_json(load_json(graph));
            if (!g.is_connected()) throw UsageError("graph is disconnected");
            const KirchhoffPoly psi = kirchhoff(g);
            out << "edges: " << g.edge_count() << ", loops: " << psi.degree() << ", spanning trees: "
                << psi.monomials.size() << '\n';
            for (int q : q_list) out << "q=" << q << ": " << point_count(psi, q, budget, workers) << '\n';
            return kExitOk;
        }
        const MelonicConstruction c = input.construction();
        const GrothendieckClass u = class_of(c);
        const VerifyReport r = verify_class(c, u, q_list, budget, workers);
        for (const auto& pc : r.checks)
            out << "q=" << pc.q << ": expected " << pc.expected << ", counted " << pc.got << ' '
                << (pc.ok ? "PASS" : "FAIL") << '\n';
        if (!r.ok) {
            emit_failure(out, Json{{"check", "oracle"}, {"construction", to_dsl(c)}, {"detail", r.failure}});
            return kExitVerifyFailed;
        }
        out << "PASS\n";
        return kExitOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grothendieck classes of melonic graph hypersurfaces", "melonic"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "latex", "csv"};

    ClassCmd class_cmd;
    auto* c = app.add_subcommand("class", "class of a melonic construction");
    class_cmd.input.attach(c);
    c->add_option("--basis", class_cmd.basis)->check(CLI::IsMember({"L", "T", "S"}));
    c->add_option("--format", class_cmd.format)->check(CLI::IsMember({"text", "json", "latex"}));

    EnumerateCmd enum_cmd;
    auto* e = app.add_subcommand("enumerate", "distinct classes per edge count");
    e->add_option("--edges", enum_cmd.edges)->required();
    e->add_flag("--count-only", enum_cmd.count_only);
    e->add_option("--basis", enum_cmd.basis)->check(CLI::IsMember({"L", "T", "S"}));
    e->add_option("--format", enum_cmd.format)->check(CLI::IsMember({"text", "json", "csv"}));

    FamilyCmd fam;
    auto* f = app.add_subcommand("family", "closed-form family classes");
    f->add_option("name", fam.name, "gamma|gammaprime|gamma3|gammav|sigma|tower")->required();
    f->add_option("--n", fam.n);
    f->add_option("--n-max", fam.n_max, "tabulate from the family's first n up to this");
    f->add_option("--v", fam.v, "valence for gammav");
    f->add_option("--rays", fam.rays, "number of rays for sigma");
    f->add_flag("--check", fam.check, "cross-validate against the recursion");
    f->add_option("--basis", fam.basis)->check(CLI::IsMember({"L", "T", "S"}));
    f->add_option("--format", fam.format)->check(CLI::IsMember(formats));
    f->add_option("--base", fam.base, "tower: class JSON of G");
    f->add_option("--minus", fam.minus, "tower: class JSON of G with e deleted");
    f->add_flag("--bridge", fam.bridge, "tower: e is a bridge");
    f->add_option("--order", fam.order, "tower: last n");

    VerifyCmd ver;
    auto* v = app.add_subcommand("verify", "property sweeps over all constructions");
    v->add_option("--edges", ver.edges)->required();
    v->add_flag("--positivity", ver.positivity);
    v->add_flag("--log-concavity", ver.log_concavity);
    v->add_flag("--oracle", ver.oracle);
    v->add_option("--q", ver.qs);
    v->add_option("--budget", ver.budget);

    MeasureCmd mea;
    auto* m = app.add_subcommand("measure", "motivic measures of a class");
    mea.input.attach(m);
    m->add_flag("--euler", mea.euler);
    m->add_option("--point", mea.point, "q for the point count");
    m->add_flag("--hodge-deligne", mea.hodge);

    OracleCmd ora;
    auto* o = app.add_subcommand("oracle", "point counts over small finite fields");
    ora.input.attach(o);
    o->add_option("--graph", ora.graph, "graph JSON, inline or a file path");
    o->add_option("--q", ora.qs);
    o->add_option("--budget", ora.budget);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const unsigned workers = workers_from_env();
        if (c->parsed()) return class_cmd(out);
        if (e->parsed()) return enum_cmd(out, workers);
        if (f->parsed()) return fam(out);
        if (v->parsed()) return ver(out, workers);
        if (m->parsed()) return mea(out);
        return ora(out, workers);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& ex) {
        err << ex.what() << '\n';
        return kExitUsage;
    } catch (const InvalidConstruction& ex) {
        err << "invalid construction: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const InexactDivision& ex) {
        out << Json{{"status", "FAIL"}, {"check", "division"}, {"detail", ex.what()}}.dump() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace melonic::cli
