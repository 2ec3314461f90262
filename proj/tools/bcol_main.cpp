#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcol/bhom.hpp"
#include "bcol/chordal.hpp"
#include "bcol/chordal_descent.hpp"
#include "bcol/coloring.hpp"
#include "bcol/dimacs.hpp"
#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/graph.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/oracle.hpp"
#include "bcol/p4sparse.hpp"
#include "bcol/reproduce.hpp"

using nlohmann::json;
using namespace bcol;

namespace {

struct UsageError {
    std::string msg;
};

int need_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw UsageError{std::string("bad ") + what + ": " + s};
    }
}

bool is_family(const std::string& name) {
    static const char* names[] = {"complete",   "path",          "cycle",
                                  "hypercube",  "crown",         "spider",
                                  "pivot_tree", "random_chordal", "random_p4_sparse"};
    for (const char* f : names)
        if (name == f) return true;
    return false;
}

Graph make_family(const std::string& name, const std::vector<std::string>& p, uint32_t seed) {
    auto arity = [&](size_t lo, size_t hi) {
        if (p.size() < lo || p.size() > hi)
            throw UsageError{"family " + name + " wants " + std::to_string(lo) +
                             (hi > lo ? ".." + std::to_string(hi) : "") + " parameter(s)"};
    };
    if (name == "complete") { arity(1, 1); return complete(need_int(p[0], "order")); }
    if (name == "path") { arity(1, 1); return path(need_int(p[0], "order")); }
    if (name == "cycle") { arity(1, 1); return cycle(need_int(p[0], "order")); }
    if (name == "hypercube") { arity(1, 1); return hypercube(need_int(p[0], "dimension")); }
    if (name == "crown") { arity(1, 1); return crown(need_int(p[0], "half")); }
    if (name == "spider") {
        arity(1, 2);
        bool thick = false;
        if (p.size() == 2) {
            if (p[1] == "thick") thick = true;
            else if (p[1] != "thin") throw UsageError{"spider wants thin or thick"};
        }
        return spider(need_int(p[0], "pairs"), thick);
    }
    if (name == "pivot_tree") { arity(0, 0); return pivoted_tree(); }
    if (name == "random_chordal") {
        arity(1, 2);
        uint32_t s = p.size() == 2 ? uint32_t(need_int(p[1], "seed")) : seed;
        return random_chordal(need_int(p[0], "order"), s);
    }
    if (name == "random_p4_sparse") {
        arity(1, 2);
        uint32_t s = p.size() == 2 ? uint32_t(need_int(p[1], "seed")) : seed;
        return random_p4_sparse(need_int(p[0], "order"), s);
    }
    throw UsageError{"unknown family " + name};
}

// path, "-" for stdin, or family:comma,separated,params
Graph load_graph(const std::string& arg, uint32_t seed, bool& used_stdin) {
    if (arg == "-") {
        if (used_stdin) throw UsageError{"stdin can feed only one graph"};
        used_stdin = true;
        return read_dimacs(std::cin);
    }
    size_t colon = arg.find(':');
    std::string head = arg.substr(0, colon);
    if (is_family(head)) {
        std::vector<std::string> params;
        if (colon != std::string::npos) {
            std::istringstream ss(arg.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) params.push_back(tok);
        }
        return make_family(head, params, seed);
    }
    return read_dimacs_file(arg);
}

std::vector<int> read_int_list(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open ") + what + " " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<int> out;
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '[') {
        for (const auto& x : json::parse(text)) out.push_back(x.get<int>());
        return out;
    }
    std::istringstream ss(text);
    int v;
    while (ss >> v) out.push_back(v);
    if (ss.fail() && !ss.eof())
        throw std::invalid_argument(std::string(what) + " " + path + " holds a non-integer");
    return out;
}

Coloring read_coloring(const std::string& path, int colors) {
    Coloring c;
    c.color = read_int_list(path, "coloring file");
    c.k = colors;
    if (c.k == 0)
        for (int x : c.color) c.k = std::max(c.k, x);
    return c;
}

int emit(json j, int code = 0) {
    j["schema"] = "v1";
    std::cout << j.dump(2) << "\n";
    return code;
}

json jcoloring(const Coloring& c) { return json{{"k", c.k}, {"colors", c.color}}; }

json jchi(const ChiResult& r) {
    return json{{"outcome", outcome_name(r.outcome)}, {"value", r.value}, {"nodes", r.nodes}};
}

json jchib(const ChibResult& r) {
    return json{{"outcome", outcome_name(r.outcome)}, {"value", r.value}, {"nodes", r.nodes}};
}

json jspectrum(const SpectrumReport& sp) {
    json w = json::object();
    for (const auto& [k, col] : sp.witnesses) w[std::to_string(k)] = jcoloring(col);
    json j{{"n", sp.n},
           {"m", sp.m},
           {"degree_bound", sp.degree_bound},
           {"chi_outcome", outcome_name(sp.chi_outcome)},
           {"chi", sp.chi},
           {"chib_outcome", outcome_name(sp.chib_outcome)},
           {"chi_b", sp.chi_b},
           {"spectrum", sp.spectrum},
           {"unknown", sp.unknown},
           {"gaps", sp.gaps},
           {"witnesses", w}};
    j["continuous"] = sp.continuous ? json(*sp.continuous) : json();
    return j;
}

json jbcheck(const BCheck& c) {
    return json{{"ok", c.ok},           {"proper", c.proper}, {"bad_u", c.bad_u},
                {"bad_v", c.bad_v},     {"b_vertex", c.b_vertex}, {"missing", c.missing}};
}

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Union: return "union";
        case NodeKind::Join: return "join";
        case NodeKind::Spider: return "spider";
        case NodeKind::Leaf: return "leaf";
    }
    return "?";
}

const char* leaf_kind_name(LeafKind k) {
    switch (k) {
        case LeafKind::Clique: return "clique";
        case LeafKind::Stable: return "stable";
        case LeafKind::SpiderBody: return "spider_body";
    }
    return "?";
}

json jparts(const SpiderParts& p) {
    return json{{"clique", p.clique}, {"stable", p.stable}, {"head", p.head}, {"thick", p.thick}};
}

json jpairs(const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (const auto& [x, c] : v) a.push_back(json::array({x, c}));
    return a;
}

json jtrace(const ReductionTrace& t) {
    json steps = json::array();
    for (const ReductionStep& s : t.steps) {
        json e{{"kind", reduction_kind_name(s.kind)},
               {"removed", s.removed},
               {"keeper", s.keeper}};
        if (!s.keeper_snapshot.empty()) e["keeper_snapshot"] = jpairs(s.keeper_snapshot);
        if (!s.removed_snapshot.empty()) e["removed_snapshot"] = jpairs(s.removed_snapshot);
        steps.push_back(std::move(e));
    }
    return json{{"copies", t.ell}, {"steps", steps}, {"final_alive", t.final_alive}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"b-colorings of graphs and their lexicographic products"};
    app.require_subcommand(1);

    uint32_t seed = 0;
    int jobs = 1, colors = 0, kwant = 0, ell = 1, elim = 1, crit = 0;
    uint64_t max_nodes = Budget{}.max_nodes;
    std::string arg_g, arg_h, arg_k, coloring_file, pre_file, map_file, map2_file;
    std::vector<std::string> fam_params;

    auto* gen = app.add_subcommand("gen", "emit a graph family member as DIMACS");
    gen->add_option("family", arg_g, "family name")->required();
    gen->add_option("params", fam_params, "family parameters");
    gen->add_option("--seed", seed, "seed for random families");

    auto* product = app.add_subcommand("product", "emit the lexicographic product as DIMACS");
    product->add_option("left", arg_g)->required();
    product->add_option("right", arg_h)->required();
    product->add_option("--seed", seed);

    auto* chi = app.add_subcommand("chi", "chromatic number");
    chi->add_option("graph", arg_g)->required();
    chi->add_option("--seed", seed);
    chi->add_option("--max-nodes", max_nodes, "search node budget");

    auto* chib = app.add_subcommand("chib", "b-chromatic number");
    chib->add_option("graph", arg_g)->required();
    chib->add_option("--seed", seed);
    chib->add_option("--max-nodes", max_nodes);

    auto* spectrum = app.add_subcommand("spectrum", "b-spectrum with witnesses");
    spectrum->add_option("graph", arg_g)->required();
    spectrum->add_option("--seed", seed);
    spectrum->add_option("--jobs", jobs, "parallel searches, one per k");
    spectrum->add_option("--max-nodes", max_nodes);

    auto* bfind = app.add_subcommand("bfind", "search one k, optionally around pinned colors");
    bfind->add_option("graph", arg_g)->required();
    bfind->add_option("-k,--k", kwant, "color count")->required();
    bfind->add_option("--pre", pre_file, "pinned colors, 0 = free");
    bfind->add_option("--seed", seed);
    bfind->add_option("--max-nodes", max_nodes);

    auto* verify = app.add_subcommand("verify", "check a coloring file for the b-property");
    verify->add_option("graph", arg_g)->required();
    verify->add_option("--coloring", coloring_file)->required();
    verify->add_option("--colors", colors, "color count, default max used");
    verify->add_option("--seed", seed);

    auto* hom = app.add_subcommand("hom", "b-homomorphism checks and lifts");
    hom->require_subcommand(1);
    auto* homv = hom->add_subcommand("verify", "check a vertex map");
    homv->add_option("source", arg_g)->required();
    homv->add_option("target", arg_h)->required();
    homv->add_option("--map", map_file)->required();
    auto* homl = hom->add_subcommand("lift-left", "apply the map on the left product factor");
    homl->add_option("source", arg_g)->required();
    homl->add_option("target", arg_h)->required();
    homl->add_option("other", arg_k)->required();
    homl->add_option("--map", map_file)->required();
    auto* homr = hom->add_subcommand("lift-right", "apply the map on the right product factor");
    homr->add_option("source", arg_g)->required();
    homr->add_option("target", arg_h)->required();
    homr->add_option("other", arg_k)->required();
    homr->add_option("--map", map_file)->required();
    auto* homc = hom->add_subcommand("compose", "chain two maps");
    homc->add_option("first", arg_g)->required();
    homc->add_option("middle", arg_h)->required();
    homc->add_option("last", arg_k)->required();
    homc->add_option("--map", map_file, "first map")->required();
    homc->add_option("--map2", map2_file, "second map")->required();
    for (auto* s : {homv, homl, homr, homc}) s->add_option("--seed", seed);

    auto* decompose = app.add_subcommand("decompose", "primeval tree of a p4-sparse graph");
    decompose->add_option("graph", arg_g)->required();
    decompose->add_option("--seed", seed);

    auto* dp4 = app.add_subcommand("descend-p4", "one color fewer on a p4-sparse clique blowup");
    dp4->add_option("graph", arg_g)->required();
    dp4->add_option("-l,--copies", ell, "clique size of the blowup");
    dp4->add_option("--coloring", coloring_file)->required();
    dp4->add_option("--eliminate", elim, "color to drain, default 1");
    dp4->add_option("--seed", seed);

    auto* dch = app.add_subcommand("descend-chordal", "one color fewer on a chordal product");
    dch->add_option("left", arg_g)->required();
    dch->add_option("right", arg_h)->required();
    dch->add_option("--coloring", coloring_file)->required();
    dch->add_option("--seed", seed);

    auto* dkl = app.add_subcommand("descend-kl", "one color fewer on K_l of some graph");
    dkl->add_option("l", ell, "left clique size")->required();
    dkl->add_option("right", arg_h)->required();
    dkl->add_option("--coloring", coloring_file)->required();
    dkl->add_option("--seed", seed);
    dkl->add_option("--max-nodes", max_nodes);

    auto* relations = app.add_subcommand("relations", "product numbers against blowup surrogates");
    relations->add_option("left", arg_g)->required();
    relations->add_option("right", arg_h)->required();
    relations->add_option("--seed", seed);
    relations->add_option("--max-nodes", max_nodes);

    auto* corollary = app.add_subcommand("corollary", "interval guarantees for a chordal left factor");
    corollary->add_option("left", arg_g)->required();
    corollary->add_option("right", arg_h)->required();
    corollary->add_option("--seed", seed);
    corollary->add_option("--max-nodes", max_nodes);

    auto* reproduce = app.add_subcommand("reproduce", "re-run the recorded claims");
    reproduce->add_option("--id", crit, "single criterion, default all");
    reproduce->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    bool used_stdin = false;
    auto graph_arg = [&](const std::string& a) { return load_graph(a, seed, used_stdin); };

    try {
        if (*gen) {
            Graph g = make_family(arg_g, fam_params, seed);
            write_dimacs(std::cout, g);
            return 0;
        }
        if (*product) {
            Graph g = graph_arg(arg_g), h = graph_arg(arg_h);
            write_dimacs(std::cout, lex_product(g, h));
            return 0;
        }
        if (*chi) {
            ChiResult r = chromatic_number(graph_arg(arg_g), Budget{max_nodes});
            json j = jchi(r);
            if (r.outcome == Outcome::Found) j["witness"] = jcoloring(r.witness);
            return emit(j, r.outcome == Outcome::Unknown ? 2 : 0);
        }
        if (*chib) {
            ChibResult r = b_chromatic_number(graph_arg(arg_g), Budget{max_nodes});
            json j = jchib(r);
            if (r.outcome == Outcome::Found) j["witness"] = jcoloring(r.witness);
            return emit(j, r.outcome == Outcome::Unknown ? 2 : 0);
        }
        if (*spectrum) {
            SpectrumReport sp = b_spectrum(graph_arg(arg_g), Budget{max_nodes}, jobs);
            return emit(jspectrum(sp), sp.unknown.empty() ? 0 : 2);
        }
        if (*bfind) {
            Graph g = graph_arg(arg_g);
            std::vector<int> pre;
            if (!pre_file.empty()) pre = read_int_list(pre_file, "precoloring file");
            BWitness w = exists_b_coloring(g, kwant, pre, Budget{max_nodes});
            json j{{"outcome", outcome_name(w.outcome)}, {"nodes", w.nodes}};
            if (w.outcome == Outcome::Found) j["coloring"] = jcoloring(w.coloring);
            return emit(j, w.outcome == Outcome::Unknown ? 2 : 0);
        }
        if (*verify) {
            Graph g = graph_arg(arg_g);
            Coloring c = read_coloring(coloring_file, colors);
            return emit(jbcheck(check_b_coloring(g, c)));
        }
        if (*homv || *homl || *homr || *homc) {
            Graph src = graph_arg(arg_g), dst = graph_arg(arg_h);
            BHomMap f{src, dst, read_int_list(map_file, "map file")};
            BHomCheck base = check_bhom(f);
            if (*homv)
                return emit(json{{"ok", base.ok},
                                 {"bad_u", base.bad_u},
                                 {"bad_v", base.bad_v},
                                 {"bad_target", base.bad_target},
                                 {"reason", base.reason}});
            if (!base.ok) throw std::invalid_argument("the given map is not a b-homomorphism: " + base.reason);
            BHomMap out;
            if (*homc) {
                Graph last = graph_arg(arg_k);
                BHomMap snd{dst, last, read_int_list(map2_file, "map file")};
                BHomCheck mid = check_bhom(snd);
                if (!mid.ok)
                    throw std::invalid_argument("the second map is not a b-homomorphism: " + mid.reason);
                out = compose(f, snd);
            } else {
                Graph other = graph_arg(arg_k);
                out = *homl ? lift_outer(f, other) : lift_inner(f, other);
            }
            BHomCheck chk = check_bhom(out);
            return emit(json{{"map", out.map},
                             {"source_n", out.source.n()},
                             {"target_n", out.target.n()},
                             {"ok", chk.ok}});
        }
        if (*decompose) {
            Graph g = graph_arg(arg_g);
            PrimevalTree t = primeval_decompose(g);
            json nodes = json::array();
            for (const TreeNode& nd : t.nodes) {
                json e{{"kind", node_kind_name(nd.kind)},
                       {"verts", nd.verts},
                       {"left", nd.left},
                       {"right", nd.right},
                       {"parent", nd.parent}};
                if (nd.kind == NodeKind::Leaf) e["leaf"] = leaf_kind_name(nd.leaf);
                if (nd.kind == NodeKind::Spider ||
                    (nd.kind == NodeKind::Leaf && nd.leaf == LeafKind::SpiderBody))
                    e["parts"] = jparts(nd.parts);
                nodes.push_back(std::move(e));
            }
            return emit(json{{"root", t.root}, {"nodes", nodes}});
        }
        if (*dp4) {
            Graph g = graph_arg(arg_g);
            Coloring psi = read_coloring(coloring_file, colors);
            DescendP4Result r = descend_p4sparse(g, ell, psi, elim);
            json j{{"trace", jtrace(r.trace)},
                   {"reduced_coloring", jcoloring(r.reduced_coloring)}};
            if (r.kind == DescendP4Result::Kind::Colored) {
                j["kind"] = "colored";
                j["coloring"] = jcoloring(r.coloring);
            } else {
                j["kind"] = "clique";
                j["clique"] = r.clique;
            }
            return emit(j);
        }
        if (*dch) {
            Graph g = graph_arg(arg_g), h = graph_arg(arg_h);
            Coloring psi = read_coloring(coloring_file, colors);
            ChordalDescentResult r = descend_chordal_product(g, h, psi);
            json back = json::array();
            for (const auto& [v, cols] : r.backfill) back.push_back(json{{"vertex", v}, {"colors", cols}});
            return emit(json{{"coloring", jcoloring(r.coloring)},
                             {"order", r.order},
                             {"break_index", r.break_index},
                             {"lost_color", r.lost_color},
                             {"witness_copy", r.witness_copy},
                             {"replacement_color", r.replacement_color},
                             {"spare_color", r.spare_color},
                             {"backfill", back}});
        }
        if (*dkl) {
            Graph h = graph_arg(arg_h);
            Coloring psi = read_coloring(coloring_file, colors);
            KlDescendResult r = descend_complete_left(ell, h, psi, Budget{max_nodes});
            json j{{"outcome", outcome_name(r.outcome)},
                   {"copy", r.copy},
                   {"kprime", r.kprime},
                   {"detail", r.detail},
                   {"nodes", r.nodes}};
            if (r.outcome == Outcome::Found) j["coloring"] = jcoloring(r.coloring);
            return emit(j, r.outcome == Outcome::Unknown ? 2 : 0);
        }
        if (*relations) {
            Graph g = graph_arg(arg_g), h = graph_arg(arg_h);
            RelationsReport r = check_relations(g, h, Budget{max_nodes});
            json blow = json::object();
            for (const auto& [x, sp] : r.blowup_spectra) blow[std::to_string(x)] = jspectrum(sp);
            json j{{"chi_left", jchi(r.chi_left)},
                   {"chi_right", jchi(r.chi_right)},
                   {"chib_left", jchib(r.chib_left)},
                   {"chib_right", jchib(r.chib_right)},
                   {"chi_product", jchi(r.chi_product)},
                   {"chi_left_blowup", jchi(r.chi_left_blowup)},
                   {"chi_complete_right", jchi(r.chi_complete_right)},
                   {"chib_product", jchib(r.chib_product)},
                   {"chib_left_blowup", jchib(r.chib_left_blowup)},
                   {"chib_complete_right", jchib(r.chib_complete_right)},
                   {"right_spectrum", jspectrum(r.right_spectrum)},
                   {"product_spectrum", jspectrum(r.product_spectrum)},
                   {"blowup_spectra", blow},
                   {"lower_bound_chain", tri_name(r.lower_bound_chain)},
                   {"coloring_chain", tri_name(r.coloring_chain)},
                   {"spectrum_containment", tri_name(r.spectrum_containment)},
                   {"detail", r.detail}};
            bool open = r.lower_bound_chain == Tri::Unknown || r.coloring_chain == Tri::Unknown ||
                        r.spectrum_containment == Tri::Unknown;
            return emit(j, open ? 2 : 0);
        }
        if (*corollary) {
            Graph g = graph_arg(arg_g), h = graph_arg(arg_h);
            CorollaryReport r = check_final_corollary(g, h, Budget{max_nodes});
            json j{{"inner_size", r.inner_size},
                   {"chi_left", jchi(r.chi_left)},
                   {"chib_right", jchib(r.chib_right)},
                   {"chib_blowup", jchib(r.chib_blowup)},
                   {"product", jspectrum(r.product)},
                   {"interval_covered", tri_name(r.interval_covered)},
                   {"gap_empty", tri_name(r.gap_empty)},
                   {"detail", r.detail}};
            bool open = r.interval_covered == Tri::Unknown || r.gap_empty == Tri::Unknown;
            return emit(j, open ? 2 : 0);
        }
        if (*reproduce) {
            std::vector<CriterionResult> rows =
                crit ? std::vector<CriterionResult>{run_criterion(crit, jobs)} : run_acceptance(jobs);
            json arr = json::array();
            bool bad = false, open = false;
            for (const CriterionResult& r : rows) {
                arr.push_back(json{{"id", r.id},
                                   {"name", r.name},
                                   {"status", criterion_status_name(r.status)},
                                   {"detail", r.detail}});
                bad = bad || r.status == CriterionStatus::Fail;
                open = open || r.status == CriterionStatus::Unknown;
            }
            return emit(json{{"criteria", arr}}, bad ? 1 : open ? 2 : 0);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
