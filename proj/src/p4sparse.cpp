#include "bcol/p4sparse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bcol {

namespace {

bool induces_p4(const Graph& g, const std::array<int, 4>& q) {
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (edges != 3) return false;
    int ones = 0, twos = 0;
    for (int d : deg) {
        if (d == 1) ++ones;
        if (d == 2) ++twos;
    }
    return ones == 2 && twos == 2;  // only the path has this degree split
}

int p4_count5(const Graph& g, const std::array<int, 5>& f) {
    int cnt = 0;
    for (int skip = 0; skip < 5; ++skip) {
        std::array<int, 4> q;
        int w = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) q[w++] = f[i];
        if (induces_p4(g, q)) ++cnt;
    }
    return cnt;
}

}  // namespace

P4SparseCheck is_p4_sparse(const Graph& g) {
    P4SparseCheck out;
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        std::array<int, 5> f{{a, b, c, d, e}};
                        if (p4_count5(g, f) > 1) {
                            out.ok = false;
                            std::copy(f.begin(), f.end(), out.witness.begin());
                            return out;
                        }
                    }
    return out;
}

namespace {

std::optional<SpiderParts> detect_thin(const Graph& g) {
    int n = g.n();
    std::vector<std::pair<int, int>> pairs;  // (clique, stable)
    std::vector<char> is_stable(n, 0), is_clique(n, 0);
    for (int v = 0; v < n; ++v)
        if (g.deg(v) == 1) is_stable[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!is_stable[v]) continue;
        int c = g.neighbors(v).first();
        if (is_stable[c] || is_clique[c]) return std::nullopt;
        is_clique[c] = 1;
        pairs.push_back({c, v});
    }
    if (pairs.size() < 2) return std::nullopt;
    std::sort(pairs.begin(), pairs.end());
    SpiderParts p;
    for (auto [c, s] : pairs) {
        p.clique.push_back(c);
        p.stable.push_back(s);
    }
    if (!g.is_clique(p.clique)) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (is_stable[v] || is_clique[v]) continue;
        for (int c : p.clique)
            if (!g.has_edge(v, c)) return std::nullopt;
        p.head.push_back(v);
    }
    return p;
}

}  // namespace

std::optional<SpiderParts> detect_spider(const Graph& g) {
    if (g.n() < 2 || !g.connected())
        throw std::invalid_argument("spider detection needs a connected graph on >= 2 vertices");
    if (auto thin = detect_thin(g)) return thin;
    auto co = detect_thin(g.complement());
    if (!co) return std::nullopt;
    // complementing a thick spider turns its clique into the degree-one side
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < co->clique.size(); ++i) pairs.push_back({co->stable[i], co->clique[i]});
    std::sort(pairs.begin(), pairs.end());
    SpiderParts p;
    p.thick = true;
    for (auto [c, s] : pairs) {
        p.clique.push_back(c);
        p.stable.push_back(s);
    }
    p.head = co->head;
    return p;
}

bool verify_spider(const Graph& g, const SpiderParts& p) {
    size_t k = p.clique.size();
    if (k < 2 || p.stable.size() != k) return false;
    std::vector<char> seen(g.n(), 0);
    auto mark = [&](const std::vector<int>& vs) {
        for (int v : vs) {
            if (v < 0 || v >= g.n() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    };
    if (!mark(p.clique) || !mark(p.stable) || !mark(p.head)) return false;
    for (char s : seen)
        if (!s) return false;
    if (!g.is_clique(p.clique) || !g.is_stable(p.stable)) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            bool want = p.thick ? i != j : i == j;
            if (g.has_edge(p.stable[i], p.clique[j]) != want) return false;
        }
    for (int r : p.head)
        for (size_t i = 0; i < k; ++i) {
            if (!g.has_edge(r, p.clique[i])) return false;
            if (g.has_edge(r, p.stable[i])) return false;
        }
    return true;
}

namespace {

// connected pieces of the induced subgraph, each ascending, ordered by
// first vertex
std::vector<std::vector<int>> pieces(const Graph& sub) {
    int n = sub.n();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int r = 0; r < n; ++r) {
        if (comp[r] >= 0) continue;
        comp[r] = nc;
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = sub.neighbors(v).first(); w >= 0; w = sub.neighbors(v).next(w))
                if (comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

struct Builder {
    const Graph& g;
    PrimevalTree t;

    int add(TreeNode nd) {
        t.nodes.push_back(std::move(nd));
        return int(t.nodes.size()) - 1;
    }

    int leaf(LeafKind kind, std::vector<int> verts, SpiderParts parts = {}) {
        TreeNode nd;
        nd.kind = NodeKind::Leaf;
        nd.leaf = kind;
        nd.verts = std::move(verts);
        nd.parts = std::move(parts);
        return add(nd);
    }

    int internal(NodeKind kind, int l, int r, SpiderParts parts = {}) {
        TreeNode nd;
        nd.kind = kind;
        nd.parts = std::move(parts);
        nd.left = l;
        nd.right = r;
        nd.verts = t.nodes[l].verts;
        nd.verts.insert(nd.verts.end(), t.nodes[r].verts.begin(), t.nodes[r].verts.end());
        std::sort(nd.verts.begin(), nd.verts.end());
        int id = add(std::move(nd));
        t.nodes[l].parent = id;
        t.nodes[r].parent = id;
        return id;
    }

    // fold parts under Union/Join; singleton parts are merged into one
    // stable respectively clique part so the tree stays minimal
    int fold(NodeKind kind, const std::vector<std::vector<int>>& parts_orig) {
        std::vector<int> singles;
        std::vector<std::vector<int>> big;
        for (const auto& p : parts_orig) {
            if (p.size() == 1)
                singles.push_back(p[0]);
            else
                big.push_back(p);
        }
        struct Part {
            int min_vert;
            int node;
        };
        std::vector<Part> built;
        if (!singles.empty()) {
            std::sort(singles.begin(), singles.end());
            LeafKind lk = singles.size() >= 2 ? (kind == NodeKind::Union ? LeafKind::Stable : LeafKind::Clique)
                                              : LeafKind::Clique;
            built.push_back({singles[0], leaf(lk, singles)});
        }
        for (const auto& p : big) built.push_back({p[0], build(p)});
        std::sort(built.begin(), built.end(),
                  [](const Part& a, const Part& b) { return a.min_vert < b.min_vert; });
        int acc = built[0].node;
        for (size_t i = 1; i < built.size(); ++i) acc = internal(kind, acc, built[i].node);
        return acc;
    }

    int build(const std::vector<int>& verts) {
        if (verts.size() == 1) return leaf(LeafKind::Clique, verts);
        Graph sub = g.induced(verts);
        auto to_orig = [&](const std::vector<int>& local) {
            std::vector<int> out;
            out.reserve(local.size());
            for (int v : local) out.push_back(verts[v]);
            return out;
        };
        auto comps = pieces(sub);
        if (comps.size() >= 2) {
            std::vector<std::vector<int>> parts;
            for (auto& c : comps) parts.push_back(to_orig(c));
            return fold(NodeKind::Union, parts);
        }
        auto cocomps = pieces(sub.complement());
        if (cocomps.size() >= 2) {
            std::vector<std::vector<int>> parts;
            for (auto& c : cocomps) parts.push_back(to_orig(c));
            return fold(NodeKind::Join, parts);
        }
        auto sp = detect_spider(sub);
        if (!sp)
            throw std::logic_error("connected co-connected piece of a p4-sparse graph is not a spider");
        SpiderParts orig;
        orig.thick = sp->thick;
        orig.clique = to_orig(sp->clique);
        orig.stable = to_orig(sp->stable);
        orig.head = to_orig(sp->head);
        std::vector<int> body = orig.clique;
        body.insert(body.end(), orig.stable.begin(), orig.stable.end());
        std::sort(body.begin(), body.end());
        if (orig.head.empty()) return leaf(LeafKind::SpiderBody, body, orig);
        int bodyleaf = leaf(LeafKind::SpiderBody, body, orig);
        int headnode = build(orig.head);
        return internal(NodeKind::Spider, bodyleaf, headnode, orig);
    }
};

}  // namespace

PrimevalTree primeval_decompose(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) throw std::invalid_argument("empty vertex set has no decomposition");
    for (int v : verts)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    Graph sub = g.induced(verts);
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    auto chk = is_p4_sparse(sub);
    if (!chk.ok) {
        std::string msg = "not p4-sparse, vertices";
        for (int v : chk.witness) msg += " " + std::to_string(sorted[v]);
        msg += " induce two P4s";
        throw std::invalid_argument(msg);
    }
    Builder b{g, {}};
    b.t.root = b.build(sorted);
    return std::move(b.t);
}

PrimevalTree primeval_decompose(const Graph& g) {
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return primeval_decompose(g, all);
}

namespace {

void collect_leaves(const PrimevalTree& t, int id, std::vector<int>& out) {
    const TreeNode& nd = t.nodes[id];
    if (nd.kind == NodeKind::Leaf) {
        out.push_back(id);
        return;
    }
    collect_leaves(t, nd.left, out);
    collect_leaves(t, nd.right, out);
}

}  // namespace

std::vector<int> tree_leaves(const PrimevalTree& t) {
    std::vector<int> out;
    if (t.root >= 0) collect_leaves(t, t.root, out);
    return out;
}

const char* reduction_kind_name(ReductionStep::Kind k) {
    switch (k) {
        case ReductionStep::Kind::StableKeep: return "stable-keep";
        case ReductionStep::Kind::SpiderDropStable: return "spider-drop-stable";
        case ReductionStep::Kind::CliqueAbsorbUnion: return "clique-absorb-union";
        case ReductionStep::Kind::CliqueAbsorbSpider: return "clique-absorb-spider";
    }
    return "?";
}

}  // namespace bcol
