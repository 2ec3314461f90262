#include "bcol/exact.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "bcol/clique.hpp"

namespace bcol {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::None: return "none";
        case Outcome::Unknown: return "unknown";
    }
    return "?";
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// backtracking core shared by the rep-set enumeration; colors live in bit
// positions 1..k of a 64-bit mask
struct BSearch {
    const Graph& g;
    int n, k;
    uint64_t budget;
    const std::vector<int>& pre;

    uint64_t nodes = 0;
    bool stopped = false;
    bool have = false;
    Coloring found;

    std::vector<int> reps;
    std::vector<int> color;
    std::vector<std::vector<int>> cnt;
    std::vector<uint64_t> forb;
    std::vector<int> satc;
    uint64_t full;

    BSearch(const Graph& g_, int k_, const std::vector<int>& pre_, uint64_t budget_)
        : g(g_), n(g_.n()), k(k_), budget(budget_), pre(pre_) {
        color.assign(n, 0);
        cnt.assign(n, std::vector<int>(k + 1, 0));
        forb.assign(n, 0);
        satc.assign(n, 0);
        full = ((uint64_t(1) << k) - 1) << 1;
    }

    bool tick() {
        if (++nodes > budget) stopped = true;
        return !stopped;
    }

    uint64_t allowed(int v) const {
        uint64_t a = full & ~forb[v];
        if (pre.size() && pre[v]) a &= uint64_t(1) << pre[v];
        return a;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
            if (cnt[u][c]++ == 0) {
                forb[u] |= uint64_t(1) << c;
                ++satc[u];
            }
        }
    }

    void unassign(int v, int c) {
        color[v] = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
            if (--cnt[u][c] == 0) {
                forb[u] &= ~(uint64_t(1) << c);
                --satc[u];
            }
        }
    }

    // every rep must still be able to meet all colors but its own; exact once
    // its neighborhood is fully colored
    bool feasible() const {
        for (int i = 0; i < k; ++i) {
            int r = reps[i];
            uint64_t missing = full & ~(uint64_t(1) << (i + 1)) & ~forb[r];
            if (!missing) continue;
            uint64_t cover = 0;
            for (int u = g.neighbors(r).first(); u >= 0; u = g.neighbors(r).next(u))
                if (!color[u]) cover |= allowed(u);
            if (missing & ~cover) return false;
        }
        return true;
    }

    bool dfs() {
        if (!tick()) return false;
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!color[u] && (v == -1 || satc[u] > satc[v])) v = u;
        if (v == -1) {
            found.k = k;
            found.color = color;
            have = true;
            return true;
        }
        uint64_t av = allowed(v);
        while (av) {
            int c = __builtin_ctzll(av);
            av &= av - 1;
            assign(v, c);
            if (feasible() && dfs()) return true;
            unassign(v, c);
            if (stopped) return false;
        }
        return false;
    }

    bool try_reps(const std::vector<int>& rs) {
        reps = rs;
        for (int i = 0; i < k; ++i) assign(rs[i], i + 1);
        bool ok = feasible() && dfs();
        for (int i = k - 1; i >= 0; --i) unassign(rs[i], i + 1);
        return ok;
    }
};

// ascending rep tuples with color i+1 on the i-th smallest; any b-coloring can
// be relabeled so the least witness of each class follows this pattern, so the
// enumeration loses nothing
bool combos(BSearch& s, const std::vector<int>& cands, size_t from, std::vector<int>& cur) {
    if (int(cur.size()) == s.k) return s.try_reps(cur);
    size_t need = size_t(s.k) - cur.size();
    for (size_t i = from; i + need <= cands.size(); ++i) {
        if (!s.tick()) return false;
        cur.push_back(cands[i]);
        if (combos(s, cands, i + 1, cur)) return true;
        cur.pop_back();
        if (s.stopped) return false;
    }
    return false;
}

// pinned colors break the relabeling symmetry, so choose a witness per color
// with no order constraint
bool slots(BSearch& s, const std::vector<int>& cands, int c, std::vector<int>& cur) {
    if (c > s.k) return s.try_reps(cur);
    for (int r : cands) {
        if (s.pre.size() && s.pre[r] && s.pre[r] != c) continue;
        if (std::find(cur.begin(), cur.end(), r) != cur.end()) continue;
        if (!s.tick()) return false;
        cur.push_back(r);
        if (slots(s, cands, c + 1, cur)) return true;
        cur.pop_back();
        if (s.stopped) return false;
    }
    return false;
}

}  // namespace

BWitness exists_b_coloring(const Graph& g, int k, const std::vector<int>& pre, Budget budget) {
    if (k < 1) throw std::invalid_argument("color count must be positive");
    if (k > 62) throw std::invalid_argument("color count above 62 unsupported");
    if (!pre.empty()) {
        if (int(pre.size()) != g.n()) throw std::invalid_argument("precoloring size mismatch");
        for (int v = 0; v < g.n(); ++v) {
            if (pre[v] < 0 || pre[v] > k) throw std::invalid_argument("precolor out of range");
            if (!pre[v]) continue;
            for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
                if (pre[u] == pre[v])
                    throw std::invalid_argument("precoloring already improper");
        }
    }

    BWitness out;
    if (g.n() == 0 || k > g.n()) {
        out.outcome = Outcome::None;
        return out;
    }
    if (k == 1) {
        if (g.m() == 0) {
            out.outcome = Outcome::Found;
            out.coloring.k = 1;
            out.coloring.color.assign(g.n(), 1);
        } else {
            out.outcome = Outcome::None;
        }
        return out;
    }

    std::vector<int> cands;
    for (int v = 0; v < g.n(); ++v)
        if (g.deg(v) >= k - 1) cands.push_back(v);
    if (int(cands.size()) < k) {
        out.outcome = Outcome::None;
        return out;
    }

    BSearch s(g, k, pre, budget.max_nodes);
    std::vector<int> cur;
    bool ok = pre.empty() ? combos(s, cands, 0, cur) : slots(s, cands, 1, cur);
    out.nodes = s.nodes;
    if (ok && s.have) {
        out.outcome = Outcome::Found;
        out.coloring = s.found;
    } else {
        out.outcome = s.stopped ? Outcome::Unknown : Outcome::None;
    }
    return out;
}

namespace {

struct ProperSearch {
    const Graph& g;
    int n, k;
    uint64_t budget;
    uint64_t nodes = 0;
    bool stopped = false;
    bool have = false;
    Coloring found;

    std::vector<int> color;
    std::vector<std::vector<int>> cnt;
    std::vector<uint64_t> forb;
    std::vector<int> satc;
    uint64_t full;
    int maxused = 0;

    ProperSearch(const Graph& g_, int k_, uint64_t b)
        : g(g_), n(g_.n()), k(k_), budget(b) {
        color.assign(n, 0);
        cnt.assign(n, std::vector<int>(k + 1, 0));
        forb.assign(n, 0);
        satc.assign(n, 0);
        full = ((uint64_t(1) << k) - 1) << 1;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (cnt[u][c]++ == 0) {
                forb[u] |= uint64_t(1) << c;
                ++satc[u];
            }
    }
    void unassign(int v, int c) {
        color[v] = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (--cnt[u][c] == 0) {
                forb[u] &= ~(uint64_t(1) << c);
                --satc[u];
            }
    }

    bool dfs(int colored) {
        if (++nodes > budget) {
            stopped = true;
            return false;
        }
        if (colored == n) {
            found.k = k;
            found.color = color;
            have = true;
            return true;
        }
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!color[u] && (v == -1 || satc[u] > satc[v] ||
                              (satc[u] == satc[v] && g.deg(u) > g.deg(v))))
                v = u;
        // colors above maxused+1 are interchangeable with maxused+1
        int cap = std::min(k, maxused + 1);
        uint64_t av = (((uint64_t(1) << cap) - 1) << 1) & ~forb[v];
        while (av) {
            int c = __builtin_ctzll(av);
            av &= av - 1;
            int saved = maxused;
            maxused = std::max(maxused, c);
            assign(v, c);
            if (dfs(colored + 1)) return true;
            unassign(v, c);
            maxused = saved;
            if (stopped) return false;
        }
        return false;
    }
};

}  // namespace

ChiResult chromatic_number(const Graph& g, Budget budget) {
    ChiResult r;
    if (g.n() == 0) {
        r.outcome = Outcome::Found;
        r.value = 0;
        return r;
    }
    CliqueResult clq = max_clique(g, budget.max_nodes);
    r.nodes += clq.nodes;
    int lb = std::max(1, clq.size);  // witness is a real clique even when inexact
    Coloring ub = dsatur_coloring(g);
    for (int k = lb; k < ub.k; ++k) {
        if (k > 62) {
            r.outcome = Outcome::Unknown;
            r.value = ub.k;
            r.witness = ub;
            return r;
        }
        ProperSearch s(g, k, budget.max_nodes);
        bool ok = s.dfs(0);
        r.nodes += s.nodes;
        if (ok) {
            r.outcome = Outcome::Found;
            r.value = k;
            r.witness = s.found;
            return r;
        }
        if (s.stopped) {
            r.outcome = Outcome::Unknown;
            r.value = ub.k;  // best proven upper bound
            r.witness = ub;
            return r;
        }
    }
    r.outcome = Outcome::Found;
    r.value = ub.k;
    r.witness = ub;
    return r;
}

ChibResult b_chromatic_number(const Graph& g, Budget budget) {
    ChibResult r;
    if (g.n() == 0) {
        r.outcome = Outcome::Found;
        r.value = 0;
        return r;
    }
    for (int k = m_degree(g); k >= 1; --k) {
        BWitness w = exists_b_coloring(g, k, {}, budget);
        r.nodes += w.nodes;
        if (w.outcome == Outcome::Found) {
            r.outcome = Outcome::Found;
            r.value = k;
            r.witness = w.coloring;
            return r;
        }
        if (w.outcome == Outcome::Unknown) {
            r.outcome = Outcome::Unknown;
            r.value = k;  // first undecided candidate from above
            return r;
        }
    }
    throw std::logic_error("no color count admitted a b-coloring");
}

SpectrumReport b_spectrum(const Graph& g, Budget budget, int jobs) {
    SpectrumReport rep;
    rep.n = g.n();
    rep.m = g.m();
    rep.degree_bound = m_degree(g);
    int top = rep.degree_bound;

    std::vector<BWitness> res(top + 1);
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, std::max(1, top));
    if (jobs == 1) {
        for (int k = 1; k <= top; ++k) res[k] = exists_b_coloring(g, k, {}, budget);
    } else {
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int k = next.fetch_add(1); k <= top; k = next.fetch_add(1))
                    res[k] = exists_b_coloring(g, k, {}, budget);
            });
        for (auto& th : pool) th.join();
    }

    for (int k = 1; k <= top; ++k) {
        switch (res[k].outcome) {
            case Outcome::Found:
                rep.spectrum.push_back(k);
                rep.witnesses[k] = res[k].coloring;
                break;
            case Outcome::Unknown:
                rep.unknown.push_back(k);
                break;
            case Outcome::None:
                break;
        }
    }

    if (g.n() == 0) {
        rep.chi_outcome = rep.chib_outcome = Outcome::Found;
        rep.continuous = true;
        return rep;
    }

    auto unknown_below = [&](int k) {
        for (int u : rep.unknown)
            if (u < k) return true;
        return false;
    };
    auto unknown_above = [&](int k) {
        for (int u : rep.unknown)
            if (u > k) return true;
        return false;
    };

    if (!rep.spectrum.empty()) {
        int lo = rep.spectrum.front(), hi = rep.spectrum.back();
        if (!unknown_below(lo)) {
            rep.chi_outcome = Outcome::Found;
            rep.chi = lo;
        }
        if (!unknown_above(hi)) {
            rep.chib_outcome = Outcome::Found;
            rep.chi_b = hi;
        }
        if (rep.chi_outcome == Outcome::Found && rep.chib_outcome == Outcome::Found) {
            bool mid_unknown = false;
            for (int u : rep.unknown)
                if (u > lo && u < hi) mid_unknown = true;
            if (!mid_unknown) {
                for (int k = lo + 1; k < hi; ++k)
                    if (!std::binary_search(rep.spectrum.begin(), rep.spectrum.end(), k))
                        rep.gaps.push_back(k);
                rep.continuous = rep.gaps.empty();
            }
        }
    }
    return rep;
}

}  // namespace bcol
