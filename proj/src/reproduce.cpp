#include "bcol/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bcol/chordal.hpp"
#include "bcol/chordal_descent.hpp"
#include "bcol/coloring.hpp"
#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/bhom.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/oracle.hpp"
#include "bcol/p4sparse.hpp"

namespace bcol {

const char* criterion_status_name(CriterionStatus s) {
    switch (s) {
        case CriterionStatus::Pass: return "pass";
        case CriterionStatus::Fail: return "fail";
        case CriterionStatus::Unknown: return "unknown";
        case CriterionStatus::Info: return "info";
    }
    return "?";
}

namespace {

std::string ints(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// shared scoreboard for the parallel sweeps
struct Tally {
    std::mutex mu;
    std::atomic<long> done{0};
    bool failed = false, open = false;
    std::string note;

    void fail(const std::string& why) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failed) note = why;
        failed = true;
    }
    void undecided(const std::string& why) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failed && !open) note = why;
        open = true;
    }
    void settle(CriterionResult& r, const std::string& pass_note) {
        if (failed) {
            r.status = CriterionStatus::Fail;
            r.detail = note;
        } else if (open) {
            r.status = CriterionStatus::Unknown;
            r.detail = note;
        } else {
            r.status = CriterionStatus::Pass;
            r.detail = pass_note;
        }
    }
};

void parallel_for(size_t total, int jobs, const std::function<void(size_t)>& fn) {
    int nt = std::max(1, jobs);
    if (nt == 1 || total < 2) {
        for (size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= total) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<Graph> labeled_graphs_upto(int maxn) {
    std::vector<Graph> out;
    for (int n = 1; n <= maxn; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g(n);
            int p = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++p)
                    if (mask >> p & 1) g.add_edge(a, b);
            out.push_back(std::move(g));
        }
    }
    return out;
}

// crown spectra: both endpoints present, the whole middle missing
CriterionResult c1_crowns(int jobs) {
    CriterionResult r{1, "crown spectra", CriterionStatus::Pass, "", 0};
    std::string d;
    for (int p : {4, 5}) {
        auto t0 = std::chrono::steady_clock::now();
        SpectrumReport sp = b_spectrum(crown(p), {}, jobs);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::vector<int> want{2, p};
        if (!sp.unknown.empty()) {
            r.status = CriterionStatus::Unknown;
            r.detail = "crown(" + std::to_string(p) + ") left k undecided: " + ints(sp.unknown);
            return r;
        }
        if (sp.spectrum != want) {
            r.status = CriterionStatus::Fail;
            r.detail = "crown(" + std::to_string(p) + ") spectrum " + ints(sp.spectrum) +
                       ", wanted " + ints(want);
            return r;
        }
        if (secs >= 120) {
            r.status = CriterionStatus::Fail;
            r.detail = "crown(" + std::to_string(p) + ") took " + std::to_string(secs) + "s";
            return r;
        }
        d += "crown(" + std::to_string(p) + ")=" + ints(sp.spectrum) + " ";
    }
    r.detail = d + "with every inner k refuted";
    return r;
}

// the pivot tree: chi_b 3, degree bound 4, yet its K_2 blowup reaches 7 colors
CriterionResult c2_pivot_tree(int) {
    CriterionResult r{2, "pivot tree blowup lower bound", CriterionStatus::Pass, "", 0};
    Graph t = pivoted_tree();
    ChibResult chib = b_chromatic_number(t);
    if (chib.outcome != Outcome::Found) {
        r.status = CriterionStatus::Unknown;
        r.detail = "chi_b of the tree undecided";
        return r;
    }
    if (chib.value != 3 || m_degree(t) != 4) {
        r.status = CriterionStatus::Fail;
        r.detail = "tree gave chi_b=" + std::to_string(chib.value) +
                   ", degree bound " + std::to_string(m_degree(t)) + ", wanted 3 and 4";
        return r;
    }
    Graph prod = lex_product(t, complete(2));
    // pin both copies over the five inner path vertices
    const int pin[5][2] = {{3, 4}, {1, 2}, {3, 6}, {4, 7}, {5, 6}};
    std::vector<int> pre(size_t(prod.n()), 0);
    for (int i = 0; i < 5; ++i) {
        pre[size_t(2 * i)] = pin[i][0];
        pre[size_t(2 * i + 1)] = pin[i][1];
    }
    BWitness w = exists_b_coloring(prod, 7, pre);
    if (w.outcome == Outcome::Unknown) {
        r.status = CriterionStatus::Unknown;
        r.detail = "7-color extension search exhausted its budget";
        return r;
    }
    if (w.outcome == Outcome::None) {
        r.status = CriterionStatus::Fail;
        r.detail = "the pinned pairs do not extend to 7 colors";
        return r;
    }
    for (int x = 0; x < prod.n(); ++x)
        if (pre[size_t(x)] && w.coloring.color[size_t(x)] != pre[size_t(x)]) {
            r.status = CriterionStatus::Fail;
            r.detail = "witness ignored a pinned color at vertex " + std::to_string(x);
            return r;
        }
    BCheck chk = check_b_coloring(prod, w.coloring);
    if (!chk.ok || w.coloring.k != 7) {
        r.status = CriterionStatus::Fail;
        r.detail = "extension failed verification";
        return r;
    }
    r.detail = "chi_b(T)=3, degree bound 4, pinned pairs extend to 7 colors on T[K_2]";
    return r;
}

// degree bound of g[K_l] is exactly l times the degree bound of g
CriterionResult c3_degree_bound(int jobs) {
    CriterionResult r{3, "degree bound scales with clique blowup", CriterionStatus::Pass, "", 0};
    Tally tally;
    parallel_for(200, jobs, [&](size_t si) {
        int s = int(si);
        int n = 2 + int(uint64_t(s) * 7919 % 11);
        Graph g = random_gnp(n, 10 + (s * 13) % 81, uint32_t(s));
        int mg = m_degree(g);
        for (int l = 1; l <= 3; ++l) {
            int got = m_degree(lex_product(g, complete(l)));
            if (got != l * mg)
                tally.fail("seed " + std::to_string(s) + ", l=" + std::to_string(l) +
                           ": bound " + std::to_string(got) + " != " + std::to_string(l * mg));
            tally.done.fetch_add(1);
        }
    });
    tally.settle(r, std::to_string(tally.done.load()) + " blowups scale exactly");
    return r;
}

CriterionResult c4_chordal_blowup(int jobs) {
    CriterionResult r{4, "clique blowup keeps chordality", CriterionStatus::Pass, "", 0};
    Tally tally;
    parallel_for(100, jobs, [&](size_t si) {
        int s = int(si);
        Graph g = random_chordal(2 + (s % 9), uint32_t(s));
        if (!check_chordal(g).chordal) {
            tally.fail("generator broke at seed " + std::to_string(s));
            return;
        }
        for (int l = 1; l <= 3; ++l) {
            if (!check_chordal(lex_product(g, complete(l))).chordal)
                tally.fail("seed " + std::to_string(s) + ", l=" + std::to_string(l) +
                           ": blowup lost chordality");
            tally.done.fetch_add(1);
        }
    });
    tally.settle(r, std::to_string(tally.done.load()) + " blowups stayed chordal");
    return r;
}

// the search agrees with plain assignment enumeration on every small graph
CriterionResult c5_oracle_sweep(int jobs) {
    CriterionResult r{5, "spectra match brute force up to six vertices", CriterionStatus::Pass, "", 0};
    std::vector<Graph> batch = labeled_graphs_upto(5);
    for (Graph& g : nonisomorphic_graphs(6)) batch.push_back(std::move(g));
    Tally tally;
    parallel_for(batch.size(), jobs, [&](size_t i) {
        const Graph& g = batch[i];
        SpectrumReport sp = b_spectrum(g);
        if (!sp.unknown.empty()) {
            tally.undecided("graph " + std::to_string(i) + " left k undecided");
            return;
        }
        std::vector<int> naive = spectrum_bruteforce(g);
        if (sp.spectrum != naive)
            tally.fail("graph " + std::to_string(i) + " (n=" + std::to_string(g.n()) +
                       "): search " + ints(sp.spectrum) + " vs oracle " + ints(naive));
        tally.done.fetch_add(1);
    });
    tally.settle(r, std::to_string(tally.done.load()) + " graphs agree with the oracle");
    return r;
}

// walk one blowup down from its top b-coloring to a clique certificate
std::string descend_chain(const Graph& g, int l) {
    Graph prod = lex_product(g, complete(l));
    ChibResult chib = b_chromatic_number(prod);
    ChiResult chi = chromatic_number(prod);
    if (chib.outcome != Outcome::Found || chi.outcome != Outcome::Found)
        return "@chi or chi_b undecided";
    SpectrumReport sp = b_spectrum(prod);
    if (!sp.unknown.empty()) return "@spectrum left k undecided";
    if (!sp.continuous || !*sp.continuous)
        return "blowup spectrum has a hole: " + ints(sp.spectrum);
    Coloring psi = chib.witness;
    int k = chib.value;
    while (k > chi.value) {
        DescendP4Result res = descend_p4sparse(g, l, psi);
        if (res.kind != DescendP4Result::Kind::Colored)
            return "certificate appeared above chi, at k=" + std::to_string(k);
        BCheck chk = check_b_coloring(prod, res.coloring);
        if (!chk.ok || res.coloring.k != k - 1)
            return "descent from k=" + std::to_string(k) + " failed verification";
        psi = res.coloring;
        --k;
    }
    if (k >= 2) {
        DescendP4Result res = descend_p4sparse(g, l, psi);
        if (res.kind != DescendP4Result::Kind::CliqueCertificate)
            return "no certificate at chi=" + std::to_string(k);
        if (int(res.clique.size()) != k)
            return "certificate size " + std::to_string(res.clique.size()) +
                   " at chi=" + std::to_string(k);
    }
    return "";
}

CriterionResult c6_p4_descents(int jobs) {
    CriterionResult r{6, "p4-sparse blowup descent chains", CriterionStatus::Pass, "", 0};
    std::vector<Graph> cases;
    for (int n = 1; n <= 6; ++n)
        for (Graph& g : nonisomorphic_graphs(n))
            if (is_p4_sparse(g).ok) cases.push_back(std::move(g));
    Tally tally;
    parallel_for(cases.size() * 2, jobs, [&](size_t i) {
        const Graph& g = cases[i / 2];
        int l = 1 + int(i % 2);
        std::string why = descend_chain(g, l);
        if (why.empty()) {
            tally.done.fetch_add(1);
        } else if (why[0] == '@') {
            tally.undecided("graph " + std::to_string(i / 2) + ", l=" + std::to_string(l) +
                            ": " + why.substr(1));
        } else {
            tally.fail("graph " + std::to_string(i / 2) + " (n=" + std::to_string(g.n()) +
                       "), l=" + std::to_string(l) + ": " + why);
        }
    });
    tally.settle(r, std::to_string(tally.done.load()) + " chains walked down to a certificate");
    return r;
}

CriterionResult c7_chordal_descents(int jobs) {
    CriterionResult r{7, "chordal product descents", CriterionStatus::Pass, "", 0};
    Tally tally;
    std::atomic<long> steps{0};
    parallel_for(100, jobs, [&](size_t i) {
        int s = int(i / 2);
        Graph g = random_chordal(3 + (s % 6), uint32_t(1000 + s));
        Graph h = (i % 2) ? path(3) : complete(2);
        Graph prod = lex_product(g, h);
        SpectrumReport sp = b_spectrum(prod);
        if (!sp.unknown.empty()) {
            tally.undecided("seed " + std::to_string(s) + " left k undecided");
            return;
        }
        int bound = h.n() * clique_number_chordal(g, mcs_order(g));
        for (int k : sp.spectrum) {
            if (k <= bound) continue;
            ChordalDescentResult res = descend_chordal_product(g, h, sp.witnesses.at(k));
            BCheck chk = check_b_coloring(prod, res.coloring);
            if (!chk.ok || res.coloring.k != k - 1) {
                tally.fail("seed " + std::to_string(s) + ", k=" + std::to_string(k) +
                           ": descent failed verification");
                return;
            }
            steps.fetch_add(1);
        }
        tally.done.fetch_add(1);
    });
    tally.settle(r, std::to_string(tally.done.load()) + " products, " +
                        std::to_string(steps.load()) + " verified single-color descents");
    return r;
}

// maps onto K_m exist exactly for m in the spectrum, checked both ways
CriterionResult c8_bhom_sweep(int jobs) {
    CriterionResult r{8, "b-homomorphisms onto cliques match spectra", CriterionStatus::Pass, "", 0};
    std::vector<Graph> batch = labeled_graphs_upto(5);
    Tally tally;
    parallel_for(batch.size(), jobs, [&](size_t i) {
        const Graph& g = batch[i];
        int n = g.n();
        SpectrumReport sp = b_spectrum(g);
        for (int m = 1; m <= 4; ++m) {
            if (std::binary_search(sp.unknown.begin(), sp.unknown.end(), m)) {
                tally.undecided("graph " + std::to_string(i) + ", m=" + std::to_string(m) +
                                " undecided");
                continue;
            }
            bool has = std::binary_search(sp.spectrum.begin(), sp.spectrum.end(), m);
            if (has) {
                BHomMap f = coloring_to_bhom(g, sp.witnesses.at(m));
                if (!check_bhom(f).ok) {
                    tally.fail("graph " + std::to_string(i) + ": witness map onto K_" +
                               std::to_string(m) + " failed");
                    return;
                }
            } else {
                // nothing in the spectrum, so no assignment may verify
                std::vector<int> map(size_t(n), 0);
                while (true) {
                    if (check_bhom(BHomMap{g, complete(m), map}).ok) {
                        tally.fail("graph " + std::to_string(i) + ": stray map onto K_" +
                                   std::to_string(m));
                        return;
                    }
                    int t = 0;
                    while (t < n && map[size_t(t)] == m - 1) map[size_t(t++)] = 0;
                    if (t == n) break;
                    ++map[size_t(t)];
                }
            }
            tally.done.fetch_add(1);
        }
    });
    if (!tally.failed) {
        // both lifts of a verified map verify again
        parallel_for(100, jobs, [&](size_t i) {
            int s = int(i);
            Graph g = random_gnp(2 + (s % 4), 30 + (s % 51), uint32_t(77 + s));
            SpectrumReport sp = b_spectrum(g);
            if (sp.spectrum.empty()) {
                tally.undecided("seed " + std::to_string(s) + " found no spectrum");
                return;
            }
            int m = sp.spectrum.back();
            BHomMap f = coloring_to_bhom(g, sp.witnesses.at(m));
            Graph k = random_gnp(2 + (s % 3), 60, uint32_t(500 + s));
            if (!check_bhom(lift_inner(f, k)).ok || !check_bhom(lift_outer(f, k)).ok) {
                tally.fail("seed " + std::to_string(s) + ": a lifted map failed");
                return;
            }
            tally.done.fetch_add(1);
        });
    }
    tally.settle(r, std::to_string(tally.done.load()) + " map checks agree with the spectra");
    return r;
}

CriterionResult c9_relations(int jobs) {
    CriterionResult r{9, "product relations on small factor pairs", CriterionStatus::Pass, "", 0};
    std::vector<Graph> reps;
    for (int n = 1; n <= 4; ++n)
        for (Graph& g : nonisomorphic_graphs(n)) reps.push_back(std::move(g));
    size_t total = reps.size() * reps.size();
    Tally tally;
    parallel_for(total, jobs, [&](size_t i) {
        const Graph& g = reps[i / reps.size()];
        const Graph& h = reps[i % reps.size()];
        RelationsReport rr = check_relations(g, h);
        for (Tri t : {rr.lower_bound_chain, rr.coloring_chain, rr.spectrum_containment}) {
            if (t == Tri::False) {
                tally.fail("pair " + std::to_string(i / reps.size()) + "," +
                           std::to_string(i % reps.size()) + ": " + rr.detail);
                return;
            }
            if (t == Tri::Unknown)
                tally.undecided("pair " + std::to_string(i / reps.size()) + "," +
                                std::to_string(i % reps.size()) + " undecided");
        }
        tally.done.fetch_add(1);
    });
    tally.settle(r, std::to_string(tally.done.load()) + " of " + std::to_string(total) +
                        " ordered pairs satisfy all three relations");
    return r;
}

CriterionResult c10_cube(int jobs) {
    CriterionResult r{10, "cube spectrum has a hole", CriterionStatus::Pass, "", 0};
    SpectrumReport sp = b_spectrum(hypercube(3), {}, jobs);
    if (!sp.unknown.empty()) {
        r.status = CriterionStatus::Unknown;
        r.detail = "undecided k: " + ints(sp.unknown);
        return r;
    }
    std::vector<int> want{2, 4}, hole{3};
    if (sp.spectrum != want || sp.gaps != hole || !sp.continuous || *sp.continuous) {
        r.status = CriterionStatus::Fail;
        r.detail = "Q_3 gave " + ints(sp.spectrum) + " with gaps " + ints(sp.gaps);
        return r;
    }
    r.detail = "Q_3 spectrum {2,4}, k=3 certified impossible";
    return r;
}

// shifted copies push K_3[P_5] to 9 colors; only a lower bound is claimed
CriterionResult c11_info(int) {
    CriterionResult r{11, "triple blowup of the five-path", CriterionStatus::Info, "", 0};
    BWitness w = exists_b_coloring(path(5), 3);
    if (w.outcome != Outcome::Found) {
        r.status = CriterionStatus::Fail;
        r.detail = "no 3-color b-coloring of the path found";
        return r;
    }
    Graph prod = lex_product(complete(3), path(5));
    Coloring c;
    c.k = 9;
    c.color.assign(15, 0);
    for (int u = 0; u < 3; ++u)
        for (int y = 0; y < 5; ++y)
            c.color[size_t(u * 5 + y)] = w.coloring.color[size_t(y)] + 3 * u;
    if (!check_b_coloring(prod, c).ok) {
        r.status = CriterionStatus::Fail;
        r.detail = "shifted construction failed verification";
        return r;
    }
    r.detail = "lower bound only: chi_b(K_3[P_5]) >= 9 by shifted copies, exact value open";
    return r;
}

}  // namespace

namespace {

const char* criterion_names[] = {"",
                                 "crown spectra",
                                 "pivot tree blowup lower bound",
                                 "degree bound scales with clique blowup",
                                 "clique blowup keeps chordality",
                                 "spectra match brute force up to six vertices",
                                 "p4-sparse blowup descent chains",
                                 "chordal product descents",
                                 "b-homomorphisms onto cliques match spectra",
                                 "product relations on small factor pairs",
                                 "cube spectrum has a hole",
                                 "triple blowup of the five-path"};

}  // namespace

CriterionResult run_criterion(int id, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = c1_crowns(jobs); break;
            case 2: r = c2_pivot_tree(jobs); break;
            case 3: r = c3_degree_bound(jobs); break;
            case 4: r = c4_chordal_blowup(jobs); break;
            case 5: r = c5_oracle_sweep(jobs); break;
            case 6: r = c6_p4_descents(jobs); break;
            case 7: r = c7_chordal_descents(jobs); break;
            case 8: r = c8_bhom_sweep(jobs); break;
            case 9: r = c9_relations(jobs); break;
            case 10: r = c10_cube(jobs); break;
            case 11: r = c11_info(jobs); break;
            default: throw std::invalid_argument("criterion ids run 1..11");
        }
    } catch (const std::exception& e) {
        if (id < 1 || id > 11) throw;
        r.id = id;
        r.name = criterion_names[id];
        r.status = CriterionStatus::Fail;
        r.detail = std::string("threw: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.id == 2 && r.status == CriterionStatus::Pass && r.seconds >= 300) {
        r.status = CriterionStatus::Fail;
        r.detail += "; took " + std::to_string(r.seconds) + "s";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(int jobs) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id, jobs));
    return out;
}

}  // namespace bcol
