#include "bcol/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"

namespace bcol {

namespace {

// definition check: proper, every class inhabited, every class dominating
bool is_b_assignment(const Graph& g, const std::vector<int>& a, int k) {
    int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[u] == a[v] && g.has_edge(u, v)) return false;
    std::vector<char> used(k + 1, 0);
    for (int c : a) used[c] = 1;
    for (int c = 1; c <= k; ++c)
        if (!used[c]) return false;
    for (int c = 1; c <= k; ++c) {
        bool witnessed = false;
        for (int u = 0; u < n && !witnessed; ++u) {
            if (a[u] != c) continue;
            std::vector<char> sees(k + 1, 0);
            for (int v = 0; v < n; ++v)
                if (g.has_edge(u, v)) sees[a[v]] = 1;
            witnessed = true;
            for (int d = 1; d <= k; ++d)
                if (d != c && !sees[d]) { witnessed = false; break; }
        }
        if (!witnessed) return false;
    }
    return true;
}

}  // namespace

std::vector<int> spectrum_bruteforce(const Graph& g, int max_n) {
    int n = g.n();
    if (n == 0) throw std::invalid_argument("empty graph has no spectrum");
    if (n > max_n) throw std::invalid_argument("graph too large for brute force");
    std::vector<int> out;
    int top = m_degree(g);
    for (int k = 1; k <= top; ++k) {
        std::vector<int> a(n, 1);
        bool found = false;
        while (true) {
            if (is_b_assignment(g, a, k)) { found = true; break; }
            int i = 0;
            while (i < n && a[i] == k) a[i++] = 1;  // odometer
            if (i == n) break;
            ++a[i];
        }
        if (found) out.push_back(k);
    }
    return out;
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// bit position of the pair {a,b}, a < b, in row-major upper-triangle order
int pair_bit(int n, int a, int b) {
    int p = 0;
    for (int i = 0; i < a; ++i) p += n - 1 - i;
    return p + (b - a - 1);
}

uint64_t graph_bits(const Graph& g) {
    uint64_t m = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (g.has_edge(a, b)) m |= uint64_t{1} << pair_bit(g.n(), a, b);
    return m;
}

// per-permutation table sending each pair bit to its relabeled position
std::vector<std::vector<int>> bit_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> tab(pair_count(n));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int x = perm[a], y = perm[b];
                if (x > y) std::swap(x, y);
                tab[pair_bit(n, a, b)] = pair_bit(n, x, y);
            }
        maps.push_back(std::move(tab));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

uint64_t remap_bits(uint64_t m, const std::vector<int>& tab) {
    uint64_t out = 0;
    for (size_t p = 0; p < tab.size(); ++p)
        if (m >> p & 1) out |= uint64_t{1} << tab[p];
    return out;
}

}  // namespace

uint64_t canonical_bits(const Graph& g) {
    if (g.n() > 8) throw std::invalid_argument("canonical form capped at 8 vertices");
    uint64_t mask = graph_bits(g), best = mask;
    for (const auto& tab : bit_maps(g.n()))
        best = std::min(best, remap_bits(mask, tab));
    return best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("class listing capped at 6 vertices");
    auto maps = bit_maps(n);
    int bits = pair_count(n);
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
        bool least = true;
        for (const auto& tab : maps)
            if (remap_bits(mask, tab) < mask) { least = false; break; }
        if (!least) continue;
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mask >> pair_bit(n, a, b) & 1) g.add_edge(a, b);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

bool all_found(std::initializer_list<Outcome> os) {
    for (Outcome o : os)
        if (o != Outcome::Found) return false;
    return true;
}

}  // namespace

RelationsReport check_relations(const Graph& g, const Graph& h, Budget budget) {
    if (g.n() == 0 || h.n() == 0)
        throw std::invalid_argument("relations need two nonempty factors");
    RelationsReport r;
    Graph prod = lex_product(g, h);
    r.chi_left = chromatic_number(g, budget);
    r.chi_right = chromatic_number(h, budget);
    r.chib_left = b_chromatic_number(g, budget);
    r.chib_right = b_chromatic_number(h, budget);
    r.chi_product = chromatic_number(prod, budget);
    if (r.chi_right.outcome == Outcome::Found)
        r.chi_left_blowup =
            chromatic_number(lex_product(g, complete(r.chi_right.value)), budget);
    if (r.chi_left.outcome == Outcome::Found)
        r.chi_complete_right =
            chromatic_number(lex_product(complete(r.chi_left.value), h), budget);
    r.chib_product = b_chromatic_number(prod, budget);
    if (r.chib_right.outcome == Outcome::Found)
        r.chib_left_blowup =
            b_chromatic_number(lex_product(g, complete(r.chib_right.value)), budget);
    if (r.chib_left.outcome == Outcome::Found)
        r.chib_complete_right =
            b_chromatic_number(lex_product(complete(r.chib_left.value), h), budget);
    r.right_spectrum = b_spectrum(h, budget);
    r.product_spectrum = b_spectrum(prod, budget);
    for (int x : r.right_spectrum.spectrum)
        r.blowup_spectra.emplace(x, b_spectrum(lex_product(g, complete(x)), budget));

    std::string d;

    // chib g[h] >= chib g[K_p] >= p*q and chib K_q[h] = p*q
    if (all_found({r.chib_left.outcome, r.chib_right.outcome, r.chib_product.outcome,
                   r.chib_left_blowup.outcome, r.chib_complete_right.outcome})) {
        int p = r.chib_right.value, q = r.chib_left.value;
        bool ok = r.chib_product.value >= r.chib_left_blowup.value &&
                  r.chib_left_blowup.value >= p * q &&
                  r.chib_complete_right.value == p * q;
        r.lower_bound_chain = ok ? Tri::True : Tri::False;
        if (!ok)
            d += "lower bound chain broke: " + std::to_string(r.chib_product.value) +
                 " >= " + std::to_string(r.chib_left_blowup.value) +
                 " >= " + std::to_string(p * q) +
                 " = " + std::to_string(r.chib_complete_right.value) + "; ";
    } else {
        d += "lower bound chain undecided; ";
    }

    // chi g[h] = chi g[K_x], both at most x*y = chi K_y[h], all within p*q
    if (all_found({r.chi_left.outcome, r.chi_right.outcome, r.chi_product.outcome,
                   r.chi_left_blowup.outcome, r.chi_complete_right.outcome,
                   r.chib_left.outcome, r.chib_right.outcome})) {
        int x = r.chi_right.value, y = r.chi_left.value;
        int pq = r.chib_right.value * r.chib_left.value;
        bool ok = r.chi_product.value == r.chi_left_blowup.value &&
                  r.chi_left_blowup.value <= x * y &&
                  r.chi_complete_right.value == x * y && x * y <= pq;
        r.coloring_chain = ok ? Tri::True : Tri::False;
        if (!ok)
            d += "coloring chain broke: " + std::to_string(r.chi_product.value) +
                 " = " + std::to_string(r.chi_left_blowup.value) +
                 " <= " + std::to_string(x * y) +
                 " = " + std::to_string(r.chi_complete_right.value) +
                 " <= " + std::to_string(pq) + "; ";
    } else {
        d += "coloring chain undecided; ";
    }

    // every k reached by some blowup must be in the product's spectrum
    {
        Tri verdict = Tri::True;
        std::string miss;
        if (!r.right_spectrum.unknown.empty()) verdict = Tri::Unknown;
        for (const auto& [x, sp] : r.blowup_spectra) {
            for (int k : sp.spectrum) {
                bool inside = std::binary_search(r.product_spectrum.spectrum.begin(),
                                                 r.product_spectrum.spectrum.end(), k);
                if (inside) continue;
                bool open = std::binary_search(r.product_spectrum.unknown.begin(),
                                               r.product_spectrum.unknown.end(), k);
                if (open) {
                    if (verdict == Tri::True) verdict = Tri::Unknown;
                } else {
                    verdict = Tri::False;
                    miss += "k=" + std::to_string(k) + " from x=" + std::to_string(x) +
                            " missing; ";
                }
            }
            for (int k : sp.unknown)
                if (!std::binary_search(r.product_spectrum.spectrum.begin(),
                                        r.product_spectrum.spectrum.end(), k) &&
                    verdict == Tri::True)
                    verdict = Tri::Unknown;
        }
        r.spectrum_containment = verdict;
        if (verdict == Tri::False) d += "containment broke: " + miss;
        else if (verdict == Tri::Unknown) d += "containment undecided; ";
    }

    if (d.empty()) d = "all three relations hold";
    r.detail = std::move(d);
    return r;
}

}  // namespace bcol
