#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"

namespace bcol {

struct P4SparseCheck {
    bool ok = true;
    std::array<int, 5> witness{{-1, -1, -1, -1, -1}};  // five vertices inducing two P4s
};

// every five vertices induce at most one P4
P4SparseCheck is_p4_sparse(const Graph& g);

// clique[i] is the partner of stable[i]: its only clique neighbor when thin,
// its only clique non-neighbor when thick
struct SpiderParts {
    std::vector<int> clique, stable, head;
    bool thick = false;
};

// spider split of a connected graph on >= 2 vertices; pairs sorted by clique
// vertex; a two-pair spider is reported thin
std::optional<SpiderParts> detect_spider(const Graph& g);

bool verify_spider(const Graph& g, const SpiderParts& p);

enum class NodeKind { Union, Join, Spider, Leaf };
enum class LeafKind { Clique, Stable, SpiderBody };

struct TreeNode {
    NodeKind kind = NodeKind::Leaf;
    LeafKind leaf = LeafKind::Clique;
    std::vector<int> verts;  // subtree vertex set, ascending
    SpiderParts parts;       // Spider nodes and SpiderBody leaves
    int left = -1, right = -1, parent = -1;
};

// binary; a Spider node carries its body leaf on the left and the head
// subtree on the right, a headless spider is a bare SpiderBody leaf
struct PrimevalTree {
    std::vector<TreeNode> nodes;
    int root = -1;
};

// throws invalid_argument naming five offending vertices when the graph is
// outside the class
PrimevalTree primeval_decompose(const Graph& g);
// same, restricted to an induced subgraph; nodes keep original vertex ids
PrimevalTree primeval_decompose(const Graph& g, const std::vector<int>& verts);

// leaf node ids, left to right
std::vector<int> tree_leaves(const PrimevalTree& t);

struct ReductionStep {
    enum class Kind { StableKeep, SpiderDropStable, CliqueAbsorbUnion, CliqueAbsorbSpider };
    Kind kind = Kind::StableKeep;
    std::vector<int> removed;  // base vertices, ascending
    int keeper = -1;           // base vertex whose copies donate colors on lift
    // (product vertex, color) at reduction time; CliqueAbsorbUnion only
    std::vector<std::pair<int, int>> keeper_snapshot, removed_snapshot;
};

const char* reduction_kind_name(ReductionStep::Kind k);

struct ReductionTrace {
    int ell = 1;
    std::vector<ReductionStep> steps;
    std::vector<int> final_alive;  // surviving base vertices, ascending
};

struct DescendP4Result {
    enum class Kind { Colored, CliqueCertificate };
    Kind kind = Kind::Colored;
    // b-coloring of all of g[K_ell] with one color fewer, Colored only
    Coloring coloring;
    // coloring of the surviving product, copies of final_alive[a] at a*ell..;
    // one color fewer when Colored, the input palette for a certificate
    Coloring reduced_coloring;
    ReductionTrace trace;
    std::vector<int> clique;  // product vertices, CliqueCertificate only
};

// one descent step: from a b-coloring of g[K_ell] with k colors to either a
// b-coloring with k-1 colors or a clique on k product vertices, which pins
// the chromatic number to k
DescendP4Result descend_p4sparse(const Graph& g, int ell, const Coloring& psi,
                                 int eliminate_color = 1);

// replay the trace backwards: extend a coloring of the surviving product
// (indexed as in DescendP4Result::reduced_coloring) to all of g[K_ell]
Coloring lift_coloring(const Graph& g, const ReductionTrace& trace, const Coloring& reduced);

}  // namespace bcol
