#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stacked_sr/util.hpp"

namespace stacked_sr {

struct TreeEdge {
    std::string id;
    std::string a, b;  // endpoints, unordered
};

// Labeled tree. Labels are opaque strings; vertices and edges get dense
// indices in sorted label order so that all derived output is reproducible.
class Tree {
public:
    Tree(std::vector<std::string> vertices, std::vector<TreeEdge> edges);

    static Tree from_pairs(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

    int n() const { return static_cast<int>(vertices_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }

    int vertex_index(const std::string& label) const;  // throws on unknown label
    int edge_index(const std::string& id) const;       // throws on unknown id
    const std::string& vertex_label(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const TreeEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    int edge_end_a(int e) const { return end_a_[static_cast<std::size_t>(e)]; }
    int edge_end_b(int e) const { return end_b_[static_cast<std::size_t>(e)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int edge_between(int u, int v) const;  // -1 if not adjacent
    int dist(int u, int v) const { return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    bool on_path(int v, int u, int w) const { return dist(v, u) + dist(u, w) == dist(v, w); }

    std::vector<int> path_vertices(int v, int w) const;
    std::vector<int> path_edges(int v, int w) const;
    // End edges of the path from v to w: (v-incident, w-incident). v != w.
    std::pair<int, int> path_end_edges(int v, int w) const;
    Mask path_vertex_mask(int v, int w) const;
    Mask path_edge_mask(int v, int w) const;
    // Endpoint of edge e nearer to vertex v.
    int nearer_endpoint(int e, int v) const;

private:
    std::vector<std::string> vertices_;  // sorted
    std::vector<TreeEdge> edges_;        // sorted by id
    std::vector<int> end_a_, end_b_;     // per edge, vertex indices
    std::vector<std::vector<std::pair<int, int>>> adj_;  // vertex -> (neighbor, edge)
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> step_;  // step_[v][w]: first edge on path v->w, -1 if v==w
};

struct Path {
    std::vector<std::string> vertices;
    std::vector<std::string> edges;
};

// The unique simple path from v to w; a single vertex when v == w.
Path path(const Tree& t, const std::string& v, const std::string& w);

// True iff u lies on the path from v to w. The three vertices must be distinct.
bool is_aligned(const Tree& t, const std::string& v, const std::string& u, const std::string& w);

// True iff no ordering of {v,u,w} is aligned.
bool is_nonaligned(const Tree& t, const std::string& v, const std::string& u, const std::string& w);

int max_degree(const Tree& t);

inline constexpr int kDefaultTreeCap = 9;

// All labeled trees on vertex set {"1",...,"n"} via Prüfer sequences, in
// lexicographic sequence order. n^(n-2) trees for n >= 2.
std::vector<Tree> enumerate_trees(int n, int cap = kDefaultTreeCap);

// Tree with one concrete orientation per edge. The orientation is input data
// (or the larger-endpoint default); everything downstream is isomorphic
// across orientations.
class DirectedTree {
public:
    DirectedTree(Tree tree, const std::map<std::string, std::string>& heads);
    static DirectedTree default_orientation(Tree tree);

    const Tree& tree() const { return tree_; }
    const std::string& head(const std::string& edge_id) const;
    int head_index(int e) const { return head_[static_cast<std::size_t>(e)]; }
    // 1 iff edge e points toward vertex v (for incident v: head(e) == v).
    int points_to(int e, int v) const {
        return (head_side_[static_cast<std::size_t>(e)] >> v) & 1u;
    }

private:
    Tree tree_;
    std::vector<int> head_;
    std::vector<Mask> head_side_;  // vertices on the head side of each edge
};

struct Hypertree {
    std::vector<std::string> vertices;              // sorted
    std::vector<std::vector<std::string>> edges;    // each sorted; list sorted

    Hypertree(std::vector<std::string> vertices, std::vector<std::vector<std::string>> edges);
};

// tp refines t: every tp-edge is contained in a t-edge and every t-edge is a
// union of tp-edges. Both hypertrees must have the same vertex set.
bool refines(const Hypertree& tp, const Hypertree& t);

// Canonical string of the unlabeled tree (AHU encoding from the centroid).
std::string tree_canonical_form(const Tree& t);
bool trees_isomorphic(const Tree& a, const Tree& b);

// Representatives of isomorphism classes of trees on n vertices with maximum
// degree <= maxdeg, labels "1".."n", grown by leaf attachment.
std::vector<Tree> free_trees(int n, int maxdeg);

}  // namespace stacked_sr
