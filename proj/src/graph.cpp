#include "stacked_sr/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace stacked_sr {

Tree::Tree(std::vector<std::string> vertices, std::vector<TreeEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw precondition_error("tree: duplicate vertex label");
    if (vertices_.empty())
        throw precondition_error("tree: empty vertex set");
    if (vertices_.size() > 31)
        throw precondition_error("tree: more than 31 vertices unsupported");
    std::sort(edges_.begin(), edges_.end(),
              [](const TreeEdge& x, const TreeEdge& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].id == edges_[i - 1].id)
            throw precondition_error("tree: duplicate edge id '" + edges_[i].id + "'");
    if (edges_.size() + 1 != vertices_.size())
        throw precondition_error("tree: edge count must be vertex count - 1");

    int nv = n();
    adj_.assign(static_cast<std::size_t>(nv), {});
    for (int e = 0; e < n_edges(); ++e) {
        const TreeEdge& te = edges_[static_cast<std::size_t>(e)];
        int a = index_in(vertices_, te.a);
        int b = index_in(vertices_, te.b);
        if (a < 0 || b < 0)
            throw precondition_error("tree: edge '" + te.id + "' has undeclared endpoint");
        if (a == b) throw precondition_error("tree: self-loop at '" + te.a + "'");
        end_a_.push_back(a);
        end_b_.push_back(b);
        adj_[static_cast<std::size_t>(a)].push_back({b, e});
        adj_[static_cast<std::size_t>(b)].push_back({a, e});
    }

    // BFS from every vertex: distances and first steps, and connectivity.
    dist_.assign(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(nv), -1));
    step_.assign(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(nv), -1));
    for (int s = 0; s < nv; ++s) {
        auto& dist = dist_[static_cast<std::size_t>(s)];
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        std::vector<int> parent_edge(static_cast<std::size_t>(nv), -1);
        std::vector<int> parent(static_cast<std::size_t>(nv), -1);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, e] : adj_[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    parent_edge[static_cast<std::size_t>(w)] = e;
                    q.push_back(w);
                }
            }
        }
        for (int v = 0; v < nv; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0)
                throw precondition_error("tree: not connected");
            // first edge on the path s -> v: walk v back to s's neighbor
            int cur = v;
            while (cur != s && parent[static_cast<std::size_t>(cur)] != s)
                cur = parent[static_cast<std::size_t>(cur)];
            step_[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] =
                cur == s ? -1 : parent_edge[static_cast<std::size_t>(cur)];
        }
    }
}

Tree Tree::from_pairs(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<TreeEdge> es;
    for (const auto& [a, b] : edges) {
        std::string lo = std::min(a, b), hi = std::max(a, b);
        es.push_back(TreeEdge{lo + "-" + hi, a, b});
    }
    return Tree(std::move(vertices), std::move(es));
}

int Tree::vertex_index(const std::string& label) const {
    int i = index_in(vertices_, label);
    if (i < 0) throw precondition_error("unknown vertex label '" + label + "'");
    return i;
}

int Tree::edge_index(const std::string& id) const {
    for (int e = 0; e < n_edges(); ++e)
        if (edges_[static_cast<std::size_t>(e)].id == id) return e;
    throw precondition_error("unknown edge id '" + id + "'");
}

int Tree::edge_between(int u, int v) const {
    for (auto [w, e] : adj_[static_cast<std::size_t>(u)])
        if (w == v) return e;
    return -1;
}

std::vector<int> Tree::path_vertices(int v, int w) const {
    std::vector<int> out{v};
    int cur = v;
    while (cur != w) {
        int e = step_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(w)];
        // walk across e
        cur = end_a_[static_cast<std::size_t>(e)] == cur ? end_b_[static_cast<std::size_t>(e)]
                                                         : end_a_[static_cast<std::size_t>(e)];
        out.push_back(cur);
    }
    return out;
}

std::vector<int> Tree::path_edges(int v, int w) const {
    std::vector<int> out;
    int cur = v;
    while (cur != w) {
        int e = step_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(w)];
        out.push_back(e);
        cur = end_a_[static_cast<std::size_t>(e)] == cur ? end_b_[static_cast<std::size_t>(e)]
                                                         : end_a_[static_cast<std::size_t>(e)];
    }
    return out;
}

std::pair<int, int> Tree::path_end_edges(int v, int w) const {
    if (v == w) throw precondition_error("path_end_edges: endpoints coincide");
    int e = step_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    int f = step_[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
    return {e, f};
}

Mask Tree::path_vertex_mask(int v, int w) const {
    Mask m = 0;
    for (int x : path_vertices(v, w)) m |= Mask{1} << x;
    return m;
}

Mask Tree::path_edge_mask(int v, int w) const {
    Mask m = 0;
    for (int e : path_edges(v, w)) m |= Mask{1} << e;
    return m;
}

int Tree::nearer_endpoint(int e, int v) const {
    int a = end_a_[static_cast<std::size_t>(e)], b = end_b_[static_cast<std::size_t>(e)];
    return dist(a, v) < dist(b, v) ? a : b;
}

Path path(const Tree& t, const std::string& v, const std::string& w) {
    int vi = t.vertex_index(v), wi = t.vertex_index(w);
    Path p;
    for (int x : t.path_vertices(vi, wi)) p.vertices.push_back(t.vertex_label(x));
    for (int e : t.path_edges(vi, wi)) p.edges.push_back(t.edge(e).id);
    return p;
}

bool is_aligned(const Tree& t, const std::string& v, const std::string& u, const std::string& w) {
    if (v == u || u == w || v == w)
        throw precondition_error("is_aligned: vertices must be distinct");
    return t.on_path(t.vertex_index(v), t.vertex_index(u), t.vertex_index(w));
}

bool is_nonaligned(const Tree& t, const std::string& v, const std::string& u,
                   const std::string& w) {
    if (v == u || u == w || v == w)
        throw precondition_error("is_nonaligned: vertices must be distinct");
    int a = t.vertex_index(v), b = t.vertex_index(u), c = t.vertex_index(w);
    return !t.on_path(a, b, c) && !t.on_path(b, a, c) && !t.on_path(a, c, b);
}

int max_degree(const Tree& t) {
    int d = 0;
    for (int v = 0; v < t.n(); ++v) d = std::max(d, t.degree(v));
    return d;
}

static Tree tree_from_prufer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    std::vector<int> deg = degree;
    for (int x : seq) {
        int leaf = -1;
        for (int i = 0; i < n; ++i)
            if (deg[static_cast<std::size_t>(i)] == 1 && !used[static_cast<std::size_t>(i)]) {
                leaf = i;
                break;
            }
        used[static_cast<std::size_t>(leaf)] = true;
        --deg[static_cast<std::size_t>(x)];
        edges.push_back({labels[static_cast<std::size_t>(leaf)], labels[static_cast<std::size_t>(x)]});
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<std::size_t>(i)]) rest.push_back(i);
    edges.push_back({labels[static_cast<std::size_t>(rest[0])], labels[static_cast<std::size_t>(rest[1])]});
    return Tree::from_pairs(labels, edges);
}

std::vector<Tree> enumerate_trees(int n, int cap) {
    if (n < 1) throw precondition_error("enumerate_trees: n must be >= 1");
    if (n > cap)
        throw cap_exceeded("enumerate_trees: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
    std::vector<Tree> out;
    if (n == 1) {
        out.push_back(Tree({"1"}, {}));
        return out;
    }
    if (n == 2) {
        out.push_back(Tree::from_pairs({"1", "2"}, {{"1", "2"}}));
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        out.push_back(tree_from_prufer(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    return out;
}

DirectedTree::DirectedTree(Tree tree, const std::map<std::string, std::string>& heads)
    : tree_(std::move(tree)) {
    for (const auto& [id, h] : heads)
        tree_.edge_index(id);  // validates ids
    for (int e = 0; e < tree_.n_edges(); ++e) {
        const TreeEdge& te = tree_.edge(e);
        std::string h;
        auto it = heads.find(te.id);
        if (it != heads.end()) {
            h = it->second;
            if (h != te.a && h != te.b)
                throw precondition_error("head of edge '" + te.id + "' is not an endpoint");
        } else {
            h = std::max(te.a, te.b);
        }
        head_.push_back(tree_.vertex_index(h));
    }
    // head_side_[e]: component of head(e) in T - e
    head_side_.assign(static_cast<std::size_t>(tree_.n_edges()), 0);
    for (int e = 0; e < tree_.n_edges(); ++e) {
        int h = head_[static_cast<std::size_t>(e)];
        int other = tree_.edge_end_a(e) == h ? tree_.edge_end_b(e) : tree_.edge_end_a(e);
        Mask m = 0;
        for (int v = 0; v < tree_.n(); ++v)
            if (tree_.dist(v, h) < tree_.dist(v, other)) m |= Mask{1} << v;
        head_side_[static_cast<std::size_t>(e)] = m;
    }
}

DirectedTree DirectedTree::default_orientation(Tree tree) {
    return DirectedTree(std::move(tree), {});
}

const std::string& DirectedTree::head(const std::string& edge_id) const {
    int e = tree_.edge_index(edge_id);
    return tree_.vertex_label(head_[static_cast<std::size_t>(e)]);
}

Hypertree::Hypertree(std::vector<std::string> vs, std::vector<std::vector<std::string>> es)
    : vertices(std::move(vs)), edges(std::move(es)) {
    sort_unique(vertices);
    for (auto& e : edges) {
        sort_unique(e);
        if (e.size() < 2) throw precondition_error("hypertree: hyperedge of size < 2");
        for (const auto& v : e)
            if (index_in(vertices, v) < 0)
                throw precondition_error("hypertree: hyperedge vertex '" + v + "' undeclared");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // pairwise intersections of size <= 1
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::vector<std::string> inter;
            std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(),
                                  edges[j].end(), std::back_inserter(inter));
            if (inter.size() > 1)
                throw precondition_error("hypertree: two edges share more than one vertex");
        }
    // connected and acyclic: star expansion must be a tree, i.e. the edge
    // attachments use exactly |V|-1 fresh vertices and join everything.
    UnionFind uf(static_cast<int>(vertices.size()));
    long long sum = 0;
    for (const auto& e : edges) {
        sum += static_cast<long long>(e.size()) - 1;
        for (std::size_t k = 1; k < e.size(); ++k)
            uf.unite(index_in(vertices, e[0]), index_in(vertices, e[k]));
    }
    if (uf.components() != 1 && !(vertices.size() == 1 && edges.empty()))
        throw precondition_error("hypertree: not connected");
    if (sum != static_cast<long long>(vertices.size()) - 1)
        throw precondition_error("hypertree: has a cycle");
}

bool refines(const Hypertree& tp, const Hypertree& t) {
    if (tp.vertices != t.vertices) throw precondition_error("refines: vertex sets differ");
    auto contained = [](const std::vector<std::string>& small,
                        const std::vector<std::string>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (const auto& ep : tp.edges) {
        bool ok = false;
        for (const auto& e : t.edges)
            if (contained(ep, e)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    for (const auto& e : t.edges) {
        std::set<std::string> covered;
        for (const auto& ep : tp.edges)
            if (contained(ep, e)) covered.insert(ep.begin(), ep.end());
        if (covered != std::set<std::string>(e.begin(), e.end())) return false;
    }
    return true;
}

// AHU subtree encoding rooted at v, coming from parent p.
static std::string ahu(const Tree& t, int v, int p) {
    std::vector<std::string> kids;
    for (int u = 0; u < t.n(); ++u)
        if (u != p && t.edge_between(v, u) >= 0) kids.push_back(ahu(t, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

static std::vector<int> tree_centers(const Tree& t) {
    int best = t.n() * 2;
    std::vector<int> ecc(static_cast<std::size_t>(t.n()), 0);
    for (int v = 0; v < t.n(); ++v) {
        for (int w = 0; w < t.n(); ++w) ecc[static_cast<std::size_t>(v)] = std::max(ecc[static_cast<std::size_t>(v)], t.dist(v, w));
        best = std::min(best, ecc[static_cast<std::size_t>(v)]);
    }
    std::vector<int> out;
    for (int v = 0; v < t.n(); ++v)
        if (ecc[static_cast<std::size_t>(v)] == best) out.push_back(v);
    return out;
}

std::string tree_canonical_form(const Tree& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string s = ahu(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

bool trees_isomorphic(const Tree& a, const Tree& b) {
    return a.n() == b.n() && tree_canonical_form(a) == tree_canonical_form(b);
}

std::vector<Tree> free_trees(int n, int maxdeg) {
    if (n < 1) throw precondition_error("free_trees: n must be >= 1");
    std::vector<Tree> level{Tree({"1"}, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Tree> next;
        for (const Tree& t : level) {
            for (int v = 0; v < t.n(); ++v) {
                if (t.degree(v) >= maxdeg) continue;
                std::vector<std::string> vs = t.vertices();
                vs.push_back(std::to_string(k));
                std::vector<std::pair<std::string, std::string>> es;
                for (const auto& e : t.edges()) es.push_back({e.a, e.b});
                es.push_back({t.vertex_label(v), std::to_string(k)});
                Tree grown = Tree::from_pairs(vs, es);
                next.emplace(tree_canonical_form(grown), grown);
            }
        }
        level.clear();
        for (auto& [key, t] : next) level.push_back(t);
        if (level.empty()) break;
    }
    if (n == 1) return level;
    std::vector<Tree> out;
    for (const Tree& t : level)
        if (t.n() == n) out.push_back(t);
    return out;
}

}  // namespace stacked_sr
