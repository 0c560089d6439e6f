#include "stacked_sr/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace stacked_sr {

static std::vector<Mask> minimalize_facets(std::vector<Mask> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Mask> out;
    for (Mask f : facets) {
        bool contained = false;
        for (Mask g : facets)
            if (g != f && subset(f, g)) {
                contained = true;
                break;
            }
        if (!contained) out.push_back(f);
    }
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground,
                                     const std::vector<std::vector<std::string>>& facets)
    : ground_(std::move(ground)) {
    sort_unique(ground_);
    if (ground_.size() > 31)
        throw precondition_error("complex: more than 31 ground elements unsupported");
    std::vector<Mask> ms;
    for (const auto& f : facets) ms.push_back(mask_of(f));
    facets_ = minimalize_facets(std::move(ms));
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<std::string> ground,
                                                std::vector<Mask> facets) {
    SimplicialComplex x;
    x.ground_ = std::move(ground);
    if (x.ground_.size() > 31)
        throw precondition_error("complex: more than 31 ground elements unsupported");
    x.facets_ = minimalize_facets(std::move(facets));
    return x;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
    std::vector<std::vector<std::string>> out;
    for (Mask f : facets_) out.push_back(labels_of(f));
    return out;
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::pure() const {
    for (Mask f : facets_)
        if (popcount(f) != popcount(facets_[0])) return false;
    return true;
}

int SimplicialComplex::index_of(const std::string& label) const {
    int i = index_in(ground_, label);
    if (i < 0) throw precondition_error("unknown ground label '" + label + "'");
    return i;
}

Mask SimplicialComplex::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask{1} << index_of(l);
    return m;
}

std::vector<std::string> SimplicialComplex::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < n_ground(); ++i)
        if ((m >> i) & 1u) out.push_back(ground_[static_cast<std::size_t>(i)]);
    return out;
}

bool SimplicialComplex::is_face(Mask m) const {
    for (Mask f : facets_)
        if (subset(m, f)) return true;
    return false;
}

Mask SimplicialComplex::support_mask() const {
    Mask m = 0;
    for (Mask f : facets_) m |= f;
    return m;
}

std::vector<std::string> SimplicialComplex::support() const { return labels_of(support_mask()); }

std::vector<Mask> SimplicialComplex::all_faces() const {
    std::unordered_set<Mask> seen;
    for (Mask f : facets_) {
        Mask sub = f;
        while (true) {  // enumerate submasks of f
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long SimplicialComplex::face_count() const {
    return static_cast<long long>(all_faces().size());
}

SimplicialComplex link(const SimplicialComplex& x, const std::vector<std::string>& r) {
    Mask rm = x.mask_of(r);
    std::vector<std::string> ground;
    for (int i = 0; i < x.n_ground(); ++i)
        if (!((rm >> i) & 1u)) ground.push_back(x.ground()[static_cast<std::size_t>(i)]);
    std::vector<std::vector<std::string>> facets;
    for (Mask f : x.facet_masks())
        if (subset(rm, f)) facets.push_back(x.labels_of(f & ~rm));
    return SimplicialComplex(ground, facets);
}

SimplicialComplex restriction(const SimplicialComplex& x, const std::vector<std::string>& r) {
    Mask rm = x.mask_of(r);
    std::vector<std::string> ground = x.labels_of(rm);
    std::vector<std::vector<std::string>> facets;
    for (Mask f : x.facet_masks()) facets.push_back(x.labels_of(f & rm));
    return SimplicialComplex(ground, facets);
}

SimplicialComplex deletion(const SimplicialComplex& x, const std::vector<std::string>& r) {
    Mask rm = x.mask_of(r);
    return restriction(x, x.labels_of(~rm & ((Mask{1} << x.n_ground()) - 1)));
}

std::vector<Mask> components(const SimplicialComplex& x) {
    UnionFind uf(x.n_ground());
    for (Mask f : x.facet_masks()) {
        int first = -1;
        for (int i = 0; i < x.n_ground(); ++i)
            if ((f >> i) & 1u) {
                if (first < 0)
                    first = i;
                else
                    uf.unite(first, i);
            }
    }
    Mask supp = x.support_mask();
    std::map<int, Mask> comp;
    for (int i = 0; i < x.n_ground(); ++i)
        if ((supp >> i) & 1u) comp[uf.find(i)] |= Mask{1} << i;
    std::vector<Mask> out;
    for (auto& [root, m] : comp) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> cone_apex(const SimplicialComplex& x) {
    if (x.is_void()) return {};
    Mask m = ~Mask{0};
    for (Mask f : x.facet_masks()) m &= f;
    m &= (Mask{1} << x.n_ground()) - 1;
    return x.labels_of(m);
}

int euler_characteristic(const SimplicialComplex& x) {
    int chi = 0;
    for (Mask f : x.all_faces()) {
        int k = popcount(f);
        if (k == 0) continue;
        chi += (k % 2 == 1) ? 1 : -1;
    }
    return chi;
}

std::optional<StackingCertificate> certificate_for_order(
    const SimplicialComplex& x, const std::vector<std::vector<std::string>>& order) {
    if (!x.pure() || x.is_void()) return std::nullopt;
    std::vector<Mask> facets;
    for (const auto& f : order) facets.push_back(x.mask_of(f));
    std::vector<Mask> sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != x.facet_masks()) return std::nullopt;  // must order exactly the facets

    StackingCertificate cert;
    cert.order = order;
    Mask seen_vertices = facets[0];
    for (std::size_t p = 1; p < facets.size(); ++p) {
        Mask f = facets[p];
        Mask fresh = f & ~seen_vertices;
        if (popcount(fresh) != 1) return std::nullopt;
        Mask g = f & ~fresh;
        bool attached = false;
        for (std::size_t i = 0; i < p; ++i)
            if (subset(g, facets[i])) {
                attached = true;
                break;
            }
        if (!attached) return std::nullopt;
        cert.attachments.push_back({x.labels_of(g), x.labels_of(fresh)[0]});
        seen_vertices |= f;
    }
    return cert;
}

namespace {

struct StackSearch {
    const SimplicialComplex& x;
    std::vector<Mask> facets;
    std::map<std::uint64_t, bool> dead;  // subset of facet indices -> no completion

    explicit StackSearch(const SimplicialComplex& cx) : x(cx), facets(cx.facet_masks()) {}

    bool extend(std::uint64_t used, Mask vertices, std::vector<int>& order) {
        if (popcount64(used) == facets.size()) return true;
        auto it = dead.find(used);
        if (it != dead.end()) return false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if ((used >> f) & 1) continue;
            Mask fresh = facets[f] & ~vertices;
            if (popcount(fresh) != 1) continue;
            Mask g = facets[f] & ~fresh;
            bool attached = false;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (((used >> i) & 1) && subset(g, facets[i])) {
                    attached = true;
                    break;
                }
            if (!attached) continue;
            order.push_back(static_cast<int>(f));
            if (extend(used | (1ULL << f), vertices | facets[f], order)) return true;
            order.pop_back();
        }
        dead[used] = true;
        return false;
    }

    static std::size_t popcount64(std::uint64_t v) {
        return static_cast<std::size_t>(std::popcount(v));
    }
};

}  // namespace

std::optional<StackingCertificate> is_stacked(const SimplicialComplex& x, std::string* why) {
    if (x.is_void()) {
        if (why) *why = "void complex";
        return std::nullopt;
    }
    if (!x.pure()) {
        if (why) *why = "not pure";
        return std::nullopt;
    }
    if (x.n_facets() > 62) {
        if (why) *why = "too many facets for stacking search";
        return std::nullopt;
    }
    StackSearch search(x);
    for (std::size_t f0 = 0; f0 < search.facets.size(); ++f0) {
        std::vector<int> order{static_cast<int>(f0)};
        if (search.extend(1ULL << f0, search.facets[f0], order)) {
            std::vector<std::vector<std::string>> labels;
            for (int i : order) labels.push_back(x.labels_of(search.facets[static_cast<std::size_t>(i)]));
            auto cert = certificate_for_order(x, labels);
            if (cert) return cert;
            if (why) *why = "internal: order found but certificate rejected";
            return std::nullopt;
        }
    }
    if (why) *why = "no stacking order exists";
    return std::nullopt;
}

Hypertree hypertree_of(const SimplicialComplex& x) {
    std::string why;
    if (!is_stacked(x, &why))
        throw precondition_error("hypertree_of: complex is not stacked (" + why + ")");
    SimplicialComplex base = x;
    std::vector<std::string> apex = cone_apex(x);
    if (!apex.empty()) base = link(x, apex);  // Obs: cone and base share the hypertree

    const auto& facets = base.facet_masks();
    std::vector<std::string> vlabels;
    for (std::size_t i = 0; i < facets.size(); ++i) vlabels.push_back(std::to_string(i));
    // codimension-one faces on >= 2 facets
    std::set<std::vector<std::string>> hyperedges;
    std::set<Mask> ridges;
    for (Mask f : facets) {
        for (int i = 0; i < base.n_ground(); ++i)
            if ((f >> i) & 1u) ridges.insert(f & ~(Mask{1} << i));
    }
    for (Mask g : ridges) {
        std::vector<std::string> e;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (subset(g, facets[i])) e.push_back(std::to_string(i));
        if (e.size() >= 2) hyperedges.insert(e);
    }
    return Hypertree(vlabels, std::vector<std::vector<std::string>>(hyperedges.begin(), hyperedges.end()));
}

namespace {

struct IsoSearch {
    const SimplicialComplex &a, &b;
    std::vector<int> map_ab;  // index in a.ground -> index in b.ground, -1 unset
    std::vector<bool> used_b;

    IsoSearch(const SimplicialComplex& ca, const SimplicialComplex& cb)
        : a(ca), b(cb), map_ab(static_cast<std::size_t>(ca.n_ground()), -1),
          used_b(static_cast<std::size_t>(cb.n_ground()), false) {}

    static std::vector<int> signature(const SimplicialComplex& x, int v) {
        std::vector<int> sizes;
        for (Mask f : x.facet_masks())
            if ((f >> v) & 1u) sizes.push_back(popcount(f));
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    bool run() {
        std::vector<std::vector<int>> sig_a, sig_b;
        for (int v = 0; v < a.n_ground(); ++v) sig_a.push_back(signature(a, v));
        for (int v = 0; v < b.n_ground(); ++v) sig_b.push_back(signature(b, v));
        auto all_a = sig_a, all_b = sig_b;
        std::sort(all_a.begin(), all_a.end());
        std::sort(all_b.begin(), all_b.end());
        if (all_a != all_b) return false;
        return place(0, sig_a, sig_b);
    }

    bool place(int v, const std::vector<std::vector<int>>& sig_a,
               const std::vector<std::vector<int>>& sig_b) {
        if (v == a.n_ground()) return full_check();
        for (int w = 0; w < b.n_ground(); ++w) {
            if (used_b[static_cast<std::size_t>(w)]) continue;
            if (sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)]) continue;
            map_ab[static_cast<std::size_t>(v)] = w;
            used_b[static_cast<std::size_t>(w)] = true;
            if (partial_ok(v) && place(v + 1, sig_a, sig_b)) return true;
            used_b[static_cast<std::size_t>(w)] = false;
            map_ab[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    // Facets fully inside the mapped prefix must map to b-facets.
    bool partial_ok(int upto) const {
        for (Mask f : a.facet_masks()) {
            bool inside = true;
            Mask img = 0;
            for (int i = 0; i < a.n_ground(); ++i)
                if ((f >> i) & 1u) {
                    if (i > upto) {
                        inside = false;
                        break;
                    }
                    img |= Mask{1} << map_ab[static_cast<std::size_t>(i)];
                }
            if (inside) {
                if (std::find(b.facet_masks().begin(), b.facet_masks().end(), img) ==
                    b.facet_masks().end())
                    return false;
            }
        }
        return true;
    }

    bool full_check() const {
        std::vector<Mask> mapped;
        for (Mask f : a.facet_masks()) {
            Mask img = 0;
            for (int i = 0; i < a.n_ground(); ++i)
                if ((f >> i) & 1u) img |= Mask{1} << map_ab[static_cast<std::size_t>(i)];
            mapped.push_back(img);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b.facet_masks();
    }
};

}  // namespace

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n_ground() != b.n_ground() || a.n_facets() != b.n_facets()) return false;
    std::vector<int> sa, sb;
    for (Mask f : a.facet_masks()) sa.push_back(popcount(f));
    for (Mask f : b.facet_masks()) sb.push_back(popcount(f));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    IsoSearch search(a, b);
    return search.run();
}

}  // namespace stacked_sr
