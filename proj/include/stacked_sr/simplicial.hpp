#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacked_sr/graph.hpp"
#include "stacked_sr/util.hpp"

namespace stacked_sr {

// Simplicial complex given by its ground set and inclusion-maximal faces.
// Faces are bitmasks over the sorted ground labels. An empty facet list is
// the void complex (no faces at all); a single empty facet is the complex
// whose only face is the empty set.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> ground,
                      const std::vector<std::vector<std::string>>& facets);
    static SimplicialComplex from_masks(std::vector<std::string> ground,
                                        std::vector<Mask> facets);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<Mask>& facet_masks() const { return facets_; }
    std::vector<std::vector<std::string>> facets() const;

    int n_ground() const { return static_cast<int>(ground_.size()); }
    int n_facets() const { return static_cast<int>(facets_.size()); }
    bool is_void() const { return facets_.empty(); }
    // dimension = max facet size - 1; -1 for {∅}, -2 for the void complex
    int dim() const;
    bool pure() const;

    int index_of(const std::string& label) const;  // throws on unknown label
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    bool is_face(Mask m) const;
    Mask support_mask() const;
    std::vector<std::string> support() const;
    // All faces, ascending as masks. Includes the empty face unless void.
    std::vector<Mask> all_faces() const;
    long long face_count() const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_ == o.ground_ && facets_ == o.facets_;
    }

private:
    SimplicialComplex() = default;
    std::vector<std::string> ground_;  // sorted
    std::vector<Mask> facets_;         // minimal, ascending
};

SimplicialComplex link(const SimplicialComplex& x, const std::vector<std::string>& r);
SimplicialComplex restriction(const SimplicialComplex& x, const std::vector<std::string>& r);
// X_{-R}: restriction to the complement of r.
SimplicialComplex deletion(const SimplicialComplex& x, const std::vector<std::string>& r);

// Connected components of the support (facets sharing vertices).
std::vector<Mask> components(const SimplicialComplex& x);

// Vertices contained in every facet. Nonempty iff x is a cone.
std::vector<std::string> cone_apex(const SimplicialComplex& x);
inline bool is_cone(const SimplicialComplex& x) { return !cone_apex(x).empty(); }

int euler_characteristic(const SimplicialComplex& x);

struct StackingCertificate {
    std::vector<std::vector<std::string>> order;  // facets F_0, ..., F_k
    struct Attachment {
        std::vector<std::string> face;  // G_p
        std::string vertex;             // v_p
    };
    std::vector<Attachment> attachments;  // one per p >= 1
};

// Stacking certificate for a given facet order, if it is a stacking.
std::optional<StackingCertificate> certificate_for_order(
    const SimplicialComplex& x, const std::vector<std::vector<std::string>>& order);

// Searches for a stacking order (memoized backtracking over attachable
// facets). Absence is a value; `why` reports impurity vs. failed search.
std::optional<StackingCertificate> is_stacked(const SimplicialComplex& x,
                                              std::string* why = nullptr);

// Hypertree of a stacked complex (Def. of e_G over codimension-one faces).
// A cone apex is stripped first; the cone and its base share the hypertree.
// Vertex labels are facet indices "0","1",... in ascending facet-mask order.
Hypertree hypertree_of(const SimplicialComplex& x);

// Label-bijection isomorphism search with degree-signature pruning.
bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace stacked_sr
