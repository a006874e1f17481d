#ifndef DJC_STRUCTURES_HPP
#define DJC_STRUCTURES_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace djc {

/// A directed path standing for one arc of the unsubdivided structure.
/// Its inner vertices have in- and out-degree 1 and belong to nothing else.
using Link = std::vector<ArcId>;

/// Outcome of checking a decomposition against its definition.
struct Check {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
    static Check fail(std::string why) { return Check{false, std::move(why)}; }
};

// ---------------------------------------------------------------- vaults

struct Wall {
    std::vector<VertexId> vertices;  // a = front, d = back
    std::vector<ArcId> arcs;         // arcs[k] joins vertices[k] to vertices[k + 1]
    std::size_t b = 0;               // positions on the wall
    std::size_t c = 0;
};

struct VaultDecomposition {
    std::vector<Wall> walls;
    /// cross_links[i]: links from wall i to wall i + 1.
    std::vector<std::vector<Link>> cross_links;
    /// central_links[i]: the link from d_i to a_{i+2}.
    std::vector<Link> central_links;

    std::size_t ell() const { return walls.size(); }
};

/// Links pq and rs (indices into cross_links[wall]) with p before r and q
/// after s.
struct VaultNiche {
    std::size_t wall = 0;
    std::size_t pq = 0;
    std::size_t rs = 0;
};

Check verify_vault(const Digraph& d, const VaultDecomposition& dec);
std::optional<VaultNiche> vault_niche(const Digraph& d, const VaultDecomposition& dec);

/// The explicit dicycle/cycle pair of a niche. Throws std::invalid_argument
/// if the witness is not a niche of `dec`.
Certificate vault_niche_certificate(const Digraph& d, const VaultDecomposition& dec,
                                    const VaultNiche& niche);

/// Arcs of the path that starts at position `from_pos` of wall `from`, runs
/// to the wall's end, and then hops two walls at a time along central links
/// until it reaches position `to_pos` of wall `to`. Requires from != to.
std::vector<ArcId> vault_forward_path(const VaultDecomposition& dec, std::size_t from,
                                      std::size_t from_pos, std::size_t to, std::size_t to_pos);

/// The dicycle through a cross link from wall `wall` to wall `wall + 1`
/// that avoids walls wall + 2, wall + 4, ..., wall - 1.
Dicycle vault_cycle_via_cross_link(const Digraph& d, const VaultDecomposition& dec,
                                   std::size_t wall, const Link& link);

std::optional<VaultDecomposition> recognize_vault(const Digraph& d);

// ----------------------------------------------------------- multiwheels

struct MultiwheelDecomposition {
    enum class Kind { Plain, Split };
    Kind kind = Kind::Plain;
    std::vector<VertexId> rim_vertices;
    std::vector<ArcId> rim_arcs;  // rim_arcs[k] leaves rim_vertices[k]
    VertexId center_in = kNoVertex;   // v, or v- for a split multiwheel
    VertexId center_out = kNoVertex;  // v, or v+
    Link center_link;                 // v- -> v+ (empty when plain)
    std::vector<Link> in_spokes;      // rim -> center_in
    std::vector<Link> out_spokes;     // center_out -> rim

    /// Number of rim vertices carrying a spoke.
    std::size_t p(const Digraph& d) const;
};

Check verify_multiwheel(const Digraph& d, const MultiwheelDecomposition& dec);
std::optional<MultiwheelDecomposition> recognize_multiwheel(const Digraph& d);

/// Every dicycle: the rim, and one per (in-spoke, out-spoke) pair.
std::vector<Dicycle> enumerate_multiwheel_dicycles(const Digraph& d,
                                                   const MultiwheelDecomposition& dec);

// -------------------------------------------------------------- trivaults

struct TrivaultPart {
    enum class Shape { Star, Path };
    Shape shape = Shape::Path;
    /// b_i for an R part, c_i for an L part.
    VertexId root = kNoVertex;
    /// Star: leaves and the links between root and leaf (root -> leaf for
    /// R parts, leaf -> root for L parts).
    std::vector<VertexId> leaves;
    std::vector<Link> leaf_links;
    /// Path: R parts run b_i .. x_i, L parts run y_i .. c_i.
    std::vector<VertexId> path;
    std::vector<ArcId> path_arcs;

    std::vector<VertexId> vertices() const;
};

/// A link from a vertex of R_from to a vertex of L_to.
struct TrivaultCrossLink {
    std::size_t from = 0;
    std::size_t to = 0;
    Link link;
};

struct TrivaultDecomposition {
    std::array<TrivaultPart, 3> r;
    std::array<TrivaultPart, 3> l;
    /// joins[i]: link c_i -> b_i, or nullopt when b_i and c_i are one vertex.
    std::array<std::optional<Link>, 3> joins;
    std::vector<TrivaultCrossLink> cross;
};

struct TrivaultNiche {
    char type = 'a';
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    /// Indices into `cross` of the links that make up the niche.
    std::vector<std::size_t> links;
};

Check verify_trivault(const Digraph& d, const TrivaultDecomposition& dec);
std::optional<TrivaultNiche> trivault_niche(const Digraph& d, const TrivaultDecomposition& dec);
std::vector<Dicycle> enumerate_trivault_dicycles(const Digraph& d,
                                                 const TrivaultDecomposition& dec);

/// A certificate for a trivault with a niche, found among its dicycles.
std::optional<Certificate> trivault_niche_certificate(const Digraph& d,
                                                      const TrivaultDecomposition& dec);

std::optional<TrivaultDecomposition> recognize_trivault(const Digraph& d);

// --------------------------------------------------------- classification

enum class Family { None, Vault, Multiwheel, Trivault };

std::string to_string(Family f);

struct Classification {
    Family family = Family::None;
    bool has_niche = false;
    std::optional<VaultDecomposition> vault;
    std::optional<MultiwheelDecomposition> multiwheel;
    std::optional<TrivaultDecomposition> trivault;
    std::optional<Certificate> niche_certificate;

    /// A niche-free family member, hence a no-instance.
    bool no_instance() const { return family != Family::None && !has_niche; }
};

/// Tries vault, multiwheel and trivault recognition in that order.
Classification recognize_family(const Digraph& d);

/// recognize_family for a strongly connected intercyclic digraph with
/// transversal number 2; throws std::invalid_argument otherwise.
Classification classify_strong_no_instance(const Digraph& d);

}  // namespace djc

#endif  // DJC_STRUCTURES_HPP
