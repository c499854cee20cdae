#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "tropdual/trop_polynomial.hpp"

namespace tropdual {

/// How coefficients become lifting heights: h_ω = sign·a_ω, lower hull.
///
/// `examples` (+1) is the convention under which node appearance is decided
/// by the distortion sign of the coefficients themselves. `kapranov` (-1)
/// lifts by −a_ω, whose dual curve is the corner locus of max(a_ω + ω·x).
enum class SignConvention { examples = 1, kapranov = -1 };

[[nodiscard]] constexpr int sign_value(SignConvention s) { return static_cast<int>(s); }
[[nodiscard]] SignConvention parse_sign_convention(std::string_view text);
[[nodiscard]] std::string_view to_string(SignConvention s);

struct NewtonPolytope {
    std::size_t nvars = 0;
    /// Affine dimension of the hull of the support.
    int dim = 0;
    /// Corners of the hull; counter-clockwise for full-dimensional planar hulls.
    std::vector<Exponent> vertices;
    /// Every lattice point of the hull, sorted.
    std::vector<Exponent> lattice_nodes;
};

/// Throws UnsupportedShape for nvars >= 3 unless the support spans the full
/// quadric simplex (all 2e_i and the origin present, total degree <= 2).
[[nodiscard]] NewtonPolytope newton_polytope(const TropPolynomial& f);

struct Cell {
    /// Support points whose lifts lie on the lower face, sorted.
    std::vector<Exponent> points;
    /// Vertices of the cell; counter-clockwise when the cell is 2-dimensional,
    /// ordered along the segment when it is 1-dimensional.
    std::vector<Exponent> corners;
    int dim = 0;
};

struct Subdivision {
    NewtonPolytope polytope;
    SignConvention sign = SignConvention::examples;
    /// Lifting height of every support point.
    std::map<Exponent, Rational> heights;
    /// False for quadrics in three or more variables, where only node
    /// appearance is decided (by edge-triple convexity) and no cells are built.
    bool cells_computed = true;
    std::vector<Cell> cells;
    /// Lattice points that are 0-cells, sorted.
    std::vector<Exponent> appearing_nodes;
};

/// Regular subdivision induced by the lower hull of {(ω, sign·a_ω)}.
/// Supported: nvars <= 2, or a quadric whose support spans 2Δ_n.
[[nodiscard]] Subdivision induced_subdivision(const TropPolynomial& f,
                                              SignConvention sign = SignConvention::examples);

enum class NodeClass { maximal_in_nodes, minimal_in_nodes, neither };

[[nodiscard]] std::string_view to_string(NodeClass c);

/// maximal when every lattice node appears, minimal when only polytope
/// corners do. A polytope whose nodes are all corners reports maximal.
[[nodiscard]] NodeClass node_classification(const Subdivision& s);

/// Planar only: true iff no cell can be refined, i.e. every cell is a
/// unimodular triangle (a primitive segment for 1-dimensional polytopes).
[[nodiscard]] bool is_complete(const Subdivision& s);

struct SubdivisionEdge {
    Exponent a;
    Exponent b;
    /// Indices into Subdivision::cells; one entry for boundary edges.
    std::vector<std::size_t> cells;
};

/// Edges of the cells of a planar subdivision, sorted by endpoints. For a
/// 1-dimensional polytope every cell is itself an edge.
[[nodiscard]] std::vector<SubdivisionEdge> subdivision_edges(const Subdivision& s);

}  // namespace tropdual
