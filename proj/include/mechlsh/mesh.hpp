#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mechlsh::elastic {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

using Polygon = std::vector<Vec2>;

enum class Fixity { SensorsOnly, FullBottom };
enum class DomainKind { Rectangle, Lattice, Custom };

/// Geometry + sensor + fixity description of a 2-D hashing domain. The
/// loaded surface is the top edge; sensors sit on the bottom boundary as
/// equal-width node groups centered at evenly spaced stations.
struct DomainSpec {
    DomainKind kind = DomainKind::Rectangle;
    double depth = 10.0;
    double top_length = 10.0;
    int ns = 2;
    Fixity fixity = Fixity::SensorsOnly;
    int lattice_grid = 0; // g for a g x g window grid
    Polygon outline;      // custom domains only
    std::vector<Polygon> holes;
    double mesh_h = 0.5;
    double sensor_width_frac = 0.05; // sensor segment width / top_length

    static DomainSpec rectangle(double depth, int ns, Fixity fixity, double mesh_h = 0.5);

    /// Lattice with a g x g window grid (g in {2,3,4} pairs with ns = g+1).
    /// Struts and windows share the uniform width 10 / (2g + 1).
    static DomainSpec lattice(int g, double mesh_h = 0.5);

    static DomainSpec custom(Polygon outline, std::vector<Polygon> holes, int ns,
                             Fixity fixity, double mesh_h = 0.5);

    void validate() const;
};

/// Conforming 6-node triangle mesh. Triangles store three corners
/// (counter-clockwise) followed by the midside nodes of edges 0-1, 1-2,
/// 2-0. Corner nodes come first in the node array.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 6>> triangles;
    int corner_count = 0;

    std::vector<std::array<int, 3>> top_edges; // (corner, corner, midside) on the loaded surface
    std::vector<int> bottom_nodes;             // every node on the bottom line
    std::vector<std::vector<int>> sensor_groups;
    double top_x0 = 0.0, top_x1 = 0.0; // x-span of the loaded surface

    int dof_count() const { return 2 * static_cast<int>(nodes.size()); }
};

/// Triangulates the domain on a structured grid: rectangles and lattices
/// exactly (grid pitch divides every feature), custom polygons by keeping
/// grid cells that fall inside the outline and outside the holes. Linear
/// cells are split along alternating diagonals (mirror-symmetric for the
/// symmetric domains) and then promoted to quadratic.
Mesh build_domain(const DomainSpec& spec);

/// Reads a custom-domain JSON file: {"outline": [[x,y],...],
/// "holes": [[[x,y],...],...], "sensors": ns, "fixity": "sensors_only" |
/// "full_bottom"}.
DomainSpec read_geometry_file(const std::filesystem::path& path, double mesh_h = 0.5);

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c);

bool point_in_polygon(const Vec2& p, const Polygon& poly);

} // namespace mechlsh::elastic
