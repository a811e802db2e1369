#include "mechlsh/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include <json.hpp>

namespace mechlsh::elastic {

namespace {

constexpr double kTol = 1e-9;

int even_ceil(double v) {
    int n = static_cast<int>(std::ceil(v - 1e-12));
    n = std::max(n, 2);
    return n % 2 == 0 ? n : n + 1;
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > kTol ? 1 : (v < -kTol ? -1 : 0);
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

void check_simple(const Polygon& poly) {
    const size_t n = poly.size();
    if (n < 3) throw GeometryError("polygon needs at least three vertices");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            // skip adjacent segments (they share an endpoint)
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]))
                throw GeometryError("self-intersecting polygon outline");
        }
    }
}

// Grid-cell predicate shared by all domain kinds.
struct CellFilter {
    const DomainSpec* spec = nullptr;
    double pitch_x = 0.0, pitch_y = 0.0;
    int strips = 0; // lattice strips per side (2g + 1)
    int cells_per_strip = 0;

    bool keep(int i, int j, const Vec2& origin) const {
        switch (spec->kind) {
        case DomainKind::Rectangle:
            return true;
        case DomainKind::Lattice: {
            const int sx = i / cells_per_strip;
            const int sy = j / cells_per_strip;
            return !(sx % 2 == 1 && sy % 2 == 1);
        }
        case DomainKind::Custom: {
            const Vec2 center{origin.x + (i + 0.5) * pitch_x, origin.y + (j + 0.5) * pitch_y};
            // probe the center and four near-corner points; the 5% inset
            // keeps probes off exact polygon edges
            for (double fx : {-0.95, 0.95, 0.0}) {
                for (double fy : {-0.95, 0.95, 0.0}) {
                    if (fx == 0.0 && fy != 0.0) continue;
                    if (fx != 0.0 && fy == 0.0) continue;
                    const Vec2 p{center.x + 0.5 * fx * pitch_x, center.y + 0.5 * fy * pitch_y};
                    if (!point_in_polygon(p, spec->outline)) return false;
                    for (const auto& hole : spec->holes)
                        if (point_in_polygon(p, hole)) return false;
                }
            }
            return true;
        }
        }
        return false;
    }
};

void check_connected(const Mesh& mesh) {
    const size_t nt = mesh.triangles.size();
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<std::pair<int, int>, int> edge_owner;
    for (size_t t = 0; t < nt; ++t) {
        for (int e = 0; e < 3; ++e) {
            const int a = mesh.triangles[t][e];
            const int b = mesh.triangles[t][(e + 1) % 3];
            const auto key = std::minmax(a, b);
            const auto [it, fresh] = edge_owner.emplace(key, static_cast<int>(t));
            if (!fresh) parent[find(static_cast<int>(t))] = find(it->second);
        }
    }
    for (size_t t = 1; t < nt; ++t)
        if (find(static_cast<int>(t)) != find(0))
            throw MeshError("domain triangulation is disconnected");
}

} // namespace

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
    bool inside = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

DomainSpec DomainSpec::rectangle(double depth, int ns, Fixity fixity, double mesh_h) {
    DomainSpec spec;
    spec.kind = DomainKind::Rectangle;
    spec.depth = depth;
    spec.ns = ns;
    spec.fixity = fixity;
    spec.mesh_h = mesh_h;
    spec.validate();
    return spec;
}

DomainSpec DomainSpec::lattice(int g, double mesh_h) {
    if (g < 2 || g > 4)
        throw std::invalid_argument("lattice window grid must be 2x2, 3x3, or 4x4");
    DomainSpec spec;
    spec.kind = DomainKind::Lattice;
    spec.depth = 10.0;
    spec.ns = g + 1;
    spec.fixity = Fixity::SensorsOnly;
    spec.lattice_grid = g;
    spec.mesh_h = mesh_h;
    spec.validate();
    return spec;
}

DomainSpec DomainSpec::custom(Polygon outline, std::vector<Polygon> holes, int ns,
                              Fixity fixity, double mesh_h) {
    DomainSpec spec;
    spec.kind = DomainKind::Custom;
    spec.depth = 10.0;
    spec.ns = ns;
    spec.fixity = fixity;
    spec.outline = std::move(outline);
    spec.holes = std::move(holes);
    spec.mesh_h = mesh_h;
    spec.validate();
    return spec;
}

void DomainSpec::validate() const {
    if (ns < 2 || ns > 5) throw std::invalid_argument("sensor count must lie in [2, 5]");
    if (mesh_h <= 0.0) throw std::invalid_argument("mesh size must be positive");
    if (kind == DomainKind::Rectangle) {
        const bool known = depth == 1.0 || depth == 2.5 || depth == 5.0 ||
                           depth == 10.0 || depth == 20.0;
        if (!known && depth <= 0.0)
            throw std::invalid_argument("rectangle depth must be positive");
    }
    if (kind == DomainKind::Lattice && ns != lattice_grid + 1)
        throw std::invalid_argument("lattice sensor count must equal g + 1");
    if (kind == DomainKind::Custom) {
        check_simple(outline);
        for (const auto& hole : holes) check_simple(hole);
    }
}

Mesh build_domain(const DomainSpec& spec) {
    spec.validate();

    Vec2 origin{0.0, -spec.depth};
    double width = spec.top_length;
    double height = spec.depth;
    CellFilter filter;
    filter.spec = &spec;
    int nx = 0, ny = 0;

    switch (spec.kind) {
    case DomainKind::Rectangle:
        nx = even_ceil(width / spec.mesh_h);
        ny = even_ceil(height / spec.mesh_h);
        break;
    case DomainKind::Lattice: {
        filter.strips = 2 * spec.lattice_grid + 1;
        const double strut = spec.top_length / filter.strips;
        filter.cells_per_strip = even_ceil(strut / spec.mesh_h);
        nx = ny = filter.strips * filter.cells_per_strip;
        break;
    }
    case DomainKind::Custom: {
        double x0 = spec.outline[0].x, x1 = x0, y0 = spec.outline[0].y, y1 = y0;
        for (const auto& v : spec.outline) {
            x0 = std::min(x0, v.x);
            x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y);
            y1 = std::max(y1, v.y);
        }
        origin = {x0, y0};
        width = x1 - x0;
        height = y1 - y0;
        nx = even_ceil(width / spec.mesh_h);
        ny = even_ceil(height / spec.mesh_h);
        break;
    }
    }

    filter.pitch_x = width / nx;
    filter.pitch_y = height / ny;

    // linear grid triangulation over the kept cells
    Mesh mesh;
    std::vector<int> node_of(static_cast<size_t>((nx + 1) * (ny + 1)), -1);
    const auto vertex = [&](int i, int j) {
        int& id = node_of[static_cast<size_t>(j * (nx + 1) + i)];
        if (id < 0) {
            id = static_cast<int>(mesh.nodes.size());
            mesh.nodes.push_back({origin.x + i * filter.pitch_x, origin.y + j * filter.pitch_y});
        }
        return id;
    };

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!filter.keep(i, j, origin)) continue;
            const int a = vertex(i, j), b = vertex(i + 1, j);
            const int c = vertex(i + 1, j + 1), d = vertex(i, j + 1);
            if ((i + j) % 2 == 0) {
                mesh.triangles.push_back({a, b, c, -1, -1, -1});
                mesh.triangles.push_back({a, c, d, -1, -1, -1});
            } else {
                mesh.triangles.push_back({a, b, d, -1, -1, -1});
                mesh.triangles.push_back({b, c, d, -1, -1, -1});
            }
        }
    }
    if (mesh.triangles.empty()) throw MeshError("no grid cells fall inside the domain");
    check_connected(mesh);
    mesh.corner_count = static_cast<int>(mesh.nodes.size());

    for (const auto& tri : mesh.triangles)
        if (signed_area(mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]) <= 0.0)
            throw MeshError("inverted triangle in grid triangulation");

    // promote to quadratic: shared midside node per undirected edge
    std::map<std::pair<int, int>, int> midside;
    for (auto& tri : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const int a = tri[e];
            const int b = tri[(e + 1) % 3];
            const auto key = std::minmax(a, b);
            auto it = midside.find(key);
            if (it == midside.end()) {
                const int id = static_cast<int>(mesh.nodes.size());
                mesh.nodes.push_back({0.5 * (mesh.nodes[a].x + mesh.nodes[b].x),
                                      0.5 * (mesh.nodes[a].y + mesh.nodes[b].y)});
                it = midside.emplace(key, id).first;
            }
            tri[3 + e] = it->second;
        }
    }

    // boundary edges: corner edges referenced by exactly one triangle
    std::map<std::pair<int, int>, std::pair<int, int>> edge_count; // -> (count, midside)
    for (const auto& tri : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const auto key = std::minmax(tri[e], tri[(e + 1) % 3]);
            auto& entry = edge_count[key];
            ++entry.first;
            entry.second = tri[3 + e];
        }
    }

    double y_top = mesh.nodes[0].y, y_bottom = mesh.nodes[0].y;
    for (const auto& v : mesh.nodes) {
        y_top = std::max(y_top, v.y);
        y_bottom = std::min(y_bottom, v.y);
    }

    mesh.top_x0 = std::numeric_limits<double>::max();
    mesh.top_x1 = std::numeric_limits<double>::lowest();
    for (const auto& [key, entry] : edge_count) {
        if (entry.first != 1) continue;
        const auto& a = mesh.nodes[key.first];
        const auto& b = mesh.nodes[key.second];
        if (std::abs(a.y - y_top) < kTol && std::abs(b.y - y_top) < kTol) {
            mesh.top_edges.push_back({key.first, key.second, entry.second});
            mesh.top_x0 = std::min({mesh.top_x0, a.x, b.x});
            mesh.top_x1 = std::max({mesh.top_x1, a.x, b.x});
        }
    }
    if (mesh.top_edges.empty()) throw MeshError("no loaded surface found on the top line");

    for (int n = 0; n < static_cast<int>(mesh.nodes.size()); ++n)
        if (std::abs(mesh.nodes[n].y - y_bottom) < kTol) mesh.bottom_nodes.push_back(n);
    if (mesh.bottom_nodes.empty()) throw MeshError("no nodes on the bottom line");

    // sensor groups: nearest-station assignment within the segment half-width
    double bx0 = mesh.nodes[mesh.bottom_nodes.front()].x, bx1 = bx0;
    for (int n : mesh.bottom_nodes) {
        bx0 = std::min(bx0, mesh.nodes[n].x);
        bx1 = std::max(bx1, mesh.nodes[n].x);
    }
    const double half_width = 0.5 * spec.sensor_width_frac * spec.top_length;
    mesh.sensor_groups.assign(static_cast<size_t>(spec.ns), {});
    for (int n : mesh.bottom_nodes) {
        const double x = mesh.nodes[n].x;
        int best = 0;
        double best_dist = std::numeric_limits<double>::max();
        for (int s = 0; s < spec.ns; ++s) {
            const double station = bx0 + (bx1 - bx0) * s / (spec.ns - 1);
            const double dist = std::abs(x - station);
            if (dist < best_dist) {
                best_dist = dist;
                best = s;
            }
        }
        if (best_dist <= half_width + kTol) mesh.sensor_groups[best].push_back(n);
    }
    for (const auto& group : mesh.sensor_groups)
        if (group.empty()) throw MeshError("empty sensor segment after meshing");

    return mesh;
}

DomainSpec read_geometry_file(const std::filesystem::path& path, double mesh_h) {
    std::ifstream in(path);
    if (!in) throw GeometryError("cannot open geometry file: " + path.string());
    nlohmann::json doc;
    in >> doc;

    const auto to_polygon = [](const nlohmann::json& arr) {
        Polygon poly;
        for (const auto& v : arr) poly.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        return poly;
    };

    Polygon outline = to_polygon(doc.at("outline"));
    std::vector<Polygon> holes;
    if (doc.contains("holes"))
        for (const auto& h : doc["holes"]) holes.push_back(to_polygon(h));

    const int ns = doc.at("sensors").get<int>();
    Fixity fixity = Fixity::SensorsOnly;
    if (doc.contains("fixity")) {
        const auto label = doc["fixity"].get<std::string>();
        if (label == "full_bottom")
            fixity = Fixity::FullBottom;
        else if (label != "sensors_only")
            throw GeometryError("unknown fixity label: " + label);
    }
    return DomainSpec::custom(std::move(outline), std::move(holes), ns, fixity, mesh_h);
}

} // namespace mechlsh::elastic
