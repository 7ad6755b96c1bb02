#pragma once

#include "taufan/cone.hpp"
#include "taufan/surd.hpp"

#include <array>
#include <string>
#include <vector>

namespace taufan {

struct WallGeometry {
    std::string id;
    std::string label;
    VCone cone;
    bool limit = false;
};

struct ChamberAnchor {
    std::string label;
    QVec point;
};

struct Scene2DOptions {
    Scalar half_width = 3;
    int pixels = 480;
};

// Lines and rays through the origin, clipped to the square [-h, h]^2.
std::string render_2d(const std::vector<WallGeometry>& walls, const std::vector<ChamberAnchor>& anchors = {},
                      const Scene2DOptions& options = {});

struct ProjectionSpec {
    QVec point{1, 1, 1};
    int samples = 64;
    Scalar view_radius = 8;
    int pixels = 640;
};

// A sample w on a wall, the sphere point w/|w| and its image under
// stereographic projection from point/|point|, all in Q(sqrt|w|^2, sqrt|p|^2).
struct ProjectedSample {
    QVec direction;
    std::array<Surd, 3> sphere;
    std::array<Surd, 3> image;
    bool back = false;
};

std::vector<ProjectedSample> sample_wall(const WallGeometry& wall, const ProjectionSpec& spec);
QVec wall_normal(const VCone& cone);
// Maps the image back onto the sphere and checks it is the original point on
// the unit sphere and in the wall's plane.
bool inverse_projection_holds(const ProjectedSample& s, const QVec& normal, const ProjectionSpec& spec);

std::string render_stereographic(const std::vector<WallGeometry>& walls, const ProjectionSpec& spec = {});

struct DotEdge {
    int from = 0;
    int to = 0;
    std::string label;
};

std::string export_dot(const std::string& graph_name, const std::vector<std::string>& nodes,
                       const std::vector<DotEdge>& edges);

}  // namespace taufan
