#pragma once

#include <string>
#include <vector>

#include "loxo/avoided.hpp"

namespace loxo {

// World-coordinate drawing primitives; the renderer maps them to screen space
// with a single group transform so the emitted numbers match the JSON records
// character for character.
struct SceneCircle {
    std::string layer;
    Cx center;
    double radius;
};

struct SceneSegment {
    std::string layer;
    Cx p1;
    Cx p2;
};

struct ScenePanel {
    std::string name;
    Cx view_center;
    double view_half;  // half-width of the square viewport
    std::vector<SceneCircle> circles;
    std::vector<SceneSegment> segments;
    std::vector<Cx> markers;
};

struct RegionScene {
    ScenePanel z;  // dynamical plane
    ScenePanel w;  // dilation coordinates
};

// Layers: Apollonius circles C(r), the S(1) boundary, images h(dS(r)), the
// avoided-region disks in both coordinate systems, fixed points and pole.
RegionScene build_region_scene(const MoebiusMap& g, const LoxodromicData& data,
                               const AvoidedRegionG& region, const std::vector<double>& rvals);

std::string render_svg(const RegionScene& scene);
std::string scene_json(const RegionScene& scene);

}  // namespace loxo
