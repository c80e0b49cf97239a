#include "loxo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "loxo/report.hpp"

namespace loxo {

namespace {

// Clips an infinite line to a segment spanning the panel viewport.
SceneSegment clip_line(const std::string& layer, Cx point, Cx dir, const ScenePanel& panel) {
    const double span = 2.0 * panel.view_half * 1.5;
    const Cx nearest =
        point + dir * ((panel.view_center - point) * std::conj(dir)).real();
    return {layer, nearest - span * dir, nearest + span * dir};
}

void push_circle_or_line(ScenePanel& panel, const std::string& layer, const CircleOrLine& c) {
    if (c.is_line) {
        panel.segments.push_back(clip_line(layer, c.line_point, c.line_dir, panel));
    } else {
        panel.circles.push_back({layer, c.circle.center, c.circle.radius});
    }
}

const char* layer_color(const std::string& layer) {
    if (layer == "apollonius") return "#4878cf";
    if (layer == "s_boundary") return "#d65f5f";
    if (layer == "h_image") return "#6acc65";
    if (layer == "avoided") return "#b47cc7";
    if (layer == "unit") return "#bbbbbb";
    return "#333333";
}

void render_panel(std::ostringstream& os, const ScenePanel& panel, double offset_x) {
    const double size = 480.0;
    const double s = size / (2.0 * panel.view_half);
    // World -> screen: x' = off + (x - cx) s, y' = size/2 - (y - cy) s.
    const double tx = offset_x + size / 2.0 - panel.view_center.real() * s;
    const double ty = size / 2.0 + panel.view_center.imag() * s;
    os << "  <g transform=\"matrix(" << fmt17(s) << " 0 0 " << fmt17(-s) << " " << fmt17(tx)
       << " " << fmt17(ty) << ")\" fill=\"none\" stroke-width=\"" << fmt17(1.2 / s) << "\">\n";
    for (const SceneCircle& c : panel.circles) {
        os << "    <circle data-layer=\"" << c.layer << "\" cx=\"" << fmt17(c.center.real())
           << "\" cy=\"" << fmt17(c.center.imag()) << "\" r=\"" << fmt17(c.radius)
           << "\" stroke=\"" << layer_color(c.layer) << "\"/>\n";
    }
    for (const SceneSegment& seg : panel.segments) {
        os << "    <line data-layer=\"" << seg.layer << "\" x1=\"" << fmt17(seg.p1.real())
           << "\" y1=\"" << fmt17(seg.p1.imag()) << "\" x2=\"" << fmt17(seg.p2.real())
           << "\" y2=\"" << fmt17(seg.p2.imag()) << "\" stroke=\""
           << layer_color(seg.layer) << "\"/>\n";
    }
    for (const Cx& p : panel.markers) {
        os << "    <circle data-layer=\"marker\" cx=\"" << fmt17(p.real()) << "\" cy=\""
           << fmt17(p.imag()) << "\" r=\"" << fmt17(3.0 / s)
           << "\" fill=\"#333333\" stroke=\"none\"/>\n";
    }
    os << "  </g>\n";
    os << "  <text x=\"" << fmt17(offset_x + 8.0) << "\" y=\"18\" font-family=\"monospace\" "
       << "font-size=\"13\" fill=\"#333333\">" << panel.name << "</text>\n";
}

}  // namespace

RegionScene build_region_scene(const MoebiusMap& g, const LoxodromicData& data,
                               const AvoidedRegionG& region, const std::vector<double>& rvals) {
    RegionScene scene;
    const Cx pole = g.pole();
    const double ab = std::abs(data.alpha - data.beta);

    scene.z.name = "z-plane";
    scene.z.view_center = 0.5 * (data.alpha + data.beta);
    scene.z.view_half = 3.0 * ab;

    scene.w.name = "w-plane";
    scene.w.view_center = Cx{0.0, 0.0};
    scene.w.view_half = 2.0;

    const ConjugatorH h(data);
    const MoebiusMap h_inv_map = normalize(data.alpha, -data.beta, 1.0, -1.0);

    // Apollonius family C(r) and the images h(dS(r)).
    for (double r : rvals) {
        if (std::abs(r - 1.0) <= 1e-12) {
            const Cx u = (data.alpha - data.beta) / ab;
            scene.z.segments.push_back(clip_line(
                "apollonius", 0.5 * (data.alpha + data.beta), Cx{0.0, 1.0} * u, scene.z));
        } else {
            const CircleGeom c = apollonius_circle(data, r);
            scene.z.circles.push_back({"apollonius", c.center, c.radius});
        }
        push_circle_or_line(scene.w, "h_image", h_boundary_circle_of_S(data, g, r));
    }

    // S(1) boundary: |g'| = 1 locus.
    scene.z.circles.push_back({"s_boundary", pole, 1.0 / std::abs(g.c)});

    // Avoided region in w and its pullback in z.
    const AvoidedRegionF& f = region.base;
    scene.w.circles.push_back({"avoided", Cx{0.0, 0.0}, f.outer_radius});
    push_circle_or_line(scene.z, "avoided",
                        image_of_circle(h_inv_map, {Cx{0.0, 0.0}, f.outer_radius}));
    for (Cx c : f.disk_centers()) {
        scene.w.circles.push_back({"avoided", c, f.delta});
        push_circle_or_line(scene.z, "avoided", image_of_circle(h_inv_map, {c, f.delta}));
    }

    scene.w.circles.push_back({"unit", Cx{0.0, 0.0}, 1.0});

    scene.z.markers = {data.alpha, data.beta, pole};
    scene.w.markers = {Cx{0.0, 0.0}, Cx{1.0, 0.0}, Cx{1.0, 0.0} / data.k};

    // Fit the w viewport around everything drawn there.
    double extent = 2.0;
    for (const SceneCircle& c : scene.w.circles) {
        extent = std::max(extent, std::abs(c.center) + c.radius);
    }
    scene.w.view_half = 1.1 * extent;
    return scene;
}

std::string render_svg(const RegionScene& scene) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"980\" "
          "height=\"480\" viewBox=\"0 0 980 480\">\n";
    os << "  <rect width=\"980\" height=\"480\" fill=\"#ffffff\"/>\n";
    render_panel(os, scene.z, 0.0);
    render_panel(os, scene.w, 500.0);
    os << "</svg>\n";
    return os.str();
}

namespace {

void panel_json(JsonWriter& w, const ScenePanel& panel) {
    w.begin_object();
    w.field("name", panel.name);
    w.field("view_center", panel.view_center);
    w.field("view_half", panel.view_half);
    w.key("circles").begin_array();
    for (const SceneCircle& c : panel.circles) {
        w.begin_object();
        w.field("layer", c.layer);
        w.field("cx", c.center.real());
        w.field("cy", c.center.imag());
        w.field("r", c.radius);
        w.end_object();
    }
    w.end_array();
    w.key("lines").begin_array();
    for (const SceneSegment& s : panel.segments) {
        w.begin_object();
        w.field("layer", s.layer);
        w.field("x1", s.p1.real());
        w.field("y1", s.p1.imag());
        w.field("x2", s.p2.real());
        w.field("y2", s.p2.imag());
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

}  // namespace

std::string scene_json(const RegionScene& scene) {
    JsonWriter w;
    w.begin_object();
    w.key("z");
    panel_json(w, scene.z);
    w.key("w");
    panel_json(w, scene.w);
    w.end_object();
    return w.str() + "\n";
}

}  // namespace loxo
