#include "conelab/svg.hpp"

#include <cmath>
#include <cstdio>

namespace conelab {

namespace {

constexpr double kSize = 640.0;
constexpr double kCx = 320.0;
constexpr double kCy = 320.0;
constexpr double kRadius = 280.0;

std::string fmt(double v) {
    char buf[32];
    // avoid the negative-zero byte difference
    if (v > -0.005 && v < 0.005) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Pt {
    double x, y;
};

Pt ray_point(const Ray& r, double radius) {
    double x = r.u().to_double();
    double y = r.v().to_double();
    double len = std::sqrt(x * x + y * y);
    return {kCx + radius * x / len, kCy - radius * y / len};
}

std::string wedge_path(const Ray& a, const Ray& b) {
    Pt p1 = ray_point(a, kRadius);
    Pt p2 = ray_point(b, kRadius);
    return "M" + fmt(kCx) + "," + fmt(kCy) + " L" + fmt(p1.x) + "," + fmt(p1.y) + " A" +
           fmt(kRadius) + "," + fmt(kRadius) + " 0 0,0 " + fmt(p2.x) + "," + fmt(p2.y) + " Z";
}

}  // namespace

std::string render_tiling_svg(const TilingReport& report, const Cone2& c) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSize) + "\" height=\"" +
           fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " + fmt(kSize) + "\">\n";
    out += "<rect width=\"" + fmt(kSize) + "\" height=\"" + fmt(kSize) + "\" fill=\"#ffffff\"/>\n";

    for (const Tile& t : report.tiles) {
        bool is_domain = t.k == 0 && !t.flip;
        std::string fill = is_domain ? "#fdae6b" : (t.flip ? "#c6dbef" : "#9ecae1");
        out += "<path d=\"" + wedge_path(t.cone.r1(), t.cone.r2()) + "\" fill=\"" + fill +
               "\" stroke=\"#4a5568\" stroke-width=\"0.50\"><title>" + t.word() + "</title></path>\n";
    }

    for (const Ray* r : {&c.r1(), &c.r2()}) {
        Pt p = ray_point(*r, kRadius + 24.0);
        out += "<line x1=\"" + fmt(kCx) + "\" y1=\"" + fmt(kCy) + "\" x2=\"" + fmt(p.x) +
               "\" y2=\"" + fmt(p.y) +
               "\" stroke=\"#e53e3e\" stroke-width=\"1.50\" stroke-dasharray=\"6,3\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace conelab
