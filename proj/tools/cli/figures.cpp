#include "cli/figures.hpp"

#include "cli/format.hpp"
#include "sl2geo/sl2geo.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace sl2geo::cli {

namespace {

constexpr int kCoordDigits = 10;
constexpr int kPathSamples = 400;

std::string coord(double v) { return number(v, kCoordDigits); }

std::string polyline(const std::vector<QuotientPoint>& pts, bool closed)
{
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += (i == 0 ? "M" : " L");
        d += coord(pts[i].x) + "," + coord(pts[i].y);
    }
    if (closed) d += " Z";
    return d;
}

std::vector<QuotientPoint> geodesic_points(double c, double s_end)
{
    std::vector<QuotientPoint> pts;
    for (const auto& p : sample_path(c, s_end, kPathSamples)) pts.push_back({p.x, p.y});
    return pts;
}

std::string header(double x0, double y0, double w, double h, double stroke)
{
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + coord(x0) + " " + coord(y0) + " " +
         coord(w) + " " + coord(h) + "\" width=\"" + coord(60 * w) + "\" height=\"" + coord(60 * h) + "\">\n";
    s += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" + coord(stroke) + "\">\n";
    return s;
}

std::string footer() { return "</g>\n</svg>\n"; }

std::string axes(double x0, double x1, double y0, double y1)
{
    return "<line class=\"axis\" x1=\"" + coord(x0) + "\" y1=\"0\" x2=\"" + coord(x1) +
           "\" y2=\"0\" stroke=\"gray\"/>\n<line class=\"axis\" x1=\"0\" y1=\"" + coord(y0) +
           "\" x2=\"0\" y2=\"" + coord(y1) + "\" stroke=\"gray\"/>\n";
}

std::string unit_circle() { return "<circle class=\"unit-circle\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\"/>\n"; }

std::string geodesic_path(const std::string& label, const std::string& color, const std::vector<QuotientPoint>& pts)
{
    return "<path class=\"geodesic\" data-c=\"" + label + "\" stroke=\"" + color + "\" d=\"" + polyline(pts, false) +
           "\"/>\n";
}

const char* fan_color(double c)
{
    const double a = std::abs(c);
    if (a < 1.0) return "green";
    if (a == 1.0) return "black";
    if (std::abs(a - kOrthogonalCrossing) < 1e-12) return "red";
    if (a <= kLandingThreshold) return "blue";
    return "purple";
}

std::string figure_fan()
{
    const double magnitudes[] = {0.9, 0.95, 1.0, 1.03, 1.12, kLandingThreshold, kOrthogonalCrossing, 1.2, 1.5};
    std::string s = header(-6, -5, 12, 10, 0.03);
    s += axes(-6, 6, -5, 5);
    s += unit_circle();
    for (double m : magnitudes) {
        for (double c : {m, -m}) {
            s += geodesic_path(number(c, kCoordDigits), fan_color(c), geodesic_points(c, s_int(c)));
        }
    }
    return s + footer();
}

std::string figure_bisection()
{
    const double lo = kLandingThreshold, hi = 3.0 / std::sqrt(5.0);
    const double first = 0.5 * (lo + hi);
    const double second = 0.5 * (first + hi);
    const double solved = distance_to_class({0.0, 1.5}).c;
    struct Curve {
        double c;
        const char* color;
    };
    const Curve curves[] = {{lo, "black"}, {hi, "black"}, {first, "red"}, {second, "green"}, {solved, "blue"}};
    std::string s = header(-2.5, -2.5, 5, 5, 0.015);
    s += axes(-2.5, 2.5, -2.5, 2.5);
    s += unit_circle();
    char label[32];
    for (const Curve& cv : curves) {
        std::snprintf(label, sizeof label, "%.6f", cv.c);
        s += geodesic_path(label, cv.color, geodesic_points(cv.c, s_int(cv.c)));
    }
    s += "<circle class=\"target\" cx=\"0\" cy=\"1.5\" r=\"0.04\" fill=\"black\"/>\n";
    return s + footer();
}

std::string figure_su2()
{
    const double omegas[] = {-4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0};
    const double times[] = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    std::string s = header(-1.2, -1.2, 2.4, 2.4, 0.006);
    s += axes(-1.2, 1.2, -1.2, 1.2);
    s += unit_circle();
    for (double w : omegas) {
        const double end = su2_landing_time(w);
        std::vector<QuotientPoint> pts;
        for (int i = 0; i < kPathSamples; ++i) {
            pts.push_back(su2_planar_geodesic(w, end * i / (kPathSamples - 1)));
        }
        s += "<path class=\"su2-geodesic\" data-omega=\"" + number(w, kCoordDigits) + "\" stroke=\"blue\" d=\"" +
             polyline(pts, false) + "\"/>\n";
    }
    for (double t : times) {
        s += "<path class=\"reachable\" data-s=\"" + number(t, kCoordDigits) + "\" stroke=\"red\" d=\"" +
             polyline(reachable_boundary(t, 256), true) + "\"/>\n";
    }
    return s + footer();
}

} // namespace

std::string figure_svg(int which)
{
    switch (which) {
    case 1: return figure_fan();
    case 2: return figure_bisection();
    case 3: return figure_su2();
    default: return {};
    }
}

} // namespace sl2geo::cli
