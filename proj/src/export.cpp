#include "qkernel/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace qkernel {

namespace {

constexpr double kCanvas = 640.0;

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* palette(std::size_t i) {
    static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    return colours[i % 6];
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<RootSet>& sets) {
    os << "re,im,n,family,plane\n";
    for (const RootSet& s : sets)
        for (const Root& r : s.roots)
            os << r.z.real().to_string(17) << ',' << r.z.imag().to_string(17) << ',' << s.n << ',' << s.family << ','
               << plane_name(s.plane) << '\n';
}

void write_svg(std::ostream& os, const std::vector<RootSet>& sets) {
    const bool t_plane = !sets.empty() && sets.front().plane == Plane::t;
    const double circle = t_plane ? 0.5 : 1.0;
    double extent = 1.25 * circle;
    for (const RootSet& s : sets)
        for (const Root& r : s.roots)
            extent = std::max({extent, 1.05 * std::abs(r.z.real().to_double()), 1.05 * std::abs(r.z.imag().to_double())});
    const double scale = kCanvas / (2 * extent), mid = kCanvas / 2;
    auto px = [&](double x) { return fixed3(mid + x * scale); };
    auto py = [&](double y) { return fixed3(mid - y * scale); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << kCanvas << "\" y2=\"" << py(0)
       << "\" stroke=\"#cccccc\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << kCanvas
       << "\" stroke=\"#cccccc\"/>\n";
    os << "<circle class=\"overlay\" cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << fixed3(circle * scale)
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const RootSet& s = sets[i];
        for (const Root& r : s.roots)
            os << "<circle class=\"root\" cx=\"" << px(r.z.real().to_double()) << "\" cy=\""
               << py(r.z.imag().to_double()) << "\" r=\"2.5\" fill=\"" << palette(i) << "\"><title>" << s.family
               << " n=" << s.n << "</title></circle>\n";
    }
    os << "</svg>\n";
}

void export_points(const std::vector<RootSet>& sets, PointFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (format == PointFormat::csv)
        write_csv(out, sets);
    else
        write_svg(out, sets);
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace qkernel
