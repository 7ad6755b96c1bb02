#include "taufan/render.hpp"

#include "taufan/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace taufan {

namespace {

std::string fmt(long double v)
{
    char buf[64];
    if (std::fabs(v) < 5e-7L)
        v = 0;
    std::snprintf(buf, sizeof buf, "%.6Lf", v);
    return buf;
}

std::string escape_xml(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string svg_header(int size, const std::string& title)
{
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "<title>" << escape_xml(title) << "</title>\n"
       << "<style>\n"
       << "  .axis { stroke: #b0b0b0; stroke-width: 1; }\n"
       << "  .horizon { stroke: #b0b0b0; stroke-width: 1; fill: none; }\n"
       << "  path { stroke: #1d3f8f; stroke-width: 1.6; fill: none; }\n"
       << "  path.back { stroke-dasharray: 6 4; }\n"
       << "  .limit-ray path { stroke: #8f1d1d; stroke-dasharray: 1.5 4; }\n"
       << "  text { font-family: sans-serif; font-size: 12px; }\n"
       << "  text.chamber { fill: #606060; font-size: 10px; }\n"
       << "</style>\n"
       << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    return os.str();
}

Scalar max_abs(const QVec& v)
{
    Scalar m = 0;
    for (const auto& x : v)
        if (abs(x) > m)
            m = abs(x);
    return m;
}

struct Frame2D {
    long double center;
    long double scale;

    long double px(const Scalar& x) const { return center + scale * x.get_d(); }
    long double py(const Scalar& y) const { return center - scale * y.get_d(); }
};

}  // namespace

std::string render_2d(const std::vector<WallGeometry>& walls, const std::vector<ChamberAnchor>& anchors,
                      const Scene2DOptions& options)
{
    for (const auto& w : walls)
        if (w.cone.ambient != 2)
            throw usage_error("render", "planar rendering needs two vertices, wall " + w.id + " lives in dimension " +
                                            std::to_string(w.cone.ambient));
    const int size = options.pixels;
    const int margin = 48;
    Frame2D f{size / 2.0L, (size / 2.0L - margin) / static_cast<long double>(options.half_width.get_d())};
    const Scalar h = options.half_width;

    std::ostringstream os;
    os << svg_header(size, "wall-and-chamber structure");
    os << "<g class=\"axes\">\n"
       << "  <line class=\"axis\" x1=\"" << fmt(f.px(-h)) << "\" y1=\"" << fmt(f.py(0)) << "\" x2=\"" << fmt(f.px(h))
       << "\" y2=\"" << fmt(f.py(0)) << "\"/>\n"
       << "  <line class=\"axis\" x1=\"" << fmt(f.px(0)) << "\" y1=\"" << fmt(f.py(-h)) << "\" x2=\"" << fmt(f.px(0))
       << "\" y2=\"" << fmt(f.py(h)) << "\"/>\n"
       << "</g>\n";

    for (const auto& w : walls) {
        QVec dir;
        bool line = false;
        if (w.cone.lineality.size() == 1 && w.cone.rays.empty()) {
            dir = w.cone.lineality[0];
            line = true;
        } else if (w.cone.lineality.empty() && w.cone.rays.size() == 1) {
            dir = w.cone.rays[0];
        } else {
            throw usage_error("render", "wall " + w.id + " is not a line or a ray");
        }
        Scalar t = h / max_abs(dir);
        QVec end{dir[0] * t, dir[1] * t};
        QVec start = line ? QVec{-end[0], -end[1]} : QVec{0, 0};

        os << "<g class=\"" << (w.limit ? "limit-ray" : "wall") << "\" id=\"wall-" << escape_xml(w.id) << "\">\n";
        os << "  <path d=\"M " << fmt(f.px(start[0])) << " " << fmt(f.py(start[1])) << " L " << fmt(f.px(end[0]))
           << " " << fmt(f.py(end[1])) << "\"/>\n";
        long double ex = f.px(end[0]) - f.center;
        long double ey = f.py(end[1]) - f.center;
        long double len = std::sqrt(ex * ex + ey * ey);
        long double off = 16;
        os << "  <text x=\"" << fmt(f.center + ex * (1 + off / len)) << "\" y=\"" << fmt(f.center + ey * (1 + off / len))
           << "\" text-anchor=\"middle\">" << escape_xml(w.label) << "</text>\n";
        os << "</g>\n";
    }

    for (const auto& a : anchors) {
        if (a.point.size() != 2)
            continue;
        Scalar m = max_abs(a.point);
        if (m == 0)
            continue;
        Scalar t = h * Scalar(3, 5) / m;
        os << "<text class=\"chamber\" x=\"" << fmt(f.px(a.point[0] * t)) << "\" y=\"" << fmt(f.py(a.point[1] * t))
           << "\" text-anchor=\"middle\">" << escape_xml(a.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

Scalar dot3(const QVec& a, const QVec& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

QVec cross(const QVec& a, const QVec& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

QVec neg(const QVec& a)
{
    return {-a[0], -a[1], -a[2]};
}

long integer_norm2(const QVec& v)
{
    Scalar s = dot3(v, v);
    if (s.get_den() != 1 || !s.get_num().fits_slong_p())
        throw usage_error("render", "sample vector too large for exact projection");
    return s.get_num().get_si();
}

std::vector<std::pair<QVec, QVec>> wedges(const WallGeometry& w)
{
    const VCone& c = w.cone;
    if (c.ambient != 3 || dimension(c) != 2)
        throw usage_error("render", "wall " + w.id + " is not a two-dimensional cone in three-space");
    if (c.lineality.size() == 2) {
        const QVec& a = c.lineality[0];
        QVec b = primitive(cross(wall_normal(c), a));
        return {{a, b}, {b, neg(a)}, {neg(a), neg(b)}, {neg(b), a}};
    }
    if (c.lineality.size() == 1)
        return {{c.lineality[0], c.rays[0]}, {c.rays[0], neg(c.lineality[0])}};
    return {{c.rays[0], c.rays[1]}};
}

}  // namespace

QVec wall_normal(const VCone& cone)
{
    std::vector<QVec> span = cone.lineality;
    span.insert(span.end(), cone.rays.begin(), cone.rays.end());
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = i + 1; j < span.size(); ++j) {
            QVec n = cross(span[i], span[j]);
            if (n[0] != 0 || n[1] != 0 || n[2] != 0)
                return primitive(n);
        }
    throw usage_error("render", "wall does not span a plane");
}

std::vector<ProjectedSample> sample_wall(const WallGeometry& wall, const ProjectionSpec& spec)
{
    if (spec.point.size() != 3)
        throw usage_error("render", "projection point must have three coordinates");
    QVec p = primitive(spec.point);
    if (dot3(p, p) == 0)
        throw usage_error("render", "projection point must be nonzero");
    if (contains(constraints_of(wall.cone), p))
        throw usage_error("render", "projection point lies on wall " + wall.id);

    auto pieces = wedges(wall);
    int per = std::max(2, spec.samples / static_cast<int>(pieces.size()));
    const long pp = integer_norm2(p);
    const long n = square_free_part(pp);

    std::vector<ProjectedSample> out;
    for (size_t k = 0; k < pieces.size(); ++k) {
        const auto& [a, b] = pieces[k];
        for (int i = (k == 0 ? 0 : 1); i <= per; ++i) {
            Scalar t(i, per);
            QVec w{(1 - t) * a[0] + t * b[0], (1 - t) * a[1] + t * b[1], (1 - t) * a[2] + t * b[2]};
            w = primitive(w);
            const long ww = integer_norm2(w);
            const long m = square_free_part(ww);
            Surd wn = Surd::sqrt_of(m, n, ww);
            Surd pn = Surd::sqrt_of(m, n, pp);
            Surd one(m, n, 1);
            Surd sn = Surd(m, n, dot3(w, p)) / (wn * pn);
            ProjectedSample s;
            s.direction = w;
            s.back = dot3(w, p) > 0;
            for (int c = 0; c < 3; ++c) {
                s.sphere[c] = Surd(m, n, w[c]) / wn;
                Surd nc = Surd(m, n, p[c]) / pn;
                s.image[c] = (s.sphere[c] - sn * nc) / (one - sn);
            }
            out.push_back(std::move(s));
        }
    }
    if (wall.cone.lineality.size() == 2 && !out.empty())
        out.push_back(out.front());
    return out;
}

bool inverse_projection_holds(const ProjectedSample& s, const QVec& normal, const ProjectionSpec& spec)
{
    const long m = s.image[0].m();
    const long n = s.image[0].n();
    QVec p = primitive(spec.point);
    Surd pn = Surd::sqrt_of(m, n, integer_norm2(p));
    Surd one(m, n, 1);
    Surd two(m, n, 2);
    Surd x2 = s.image[0] * s.image[0] + s.image[1] * s.image[1] + s.image[2] * s.image[2];
    Surd denom = x2 + one;
    std::array<Surd, 3> back;
    for (int c = 0; c < 3; ++c)
        back[c] = (two * s.image[c] + (x2 - one) * (Surd(m, n, p[c]) / pn)) / denom;
    Surd norm = back[0] * back[0] + back[1] * back[1] + back[2] * back[2];
    Surd plane = Surd(m, n, normal[0]) * back[0] + Surd(m, n, normal[1]) * back[1] + Surd(m, n, normal[2]) * back[2];
    return norm == one && plane.is_zero() && back[0] == s.sphere[0] && back[1] == s.sphere[1] &&
           back[2] == s.sphere[2];
}

std::string render_stereographic(const std::vector<WallGeometry>& walls, const ProjectionSpec& spec)
{
    if (spec.point.size() != 3)
        throw usage_error("render", "projection point must have three coordinates");
    for (const auto& w : walls)
        if (w.cone.ambient != 3)
            throw usage_error("render", "stereographic rendering needs three vertices, wall " + w.id +
                                            " lives in dimension " + std::to_string(w.cone.ambient));

    // Orthonormal frame of the projection plane, only used for pixel output.
    QVec p = primitive(spec.point);
    QVec u = (p[0] != 0 || p[1] != 0) ? QVec{p[1], -p[0], 0} : QVec{1, 0, 0};
    QVec v = cross(p, u);
    auto unit = [](const QVec& x) {
        long double n = std::sqrt(static_cast<long double>(dot3(x, x).get_d()));
        return std::array<long double, 3>{x[0].get_d() / n, x[1].get_d() / n, x[2].get_d() / n};
    };
    auto e1 = unit(u);
    auto e2 = unit(v);

    const int size = spec.pixels;
    const int margin = 32;
    const long double r = spec.view_radius.get_d();
    const long double center = size / 2.0L;

    // Everything inside the view disk is kept; the scale fits what is kept.
    std::vector<std::vector<ProjectedSample>> all;
    std::vector<std::vector<bool>> shown;
    long double extent = 1;
    for (const auto& w : walls) {
        all.push_back(sample_wall(w, spec));
        std::vector<bool> visible;
        for (const auto& s : all.back()) {
            long double n2 = 0;
            for (const auto& c : s.image)
                n2 += c.value() * c.value();
            visible.push_back(n2 <= r * r);
            if (visible.back())
                extent = std::max(extent, std::sqrt(n2));
        }
        shown.push_back(std::move(visible));
    }
    const long double scale = (center - margin) / extent;
    auto to_px = [&](const std::array<Surd, 3>& x) {
        long double a = 0, b = 0;
        for (int c = 0; c < 3; ++c) {
            long double xv = x[c].value();
            a += xv * e1[c];
            b += xv * e2[c];
        }
        return std::pair<long double, long double>{center + scale * a, center - scale * b};
    };

    std::ostringstream os;
    os << svg_header(size, "stereographic projection of the wall-and-chamber structure");
    os << "<circle class=\"horizon\" cx=\"" << fmt(center) << "\" cy=\"" << fmt(center) << "\" r=\"" << fmt(scale)
       << "\"/>\n";

    for (size_t wi = 0; wi < walls.size(); ++wi) {
        const auto& w = walls[wi];
        const auto& samples = all[wi];
        const auto& visible = shown[wi];
        os << "<g class=\"" << (w.limit ? "limit-ray" : "wall") << "\" id=\"wall-" << escape_xml(w.id) << "\">\n";
        size_t i = 0;
        while (i < samples.size()) {
            if (!visible[i]) {
                ++i;
                continue;
            }
            bool back = samples[i].back;
            size_t j = i;
            std::ostringstream d;
            auto [x0, y0] = to_px(samples[i].image);
            d << "M " << fmt(x0) << " " << fmt(y0);
            while (j + 1 < samples.size() && visible[j + 1]) {
                ++j;
                auto [x, y] = to_px(samples[j].image);
                d << " L " << fmt(x) << " " << fmt(y);
                if (samples[j].back != back)
                    break;
            }
            if (j > i)
                os << "  <path class=\"" << (back ? "back" : "front") << "\" d=\"" << d.str() << "\"/>\n";
            i = (j > i && samples[j].back != back) ? j : j + 1;
        }

        size_t mid = samples.size() / 2;
        size_t best = samples.size();
        for (size_t k = 0; k < samples.size(); ++k)
            if (visible[k] && (best == samples.size() || (k > mid ? k - mid : mid - k) < (best > mid ? best - mid : mid - best)))
                best = k;
        if (best < samples.size()) {
            auto [x, y] = to_px(samples[best].image);
            long double dx = x - center, dy = y - center;
            long double len = std::sqrt(dx * dx + dy * dy);
            if (len < 1e-9L) {
                dx = 0;
                dy = -1;
                len = 1;
            }
            os << "  <text x=\"" << fmt(x + 10 * dx / len) << "\" y=\"" << fmt(y + 10 * dy / len)
               << "\" text-anchor=\"middle\">" << escape_xml(w.label) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

std::string escape_dot(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const std::string& graph_name, const std::vector<std::string>& nodes,
                       const std::vector<DotEdge>& edges)
{
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    if (!nodes.empty())
        os << "  node [shape=box, fontname=\"sans-serif\"];\n";
    for (size_t i = 0; i < nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << escape_dot(nodes[i]) << "\"];\n";
    for (const auto& e : edges) {
        os << "  n" << e.from << " -> n" << e.to;
        if (!e.label.empty())
            os << " [label=\"" << escape_dot(e.label) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace taufan
