#include "kepoly/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kepoly {

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_rng(seed, counter) >> 11) * 0x1.0p-53;
}

namespace {

struct BoxSampler {
    double x0, y0, dx, dy;
    std::uint64_t seed;

    std::pair<double, double> point(std::int64_t i) const {
        auto k = static_cast<std::uint64_t>(i);
        return {x0 + dx * uniform01(seed, 2 * k), y0 + dy * uniform01(seed, 2 * k + 1)};
    }
};

struct FloatPolygon {
    std::vector<double> xs, ys;

    explicit FloatPolygon(const Polygon& poly) {
        for (const Vec2& v : poly.vertices()) {
            xs.push_back(v.x.to_double());
            ys.push_back(v.y.to_double());
        }
    }

    bool contains(double px, double py) const {
        const std::size_t n = xs.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            double side = (xs[j] - xs[i]) * (py - ys[i]) - (ys[j] - ys[i]) * (px - xs[i]);
            if (side < 0.0)
                return false;
        }
        return true;
    }

    BoxSampler box(std::uint64_t seed) const {
        double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
        for (std::size_t i = 1; i < xs.size(); ++i) {
            xmin = std::min(xmin, xs[i]);
            xmax = std::max(xmax, xs[i]);
            ymin = std::min(ymin, ys[i]);
            ymax = std::max(ymax, ys[i]);
        }
        return BoxSampler{xmin, ymin, xmax - xmin, ymax - ymin, seed};
    }
};

void check_samples(std::int64_t samples) {
    if (samples < 1000)
        throw std::invalid_argument("Monte-Carlo oracle needs at least 1000 samples");
}

} // namespace

McEstimate mc_integrate(const Polygon& poly, const std::function<double(double, double)>& f,
                        std::int64_t samples, std::uint64_t seed) {
    check_samples(samples);
    FloatPolygon fp(poly);
    BoxSampler box = fp.box(seed);
    const double area = box.dx * box.dy;
    const auto n = static_cast<double>(samples);

    double sum_w = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto [px, py] = box.point(i);
        if (fp.contains(px, py))
            sum_w += f(px, py);
    }
    const double mean_w = sum_w / n;

    // Second pass regenerates the identical stream for the variance.
    double ss = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto [px, py] = box.point(i);
        double w = fp.contains(px, py) ? f(px, py) : 0.0;
        ss += (w - mean_w) * (w - mean_w);
    }
    const double sd = std::sqrt(ss / (n - 1.0));

    McEstimate est;
    est.value = area * mean_w;
    est.stderr_value = area * sd / std::sqrt(n);
    est.samples = samples;
    est.seed = seed;
    return est;
}

std::pair<McEstimate, McEstimate>
mc_mean_point(const Polygon& poly, const std::function<double(double, double)>& f,
              std::int64_t samples, std::uint64_t seed) {
    check_samples(samples);
    FloatPolygon fp(poly);
    BoxSampler box = fp.box(seed);
    const auto n = static_cast<double>(samples);

    double sum_w = 0.0, sum_xw = 0.0, sum_yw = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto [px, py] = box.point(i);
        if (fp.contains(px, py)) {
            double w = f(px, py);
            sum_w += w;
            sum_xw += px * w;
            sum_yw += py * w;
        }
    }
    const double mean_w = sum_w / n;
    const double bx = sum_xw / sum_w;
    const double by = sum_yw / sum_w;

    double ssx = 0.0, ssy = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto [px, py] = box.point(i);
        double w = fp.contains(px, py) ? f(px, py) : 0.0;
        double rx = px * w - bx * w;
        double ry = py * w - by * w;
        ssx += rx * rx;
        ssy += ry * ry;
    }
    const double sdx = std::sqrt(ssx / (n - 1.0));
    const double sdy = std::sqrt(ssy / (n - 1.0));

    McEstimate ex{bx, sdx / (mean_w * std::sqrt(n)), samples, seed};
    McEstimate ey{by, sdy / (mean_w * std::sqrt(n)), samples, seed};
    return {ex, ey};
}

namespace {

// Density in float64 straight from the case data; independent of Poly2
// and the exact integration path.
std::function<double(double, double)> float_density(const CaseRecord& rec) {
    std::vector<std::pair<double, double>> roots;
    for (const Vec2& alpha : realize(rec.restricted_type).positive_roots)
        roots.emplace_back(alpha.x.to_double(), alpha.y.to_double());
    int mult = rec.multiplicity;
    return [roots, mult](double x, double y) {
        double out = 1.0;
        for (const auto& [ax, ay] : roots) {
            double factor = ax * x + ay * y;
            for (int k = 0; k < mult; ++k)
                out *= factor;
        }
        return out;
    };
}

} // namespace

McEstimate mc_volume(const CaseRecord& rec, std::int64_t samples, std::uint64_t seed) {
    Polygon poly = intersect(halfplanes_from_case(rec));
    return mc_integrate(poly, float_density(rec), samples, seed);
}

std::pair<McEstimate, McEstimate> mc_barycenter(const CaseRecord& rec, std::int64_t samples,
                                                std::uint64_t seed) {
    Polygon poly = intersect(halfplanes_from_case(rec));
    return mc_mean_point(poly, float_density(rec), samples, seed);
}

} // namespace kepoly
