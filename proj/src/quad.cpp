#include "hgc/quad.hpp"

#include <cmath>
#include <numbers>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTanhSinhT = 5.0;
constexpr double kExpSinhT = 6.0;

// t ascending follows the path
struct Piece {
    std::function<void(double, Node&, cd&)> map;
    double T;
};

// x in (0, 1) split as a / (1 + e^{-2u}) with both complements accurate
void tanh_sinh_weights(double t, double& lo, double& hi, double& dx) {
    double u = 0.5 * kPi * std::sinh(t);
    double ch = std::cosh(u);
    dx = 0.5 * kPi * std::cosh(t) / (ch * ch) * 0.5;
    lo = 1.0 / (1.0 + std::exp(-2.0 * u));
    hi = 1.0 / (1.0 + std::exp(2.0 * u));
}

Piece segment_piece(cd a, cd b) {
    return {[a, b](double t, Node& n, cd& ds) {
                double lo, hi, dx;
                tanh_sinh_weights(t, lo, hi, dx);
                n.start = a;
                n.end = b;
                n.from_start = (b - a) * lo;
                n.to_end = (b - a) * hi;
                n.has_start = n.has_end = true;
                n.s = t < 0 ? a + n.from_start : b - n.to_end;
                ds = (b - a) * dx;
            },
            kTanhSinhT};
}

// start + dir * x, x = exp(+-pi/2 sinh t); inward runs from infinity to start
Piece ray_piece(cd start, cd dir, bool inward) {
    double sg = inward ? -1.0 : 1.0;
    return {[=](double t, Node& n, cd& ds) {
                double x = std::exp(sg * 0.5 * kPi * std::sinh(t));
                n.from_start = dir * x;
                n.s = start + n.from_start;
                if (inward) {
                    n.end = start;
                    n.to_end = -n.from_start;
                    n.has_end = true;
                } else {
                    n.start = start;
                    n.has_start = true;
                }
                ds = dir * (sg * x * 0.5 * kPi * std::cosh(t));
            },
            kExpSinhT};
}

Piece arc_piece(cd c, double r, double phi0, double phi1) {
    return {[=](double t, Node& n, cd& ds) {
                double lo, hi, dx;
                tanh_sinh_weights(t, lo, hi, dx);
                double phi = t < 0 ? phi0 + (phi1 - phi0) * lo : phi1 - (phi1 - phi0) * hi;
                cd e = std::polar(1.0, phi);
                n.s = c + r * e;
                ds = cd(0, 1) * r * e * ((phi1 - phi0) * dx);
            },
            kTanhSinhT};
}

struct HankelGeom {
    cd center;
    double radius;
};

HankelGeom hankel_geom(const HankelLoop& h) {
    if (h.enclosed.empty()) throw InvalidArgument("Hankel loop needs at least one enclosed point");
    cd c = 0.0;
    for (cd p : h.enclosed) c += p;
    c /= double(h.enclosed.size());
    double md = 0.0;
    for (cd p : h.enclosed) md = std::max(md, std::abs(p - c));
    double r = h.cap_radius > 0 ? h.cap_radius : std::max(0.3 * (1.0 + std::abs(c)), 1.5 * md);
    return {c, r};
}

std::vector<Piece> pieces_of(const ContourSpec& spec) {
    std::vector<Piece> out;
    if (auto* sg = std::get_if<Segment>(&spec.variant)) {
        out.push_back(segment_piece(sg->from, sg->to));
    } else if (auto* hl = std::get_if<HalfLineDE>(&spec.variant)) {
        if (hl->direction == cd(0)) throw InvalidArgument("half line with zero direction");
        out.push_back(ray_piece(hl->start, hl->direction, false));
    } else if (auto* hk = std::get_if<HankelLoop>(&spec.variant)) {
        HankelGeom g = hankel_geom(*hk);
        double th = hk->approach_angle;
        cd lo = std::polar(1.0, -th), up = std::polar(1.0, th);
        cd plo = g.center + g.radius * lo, pup = g.center + g.radius * up;
        if (hk->stem_length > 0) {
            out.push_back(segment_piece(plo + hk->stem_length * lo, plo));
            out.push_back(arc_piece(g.center, g.radius, -th, th));
            out.push_back(segment_piece(pup, pup + hk->stem_length * up));
        } else {
            out.push_back(ray_piece(plo, lo, true));
            out.push_back(arc_piece(g.center, g.radius, -th, th));
            out.push_back(ray_piece(pup, up, false));
        }
    }
    return out;
}

bool finite(cd v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

QuadResult integrate_circle(const NodeIntegrand& f, const Circle& c, const ContourSpec& spec,
                            const std::function<void()>& restart) {
    if (!(c.radius > 0)) throw InvalidArgument("circle radius must be positive");
    if (spec.points < 16) throw InvalidArgument("at least 16 nodes required");
    QuadResult r;
    double best_err = 1e300;
    cd best = 0.0;
    for (int n = spec.points; n <= 16 * spec.points; n *= 2) {
        if (restart) restart();
        cd full = 0.0, half = 0.0;
        for (int k = 0; k < n; ++k) {
            double th = -kPi + 2.0 * kPi * (k + 0.5) / n;
            cd e = std::polar(1.0, th);
            Node nd;
            nd.s = c.center + c.radius * e;
            cd v = f(nd) * cd(0, 1) * c.radius * e;
            full += v;
            if (k % 2 == 0) half += v;
        }
        full *= 2.0 * kPi / n;
        half *= 4.0 * kPi / n;
        r.evaluations += n;
        double err = std::abs(full - half);
        if (err < best_err) {
            best_err = err;
            best = full;
        }
        if (err <= spec.rel_tol * std::max(std::abs(full), 1e-300) || err == 0.0) {
            r.value = full;
            r.err_estimate = err;
            return r;
        }
        // spectral accuracy: once the half-rule is good the full rule is much better
        if (err <= 1e-7 * std::max(std::abs(full), 1e-300) && n >= 2 * spec.points) {
            r.value = full;
            r.err_estimate = err * err / std::max(std::abs(full), 1e-300);
            return r;
        }
    }
    throw NoConvergence("circle quadrature did not converge", std::abs(best));
}

} // namespace

ContourSpec circle(cd center, double radius, int points) {
    ContourSpec c{Circle{center, radius}};
    c.points = points;
    return c;
}
ContourSpec segment(cd from, cd to) { return ContourSpec{Segment{from, to}}; }
ContourSpec half_line(cd start, cd direction) { return ContourSpec{HalfLineDE{start, direction}}; }
ContourSpec hankel(std::vector<cd> enclosed, double approach_angle, double stem_length) {
    return ContourSpec{HankelLoop{std::move(enclosed), approach_angle, stem_length, 0.0}};
}

QuadResult integrate(const Integrand& f, const ContourSpec& spec, const std::function<void()>& restart) {
    return integrate_nodes([&f](const Node& n) { return f(n.s); }, spec, restart);
}

QuadResult integrate_nodes(const NodeIntegrand& f, const ContourSpec& spec, const std::function<void()>& restart) {
    if (auto* c = std::get_if<Circle>(&spec.variant)) return integrate_circle(f, *c, spec, restart);

    std::vector<Piece> pieces = pieces_of(spec);
    QuadResult r;
    cd prev = 0.0;
    double best_err = 1e300;
    cd best = 0.0;
    for (int level = 0; level <= spec.max_level; ++level) {
        double h = std::ldexp(1.0, -level);
        if (restart) restart();
        cd sum = 0.0;
        double abs_sum = 0.0;
        for (const auto& p : pieces) {
            int K = int(std::floor(p.T / h));
            for (int k = -K; k <= K; ++k) {
                Node nd;
                cd ds;
                p.map(k * h, nd, ds);
                if (ds == cd(0)) continue;
                cd v = f(nd) * ds;
                ++r.evaluations;
                if (!finite(v)) continue;
                sum += v;
                abs_sum += std::abs(v);
            }
        }
        sum *= h;
        abs_sum *= h;
        if (level >= 2) {
            double err = std::abs(sum - prev);
            if (err < best_err) {
                best_err = err;
                best = sum;
            }
            double scale = std::max(std::abs(sum), 1e-6 * abs_sum);
            if (err <= spec.rel_tol * scale || err == 0.0) {
                r.value = sum;
                r.err_estimate = err;
                return r;
            }
        }
        prev = sum;
    }
    throw NoConvergence("double-exponential quadrature did not converge", std::abs(best));
}

std::vector<Endpoint> contour_endpoints(const ContourSpec& c, double far) {
    if (auto* sg = std::get_if<Segment>(&c.variant)) {
        cd d = (sg->to - sg->from) / std::abs(sg->to - sg->from);
        return {{sg->from, -1.0, d}, {sg->to, 1.0, -d}};
    }
    if (auto* hl = std::get_if<HalfLineDE>(&c.variant)) {
        cd d = hl->direction / std::abs(hl->direction);
        return {{hl->start, -1.0, d}, {hl->start + d * far, 1.0, -d}};
    }
    if (auto* hk = std::get_if<HankelLoop>(&c.variant)) {
        HankelGeom g = hankel_geom(*hk);
        double len = hk->stem_length > 0 ? hk->stem_length : far;
        cd lo = std::polar(1.0, -hk->approach_angle), up = std::polar(1.0, hk->approach_angle);
        return {{g.center + (g.radius + len) * lo, -1.0, -lo}, {g.center + (g.radius + len) * up, 1.0, -up}};
    }
    return {};
}

ContourSpec default_loop(const std::vector<cd>& points, const std::vector<cd>& avoid) {
    if (points.empty()) throw InvalidArgument("loop needs at least one point");
    cd c = 0.0;
    for (cd p : points) c += p;
    c /= double(points.size());
    double md = 0.0;
    for (cd p : points) md = std::max(md, std::abs(p - c));
    double r = md > 0 ? 1.5 * md : 0.5 * (1.0 + std::abs(c));
    for (cd a : avoid) {
        double d = std::abs(a - c);
        if (d <= md * (1.0 + 1e-12)) throw NotApplicable("avoided point lies inside the enclosed set");
        r = std::min(r, md + 0.5 * (d - md));
    }
    return circle(c, r);
}

cd ContinuousLog::from_diff(cd d) {
    double a = std::arg(d);
    if (!init_) {
        init_ = true;
        prev_ = a;
    } else {
        double k = std::round((prev_ - a) / (2.0 * kPi));
        prev_ = a + 2.0 * kPi * k;
    }
    return {std::log(std::abs(d)), prev_};
}

} // namespace hgc
