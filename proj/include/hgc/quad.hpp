#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "hgc/poly.hpp"

namespace hgc {

struct Circle {
    cd center;
    double radius;
};
struct Segment {
    cd from, to;
};
struct HalfLineDE {
    cd start, direction;
};
// ]-inf, p+, -inf[ around the enclosed points: a ray coming in at angle -approach_angle,
// a counterclockwise arc, a ray going out at +approach_angle (angles measured from +1
// about the centroid).  stem_length > 0 makes the rays finite.
struct HankelLoop {
    std::vector<cd> enclosed;
    double approach_angle = 0.75 * 3.14159265358979323846;
    double stem_length = 0.0;
    double cap_radius = 0.0;  // 0: automatic
};

struct ContourSpec {
    std::variant<Circle, Segment, HalfLineDE, HankelLoop> variant;
    int points = 512;      // circle nodes
    int max_level = 12;    // double-exponential levels, h = 2^-level
    double rel_tol = 1e-12;

    bool closed() const { return std::holds_alternative<Circle>(variant); }
};

ContourSpec circle(cd center, double radius, int points = 512);
ContourSpec segment(cd from, cd to);
ContourSpec half_line(cd start, cd direction);
ContourSpec hankel(std::vector<cd> enclosed, double approach_angle = 0.75 * 3.14159265358979323846,
                   double stem_length = 0.0);

struct QuadResult {
    cd value = 0.0;
    double err_estimate = 0.0;
    cd boundary_term = 0.0;
    // set by the representation layer when |boundary_term| exceeds 1e-10 |value|
    bool boundary_nonzero = false;
    int evaluations = 0;
};

using Integrand = std::function<cd(cd)>;

// A node with exact offsets from the finite ends of its piece, so factors
// like (s - start)^p stay accurate next to an endpoint singularity.
struct Node {
    cd s;
    cd start, from_start;  // s = start + from_start
    cd end, to_end;        // s = end - to_end
    bool has_start = false, has_end = false;

    // s - r, exact when r is a finite end of the piece
    cd minus(cd r) const {
        if (has_start && r == start) return from_start;
        if (has_end && r == end) return -to_end;
        return s - r;
    }
};
using NodeIntegrand = std::function<cd(const Node&)>;

// restart() is called before every pass over the contour; nodes of a pass are
// visited in path order, so stateful integrands can continue branches.
QuadResult integrate(const Integrand& f, const ContourSpec& c, const std::function<void()>& restart = {});
QuadResult integrate_nodes(const NodeIntegrand& f, const ContourSpec& c, const std::function<void()>& restart = {});

// Start and end of an open contour (far ends at `far` distance); empty for circles.
struct Endpoint {
    cd point;
    double sign;  // +1 at the end, -1 at the start
    cd inward;    // unit vector pointing into the contour
};
std::vector<Endpoint> contour_endpoints(const ContourSpec& c, double far = 1e15);

// Loop around `points` avoiding `avoid`: centroid circle with radius 1.5x the
// max distance, capped at half the distance to the nearest avoided point.
ContourSpec default_loop(const std::vector<cd>& points, const std::vector<cd>& avoid = {});

// log(s - a) continued along a path: the argument is unwrapped against the previous call.
class ContinuousLog {
public:
    explicit ContinuousLog(cd a = 0.0) : a_(a) {}
    void reset() { init_ = false; }
    cd operator()(cd s) { return from_diff(s - a_); }
    cd from_diff(cd d);

private:
    cd a_;
    bool init_ = false;
    double prev_ = 0.0;
};

} // namespace hgc
