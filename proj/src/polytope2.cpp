#include "icfb/polytope2.hpp"

#include <algorithm>

#include "icfb/errors.hpp"

namespace icfb {

struct Polytope2::Cache {
    std::once_flag once;
    std::vector<RatePair> verts;
    std::exception_ptr error;
};

Polytope2::Polytope2() : cache_(std::make_shared<Cache>()) {
    sys_.vars = {"R1", "R2"};
}

Polytope2::Polytope2(HalfSpaceSystem sys) : sys_(std::move(sys)), cache_(std::make_shared<Cache>()) {
    if (sys_.dim() != 2) throw DimensionMismatch("Polytope2 requires a 2-D system");
}

namespace {

std::vector<RatePair> enumerate_vertices(const HalfSpaceSystem& sys) {
    // Bounded iff +-R1 and +-R2 are all bounded above; decided exactly by LP.
    const std::vector<std::vector<Rat>> dirs = {
        {Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
    bool feasible = true;
    for (const auto& d : dirs) {
        LpResult r = lp_maximize(sys, d);
        if (r.status == LpStatus::Infeasible) { feasible = false; break; }
        if (r.status == LpStatus::Unbounded) throw UnboundedRegion("vertex enumeration on unbounded region");
    }
    if (!feasible) return {};

    std::vector<RatePair> pts;
    const auto& rows = sys.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Rat det = rows[i].a[0] * rows[j].a[1] - rows[i].a[1] * rows[j].a[0];
            if (det == 0) continue;
            RatePair p{(rows[i].b * rows[j].a[1] - rows[i].a[1] * rows[j].b) / det,
                       (rows[i].a[0] * rows[j].b - rows[i].b * rows[j].a[0]) / det};
            if (sys.satisfied({p.r1, p.r2})) pts.push_back(std::move(p));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;  // point or segment, already ordered

    // Counterclockwise around the centroid, rotated to start at the
    // lexicographic minimum (which sort left at index 0).
    Rat cx(0), cy(0);
    for (const auto& p : pts) { cx += p.r1; cy += p.r2; }
    cx /= static_cast<int>(pts.size());
    cy /= static_cast<int>(pts.size());
    auto half = [&](const RatePair& p) {
        const Rat dx = p.r1 - cx, dy = p.r2 - cy;
        return (dy < 0 || (dy == 0 && dx > 0)) ? 0 : 1;  // start below the centroid
    };
    auto ccw_less = [&](const RatePair& a, const RatePair& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rat cross = (a.r1 - cx) * (b.r2 - cy) - (a.r2 - cy) * (b.r1 - cx);
        return cross > 0;
    };
    std::sort(pts.begin(), pts.end(), ccw_less);
    auto start = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), start, pts.end());
    return pts;
}

}  // namespace

const std::vector<RatePair>& Polytope2::vertices() const {
    std::call_once(cache_->once, [this] {
        try {
            cache_->verts = enumerate_vertices(sys_);
        } catch (...) {
            cache_->error = std::current_exception();
        }
    });
    if (cache_->error) std::rethrow_exception(cache_->error);
    return cache_->verts;
}

std::vector<RatePair> vertices2(const Polytope2& p) { return p.vertices(); }

bool contains_point(const Polytope2& p, const RatePair& x, const Rat& tol) {
    return p.system().satisfied({x.r1, x.r2}, tol);
}

bool is_subset(const Polytope2& inner, const Polytope2& outer, const Rat& tol) {
    for (const RatePair& v : inner.vertices())
        if (!contains_point(outer, v, tol)) return false;
    return true;
}

SumRateFace sum_rate_face(const Polytope2& p) {
    const auto& vs = p.vertices();
    if (vs.empty()) throw EmptyRegion("sum_rate_face on empty region");
    Rat best = vs[0].r1 + vs[0].r2;
    for (const auto& v : vs) best = std::max(best, Rat(v.r1 + v.r2));
    std::vector<RatePair> face;
    for (const auto& v : vs)
        if (v.r1 + v.r2 == best) face.push_back(v);
    std::sort(face.begin(), face.end());
    return SumRateFace{best, face.front(), face.back()};
}

}  // namespace icfb
