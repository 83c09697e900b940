#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "icfb/halfspace.hpp"
#include "icfb/rational.hpp"
#include "icfb/simplex.hpp"

namespace icfb {

struct RatePair {
    Rat r1, r2;
    bool operator==(const RatePair& o) const { return r1 == o.r1 && r2 == o.r2; }
    bool operator<(const RatePair& o) const { return r1 != o.r1 ? r1 < o.r1 : r2 < o.r2; }
};

// Two-dimensional specialization over the rate variables (R1, R2) with a
// lazily computed vertex cache. Copies share the cache; all observable state
// is immutable after construction.
class Polytope2 {
  public:
    Polytope2();
    explicit Polytope2(HalfSpaceSystem sys);

    const HalfSpaceSystem& system() const { return sys_; }

    // Extreme points, counterclockwise starting at the lexicographic minimum.
    // Exact; empty region yields an empty list; throws UnboundedRegion.
    const std::vector<RatePair>& vertices() const;

    bool empty() const { return vertices().empty(); }

  private:
    HalfSpaceSystem sys_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

std::vector<RatePair> vertices2(const Polytope2& p);

// coeffs . x <= bound + tol on every row; tol = 0 gives the exact test.
bool contains_point(const Polytope2& p, const RatePair& x, const Rat& tol = Rat(0));

// Every vertex of inner lies in outer (within tol); empty inner is a subset
// of anything. Throws UnboundedRegion if inner is unbounded.
bool is_subset(const Polytope2& inner, const Polytope2& outer, const Rat& tol = Rat(0));

struct SumRateFace {
    Rat max_sum;
    RatePair lo, hi;  // segment endpoints ordered by R1; lo == hi when degenerate
};

// Maximum of R1 + R2 and the face attaining it. Throws EmptyRegion.
SumRateFace sum_rate_face(const Polytope2& p);

}  // namespace icfb
