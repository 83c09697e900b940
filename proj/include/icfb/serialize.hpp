#pragma once

#include <string>

#include <json.hpp>

#include "icfb/gauss_regions.hpp"
#include "icfb/ld_sim.hpp"
#include "icfb/polytope2.hpp"

namespace icfb {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal, locale independent.
std::string fmt_double(double v);

// Writes via a temp file in the same directory plus rename.
void atomic_write(const std::string& path, const std::string& content);

Json polytope_to_json(const Polytope2& p);
Polytope2 polytope_from_json(const Json& j);

Json trace_to_json(const LdParams& p, const SchemePreset& preset, int blocks, const SimTrace& t);

std::string frontier_to_csv(const Frontier& f);
Json frontier_meta_to_json(const GaussParams& p, double eta, const Frontier& f);

}  // namespace icfb
