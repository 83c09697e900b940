#include "icfb/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace icfb {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename to " + path + " failed");
    }
}

Json polytope_to_json(const Polytope2& p) {
    Json j;
    j["vars"] = p.system().vars;
    Json rows = Json::array();
    for (const Row& r : p.system().rows) {
        Json row;
        Json coeffs = Json::array();
        for (const Rat& c : r.a) coeffs.push_back(rat_str(c));
        row["a"] = coeffs;
        row["b"] = rat_str(r.b);
        rows.push_back(row);
    }
    j["rows"] = rows;
    Json verts = Json::array();
    for (const RatePair& v : p.vertices()) verts.push_back(Json::array({rat_str(v.r1), rat_str(v.r2)}));
    j["vertices"] = verts;
    return j;
}

Polytope2 polytope_from_json(const Json& j) {
    HalfSpaceSystem s;
    for (const auto& v : j.at("vars")) s.vars.push_back(v.get<std::string>());
    for (const auto& row : j.at("rows")) {
        std::vector<Rat> a;
        for (const auto& c : row.at("a")) a.push_back(rat_parse(c.get<std::string>()));
        s.add_row(std::move(a), rat_parse(row.at("b").get<std::string>()));
    }
    return Polytope2(std::move(s));
}

namespace {

std::string word_str(const BinWord& w) {
    std::string s;
    s.reserve(static_cast<std::size_t>(w.size()));
    for (int i = 0; i < w.size(); ++i) s.push_back(w.get(i) ? '1' : '0');
    return s;
}

Json bits_json(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return Json(s);
}

}  // namespace

Json trace_to_json(const LdParams& p, const SchemePreset& preset, int blocks, const SimTrace& t) {
    Json j;
    j["preset"] = preset.name();
    j["params"] = {{"n11", p.n11}, {"n22", p.n22}, {"n12", p.n12}, {"n21", p.n21}, {"q", p.q()}};
    j["block_len"] = {preset.block_len1, preset.block_len2};
    j["blocks"] = blocks;
    j["seed"] = preset.seed;
    j["channel_uses"] = t.channel_uses;
    for (int u = 0; u < 2; ++u) {
        Json ju;
        ju["new_bits"] = t.new_bits[static_cast<std::size_t>(u)];
        ju["omega_bits"] = t.omega_bits[static_cast<std::size_t>(u)];
        ju["retransmit_bits"] = t.retransmit_bits[static_cast<std::size_t>(u)];
        ju["sent"] = bits_json(t.sent[static_cast<std::size_t>(u)]);
        ju["decoded"] = bits_json(t.decoded[static_cast<std::size_t>(u)]);
        ju["omega"] = bits_json(t.omega[static_cast<std::size_t>(u)]);
        ju["rate"] = rat_str(u == 0 ? t.rate1 : t.rate2);
        j[u == 0 ? "user1" : "user2"] = ju;
    }
    j["bit_errors"] = t.bit_errors;
    Json uses = Json::array();
    for (std::size_t k = 0; k < t.x1.size(); ++k) {
        uses.push_back(Json{{"x1", word_str(t.x1[k])},
                            {"x2", word_str(t.x2[k])},
                            {"y1", word_str(t.y1[k])},
                            {"y2", word_str(t.y2[k])}});
    }
    j["uses"] = uses;
    return j;
}

std::string frontier_to_csv(const Frontier& f) {
    std::string out = "r1,r2\n";
    for (const FrontierPoint& pt : f.pts) out += fmt_double(pt.r1) + "," + fmt_double(pt.r2) + "\n";
    return out;
}

Json frontier_meta_to_json(const GaussParams& p, double eta, const Frontier& f) {
    Json j;
    j["builder"] = f.builder;
    j["snr1"] = p.snr1;
    j["snr2"] = p.snr2;
    j["inr12"] = p.inr12;
    j["inr21"] = p.inr21;
    j["eta"] = eta;
    j["rho_grid"] = f.rho_grid;
    j["r1_grid"] = f.r1_grid;
    j["box_lo"] = {f.box_lo1, f.box_lo2};
    j["points"] = f.pts.size();
    j["empty"] = f.empty_region;
    return j;
}

}  // namespace icfb
