#include "icfb/halfspace.hpp"

#include <algorithm>
#include <map>

#include "icfb/errors.hpp"

namespace icfb {

void HalfSpaceSystem::add_row(std::vector<Rat> coeffs, Rat bound) {
    if (static_cast<int>(coeffs.size()) != dim())
        throw DimensionMismatch("row has " + std::to_string(coeffs.size()) + " coefficients, system dim is " +
                                std::to_string(dim()));
    rows.push_back(Row{std::move(coeffs), std::move(bound)});
}

void HalfSpaceSystem::add_sparse(std::initializer_list<std::pair<int, Rat>> coeffs, Rat bound) {
    std::vector<Rat> a(vars.size(), Rat(0));
    for (const auto& [i, c] : coeffs) a.at(i) = c;
    rows.push_back(Row{std::move(a), std::move(bound)});
}

void HalfSpaceSystem::add_lower_bound(int var, Rat bound) { add_sparse({{var, Rat(-1)}}, -bound); }

void HalfSpaceSystem::add_upper_bound(int var, Rat bound) { add_sparse({{var, Rat(1)}}, std::move(bound)); }

Rat HalfSpaceSystem::eval_row(std::size_t row, const std::vector<Rat>& x) const {
    const Row& r = rows[row];
    Rat acc(0);
    for (std::size_t i = 0; i < r.a.size(); ++i) acc += r.a[i] * x[i];
    return acc;
}

bool HalfSpaceSystem::satisfied(const std::vector<Rat>& x, const Rat& tol) const {
    if (static_cast<int>(x.size()) != dim()) throw DimensionMismatch("point dim mismatch");
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (eval_row(r, x) > rows[r].b + tol) return false;
    return true;
}

HalfSpaceSystem HalfSpaceSystem::with_var_order(const std::vector<std::string>& names) const {
    if (names.size() != vars.size()) throw DimensionMismatch("variable rename count mismatch");
    std::vector<int> perm;
    for (const auto& n : names) {
        auto it = std::find(vars.begin(), vars.end(), n);
        if (it == vars.end()) throw DimensionMismatch("unknown variable '" + n + "'");
        perm.push_back(static_cast<int>(it - vars.begin()));
    }
    HalfSpaceSystem out;
    out.vars = names;
    for (const Row& r : rows) {
        std::vector<Rat> a(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) a[i] = r.a[perm[i]];
        out.rows.push_back(Row{std::move(a), r.b});
    }
    return out;
}

HalfSpaceSystem intersect(const HalfSpaceSystem& a, const HalfSpaceSystem& b) {
    if (a.dim() != b.dim() || a.vars != b.vars)
        throw DimensionMismatch("intersect: systems disagree on variables");
    HalfSpaceSystem out = a;
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    return out;
}

Row normalize_row(Row r) {
    BigInt lcm(1);
    for (const Rat& c : r.a) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    lcm = boost::multiprecision::lcm(lcm, denominator(r.b));
    BigInt g(0);
    auto scaled = [&](const Rat& c) { return BigInt(numerator(c) * (lcm / denominator(c))); };
    for (const Rat& c : r.a) g = boost::multiprecision::gcd(g, scaled(c));
    g = boost::multiprecision::gcd(g, scaled(r.b));
    if (g == 0) g = 1;
    for (Rat& c : r.a) c = Rat(scaled(c) / g);
    r.b = Rat(scaled(r.b) / g);
    return r;
}

HalfSpaceSystem fm_eliminate(const HalfSpaceSystem& s, int var_index) {
    if (var_index < 0 || var_index >= s.dim()) throw DimensionMismatch("fm_eliminate: bad variable index");

    auto drop_col = [&](const std::vector<Rat>& a) {
        std::vector<Rat> out;
        out.reserve(a.size() - 1);
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (i != var_index) out.push_back(a[i]);
        return out;
    };

    std::vector<const Row*> pos, neg;
    std::vector<Row> kept;
    for (const Row& r : s.rows) {
        const Rat& c = r.a[var_index];
        if (c > 0) pos.push_back(&r);
        else if (c < 0) neg.push_back(&r);
        else kept.push_back(Row{drop_col(r.a), r.b});
    }
    for (const Row* p : pos) {
        for (const Row* n : neg) {
            const Rat alpha = p->a[var_index];   // > 0
            const Rat gamma = n->a[var_index];   // < 0
            Row combo;
            combo.a.reserve(s.dim() - 1);
            for (int i = 0; i < s.dim(); ++i) {
                if (i == var_index) continue;
                combo.a.push_back(-gamma * p->a[i] + alpha * n->a[i]);
            }
            combo.b = -gamma * p->b + alpha * n->b;
            kept.push_back(normalize_row(std::move(combo)));
        }
    }

    // Single-row dominance: identical normalized coefficients keep only the
    // tightest bound. Trivially true rows (0 <= b, b >= 0) are dropped; an
    // infeasible 0 <= b row with b < 0 is preserved once.
    HalfSpaceSystem out;
    for (int i = 0; i < s.dim(); ++i)
        if (i != var_index) out.vars.push_back(s.vars[i]);

    std::map<std::vector<std::string>, std::size_t> seen;  // normalized coeff key -> row index
    bool have_infeasible = false;
    for (Row& r : kept) {
        Row nr = normalize_row(std::move(r));
        const bool all_zero = std::all_of(nr.a.begin(), nr.a.end(), [](const Rat& c) { return c == 0; });
        if (all_zero) {
            if (nr.b >= 0) continue;
            if (have_infeasible) continue;
            have_infeasible = true;
            out.rows.push_back(std::move(nr));
            continue;
        }
        std::vector<std::string> key;
        key.reserve(nr.a.size());
        for (const Rat& c : nr.a) key.push_back(rat_str(c));
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), out.rows.size());
            out.rows.push_back(std::move(nr));
        } else if (nr.b < out.rows[it->second].b) {
            out.rows[it->second].b = nr.b;
        }
    }
    return out;
}

}  // namespace icfb
