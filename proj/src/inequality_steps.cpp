#include "seshadri/inequality_steps.hpp"

#include <algorithm>

namespace seshadri {

IntPoly2::IntPoly2(std::initializer_list<std::pair<Key, Int>> terms) {
    for (const auto& [key, coeff] : terms) set(key.first, key.second, coeff);
}

void IntPoly2::set(unsigned xe, unsigned ye, Int coeff) {
    if (coeff == 0)
        terms_.erase({xe, ye});
    else
        terms_[{xe, ye}] = std::move(coeff);
}

Int IntPoly2::eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (const auto& [key, coeff] : terms_) {
        Int t = coeff;
        for (unsigned i = 0; i < key.first; ++i) t *= x;
        for (unsigned i = 0; i < key.second; ++i) t *= y;
        acc += t;
    }
    return acc;
}

std::string IntPoly2::text(const std::string& xvar, const std::string& yvar) const {
    if (terms_.empty()) return "0";

    auto mono = [&](const Key& key, const Int& coeff) {
        std::string out;
        Int c = abs(coeff);
        bool unit = (c == 1) && (key.first + key.second > 0);
        if (!unit) out += c.get_str();
        auto var = [&](const std::string& v, unsigned e) {
            if (e == 0) return;
            if (!out.empty()) out += "*";
            out += v;
            if (e > 1) out += "^" + std::to_string(e);
        };
        var(xvar, key.first);
        var(yvar, key.second);
        return out;
    };

    // Highest total degree first, ties broken by x exponent.
    std::vector<std::pair<Key, Int>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        unsigned da = a.first.first + a.first.second;
        unsigned db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });

    std::string out;
    for (const auto& [key, coeff] : ordered) {
        if (out.empty())
            out += (coeff < 0 ? "-" : "");
        else
            out += (coeff < 0 ? " - " : " + ");
        out += mono(key, coeff);
    }
    return out;
}

std::string relation_str(Relation r) {
    return r == Relation::le ? "<=" : "<";
}

bool InequalityStep::holds_at(const Int& x, const Int& y) const {
    Int l = lhs.eval(x, y);
    Int r = rhs.eval(x, y);
    return rel == Relation::le ? l <= r : l < r;
}

}  // namespace seshadri
