#include "fanok3/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fanok3 {

MultiPoly MultiPoly::term(const Rat& c, int a, int b, int cc) {
    MultiPoly p;
    if (c != 0) p.t_[{a, b, cc}] = c;
    return p;
}

void MultiPoly::add_term(const Exp& e, const Rat& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (c != 0) t_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, Rat(-c));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : t_) r.t_[e] = c * s;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r = constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

MultiPoly MultiPoly::cleared() const {
    if (t_.empty()) return MultiPoly();
    Exp mn = {0, 0, 0};
    for (const auto& [e, c] : t_)
        for (int i = 0; i < 3; ++i) mn[size_t(i)] = std::min(mn[size_t(i)], e[size_t(i)]);
    MultiPoly r;
    for (const auto& [e, c] : t_)
        r.t_[{e[0] - mn[0], e[1] - mn[1], e[2] - mn[2]}] = c;
    return r;
}

std::string MultiPoly::str(const std::array<std::string, 3>& vars) const {
    if (t_.empty()) return "0";
    // graded order, highest total degree first for readability
    std::vector<std::pair<Exp, Rat>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first[0] + a.first[1] + a.first[2];
        int db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        Rat a = c;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (a < 0) a = -a;
        bool unit = (a == 1);
        bool any_var = e[0] != 0 || e[1] != 0 || e[2] != 0;
        if (!unit || !any_var) os << rat_str(a);
        bool started = !unit || !any_var;
        for (int i = 0; i < 3; ++i) {
            if (e[size_t(i)] == 0) continue;
            if (started) os << "*";
            started = true;
            os << vars[size_t(i)];
            if (e[size_t(i)] != 1) os << "^" << e[size_t(i)];
        }
    }
    return os.str();
}

}  // namespace fanok3
