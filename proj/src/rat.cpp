#include "fanok3/rat.hpp"

namespace fanok3 {

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    Rat q;
    if (slash == std::string::npos) {
        q = Rat(Int(s));
    } else {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
        q = Rat(num, den);
    }
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat mod2(const Rat& q) {
    Int den = q.get_den();
    Int num = q.get_num();
    Int two_den = 2 * den;
    Int m = num % two_den;
    if (m < 0) m += two_den;
    Rat r(m, den);
    r.canonicalize();
    return r;
}

Rat mod1(const Rat& q) {
    Int den = q.get_den();
    Int num = q.get_num();
    Int m = num % den;
    if (m < 0) m += den;
    Rat r(m, den);
    r.canonicalize();
    return r;
}

std::optional<Int> int_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    return std::nullopt;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = int_sqrt(q.get_num());
    if (!n) return std::nullopt;
    auto d = int_sqrt(q.get_den());
    if (!d) return std::nullopt;
    Rat r(*n, *d);
    r.canonicalize();
    return r;
}

}  // namespace fanok3
