#include "wd/rational.hpp"

#include "wd/error.hpp"

#include <algorithm>

namespace wd {

Rational rat(long num, long den) {
    if (den == 0) throw ZeroScale("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{Integer(s)};
            return r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<long> rat_as_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
    return r.get_num().get_si();
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw ZeroScale("0 to a negative power");
        Rational inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rational acc(1), b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

static std::optional<Integer> integer_nth_root_exact(const Integer& a, unsigned n) {
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = integer_nth_root_exact(-a, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    Integer root;
    int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), n);
    if (!exact) return std::nullopt;
    return root;
}

std::optional<Rational> rational_sqrt(const Rational& r) { return rational_nth_root(r, 2); }

std::optional<Rational> rational_nth_root(const Rational& r, unsigned n) {
    if (n == 0) return std::nullopt;
    auto num = integer_nth_root_exact(r.get_num(), n);
    if (!num) return std::nullopt;
    auto den = integer_nth_root_exact(r.get_den(), n);
    if (!den) return std::nullopt;
    Rational out(*num, *den);
    out.canonicalize();
    return out;
}

namespace {

Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

/* Pollard-Brent rho; returns a nontrivial factor or 0 on failure */
Integer rho(const Integer& n, unsigned long seed) {
    if (n % 2 == 0) return Integer(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    Integer y = rng.get_z_range(n - 1) + 1;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            Integer lim = std::min(m, Integer(r - k));
            for (Integer i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs_int(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
        if (r > 1000000) return Integer(0);
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Integer d = abs_int(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return Integer(0);
    return g;
}

bool factor_rec(Integer n, std::vector<std::pair<Integer, unsigned>>& out, int depth) {
    if (n == 1) return true;
    if (depth > 64) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        for (auto& [p, e] : out)
            if (p == n) { ++e; return true; }
        out.emplace_back(n, 1);
        return true;
    }
    for (unsigned long s = 1; s <= 20; ++s) {
        Integer f = rho(n, s * 2654435761UL);
        if (f > 1 && f < n)
            return factor_rec(f, out, depth + 1) && factor_rec(n / f, out, depth + 1);
    }
    return false;
}

}

std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    n = abs_int(n);
    if (n == 0) return std::nullopt;
    for (Integer p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1 && !factor_rec(n, out, 0)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Integer>> divisors(const Integer& n, std::size_t cap) {
    auto fac = factor_integer(n);
    if (!fac) return std::nullopt;
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : *fac) {
        std::size_t base = out.size();
        if (base * (e + 1) > cap) return std::nullopt;
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}
