#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wd {

using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);

/* accepts "a" and "a/b", arbitrary precision */
Rational rat_from_string(const std::string& s);

/* "a" when the denominator is 1, else "a/b", always reduced */
std::string rat_to_string(const Rational& r);

bool is_integer(const Rational& r);
std::optional<long> rat_as_long(const Rational& r);

Rational rat_pow(const Rational& base, long e);

std::optional<Rational> rational_sqrt(const Rational& r);
std::optional<Rational> rational_nth_root(const Rational& r, unsigned n);

/* prime factorisation of |n| as (p, multiplicity) pairs; nullopt when a
   cofactor survives the trial-division and rho budgets */
std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(Integer n);

/* all positive divisors, nullopt when there would be more than cap */
std::optional<std::vector<Integer>> divisors(const Integer& n, std::size_t cap);

}
