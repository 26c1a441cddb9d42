#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace capform {

// Exact arithmetic scalars. Rat is always stored reduced with positive
// denominator (mpq canonical form); serialization is "p/q", "/q" omitted
// when the denominator is 1.
using Int = mpz_class;
using Rat = mpq_class;

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);
std::string int_str(const Int& n);
std::string rat_str(const Rat& r);

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

Int floor_div(const Int& a, const Int& b); // b != 0, floor semantics
Rat floor_rat(const Rat& r);               // floor as exact integer Rat
Rat mod1(const Rat& r);                    // representative in [0,1)
long to_long(const Int& n);                // range-checked

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// largest e with p^e | n  (n != 0)
long valuation(const Int& n, long p);

// distinct prime divisors of n > 0, ascending (trial division; desk scale)
std::vector<long> prime_factors(long n);
bool is_prime(long n);

// positive divisors of n > 0, ascending
std::vector<long> divisors(long n);

// exact square root of a nonnegative rational if it exists
bool rat_sqrt(const Rat& r, Rat& root);

// Legendre symbol (a|p), p an odd prime
int legendre(const Int& a, long p);

} // namespace capform
