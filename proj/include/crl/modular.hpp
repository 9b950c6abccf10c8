#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace crl {

// Fixed primes baked into the build for reproducibility. primes62 feed the
// CRT reconstruction; prime31 is the fast first-pass filter (word-sized
// modular arithmetic with no wide division in the hot loop).
extern const std::vector<std::uint64_t> kPrimes62;
constexpr std::uint64_t kPrime31 = 2147483629ull;  // largest prime < 2^31

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

inline std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

// Dense polynomial over Z/p, coefficient of x^i at index i, trimmed.
using PolyMod = std::vector<std::uint64_t>;

PolyMod trim_mod(PolyMod f);
PolyMod reduce_signs_mod(const std::vector<int>& signs, std::uint64_t p);
PolyMod reduce_mpz_mod(const std::vector<mpz_class>& coeffs, std::uint64_t p);
PolyMod mul_mod(const PolyMod& f, const PolyMod& g, std::uint64_t p);
// in-place remainder of f by g (g nonzero)
void rem_mod(PolyMod& f, const PolyMod& g, std::uint64_t p);
PolyMod monic_gcd_mod(PolyMod f, PolyMod g, std::uint64_t p);

// Res(f, g) mod p via the Euclidean remainder sequence.
std::uint64_t resultant_mod(PolyMod f, PolyMod g, std::uint64_t p);

// Incremental CRT: x = value mod (modulus), extend with (r mod p).
void crt_combine(mpz_class& value, mpz_class& modulus, std::uint64_t r,
                 std::uint64_t p);
// Map x in [0, m) to the symmetric range (-m/2, m/2].
mpz_class symmetric_rep(const mpz_class& x, const mpz_class& m);

}  // namespace crl
