#include "factcert/arith.hpp"

#include <stdexcept>

namespace factcert {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool passes_trial_division(const Int& p, unsigned long limit) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p && d <= limit; d = (d == 2) ? 3 : d + 2) {
        if (p % d == 0 && d < p) return false;
    }
    return true;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int Rng::below(const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    for (;;) {
        Int v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            v <<= 64;
            v += static_cast<unsigned long>(next_u64());
        }
        // Keep only `bits` low bits so the rejection rate stays below 1/2.
        v &= (Int(1) << bits) - 1;
        if (v < bound) return v;
    }
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::range: empty interval");
    const Int width = Int(hi) - Int(lo) + 1;
    Int off = below(width);
    return lo + off.get_si();
}

}  // namespace factcert
