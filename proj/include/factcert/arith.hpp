#ifndef FACTCERT_ARITH_HPP
#define FACTCERT_ARITH_HPP

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace factcert {

using Int = mpz_class;
using Rat = mpq_class;

// base^e, e >= 0.
Int int_pow(const Int& base, unsigned long e);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// Deterministic trial division up to `limit`. Returns false only when a
// divisor <= limit is found; true means "no small factor", not a primality
// proof. Primality of moduli is otherwise trusted input.
bool passes_trial_division(const Int& p, unsigned long limit = 10000);

// Smallest prime > n.
Int next_prime(const Int& n);

// Seeded RNG with a platform-stable sequence (mt19937_64 is pinned by the
// standard; no std distributions, whose outputs are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), bound >= 1, by rejection sampling.
    Int below(const Int& bound);

    // Uniform in [lo, hi].
    long range(long lo, long hi);

private:
    std::mt19937_64 eng_;
};

}  // namespace factcert

#endif
