#include <cstdint>
#include <random>

#include "doctest.h"
#include "slicesieve/gf2module.hpp"
#include "slicesieve/gf2poly.hpp"
#include "slicesieve/numeric.hpp"

using namespace slicesieve;

namespace {

// Carry-less multiply on raw masks, the reference for degrees < 32.
uint64_t clmul(uint32_t a, uint64_t b) {
    uint64_t r = 0;
    for (int i = 0; i < 32; ++i)
        if ((a >> i) & 1) r ^= b << i;
    return r;
}

uint64_t mask_of(const GF2Poly& p) {
    uint64_t m = 0;
    for (long i = 0; i <= p.degree(); ++i)
        if (p.get(i)) m |= uint64_t(1) << i;
    return m;
}

}  // namespace

TEST_CASE("product matches carry-less reference") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<uint32_t> bits(0, (1u << 20) - 1);
    for (int round = 0; round < 500; ++round) {
        uint32_t a = bits(rng), b = bits(rng);
        CHECK(mask_of(GF2Poly::from_mask(a) * GF2Poly::from_mask(b)) == clmul(a, b));
    }
    // A product crossing the word boundary.
    GF2Poly big = GF2Poly::all_ones(70);
    CHECK((big * GF2Poly::from_mask(3)) == GF2Poly::from_mask(1) + GF2Poly::t().shifted(70));
}

TEST_CASE("divmod invariant") {
    std::mt19937 rng(100);
    std::uniform_int_distribution<uint64_t> bits(1, (uint64_t(1) << 40) - 1);
    for (int round = 0; round < 500; ++round) {
        GF2Poly a = GF2Poly::from_mask(bits(rng));
        GF2Poly d = GF2Poly::from_mask(bits(rng));
        auto [q, r] = a.divmod(d);
        CHECK(q * d + r == a);
        CHECK(r.degree() < d.degree());
    }
    CHECK_THROWS_AS(GF2Poly::one().divmod(GF2Poly::zero()), std::invalid_argument);
}

TEST_CASE("gcd divides both and respects common factors") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<uint64_t> bits(1, (1u << 14) - 1);
    for (int round = 0; round < 300; ++round) {
        GF2Poly a = GF2Poly::from_mask(bits(rng));
        GF2Poly b = GF2Poly::from_mask(bits(rng));
        GF2Poly c = GF2Poly::from_mask(bits(rng));
        GF2Poly g = gf2_gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK(gf2_gcd(a * c, b * c) == g * c);  // gcds over F_2 are unique
    }
}

TEST_CASE("irreducible counts by degree match the necklace numbers") {
    const long expected[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
    for (long d = 1; d <= 10; ++d) {
        long count = 0;
        for (uint64_t m = uint64_t(1) << d; m < (uint64_t(2) << d); ++m)
            if (gf2_is_irreducible(GF2Poly::from_mask(m))) ++count;
        CHECK(count == expected[d]);
    }
    CHECK_FALSE(gf2_is_irreducible(GF2Poly::one()));
    CHECK_FALSE(gf2_is_irreducible(GF2Poly::zero()));
}

TEST_CASE("all-ones polynomial is irreducible exactly when 2 generates mod p") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L})
        CHECK(gf2_is_irreducible(GF2Poly::all_ones(p - 1)) == is_primitive_root(2, p));
    CHECK(is_primitive_root(2, 3));
    CHECK(is_primitive_root(2, 5));
    CHECK_FALSE(is_primitive_root(2, 7));
    CHECK(is_primitive_root(2, 11));
    CHECK(is_primitive_root(2, 13));
    CHECK_FALSE(is_primitive_root(2, 17));
}

TEST_CASE("module reduction: invariant factors, cyclicity, dimension") {
    GF2Poly q3 = GF2Poly::all_ones(2);

    // Two independent copies of the annihilator: V_p + V_p, not cyclic.
    auto two = gf2t_module_reduce({{q3, GF2Poly::zero()}, {GF2Poly::zero(), q3}}, 3);
    CHECK(two.invariant_factors == std::vector<GF2Poly>{q3, q3});
    CHECK_FALSE(two.cyclic);
    CHECK(two.f2_dimension == 4);
    CHECK_FALSE(two.iso_to_vp);

    auto one = gf2t_module_reduce({{GF2Poly::one(), GF2Poly::zero()}, {GF2Poly::zero(), q3}}, 3);
    CHECK(one.invariant_factors == std::vector<GF2Poly>{q3});
    CHECK(one.cyclic);
    CHECK(one.f2_dimension == 2);
    CHECK(one.iso_to_vp);

    // diag(t, t+1) is cyclic with a single factor t(t+1).
    GF2Poly t = GF2Poly::t(), t1 = GF2Poly::from_mask(3);
    auto chinese = gf2t_module_reduce({{t, GF2Poly::zero()}, {GF2Poly::zero(), t1}}, 3);
    CHECK(chinese.invariant_factors == std::vector<GF2Poly>{t * t1});
    CHECK(chinese.cyclic);
    CHECK(chinese.f2_dimension == 2);
    CHECK_FALSE(chinese.iso_to_vp);

    // The chain condition d1 | d2 on a non-diagonal presentation.
    auto mixed = gf2t_module_reduce({{t * t, t}, {GF2Poly::zero(), t * t}, {t, GF2Poly::one()}}, 3);
    for (size_t i = 0; i + 1 < mixed.invariant_factors.size(); ++i)
        CHECK((mixed.invariant_factors[i + 1] % mixed.invariant_factors[i]).is_zero());

    CHECK_THROWS_AS(gf2t_module_reduce({{t, GF2Poly::zero()}}, 3), std::logic_error);

    auto trivial = gf2t_module_reduce({{GF2Poly::one()}}, 3);
    CHECK(trivial.invariant_factors.empty());
    CHECK(trivial.cyclic);
    CHECK(trivial.f2_dimension == 0);
}

TEST_CASE("cyclotomic irreducibility via the order of 2 matches brute force") {
    for (long p = 3; p < 50; ++p) {
        if (!is_prime(p)) continue;
        CHECK(gf2_is_irreducible_cyclotomic(p) ==
              gf2_is_irreducible(GF2Poly::all_ones(p - 1)));
    }
    CHECK_THROWS_AS(gf2_is_irreducible_cyclotomic(9), std::invalid_argument);
    CHECK_THROWS_AS(gf2_is_irreducible_cyclotomic(2), std::invalid_argument);
}

TEST_CASE("modular inverse over F_2[t]") {
    for (long p : {3L, 5L, 7L, 11L}) {
        GF2Poly q = GF2Poly::all_ones(p - 1);
        for (uint64_t mask = 2; mask < 64; ++mask) {
            GF2Poly a = GF2Poly::from_mask(mask);
            if (!gf2_gcd(a, q).is_one()) continue;
            GF2Poly inv = gf2_mod_inverse(a, q);
            CHECK((a * inv % q).is_one());
            CHECK(inv.degree() < q.degree());
        }
    }
    GF2Poly one_plus_t = GF2Poly::one() + GF2Poly::t();
    CHECK_THROWS_AS(gf2_mod_inverse(one_plus_t, one_plus_t * one_plus_t),
                    std::invalid_argument);
}
