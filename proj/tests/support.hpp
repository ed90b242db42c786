#ifndef WALLCROSS_TESTS_SUPPORT_HPP
#define WALLCROSS_TESTS_SUPPORT_HPP

#include "wallcross/jacobian_model.hpp"

#include <random>
#include <vector>

namespace wallcross::testing {

inline PairingInput blocks_input(int q, std::vector<long> blocks, PairingValues p = {})
{
    PairingInput in;
    in.q = q;
    if (!blocks.empty() || q > 0)
        in.a_blocks = std::move(blocks);
    in.pairings = p;
    return in;
}

inline JacobianModel block_model(int q, std::vector<long> blocks, PairingValues p = {})
{
    return JacobianModel(blocks_input(q, std::move(blocks), p));
}

inline GradedElement mono(const JacobianModel& m, Monomial x, const Rational& c = 1)
{
    return GradedElement::monomial(m.ptr(), x, c);
}

inline GradedElement jodd(const JacobianModel& m, int i) { return mono(m, Monomial::j_odd(i)); }
inline GradedElement sodd(const JacobianModel& m, int i) { return mono(m, Monomial::s_odd(i)); }

inline PairingValues random_pairings(std::mt19937& rng, int range = 3)
{
    std::uniform_int_distribution<int> u(-range, range);
    PairingValues p;
    p.zeta2 = u(rng);
    p.zetaK = u(rng);
    p.zetaAlpha = u(rng);
    p.sigmaZeta = u(rng);
    p.sigmaAlpha = u(rng);
    p.sigmaK = u(rng);
    p.K2 = u(rng);
    p.Kalpha = u(rng);
    p.alpha2 = u(rng);
    return p;
}

// Degree-2 building blocks: the four symbols, b_i^# b_j^#, and b_i^# b_j.
inline std::vector<GradedElement> degree_two_generators(const JacobianModel& m)
{
    std::vector<GradedElement> out = {m.sigma(), m.zeta(), m.K(), m.alpha()};
    const int n = 2 * m.q();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j)
                out.push_back(jodd(m, i) * jodd(m, j));
            out.push_back(jodd(m, i) * sodd(m, j));
        }
    return out;
}

// A random even element with no constant term, built from products of degree-2 pieces.
inline GradedElement random_nilpotent_even(const JacobianModel& m, std::mt19937& rng, int max_factors = 3)
{
    const auto gens = degree_two_generators(m);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    GradedElement out = GradedElement::zero(m.ptr());
    for (int k = 1; k <= max_factors; ++k)
        for (int t = 0; t < 3; ++t) {
            GradedElement term = m.scalar(coef(rng));
            for (int f = 0; f < k; ++f)
                term = term * gens[pick(rng)];
            out += term;
        }
    return out;
}

// Pure degree-2n element, a product of n degree-2 generators plus a second such term.
inline GradedElement random_homogeneous(const JacobianModel& m, std::mt19937& rng, int n)
{
    const auto gens = degree_two_generators(m);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    GradedElement out = GradedElement::zero(m.ptr());
    for (int t = 0; t < 2; ++t) {
        GradedElement term = m.scalar(coef(rng));
        for (int f = 0; f < n; ++f)
            term = term * gens[pick(rng)];
        out += term;
    }
    return out;
}

} // namespace wallcross::testing

#endif
