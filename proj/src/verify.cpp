#include "wallcross/verify.hpp"

#include "wallcross/closed_forms.hpp"
#include "wallcross/oracle_general.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace wallcross {

namespace {

// Collects the first counterexample and a running count.
class Checker {
public:
    explicit Checker(PropertyResult& result) : result_(result) {}

    template <class Describe>
    void expect(bool ok, Describe&& describe)
    {
        ++result_.checked;
        if (ok || !result_.passed)
            return;
        result_.passed = false;
        result_.counterexample = describe();
    }

    bool failed() const { return !result_.passed; }

private:
    PropertyResult& result_;
};

std::string describe_wall(const WallGeometry& w)
{
    std::ostringstream out;
    out << "p1=" << w.p1 << " q=" << w.q << " zeta^2=" << w.zeta2 << " zeta.K=" << w.zetaK << " zeta.w=" << w.zetaW
        << " w^2=" << w.w2 << " w.K=" << w.wK << " (d=" << w.derived.d << ", l=" << w.derived.l_zeta << ")";
    return out.str();
}

std::string describe_pairings(const PairingValues& p)
{
    std::ostringstream out;
    out << "zeta.alpha=" << to_string(p.zetaAlpha) << " Sigma.alpha=" << to_string(p.sigmaAlpha)
        << " Sigma.zeta=" << to_string(p.sigmaZeta) << " Sigma.K=" << to_string(p.sigmaK) << " K^2=" << to_string(p.K2)
        << " K.alpha=" << to_string(p.Kalpha) << " alpha^2=" << to_string(p.alpha2);
    return out.str();
}

std::string describe_blocks(const std::optional<std::vector<long>>& blocks)
{
    std::ostringstream out;
    out << "blocks=(";
    if (blocks)
        for (std::size_t i = 0; i < blocks->size(); ++i)
            out << (i ? "," : "") << (*blocks)[i];
    out << ")";
    return out.str();
}

std::string describe_word(const InsertionWord& w)
{
    std::ostringstream out;
    out << "x^" << w.r << " alpha^" << w.s;
    for (int i : w.gammas)
        out << " delta_" << i + 1;
    for (int j : w.threes)
        out << " beta_" << j + 1;
    return out.str();
}

std::string mismatch(const Rational& a, const Rational& b)
{
    return to_string(a) + " vs " + to_string(b);
}

int eps_sign(const VerifyOptions& options) { return options.flip_epsilon ? -1 : 1; }

std::vector<std::vector<long>> block_choices(int q)
{
    switch (q) {
    case 0:
        return {{}};
    case 1:
        return {{1}, {2}};
    case 2:
        return {{1, 1}, {2, 3}};
    case 3:
        return {{1, 1, 1}, {1, 2, 3}};
    default:
        return {std::vector<long>(q, 1)};
    }
}

// Valid zeta.K values for (p1, q, zeta^2): same parity as zeta^2 and both ranks
// non-negative. Sub-sampled to the two extremes and the one nearest zero.
std::vector<long> zetaK_choices(long p1, int q, long zeta2, bool all = false)
{
    std::vector<long> valid;
    for (long k = -64; k <= 64; ++k) {
        if ((k - zeta2) % 2 != 0)
            continue;
        try {
            wall_params(p1, q, zeta2, k);
            valid.push_back(k);
        } catch (const InvalidWallError&) {
        }
    }
    if (all || valid.size() <= 3)
        return valid;
    long mid = valid.front();
    for (long k : valid)
        if (std::abs(k) < std::abs(mid))
            mid = k;
    std::vector<long> out{valid.front(), valid.back()};
    if (mid != valid.front() && mid != valid.back())
        out.push_back(mid);
    return out;
}

// w = zeta (epsilon = +1) and w = zeta - 2u with u^2 = -1, u.zeta = 0, u.K = 1 (epsilon = -1).
std::vector<WallGeometry> walls_with_w(long p1, int q, long zeta2, long zetaK)
{
    return {make_wall(p1, q, zeta2, zetaK, zeta2, zeta2, zetaK), make_wall(p1, q, zeta2, zetaK, zeta2, zeta2 - 4, zetaK - 2)};
}

PairingInput make_input(int q, const std::vector<long>& blocks, const PairingValues& p)
{
    PairingInput in;
    in.q = q;
    in.a_blocks = blocks;
    in.pairings = p;
    return in;
}

// l_zeta = 0 walls for q in range and 0 <= d <= d_max.
template <class Visit>
void for_each_l0_wall(const GridBounds& g, bool all_zetaK, Visit&& visit)
{
    for (int q = g.q_min; q <= g.q_max; ++q)
        for (long d = 0; d <= g.d_max; ++d) {
            const long zeta2 = -d - 3 + 3L * q;
            if (zeta2 >= 0)
                continue;
            for (long zetaK : zetaK_choices(zeta2, q, zeta2, all_zetaK))
                for (const auto& wall : walls_with_w(zeta2, q, zeta2, zetaK))
                    visit(wall);
        }
}

// ---------------------------------------------------------------------------
// 1

void check_oracle_l0(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    const int P = opt.l0.pair_range;
    for_each_l0_wall(opt.l0, false, [&](const WallGeometry& wall) {
        const long d = wall.derived.d;
        for (int r = 0; r <= opt.l0.r_max && 2 * r <= d; ++r)
            for (const auto& blocks : block_choices(wall.q))
                for (long za = -P; za <= P; ++za)
                    for (long sa = -P; sa <= P; ++sa)
                        for (long sz = -P; sz <= P; ++sz) {
                            if (check.failed())
                                return;
                            PairingValues p;
                            p.zeta2 = wall.zeta2;
                            p.zetaK = wall.zetaK;
                            p.zetaAlpha = za;
                            p.sigmaAlpha = sa;
                            p.sigmaZeta = sz;
                            // the empty-side formula is only consistent when e_{K-2zeta} = 0
                            p.sigmaK = wall.derived.empty_E_side ? 2 * sz : sa - sz + 1;
                            p.K2 = 8 - 8 * wall.q;
                            p.Kalpha = za + 1;
                            p.alpha2 = sa - 1;
                            const JacobianModel model(make_input(wall.q, blocks, p));
                            const InsertionWord word{r, static_cast<int>(d - 2 * r), {}, {}};
                            const Rational closed = delta_l0(wall, p, model.vol(), r).value * eps_sign(opt);
                            const Rational oracle = delta_oracle_l0(model, wall, word).value;
                            check.expect(closed == oracle, [&] {
                                return describe_wall(wall) + " r=" + std::to_string(r) + " " + describe_pairings(p) +
                                       " " + describe_blocks(blocks) + ": closed " + mismatch(closed, oracle) + " oracle";
                            });
                        }
    });
}

// ---------------------------------------------------------------------------
// 2

std::vector<WallGeometry> l1_walls(const VerifyOptions& opt)
{
    std::vector<WallGeometry> out;
    for (int q = opt.l1.q_min; q <= opt.l1.q_max; ++q)
        for (long zeta2 : {-4L, -8L}) {
            const long p1 = zeta2 - 4;
            const long d = -p1 - 3 + 3L * q;
            const bool extra = opt.l1_include_q2 && q == 2 && d == 11;
            if (d > opt.l1.d_max && !extra)
                continue;
            for (long zetaK : zetaK_choices(p1, q, zeta2))
                for (const auto& wall : walls_with_w(p1, q, zeta2, zetaK))
                    out.push_back(wall);
        }
    return out;
}

void check_oracle_l1(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    const int P = opt.l1.pair_range;
    for (const auto& wall : l1_walls(opt)) {
        const long d = wall.derived.d;
        const auto blocks_list = block_choices(wall.q);
        long counter = 0;
        for (int r = 0; r <= opt.l1.r_max && 2 * r <= d; ++r)
            for (long za = -P; za <= P; ++za)
                for (long sa = -P; sa <= P; ++sa)
                    for (long sz = -P; sz <= P; ++sz)
                        for (long alpha2 : {-1L, 2L})
                            for (long K2 : {0L, 8L}) {
                                if (check.failed())
                                    return;
                                PairingValues p;
                                p.zeta2 = wall.zeta2;
                                p.zetaK = wall.zetaK;
                                p.zetaAlpha = za;
                                p.sigmaAlpha = sa;
                                p.sigmaZeta = sz;
                                p.sigmaK = sa + sz - 1;
                                p.K2 = K2;
                                p.Kalpha = za - sz;
                                p.alpha2 = alpha2;
                                const auto& blocks = blocks_list[counter++ % blocks_list.size()];
                                const JacobianModel model(make_input(wall.q, blocks, p));
                                const Rational closed = delta_l1(wall, p, model.vol(), r).value * eps_sign(opt);
                                const Rational oracle = delta_oracle_l1(model, wall, r).value;
                                check.expect(closed == oracle, [&] {
                                    return describe_wall(wall) + " r=" + std::to_string(r) + " " + describe_pairings(p) +
                                           " " + describe_blocks(blocks) + ": closed " + mismatch(closed, oracle) +
                                           " oracle";
                                });
                            }
    }
}

// ---------------------------------------------------------------------------
// 3

std::vector<std::vector<int>> subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

void check_odd_classes(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    struct Pairs {
        long za, sa, sz;
    };
    const std::vector<Pairs> pairs = {{3, -2, 2}, {-1, 1, -1}, {2, 3, 1}};
    for (int q = 1; q <= 2; ++q) {
        std::vector<PairingInput> shapes;
        for (const auto& blocks : block_choices(q)) {
            PairingInput in;
            in.q = q;
            in.a_blocks = blocks;
            shapes.push_back(in);
        }
        if (q == 2) {
            PairingInput in;
            in.q = 2;
            in.a_matrix = std::vector<std::vector<long>>{{0, 2, 1, 0}, {-2, 0, 0, -1}, {-1, 0, 0, 3}, {0, 1, -3, 0}};
            shapes.push_back(in);
        }
        const auto sets = subsets(2 * q);
        for (long d = 0; d <= 6; ++d) {
            const long zeta2 = -d - 3 + 3L * q;
            if (zeta2 >= 0)
                continue;
            for (long zetaK : zetaK_choices(zeta2, q, zeta2))
                for (const auto& wall : walls_with_w(zeta2, q, zeta2, zetaK))
                    for (const auto& pr : pairs)
                        for (auto in : shapes) {
                            in.pairings.zeta2 = wall.zeta2;
                            in.pairings.zetaK = wall.zetaK;
                            in.pairings.zetaAlpha = pr.za;
                            in.pairings.sigmaAlpha = pr.sa;
                            in.pairings.sigmaZeta = pr.sz;
                            in.pairings.sigmaK = wall.derived.empty_E_side ? 2 * pr.sz : 1;
                            const JacobianModel model(in);
                            for (const auto& g : sets)
                                for (const auto& t : sets) {
                                    if (g.size() + t.size() > 4)
                                        continue;
                                    const long rest = 2 * d - 3 * static_cast<long>(g.size()) - static_cast<long>(t.size());
                                    if (rest < 0 || rest % 2 != 0)
                                        continue;
                                    for (int r = 0; 4 * r <= rest; ++r) {
                                        if (check.failed())
                                            return;
                                        const InsertionWord word{r, static_cast<int>((rest - 4 * r) / 2), g, t};
                                        const Rational closed = delta_l0_odd(wall, model, word).value * eps_sign(opt);
                                        const Rational oracle = delta_oracle_l0(model, wall, word).value;
                                        check.expect(closed == oracle, [&] {
                                            return describe_wall(wall) + " word " + describe_word(word) + " " +
                                                   describe_pairings(in.pairings) + ": closed " + mismatch(closed, oracle) +
                                                   " oracle";
                                        });
                                    }
                                }
                        }
        }
    }
}

// ---------------------------------------------------------------------------
// 4

GradedElement random_class(const ModelPtr& model, int degree, std::mt19937& rng)
{
    // surface parts: 1, b_k, e, b_k e, [S] of degrees 0..4
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<GradedElement::Term> terms;
    const int n = model->top_J();
    for (int s_deg = 0; s_deg <= 4; ++s_deg) {
        const int j_deg = degree - s_deg;
        if (j_deg < 0 || j_deg > n)
            continue;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            if (__builtin_popcount(mask) != j_deg)
                continue;
            std::vector<Monomial> s_parts;
            switch (s_deg) {
            case 0:
                s_parts.push_back(Monomial::one());
                break;
            case 1:
                for (int k = 0; k < n; ++k)
                    s_parts.push_back(Monomial::s_odd(k));
                break;
            case 2:
                for (int e = 0; e < model->symbol_count(); ++e)
                    s_parts.push_back(Monomial::s_even(e));
                break;
            case 3:
                for (int k = 0; k < n; ++k)
                    for (int e = kSigma + 1; e < model->symbol_count(); ++e) // b_k Sigma = 0
                        s_parts.push_back(Monomial::from_key(Monomial::s_odd(k).key() | Monomial::s_even(e).key()));
                break;
            default:
                s_parts.push_back(Monomial::s_top());
            }
            for (const auto& sp : s_parts) {
                const int c = coeff(rng);
                if (c != 0 && rng() % 3 == 0)
                    terms.emplace_back(Monomial::from_key(Monomial::jacobian(mask).key() | sp.key()), Rational(c));
            }
        }
    }
    return GradedElement::from_terms(model, std::move(terms));
}

ModelPtr random_model(int q, std::mt19937& rng)
{
    std::uniform_int_distribution<long> small(-3, 3);
    PairingInput in;
    in.q = q;
    std::vector<std::vector<long>> a(2 * q, std::vector<long>(2 * q, 0));
    for (int i = 0; i < 2 * q; ++i)
        for (int j = i + 1; j < 2 * q; ++j) {
            a[i][j] = small(rng);
            a[j][i] = -a[i][j];
        }
    in.a_matrix = a;
    PairingValues& p = in.pairings;
    p.zeta2 = small(rng);
    p.zetaK = small(rng);
    p.zetaAlpha = small(rng);
    p.sigmaZeta = small(rng);
    p.sigmaAlpha = small(rng);
    p.sigmaK = small(rng);
    p.K2 = small(rng);
    p.Kalpha = small(rng);
    p.alpha2 = small(rng);
    return build_model(in);
}

void check_segre(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    std::mt19937 rng(opt.seed);
    constexpr int kMaxN = 6;

    // random Chern data: Segre by determinant vs. series inversion, and c * s = 1
    for (int q = 0; q <= 2; ++q)
        for (int trial = 0; trial < 12; ++trial) {
            const ModelPtr model = random_model(q, rng);
            ChernData data;
            data.rank = static_cast<long>(rng() % 5);
            for (int i = 1; i <= max_class_index(*model); ++i)
                data.a.push_back(random_class(model, 2 * i, rng));
            const GradedElement c = total_chern(data, model);
            const GradedElement s_series = inverse_unit_series(c);
            std::vector<GradedElement> s, cs;
            for (int n = 0; n <= kMaxN; ++n) {
                s.push_back(segre_from_ch(data, n, model));
                cs.push_back(chern_from_ch(data, n, model));
            }
            for (int n = 0; n <= kMaxN; ++n) {
                check.expect(s[n] == s_series.component(2 * n), [&] {
                    return "q=" + std::to_string(q) + " trial " + std::to_string(trial) + ": s_" + std::to_string(n) +
                           " determinant disagrees with 1/c(E)";
                });
                if (n == 0)
                    continue;
                GradedElement sum = GradedElement::zero(model);
                for (int i = 0; i <= n; ++i)
                    sum += cs[i] * s[n - i];
                check.expect(sum.is_zero(), [&] {
                    return "q=" + std::to_string(q) + " trial " + std::to_string(trial) + ": sum c_i s_{" +
                           std::to_string(n) + "-i} = " + sum.to_string();
                });
            }
        }

    // l_zeta = 1 bundles: eq. for s_n, the I_n identities
    std::uniform_int_distribution<long> small(-2, 2);
    for (int q = 0; q <= 2; ++q)
        for (long zeta2 : {-1L, -2L, -4L})
            for (long zetaK : zetaK_choices(zeta2 - 4, q, zeta2)) {
                const WallGeometry wall = make_wall(zeta2 - 4, q, zeta2, zetaK, zeta2, zeta2, zetaK);
                PairingValues p;
                p.zeta2 = zeta2;
                p.zetaK = zetaK;
                p.zetaAlpha = small(rng);
                p.sigmaZeta = small(rng);
                p.sigmaAlpha = small(rng);
                p.sigmaK = small(rng);
                p.K2 = small(rng) * 4;
                p.Kalpha = small(rng);
                p.alpha2 = small(rng);
                std::vector<long> blocks;
                for (int i = 0; i < q; ++i)
                    blocks.push_back(1 + static_cast<long>(rng() % 3));
                const JacobianModel model(make_input(q, blocks, p));
                const ChernData b0 = segre_bundle(model, wall, 0);
                const ChernData b1 = segre_bundle(model, wall, 1);
                const GradedElement four_e = model.e_zeta() * Rational(4);
                const GradedElement K2 = model.K() * model.K();
                const std::string where = describe_wall(wall) + " " + describe_pairings(p);
                for (int n = 0; n <= kMaxN; ++n) {
                    const GradedElement sn = sn_closed(model, n);
                    const GradedElement det = segre_from_ch(b0, n, model.ptr()) + segre_from_ch(b1, n, model.ptr());
                    check.expect(sn == det, [&] { return where + ": s_" + std::to_string(n) + " closed form differs"; });
                    const GradedElement In = In_determinant(model, n);
                    GradedElement rhs = In * Rational(2);
                    if (n >= 2)
                        rhs += K2 * power(four_e, n - 2) * Rational(2 * binomial(n, 2));
                    check.expect(sn * Rational(factorial(n)) == rhs,
                                 [&] { return where + ": n! s_n != 2 I_n + 2 C(n,2) K^2 (4e)^{n-2}, n=" + std::to_string(n); });
                    check.expect(In_recursive(model, n) == In,
                                 [&] { return where + ": I_n recursion differs, n=" + std::to_string(n); });
                    check.expect(In_closed(model, n) == In,
                                 [&] { return where + ": I_n closed form differs, n=" + std::to_string(n); });
                }
            }
}

// ---------------------------------------------------------------------------
// 5

void check_structural(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    constexpr long kRange = 20;
    for (int q = 0; q <= 4; ++q)
        for (long p1 = -kRange; p1 <= -1; ++p1)
            for (long zeta2 = p1; zeta2 <= -1; zeta2 += 4)
                for (long zetaK = -kRange; zetaK <= kRange; ++zetaK) {
                    if ((zetaK - zeta2) % 2 != 0)
                        continue;
                    WallParams w;
                    try {
                        w = wall_params(p1, q, zeta2, zetaK);
                    } catch (const InvalidWallError&) {
                        continue;
                    }
                    check.expect(w.N_plus + w.N_minus + q + 2 * w.l_zeta == w.d - 1, [&] {
                        return "N identity fails at p1=" + std::to_string(p1) + " q=" + std::to_string(q) +
                               " zeta^2=" + std::to_string(zeta2) + " zeta.K=" + std::to_string(zetaK);
                    });
                    // w = zeta - 2u with u^2 = u.K mod 2
                    for (long u2 = -2; u2 <= 2; ++u2)
                        for (long uz = -2; uz <= 2; ++uz)
                            for (long uK = -2; uK <= 2; ++uK) {
                                if ((u2 - uK) % 2 != 0)
                                    continue;
                                if (check.failed())
                                    return;
                                const long w2 = zeta2 - 4 * uz + 4 * u2;
                                const long zetaW = zeta2 - 2 * uz;
                                const long wK = zetaK - 2 * uK;
                                const WallGeometry wall = make_wall(p1, q, zeta2, zetaK, zetaW, w2, wK);
                                const int lhs = eps_complex(wK, w2) * sign_pow(w.h_plus);
                                const int rhs = sign_pow(w.d + q) * eps_kotschick(zeta2, zetaW, w2) * eps_sign(opt);
                                check.expect(lhs == rhs, [&] {
                                    return describe_wall(wall) + ": eps_S(w)(-1)^h = " + std::to_string(lhs) +
                                           ", (-1)^{d+q} eps = " + std::to_string(rhs);
                                });
                            }
                }
}

// ---------------------------------------------------------------------------
// 6

// Coefficients of the interpolating polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys; // Newton divided differences
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<Rational> coeffs(n, Rational(0));
    // Horner in the Newton basis
    for (std::size_t k = n; k-- > 0;) {
        // coeffs = coeffs * (x - xs[k]) + dd[k]
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs[i] == 0)
                continue;
            if (i + 1 < n)
                next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * xs[k];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

void check_leading(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    auto run = [&](const WallGeometry& wall, int r, long sa, long sz, long alpha2) {
        const long s = wall.derived.d - 2L * r;
        const long l = wall.derived.l_zeta;
        if (s < 2 * l + wall.q)
            return;
        const long vanish = s - 2 * l - wall.q + 2; // coefficients of a^0..a^{vanish-1} must vanish
        std::vector<Rational> as, diffs;
        for (long k = 0; k <= s + 1; ++k) {
            const long za = k - (s + 1) / 2;
            PairingValues p;
            p.zeta2 = wall.zeta2;
            p.zetaK = wall.zetaK;
            p.zetaAlpha = za;
            p.sigmaAlpha = sa;
            p.sigmaZeta = sz;
            p.K2 = 8 - 8 * wall.q;
            p.alpha2 = alpha2;
            const Rational vol = 1;
            const Rational exact = l == 0 ? delta_l0(wall, p, vol, r).value : delta_l1(wall, p, vol, r).value;
            as.push_back(Rational(za, 2));
            as.back().canonicalize();
            diffs.push_back(exact * eps_sign(opt) - delta_leading(wall, p, vol, r).value);
        }
        // s+2 points for a polynomial of degree <= s: the top coefficient doubles as a degree check
        const auto coeffs = interpolate(as, diffs);
        bool ok = coeffs.back() == 0;
        for (long i = 0; i < vanish && i < static_cast<long>(coeffs.size()); ++i)
            ok = ok && coeffs[i] == 0;
        check.expect(ok, [&] {
            std::ostringstream out;
            out << describe_wall(wall) << " r=" << r << " Sigma.alpha=" << sa << " Sigma.zeta=" << sz << " alpha^2=" << alpha2
                << ": difference not divisible by a^" << vanish << " (coefficients";
            for (const auto& c : coeffs)
                out << ' ' << to_string(c);
            out << ')';
            return out.str();
        });
    };
    for_each_l0_wall(opt.l0, false, [&](const WallGeometry& wall) {
        for (int r = 0; r <= opt.l0.r_max; ++r)
            for (long sa = -2; sa <= 2; ++sa)
                for (long sz = -2; sz <= 2; ++sz)
                    run(wall, r, sa, sz, 0);
    });
    for (int q = 0; q <= 2; ++q)
        for (long zeta2 = -1; zeta2 >= -8; --zeta2) {
            const long p1 = zeta2 - 4;
            if (-p1 - 3 + 3L * q > 11)
                continue;
            for (long zetaK : zetaK_choices(p1, q, zeta2))
                for (const auto& wall : walls_with_w(p1, q, zeta2, zetaK))
                    for (int r = 0; r <= 2; ++r)
                        for (long sa = -2; sa <= 2; ++sa)
                            for (long sz = -2; sz <= 2; ++sz)
                                for (long alpha2 : {-1L, 0L, 3L})
                                    run(wall, r, sa, sz, alpha2);
        }
}

// ---------------------------------------------------------------------------
// 7

struct OmegaShape {
    std::optional<std::vector<long>> blocks;
    std::optional<std::vector<std::vector<long>>> matrix;
};

// Several omegas with the same volume: permuted blocks and non-block matrices.
std::vector<OmegaShape> same_volume_shapes(int q)
{
    switch (q) {
    case 0:
        return {{std::vector<long>{}, std::nullopt}};
    case 1:
        return {{std::vector<long>{6}, std::nullopt},
                {std::nullopt, std::vector<std::vector<long>>{{0, 6}, {-6, 0}}}};
    case 2:
        return {{std::vector<long>{1, 6}, std::nullopt},
                {std::vector<long>{2, 3}, std::nullopt},
                {std::vector<long>{6, 1}, std::nullopt},
                {std::nullopt, std::vector<std::vector<long>>{{0, 2, 1, 0}, {-2, 0, 0, 0}, {-1, 0, 0, 3}, {0, 0, -3, 0}}},
                {std::nullopt, std::vector<std::vector<long>>{{0, 0, 2, 0}, {0, 0, 0, -3}, {-2, 0, 0, 0}, {0, 3, 0, 0}}}};
    default:
        return {{std::vector<long>{1, 2, 3}, std::nullopt},
                {std::vector<long>{6, 1, 1}, std::nullopt},
                {std::nullopt, std::vector<std::vector<long>>{{0, 1, 1, 0, 0, 0},
                                                              {-1, 0, 0, 0, 0, 0},
                                                              {-1, 0, 0, 2, 0, 0},
                                                              {0, 0, -2, 0, 0, 0},
                                                              {0, 0, 0, 0, 0, 3},
                                                              {0, 0, 0, 0, -3, 0}}}};
    }
}

PairingInput shaped_input(int q, const OmegaShape& shape, const PairingValues& p)
{
    PairingInput in;
    in.q = q;
    in.a_blocks = shape.blocks;
    in.a_matrix = shape.matrix;
    in.pairings = p;
    return in;
}

void check_hidden_data(const VerifyOptions&, PropertyResult& res)
{
    Checker check(res);
    // a value for every variant of the hidden data, compared against the first
    auto compare = [&](const WallGeometry& wall, const PairingValues& base,
                       const std::function<Rational(const JacobianModel&)>& eval, const std::string& what) {
        const int q = wall.q;
        const auto shapes = same_volume_shapes(q);
        const Rational reference = eval(JacobianModel(shaped_input(q, shapes.front(), base)));
        auto expect_same = [&](const PairingValues& p, const OmegaShape& shape, const std::string& change) {
            const Rational v = eval(JacobianModel(shaped_input(q, shape, p)));
            check.expect(v == reference, [&] {
                return describe_wall(wall) + " " + what + " " + describe_pairings(base) + ": " + change + " changes " +
                       mismatch(reference, v);
            });
        };
        for (std::size_t i = 1; i < shapes.size(); ++i)
            expect_same(base, shapes[i], "omega shape #" + std::to_string(i));
        if (wall.derived.empty_E_side)
            return; // there Sigma.K is pinned to 2 Sigma.zeta
        for (long dk : {-3L, 2L, 5L}) {
            PairingValues p = base;
            p.sigmaK += dk;
            p.Kalpha -= dk + 1;
            expect_same(p, shapes.front(), "Sigma.K/K.alpha shift");
        }
        PairingValues flipped = base;
        flipped.sigmaK = -flipped.sigmaK;
        flipped.Kalpha = -flipped.Kalpha;
        for (const auto& shape : shapes)
            expect_same(flipped, shape, "K -> -K");
    };

    for (int q = 0; q <= 3; ++q)
        for (long d = 0; d <= 7; ++d) {
            const long zeta2 = -d - 3 + 3L * q;
            if (zeta2 >= 0)
                continue;
            for (long zetaK : zetaK_choices(zeta2, q, zeta2))
                for (const auto& wall : walls_with_w(zeta2, q, zeta2, zetaK))
                    for (int r = 0; 2 * r <= d && r <= 1; ++r)
                        for (long za : {-2L, 3L})
                            for (long sz : {-1L, 2L}) {
                                PairingValues p;
                                p.zeta2 = zeta2;
                                p.zetaK = zetaK;
                                p.zetaAlpha = za;
                                p.sigmaAlpha = 1 - za;
                                p.sigmaZeta = sz;
                                p.sigmaK = wall.derived.empty_E_side ? 2 * sz : 3;
                                p.K2 = 8 - 8 * q;
                                p.Kalpha = 2;
                                p.alpha2 = -1;
                                const InsertionWord word{r, static_cast<int>(d - 2 * r), {}, {}};
                                compare(wall, p, [&](const JacobianModel& m) { return delta_oracle_l0(m, wall, word).value; },
                                        "l=0 " + describe_word(word));
                            }
        }
    for (int q = 0; q <= 2; ++q)
        for (long zeta2 : {-1L, -4L}) {
            const long p1 = zeta2 - 4;
            for (long zetaK : zetaK_choices(p1, q, zeta2))
                for (const auto& wall : walls_with_w(p1, q, zeta2, zetaK))
                    for (int r = 0; r <= 1; ++r)
                        for (long za : {-1L, 2L}) {
                            PairingValues p;
                            p.zeta2 = zeta2;
                            p.zetaK = zetaK;
                            p.zetaAlpha = za;
                            p.sigmaAlpha = 2;
                            p.sigmaZeta = -1;
                            p.sigmaK = 1;
                            p.K2 = 8 - 8 * q;
                            p.Kalpha = -3;
                            p.alpha2 = 1;
                            compare(wall, p, [&](const JacobianModel& m) { return delta_oracle_l1(m, wall, r).value; },
                                    "l=1 r=" + std::to_string(r));
                        }
        }
}

// ---------------------------------------------------------------------------
// 8

PairingValues scale_sigma(PairingValues p, long factor)
{
    p.sigmaZeta *= factor;
    p.sigmaAlpha *= factor;
    p.sigmaK *= factor;
    return p;
}

void check_scale(const VerifyOptions&, PropertyResult& res)
{
    Checker check(res);
    // Sigma' = r Sigma: omega coefficients divide by r, Sigma-pairings multiply by r.
    // Kept integral by comparing blocks (r c) with pairings p against blocks c with pairings r p.
    auto compare = [&](const WallGeometry& wall, const PairingValues& p, long factor,
                       const std::function<Rational(const JacobianModel&, const PairingValues&)>& eval,
                       const std::string& what) {
        std::vector<long> coarse, fine;
        for (int i = 0; i < wall.q; ++i) {
            fine.push_back(i + 1);
            coarse.push_back(factor * (i + 1));
        }
        const PairingValues scaled = scale_sigma(p, factor);
        const JacobianModel a(make_input(wall.q, coarse, p));
        const JacobianModel b(make_input(wall.q, fine, scaled));
        check.expect(b.vol() * pow(Rational(factor), wall.q) == a.vol(),
                     [&] { return "vol does not scale by r^{-q} at q=" + std::to_string(wall.q); });
        const Rational va = eval(a, p);
        const Rational vb = eval(b, scaled);
        check.expect(va == vb, [&] {
            return describe_wall(wall) + " " + what + " r=" + std::to_string(factor) + " " + describe_pairings(p) + ": " +
                   mismatch(va, vb);
        });
    };

    for (long factor : {1L, 2L, 3L}) {
        for (int q = 0; q <= 2; ++q)
            for (long d = 0; d <= 6; ++d) {
                const long zeta2 = -d - 3 + 3L * q;
                if (zeta2 >= 0)
                    continue;
                for (long zetaK : zetaK_choices(zeta2, q, zeta2)) {
                    const WallGeometry wall = walls_with_w(zeta2, q, zeta2, zetaK)[1];
                    PairingValues p;
                    p.zeta2 = zeta2;
                    p.zetaK = zetaK;
                    p.zetaAlpha = 3;
                    p.sigmaAlpha = -2;
                    p.sigmaZeta = 1;
                    p.sigmaK = wall.derived.empty_E_side ? 2 : -1;
                    p.K2 = 8 - 8 * q;
                    for (int r = 0; 2 * r <= d; ++r) {
                        const InsertionWord word{r, static_cast<int>(d - 2 * r), {}, {}};
                        compare(wall, p, factor,
                                [&](const JacobianModel& m, const PairingValues&) {
                                    return delta_oracle_l0(m, wall, word).value;
                                },
                                "oracle l=0 " + describe_word(word));
                        compare(wall, p, factor,
                                [&](const JacobianModel& m, const PairingValues& pp) {
                                    return delta_l0(wall, pp, m.vol(), r).value;
                                },
                                "closed l=0 " + describe_word(word));
                    }
                    // odd insertions
                    if (q >= 1)
                        for (const auto& t : subsets(2 * q)) {
                            const std::vector<int> g = t.size() % 2 == 0 ? std::vector<int>{} : std::vector<int>{0};
                            const long rest = 2 * d - 3 * static_cast<long>(g.size()) - static_cast<long>(t.size());
                            if (rest < 0 || rest % 2 != 0)
                                continue;
                            const InsertionWord word{0, static_cast<int>(rest / 2), g, t};
                            compare(wall, p, factor,
                                    [&](const JacobianModel& m, const PairingValues&) {
                                        return delta_oracle_l0(m, wall, word).value;
                                    },
                                    "oracle l=0 " + describe_word(word));
                            compare(wall, p, factor,
                                    [&](const JacobianModel& m, const PairingValues&) {
                                        return delta_l0_odd(wall, m, word).value;
                                    },
                                    "closed odd " + describe_word(word));
                        }
                }
            }
        for (int q = 0; q <= 2; ++q)
            for (long zeta2 : {-1L, -4L}) {
                const long p1 = zeta2 - 4;
                for (long zetaK : zetaK_choices(p1, q, zeta2)) {
                    const WallGeometry wall = walls_with_w(p1, q, zeta2, zetaK)[0];
                    PairingValues p;
                    p.zeta2 = zeta2;
                    p.zetaK = zetaK;
                    p.zetaAlpha = -1;
                    p.sigmaAlpha = 2;
                    p.sigmaZeta = -1;
                    p.sigmaK = 1;
                    p.K2 = 8 - 8 * q;
                    p.Kalpha = 1;
                    p.alpha2 = 2;
                    for (int r = 0; r <= 1; ++r) {
                        compare(wall, p, factor,
                                [&](const JacobianModel& m, const PairingValues&) {
                                    return delta_oracle_l1(m, wall, r).value;
                                },
                                "oracle l=1 r=" + std::to_string(r));
                        compare(wall, p, factor,
                                [&](const JacobianModel& m, const PairingValues& pp) {
                                    return delta_l1(wall, pp, m.vol(), r).value;
                                },
                                "closed l=1 r=" + std::to_string(r));
                    }
                }
            }
    }
}

// ---------------------------------------------------------------------------
// 9

void check_model_axioms(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    std::mt19937 rng(opt.seed + 9);
    std::vector<ModelPtr> models;
    for (int q = 0; q <= 3; ++q) {
        for (const auto& blocks : block_choices(q)) {
            PairingInput in;
            in.q = q;
            in.a_blocks = blocks;
            in.pairings.sigmaAlpha = 3;
            in.pairings.sigmaZeta = -2;
            models.push_back(build_model(in));
        }
        for (int trial = 0; trial < 6; ++trial)
            models.push_back(random_model(q, rng));
    }
    for (const auto& ptr : models) {
        const JacobianModel m(ptr);
        const std::string where = "q=" + std::to_string(m.q()) + " model";
        const GradedElement E = m.E();
        const GradedElement E2 = E * E;
        const GradedElement E3 = E2 * E;
        const GradedElement E4 = E3 * E;
        check.expect(slant_top(E4).is_zero(), [&] { return where + ": e_S = " + slant_top(E4).to_string(); });
        check.expect(E3.is_zero(), [&] { return where + ": E^3 = " + E3.to_string(); });
        check.expect(E4.is_zero(), [&] { return where + ": E^4 = " + E4.to_string(); });
        check.expect(E2 == m.sigma() * m.omega() * Rational(-2), [&] { return where + ": E^2 != -2 Sigma omega"; });
        const GradedElement expected = m.omega() * (Rational(-2) * m.spec().gram(kSigma, kAlpha));
        check.expect(m.e_alpha() == expected, [&] { return where + ": e_alpha != -2 (Sigma.alpha) omega"; });
        check.expect(slant_divisor(E2, kAlpha) == expected, [&] { return where + ": E^2 \\ alpha != e_alpha"; });
        for (int e : {kZeta, kK}) {
            check.expect(slant_divisor(E2, e) == m.e_divisor(e), [&] { return where + ": E^2 \\ D != e_D"; });
        }
    }
}

// ---------------------------------------------------------------------------
// 10

void check_simple_type(const VerifyOptions& opt, PropertyResult& res)
{
    Checker check(res);
    // q = 0, zeta^2 = -4, p1 = -8 (d = 5), K^2 = 8, zeta.alpha = 2, alpha^2 = -1
    const WallGeometry wall = make_wall(-8, 0, -4, 0, -4, -4, 0);
    PairingValues p;
    p.zeta2 = -4;
    p.K2 = 8;
    p.zetaAlpha = 2;
    p.alpha2 = -1;
    const JacobianModel model(make_input(0, {}, p));
    const Rational top = delta_oracle_l1(model, wall, 0).value;
    const Rational with_x = delta_oracle_l1(model, wall, 1).value;
    const Rational top_closed = delta_l1(wall, p, 1, 0).value * eps_sign(opt);
    const Rational x_closed = delta_l1(wall, p, 1, 1).value * eps_sign(opt);
    check.expect(top == top_closed && with_x == x_closed, [&] {
        return "closed forms disagree with the oracle on the witness: " + mismatch(top_closed, top) + ", " +
               mismatch(x_closed, with_x);
    });
    check.expect(with_x != 4 * top, [&] { return "delta(x alpha^3) = 4 delta(alpha^5) = " + to_string(with_x); });
    res.note = describe_wall(wall) + ": delta(x alpha^3) = " + to_string(with_x) + ", 4 delta(alpha^5) = " +
               to_string(Rational(4 * top));
}

struct Criterion {
    const char* name;
    void (*run)(const VerifyOptions&, PropertyResult&);
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {"oracle_l0", check_oracle_l0},   {"oracle_l1", check_oracle_l1}, {"odd_classes", check_odd_classes},
        {"segre", check_segre},           {"structural", check_structural}, {"leading", check_leading},
        {"hidden_data", check_hidden_data}, {"scale", check_scale},       {"e_S", check_model_axioms},
        {"simple_type", check_simple_type},
    };
    return list;
}

} // namespace

const std::vector<std::string>& property_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : criteria())
            out.emplace_back(c.name);
        return out;
    }();
    return names;
}

PropertyResult run_property(const std::string& name, const VerifyOptions& options)
{
    const auto& list = criteria();
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (name != list[i].name && name != std::to_string(i + 1))
            continue;
        PropertyResult res;
        res.id = static_cast<int>(i + 1);
        res.name = list[i].name;
        const auto start = std::chrono::steady_clock::now();
        try {
            list[i].run(options, res);
        } catch (const std::exception& e) {
            res.passed = false;
            if (res.counterexample.empty())
                res.counterexample = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }
    throw InputError("unknown property '" + name + "'");
}

std::vector<PropertyResult> run_all(const VerifyOptions& options)
{
    std::vector<PropertyResult> out;
    for (const auto& name : property_names())
        out.push_back(run_property(name, options));
    return out;
}

GridBounds parse_grid(const std::string& text, GridBounds bounds)
{
    std::stringstream in(text);
    std::string item;
    auto to_int = [&](const std::string& v) {
        try {
            std::size_t used = 0;
            const int x = std::stoi(v, &used);
            if (used != v.size())
                throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw InputError("bad number '" + v + "' in grid '" + text + "'");
        }
    };
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        if (const auto pos = item.find("<="); pos != std::string::npos) {
            const std::string key = item.substr(0, pos);
            const int v = to_int(item.substr(pos + 2));
            if (key == "d")
                bounds.d_max = v;
            else if (key == "r")
                bounds.r_max = v;
            else if (key == "p")
                bounds.pair_range = v;
            else if (key == "q")
                bounds.q_max = v;
            else
                throw InputError("unknown grid key '" + key + "'");
        } else if (const auto eq = item.find('='); eq != std::string::npos && item.substr(0, eq) == "q") {
            const std::string range = item.substr(eq + 1);
            const auto dots = range.find("..");
            if (dots == std::string::npos) {
                bounds.q_min = bounds.q_max = to_int(range);
            } else {
                bounds.q_min = to_int(range.substr(0, dots));
                bounds.q_max = to_int(range.substr(dots + 2));
            }
        } else {
            throw InputError("cannot parse grid item '" + item + "'");
        }
    }
    if (bounds.q_min < 0 || bounds.q_max < bounds.q_min || bounds.q_max > 6 || bounds.d_max < 0 || bounds.r_max < 0 ||
        bounds.pair_range < 0)
        throw InputError("grid bounds out of range: '" + text + "'");
    return bounds;
}

nlohmann::json results_to_json(const std::vector<PropertyResult>& results)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json row = {{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"checked", r.checked}};
        if (!r.counterexample.empty())
            row["counterexample"] = r.counterexample;
        if (!r.note.empty())
            row["note"] = r.note;
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace wallcross
