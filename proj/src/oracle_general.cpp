#include "wallcross/oracle_general.hpp"

#include <algorithm>
#include <string>

namespace wallcross {

void check_model_matches_wall(const JacobianModel& model, const WallGeometry& wall)
{
    const ModelSpec& spec = model.spec();
    if (spec.q() != wall.q)
        throw PreconditionError("model has q = " + std::to_string(spec.q()) + ", the wall q = " + std::to_string(wall.q));
    if (spec.gram(kZeta, kZeta) != wall.zeta2 || spec.gram(kZeta, kK) != wall.zetaK)
        throw PreconditionError("model pairings zeta^2, zeta.K disagree with the wall");
}

GradedElement ch_M(const JacobianModel& model, Side side)
{
    const Rational sign = side == Side::Plus ? 1 : -1;
    const GradedElement line = exp_truncated((model.zeta() + model.E() * Rational(2)) * sign);
    const GradedElement td = model.scalar(1) - model.K() * Rational(1, 2) + model.point() * Rational(1 - model.q());
    return -slant_top(line * td);
}

namespace {

ChernData as_chern(const GradedElement& ch) { return chern_data_from_ch(ch); }

// ch of the line bundle exp(c) for an even degree-2 class c.
GradedElement ch_line(const GradedElement& c) { return exp_truncated(c); }

} // namespace

std::pair<ExtensionBundleData, ExtensionBundleData> ch_extension_bundles(const JacobianModel& model,
                                                                         const WallGeometry& wall, long l_zeta, int k)
{
    check_model_matches_wall(model, wall);
    if (l_zeta != wall.derived.l_zeta)
        throw RegimeError("wall has l_zeta = " + std::to_string(wall.derived.l_zeta));
    if (l_zeta >= 2 || l_zeta < 0)
        throw RegimeError("extension bundles are only modelled for l_zeta <= 1; l_zeta >= 2 needs the cohomology of "
                          "Hilb^l(S), which is out of scope");
    if (k < 0 || k > l_zeta)
        throw PreconditionError("k must lie in 0..l_zeta");

    GradedElement plus = ch_M(model, Side::Plus);
    GradedElement minus = ch_M(model, Side::Minus);
    if (l_zeta == 1) {
        const GradedElement twoE = model.E() * Rational(2);
        const GradedElement zeta = model.zeta();
        const GradedElement K = model.K();
        if (k == 0) {
            plus += ch_line(zeta + twoE); // E^{1,0}_zeta
            minus += ch_line(-zeta - K - twoE); // E^{0,1}_{-zeta}
        } else {
            plus += ch_line(zeta - K + twoE); // E^{0,1}_zeta
            minus += ch_line(-zeta - twoE); // E^{1,0}_{-zeta}
        }
    }
    return {ExtensionBundleData{k, Side::Plus, as_chern(plus)}, ExtensionBundleData{k, Side::Minus, as_chern(minus)}};
}

ChernData segre_bundle(const JacobianModel& model, const WallGeometry& wall, int k)
{
    const auto [plus, minus] = ch_extension_bundles(model, wall, wall.derived.l_zeta, k);
    return ch_direct_sum(plus.ch, ch_dual(minus.ch));
}

// ---------------------------------------------------------------------------

XPolynomial XPolynomial::constant(const GradedElement& c)
{
    XPolynomial p(c.model_ptr());
    p.coeffs_.push_back(c);
    return p;
}

XPolynomial XPolynomial::linear(const GradedElement& c0, const GradedElement& c1)
{
    XPolynomial p(c0.model_ptr());
    p.coeffs_ = {c0, c1};
    return p;
}

XPolynomial XPolynomial::from_coeffs(std::vector<GradedElement> coeffs)
{
    if (coeffs.empty())
        throw PreconditionError("an X polynomial needs at least one coefficient");
    XPolynomial p(coeffs.front().model_ptr());
    p.coeffs_ = std::move(coeffs);
    return p;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b)
{
    XPolynomial out(a.model_);
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GradedElement::zero(a.model_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero())
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

GradedElement XPolynomial::substitute(const std::vector<GradedElement>& table) const
{
    if (static_cast<int>(table.size()) <= degree())
        throw PreconditionError("X substitution table is too short");
    GradedElement out = GradedElement::zero(model_);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (!coeffs_[n].is_zero() && !table[n].is_zero())
            out += coeffs_[n] * table[n];
    return out;
}

XPolynomial power(const XPolynomial& p, int n)
{
    if (n < 0)
        throw PreconditionError("negative power");
    if (p.coeffs().empty())
        throw PreconditionError("power of an empty X polynomial");
    XPolynomial out = XPolynomial::constant(GradedElement::scalar(p.coeff(0).model_ptr(), 1));
    for (int i = 0; i < n; ++i)
        out = out * p;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// s_0..s_top of the given Chern data; higher classes vanish for degree reasons.
std::vector<GradedElement> segre_list(const ChernData& data, const ModelPtr& model)
{
    std::vector<GradedElement> out;
    const int top = max_class_index(*model);
    for (int n = 0; n <= top; ++n)
        out.push_back(segre_from_ch(data, n, model));
    return out;
}

GradedElement segre_at(const std::vector<GradedElement>& list, long i, const ModelPtr& model)
{
    if (i < 0 || i >= static_cast<long>(list.size()))
        return GradedElement::zero(model);
    return list[i];
}

void require_l(const WallGeometry& wall, long l)
{
    if (wall.derived.l_zeta != l)
        throw RegimeError("this oracle needs l_zeta = " + std::to_string(l) + ", the wall has l_zeta = " +
                          std::to_string(wall.derived.l_zeta));
}

} // namespace

std::vector<GradedElement> x_table_l0(const JacobianModel& model, const WallGeometry& wall, int n_max, L0Branch branch)
{
    check_model_matches_wall(model, wall);
    require_l(wall, 0);
    const WallParams& w = wall.derived;
    if (branch == L0Branch::Auto)
        branch = w.empty_E_side ? L0Branch::EmptySide : L0Branch::Generic;
    if (branch == L0Branch::EmptySide && !w.empty_E_side)
        throw PreconditionError("the empty-side formula needs h(zeta) + q = 0");

    std::vector<GradedElement> table;
    if (branch == L0Branch::Generic) {
        const auto segre = segre_list(segre_bundle(model, wall, 0), model.ptr());
        for (int n = 0; n <= n_max; ++n)
            table.push_back(segre_at(segre, n - 1 - w.N_plus - w.N_minus, model.ptr()) * Rational(sign_pow(n - w.N_minus)));
    } else {
        const auto minus = ch_extension_bundles(model, wall, 0, 0).second;
        const auto segre = segre_list(minus.ch, model.ptr());
        for (int n = 0; n <= n_max; ++n)
            table.push_back(segre_at(segre, n - w.N_minus, model.ptr()));
    }
    return table;
}

std::vector<GradedElement> x_table_l1(const JacobianModel& model, const WallGeometry& wall, int n_max)
{
    check_model_matches_wall(model, wall);
    require_l(wall, 1);
    const WallParams& w = wall.derived;
    const auto s0 = segre_list(segre_bundle(model, wall, 0), model.ptr());
    const auto s1 = segre_list(segre_bundle(model, wall, 1), model.ptr());
    std::vector<GradedElement> table;
    for (int n = 0; n <= n_max; ++n) {
        const long i = n - 1 - w.N_plus - w.N_minus;
        table.push_back((segre_at(s0, i, model.ptr()) + segre_at(s1, i, model.ptr())) * Rational(sign_pow(n - w.N_minus)));
    }
    return table;
}

DeltaValue delta_oracle_l0(const JacobianModel& model, const WallGeometry& wall, const InsertionWord& word,
                           L0Branch branch)
{
    check_model_matches_wall(model, wall);
    require_l(wall, 0);
    if (word.r < 0 || word.s < 0)
        throw PreconditionError("negative multiplicity in the insertion word");
    // odd J-degree integrates to zero; such words never have real degree 2d anyway
    if (word.odd_count() % 2 != 0)
        return {0, DeltaPath::RingOracle, wall, word, std::nullopt};
    if (word.real_degree() != 2 * wall.derived.d)
        throw PreconditionError("insertion word has degree " + std::to_string(word.real_degree()) + ", expected 2d = " +
                                std::to_string(2 * wall.derived.d));

    const ModelPtr& m = model.ptr();
    const GradedElement zero = GradedElement::zero(m);
    const Rational a = model.spec().gram(kZeta, kAlpha) / 2;

    XPolynomial poly = power(XPolynomial::from_coeffs({zero, zero, model.scalar(Rational(-1, 4))}), word.r);
    poly = poly * power(XPolynomial::linear(-model.e_alpha(), model.scalar(a)), word.s);
    for (int i : word.gammas)
        poly = poly * XPolynomial::linear(zero, model.e_gamma(i));
    for (int j : word.threes)
        poly = poly * XPolynomial::constant(-model.e_zetaA(j));

    const auto table = x_table_l0(model, wall, poly.degree(), branch);
    const GradedElement jclass = poly.substitute(table);
    Rational value = integrate(jclass * model.point());
    value *= eps_complex(wall.wK, wall.w2);
    return {value, DeltaPath::RingOracle, wall, word, std::nullopt};
}

DeltaValue delta_oracle_l1(const JacobianModel& model, const WallGeometry& wall, int r)
{
    check_model_matches_wall(model, wall);
    require_l(wall, 1);
    if (r < 0)
        throw PreconditionError("r must be non-negative");
    const long s = wall.derived.d - 2L * r;
    InsertionWord word{r, static_cast<int>(std::max(s, 0L)), {}, {}};
    if (s < 0)
        return {0, DeltaPath::RingOracle, wall, word, std::nullopt};

    const ModelPtr& m = model.ptr();
    const GradedElement zero = GradedElement::zero(m);
    const Rational a = model.spec().gram(kZeta, kAlpha) / 2;

    XPolynomial poly = power(XPolynomial::from_coeffs({model.point(), zero, model.scalar(Rational(-1, 4))}), r);
    poly = poly * power(XPolynomial::linear(model.alpha() - model.e_alpha(), model.scalar(a)), static_cast<int>(s));

    const auto table = x_table_l1(model, wall, poly.degree());
    Rational value = integrate(poly.substitute(table));
    value *= eps_complex(wall.wK, wall.w2);
    return {value, DeltaPath::RingOracle, wall, word, std::nullopt};
}

} // namespace wallcross
