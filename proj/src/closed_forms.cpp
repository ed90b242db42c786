#include "wallcross/closed_forms.hpp"

namespace wallcross {

std::string to_string(DeltaPath path)
{
    switch (path) {
    case DeltaPath::ClosedForm:
        return "closed-form";
    case DeltaPath::RingOracle:
        return "ring-oracle";
    case DeltaPath::LeadingTerm:
        return "leading-term";
    }
    return "unknown";
}

nlohmann::json delta_to_json(const DeltaValue& value)
{
    nlohmann::json out = {{"value", to_string(value.value)},
                          {"path", to_string(value.path)},
                          {"wall", wall_to_json(value.wall)},
                          {"word",
                           {{"r", value.word.r},
                            {"s", value.word.s},
                            {"gammas", value.word.gammas},
                            {"threes", value.word.threes}}}};
    if (value.modulus_exponent)
        out["modulus_exponent"] = *value.modulus_exponent;
    return out;
}

Rational pow2(long e)
{
    Rational out = 1;
    if (e >= 0)
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<unsigned long>(-e));
    return out;
}

void check_consistent(const WallGeometry& wall, const PairingValues& pairings)
{
    if (pairings.zeta2 != wall.zeta2 || pairings.zetaK != wall.zetaK)
        throw PreconditionError("pairing data (zeta^2, zeta.K) disagrees with the wall");
}

namespace {

void require_regime(const WallGeometry& wall, long l)
{
    if (wall.derived.l_zeta != l)
        throw RegimeError("this formula needs l_zeta = " + std::to_string(l) + ", the wall has l_zeta = " +
                          std::to_string(wall.derived.l_zeta));
}

long checked_s(const WallGeometry& wall, int r)
{
    if (r < 0)
        throw PreconditionError("r must be non-negative");
    const long s = wall.derived.d - 2L * r;
    if (s < 0)
        throw PreconditionError("d - 2r must be non-negative");
    return s;
}

Rational falling_factorial_ratio(long q, long b)
{
    // q!/(q-b)!, zero when b > q
    if (b < 0 || b > q)
        return 0;
    return ratio(factorial(q), factorial(q - b));
}

} // namespace

DeltaValue delta_l0(const WallGeometry& wall, const PairingValues& p, const Rational& vol, int r)
{
    require_regime(wall, 0);
    check_consistent(wall, p);
    const long s = checked_s(wall, r);
    const long q = wall.q;
    const long d = wall.derived.d;
    Rational sum = 0;
    for (long b = 0; b <= q; ++b) {
        Rational term = pow2(3 * q - b - d) * falling_factorial_ratio(q, b) * Rational(binomial(s, b));
        term *= pow_or_zero(p.zetaAlpha, s - b) * pow(p.sigmaAlpha, b) * pow(p.sigmaZeta, q - b);
        sum += term;
    }
    sum *= sign_pow(r + d) * eps_kotschick(wall.zeta2, wall.zetaW, wall.w2);
    sum *= vol;
    return {sum, DeltaPath::ClosedForm, wall, InsertionWord{r, static_cast<int>(s), {}, {}}, std::nullopt};
}

DeltaValue delta_l0_odd(const WallGeometry& wall, const JacobianModel& model, const InsertionWord& word)
{
    require_regime(wall, 0);
    const ModelSpec& spec = model.spec();
    if (spec.q() != wall.q)
        throw PreconditionError("model and wall disagree on q");
    const long a = static_cast<long>(word.gammas.size());
    const long b = static_cast<long>(word.threes.size());
    DeltaValue out{0, DeltaPath::ClosedForm, wall, word, std::nullopt};
    if ((a + b) % 2 != 0)
        return out;
    if (word.r < 0 || word.s < 0)
        throw PreconditionError("negative multiplicity in the insertion word");
    if (word.real_degree() != 2 * wall.derived.d)
        throw PreconditionError("insertion word has degree " + std::to_string(word.real_degree()) + ", expected 2d = " +
                                std::to_string(2 * wall.derived.d));
    const long q = wall.q;
    const long d = wall.derived.d;
    const long s = word.s;
    const long half = (a + b) / 2;
    const Rational F = model.F_functional(word);
    if (F == 0)
        return out;
    const Rational& zeta_alpha = spec.gram(kZeta, kAlpha);
    const Rational& sigma_alpha = spec.gram(kSigma, kAlpha);
    const Rational& sigma_zeta = spec.gram(kSigma, kZeta);
    Rational sum = 0;
    for (long j = 0; j <= s; ++j) {
        const Rational inv = inv_factorial_or_zero(q - half - j);
        if (inv == 0)
            continue;
        Rational term = pow2(3 * q - d - b - j) * Rational(binomial(s, j)) * F * inv;
        term *= pow(zeta_alpha, s - j) * pow(sigma_alpha, j) * pow_or_zero(sigma_zeta, q + (b - a) / 2 - j);
        sum += term;
    }
    out.value = sum * sign_pow(word.r + d + b) * eps_kotschick(wall.zeta2, wall.zetaW, wall.w2);
    return out;
}

DeltaValue delta_l1(const WallGeometry& wall, const PairingValues& p, const Rational& vol, int r)
{
    require_regime(wall, 1);
    check_consistent(wall, p);
    const long s = checked_s(wall, r);
    const long q = wall.q;
    const long d = wall.derived.d;
    const Rational bracket_const = 6 * Rational(wall.zeta2) + 2 * p.K2 - 24 * q - 8 * r;
    Rational sum = 0;
    for (long b = 0; b <= q; ++b) {
        Rational inner = pow_or_zero(p.zetaAlpha, s - b) *
                         (Rational(binomial(s, b)) * bracket_const + 8 * Rational(binomial(s, b + 1) * binomial(b + 1, 1)));
        inner += 8 * pow_or_zero(p.zetaAlpha, s - b - 2) * p.alpha2 * Rational(binomial(s, b + 2) * binomial(b + 2, 2));
        Rational term = pow2(3 * q - b - d) * inner * pow(p.sigmaAlpha, b) * pow(p.sigmaZeta, q - b) *
                        falling_factorial_ratio(q, b);
        sum += term;
    }
    sum *= sign_pow(r + d + 1) * eps_kotschick(wall.zeta2, wall.zetaW, wall.w2);
    sum *= vol;
    return {sum, DeltaPath::ClosedForm, wall, InsertionWord{r, static_cast<int>(s), {}, {}}, std::nullopt};
}

// ---------------------------------------------------------------------------

namespace {

GradedElement four_e_zeta_power(const JacobianModel& model, int n)
{
    if (n < 0)
        return GradedElement::zero(model.ptr());
    return power(model.e_zeta() * Rational(4), n);
}

// Terms (4 e_zeta)^m / k! with the convention that negative m or k give zero.
GradedElement scaled_power(const JacobianModel& model, int m, int k)
{
    const Rational inv = inv_factorial_or_zero(k);
    if (inv == 0 || m < 0)
        return GradedElement::zero(model.ptr());
    return four_e_zeta_power(model, m) * inv;
}

} // namespace

GradedElement sn_closed(const JacobianModel& model, int n)
{
    if (n < 0)
        throw PreconditionError("Segre index must be non-negative");
    const GradedElement zeta = model.zeta();
    const GradedElement E = model.E();
    const GradedElement K = model.K();
    GradedElement out = scaled_power(model, n, n) * Rational(2);
    out -= (zeta * Rational(4) + E * Rational(8)) * scaled_power(model, n - 1, n - 1);
    const GradedElement quad = zeta * zeta * Rational(6) + K * K * Rational(2) + E * zeta * Rational(24) + E * E * Rational(24);
    out += quad * scaled_power(model, n - 2, n - 2);
    out -= model.point() * Rational(24) * scaled_power(model, n - 2, n - 3);
    return out;
}

ChernData In_chern_data(const JacobianModel& model)
{
    const GradedElement zeta = model.zeta();
    const GradedElement E = model.E();
    const GradedElement K = model.K();
    ChernData data;
    data.rank = 0;
    data.a.push_back(model.e_zeta() * Rational(-4) + zeta * Rational(2) + E * Rational(4));
    data.a.push_back(zeta * zeta * Rational(2) + E * E * Rational(8) + K * K + E * zeta * Rational(8));
    data.a.push_back(E * E * zeta * Rational(24));
    return data;
}

GradedElement In_determinant(const JacobianModel& model, int n)
{
    return segre_from_ch(In_chern_data(model), n, model.ptr()) * Rational(factorial(n));
}

namespace {

// (n-1) (4e_zeta)^{n-2} (2 zeta^2 + K^2 + 8E zeta + 8E^2 - 18(n-2)[S])
GradedElement In_increment(const JacobianModel& model, int n)
{
    const GradedElement zeta = model.zeta();
    const GradedElement E = model.E();
    const GradedElement K = model.K();
    GradedElement bracket = zeta * zeta * Rational(2) + K * K + E * zeta * Rational(8) + E * E * Rational(8) -
                            model.point() * Rational(18 * (n - 2));
    return four_e_zeta_power(model, n - 2) * bracket * Rational(n - 1);
}

} // namespace

GradedElement In_recursive(const JacobianModel& model, int n)
{
    if (n < 0)
        throw PreconditionError("I_n needs n >= 0");
    const GradedElement minus_a1 = -In_chern_data(model).a[0];
    GradedElement current = model.scalar(1);
    for (int k = 1; k <= n; ++k) {
        GradedElement next = minus_a1 * current;
        if (k >= 2)
            next += In_increment(model, k);
        current = std::move(next);
    }
    return current;
}

GradedElement In_closed(const JacobianModel& model, int n)
{
    if (n < 0)
        throw PreconditionError("I_n needs n >= 0");
    const GradedElement minus_a1 = -In_chern_data(model).a[0];
    GradedElement out = power(minus_a1, n);
    for (int i = 2; i <= n; ++i)
        out += power(minus_a1, n - i) * In_increment(model, i);
    return out;
}

GradedElement leading_Sjb(const JacobianModel& model, long l, LeadingIndex which)
{
    if (l < 0)
        throw PreconditionError("l_zeta must be non-negative");
    const ModelSpec& spec = model.spec();
    const int q = spec.q();
    const Rational& alpha2 = spec.gram(kAlpha, kAlpha);
    const Rational a = spec.gram(kZeta, kAlpha) / 2;
    const Rational lead = ratio(factorial(2 * l), factorial(l));
    switch (which) {
    case LeadingIndex::Top:
        return power(model.e_alpha(), q) * (lead * pow(alpha2, l));
    case LeadingIndex::HilbertBelow:
        if (l < 1)
            throw PreconditionError("S_{2l-1,q} needs l_zeta >= 1");
        return power(model.e_alpha(), q) * (Rational(-4) * lead * pow(alpha2, l - 1) * a);
    case LeadingIndex::JacobianBelow:
        if (q < 1)
            throw PreconditionError("S_{2l,q-1} needs q >= 1");
        return power(model.e_alpha(), q - 1) * model.e_zeta() * (Rational(4) * lead * pow(alpha2, l));
    }
    throw PreconditionError("unknown S_{j,b} index");
}

DeltaValue delta_leading(const WallGeometry& wall, const PairingValues& p, const Rational& vol, int r)
{
    check_consistent(wall, p);
    const long s = checked_s(wall, r);
    const long q = wall.q;
    const long l = wall.derived.l_zeta;
    const long d = wall.derived.d;
    const long e0 = s - 2 * l - q;
    if (e0 < 0)
        throw PreconditionError("leading terms need d - 2r >= 2 l_zeta + q");
    const Rational a = p.zetaAlpha / 2;
    const Rational common = pow(p.alpha2, l) / Rational(factorial(l)) * Rational(factorial(s));
    Rational bracket = pow(a, e0) * common / Rational(factorial(e0)) * pow(p.sigmaAlpha, q);
    if (q >= 1)
        bracket += 4 * pow(a, e0 + 1) * common * q / Rational(factorial(e0 + 1)) * pow(p.sigmaAlpha, q - 1) * p.sigmaZeta;
    Rational value = bracket * pow2(q - 2L * r) * vol;
    value *= sign_pow(d + l + r) * eps_kotschick(wall.zeta2, wall.zetaW, wall.w2);
    return {value, DeltaPath::LeadingTerm, wall, InsertionWord{r, static_cast<int>(s), {}, {}}, e0 + 2};
}

} // namespace wallcross
