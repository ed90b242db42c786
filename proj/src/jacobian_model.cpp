#include "wallcross/jacobian_model.hpp"

#include <string>

namespace wallcross {

int InsertionWord::real_degree() const
{
    return 4 * r + 2 * s + 3 * static_cast<int>(gammas.size()) + static_cast<int>(threes.size());
}

std::vector<std::vector<long>> block_matrix(int q, const std::vector<long>& blocks)
{
    if (q < 0)
        throw PreconditionError("q must be non-negative");
    if (static_cast<int>(blocks.size()) > q)
        throw PreconditionError("more omega blocks than q");
    std::vector<std::vector<long>> a(2 * q, std::vector<long>(2 * q, 0));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i] == 0)
            throw PreconditionError("block coefficients must be nonzero");
        a[2 * i][2 * i + 1] = blocks[i];
        a[2 * i + 1][2 * i] = -blocks[i];
    }
    return a;
}

ModelPtr build_model(const PairingInput& input)
{
    if (input.a_blocks && input.a_matrix)
        throw PreconditionError("give either a_blocks or a_matrix, not both");
    std::vector<std::vector<long>> a;
    if (input.a_matrix)
        a = *input.a_matrix;
    else if (input.a_blocks)
        a = block_matrix(input.q, *input.a_blocks);
    else
        a = block_matrix(input.q, std::vector<long>(input.q, 1));

    RationalMatrix ar(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (long v : a[i])
            ar[i].emplace_back(v);

    const PairingValues& p = input.pairings;
    RationalMatrix gram = {
        {0, p.sigmaZeta, p.sigmaK, p.sigmaAlpha},
        {p.sigmaZeta, p.zeta2, p.zetaK, p.zetaAlpha},
        {p.sigmaK, p.zetaK, p.K2, p.Kalpha},
        {p.sigmaAlpha, p.zetaAlpha, p.Kalpha, p.alpha2},
    };
    return std::make_shared<const ModelSpec>(input.q, std::move(ar), std::vector<std::string>{"Sigma", "zeta", "K", "alpha"},
                                             std::move(gram));
}

namespace {

Rational json_rational(const nlohmann::json& v, const std::string& key)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw InputError("pairing '" + key + "' must be an integer or a \"num/den\" string");
}

} // namespace

PairingInput parse_pairing_input(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw InputError("input document must be a JSON object");
    PairingInput in;
    if (!doc.contains("q") || !doc["q"].is_number_integer())
        throw InputError("missing integer field 'q'");
    in.q = doc["q"].get<int>();
    if (in.q < 0)
        throw InputError("'q' must be non-negative");
    try {
        if (doc.contains("a_blocks"))
            in.a_blocks = doc["a_blocks"].get<std::vector<long>>();
        if (doc.contains("a_matrix"))
            in.a_matrix = doc["a_matrix"].get<std::vector<std::vector<long>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("omega coefficients must be integers: ") + e.what());
    }
    if (in.a_blocks && in.a_matrix)
        throw InputError("give either 'a_blocks' or 'a_matrix', not both");
    if (!doc.contains("pairings") || !doc["pairings"].is_object())
        throw InputError("missing object field 'pairings'");
    const auto& p = doc["pairings"];
    static const char* const known[] = {"zeta2", "zetaK", "zetaAlpha", "sigmaZeta", "sigmaAlpha",
                                        "sigmaK", "K2", "Kalpha", "alpha2"};
    for (const auto& [key, value] : p.items()) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || key == k;
        if (!ok)
            throw InputError("unknown pairing '" + key + "'");
    }
    auto get = [&](const char* key) -> Rational { return p.contains(key) ? json_rational(p[key], key) : Rational(0); };
    in.pairings.zeta2 = get("zeta2");
    in.pairings.zetaK = get("zetaK");
    in.pairings.zetaAlpha = get("zetaAlpha");
    in.pairings.sigmaZeta = get("sigmaZeta");
    in.pairings.sigmaAlpha = get("sigmaAlpha");
    in.pairings.sigmaK = get("sigmaK");
    in.pairings.K2 = get("K2");
    in.pairings.Kalpha = get("Kalpha");
    in.pairings.alpha2 = get("alpha2");
    try {
        build_model(in);
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
    return in;
}

nlohmann::json pairing_input_to_json(const PairingInput& input)
{
    nlohmann::json doc;
    doc["q"] = input.q;
    if (input.a_blocks)
        doc["a_blocks"] = *input.a_blocks;
    if (input.a_matrix)
        doc["a_matrix"] = *input.a_matrix;
    const PairingValues& p = input.pairings;
    doc["pairings"] = {{"zeta2", to_string(p.zeta2)},         {"zetaK", to_string(p.zetaK)},
                       {"zetaAlpha", to_string(p.zetaAlpha)}, {"sigmaZeta", to_string(p.sigmaZeta)},
                       {"sigmaAlpha", to_string(p.sigmaAlpha)}, {"sigmaK", to_string(p.sigmaK)},
                       {"K2", to_string(p.K2)},               {"Kalpha", to_string(p.Kalpha)},
                       {"alpha2", to_string(p.alpha2)}};
    return doc;
}

// ---------------------------------------------------------------------------

JacobianModel::JacobianModel(ModelPtr model) : model_(std::move(model))
{
    if (!model_)
        throw PreconditionError("null model");
}

GradedElement JacobianModel::symbol(int e) const
{
    return GradedElement::monomial(model_, Monomial::s_even(e));
}

GradedElement JacobianModel::point() const { return GradedElement::monomial(model_, Monomial::s_top()); }

GradedElement JacobianModel::E() const
{
    // b_i (x) b_i^# is the product b_i * b_i^#, which is -b_i^# b_i in canonical order.
    std::vector<GradedElement::Term> terms;
    for (int i = 0; i < model_->top_J(); ++i)
        terms.emplace_back(Monomial::from_key(Monomial::j_odd(i).key() | Monomial::s_odd(i).key()), Rational(-1));
    return GradedElement::from_terms(model_, std::move(terms));
}

GradedElement JacobianModel::omega() const
{
    std::vector<GradedElement::Term> terms;
    const int n = model_->top_J();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (model_->a(i, j) != 0)
                terms.emplace_back(Monomial::jacobian((std::uint32_t{1} << i) | (std::uint32_t{1} << j)), model_->a(i, j));
    return GradedElement::from_terms(model_, std::move(terms));
}

void JacobianModel::check_index(int i) const
{
    if (i < 0 || i >= model_->top_J())
        throw PreconditionError("basis index " + std::to_string(i) + " out of range for q = " + std::to_string(model_->q()));
}

GradedElement JacobianModel::interior_omega(int i) const
{
    check_index(i);
    std::vector<GradedElement::Term> terms;
    for (int j = 0; j < model_->top_J(); ++j)
        if (model_->a(i, j) != 0)
            terms.emplace_back(Monomial::j_odd(j), model_->a(i, j));
    return GradedElement::from_terms(model_, std::move(terms));
}

GradedElement JacobianModel::e_divisor(int e) const { return omega() * (Rational(-2) * model_->gram(kSigma, e)); }

GradedElement JacobianModel::e_gamma(int i) const
{
    check_index(i);
    return GradedElement::monomial(model_, Monomial::j_odd(i));
}

GradedElement JacobianModel::e_zetaA(int i) const { return interior_omega(i) * model_->gram(kSigma, kZeta); }

Rational JacobianModel::vol() const
{
    const int q = model_->q();
    if (q == 0)
        return 1;
    return integrate(power(omega(), q) * point()) / Rational(factorial(q));
}

Rational JacobianModel::F_functional(const InsertionWord& word) const
{
    const int odd = word.odd_count();
    if (odd % 2 != 0)
        return 0;
    const int omega_power = model_->q() - odd / 2;
    if (omega_power < 0)
        return 0;
    GradedElement product = scalar(1);
    for (int i : word.gammas)
        product = product * e_gamma(i);
    for (int j : word.threes)
        product = product * interior_omega(j);
    product = product * power(omega(), omega_power);
    return integrate(product * point());
}

GradedElement e_classes(const JacobianModel& model, EClass which, int index)
{
    switch (which) {
    case EClass::Alpha:
        return model.e_alpha();
    case EClass::Gamma:
        return model.e_gamma(index);
    case EClass::ZetaA:
        return model.e_zetaA(index);
    }
    throw PreconditionError("unknown e-class");
}

GradedElement slant_divisor(const GradedElement& x, int e)
{
    std::vector<GradedElement::Term> out;
    for (const auto& [m, c] : x.terms()) {
        const int f = m.s_even_index();
        if (f < 0 || m.s_odd_index() >= 0 || m.has_top())
            continue;
        const Rational& pairing = x.model().gram(f, e);
        if (pairing != 0)
            out.emplace_back(m.j_part(), c * pairing);
    }
    return GradedElement::from_terms(x.model_ptr(), std::move(out));
}

GradedElement slant_top(const GradedElement& x)
{
    std::vector<GradedElement::Term> out;
    for (const auto& [m, c] : x.terms())
        if (m.has_top())
            out.emplace_back(m.j_part(), c);
    return GradedElement::from_terms(x.model_ptr(), std::move(out));
}

} // namespace wallcross
