#include "wallcross/graded_ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace wallcross {

namespace {

constexpr std::uint64_t kOddShift = 32;
constexpr std::uint64_t kEvenShift = 40;
constexpr std::uint64_t kTopBit = std::uint64_t{1} << 48;

const char* const kRequiredSymbols[] = {"Sigma", "zeta", "K", "alpha"};

} // namespace

ModelSpec::ModelSpec(int q, RationalMatrix a_matrix, std::vector<std::string> symbols, RationalMatrix gram)
    : q_(q), a_(std::move(a_matrix)), symbols_(std::move(symbols)), gram_(std::move(gram))
{
    if (q < 0 || q > kMaxQ)
        throw PreconditionError("q must lie in [0, " + std::to_string(kMaxQ) + "]");
    const std::size_t n = 2 * static_cast<std::size_t>(q);
    if (a_.size() != n)
        throw PreconditionError("a_matrix has " + std::to_string(a_.size()) + " rows, expected 2q = " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a_[i].size() != n)
            throw PreconditionError("a_matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(a_[i][j]))
                throw PreconditionError("a_matrix entries must be integers");
            if (a_[i][j] != -a_[j][i])
                throw PreconditionError("a_matrix must be antisymmetric");
        }
    }
    if (symbols_.size() < 4 || symbols_.size() > 254)
        throw PreconditionError("a model needs the symbols Sigma, zeta, K, alpha (and at most 250 more)");
    for (int e = 0; e < 4; ++e)
        if (symbols_[e] != kRequiredSymbols[e])
            throw PreconditionError(std::string("symbol ") + std::to_string(e) + " must be " + kRequiredSymbols[e]);
    if (gram_.size() != symbols_.size())
        throw PreconditionError("gram matrix size does not match the symbol list");
    for (std::size_t e = 0; e < gram_.size(); ++e) {
        if (gram_[e].size() != symbols_.size())
            throw PreconditionError("gram matrix is not square");
        for (std::size_t f = 0; f < e; ++f)
            if (gram_[e][f] != gram_[f][e])
                throw PreconditionError("gram matrix must be symmetric");
    }
    if (gram_[kSigma][kSigma] != 0)
        throw PreconditionError("Sigma.Sigma must vanish");
}

int ModelSpec::symbol_index(std::string_view name) const
{
    for (int e = 0; e < symbol_count(); ++e)
        if (symbols_[e] == name)
            return e;
    throw PreconditionError("unknown even symbol '" + std::string(name) + "'");
}

std::vector<GeneratorSpec> ModelSpec::generators() const
{
    std::vector<GeneratorSpec> out;
    for (int i = 0; i < top_J(); ++i)
        out.push_back({"b" + std::to_string(i + 1) + "#", Factor::J, 1, Parity::Odd});
    for (int i = 0; i < top_J(); ++i)
        out.push_back({"b" + std::to_string(i + 1), Factor::S, 1, Parity::Odd});
    for (const auto& s : symbols_)
        out.push_back({s, Factor::S, 2, Parity::Even});
    out.push_back({"[S]", Factor::S, 4, Parity::Even});
    return out;
}

bool ModelSpec::same_as(const ModelSpec& other) const
{
    return this == &other || (q_ == other.q_ && a_ == other.a_ && symbols_ == other.symbols_ && gram_ == other.gram_);
}

// ---------------------------------------------------------------------------

Monomial Monomial::jacobian(std::uint32_t mask) { return from_key(mask); }

Monomial Monomial::s_odd(int i) { return from_key(static_cast<std::uint64_t>(i + 1) << kOddShift); }

Monomial Monomial::s_even(int e) { return from_key(static_cast<std::uint64_t>(e + 1) << kEvenShift); }

Monomial Monomial::s_top() { return from_key(kTopBit); }

Monomial Monomial::from_key(std::uint64_t key)
{
    Monomial m;
    m.key_ = key;
    return m;
}

int Monomial::deg_J() const { return std::popcount(j_mask()); }

int Monomial::deg_S() const
{
    return (s_odd_index() >= 0 ? 1 : 0) + (s_even_index() >= 0 ? 2 : 0) + (has_top() ? 4 : 0);
}

std::string Monomial::to_string(const ModelSpec& model) const
{
    std::vector<std::string> parts;
    for (int i = 0; i < 32; ++i)
        if (j_mask() & (std::uint32_t{1} << i))
            parts.push_back("b" + std::to_string(i + 1) + "#");
    if (s_odd_index() >= 0)
        parts.push_back("b" + std::to_string(s_odd_index() + 1));
    if (s_even_index() >= 0)
        parts.push_back(model.symbol_name(s_even_index()));
    if (has_top())
        parts.push_back("[S]");
    if (parts.empty())
        return "1";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
        out += "*" + parts[k];
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using Term = GradedElement::Term;

void normalize(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = terms[i].second;
        while (j < terms.size() && terms[j].first == terms[i].first) {
            sum += terms[j].second;
            ++j;
        }
        if (sum != 0) {
            terms[out].first = terms[i].first;
            terms[out].second = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Sign of the exterior product of two disjoint sets of ordered odd generators.
int merge_sign(std::uint32_t left, std::uint32_t right)
{
    int swaps = 0;
    while (right != 0) {
        const int j = std::countr_zero(right);
        right &= right - 1;
        swaps += std::popcount(j >= 31 ? 0u : (left >> (j + 1)));
    }
    return (swaps & 1) ? -1 : 1;
}

// Product of two surface-side monomials. Returns false for zero; otherwise the
// product is factor * result.
bool surface_product(const ModelSpec& model, Monomial x, Monomial y, Rational& factor, Monomial& result)
{
    if (x.is_one()) {
        factor = 1;
        result = y;
        return true;
    }
    if (y.is_one()) {
        factor = 1;
        result = x;
        return true;
    }
    if (x.deg_S() + y.deg_S() > ModelSpec::kTopS)
        return false;
    const int xo = x.s_odd_index(), xe = x.s_even_index();
    const int yo = y.s_odd_index(), ye = y.s_even_index();
    // Degree <= 4 and both non-trivial: neither factor is [S].
    if (xo >= 0 && xe < 0 && yo >= 0 && ye < 0) { // b_i b_j
        factor = model.a(xo, yo);
        result = Monomial::s_even(kSigma);
        return factor != 0;
    }
    if (xo >= 0 && xe < 0 && yo < 0 && ye >= 0) { // b_i e
        if (ye == kSigma)
            return false;
        factor = 1;
        result = Monomial::from_key(x.key() | y.key());
        return true;
    }
    if (xo < 0 && xe >= 0 && yo >= 0 && ye < 0) { // e b_i = b_i e
        if (xe == kSigma)
            return false;
        factor = 1;
        result = Monomial::from_key(x.key() | y.key());
        return true;
    }
    if (xo < 0 && xe >= 0 && yo < 0 && ye >= 0) { // e f
        factor = model.gram(xe, ye);
        result = Monomial::s_top();
        return factor != 0;
    }
    // b_i (b_j e) or (b_i e) b_j: both reduce to a_ij Sigma.e [S].
    const int i = xo;
    const int j = yo;
    const int e = xe >= 0 ? xe : ye;
    factor = model.a(i, j) * model.gram(kSigma, e);
    result = Monomial::s_top();
    return factor != 0;
}

} // namespace

GradedElement::GradedElement(ModelPtr model) : model_(std::move(model))
{
    if (!model_)
        throw PreconditionError("graded element without a model");
}

GradedElement GradedElement::scalar(ModelPtr model, const Rational& c)
{
    return monomial(std::move(model), Monomial::one(), c);
}

GradedElement GradedElement::monomial(ModelPtr model, Monomial m, const Rational& c)
{
    std::vector<Term> terms;
    terms.emplace_back(m, c);
    return from_terms(std::move(model), std::move(terms));
}

GradedElement GradedElement::from_terms(ModelPtr model, std::vector<Term> terms)
{
    GradedElement out(std::move(model));
    const ModelSpec& spec = *out.model_;
    const std::uint32_t j_limit = spec.q() >= 16 ? 0xffffffffu : ((std::uint32_t{1} << spec.top_J()) - 1);
    for (const auto& [m, c] : terms) {
        if ((m.j_mask() & ~j_limit) != 0)
            throw PreconditionError("Jacobian generator index out of range");
        if (m.s_odd_index() >= spec.top_J() || m.s_even_index() >= spec.symbol_count())
            throw PreconditionError("surface generator index out of range");
        if (m.deg_S() > ModelSpec::kTopS)
            throw PreconditionError("monomial is not in canonical form");
        if (m.s_odd_index() >= 0 && m.s_even_index() == kSigma)
            throw PreconditionError("b_i Sigma is not a canonical monomial");
    }
    out.terms_ = std::move(terms);
    normalize(out.terms_);
    return out;
}

Rational GradedElement::coefficient(Monomial m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial key) { return t.first < key; });
    if (it != terms_.end() && it->first == m)
        return it->second;
    return 0;
}

GradedElement GradedElement::component(int total_degree) const
{
    GradedElement out(model_);
    for (const auto& t : terms_)
        if (t.first.degree() == total_degree)
            out.terms_.push_back(t);
    return out;
}

GradedElement GradedElement::bidegree_component(int deg_J, int deg_S) const
{
    GradedElement out(model_);
    for (const auto& t : terms_)
        if (t.first.deg_J() == deg_J && t.first.deg_S() == deg_S)
            out.terms_.push_back(t);
    return out;
}

bool GradedElement::has_parity(int parity) const
{
    return std::all_of(terms_.begin(), terms_.end(), [parity](const Term& t) { return t.first.degree() % 2 == parity; });
}

int GradedElement::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    const int deg = terms_.front().first.degree();
    for (const auto& t : terms_)
        if (t.first.degree() != deg)
            return -1;
    return deg;
}

void GradedElement::check_same_model(const GradedElement& other) const
{
    if (!model_->same_as(*other.model_))
        throw ModelMismatchError("graded elements belong to different models");
}

GradedElement& GradedElement::operator+=(const GradedElement& other)
{
    check_same_model(other);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational sum = a->second + b->second;
            if (sum != 0)
                merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) { return *this += -other; }

GradedElement& GradedElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

GradedElement GradedElement::operator-() const
{
    GradedElement out = *this;
    for (auto& t : out.terms_)
        t.second = -t.second;
    return out;
}

bool operator==(const GradedElement& a, const GradedElement& b)
{
    return a.model_->same_as(*b.model_) && a.terms_ == b.terms_;
}

std::string GradedElement::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        list.push_back({{"monomial", m.to_string(*model_)}, {"coefficient", wallcross::to_string(c)}});
    return list.dump();
}

std::string GradedElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << wallcross::to_string(c) << ")";
        if (!m.is_one())
            out << "*" << m.to_string(*model_);
    }
    return out.str();
}

// ---------------------------------------------------------------------------

GradedElement mul(const GradedElement& a, const GradedElement& b)
{
    if (!a.model().same_as(b.model()))
        throw ModelMismatchError("graded elements belong to different models");
    const ModelSpec& model = a.model();
    std::vector<Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    Rational factor;
    Monomial s_result;
    for (const auto& [ma, ca] : a.terms()) {
        const std::uint32_t ja = ma.j_mask();
        const Monomial sa = ma.s_part();
        const int sa_parity = ma.deg_S() & 1;
        for (const auto& [mb, cb] : b.terms()) {
            const std::uint32_t jb = mb.j_mask();
            if ((ja & jb) != 0)
                continue;
            const Monomial sb = mb.s_part();
            if (!surface_product(model, sa, sb, factor, s_result))
                continue;
            int sign = merge_sign(ja, jb);
            // Moving the surface part of `a` past the Jacobian part of `b`.
            if (sa_parity == 1 && (std::popcount(jb) & 1) == 1)
                sign = -sign;
            Rational c = ca * cb;
            if (factor != 1)
                c *= factor;
            if (sign < 0)
                c = -c;
            out.emplace_back(Monomial::from_key(static_cast<std::uint64_t>(ja | jb) | s_result.key()), std::move(c));
        }
    }
    return GradedElement::from_terms(a.model_ptr(), std::move(out));
}

GradedElement power(const GradedElement& a, int n)
{
    if (n < 0)
        throw PreconditionError("negative power");
    GradedElement result = GradedElement::scalar(a.model_ptr(), 1);
    GradedElement base = a;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

GradedElement exp_truncated(const GradedElement& a)
{
    if (a.constant_term() != 0)
        throw PreconditionError("exp_truncated needs an element without degree-0 part");
    if (!a.has_parity(0))
        throw PreconditionError("exp_truncated needs an even element");
    const int top = a.model().top_J() + ModelSpec::kTopS;
    GradedElement result = GradedElement::scalar(a.model_ptr(), 1);
    GradedElement term = result;
    for (int n = 1; n <= top; ++n) {
        term = term * a;
        term *= Rational(1, n);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

GradedElement inverse_unit_series(const GradedElement& a)
{
    if (a.constant_term() != 1)
        throw PreconditionError("inverse_unit_series needs constant term 1");
    const GradedElement one = GradedElement::scalar(a.model_ptr(), 1);
    const GradedElement nil = one - a; // a = 1 - nil, a^{-1} = sum nil^k
    const int top = a.model().top_J() + ModelSpec::kTopS;
    GradedElement result = one;
    GradedElement term = one;
    for (int k = 1; k <= top; ++k) {
        term = term * nil;
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

Rational integrate(const GradedElement& a)
{
    const int n = a.model().top_J();
    const std::uint32_t mask = n >= 32 ? 0xffffffffu : ((std::uint32_t{1} << n) - 1);
    return a.coefficient(Monomial::from_key(static_cast<std::uint64_t>(mask) | Monomial::s_top().key()));
}

} // namespace wallcross
