#include "wallcross/char_classes.hpp"

#include <algorithm>

namespace wallcross {

GradedElement ChernData::component(int i, const ModelPtr& model) const
{
    if (i >= 1 && i <= static_cast<int>(a.size()))
        return a[i - 1];
    return GradedElement::zero(model);
}

int max_class_index(const ModelSpec& model) { return (model.top_J() + ModelSpec::kTopS) / 2; }

ChernData chern_data_from_ch(const GradedElement& ch)
{
    if (!ch.has_parity(0))
        throw PreconditionError("a Chern character has only even-degree components");
    ChernData out;
    out.rank = ch.constant_term();
    const int top = max_class_index(ch.model());
    for (int i = 1; i <= top; ++i)
        out.a.push_back(ch.component(2 * i) * Rational(factorial(i)));
    while (!out.a.empty() && out.a.back().is_zero())
        out.a.pop_back();
    return out;
}

GradedElement total_ch(const ChernData& data, const ModelPtr& model)
{
    GradedElement out = GradedElement::scalar(model, data.rank);
    for (std::size_t i = 0; i < data.a.size(); ++i)
        out += data.a[i] * Rational(Integer(1), factorial(static_cast<long>(i + 1)));
    return out;
}

namespace {

void check_models(const ChernData& data, const ModelPtr& model)
{
    for (const auto& x : data.a)
        if (!x.model().same_as(*model))
            throw ModelMismatchError("Chern data belongs to a different model");
}

// det of the n x n lower Hessenberg matrix with entries below/on the diagonal
// entry(i, j) = sub[i - j] (i >= j) and superdiagonal entries super[i] at (i, i+1).
// Expansion along the last row of each leading minor:
//   D_k = sum_{i=1..k} (-1)^{k-i} h(k,i) prod_{j=i}^{k-1} h(j,j+1) D_{i-1}.
GradedElement hessenberg_det(const std::vector<GradedElement>& sub, const std::vector<Rational>& super, int n,
                             const ModelPtr& model)
{
    std::vector<GradedElement> minors;
    minors.push_back(GradedElement::scalar(model, 1));
    for (int k = 1; k <= n; ++k) {
        GradedElement dk = GradedElement::zero(model);
        Rational chain = 1; // prod_{j=i}^{k-1} super[j-1], built as i decreases
        for (int i = k; i >= 1; --i) {
            if (i < k)
                chain *= super[i - 1];
            if (chain == 0)
                break;
            const GradedElement& entry = sub[k - i];
            if (entry.is_zero())
                continue;
            GradedElement term = entry * minors[i - 1];
            term *= ((k - i) % 2 == 0) ? chain : Rational(-chain);
            dk += term;
        }
        minors.push_back(std::move(dk));
    }
    return minors[n];
}

} // namespace

GradedElement chern_from_ch(const ChernData& data, int n, const ModelPtr& model)
{
    if (n < 0)
        throw PreconditionError("Chern class index must be non-negative");
    check_models(data, model);
    if (n == 0)
        return GradedElement::scalar(model, 1);
    std::vector<GradedElement> sub;
    for (int i = 1; i <= n; ++i)
        sub.push_back(data.component(i, model));
    std::vector<Rational> super;
    for (int i = 1; i < n; ++i)
        super.emplace_back(n - i);
    return hessenberg_det(sub, super, n, model) * Rational(Integer(1), factorial(n));
}

GradedElement segre_from_ch(const ChernData& data, int n, const ModelPtr& model)
{
    if (n < 0)
        throw PreconditionError("Segre class index must be non-negative");
    check_models(data, model);
    if (n == 0)
        return GradedElement::scalar(model, 1);
    std::vector<GradedElement> sub;
    for (int i = 1; i <= n; ++i)
        sub.push_back(i % 2 == 0 ? data.component(i, model) : -data.component(i, model));
    std::vector<Rational> super;
    for (int i = 1; i < n; ++i)
        super.emplace_back(-(n - i));
    return hessenberg_det(sub, super, n, model) * Rational(Integer(1), factorial(n));
}

GradedElement total_chern(const ChernData& data, const ModelPtr& model)
{
    GradedElement out = GradedElement::scalar(model, 1);
    for (int n = 1; n <= max_class_index(*model); ++n)
        out += chern_from_ch(data, n, model);
    return out;
}

ChernData ch_dual(const ChernData& data)
{
    ChernData out = data;
    for (std::size_t i = 0; i < out.a.size(); ++i)
        if ((i + 1) % 2 == 1)
            out.a[i] = -out.a[i];
    return out;
}

ChernData ch_direct_sum(const ChernData& x, const ChernData& y)
{
    ChernData out;
    out.rank = x.rank + y.rank;
    const std::size_t n = std::max(x.a.size(), y.a.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < x.a.size() && i < y.a.size())
            out.a.push_back(x.a[i] + y.a[i]);
        else
            out.a.push_back(i < x.a.size() ? x.a[i] : y.a[i]);
    }
    return out;
}

} // namespace wallcross
