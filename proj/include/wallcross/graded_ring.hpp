#ifndef WALLCROSS_GRADED_RING_HPP
#define WALLCROSS_GRADED_RING_HPP

// Exact arithmetic in H*(J) (x) H*(S): an exterior algebra on 2q odd degree-1
// Jacobian generators tensored with a model of the surface cohomology.
//
// Surface side generators:
//   b_1..b_2q        odd, degree 1, with b_i b_j = a_ij Sigma
//   even symbols     degree 2 (Sigma, zeta, K, alpha, ...), e.f = gram(e,f) [S]
//   [S]              degree 4, the orientation class
// Products of three or more odd surface classes vanish; this forces b_i Sigma = 0
// and makes the presentation associative. Everything above bidegree (2q, 4)
// is truncated.

#include "wallcross/errors.hpp"
#include "wallcross/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wallcross {

enum class Factor { J, S };
enum class Parity { Even, Odd };

struct GeneratorSpec {
    std::string name;
    Factor factor;
    int degree;
    Parity parity;
};

// Fixed positions of the four degree-2 symbols every model carries.
inline constexpr int kSigma = 0;
inline constexpr int kZeta = 1;
inline constexpr int kK = 2;
inline constexpr int kAlpha = 3;

using RationalMatrix = std::vector<std::vector<Rational>>;

class ModelSpec {
public:
    static constexpr int kTopS = 4;
    static constexpr int kMaxQ = 16;

    // `a_matrix` is the 2q x 2q antisymmetric integer matrix of b_i b_j = a_ij Sigma.
    // `symbols` must start with Sigma, zeta, K, alpha; `gram` is their symmetric
    // pairing matrix with gram[Sigma][Sigma] = 0.
    ModelSpec(int q, RationalMatrix a_matrix, std::vector<std::string> symbols, RationalMatrix gram);

    int q() const { return q_; }
    int top_J() const { return 2 * q_; }
    const Rational& a(int i, int j) const { return a_[i][j]; }
    const RationalMatrix& a_matrix() const { return a_; }
    const Rational& gram(int e, int f) const { return gram_[e][f]; }
    const RationalMatrix& gram_matrix() const { return gram_; }
    int symbol_count() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol_name(int e) const { return symbols_[e]; }
    int symbol_index(std::string_view name) const;
    std::vector<GeneratorSpec> generators() const;

    bool same_as(const ModelSpec& other) const;

private:
    int q_;
    RationalMatrix a_;
    std::vector<std::string> symbols_;
    RationalMatrix gram_;
};

using ModelPtr = std::shared_ptr<const ModelSpec>;

// A product of generators in canonical order: Jacobian classes by index, then
// at most one odd surface class, at most one even symbol, or the top class.
class Monomial {
public:
    constexpr Monomial() = default;

    static Monomial one() { return {}; }
    static Monomial jacobian(std::uint32_t mask);
    static Monomial j_odd(int i) { return jacobian(std::uint32_t{1} << i); }
    static Monomial s_odd(int i);
    static Monomial s_even(int e);
    static Monomial s_top();
    static Monomial from_key(std::uint64_t key);

    std::uint32_t j_mask() const { return static_cast<std::uint32_t>(key_ & 0xffffffffu); }
    int s_odd_index() const { return static_cast<int>((key_ >> 32) & 0xffu) - 1; }
    int s_even_index() const { return static_cast<int>((key_ >> 40) & 0xffu) - 1; }
    bool has_top() const { return ((key_ >> 48) & 1u) != 0; }
    bool is_one() const { return key_ == 0; }
    bool pure_jacobian() const { return (key_ >> 32) == 0; }

    int deg_J() const;
    int deg_S() const;
    int degree() const { return deg_J() + deg_S(); }

    std::uint64_t key() const { return key_; }
    Monomial j_part() const { return from_key(key_ & 0xffffffffu); }
    Monomial s_part() const { return from_key(key_ & ~std::uint64_t{0xffffffffu}); }

    std::string to_string(const ModelSpec& model) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::uint64_t key_ = 0;
};

class GradedElement {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit GradedElement(ModelPtr model);

    static GradedElement zero(ModelPtr model) { return GradedElement(std::move(model)); }
    static GradedElement scalar(ModelPtr model, const Rational& c);
    static GradedElement monomial(ModelPtr model, Monomial m, const Rational& c = 1);
    // Builds from arbitrary terms; duplicates are merged and zeros dropped.
    static GradedElement from_terms(ModelPtr model, std::vector<Term> terms);

    const ModelSpec& model() const { return *model_; }
    const ModelPtr& model_ptr() const { return model_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(Monomial m) const;
    Rational constant_term() const { return coefficient(Monomial::one()); }
    GradedElement component(int total_degree) const;
    GradedElement bidegree_component(int deg_J, int deg_S) const;
    // True when every term has the given total-degree parity.
    bool has_parity(int parity) const;
    // Homogeneous total degree, or -1 for zero / inhomogeneous elements.
    int homogeneous_degree() const;

    GradedElement& operator+=(const GradedElement& other);
    GradedElement& operator-=(const GradedElement& other);
    GradedElement& operator*=(const Rational& c);
    GradedElement operator-() const;

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
    friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
    friend bool operator==(const GradedElement& a, const GradedElement& b);

    // Canonical JSON term list: sorted monomials, coefficients as "num/den".
    std::string to_json() const;
    std::string to_string() const;

private:
    void check_same_model(const GradedElement& other) const;

    ModelPtr model_;
    std::vector<Term> terms_; // sorted by monomial, no zero coefficients
};

// Supercommutative product with Koszul signs and the surface structure constants.
GradedElement mul(const GradedElement& a, const GradedElement& b);
inline GradedElement operator*(const GradedElement& a, const GradedElement& b) { return mul(a, b); }

GradedElement power(const GradedElement& a, int n);

// sum a^n / n!, for `a` of even degree with no degree-0 part.
GradedElement exp_truncated(const GradedElement& a);

// b with a b = 1, for `a` with unit constant term.
GradedElement inverse_unit_series(const GradedElement& a);

// Coefficient of b_1^# ... b_2q^# [S]; that monomial integrates to 1.
Rational integrate(const GradedElement& a);

} // namespace wallcross

#endif
