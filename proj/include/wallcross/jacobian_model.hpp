#ifndef WALLCROSS_JACOBIAN_MODEL_HPP
#define WALLCROSS_JACOBIAN_MODEL_HPP

// The concrete cohomology model of J x S built from numeric pairing data, and
// the distinguished classes living on it.

#include "wallcross/graded_ring.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace wallcross {

// Intersection numbers among the degree-2 classes Sigma, zeta, K, alpha.
// Sigma.Sigma is always 0 and is not an input.
struct PairingValues {
    Rational zeta2 = 0;
    Rational zetaK = 0;
    Rational zetaAlpha = 0;
    Rational sigmaZeta = 0;
    Rational sigmaAlpha = 0;
    Rational sigmaK = 0;
    Rational K2 = 0;
    Rational Kalpha = 0;
    Rational alpha2 = 0;

    bool operator==(const PairingValues&) const = default;
};

struct PairingInput {
    int q = 0;
    // Exactly one of these describes omega; neither means a_i = 1 for i <= q.
    std::optional<std::vector<long>> a_blocks;
    std::optional<std::vector<std::vector<long>>> a_matrix;
    PairingValues pairings;
};

// The argument x^r alpha^s gamma_1..gamma_a A_1..A_b of the Donaldson functional.
// `gammas` are indices i of the H_1 basis classes delta_i, `threes` indices j of
// H_3 classes Poincare dual to b_j. Indices are 0-based.
struct InsertionWord {
    int r = 0;
    int s = 0;
    std::vector<int> gammas;
    std::vector<int> threes;

    // 4r + 2s + 3a + b; equals 2d for a word of the right degree.
    int real_degree() const;
    int odd_count() const { return static_cast<int>(gammas.size() + threes.size()); }
    bool operator==(const InsertionWord&) const = default;
};

// Expands block coefficients (a_1, ..., a_r), r <= q, to the antisymmetric matrix.
std::vector<std::vector<long>> block_matrix(int q, const std::vector<long>& blocks);

ModelPtr build_model(const PairingInput& input);

PairingInput parse_pairing_input(const nlohmann::json& doc);
nlohmann::json pairing_input_to_json(const PairingInput& input);

// Convenience handle bundling a model with its named classes.
class JacobianModel {
public:
    explicit JacobianModel(ModelPtr model);
    explicit JacobianModel(const PairingInput& input) : JacobianModel(build_model(input)) {}

    const ModelPtr& ptr() const { return model_; }
    const ModelSpec& spec() const { return *model_; }
    int q() const { return model_->q(); }

    GradedElement scalar(const Rational& c) const { return GradedElement::scalar(model_, c); }
    GradedElement symbol(int e) const;
    GradedElement sigma() const { return symbol(kSigma); }
    GradedElement zeta() const { return symbol(kZeta); }
    GradedElement K() const { return symbol(kK); }
    GradedElement alpha() const { return symbol(kAlpha); }
    GradedElement point() const; // [S]

    // E = c_1 of the universal bundle = sum_i b_i (x) b_i^#.
    GradedElement E() const;
    // omega = sum_{i<j} a_ij b_i^# b_j^#.
    GradedElement omega() const;
    // i_{b_i} omega = sum_j a_ij b_j^#.
    GradedElement interior_omega(int i) const;

    // e_D = c_1(F)^2 \ D = -2 (Sigma.D) omega for a degree-2 symbol D.
    GradedElement e_divisor(int e) const;
    GradedElement e_alpha() const { return e_divisor(kAlpha); }
    GradedElement e_zeta() const { return e_divisor(kZeta); }
    // e_{delta_i} = b_i^#.
    GradedElement e_gamma(int i) const;
    // e_{zeta A} for A dual to b_i: (Sigma.zeta) i_{b_i} omega.
    GradedElement e_zetaA(int i) const;

    // (1/q!) int_J omega^q; 1 when q = 0.
    Rational vol() const;

    // int_J gamma_1 .. gamma_a i_{A_1}omega .. i_{A_b}omega omega^{q-(a+b)/2};
    // zero when a+b is odd or the omega power would be negative.
    Rational F_functional(const InsertionWord& word) const;

private:
    void check_index(int i) const;

    ModelPtr model_;
};

enum class EClass { Alpha, Gamma, ZetaA };

GradedElement e_classes(const JacobianModel& model, EClass which, int index = 0);

// Slant product against the degree-2 symbol e: picks the terms whose surface
// part is a degree-2 symbol f and pairs f with e.
GradedElement slant_divisor(const GradedElement& x, int e);

// Slant product against the fundamental class: the [S]-coefficient as a J-class.
GradedElement slant_top(const GradedElement& x);

} // namespace wallcross

#endif
