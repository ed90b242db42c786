#ifndef WALLCROSS_ORACLE_GENERAL_HPP
#define WALLCROSS_ORACLE_GENERAL_HPP

// Brute-force evaluation of the general wall-crossing formula on J x S for
// l_zeta in {0, 1}. The closed forms are tested against this.

#include "wallcross/char_classes.hpp"
#include "wallcross/closed_forms.hpp"
#include "wallcross/jacobian_model.hpp"
#include "wallcross/wall_geometry.hpp"

#include <utility>
#include <vector>

namespace wallcross {

enum class Side { Plus, Minus };

struct ExtensionBundleData {
    int k = 0;
    Side side = Side::Plus;
    ChernData ch;
};

// ch M_{+-zeta} = -pi_*(exp(+-(zeta + 2E)) td S) with td S = 1 - K/2 + (1-q)[S],
// a class on J (rank h(+-zeta) + q plus e_{K -+ 2zeta}).
GradedElement ch_M(const JacobianModel& model, Side side);

// (E_zeta^{l-k,k}, E_{-zeta}^{k,l-k}) for l = l_zeta in {0, 1}.
std::pair<ExtensionBundleData, ExtensionBundleData> ch_extension_bundles(const JacobianModel& model,
                                                                         const WallGeometry& wall, long l_zeta, int k);

// Chern data of E_zeta^{l-k,k} + (E_{-zeta}^{k,l-k})^dual.
ChernData segre_bundle(const JacobianModel& model, const WallGeometry& wall, int k);

// A polynomial in the formal variable X with coefficients in the model ring.
class XPolynomial {
public:
    explicit XPolynomial(ModelPtr model) : model_(std::move(model)) {}
    static XPolynomial constant(const GradedElement& c);
    // c0 + c1 X
    static XPolynomial linear(const GradedElement& c0, const GradedElement& c1);
    // sum_n coeffs[n] X^n; `coeffs` must be non-empty.
    static XPolynomial from_coeffs(std::vector<GradedElement> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const GradedElement& coeff(int n) const { return coeffs_[n]; }
    const std::vector<GradedElement>& coeffs() const { return coeffs_; }

    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);

    // sum_N c_N table[N]; `table` must cover the degree.
    GradedElement substitute(const std::vector<GradedElement>& table) const;

private:
    ModelPtr model_;
    std::vector<GradedElement> coeffs_;
};

XPolynomial power(const XPolynomial& p, int n);

enum class L0Branch {
    Auto,      // empty-side formula exactly when l_zeta = 0 and h(zeta) + q = 0
    Generic,   // X^N = (-1)^{N - N_-} s_{N-1-N_+-N_-}(E_zeta + E_{-zeta}^dual)
    EmptySide  // X^N = s_{N - N_-}(E_{-zeta}); needs h(zeta) + q = 0
};

// Table of X^N for N = 0..n_max in the given branch.
std::vector<GradedElement> x_table_l0(const JacobianModel& model, const WallGeometry& wall, int n_max,
                                      L0Branch branch);
// Sum over k = 0, 1 of the generic substitution for l_zeta = 1.
std::vector<GradedElement> x_table_l1(const JacobianModel& model, const WallGeometry& wall, int n_max);

// epsilon_S(w) (-1/4 X^2)^r (-e_a + aX)^s (e_g X)..(-e_{zeta A})..
// integrated over J.
DeltaValue delta_oracle_l0(const JacobianModel& model, const WallGeometry& wall, const InsertionWord& word,
                           L0Branch branch = L0Branch::Auto);

// epsilon_S(w) ([S] - X^2/4)^r (alpha - e_a + aX)^{d-2r} integrated over J x S.
DeltaValue delta_oracle_l1(const JacobianModel& model, const WallGeometry& wall, int r);

// Throws PreconditionError when the model's zeta^2 or zeta.K disagrees with the wall.
void check_model_matches_wall(const JacobianModel& model, const WallGeometry& wall);

} // namespace wallcross

#endif
