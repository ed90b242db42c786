#ifndef WALLCROSS_CLOSED_FORMS_HPP
#define WALLCROSS_CLOSED_FORMS_HPP

// Closed-form wall-crossing terms for l_zeta = 0 and 1, the Segre classes s_n
// of the l_zeta = 1 extension bundles, and the two leading terms in a for any l_zeta.

#include "wallcross/char_classes.hpp"
#include "wallcross/jacobian_model.hpp"
#include "wallcross/wall_geometry.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace wallcross {

enum class DeltaPath { ClosedForm, RingOracle, LeadingTerm };

std::string to_string(DeltaPath path);

struct DeltaValue {
    Rational value;
    DeltaPath path = DeltaPath::ClosedForm;
    WallGeometry wall;
    InsertionWord word;
    // Leading-term values are only determined modulo a^{modulus_exponent}.
    std::optional<long> modulus_exponent;
};

nlohmann::json delta_to_json(const DeltaValue& value);

// Throws PreconditionError when the pairing data disagrees with the wall on zeta^2 or zeta.K.
void check_consistent(const WallGeometry& wall, const PairingValues& pairings);

// delta(x^r alpha^{d-2r}) for l_zeta = 0.
DeltaValue delta_l0(const WallGeometry& wall, const PairingValues& pairings, const Rational& vol, int r);

// delta(x^r alpha^s gamma_1..gamma_a A_1..A_b) for l_zeta = 0, through F(z).
DeltaValue delta_l0_odd(const WallGeometry& wall, const JacobianModel& model, const InsertionWord& word);

// delta(x^r alpha^{d-2r}) for l_zeta = 1.
DeltaValue delta_l1(const WallGeometry& wall, const PairingValues& pairings, const Rational& vol, int r);

// s_n = s_n(E^{1,0}_zeta + (E^{0,1}_{-zeta})^dual) + s_n(E^{0,1}_zeta + (E^{1,0}_{-zeta})^dual)
// on J x S for l_zeta = 1.
GradedElement sn_closed(const JacobianModel& model, int n);

// a_1 = -4 e_zeta + 2 zeta + 4E, a_2 = 2 zeta^2 + 8E^2 + K^2 + 8E zeta, a_3 = 24 E^2 zeta.
ChernData In_chern_data(const JacobianModel& model);

// I_n as the defining determinant, n! times the Segre class of In_chern_data.
GradedElement In_determinant(const JacobianModel& model, int n);
GradedElement In_recursive(const JacobianModel& model, int n);
GradedElement In_closed(const JacobianModel& model, int n);

enum class LeadingIndex {
    Top,          // S_{2l, q}
    HilbertBelow, // S_{2l-1, q}
    JacobianBelow // S_{2l, q-1}
};

// S_{j,b} after integrating over the Hilbert scheme factor: a class on J.
GradedElement leading_Sjb(const JacobianModel& model, long l_zeta, LeadingIndex which);

// Two leading powers of a = zeta.alpha/2 in delta(x^r alpha^{d-2r}); the value is
// a representative modulo a^{d-2r-2l-q+2}.
DeltaValue delta_leading(const WallGeometry& wall, const PairingValues& pairings, const Rational& vol, int r);

// 2^e for any integer e.
Rational pow2(long e);

} // namespace wallcross

#endif
