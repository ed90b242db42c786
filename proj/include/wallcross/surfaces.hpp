#ifndef WALLCROSS_SURFACES_HPP
#define WALLCROSS_SURFACES_HPP

// Intersection data of minimal ruled surfaces and enumeration of their walls.

#include "wallcross/closed_forms.hpp"
#include "wallcross/wall_geometry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wallcross {

using LatticeVector = std::vector<long>;
using LatticeMatrix = std::vector<std::vector<long>>;

// zeta = a e_0 - b e_1 is admissible when a, b > 0 and a_coeff * a > b_coeff * b.
struct ConeInequality {
    long a_coeff = 1;
    long b_coeff = 0;
};

struct SurfaceData {
    std::string name;
    int q = 0;
    std::vector<std::string> basis;
    LatticeMatrix gram;
    LatticeVector K;
    LatticeVector sigma;
    std::optional<ConeInequality> cone;

    long pair(const LatticeVector& x, const LatticeVector& y) const;
    long square(const LatticeVector& x) const { return pair(x, x); }
};

// CP^1 x C_g with basis {f, C}: f^2 = C^2 = 0, f.C = 1, K = (2g-2) f - 2C, Sigma = f.
SurfaceData product_ruled(int g);
// The non-trivial S^2-bundle over C_g with basis {f, sigma}: sigma^2 = -(2g-1),
// K = (sigma^2 + 2g - 2) f - 2 sigma, Sigma = f.
SurfaceData odd_ruled(int g);
// Arbitrary lattice data; no cone filter unless one is given.
SurfaceData custom_surface(std::string name, int q, std::vector<std::string> basis, LatticeMatrix gram, LatticeVector K,
                           LatticeVector sigma, std::optional<ConeInequality> cone = std::nullopt);

SurfaceData surface_from_json(const nlohmann::json& doc);
nlohmann::json surface_to_json(const SurfaceData& surface);

struct WallRow {
    LatticeVector zeta;
    // Coefficients in zeta = a e_0 - b e_1; only meaningful for rank-2 bases.
    long a = 0;
    long b = 0;
    WallGeometry wall;
    // delta(alpha^d) for l_zeta <= 1 when an alpha vector was supplied.
    std::optional<Rational> delta;
};

// All walls zeta of type (w, p1) with |coefficients| <= bound: zeta = w mod 2,
// p1 <= zeta^2 < 0, inside the cone when the surface has one, one of each +-zeta
// pair. Candidates failing the wall validity checks are skipped. A p1 with the
// wrong parity (p1 != w^2 mod 4) yields an empty list.
std::vector<WallRow> enumerate_walls(const SurfaceData& surface, const LatticeVector& w, long p1, long bound,
                                     const std::optional<LatticeVector>& alpha = std::nullopt);

// Pairing data for the Jacobian model of `surface` with the given zeta and alpha.
PairingValues surface_pairings(const SurfaceData& surface, const LatticeVector& zeta, const LatticeVector& alpha);

nlohmann::json walls_to_json(const std::vector<WallRow>& rows);
std::string walls_to_csv(const std::vector<WallRow>& rows);

} // namespace wallcross

#endif
