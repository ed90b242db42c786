#ifndef WALLCROSS_WALL_GEOMETRY_HPP
#define WALLCROSS_WALL_GEOMETRY_HPP

// Wall bookkeeping. Classes are never stored as lattice vectors, only through
// their pairings.

#include <json.hpp>

namespace wallcross {

struct WallParams {
    long d = 0;
    long l_zeta = 0;
    long h_plus = 0;  // h(zeta)
    long h_minus = 0; // h(-zeta)
    long N_plus = 0;  // N_zeta = rk E_zeta - 1
    long N_minus = 0; // N_{-zeta}
    // l_zeta = 0 and h(zeta) + q = 0: E_zeta is empty and the flip only adds a component.
    bool empty_E_side = false;
};

struct WallGeometry {
    long p1 = 0;
    int q = 0;
    long zeta2 = 0;
    long zetaK = 0;
    long zetaW = 0;
    long w2 = 0;
    long wK = 0;
    WallParams derived;
};

// d = -p1 - 3(1-q), l = (zeta^2 - p1)/4, h(+-zeta) = +-zeta.K/2 - zeta^2/2 - 1,
// N_{+-zeta} = l + h(+-zeta) + q - 1.
WallParams wall_params(long p1, int q, long zeta2, long zetaK);

// Validates the wall and the w data (zeta = w mod 2, p1 = w^2 mod 4) and fills `derived`.
WallGeometry make_wall(long p1, int q, long zeta2, long zetaK, long zetaW, long w2, long wK);

// (-1)^{((zeta - w)/2)^2}
int eps_kotschick(long zeta2, long zetaW, long w2);

// (-1)^{(K.w + w^2)/2}
int eps_complex(long wK, long w2);

WallGeometry parse_wall(const nlohmann::json& doc, int q, long zeta2, long zetaK);
nlohmann::json wall_to_json(const WallGeometry& wall);

} // namespace wallcross

#endif
