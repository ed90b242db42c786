#include "wallcross/wall_geometry.hpp"

#include "wallcross/errors.hpp"

#include <string>

namespace wallcross {

namespace {

long floor_mod(long x, long m)
{
    const long r = x % m;
    return r < 0 ? r + m : r;
}

} // namespace

WallParams wall_params(long p1, int q, long zeta2, long zetaK)
{
    if (q < 0)
        throw InvalidWallError("q must be non-negative");
    if (p1 > 0)
        throw InvalidWallError("p1 must be <= 0");
    if (!(p1 <= zeta2 && zeta2 < 0))
        throw InvalidWallError("wall condition p1 <= zeta^2 < 0 fails (p1 = " + std::to_string(p1) +
                               ", zeta^2 = " + std::to_string(zeta2) + ")");
    if (floor_mod(zeta2 - p1, 4) != 0)
        throw InvalidWallError("zeta^2 - p1 must be divisible by 4");
    if (floor_mod(zetaK - zeta2, 2) != 0)
        throw InvalidWallError("h(zeta) is not an integer: zeta.K and zeta^2 must have equal parity");

    WallParams w;
    w.d = -p1 - 3 * (1 - q);
    w.l_zeta = (zeta2 - p1) / 4;
    w.h_plus = (zetaK - zeta2) / 2 - 1;
    w.h_minus = (-zetaK - zeta2) / 2 - 1;
    if (w.l_zeta + w.h_plus + q < 0)
        throw InvalidWallError("negative rank l + h(zeta) + q = " + std::to_string(w.l_zeta + w.h_plus + q));
    if (w.l_zeta + w.h_minus + q < 0)
        throw InvalidWallError("negative rank l + h(-zeta) + q = " + std::to_string(w.l_zeta + w.h_minus + q));
    w.N_plus = w.l_zeta + w.h_plus + q - 1;
    w.N_minus = w.l_zeta + w.h_minus + q - 1;
    w.empty_E_side = (w.l_zeta == 0 && w.h_plus + q == 0);
    return w;
}

WallGeometry make_wall(long p1, int q, long zeta2, long zetaK, long zetaW, long w2, long wK)
{
    WallGeometry wall{p1, q, zeta2, zetaK, zetaW, w2, wK, wall_params(p1, q, zeta2, zetaK)};
    if (floor_mod(zeta2 - 2 * zetaW + w2, 4) != 0)
        throw InvalidWallError("zeta is not congruent to w mod 2: (zeta - w)^2 must be divisible by 4");
    if (floor_mod(p1 - w2, 4) != 0)
        throw InvalidWallError("p1 must be congruent to w^2 mod 4");
    if (floor_mod(wK + w2, 2) != 0)
        throw InvalidWallError("K.w + w^2 must be even");
    return wall;
}

int eps_kotschick(long zeta2, long zetaW, long w2)
{
    const long num = zeta2 - 2 * zetaW + w2;
    if (floor_mod(num, 4) != 0)
        throw InvalidWallError("((zeta - w)/2)^2 is not an integer");
    return floor_mod(num / 4, 2) == 0 ? 1 : -1;
}

int eps_complex(long wK, long w2)
{
    const long num = wK + w2;
    if (floor_mod(num, 2) != 0)
        throw InvalidWallError("K.w + w^2 must be even");
    return floor_mod(num / 2, 2) == 0 ? 1 : -1;
}

WallGeometry parse_wall(const nlohmann::json& doc, int q, long zeta2, long zetaK)
{
    if (!doc.is_object())
        throw InputError("'wall' must be an object with p1, zetaW, w2, wK");
    auto get = [&](const char* key) -> long {
        if (!doc.contains(key) || !doc[key].is_number_integer())
            throw InputError(std::string("wall field '") + key + "' must be an integer");
        return doc[key].get<long>();
    };
    return make_wall(get("p1"), q, zeta2, zetaK, get("zetaW"), get("w2"), get("wK"));
}

nlohmann::json wall_to_json(const WallGeometry& wall)
{
    const WallParams& p = wall.derived;
    return {{"p1", wall.p1},          {"q", wall.q},           {"zeta2", wall.zeta2},
            {"zetaK", wall.zetaK},    {"zetaW", wall.zetaW},   {"w2", wall.w2},
            {"wK", wall.wK},          {"d", p.d},              {"l_zeta", p.l_zeta},
            {"h_zeta", p.h_plus},     {"h_minus_zeta", p.h_minus}, {"N_zeta", p.N_plus},
            {"N_minus_zeta", p.N_minus}, {"empty_E_side", p.empty_E_side}};
}

} // namespace wallcross
