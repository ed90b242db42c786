#include "wallcross/surfaces.hpp"

#include "wallcross/errors.hpp"

#include <sstream>

namespace wallcross {

long SurfaceData::pair(const LatticeVector& x, const LatticeVector& y) const
{
    if (x.size() != basis.size() || y.size() != basis.size())
        throw PreconditionError("vector length does not match the basis of " + name);
    long out = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out += x[i] * gram[i][j] * y[j];
    return out;
}

SurfaceData custom_surface(std::string name, int q, std::vector<std::string> basis, LatticeMatrix gram, LatticeVector K,
                           LatticeVector sigma, std::optional<ConeInequality> cone)
{
    const std::size_t n = basis.size();
    if (n == 0)
        throw PreconditionError("empty basis");
    if (q < 0)
        throw PreconditionError("q must be non-negative");
    if (gram.size() != n || K.size() != n || sigma.size() != n)
        throw PreconditionError("gram, K and Sigma must match the basis size");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n)
            throw PreconditionError("gram matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw PreconditionError("gram matrix must be symmetric");
    }
    if (cone && n != 2)
        throw PreconditionError("cone inequalities need a rank-2 basis");
    SurfaceData s{std::move(name), q, std::move(basis), std::move(gram), std::move(K), std::move(sigma), cone};
    if (s.square(s.sigma) != 0)
        throw PreconditionError("Sigma must have square zero");
    return s;
}

SurfaceData product_ruled(int g)
{
    if (g < 1)
        throw PreconditionError("genus must be at least 1");
    return custom_surface("product_ruled(" + std::to_string(g) + ")", g, {"f", "C"}, {{0, 1}, {1, 0}}, {2L * g - 2, -2},
                          {1, 0}, ConeInequality{1, g - 1});
}

SurfaceData odd_ruled(int g)
{
    if (g < 1)
        throw PreconditionError("genus must be at least 1");
    const long sigma2 = -(2L * g - 1);
    // a > b (2g-1)/2 written without fractions
    return custom_surface("odd_ruled(" + std::to_string(g) + ")", g, {"f", "sigma"}, {{0, 1}, {1, sigma2}},
                          {sigma2 + 2L * g - 2, -2}, {1, 0}, ConeInequality{2, 2L * g - 1});
}

SurfaceData surface_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw InputError("surface must be a JSON object");
    try {
        if (doc.contains("family")) {
            const std::string family = doc.at("family").get<std::string>();
            const int g = doc.at("g").get<int>();
            if (family == "product_ruled")
                return product_ruled(g);
            if (family == "odd_ruled")
                return odd_ruled(g);
            throw InputError("unknown surface family '" + family + "'");
        }
        std::optional<ConeInequality> cone;
        if (doc.contains("cone"))
            cone = ConeInequality{doc["cone"].at("a_coeff").get<long>(), doc["cone"].at("b_coeff").get<long>()};
        return custom_surface(doc.value("name", std::string("custom")), doc.at("q").get<int>(),
                              doc.at("basis").get<std::vector<std::string>>(), doc.at("gram").get<LatticeMatrix>(),
                              doc.at("K").get<LatticeVector>(), doc.at("Sigma").get<LatticeVector>(), cone);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed surface description: ") + e.what());
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
}

nlohmann::json surface_to_json(const SurfaceData& s)
{
    nlohmann::json doc = {{"name", s.name}, {"q", s.q}, {"basis", s.basis}, {"gram", s.gram}, {"K", s.K}, {"Sigma", s.sigma}};
    if (s.cone)
        doc["cone"] = {{"a_coeff", s.cone->a_coeff}, {"b_coeff", s.cone->b_coeff}};
    return doc;
}

PairingValues surface_pairings(const SurfaceData& s, const LatticeVector& zeta, const LatticeVector& alpha)
{
    PairingValues p;
    p.zeta2 = s.square(zeta);
    p.zetaK = s.pair(zeta, s.K);
    p.zetaAlpha = s.pair(zeta, alpha);
    p.sigmaZeta = s.pair(s.sigma, zeta);
    p.sigmaAlpha = s.pair(s.sigma, alpha);
    p.sigmaK = s.pair(s.sigma, s.K);
    p.K2 = s.square(s.K);
    p.Kalpha = s.pair(s.K, alpha);
    p.alpha2 = s.square(alpha);
    return p;
}

namespace {

bool congruent_mod2(const LatticeVector& x, const LatticeVector& y)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if ((x[i] - y[i]) % 2 != 0)
            return false;
    return true;
}

// First nonzero coordinate positive: picks one of +-zeta.
bool is_representative(const LatticeVector& x)
{
    for (long c : x)
        if (c != 0)
            return c > 0;
    return false;
}

// Odometer over [-bound, bound]^n.
bool next_vector(LatticeVector& x, long bound)
{
    for (auto& c : x) {
        if (c < bound) {
            ++c;
            return true;
        }
        c = -bound;
    }
    return false;
}

std::optional<WallRow> make_row(const SurfaceData& s, const LatticeVector& zeta, const LatticeVector& w, long p1,
                                const std::optional<LatticeVector>& alpha)
{
    const long zeta2 = s.square(zeta);
    if (!(p1 <= zeta2 && zeta2 < 0) || !congruent_mod2(zeta, w))
        return std::nullopt;
    WallRow row;
    row.zeta = zeta;
    if (zeta.size() == 2) {
        row.a = zeta[0];
        row.b = -zeta[1];
    }
    try {
        row.wall = make_wall(p1, s.q, zeta2, s.pair(zeta, s.K), s.pair(zeta, w), s.square(w), s.pair(w, s.K));
    } catch (const InvalidWallError&) {
        return std::nullopt;
    }
    if (alpha && row.wall.derived.l_zeta <= 1 && row.wall.derived.d >= 0) {
        const PairingValues p = surface_pairings(s, zeta, *alpha);
        // Sigma = f pairs the Jacobian generators with a_i = 1, so vol = 1.
        row.delta = row.wall.derived.l_zeta == 0 ? delta_l0(row.wall, p, 1, 0).value : delta_l1(row.wall, p, 1, 0).value;
    }
    return row;
}

} // namespace

std::vector<WallRow> enumerate_walls(const SurfaceData& s, const LatticeVector& w, long p1, long bound,
                                     const std::optional<LatticeVector>& alpha)
{
    if (bound <= 0)
        throw PreconditionError("bound must be positive");
    if (w.size() != s.basis.size())
        throw PreconditionError("w must have one coefficient per basis element");
    if (alpha && alpha->size() != s.basis.size())
        throw PreconditionError("alpha must have one coefficient per basis element");
    if (p1 > 0)
        throw PreconditionError("p1 must be <= 0");
    std::vector<WallRow> rows;
    const long w2 = s.square(w);
    if (((p1 - w2) % 4 + 4) % 4 != 0)
        return rows;

    if (s.cone) {
        for (long a = 1; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b) {
                if (!(s.cone->a_coeff * a > s.cone->b_coeff * b))
                    continue;
                if (auto row = make_row(s, {a, -b}, w, p1, alpha))
                    rows.push_back(std::move(*row));
            }
        return rows;
    }
    LatticeVector x(s.basis.size(), -bound);
    do {
        if (!is_representative(x))
            continue;
        if (auto row = make_row(s, x, w, p1, alpha))
            rows.push_back(std::move(*row));
    } while (next_vector(x, bound));
    return rows;
}

nlohmann::json walls_to_json(const std::vector<WallRow>& rows)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        const WallParams& p = r.wall.derived;
        nlohmann::json row = {{"zeta", r.zeta},     {"a", r.a},           {"b", r.b},
                              {"zeta2", r.wall.zeta2}, {"zetaK", r.wall.zetaK}, {"l_zeta", p.l_zeta},
                              {"h_zeta", p.h_plus},   {"h_minus_zeta", p.h_minus}, {"d", p.d},
                              {"delta", nullptr}};
        if (r.delta)
            row["delta"] = to_string(*r.delta);
        out.push_back(std::move(row));
    }
    return out;
}

std::string walls_to_csv(const std::vector<WallRow>& rows)
{
    std::ostringstream out;
    out << "zeta,a,b,zeta2,zetaK,l_zeta,h_zeta,h_minus_zeta,d,delta\n";
    for (const auto& r : rows) {
        const WallParams& p = r.wall.derived;
        // zeta coefficients joined by ';' to stay inside one CSV field
        for (std::size_t i = 0; i < r.zeta.size(); ++i)
            out << (i ? ";" : "") << r.zeta[i];
        out << ',' << r.a << ',' << r.b << ',' << r.wall.zeta2 << ',' << r.wall.zetaK << ',' << p.l_zeta << ',' << p.h_plus << ','
            << p.h_minus << ',' << p.d << ',' << (r.delta ? to_string(*r.delta) : "") << '\n';
    }
    return out.str();
}

} // namespace wallcross
