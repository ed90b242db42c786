#include "cli.hpp"

#include "wallcross/closed_forms.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/oracle_general.hpp"
#include "wallcross/surfaces.hpp"
#include "wallcross/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wallcross::cli {

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

json read_json(const std::string& path)
{
    if (path.empty())
        throw InputError("--input is required for this command");
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

long integral(const Rational& x, const char* what)
{
    if (!is_integer(x))
        throw InputError(std::string(what) + " must be an integer");
    return x.get_num().get_si();
}

std::vector<long> parse_vector(const std::string& text)
{
    std::vector<long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad vector component '" + item + "' in '" + text + "'");
        }
    }
    return out;
}

json envelope(const RunConfig& config)
{
    json doc = {{"schema_version", kSchemaVersion}, {"command", config.command}};
    if (config.meta) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        doc["meta"] = {{"version", kVersion},
                       {"input", config.input},
                       {"unix_time", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    }
    return doc;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---------------------------------------------------------------------------
// params

int cmd_params(const RunConfig& config, std::ostream& out)
{
    const json doc = read_json(config.input);
    WallGeometry wall;
    if (doc.contains("pairings")) {
        const PairingInput in = parse_pairing_input(doc);
        if (!doc.contains("wall"))
            throw InputError("missing object field 'wall'");
        wall = parse_wall(doc["wall"], in.q, integral(in.pairings.zeta2, "zeta2"), integral(in.pairings.zetaK, "zetaK"));
    } else {
        auto get = [&](const char* key) -> long {
            if (!doc.contains(key) || !doc[key].is_number_integer())
                throw InputError(std::string("field '") + key + "' must be an integer");
            return doc[key].get<long>();
        };
        wall = make_wall(get("p1"), static_cast<int>(get("q")), get("zeta2"), get("zetaK"), get("zetaW"), get("w2"),
                         get("wK"));
    }
    json row = wall_to_json(wall);
    row["epsilon"] = eps_kotschick(wall.zeta2, wall.zetaW, wall.w2);
    row["epsilon_S"] = eps_complex(wall.wK, wall.w2);
    if (config.output == Output::Csv) {
        out << "p1,q,zeta2,zetaK,zetaW,w2,wK,d,l_zeta,h_zeta,h_minus_zeta,N_zeta,N_minus_zeta,empty_E_side,epsilon,epsilon_S\n";
        const WallParams& p = wall.derived;
        out << wall.p1 << ',' << wall.q << ',' << wall.zeta2 << ',' << wall.zetaK << ',' << wall.zetaW << ',' << wall.w2
            << ',' << wall.wK << ',' << p.d << ',' << p.l_zeta << ',' << p.h_plus << ',' << p.h_minus << ',' << p.N_plus
            << ',' << p.N_minus << ',' << (p.empty_E_side ? "true" : "false") << ',' << row["epsilon"] << ','
            << row["epsilon_S"] << '\n';
        return kOk;
    }
    json doc_out = envelope(config);
    doc_out["wall"] = row;
    out << doc_out.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// delta

std::vector<int> zero_based(const std::vector<int>& indices, int q, const char* what)
{
    std::vector<int> out;
    for (int i : indices) {
        if (i < 1 || i > 2 * q)
            throw InputError(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(2 * q));
        out.push_back(i - 1);
    }
    return out;
}

InsertionWord build_word(const RunConfig& config, const json& doc, const WallGeometry& wall)
{
    InsertionWord word;
    std::vector<int> gammas = config.gammas;
    std::vector<int> threes = config.threes;
    std::optional<int> r = config.r;
    if (doc.contains("word")) {
        const json& w = doc["word"];
        try {
            if (!r && w.contains("r"))
                r = w["r"].get<int>();
            if (gammas.empty() && w.contains("gammas"))
                gammas = w["gammas"].get<std::vector<int>>();
            if (threes.empty() && w.contains("threes"))
                threes = w["threes"].get<std::vector<int>>();
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed 'word': ") + e.what());
        }
    }
    word.r = r.value_or(0);
    word.gammas = zero_based(gammas, wall.q, "gamma");
    word.threes = zero_based(threes, wall.q, "three-class");
    for (const auto* list : {&word.gammas, &word.threes}) {
        std::vector<int> sorted = *list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("an odd class may appear at most once in the word");
    }
    if (word.r < 0)
        throw InputError("--r must be non-negative");
    const long rest = 2 * wall.derived.d - 4L * word.r - 3L * static_cast<long>(word.gammas.size()) -
                      static_cast<long>(word.threes.size());
    if (rest < 0 || rest % 2 != 0)
        throw InputError("no power of alpha completes the word to degree 2d = " + std::to_string(2 * wall.derived.d));
    word.s = static_cast<int>(rest / 2);
    return word;
}

std::vector<DeltaValue> compute_delta(const RunConfig& config, const PairingInput& input, const WallGeometry& wall,
                                      const InsertionWord& word)
{
    const JacobianModel model(input);
    const long l = wall.derived.l_zeta;
    const bool odd = word.odd_count() > 0;
    auto closed = [&]() -> DeltaValue {
        if (l == 0)
            return odd ? delta_l0_odd(wall, model, word) : delta_l0(wall, input.pairings, model.vol(), word.r);
        if (l == 1) {
            if (odd)
                throw RegimeError("odd insertions are only supported for l_zeta = 0");
            return delta_l1(wall, input.pairings, model.vol(), word.r);
        }
        throw RegimeError("exact values need l_zeta <= 1 (this wall has l_zeta = " + std::to_string(l) +
                          "); l_zeta >= 2 requires the cohomology ring of Hilb^l(S). Use --leading for the two "
                          "leading terms in a");
    };
    auto oracle = [&]() -> DeltaValue {
        if (l == 0)
            return delta_oracle_l0(model, wall, word);
        if (l == 1) {
            if (odd)
                throw RegimeError("odd insertions are only supported for l_zeta = 0");
            return delta_oracle_l1(model, wall, word.r);
        }
        throw RegimeError("the ring oracle covers l_zeta <= 1 only (this wall has l_zeta = " + std::to_string(l) + ")");
    };
    if (config.path == "leading") {
        if (odd)
            throw InputError("leading terms are defined for x^r alpha^{d-2r} only");
        return {delta_leading(wall, input.pairings, model.vol(), word.r)};
    }
    if (config.path == "oracle")
        return {oracle()};
    if (config.path == "both")
        return {closed(), oracle()};
    return {closed()};
}

int cmd_delta(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const json doc = read_json(config.input);
    const PairingInput input = parse_pairing_input(doc);
    if (!doc.contains("wall"))
        throw InputError("missing object field 'wall'");
    const WallGeometry wall =
        parse_wall(doc["wall"], input.q, integral(input.pairings.zeta2, "zeta2"), integral(input.pairings.zetaK, "zetaK"));
    if (config.expect_l && *config.expect_l != wall.derived.l_zeta)
        throw RegimeError("--l" + std::to_string(*config.expect_l) + " requested but the wall has l_zeta = " +
                          std::to_string(wall.derived.l_zeta));
    const InsertionWord word = build_word(config, doc, wall);
    const auto values = compute_delta(config, input, wall, word);
    const bool disagree = values.size() == 2 && values[0].value != values[1].value;
    if (disagree)
        err << "closed form and ring oracle disagree\n";

    if (config.output == Output::Csv) {
        out << "path,value,d,l_zeta,r,s,modulus_exponent\n";
        for (const auto& v : values)
            out << to_string(v.path) << ',' << to_string(v.value) << ',' << v.wall.derived.d << ','
                << v.wall.derived.l_zeta << ',' << v.word.r << ',' << v.word.s << ','
                << (v.modulus_exponent ? std::to_string(*v.modulus_exponent) : "") << '\n';
    } else {
        json doc_out = envelope(config);
        json results = json::array();
        for (const auto& v : values)
            results.push_back(delta_to_json(v));
        doc_out["results"] = results;
        out << doc_out.dump(2) << '\n';
    }
    return disagree ? kVerifyFailure : kOk;
}

// ---------------------------------------------------------------------------
// walls

int cmd_walls(const RunConfig& config, std::ostream& out)
{
    const json doc = read_json(config.input);
    if (!doc.is_object() || !doc.contains("surface"))
        throw InputError("walls input needs a 'surface' object");
    const SurfaceData surface = surface_from_json(doc["surface"]);
    LatticeVector w;
    long p1 = 0;
    try {
        w = doc.at("w").get<LatticeVector>();
        p1 = doc.at("p1").get<long>();
    } catch (const json::exception& e) {
        throw InputError(std::string("walls input needs integer 'p1' and vector 'w': ") + e.what());
    }
    long bound = config.bound.value_or(doc.value("bound", 10L));
    std::optional<LatticeVector> alpha;
    if (config.alpha)
        alpha = parse_vector(*config.alpha);
    else if (doc.contains("alpha"))
        alpha = doc["alpha"].get<LatticeVector>();
    std::vector<WallRow> rows;
    try {
        rows = enumerate_walls(surface, w, p1, bound, alpha);
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
    if (config.output == Output::Csv) {
        out << walls_to_csv(rows);
        return kOk;
    }
    json doc_out = envelope(config);
    doc_out["surface"] = surface_to_json(surface);
    doc_out["walls"] = walls_to_json(rows);
    out << doc_out.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// verify / selftest

int report(const RunConfig& config, const std::vector<PropertyResult>& results, std::ostream& out)
{
    bool all = true;
    for (const auto& r : results)
        all = all && r.passed;
    if (config.output == Output::Csv) {
        out << "criterion,name,passed,checked,counterexample\n";
        for (const auto& r : results)
            out << r.id << ',' << r.name << ',' << (r.passed ? "true" : "false") << ',' << r.checked << ','
                << csv_field(r.counterexample) << '\n';
    } else {
        json doc = envelope(config);
        doc["results"] = results_to_json(results);
        doc["passed"] = all;
        if (config.meta) {
            json timing = json::object();
            for (const auto& r : results)
                timing[r.name] = r.seconds;
            doc["meta"]["seconds"] = timing;
        }
        out << doc.dump(2) << '\n';
    }
    return all ? kOk : kVerifyFailure;
}

VerifyOptions verify_options(const RunConfig& config)
{
    VerifyOptions opt;
    opt.flip_epsilon = config.flip_epsilon;
    if (config.grid) {
        opt.l0 = parse_grid(*config.grid, opt.l0);
        opt.l1 = parse_grid(*config.grid, opt.l1);
    }
    return opt;
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    const VerifyOptions opt = verify_options(config);
    std::vector<PropertyResult> results;
    if (config.properties.empty())
        results = run_all(opt);
    else
        for (const auto& p : config.properties)
            results.push_back(run_property(p, opt));
    return report(config, results, out);
}

// Known values plus a small verification grid; meant to finish in seconds.
int cmd_selftest(const RunConfig& config, std::ostream& out)
{
    std::vector<PropertyResult> results;
    auto known = [&](const std::string& name, const Rational& got, const Rational& want) {
        PropertyResult r;
        r.id = 0;
        r.name = name;
        r.checked = 1;
        r.passed = got == want;
        if (!r.passed)
            r.counterexample = "got " + to_string(got) + ", expected " + to_string(want);
        results.push_back(r);
    };
    {
        PairingValues p;
        p.zeta2 = -1;
        p.zetaK = 1;
        p.zetaAlpha = 2;
        p.sigmaAlpha = 1;
        p.sigmaZeta = 1;
        const WallGeometry wall = make_wall(-1, 1, -1, 1, -1, -1, 1);
        known("example_l0", delta_l0(wall, p, 1, 0).value, -10);
    }
    {
        PairingValues p;
        p.zeta2 = -4;
        p.K2 = 8;
        p.zetaAlpha = 2;
        p.alpha2 = -1;
        const WallGeometry wall = make_wall(-8, 0, -4, 0, -4, -4, 0);
        known("example_l1", delta_l1(wall, p, 1, 0).value, 12);
        PairingInput in;
        in.pairings = p;
        known("example_l1_oracle", delta_oracle_l1(JacobianModel(in), wall, 0).value, 12);
    }
    VerifyOptions opt = verify_options(config);
    if (!config.grid) {
        opt.l0 = GridBounds{0, 2, 5, 1, 1};
        opt.l1 = GridBounds{0, 1, 9, 1, 1};
        opt.l1_include_q2 = false;
    }
    for (const char* name : {"oracle_l0", "oracle_l1", "structural", "e_S", "simple_type"})
        results.push_back(run_property(name, opt));
    return report(config, results, out);
}

} // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.command == "params")
            return cmd_params(config, out);
        if (config.command == "delta")
            return cmd_delta(config, out, err);
        if (config.command == "walls")
            return cmd_walls(config, out);
        if (config.command == "verify")
            return cmd_verify(config, out);
        if (config.command == "selftest")
            return cmd_selftest(config, out);
        err << "error: unknown command '" << config.command << "'\n";
        return kInputError;
    } catch (const RegimeError& e) {
        err << "regime error: " << e.what() << '\n';
        return kRegimeError;
    } catch (const std::invalid_argument& e) {
        // InputError, InvalidWallError, PreconditionError, ModelMismatchError
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    CLI::App app{"Exact wall-crossing terms of Donaldson invariants for b+ = 1 surfaces"};
    app.set_version_flag("--version", kVersion);
    app.add_option("--command", config.command, "params | delta | verify | walls | selftest")
        ->required()
        ->check(CLI::IsMember({"params", "delta", "verify", "walls", "selftest"}));
    app.add_option("--input", config.input, "JSON input (pairing data + wall, or surface description)");
    std::string output = "json";
    app.add_option("--output", output, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--r", config.r, "power of the point class x");
    std::string gammas, threes;
    app.add_option("--gammas", gammas, "H_1 insertions delta_i as a list \"1,2\"");
    app.add_option("--threes", threes, "H_3 insertions (duals of b_j) as a list \"1,3\"");
    auto* path = app.add_option("--path", config.path, "auto | closed | oracle | leading | both")
                     ->check(CLI::IsMember({"auto", "closed", "oracle", "leading", "both"}));
    bool l0 = false, l1 = false, leading = false;
    auto* f0 = app.add_flag("--l0", l0, "require an l_zeta = 0 wall");
    auto* f1 = app.add_flag("--l1", l1, "require an l_zeta = 1 wall");
    app.add_flag("--leading", leading, "leading terms in a (any l_zeta)")->excludes(path);
    f0->excludes(f1);
    app.add_option("--alpha", config.alpha, "alpha as a vector in the surface basis, \"v1,v2,...\"");
    app.add_option("--bound", config.bound, "bound on |a|, |b| for wall enumeration");
    app.add_option("--grid", config.grid, "verification grid, e.g. \"q=0..3,d<=8,r<=2,p<=3\"");
    app.add_option("--property", config.properties, "run only these properties (name or criterion number)");
    app.add_flag("--inject-epsilon-fault", config.flip_epsilon, "flip the sign of epsilon(zeta, w) (mutation check)");
    app.add_flag("--meta", config.meta, "add run metadata (version, time) to JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kInputError;
    }
    config.output = output == "csv" ? Output::Csv : Output::Json;
    if (leading)
        config.path = "leading";
    if (l0)
        config.expect_l = 0;
    if (l1)
        config.expect_l = 1;
    try {
        if (!gammas.empty())
            for (long v : parse_vector(gammas))
                config.gammas.push_back(static_cast<int>(v));
        if (!threes.empty())
            for (long v : parse_vector(threes))
                config.threes.push_back(static_cast<int>(v));
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return execute(config, out, err);
}

} // namespace wallcross::cli
