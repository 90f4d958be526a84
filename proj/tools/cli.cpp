#include "cli.hpp"

#include <cotzeta/bernoulli.hpp>
#include <cotzeta/closedform.hpp>
#include <cotzeta/errors.hpp>
#include <cotzeta/oracle.hpp>
#include <cotzeta/series.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace cotzeta::cli
{

namespace
{

using json = nlohmann::ordered_json;

constexpr long default_prec = 96;
constexpr long min_prec = 32;

struct RunConfig {
    std::string command;
    std::string suite;
    std::string alpha;
    int m = 2;
    std::optional<long> k;
    std::optional<std::string> grid;
    long prec = default_prec;
    std::optional<std::string> matrix;
    std::string format;
    std::string out;
    std::uint64_t seed = 1;
    std::optional<int> q;
    std::string x = "1/3";
    std::optional<long> n;
};

struct CsvRow {
    long k;
    std::string xi;
    std::string abs_err;
};

struct Report {
    json doc;
    std::vector<std::string> text;
    std::vector<CsvRow> rows;
    bool csv_capable = false;
    bool pass = true;
};

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

Integer parse_integer(const std::string &text)
{
    const Rational q = parse_rational(text);
    if (text.find('/') != std::string::npos || q.get_den() != 1) {
        throw InputError("not an integer: '" + text + "'");
    }
    return q.get_num();
}

long parse_long(const std::string &text)
{
    const Integer v = parse_integer(text);
    if (!v.fits_slong_p()) {
        throw InputError("integer out of range: '" + text + "'");
    }
    return v.get_si();
}

std::string num_den(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json exact_json(const PiValue &v)
{
    json j;
    j["d"] = v.coeff.radicand().get_si();
    j["pi_power"] = v.pi_power;
    j["coeff"] = {{"a", num_den(v.coeff.a())}, {"b", num_den(v.coeff.b())}};
    return j;
}

json checks_json(const std::vector<CheckEntry> &checks)
{
    json arr = json::array();
    for (const auto &c : checks) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return arr;
}

std::string pi_value_text(const PiValue &v)
{
    return "(" + v.coeff.to_string() + ") * pi^" + std::to_string(v.pi_power);
}

void require_m(const RunConfig &cfg)
{
    if (cfg.m < 2) {
        throw InputError("m must be at least 2, got " + std::to_string(cfg.m));
    }
}

std::optional<UniMat> matrix_of(const RunConfig &cfg)
{
    if (!cfg.matrix) {
        return std::nullopt;
    }
    return parse_matrix(*cfg.matrix);
}

std::vector<long> grid_or(const RunConfig &cfg, std::vector<long> fallback)
{
    return cfg.grid ? parse_grid(*cfg.grid) : fallback;
}

json base_doc(const RunConfig &cfg, json input)
{
    json doc;
    doc["command"] = cfg.suite.empty() ? cfg.command : cfg.command + " " + cfg.suite;
    doc["input"] = std::move(input);
    doc["exact"] = nullptr;
    doc["decimal"] = nullptr;
    doc["precision_bits"] = cfg.prec;
    doc["checks"] = json::array();
    return doc;
}

void finish_checks(Report &r, const std::vector<CheckEntry> &checks)
{
    r.doc["checks"] = checks_json(checks);
    for (const auto &c : checks) {
        r.pass = r.pass && c.pass;
        r.text.push_back(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
}

Report cmd_unit(const RunConfig &cfg)
{
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const StabilizerResult st = stabilizer(alpha);
    const PairReport report = validate_pair(alpha, st.V, st.eta);

    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}});
    const PiValue eta{st.eta, 0};
    r.doc["exact"] = exact_json(eta);
    r.doc["decimal"] = st.eta.to_real(cfg.prec).to_string();
    r.doc["matrix"] = {st.V.a().get_str(), st.V.b().get_str(), st.V.c().get_str(), st.V.d().get_str()};
    r.doc["minimal_polynomial"] = {st.poly.A.get_str(), st.poly.B.get_str(), st.poly.C.get_str()};
    r.doc["disc"] = st.poly.disc.get_str();
    r.doc["pell"] = {{"t", st.pell.t.get_str()}, {"u", st.pell.u.get_str()}};

    r.text.push_back("alpha = " + alpha.to_string());
    r.text.push_back("V = " + st.V.to_string());
    r.text.push_back("eta = " + st.eta.to_string() + " ~ " + r.doc["decimal"].get<std::string>());
    r.text.push_back("minimal polynomial (A, B, C) = (" + st.poly.A.get_str() + ", " + st.poly.B.get_str() + ", " +
                     st.poly.C.get_str() + ")");
    r.text.push_back("disc = " + st.poly.disc.get_str());
    r.text.push_back("(t, u) = (" + st.pell.t.get_str() + ", " + st.pell.u.get_str() + ")");
    finish_checks(r, report.checks);
    return r;
}

Report cmd_value(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const std::optional<UniMat> given = matrix_of(cfg);
    const PiValue v = ba_value(alpha, cfg.m, given);

    UniMat V = given ? *given : stabilizer(alpha).V;
    const PairReport report = validate_pair(alpha, V, eta_of(V, alpha));

    json input = {{"alpha", cfg.alpha}, {"m", cfg.m}};
    if (cfg.matrix) {
        input["matrix"] = *cfg.matrix;
    }
    Report r;
    r.doc = base_doc(cfg, std::move(input));
    r.doc["exact"] = exact_json(v);
    r.doc["decimal"] = v.to_real(cfg.prec).to_string();
    r.text.push_back("alpha = " + alpha.to_string() + ", m = " + std::to_string(cfg.m) + ", V = " + V.to_string());
    r.text.push_back("exact = " + pi_value_text(v));
    r.text.push_back("decimal = " + r.doc["decimal"].get<std::string>());
    finish_checks(r, report.checks);
    return r;
}

void add_rows(Report &r, const std::vector<ConvergenceRow> &rows)
{
    json arr = json::array();
    for (const auto &row : rows) {
        CsvRow c{row.k, row.xi.to_string(), row.abs_err.to_string()};
        arr.push_back({{"k", c.k}, {"xi_k", c.xi}, {"abs_err", c.abs_err}});
        r.text.push_back("k = " + std::to_string(c.k) + "  xi_k = " + c.xi + "  abs_err = " + c.abs_err);
        r.rows.push_back(std::move(c));
    }
    r.doc["rows"] = std::move(arr);
    r.csv_capable = true;
}

Report cmd_series(const RunConfig &cfg)
{
    require_m(cfg);
    if (!cfg.k) {
        throw InputError("series needs --k");
    }
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const auto rows = convergence_table(alpha, cfg.m, {*cfg.k}, cfg.prec);

    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"k", *cfg.k}});
    r.doc["exact"] = exact_json(ba_value(alpha, cfg.m));
    r.doc["decimal"] = rows.front().xi.to_string();
    add_rows(r, rows);
    return r;
}

Report cmd_table(const RunConfig &cfg)
{
    require_m(cfg);
    const std::vector<long> ks = parse_grid(cfg.grid.value_or(""));
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const auto rows = convergence_table(alpha, cfg.m, ks, cfg.prec);

    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"grid", ks}});
    const PiValue v = ba_value(alpha, cfg.m);
    r.doc["exact"] = exact_json(v);
    r.doc["decimal"] = v.to_real(cfg.prec).to_string();
    add_rows(r, rows);
    return r;
}

Report verify_deform2(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const UniMat V = matrix_of(cfg).value_or(stabilizer(alpha).V);
    const auto ks = grid_or(cfg, {1, 6, 12, 24, 48});

    std::vector<CheckEntry> checks;
    for (long k : ks) {
        const DeformReport rep = check_second_deformation(k, alpha, V, cfg.m);
        checks.push_back({"k=" + std::to_string(k), rep.second_deformation_holds, "S = " + rep.S.to_string()});
    }
    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"matrix", V.to_string()}, {"grid", ks}});
    finish_checks(r, checks);
    return r;
}

Report verify_deform1(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const UniMat V = matrix_of(cfg).value_or(stabilizer(alpha).V);
    const auto ks = grid_or(cfg, {6, 12});
    const long slack = 28;

    std::vector<CheckEntry> checks;
    for (long k : ks) {
        const FirstDeformationCheck c = check_first_deformation(k, alpha, V, cfg.m, cfg.prec);
        const HighPrecReal bound = pow2(slack - cfg.prec, cfg.prec) * max(abs(c.lhs), HighPrecReal(1L, cfg.prec));
        checks.push_back({"k=" + std::to_string(k), c.residual <= bound,
                          "residual = " + c.residual.to_string(12) + ", bound = " + bound.to_string(12)});
    }
    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"matrix", V.to_string()}, {"grid", ks}});
    finish_checks(r, checks);
    return r;
}

Report verify_thm1(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const UniMat V = matrix_of(cfg).value_or(stabilizer(alpha).V);

    std::vector<long> ks;
    if (cfg.grid) {
        ks = parse_grid(*cfg.grid);
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (int a = 7; a <= 10; ++a) {
            std::uniform_int_distribution<long> pick(1L << a, (1L << (a + 1)) - 1);
            for (int i = 0; i < 4; ++i) {
                ks.push_back(pick(rng));
            }
        }
    }

    std::vector<CheckEntry> checks;
    std::optional<HighPrecReal> first;
    HighPrecReal worst(0L, cfg.prec);
    for (long k : ks) {
        const HighPrecReal scaled = abs(theorem1_residual(k, alpha, V, cfg.m, cfg.prec)) * HighPrecReal(k, cfg.prec);
        checks.push_back({"k=" + std::to_string(k), scaled.is_finite(), "k*|residual| = " + scaled.to_string(12)});
        if (!first) {
            first = scaled;
        }
        worst = max(worst, scaled);
    }
    if (first) {
        const HighPrecReal bound = *first * HighPrecReal(5L, cfg.prec) + HighPrecReal(1L, cfg.prec);
        checks.push_back({"bounded", worst <= bound, "max = " + worst.to_string(12) + ", bound = " + bound.to_string(12)});
    }
    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha},
                           {"m", cfg.m},
                           {"matrix", V.to_string()},
                           {"grid", ks},
                           {"seed", cfg.seed}});
    finish_checks(r, checks);
    return r;
}

Report verify_ba(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const UniMat V = matrix_of(cfg).value_or(stabilizer(alpha).V);
    const long k = cfg.k.value_or(10000);

    const PairReport pair = validate_pair(alpha, V, eta_of(V, alpha));
    std::vector<CheckEntry> checks = pair.checks;
    if (!pair.all_ok()) {
        Report r;
        r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"matrix", V.to_string()}, {"k", k}});
        finish_checks(r, checks);
        return r;
    }
    const PiValue v = ba_value(alpha, cfg.m, V);
    const PiValue v2 = ba_value(alpha, cfg.m, V * V);
    checks.push_back({"pair_independent", v == v2, "V^2 gives " + pi_value_text(v2)});

    const HighPrecReal exact = v.to_real(cfg.prec);
    const HighPrecReal xi = xi_partial(k, cfg.m, alpha, cfg.prec).value;
    const HighPrecReal err = abs(xi - exact);
    checks.push_back({"series_k=" + std::to_string(k), err <= HighPrecReal(std::string("1e-3"), cfg.prec),
                      "abs_err = " + err.to_string(12)});

    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"matrix", V.to_string()}, {"k", k}});
    r.doc["exact"] = exact_json(v);
    r.doc["decimal"] = exact.to_string();
    finish_checks(r, checks);
    return r;
}

Report verify_lerch(const RunConfig &cfg)
{
    require_m(cfg);
    const QuadElem alpha = parse_alpha(cfg.alpha);
    const long k = cfg.k.value_or(100000);
    const LerchPoly L = lerch_rhs(cfg.m);

    const HighPrecReal lhs = xi_partial(k, cfg.m, alpha, cfg.prec).value +
                             alpha.pow(2 * cfg.m - 2).to_real(cfg.prec) *
                                 xi_partial(k, cfg.m, alpha.inverse(), cfg.prec).value;
    const PiValue rhs = lerch_exact(L, alpha);
    const HighPrecReal gap = abs(lhs - rhs.to_real(cfg.prec));
    const std::vector<CheckEntry> checks{{"k=" + std::to_string(k),
                                          gap <= HighPrecReal(std::string("1e-3"), cfg.prec),
                                          "gap = " + gap.to_string(12)}};
    Report r;
    r.doc = base_doc(cfg, {{"alpha", cfg.alpha}, {"m", cfg.m}, {"k", k}});
    r.doc["exact"] = exact_json(rhs);
    r.doc["decimal"] = rhs.to_real(cfg.prec).to_string();
    finish_checks(r, checks);
    return r;
}

Report verify_lemma1(const RunConfig &cfg)
{
    if (!cfg.q || *cfg.q < 1) {
        throw InputError("lemma1 needs --q >= 1");
    }
    const int q = *cfg.q;
    const Rational x = parse_rational(cfg.x);
    const auto ns = grid_or(cfg, {10, 100, 1000, 10000});

    std::vector<CheckEntry> checks;
    if (q == 1 && x.get_den() == 1) {
        for (long n : ns) {
            const ComplexReal z = A_nq(n, q, x, cfg.prec);
            checks.push_back({"n=" + std::to_string(n), z.re.is_zero() && z.im.is_zero(), "exact zero expected"});
        }
    } else {
        const ComplexReal limit = A_limit(q, x).to_complex(cfg.prec);
        for (long n : ns) {
            const ComplexReal z = A_nq(n, q, x, cfg.prec);
            const HighPrecReal dr = z.re - limit.re;
            const HighPrecReal di = z.im - limit.im;
            const HighPrecReal scaled = sqrt(dr * dr + di * di) * HighPrecReal(n, cfg.prec);
            checks.push_back({"n=" + std::to_string(n), scaled <= HighPrecReal(10L, cfg.prec),
                              "n*deviation = " + scaled.to_string(12)});
        }
    }
    Report r;
    r.doc = base_doc(cfg, {{"q", q}, {"x", num_den(x)}, {"grid", ns}});
    finish_checks(r, checks);
    return r;
}

Report verify_bernoulli(const RunConfig &cfg)
{
    const long top = cfg.n.value_or(30);
    if (top < 0 || top > 2000) {
        throw InputError("--n must lie in [0, 2000]");
    }
    const std::vector<Rational> points{0, Rational(1, 2), 2, Rational(-1, 3), Rational(5, 7)};
    bool difference = true;
    bool reflection = true;
    bool odd = true;
    bool cache = true;
    const BernoulliTable table(static_cast<std::size_t>(top));
    for (long n = 0; n <= top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        for (const auto &x : points) {
            Rational power = 1;
            for (long i = 1; i < n; ++i) {
                power *= x;
            }
            const Rational expected = n == 0 ? Rational(0) : Rational(n) * power;
            difference = difference && bern_poly_eval(un, x + 1) - bern_poly_eval(un, x) == expected;
            const Rational reflected = n % 2 == 0 ? bern_poly_eval(un, x) : Rational(-bern_poly_eval(un, x));
            reflection = reflection && bern_poly_eval(un, 1 - x) == reflected;
        }
        if (n >= 3 && n % 2 == 1) {
            odd = odd && bern_number(un) == 0;
        }
        cache = cache && table.number(un) == bern_number(un) && table.poly(un) == bern_poly(un) &&
                table.eval(un, 0) == table.number(un);
    }
    const std::vector<CheckEntry> checks{{"difference_equation", difference, "B_n(x+1) - B_n(x) = n x^(n-1)"},
                                         {"reflection", reflection, "B_n(1-x) = (-1)^n B_n(x)"},
                                         {"odd_vanishing", odd, "B_n = 0 for odd n >= 3"},
                                         {"cache_consistency", cache, "table agrees with direct evaluation"}};
    Report r;
    r.doc = base_doc(cfg, {{"n", top}});
    finish_checks(r, checks);
    return r;
}

Report cmd_bernoulli(const RunConfig &cfg)
{
    if (!cfg.n || *cfg.n < 0 || *cfg.n > 2000) {
        throw InputError("bernoulli needs --n in [0, 2000]");
    }
    const auto n = static_cast<std::size_t>(*cfg.n);
    const Rational b = bern_number(n);
    json coeffs = json::array();
    std::string poly_text;
    const auto poly = bern_poly(n);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        coeffs.push_back(num_den(poly[i]));
        if (poly[i] != 0) {
            poly_text += (poly_text.empty() ? "" : " + ") + to_string(poly[i]) + (i == 0 ? "" : " x^" + std::to_string(i));
        }
    }
    Report r;
    r.doc = base_doc(cfg, {{"n", *cfg.n}});
    r.doc["number"] = num_den(b);
    r.doc["polynomial"] = std::move(coeffs);
    r.text.push_back("B_" + std::to_string(n) + " = " + to_string(b));
    r.text.push_back("B_" + std::to_string(n) + "(x) = " + poly_text);
    return r;
}

Report dispatch(const RunConfig &cfg)
{
    if (cfg.command == "unit") {
        return cmd_unit(cfg);
    }
    if (cfg.command == "value") {
        return cmd_value(cfg);
    }
    if (cfg.command == "series") {
        return cmd_series(cfg);
    }
    if (cfg.command == "table") {
        return cmd_table(cfg);
    }
    if (cfg.command == "bernoulli") {
        return cmd_bernoulli(cfg);
    }
    if (cfg.suite == "deform2") {
        return verify_deform2(cfg);
    }
    if (cfg.suite == "deform1") {
        return verify_deform1(cfg);
    }
    if (cfg.suite == "thm1") {
        return verify_thm1(cfg);
    }
    if (cfg.suite == "ba") {
        return verify_ba(cfg);
    }
    if (cfg.suite == "lerch") {
        return verify_lerch(cfg);
    }
    if (cfg.suite == "lemma1") {
        return verify_lemma1(cfg);
    }
    return verify_bernoulli(cfg);
}

void render(const Report &r, const std::string &format, std::ostream &os)
{
    if (format == "json") {
        os << r.doc.dump(2) << '\n';
    } else if (format == "csv") {
        os << "k,xi_k,abs_err\n";
        for (const auto &row : r.rows) {
            os << row.k << ',' << row.xi << ',' << row.abs_err << '\n';
        }
    } else {
        for (const auto &line : r.text) {
            os << line << '\n';
        }
        if (r.doc["checks"].empty() == false) {
            os << (r.pass ? "PASS" : "FAIL") << '\n';
        }
    }
}

long precision_from_env()
{
    const char *env = std::getenv("COTZETA_PREC");
    if (env == nullptr || *env == '\0') {
        return default_prec;
    }
    try {
        return parse_long(env);
    } catch (const InputError &) {
        throw InputError(std::string("COTZETA_PREC is not an integer: '") + env + "'");
    }
}

} // namespace

QuadElem parse_alpha(const std::string &text)
{
    QuadElem alpha = QuadElem::rational(2, 0);
    if (text == "golden") {
        alpha = QuadElem::make(1, 1, 2, 5);
    } else if (text.rfind("sqrt:", 0) == 0) {
        alpha = QuadElem::make(0, 1, 1, parse_integer(text.substr(5)));
    } else if (text.rfind("quad:", 0) == 0) {
        const auto parts = split(text.substr(5), ',');
        if (parts.size() != 4) {
            throw InputError("quad: expects P,Q,R,D, got '" + text + "'");
        }
        alpha = QuadElem::make(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
                               parse_integer(parts[3]));
    } else {
        throw InputError("alpha must be sqrt:D, quad:P,Q,R,D or golden, got '" + text + "'");
    }
    if (alpha.is_rational()) {
        throw InputError("alpha is rational: " + alpha.to_string());
    }
    return alpha;
}

UniMat parse_matrix(const std::string &text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw InputError("matrix expects a,b,c,d, got '" + text + "'");
    }
    UniMat V(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), parse_integer(parts[3]));
    if (V.c() <= 0) {
        throw InputError("matrix needs c > 0, got " + V.to_string());
    }
    return V;
}

std::vector<long> parse_grid(const std::string &text)
{
    std::vector<long> ks;
    if (text.empty()) {
        return ks;
    }
    for (const auto &part : split(text, ',')) {
        const long k = parse_long(part);
        if (k < 1) {
            throw InputError("grid entries must be positive, got " + part);
        }
        ks.push_back(k);
    }
    return ks;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Cotangent zeta values and identity checks", "cotzeta"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<long> prec_flag;
    app.add_option("--alpha", cfg.alpha, "sqrt:D, quad:P,Q,R,D or golden");
    app.add_option("--m", cfg.m, "order, s = 2m - 1");
    app.add_option("--k", cfg.k, "truncation point");
    app.add_option("--grid", cfg.grid, "comma separated list of k (or n for lemma1)");
    app.add_option("--prec", prec_flag, "precision in bits");
    app.add_option("--matrix", cfg.matrix, "a,b,c,d");
    app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_option("--q", cfg.q, "exponent for lemma1");
    app.add_option("--x", cfg.x, "rational point num/den for lemma1");
    app.add_option("--n", cfg.n, "index for bernoulli");

    app.add_subcommand("unit", "stabilizing matrix and unit");
    app.add_subcommand("value", "exact closed form");
    app.add_subcommand("series", "partial sum at --k");
    app.add_subcommand("table", "partial sums over --grid");
    app.add_subcommand("bernoulli", "Bernoulli number and polynomial");
    auto *verify = app.add_subcommand("verify", "identity checks");
    verify->add_option("suite", cfg.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"deform2", "deform1", "thm1", "ba", "lerch", "lemma1", "bernoulli"}));

    std::vector<std::string> argv_store{"cotzeta"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        cfg.prec = prec_flag ? *prec_flag : precision_from_env();
        if (cfg.prec < min_prec) {
            throw InputError("precision must be at least " + std::to_string(min_prec) + " bits");
        }
        if (cfg.format.empty()) {
            cfg.format = cfg.command == "table" ? "csv" : "text";
        }
        if (cfg.alpha.empty()) {
            cfg.alpha = "sqrt:2";
        }

        const Report report = dispatch(cfg);
        if (cfg.format == "csv" && !report.csv_capable) {
            throw InputError("csv output is only available for series and table");
        }
        if (cfg.out.empty()) {
            render(report, cfg.format, out);
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) {
                throw InputError("cannot open output file " + cfg.out);
            }
            render(report, cfg.format, file);
        }
        return report.pass ? exit_ok : exit_failed;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const ArithmeticError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const DegenerateUnitError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failed;
    }
}

} // namespace cotzeta::cli
