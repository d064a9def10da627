#include "scenario.hpp"

#include <molly/ffield.hpp>
#include <molly/lrr.hpp>
#include <molly/mollify.hpp>
#include <molly/np.hpp>

#include <algorithm>
#include <random>
#include <thread>

namespace molly::cli
{

namespace
{

[[noreturn]] void bad(const std::string &what)
{
    throw Error(ErrorCode::ParseError, what);
}

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Rational rational(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    bad("expected a rational as \"a/b\" or an integer, got " + j.dump());
}

std::int64_t integer(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        bad(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

std::vector<Rational> rationals(const json &j)
{
    if (!j.is_array()) {
        bad("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto &x : j) {
        out.push_back(rational(x));
    }
    return out;
}

json rationals_to_json(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &r : v) {
        out.push_back(r.to_string());
    }
    return out;
}

PuiseuxPoly parse_term(std::uint32_t p, std::size_t e, const json &j)
{
    const std::int64_t c = integer(field(j, "coeff"), "coeff");
    const std::vector<Rational> exps = rationals(field(j, "exps"));
    if (exps.size() != e) {
        throw Error(ErrorCode::VariableCountMismatch,
                    "term has " + std::to_string(exps.size()) + " exponents, expected " + std::to_string(e));
    }
    PuiseuxPoly out(p, e);
    out.add_term(exps, c);
    return out;
}

PuiseuxPoly parse_poly(std::uint32_t p, std::size_t e, const json &j)
{
    if (!j.is_array()) {
        bad("polynomial must be an array of terms");
    }
    PuiseuxPoly out(p, e);
    for (const auto &t : j) {
        out += parse_term(p, e, t);
    }
    return out;
}

json term_to_json(const Exponents &exps, std::uint32_t c)
{
    json t;
    t["coeff"] = c;
    json ex = json::array();
    for (const auto &r : exps) {
        ex.push_back(r.to_string());
    }
    t["exps"] = ex;
    return t;
}

FiberIndex parse_index(const json &j, std::size_t d)
{
    if (!j.is_array() || j.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, "fiber index must have " + std::to_string(d) + " entries");
    }
    FiberIndex k;
    for (const auto &x : j) {
        k.push_back(integer(x, "index entry"));
    }
    return k;
}

FiberSeries parse_series(const Scenario &s, const json &j, bool allow_pi)
{
    const std::size_t e = s.base_vars.size();
    PuiseuxPoly pi = PuiseuxPoly::constant(s.p, e, 1);
    if (j.contains("pi")) {
        if (!allow_pi) {
            bad("a mollifier series has no denominator");
        }
        pi = parse_term(s.p, e, j.at("pi"));
    }
    FiberSeries f(s.fiber_vars.size(), s.bound, pi);
    for (const auto &t : field(j, "terms")) {
        f.add(parse_index(field(t, "index"), s.fiber_vars.size()), parse_poly(s.p, e, field(t, "coeff")));
    }
    return f;
}

std::size_t var_position(const std::vector<std::string> &names, const json &j)
{
    if (!j.is_string()) {
        bad("variable references are names");
    }
    const auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) {
        bad("unknown variable \"" + j.get<std::string>() + "\"");
    }
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::size_t> var_positions(const std::vector<std::string> &names, const json &j)
{
    if (!j.is_array()) {
        bad("expected an array of variable names");
    }
    std::vector<std::size_t> out;
    for (const auto &x : j) {
        out.push_back(var_position(names, x));
    }
    return out;
}

// Named valuation or inline weights.
ToricValuation valuation_ref(const Scenario &s, const json &j)
{
    if (j.is_string()) {
        for (const auto &[name, v] : s.valuations) {
            if (name == j.get<std::string>()) {
                return v;
            }
        }
        bad("unknown valuation \"" + j.get<std::string>() + "\"");
    }
    const ToricValuation v(rationals(j));
    if (v.e() != s.base_vars.size()) {
        throw Error(ErrorCode::DimensionMismatch, "weight vector length differs from the base variable count");
    }
    return v;
}

json valuation_ref_json(const json &j)
{
    return j.is_string() ? j : rationals_to_json(rationals(j));
}

GfElement parse_element(const ExtField &F, const json &j)
{
    if (!j.is_array() || j.size() > F.degree()) {
        bad("field element must be an array of at most " + std::to_string(F.degree()) + " coefficients");
    }
    std::vector<std::uint32_t> c;
    for (const auto &x : j) {
        const std::int64_t v = integer(x, "field coefficient");
        const auto pp = static_cast<std::int64_t>(F.p());
        c.push_back(static_cast<std::uint32_t>(((v % pp) + pp) % pp));
    }
    return F.from_coeffs(c);
}

json element_to_json(const ExtField &F, const GfElement &a)
{
    json out = json::array();
    for (unsigned i = 0; i < F.degree(); ++i) {
        out.push_back(a.c[i]);
    }
    return out;
}

std::vector<GfElement> parse_elements(const ExtField &F, const json &j)
{
    if (!j.is_array()) {
        bad("expected an array of field elements");
    }
    std::vector<GfElement> out;
    for (const auto &x : j) {
        out.push_back(parse_element(F, x));
    }
    return out;
}

json elements_to_json(const ExtField &F, const std::vector<GfElement> &v)
{
    json out = json::array();
    for (const auto &a : v) {
        out.push_back(element_to_json(F, a));
    }
    return out;
}

ExtField task_field(const Scenario &s, const json &t)
{
    const std::int64_t m = integer(field(t, "field_degree"), "field_degree");
    if (m < 1 || m > static_cast<std::int64_t>(kMaxExtDegree)) {
        throw Error(ErrorCode::DegreeTooLarge, "field_degree must lie in 1.." + std::to_string(kMaxExtDegree));
    }
    return ExtField::build(s.p, static_cast<unsigned>(m));
}

UniPoly parse_unipoly(const Scenario &s, const json &j)
{
    if (!j.is_array()) {
        bad("univariate polynomial must be an array of {degree, coeff}");
    }
    UniPoly u;
    for (const auto &t : j) {
        const std::int64_t deg = integer(field(t, "degree"), "degree");
        PuiseuxPoly c = parse_poly(s.p, s.base_vars.size(), field(t, "coeff"));
        auto [it, inserted] = u.try_emplace(deg, c);
        if (!inserted) {
            it->second += c;
        }
    }
    std::erase_if(u, [](const auto &kv) { return kv.second.is_zero(); });
    return u;
}

json unipoly_to_json(const UniPoly &u)
{
    json out = json::array();
    for (const auto &[deg, c] : u) {
        json t;
        t["degree"] = deg;
        t["coeff"] = poly_to_json(c);
        out.push_back(t);
    }
    return out;
}

std::vector<PuiseuxPoly> parse_frob_series(const Scenario &s, const json &j)
{
    if (!j.is_array()) {
        bad("f must be an array of {index, coeff}");
    }
    std::vector<PuiseuxPoly> a;
    for (const auto &t : j) {
        const std::int64_t i = integer(field(t, "index"), "index");
        if (i < 0 || i > 62) {
            bad("f index out of range");
        }
        if (static_cast<std::size_t>(i) >= a.size()) {
            a.resize(static_cast<std::size_t>(i) + 1, PuiseuxPoly(s.p, s.base_vars.size()));
        }
        a[static_cast<std::size_t>(i)] += parse_poly(s.p, s.base_vars.size(), field(t, "coeff"));
    }
    return a;
}

json frob_series_to_json(const std::vector<PuiseuxPoly> &a)
{
    json out = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        json t;
        t["index"] = i;
        t["coeff"] = poly_to_json(a[i]);
        out.push_back(t);
    }
    return out;
}

std::optional<Rational> optional_rational(const json &j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return rational(j);
}

json optional_rational_json(const std::optional<Rational> &r)
{
    return r ? json(r->to_string()) : json(nullptr);
}

Interval parse_interval(const json &j)
{
    if (!j.is_array() || j.size() != 2) {
        bad("interval must be [lo, hi] with null for an infinite end");
    }
    return Interval{optional_rational(j[0]), optional_rational(j[1])};
}

std::vector<Value> parse_values(const json &j)
{
    if (!j.is_array()) {
        bad("values must be an array");
    }
    std::vector<Value> out;
    for (const auto &x : j) {
        if (x.is_string() && x.get<std::string>() == "inf") {
            out.push_back(Value::infinity());
        } else {
            out.emplace_back(rational(x));
        }
    }
    return out;
}

const FiberSeries &need_series(const Scenario &s, const std::string &kind)
{
    if (!s.series) {
        bad("task \"" + kind + "\" needs a series");
    }
    return *s.series;
}

void check_keys(const json &t, std::initializer_list<const char *> allowed)
{
    for (const auto &[key, value] : t.items()) {
        if (key == "task") {
            continue;
        }
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; })) {
            bad("unexpected field \"" + key + "\" in task \"" + t.at("task").get<std::string>() + "\"");
        }
    }
}

// Validates a task against the scenario and returns its canonical form.
json canonical_task(const Scenario &s, const json &t)
{
    if (!t.is_object() || !t.contains("task") || !t.at("task").is_string()) {
        bad("each task needs a \"task\" name");
    }
    const std::string kind = t.at("task").get<std::string>();
    json out;
    out["task"] = kind;
    if (kind == "np" || kind == "npinf" || kind == "admissible" || kind == "symbol" || kind == "mollify") {
        check_keys(t, {"valuation", "max_steps"});
        need_series(s, kind);
        valuation_ref(s, field(t, "valuation"));
        out["valuation"] = valuation_ref_json(t.at("valuation"));
        if (t.contains("max_steps")) {
            if (kind != "mollify" || integer(t.at("max_steps"), "max_steps") < 1) {
                bad("max_steps is a positive integer for mollify");
            }
            out["max_steps"] = t.at("max_steps");
        }
    } else if (kind == "monomial") {
        check_keys(t, {"valuation", "designated"});
        need_series(s, kind);
        valuation_ref(s, field(t, "valuation"));
        var_positions(s.base_vars, field(t, "designated"));
        out["valuation"] = valuation_ref_json(t.at("valuation"));
        out["designated"] = t.at("designated");
    } else if (kind == "divisor_chain") {
        check_keys(t, {"chain"});
        need_series(s, kind);
        if (t.contains("chain")) {
            var_positions(s.base_vars, t.at("chain"));
            out["chain"] = t.at("chain");
        }
    } else if (kind == "polygon") {
        check_keys(t, {"u0", "direction", "interval"});
        need_series(s, kind);
        const auto u0 = rationals(field(t, "u0"));
        const auto dir = rationals(field(t, "direction"));
        if (u0.size() != s.base_vars.size() || dir.size() != s.base_vars.size()) {
            throw Error(ErrorCode::DimensionMismatch, "u0 and direction need one entry per base variable");
        }
        const Interval iv = parse_interval(field(t, "interval"));
        out["u0"] = rationals_to_json(u0);
        out["direction"] = rationals_to_json(dir);
        out["interval"] = json::array({optional_rational_json(iv.lo), optional_rational_json(iv.hi)});
    } else if (kind == "valuation_polygon") {
        check_keys(t, {"values"});
        json vals = json::array();
        for (const auto &v : parse_values(field(t, "values"))) {
            vals.push_back(v.is_infinite() ? std::string("inf") : v.rational().to_string());
        }
        out["values"] = vals;
    } else if (kind == "twist") {
        check_keys(t, {"valuation", "g"});
        need_series(s, kind);
        valuation_ref(s, field(t, "valuation"));
        out["valuation"] = valuation_ref_json(t.at("valuation"));
        json g = series_to_json(parse_series(s, field(t, "g"), false));
        g.erase("pi");
        out["g"] = g;
    } else if (kind == "twist_check") {
        check_keys(t, {"valuation", "samples"});
        need_series(s, kind);
        valuation_ref(s, field(t, "valuation"));
        const std::int64_t n = integer(field(t, "samples"), "samples");
        if (n < 0 || n > 100000) {
            bad("samples must lie in 0..100000");
        }
        out["valuation"] = valuation_ref_json(t.at("valuation"));
        out["samples"] = n;
    } else if (kind == "branches") {
        check_keys(t, {});
        need_series(s, kind);
    } else if (kind == "kernel") {
        check_keys(t, {"field_degree", "coeffs", "search_bound"});
        const ExtField F = task_field(s, t);
        out["field_degree"] = F.degree();
        out["coeffs"] = elements_to_json(F, parse_elements(F, field(t, "coeffs")));
        if (t.contains("search_bound")) {
            out["search_bound"] = integer(t.at("search_bound"), "search_bound");
        }
    } else if (kind == "telescope") {
        check_keys(t, {"field_degree", "d", "z", "lambda", "length"});
        const ExtField F = task_field(s, t);
        out["field_degree"] = F.degree();
        out["d"] = elements_to_json(F, parse_elements(F, field(t, "d")));
        out["z"] = elements_to_json(F, parse_elements(F, field(t, "z")));
        out["lambda"] = elements_to_json(F, parse_elements(F, field(t, "lambda")));
        const std::int64_t len = integer(field(t, "length"), "length");
        if (len < 1 || len > 4096) {
            bad("length must lie in 1..4096");
        }
        out["length"] = len;
    } else if (kind == "extract_rlrr") {
        check_keys(t, {"b", "b_i", "f"});
        out["b"] = unipoly_to_json(parse_unipoly(s, field(t, "b")));
        json bi = json::array();
        for (const auto &u : field(t, "b_i")) {
            bi.push_back(unipoly_to_json(parse_unipoly(s, u)));
        }
        out["b_i"] = bi;
        out["f"] = frob_series_to_json(parse_frob_series(s, field(t, "f")));
    } else {
        bad("unknown task \"" + kind + "\"");
    }
    return out;
}

std::string series_text(const Scenario &s, const FiberSeries &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[k, c] : f.coeffs()) {
        std::string mono;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + s.fiber_vars[i];
            if (k[i] != 1) {
                mono += "^" + std::to_string(k[i]);
            }
        }
        const std::string coeff = c.to_string(s.base_vars);
        std::string term = "(" + coeff + ")";
        if (!mono.empty()) {
            term += "*" + mono;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    if (f.pi() != PuiseuxPoly::constant(f.p(), f.e(), 1)) {
        out = "(" + out + ") / (" + f.pi().to_string(s.base_vars) + ")";
    }
    return out;
}

json cert_to_json(const Scenario &s, const NegativeCertificate &c)
{
    json j;
    j["variable"] = s.base_vars[c.variable];
    put_exact(j, "n0", c.n0);
    j["k0"] = c.k0;
    j["K"] = c.K;
    j["m"] = c.m;
    put_exact(j, "bound", c.bound);
    return j;
}

json report_to_json(const Scenario &s, const MollifierReport &r)
{
    json j;
    j["kind"] = std::string(to_string(r.kind));
    put_exact(j, "initial_np", r.initial_np);
    put_exact(j, "final_np", r.final_np);
    put_exact(j, "npinf", r.npinf);
    j["steps"] = r.trace.size();
    json trace = json::array();
    json trace_approx = json::array();
    for (const auto &x : r.trace) {
        trace.push_back(x.to_string());
        trace_approx.push_back(x.to_double());
    }
    j["trace"] = trace;
    j["trace_approx"] = trace_approx;
    j["g"] = series_to_json(r.g);
    j["g_text"] = series_text(s, r.g);
    j["twisted"] = series_to_json(r.twisted);
    j["twisted_text"] = series_text(s, r.twisted);
    j["absorbed_constant"] = poly_to_json(r.absorbed_constant);
    if (r.certificate) {
        j["certificate"] = cert_to_json(s, *r.certificate);
    }
    return j;
}

json run_task(const Scenario &s, const Task &task, const RunOptions &opts, std::size_t position, TaskOutcome &outcome)
{
    const json &t = task.params;
    const std::string &kind = task.kind;
    json r;
    r["task"] = kind;
    if (kind == "np" || kind == "npinf") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        put_exact(r, "value", kind == "np" ? np(*s.series, v) : npinf(*s.series, v));
    } else if (kind == "admissible") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const Rational a = np(*s.series, v);
        const Rational b = npinf(*s.series, v);
        put_exact(r, "np", a);
        put_exact(r, "npinf", b);
        r["weakly_admissible"] = a == b;
        if (a.sign() < 0) {
            r["separable"] = is_separable_symbol(symbol(*s.series, v));
        }
    } else if (kind == "symbol") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const SymbolPart sym = symbol(*s.series, v);
        put_exact(r, "level", sym.level);
        json terms = json::array();
        for (const auto &[k, c] : sym.terms) {
            json term;
            term["index"] = k;
            term["coeff"] = poly_to_json(c);
            terms.push_back(term);
        }
        r["terms"] = terms;
        r["separable"] = is_separable_symbol(sym);
    } else if (kind == "mollify") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const std::size_t max_steps = t.contains("max_steps") ? t.at("max_steps").get<std::size_t>() : 10000;
        const MollifierReport rep = mollify_minimal(*s.series, v, max_steps);
        r["report"] = report_to_json(s, rep);
        r["step_bound"] = mollify_step_bound(*s.series, v);
    } else if (kind == "monomial") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const MollifierReport rep = mollify_monomial(*s.series, v, var_positions(s.base_vars, t.at("designated")));
        r["report"] = report_to_json(s, rep);
    } else if (kind == "divisor_chain") {
        std::vector<std::size_t> chain;
        if (t.contains("chain")) {
            chain = var_positions(s.base_vars, t.at("chain"));
        }
        try {
            const MollifierReport rep = divisor_chain_mollify(*s.series, chain);
            r["report"] = report_to_json(s, rep);
        } catch (const DivisorObstructionError &e) {
            json err;
            err["code"] = std::string(to_string(e.code()));
            err["message"] = e.what();
            err["chain_index"] = e.index();
            if (e.certificate()) {
                err["certificate"] = cert_to_json(s, *e.certificate());
            }
            r["error"] = err;
            outcome.failed = true;
        }
    } else if (kind == "polygon") {
        const Polygon poly = npinf_polygon(*s.series, rationals(t.at("u0")), rationals(t.at("direction")),
                                           parse_interval(t.at("interval")));
        r["polygon"] = polygon_to_json(poly);
        put_exact(r, "terminal_slope", terminal_slope(poly));
        r["concave"] = poly.is_concave();
        r["continuous"] = poly.is_continuous();
        outcome.polygons.push_back(poly);
    } else if (kind == "valuation_polygon") {
        const std::vector<Value> vals = parse_values(t.at("values"));
        const Polygon poly = complete_valuation_polygon(vals);
        r["polygon"] = polygon_to_json(poly);
        json roots = json::array();
        for (const auto &b : poly.breaks()) {
            json root;
            put_exact(root, "valuation", b.s);
            put_exact(root, "count", b.slope_change);
            roots.push_back(root);
        }
        r["roots_by_valuation"] = roots;
        outcome.polygons.push_back(poly);
    } else if (kind == "twist") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const FiberSeries g = parse_series(s, t.at("g"), false);
        const FiberSeries tw = as_twist(*s.series, g, opts.strict_truncation);
        r["fits"] = twist_fits(*s.series, g);
        r["twisted"] = series_to_json(tw);
        r["twisted_text"] = series_text(s, tw);
        put_exact(r, "np_before", np(*s.series, v));
        put_exact(r, "np_after", np(tw, v));
        put_exact(r, "npinf_before", npinf(*s.series, v));
        put_exact(r, "npinf_after", npinf(tw, v));
    } else if (kind == "twist_check") {
        const ToricValuation v = valuation_ref(s, t.at("valuation"));
        const FiberSeries &h = *s.series;
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(position)};
        std::mt19937_64 rng(seq);
        const Rational base = npinf(h, v);
        std::size_t tried = 0;
        std::size_t held = 0;
        const auto samples = t.at("samples").get<std::size_t>();
        const std::int64_t half = h.bound() / static_cast<std::int64_t>(h.p());
        for (std::size_t i = 0; i < samples; ++i) {
            FiberSeries g(h.p(), h.e(), h.d(), h.bound());
            for (int term = 0; term < 3; ++term) {
                FiberIndex k(h.d());
                for (auto &x : k) {
                    x = half > 0 ? static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(half + 1)) : 0;
                }
                Exponents exps(h.e());
                for (auto &x : exps) {
                    x = Rational(static_cast<std::int64_t>(rng() % 5) - 2, (rng() % 2) ? h.p() : 1);
                }
                g.add(k, PuiseuxPoly::monomial(h.p(), h.e(), 1 + static_cast<std::int64_t>(rng() % (h.p() - 1)), exps));
            }
            if (!twist_fits(h, g)) {
                continue;
            }
            ++tried;
            const FiberSeries tw = as_twist(h, g, true);
            const Rational a = np(tw, v);
            const Rational b = npinf(tw, v);
            if (b == base && a <= b && b.sign() <= 0) {
                ++held;
            }
        }
        r["seed"] = opts.seed;
        r["samples"] = tried;
        r["held"] = held;
        r["ok"] = tried == held;
    } else if (kind == "branches") {
        json branches = json::array();
        for (const auto &b : lambda_decompose(*s.series)) {
            json j;
            j["n"] = b.n;
            j["length"] = b.entries.size();
            j["section"] = poly_to_json(full_section(*s.series, b.n));
            j["hadamard_identity"] = branch_algebraicity_check(*s.series, b.n);
            branches.push_back(j);
        }
        r["branches"] = branches;
    } else if (kind == "kernel") {
        const ExtField F = task_field(s, t);
        const AdditivePolynomial P{F, parse_elements(F, t.at("coeffs"))};
        const unsigned bound = t.contains("search_bound") ? t.at("search_bound").get<unsigned>() : kMaxExtDegree / F.degree();
        const AdditiveKernel ker = additive_kernel(P, bound);
        r["field_degree"] = ker.field.degree();
        r["modulus"] = ker.field.modulus();
        r["dimension"] = ker.basis.size();
        r["basis"] = elements_to_json(ker.field, ker.basis);
        bool all_roots = true;
        const AdditivePolynomial lifted = P.embedded(ker.embedding);
        for (const auto &z : ker.basis) {
            all_roots = all_roots && ker.field.is_zero(lifted.evaluate(z));
        }
        r["roots_verified"] = all_roots;
    } else if (kind == "telescope") {
        const ExtField F = task_field(s, t);
        const AdditivePolynomial d{F, parse_elements(F, t.at("d"))};
        const auto z = parse_elements(F, t.at("z"));
        const auto lambda = parse_elements(F, t.at("lambda"));
        const auto length = t.at("length").get<std::size_t>();
        const auto b = closed_form(F, z, lambda, RecurrenceKind::LRR, length);
        r["sequence"] = elements_to_json(F, b);
        const std::size_t m = d.coeffs.size() - 1;
        std::size_t pairs = 0;
        bool all_equal = true;
        for (std::size_t n2 = 1; n2 + m + 1 <= length; ++n2) {
            for (std::size_t n = 0; n < n2; ++n) {
                const TelescopeResult tr = telescope_identity(d, b, n, n2);
                ++pairs;
                all_equal = all_equal && tr.equal;
            }
        }
        r["pairs"] = pairs;
        r["all_equal"] = all_equal;
    } else if (kind == "extract_rlrr") {
        std::vector<UniPoly> bi;
        for (const auto &u : t.at("b_i")) {
            bi.push_back(parse_unipoly(s, u));
        }
        const RlrrExtraction ex = extract_rlrr(parse_unipoly(s, t.at("b")), bi, parse_frob_series(s, t.at("f")));
        json c = json::array();
        for (const auto &x : ex.c) {
            c.push_back(poly_to_json(x));
        }
        r["c"] = c;
        r["N"] = ex.N;
        r["degenerate"] = ex.degenerate;
        r["verified"] = ex.verified;
    }
    return r;
}

} // namespace

void put_exact(json &j, const std::string &key, const Rational &r)
{
    j[key] = r.to_string();
    j[key + "_approx"] = r.to_double();
}

json poly_to_json(const PuiseuxPoly &f)
{
    json out = json::array();
    for (const auto &[exps, c] : f.terms()) {
        out.push_back(term_to_json(exps, c));
    }
    return out;
}

json series_to_json(const FiberSeries &f)
{
    json j;
    const auto &pi = f.pi();
    j["pi"] = term_to_json(pi.terms().begin()->first, pi.terms().begin()->second);
    json terms = json::array();
    for (const auto &[k, c] : f.coeffs()) {
        json t;
        t["index"] = k;
        t["coeff"] = poly_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

json polygon_to_json(const Polygon &poly)
{
    json j;
    j["interval"] = json::array({optional_rational_json(poly.interval().lo), optional_rational_json(poly.interval().hi)});
    json breaks = json::array();
    for (const auto &b : poly.breaks()) {
        json x;
        put_exact(x, "s", b.s);
        put_exact(x, "value", b.value);
        put_exact(x, "slope_change", b.slope_change);
        breaks.push_back(x);
    }
    j["breaks"] = breaks;
    json pieces = json::array();
    for (const auto &pc : poly.pieces()) {
        json x;
        x["start"] = optional_rational_json(pc.start);
        x["end"] = optional_rational_json(pc.end);
        put_exact(x, "slope", pc.line.slope);
        put_exact(x, "intercept", pc.line.intercept);
        pieces.push_back(x);
    }
    j["pieces"] = pieces;
    return j;
}

Scenario parse_scenario(const json &doc)
{
    try {
        if (!doc.is_object()) {
            bad("scenario must be a JSON object");
        }
        Scenario s;
        s.id = field(doc, "id").get<std::string>();
        const std::int64_t p = integer(field(doc, "p"), "p");
        if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
            throw Error(ErrorCode::NotPrime, "p not prime");
        }
        PrimeConfig cfg(static_cast<std::uint32_t>(p));
        s.p = cfg.p();
        s.base_vars = field(doc, "base_vars").get<std::vector<std::string>>();
        s.fiber_vars = field(doc, "fiber_vars").get<std::vector<std::string>>();
        s.bound = integer(field(doc, "bound"), "bound");
        if (s.base_vars.empty()) {
            bad("at least one base variable");
        }
        if (doc.contains("series")) {
            s.series = parse_series(s, doc.at("series"), true);
        }
        if (doc.contains("valuations")) {
            for (const auto &[name, w] : doc.at("valuations").items()) {
                const ToricValuation v(rationals(w));
                if (v.e() != s.base_vars.size()) {
                    throw Error(ErrorCode::DimensionMismatch, "valuation \"" + name + "\" has the wrong length");
                }
                s.valuations.emplace_back(name, v);
            }
        }
        for (const auto &t : field(doc, "tasks")) {
            json c = canonical_task(s, t);
            s.tasks.push_back(Task{c.at("task").get<std::string>(), std::move(c)});
        }
        if (doc.contains("expect")) {
            s.expect = doc.at("expect");
        }
        if (doc.contains("expect_exit")) {
            s.expect_exit = static_cast<int>(integer(doc.at("expect_exit"), "expect_exit"));
        }
        return s;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

json serialize_scenario(const Scenario &s)
{
    json j;
    j["id"] = s.id;
    j["p"] = s.p;
    j["base_vars"] = s.base_vars;
    j["fiber_vars"] = s.fiber_vars;
    j["bound"] = s.bound;
    if (s.series) {
        j["series"] = series_to_json(*s.series);
    }
    json vals = json::object();
    for (const auto &[name, v] : s.valuations) {
        vals[name] = rationals_to_json(v.weights());
    }
    j["valuations"] = vals;
    json tasks = json::array();
    for (const auto &t : s.tasks) {
        tasks.push_back(t.params);
    }
    j["tasks"] = tasks;
    if (!s.expect.is_null()) {
        j["expect"] = s.expect;
    }
    if (s.expect_exit != 0) {
        j["expect_exit"] = s.expect_exit;
    }
    return j;
}

RunResult run_scenario(const Scenario &s, const RunOptions &opts)
{
    RunResult out;
    if (s.series && !s.series->numerator(FiberIndex(s.fiber_vars.size(), 0)).is_zero()) {
        out.warnings.push_back("series has a nonzero constant term; it is ignored by np and npinf");
    }
    out.outcomes.resize(s.tasks.size());
    const auto work = [&](std::size_t i) {
        TaskOutcome &o = out.outcomes[i];
        try {
            o.result = run_task(s, s.tasks[i], opts, i, o);
        } catch (const Error &e) {
            o.result = json::object();
            o.result["task"] = s.tasks[i].kind;
            json err;
            err["code"] = std::string(to_string(e.code()));
            err["message"] = e.what();
            o.result["error"] = err;
            o.failed = true;
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(s.tasks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < s.tasks.size(); ++i) {
            work(i);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < s.tasks.size(); i += jobs) {
                    work(i);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    json env;
    env["scenario"] = s.id;
    env["tool"] = "molly";
    env["version"] = MOLLY_VERSION;
    env["p"] = s.p;
    if (!out.warnings.empty()) {
        env["warnings"] = out.warnings;
    }
    json results = json::array();
    for (const auto &o : out.outcomes) {
        results.push_back(o.result);
        if (o.failed) {
            out.exit_code = 3;
        }
    }
    env["results"] = results;
    out.envelope = env;
    return out;
}

json validation_failure(const std::string &id, const Error &e)
{
    json env;
    env["scenario"] = id;
    env["tool"] = "molly";
    env["version"] = MOLLY_VERSION;
    json err;
    err["code"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    env["error"] = err;
    return env;
}

} // namespace molly::cli
