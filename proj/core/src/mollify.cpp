#include <molly/mollify.hpp>

#include <algorithm>
#include <map>

namespace molly
{

namespace
{

using SeriesMap = std::map<FiberIndex, PuiseuxPoly>;

bool is_zero_index(const FiberIndex &k)
{
    return std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; });
}

FiberIndex times(const FiberIndex &k, std::int64_t c)
{
    FiberIndex r = k;
    for (auto &x : r) {
        x *= c;
    }
    return r;
}

std::int64_t ipow(std::int64_t base, unsigned k)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= base;
    }
    return r;
}

unsigned vp(std::int64_t n, std::uint32_t p)
{
    unsigned r = 0;
    while (n != 0 && n % static_cast<std::int64_t>(p) == 0) {
        n /= static_cast<std::int64_t>(p);
        ++r;
    }
    return r;
}

// Largest K with p^K dividing every coordinate.
unsigned index_valuation(const FiberIndex &k, std::uint32_t p)
{
    unsigned best = 64;
    for (auto x : k) {
        if (x != 0) {
            best = std::min(best, vp(x, p));
        }
    }
    return best;
}

void accumulate(SeriesMap &into, const FiberIndex &k, const PuiseuxPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = into.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            into.erase(it);
        }
    }
}

// (sum_k c_k x^k)^{p^i}.
SeriesMap frobenius_series(const SeriesMap &s, std::uint32_t p, unsigned i)
{
    SeriesMap r;
    for (const auto &[k, c] : s) {
        accumulate(r, times(k, ipow(p, i)), c.frobenius(i));
    }
    return r;
}

SeriesMap times_monomial(const SeriesMap &s, const PuiseuxPoly &m)
{
    SeriesMap r;
    for (const auto &[k, c] : s) {
        accumulate(r, k, c * m);
    }
    return r;
}

FiberSeries zero_like(const FiberSeries &f, std::int64_t bound)
{
    return FiberSeries(f.p(), f.e(), f.d(), bound);
}

// Sum of two pi = 1 series in the larger box.
FiberSeries add_series(const FiberSeries &a, const FiberSeries &b)
{
    FiberSeries r = a.with_bound(std::max(a.bound(), b.bound()));
    for (const auto &[k, c] : b.coeffs()) {
        r.add_coefficient(k, b.coefficient(k));
    }
    return r;
}

MollifierReport make_report(const FiberSeries &h, const ToricValuation &v, std::int64_t g_bound)
{
    const Rational start = np(h, v);
    return MollifierReport{zero_like(h, g_bound),
                           h,
                           PuiseuxPoly(h.p(), h.e()),
                           {},
                           start,
                           start,
                           npinf(h, v),
                           MollifyCase::AlreadyAdmissible,
                           std::nullopt};
}

} // namespace

std::string_view to_string(MollifyCase c) noexcept
{
    switch (c) {
    case MollifyCase::AlreadyAdmissible:
        return "AlreadyAdmissible";
    case MollifyCase::Mollified:
        return "Mollified";
    case MollifyCase::NegativeCertificate:
        return "NegativeCertificate";
    }
    return "Unknown";
}

FiberSeries reduce_step(const FiberSeries &h, const ToricValuation &v)
{
    const Rational level = np(h, v);
    if (level == npinf(h, v)) {
        throw Error(ErrorCode::AlreadyOptimal, "np already equals npinf (" + level.to_string() + ")");
    }
    FiberSeries g = zero_like(h, h.bound());
    const auto p = static_cast<std::int64_t>(h.p());
    for (const auto &[k, num] : h.coeffs()) {
        if (is_zero_index(k)) {
            continue;
        }
        const PuiseuxPoly part = v.graded_part(h.coefficient(k), level);
        if (part.is_zero()) {
            continue;
        }
        if (is_lambda_index(k, h.p())) {
            throw Error(ErrorCode::NotPDivisible, "leading term at an index prime to p");
        }
        FiberIndex q = k;
        for (auto &x : q) {
            x /= p;
        }
        g.add_coefficient(q, (-part).p_root());
    }
    return g;
}

std::size_t mollify_step_bound(const FiberSeries &h, const ToricValuation &v)
{
    std::vector<PuiseuxPoly> generators;
    for (std::size_t i = 0; i < h.e(); ++i) {
        generators.push_back(PuiseuxPoly::variable(h.p(), h.e(), i));
    }
    unsigned depth = 0;
    for (std::int64_t t = 1; t < h.bound(); t *= h.p()) {
        ++depth;
    }
    return value_window(v, h.pi(), generators, depth).size();
}

MollifierReport mollify_minimal(const FiberSeries &h, const ToricValuation &v, std::size_t max_steps)
{
    MollifierReport report = make_report(h, v, h.bound());
    if (report.initial_np == report.npinf) {
        return report;
    }
    FiberSeries current = h;
    while (np(current, v) < report.npinf) {
        if (report.trace.size() >= max_steps) {
            throw Error(ErrorCode::IterationLimit, "mollifier loop exceeded " + std::to_string(max_steps) + " steps");
        }
        const FiberSeries g = reduce_step(current, v);
        current = as_twist(current, g, true);
        report.g = add_series(report.g, g);
        report.trace.push_back(np(current, v));
    }
    report.twisted = std::move(current);
    report.final_np = report.trace.back();
    report.kind = MollifyCase::Mollified;
    return report;
}

MollifierReport mollify_monomial(const FiberSeries &f, const ToricValuation &v, const std::vector<std::size_t> &designated)
{
    if (designated.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no designated variable");
    }
    if (designated.size() > 1) {
        throw Error(ErrorCode::WeightsDependent, "weights of two or more designated variables are Q-linearly dependent");
    }
    const std::size_t j = designated.front();
    if (j >= f.e() || v.weights().at(j).sign() <= 0) {
        throw Error(ErrorCode::InvalidArgument, "designated variable must exist and have positive weight");
    }
    const auto &pi_exps = f.pi().terms().begin()->first;
    for (std::size_t i = 0; i < f.e(); ++i) {
        if (i != j && v.weights()[i].sign() != 0 && !pi_exps[i].is_zero()) {
            throw Error(ErrorCode::PiNotMonomial, "pi involves a weighted variable besides the designated one");
        }
    }
    for (const auto &[k, num] : f.coeffs()) {
        for (const auto &[exps, c] : num.terms()) {
            for (std::size_t i = 0; i < f.e(); ++i) {
                if (v.weights()[i].sign() != 0 && exps[i].sign() < 0) {
                    throw Error(ErrorCode::NotPolynomial, "numerator has a negative power of a weighted variable");
                }
            }
        }
    }

    const std::uint32_t p = f.p();
    const auto pp = static_cast<std::int64_t>(p);

    // b_n for negative s_j-exponents n = rep * p^e, grouped by rep.
    std::map<std::int64_t, std::map<std::int64_t, SeriesMap>> chains;
    for (const auto &[k, num] : f.coeffs()) {
        const PuiseuxPoly coeff = f.coefficient(k);
        for (const auto &[exps, c] : coeff.terms()) {
            const Rational n = exps[j];
            if (n.sign() >= 0) {
                continue;
            }
            std::int64_t rep = n.num();
            std::int64_t e = -static_cast<std::int64_t>(vp(n.den(), p));
            while (rep % pp == 0) {
                rep /= pp;
                ++e;
            }
            Exponents stripped = exps;
            stripped[j] = 0;
            accumulate(chains[rep][e], k, PuiseuxPoly::monomial(p, f.e(), c, stripped));
        }
    }

    unsigned depth = 0;
    for (const auto &[rep, members] : chains) {
        depth = std::max(depth, static_cast<unsigned>(members.rbegin()->first - members.begin()->first));
    }
    const std::int64_t big_bound = f.bound() * ipow(pp, depth);

    MollifierReport report = make_report(f, v, big_bound);
    FiberSeries g = zero_like(f, big_bound);
    PuiseuxPoly absorbed(p, f.e());
    std::optional<NegativeCertificate> best;

    for (const auto &[rep, members] : chains) {
        const std::int64_t top = members.rbegin()->first;
        const std::int64_t bottom = members.begin()->first;
        const auto d = static_cast<unsigned>(top - bottom);
        const auto s_pow = [&](std::int64_t e) {
            Rational r(rep);
            r *= pow(Rational(pp), e);
            return PuiseuxPoly::variable(p, f.e(), j, r);
        };
        const auto member = [&](std::int64_t e) -> SeriesMap {
            const auto it = members.find(e);
            return it == members.end() ? SeriesMap{} : it->second;
        };

        // c_top = sum_i b_{top - i}^{p^i}.
        SeriesMap folded;
        for (unsigned i = 0; i <= d; ++i) {
            for (const auto &[k, c] : frobenius_series(member(top - i), p, i)) {
                accumulate(folded, k, c);
            }
        }
        const Rational top_value = Rational(rep) * pow(Rational(pp), top) * v.weights()[j];
        for (const auto &[k, c] : folded) {
            if (is_zero_index(k)) {
                absorbed += c * s_pow(top);
                continue;
            }
            for (const auto &[exps, coeff] : c.terms()) {
                const Rational value = top_value + v.pairing(exps);
                if (value.sign() >= 0) {
                    continue;
                }
                const unsigned K = index_valuation(k, p);
                const Rational bound = value / pow(Rational(pp), K);
                if (!best || bound < best->bound) {
                    best = NegativeCertificate{j, Rational(rep) * pow(Rational(pp), top), k, K, K, bound};
                }
            }
        }

        // g += sum_{i=1}^{d} T_i^{p^{i-1}}, T_i = sum_{l=i}^{d} b_{top-l} s^{n_{top-l}}.
        for (unsigned i = 1; i <= d; ++i) {
            SeriesMap t;
            for (unsigned l = i; l <= d; ++l) {
                for (const auto &[k, c] : times_monomial(member(top - l), s_pow(top - l))) {
                    accumulate(t, k, c);
                }
            }
            for (const auto &[k, c] : frobenius_series(t, p, i - 1)) {
                g.add_coefficient(k, c);
            }
        }
    }

    if (best) {
        report.kind = MollifyCase::NegativeCertificate;
        report.certificate = best;
        return report;
    }
    if (report.initial_np.sign() == 0) {
        return report;
    }
    report.g = g;
    report.twisted = as_twist(f.with_bound(big_bound), g, true);
    report.twisted.add_coefficient(FiberIndex(f.d(), 0), -absorbed);
    report.absorbed_constant = absorbed;
    report.final_np = np(report.twisted, v);
    report.trace.push_back(report.final_np);
    report.kind = MollifyCase::Mollified;
    return report;
}

MollifierReport divisor_chain_mollify(const FiberSeries &f, std::vector<std::size_t> chain)
{
    const auto &pi_exps = f.pi().terms().begin()->first;
    if (chain.empty()) {
        for (std::size_t i = 0; i < f.e(); ++i) {
            if (pi_exps[i].sign() > 0) {
                chain.push_back(i);
            }
        }
    }
    for (std::size_t i = 0; i < f.e(); ++i) {
        const bool in_chain = std::find(chain.begin(), chain.end(), i) != chain.end();
        if (pi_exps[i].sign() < 0 || (!in_chain && !pi_exps[i].is_zero())) {
            throw Error(ErrorCode::PiNotMonomial, "pi must be a product of nonnegative powers of the chain coordinates");
        }
    }
    for (std::size_t pos = 0; pos < chain.size(); ++pos) {
        if (chain[pos] >= f.e()) {
            throw Error(ErrorCode::InvalidArgument, "chain coordinate out of range");
        }
        const ToricValuation vd = ToricValuation::divisorial(f.e(), chain[pos]);
        const Rational inf = npinf(f, vd);
        if (inf.sign() < 0) {
            const MollifierReport r = mollify_monomial(f, vd, {chain[pos]});
            throw DivisorObstructionError(pos, r.certificate,
                                          "npinf = " + inf.to_string() + " < 0 along divisor s" + std::to_string(chain[pos] + 1)
                                              + " = 0");
        }
    }

    const ToricValuation uniform(std::vector<Rational>(f.e(), Rational(1)));
    MollifierReport report = make_report(f, uniform, f.bound());
    FiberSeries current = f;
    for (std::size_t pos = chain.size(); pos-- > 0;) {
        const std::size_t coord = chain[pos];
        const ToricValuation vd = ToricValuation::divisorial(f.e(), coord);
        const MollifierReport step = mollify_monomial(current, vd, {coord});
        if (step.kind == MollifyCase::NegativeCertificate) {
            throw DivisorObstructionError(pos, step.certificate, "obstruction appeared along the chain");
        }
        if (step.kind == MollifyCase::Mollified) {
            report.g = add_series(report.g, step.g);
            report.absorbed_constant += step.absorbed_constant;
            current = step.twisted;
        }
        // Constant terms with a pole along this divisor are absorbed.
        const PuiseuxPoly constant = current.coefficient(FiberIndex(f.d(), 0));
        const PuiseuxPoly pole = constant.filter([&](const Exponents &e) { return e[coord].sign() < 0; });
        if (!pole.is_zero()) {
            current.add_coefficient(FiberIndex(f.d(), 0), -pole);
            report.absorbed_constant += pole;
        }
        Exponents exps = current.pi().terms().begin()->first;
        const std::uint32_t c = current.pi().terms().begin()->second;
        exps[coord] = 0;
        current = current.with_pi(PuiseuxPoly::monomial(f.p(), f.e(), c, exps));
    }
    for (const auto &[k, num] : current.coeffs()) {
        if (is_zero_index(k)) {
            continue;
        }
        const PuiseuxPoly coeff = current.coefficient(k);
        for (const auto &[exps, c] : coeff.terms()) {
            for (const auto coord : chain) {
                if (exps[coord].sign() < 0) {
                    throw Error(ErrorCode::DivisorObstruction, "pole left after clearing the chain");
                }
            }
        }
    }
    report.twisted = current;
    report.final_np = np(current, uniform);
    if (report.final_np > report.initial_np) {
        report.trace.push_back(report.final_np);
        report.kind = MollifyCase::Mollified;
    }
    return report;
}

} // namespace molly
