#include <molly/error.hpp>
#include <molly/polygon.hpp>

#include <algorithm>
#include <numeric>

namespace molly
{

namespace
{

// Parameter where a (steeper) and b meet.
Rational crossing(const Line &a, const Line &b)
{
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

} // namespace

Polygon::Polygon(Interval interval, std::vector<Piece> pieces) : m_interval(std::move(interval)), m_pieces(std::move(pieces))
{
    if (m_pieces.empty()) {
        throw Error(ErrorCode::EmptyFamily, "polygon without pieces");
    }
}

std::vector<Break> Polygon::breaks() const
{
    std::vector<Break> out;
    for (std::size_t i = 0; i + 1 < m_pieces.size(); ++i) {
        const Rational s = *m_pieces[i].end;
        out.push_back({s, m_pieces[i].line.at(s), m_pieces[i].line.slope - m_pieces[i + 1].line.slope});
    }
    return out;
}

Rational Polygon::operator()(const Rational &s) const
{
    if (!m_interval.contains(s)) {
        throw Error(ErrorCode::InvalidInterval, "parameter " + s.to_string() + " outside the polygon's domain");
    }
    for (const auto &piece : m_pieces) {
        if (!piece.end || s <= *piece.end) {
            return piece.line.at(s);
        }
    }
    return m_pieces.back().line.at(s);
}

bool Polygon::is_concave() const
{
    for (std::size_t i = 0; i + 1 < m_pieces.size(); ++i) {
        if (!(m_pieces[i].line.slope > m_pieces[i + 1].line.slope)) {
            return false;
        }
    }
    return true;
}

bool Polygon::is_continuous() const
{
    for (std::size_t i = 0; i + 1 < m_pieces.size(); ++i) {
        const auto &a = m_pieces[i];
        const auto &b = m_pieces[i + 1];
        if (!a.end || !b.start || *a.end != *b.start || a.line.at(*a.end) != b.line.at(*b.start)) {
            return false;
        }
    }
    return m_pieces.front().start == m_interval.lo && m_pieces.back().end == m_interval.hi;
}

Polygon envelope(std::span<const Line> lines, const Interval &interval)
{
    if (lines.empty()) {
        throw Error(ErrorCode::EmptyFamily, "envelope of an empty family");
    }
    if (interval.lo && interval.hi && *interval.lo > *interval.hi) {
        throw Error(ErrorCode::InvalidInterval, "interval lower end exceeds upper end");
    }
    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lines[a].slope != lines[b].slope) {
            return lines[a].slope > lines[b].slope;
        }
        return lines[a].intercept < lines[b].intercept;
    });

    std::vector<std::size_t> hull;
    for (const std::size_t idx : order) {
        if (!hull.empty() && lines[hull.back()].slope == lines[idx].slope) {
            continue;
        }
        while (hull.size() >= 2) {
            const Line &l1 = lines[hull[hull.size() - 2]];
            const Line &l2 = lines[hull.back()];
            if (crossing(l2, lines[idx]) <= crossing(l1, l2)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(idx);
    }

    std::vector<Piece> full;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Piece piece{std::nullopt, std::nullopt, lines[hull[i]], hull[i]};
        if (i > 0) {
            piece.start = crossing(lines[hull[i - 1]], lines[hull[i]]);
        }
        if (i + 1 < hull.size()) {
            piece.end = crossing(lines[hull[i]], lines[hull[i + 1]]);
        }
        full.push_back(piece);
    }

    std::vector<Piece> clipped;
    if (interval.lo && interval.hi && *interval.lo == *interval.hi) {
        for (const auto &piece : full) {
            if (!piece.end || *piece.end >= *interval.lo) {
                clipped.push_back(piece);
                break;
            }
        }
    } else {
        for (const auto &piece : full) {
            const bool after_lo = !interval.lo || !piece.end || *piece.end > *interval.lo;
            const bool before_hi = !interval.hi || !piece.start || *piece.start < *interval.hi;
            if (after_lo && before_hi) {
                clipped.push_back(piece);
            }
        }
    }
    clipped.front().start = interval.lo;
    clipped.back().end = interval.hi;
    return Polygon(interval, std::move(clipped));
}

Polygon min_with_zero(const Polygon &poly)
{
    std::vector<Line> lines;
    for (const auto &piece : poly.pieces()) {
        lines.push_back(piece.line);
    }
    lines.push_back(Line{0, 0});
    return envelope(lines, poly.interval());
}

Polygon scale(const Polygon &poly, const Rational &factor)
{
    if (factor.sign() <= 0) {
        throw Error(ErrorCode::InvalidArgument, "polygon scale factor must be positive");
    }
    std::vector<Piece> pieces = poly.pieces();
    for (auto &piece : pieces) {
        piece.line.intercept *= factor;
        piece.line.slope *= factor;
    }
    return Polygon(poly.interval(), std::move(pieces));
}

Rational terminal_slope(const Polygon &poly)
{
    return poly.pieces().back().line.slope;
}

Polygon complete_valuation_polygon(std::span<const Value> coeff_vals)
{
    std::vector<Line> lines;
    for (std::size_t i = 0; i < coeff_vals.size(); ++i) {
        if (coeff_vals[i].is_finite()) {
            lines.push_back(Line{coeff_vals[i].rational(), Rational(static_cast<std::int64_t>(i))});
        }
    }
    if (lines.empty()) {
        throw Error(ErrorCode::EmptyFamily, "polynomial with no nonzero coefficient");
    }
    return envelope(lines, Interval{});
}

Polygon gauss_path_polygon(std::span<const PuiseuxPoly> coeffs, const ToricValuation &v0, std::optional<Rational> hi)
{
    std::vector<Line> lines;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Value v = v0(coeffs[i]);
        if (v.is_finite()) {
            lines.push_back(Line{v.rational(), Rational(static_cast<std::int64_t>(i))});
        }
    }
    if (lines.empty()) {
        throw Error(ErrorCode::EmptyFamily, "Gauss path of the zero polynomial");
    }
    return envelope(lines, Interval{Rational(0), hi});
}

Polygon npinf_polygon(const FiberSeries &f, const std::vector<Rational> &u0, const std::vector<Rational> &direction,
                      const Interval &interval)
{
    if (u0.size() != f.e() || direction.size() != f.e()) {
        throw Error(ErrorCode::DimensionMismatch, "weight path does not match the base variables");
    }
    if (!interval.lo) {
        throw Error(ErrorCode::InvalidInterval, "weight path needs a finite lower end");
    }
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const bool low_ok = (u0[i] + *interval.lo * direction[i]).sign() > 0;
        const bool high_ok = interval.hi ? (u0[i] + *interval.hi * direction[i]).sign() > 0 : direction[i].sign() >= 0;
        if (!low_ok || !high_ok) {
            throw Error(ErrorCode::WeightsNonpositive, "weight " + std::to_string(i) + " is not positive on the interval");
        }
    }
    std::vector<Line> lines{Line{0, 0}};
    for (const auto &branch : lambda_decompose(f)) {
        const PuiseuxPoly section = full_section(f, branch.n);
        for (const auto &[exps, c] : section.terms()) {
            Line line{0, 0};
            for (std::size_t i = 0; i < exps.size(); ++i) {
                line.intercept += exps[i] * u0[i];
                line.slope += exps[i] * direction[i];
            }
            lines.push_back(line);
        }
    }
    return envelope(lines, interval);
}

} // namespace molly
