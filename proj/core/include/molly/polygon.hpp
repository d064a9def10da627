#ifndef MOLLY_POLYGON_HPP
#define MOLLY_POLYGON_HPP

#include <molly/rational.hpp>
#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <optional>
#include <span>
#include <vector>

namespace molly
{

struct Line {
    Rational intercept;
    Rational slope;

    [[nodiscard]] Rational at(const Rational &s) const
    {
        return intercept + slope * s;
    }
    friend bool operator==(const Line &, const Line &) = default;
};

// Closed interval; a missing end is infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    [[nodiscard]] bool contains(const Rational &s) const
    {
        return (!lo || *lo <= s) && (!hi || s <= *hi);
    }
};

struct Piece {
    std::optional<Rational> start;
    std::optional<Rational> end;
    Line line;
    // Position of the line in the input family.
    std::size_t source = 0;
};

struct Break {
    Rational s;
    Rational value;
    // Left slope minus right slope; positive for a concave polygon.
    Rational slope_change;
};

// Pointwise minimum of finitely many lines on an interval.
class Polygon
{
public:
    Polygon(Interval interval, std::vector<Piece> pieces);

    [[nodiscard]] const Interval &interval() const noexcept
    {
        return m_interval;
    }
    [[nodiscard]] const std::vector<Piece> &pieces() const noexcept
    {
        return m_pieces;
    }
    [[nodiscard]] std::vector<Break> breaks() const;
    // InvalidInterval outside the domain.
    [[nodiscard]] Rational operator()(const Rational &s) const;

    // Slopes strictly decrease and adjacent pieces meet.
    [[nodiscard]] bool is_concave() const;
    [[nodiscard]] bool is_continuous() const;

private:
    Interval m_interval;
    std::vector<Piece> m_pieces;
};

// Lower envelope by slope sort and a single sweep. Parallel lines keep the
// lower intercept, exact duplicates the lowest index. EmptyFamily for no
// lines, InvalidInterval when lo > hi.
Polygon envelope(std::span<const Line> lines, const Interval &interval);

Polygon min_with_zero(const Polygon &poly);
// Values and slopes times factor (> 0).
Polygon scale(const Polygon &poly, const Rational &factor);
Rational terminal_slope(const Polygon &poly);

// a -> min_i { v_i + i a } over the whole line; infinite entries skipped.
Polygon complete_valuation_polygon(std::span<const Value> coeff_vals);

// s -> min_i { v0(c_i) + i s } on [0, hi] (hi empty for +infinity).
Polygon gauss_path_polygon(std::span<const PuiseuxPoly> coeffs, const ToricValuation &v0, std::optional<Rational> hi);

// NP^(inf) of f along U(s) = u0 + s * direction. Weights must be positive on
// the interval (WeightsNonpositive otherwise); the lower end must be finite.
Polygon npinf_polygon(const FiberSeries &f, const std::vector<Rational> &u0, const std::vector<Rational> &direction,
                      const Interval &interval);

} // namespace molly

#endif
