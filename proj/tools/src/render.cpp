#include "scenario.hpp"

#include <algorithm>
#include <cstdio>

namespace molly::cli
{

namespace
{

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string csv_cell(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string approx_text(const json &j)
{
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        return buf;
    }
    return j.dump();
}

void walk(const json &j, const std::string &path, std::size_t index, const std::string &task, std::string &out)
{
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            if (key.size() > 7 && key.compare(key.size() - 7, 7, "_approx") == 0) {
                continue;
            }
            // Series and polynomial payloads stay in the JSON output; csv gets their text form.
            if (key == "g" || key == "twisted" || key == "absorbed_constant" || key == "section" || key == "c" ||
                key == "terms" || key == "basis" || key == "sequence") {
                continue;
            }
            const std::string sub = path.empty() ? key : path + "." + key;
            const std::string akey = key + "_approx";
            if (value.is_string() && (j.contains(akey) || key.ends_with("_text") || key == "code")) {
                out += std::to_string(index) + "," + csv_cell(task) + "," + csv_cell(sub) + "," +
                       csv_cell(value.get<std::string>()) + "," + (j.contains(akey) ? approx_text(j.at(akey)) : "") +
                       "\n";
            } else if (value.is_structured()) {
                walk(value, sub, index, task, out);
            } else if (value.is_boolean() || value.is_number_integer() || value.is_number_unsigned()) {
                out += std::to_string(index) + "," + csv_cell(task) + "," + csv_cell(sub) + "," + value.dump() + ",\n";
            }
        }
    } else if (j.is_array()) {
        // Only arrays of objects carry exact values worth flattening.
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_object()) {
                walk(j[i], path + "[" + std::to_string(i) + "]", index, task, out);
            }
        }
    }
}

// Sample abscissae: finite ends, every break, and one step past an open end.
std::vector<Rational> samples(const Polygon &poly)
{
    std::vector<Rational> xs;
    const auto breaks = poly.breaks();
    if (poly.interval().lo) {
        xs.push_back(*poly.interval().lo);
    }
    for (const auto &b : breaks) {
        if (xs.empty() || xs.back() != b.s) {
            xs.push_back(b.s);
        }
    }
    if (!poly.interval().lo) {
        xs.insert(xs.begin(), xs.empty() ? Rational(-1) : xs.front() - Rational(1));
    }
    if (poly.interval().hi) {
        if (xs.back() != *poly.interval().hi) {
            xs.push_back(*poly.interval().hi);
        }
    } else {
        xs.push_back(xs.back() + Rational(1));
    }
    return xs;
}

} // namespace

std::string render_json(const json &envelope)
{
    return envelope.dump(2) + "\n";
}

std::string render_csv(const RunResult &r)
{
    std::string out = "index,task,field,exact,approx\n";
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        const auto &o = r.outcomes[i];
        const std::string task = o.result.value("task", std::string());
        walk(o.result, "", i, task, out);
        for (std::size_t k = 0; k < o.polygons.size(); ++k) {
            for (const auto &s : samples(o.polygons[k])) {
                const Rational v = o.polygons[k](s);
                out += std::to_string(i) + "," + csv_cell(task) + "," +
                       csv_cell("sample[" + std::to_string(k) + "]@" + s.to_string()) + "," + v.to_string() + "," +
                       approx_text(json(v.to_double())) + "\n";
            }
        }
    }
    return out;
}

std::string render_svg(const RunResult &r)
{
    constexpr double W = 480;
    constexpr double H = 320;
    constexpr double M = 48;
    std::vector<std::pair<std::string, const Polygon *>> panels;
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        for (const auto &poly : r.outcomes[i].polygons) {
            panels.emplace_back("task " + std::to_string(i) + ": " + r.outcomes[i].result.value("task", std::string()),
                                &poly);
        }
    }
    const double total = H * static_cast<double>(std::max<std::size_t>(1, panels.size()));
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" + fmt(total) +
                      "\" font-family=\"monospace\" font-size=\"10\">\n";
    if (panels.empty()) {
        out += "<text x=\"" + fmt(M) + "\" y=\"" + fmt(M) + "\">no polygon in this scenario</text>\n";
    }
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const Polygon &poly = *panels[k].second;
        const auto xs = samples(poly);
        std::vector<Rational> ys;
        for (const auto &x : xs) {
            ys.push_back(poly(x));
        }
        const double x0 = xs.front().to_double();
        const double x1 = xs.back().to_double();
        double y0 = std::min_element(ys.begin(), ys.end())->to_double();
        double y1 = std::max_element(ys.begin(), ys.end())->to_double();
        if (y1 - y0 < 1e-9) {
            y0 -= 1;
            y1 += 1;
        }
        const double top = H * static_cast<double>(k);
        const auto px = [&](double x) { return M + (W - 2 * M) * (x - x0) / (x1 - x0); };
        const auto py = [&](double y) { return top + H - M - (H - 2 * M) * (y - y0) / (y1 - y0); };
        out += "<g>\n<text x=\"" + fmt(M) + "\" y=\"" + fmt(top + 20) + "\">" + panels[k].first + "</text>\n";
        out += "<text x=\"" + fmt(W - M) + "\" y=\"" + fmt(top + H - 12) + "\">s</text>\n";
        out += "<text x=\"8\" y=\"" + fmt(top + H / 2) + "\">NP(s)</text>\n";
        out += "<path fill=\"none\" stroke=\"black\" d=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out += (i == 0 ? "M" : " L") + fmt(px(xs[i].to_double())) + " " + fmt(py(ys[i].to_double()));
        }
        out += "\"/>\n";
        for (const auto &b : poly.breaks()) {
            const double bx = px(b.s.to_double());
            const double by = py(b.value.to_double());
            out += "<circle cx=\"" + fmt(bx) + "\" cy=\"" + fmt(by) + "\" r=\"2.5\"/>\n";
            out += "<text x=\"" + fmt(bx + 4) + "\" y=\"" + fmt(by - 4) + "\">(" + b.s.to_string() + ", " +
                   b.value.to_string() + ")</text>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace molly::cli
