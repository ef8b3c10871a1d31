#pragma once

#include "cli/parse.hpp"

#include <sstream>
#include <string>

namespace sturm::cli {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

/// The unit segment cut at 0, {-alpha}, ..., {-m alpha}, 1; intervals shaded by weight and labeled by factor.
/// All coordinates are exact values rounded to 6 decimals.
inline std::string partition_svg(const Angle& alpha, std::size_t m, Convention convention) {
    if (m < 1 || m > 200) throw UsageError("svg partition needs 1 <= m <= 200");
    const IntervalPartition part = partition(alpha.value, m, convention);

    const long long left = 40, width = 920, bar_top = 70, bar_h = 40;
    const long long label_h = 8 * static_cast<long long>(m) + 20;
    const long long height = bar_top + bar_h + 30 + label_h;
    auto x = [&](const QI& v) { return to_decimal(QI(left) + QI(width) * v, 6); };
    auto d6 = [](const QI& v) { return to_decimal(v, 6); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"" << height
       << "\" viewBox=\"0 0 1000 " << height << "\">\n";
    os << "  <title>" << xml_escape("partition of the torus for alpha = " + alpha.cf.str() + ", m = " + std::to_string(m) +
                                    ", " + to_string(convention))
       << "</title>\n";
    os << "  <style>.heavy{fill:#f4a582}.light{fill:#92c5de}rect{stroke:#000;stroke-width:0.5}"
          "text{font-family:monospace;font-size:10px}</style>\n";
    os << "  <text x=\"" << left << "\" y=\"24\">alpha = " << xml_escape(alpha.cf.str()) << " ~ " << d6(alpha.value)
       << ", m = " << m << ", " << to_string(convention) << "</text>\n";
    os << "  <text x=\"" << left << "\" y=\"44\">heavy: " << heavy_parikh(alpha.value, m) << "  light: "
       << light_parikh(alpha.value, m) << "  max length: " << d6(part.max_len) << "</text>\n";

    os << "  <g id=\"intervals\">\n";
    for (const auto& iv : part.intervals) {
        const char* cls = iv.weight == Weight::Heavy ? "heavy" : "light";
        os << "    <rect class=\"" << cls << "\" x=\"" << x(iv.left) << "\" y=\"" << bar_top << "\" width=\""
           << d6(QI(width) * iv.length()) << "\" height=\"" << bar_h << "\" data-index=\"" << iv.index
           << "\" data-left=\"" << d6(iv.left) << "\" data-right=\"" << d6(iv.right) << "\" data-factor=\"" << iv.factor
           << "\" data-weight=\"" << cls << "\"/>\n";
    }
    os << "  </g>\n";

    os << "  <g id=\"ticks\">\n";
    for (std::size_t b = 0; b < part.boundaries.size(); ++b) {
        const std::string bx = x(part.boundaries[b]);
        os << "    <line x1=\"" << bx << "\" y1=\"" << bar_top - 6 << "\" x2=\"" << bx << "\" y2=\"" << bar_top + bar_h + 6
           << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    }
    os << "  </g>\n";

    os << "  <g id=\"labels\">\n";
    for (const auto& iv : part.intervals) {
        const std::string cx = x((iv.left + iv.right) / QI(2));
        const long long y = bar_top + bar_h + 20;
        os << "    <text x=\"" << cx << "\" y=\"" << y << "\" transform=\"rotate(90 " << cx << " " << y << ")\">L"
           << iv.index << " " << iv.factor << "</text>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace sturm::cli
