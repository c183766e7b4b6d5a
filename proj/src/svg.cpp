#include "qlrc/svg.hpp"

#include <sstream>

namespace qlrc {

std::string curves_csv(const std::vector<CurveSeries>& series) {
    if (series.size() != 4) throw ParameterError("expected four curve series");
    size_t rows = series[0].samples.size();
    for (const auto& s : series)
        if (s.samples.size() != rows) throw ParameterError("curve series length mismatch");
    std::ostringstream os;
    os << "delta,griesmer,cm,singleton,plotkin\n";
    for (size_t i = 0; i < rows; ++i) {
        os << decimal(series[0].samples[i].first, 12);
        for (const auto& s : series) os << ',' << decimal(s.samples[i].second, 12);
        os << '\n';
    }
    return os.str();
}

namespace {

struct Frame {
    double x0 = 70, y0 = 40, w = 560, h = 400;  // plot area inside the canvas
    double xmax = 0.5, ymax = 1.0;

    double px(double x) const { return x0 + x / xmax * w; }
    double py(double y) const { return y0 + (1.0 - y / ymax) * h; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

}  // namespace

std::string curves_svg(const std::vector<CurveSeries>& series, const std::string& title) {
    static const char* colors[4] = {"#c62828", "#1565c0", "#2e7d32", "#6a1b9a"};
    Frame fr;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"500\" "
          "viewBox=\"0 0 720 500\">\n";
    os << "<rect width=\"720\" height=\"500\" fill=\"white\"/>\n";
    os << "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"15\">" << title << "</text>\n";
    // axes box and ticks every 0.1
    os << "<rect x=\"" << fr.x0 << "\" y=\"" << fr.y0 << "\" width=\"" << fr.w
       << "\" height=\"" << fr.h << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double x = 0.1 * i;
        os << "<line x1=\"" << fr.px(x) << "\" y1=\"" << fr.py(0) << "\" x2=\"" << fr.px(x)
           << "\" y2=\"" << fr.py(0) + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fr.px(x) << "\" y=\"" << fr.py(0) + 20
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(x)
           << "</text>\n";
    }
    for (int i = 0; i <= 10; ++i) {
        double y = 0.1 * i;
        os << "<line x1=\"" << fr.x0 - 5 << "\" y1=\"" << fr.py(y) << "\" x2=\"" << fr.x0
           << "\" y2=\"" << fr.py(y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fr.x0 - 9 << "\" y=\"" << fr.py(y) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(y)
           << "</text>\n";
    }
    os << "<text x=\"" << fr.px(0.25) << "\" y=\"" << fr.py(0) + 38
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">delta</text>\n";
    os << "<text x=\"18\" y=\"" << fr.py(0.5)
       << "\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 "
       << fr.py(0.5) << ")\" text-anchor=\"middle\">rate</text>\n";

    for (size_t s = 0; s < series.size(); ++s) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[s % 4]
           << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [dx, dy] : series[s].samples) {
            double x = dx.convert_to<double>();
            double y = dy.convert_to<double>();
            os << fr.px(x) << ',' << fr.py(std::min(y, 1.0)) << ' ';
        }
        os << "\"/>\n";
        os << "<rect x=\"640\" y=\"" << 60 + 22 * s << "\" width=\"14\" height=\"3\" fill=\""
           << colors[s % 4] << "\"/>\n";
        os << "<text x=\"658\" y=\"" << 65 + 22 * s
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << series[s].which
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qlrc
