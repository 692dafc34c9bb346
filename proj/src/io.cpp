#include "dsurf/io.hpp"

#include <cstdio>

namespace dsurf {

std::string format_double(double v) {
    char buf[40];
    if (v == 0.0) v = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<CsvRow>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const CsvRow& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_double(r[i]);
        out << '\n';
    }
}

const std::vector<std::string>& curve_csv_header() {
    static const std::vector<std::string> h{"t", "m", "x", "y", "z", "Bx", "By", "Bz"};
    return h;
}

std::vector<CsvRow> curve_rows(const CurveSnapshot& s) {
    std::vector<CsvRow> rows;
    rows.reserve(s.points.size());
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const Vec3& p = s.points[i];
        const Vec3& b = s.binormals[i];
        rows.push_back({s.t, static_cast<double>(s.m_first + static_cast<long>(i)), p.x, p.y, p.z, b.x, b.y, b.z});
    }
    return rows;
}

void write_obj(std::ostream& out, const KGrid& g) {
    out << "# discrete K-surface " << g.M << " x " << g.N << '\n';
    for (const Vec3& p : g.points)
        out << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z) << '\n';
    for (long i = 0; i + 1 < g.M; ++i)
        for (long j = 0; j + 1 < g.N; ++j) {
            const std::size_t a = g.index(i, j) + 1, b = g.index(i + 1, j) + 1;
            const std::size_t c = g.index(i + 1, j + 1) + 1, d = g.index(i, j + 1) + 1;
            out << "f " << a << ' ' << b << ' ' << c << ' ' << d << '\n';
        }
}

}  // namespace dsurf
