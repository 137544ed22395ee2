#include "cdmc/tsplib.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace cdmc::tsplib {

namespace {

// Constant used by the TSPLIB reference implementation (not M_PI).
constexpr double kTsplibPi = 3.141592;
constexpr double kEarthRadius = 6378.388;

double nint(double x) {
    return x >= 0.0 ? std::floor(x + 0.5) : std::ceil(x - 0.5);
}

double geo_radians(double x) {
    const double deg = std::trunc(x);
    const double minutes = x - deg;
    return kTsplibPi * (deg + 5.0 * minutes / 3.0) / 180.0;
}

struct Line {
    std::string text;
    int number = 0;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::optional<Line> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            const auto first = raw.find_first_not_of(" \t\r\n");
            if (first == std::string::npos) continue;   // blank line
            const auto last = raw.find_last_not_of(" \t\r\n");
            return Line{raw.substr(first, last - first + 1), line_no_};
        }
        return std::nullopt;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

// Splits "KEYWORD : value" / "KEYWORD: value" / "KEYWORD" into key and value.
std::pair<std::string, std::string> split_keyword(const std::string& line) {
    const auto colon = line.find(':');
    std::string key = line.substr(0, colon == std::string::npos ? line.size() : colon);
    const auto kend = key.find_last_not_of(" \t");
    key = key.substr(0, kend == std::string::npos ? 0 : kend + 1);
    std::string value;
    if (colon != std::string::npos) {
        value = line.substr(colon + 1);
        const auto vbeg = value.find_first_not_of(" \t");
        value = vbeg == std::string::npos ? "" : value.substr(vbeg);
    }
    return {key, value};
}

bool is_section_keyword(const std::string& key) {
    return key == "NODE_COORD_SECTION" || key == "EDGE_WEIGHT_SECTION" ||
           key == "DISPLAY_DATA_SECTION" || key == "EOF";
}

enum class WeightType { Euc2d, Geo, Att, Explicit };
enum class WeightFormat { FullMatrix, UpperRow, LowerRow, UpperDiagRow, LowerDiagRow };

} // namespace

int dist_euc2d(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    return static_cast<int>(nint(std::sqrt(dx * dx + dy * dy)));
}

int dist_geo(double alat, double alon, double blat, double blon) {
    const double la1 = geo_radians(alat);
    const double lo1 = geo_radians(alon);
    const double la2 = geo_radians(blat);
    const double lo2 = geo_radians(blon);
    const double q1 = std::cos(lo1 - lo2);
    const double q2 = std::cos(la1 - la2);
    const double q3 = std::cos(la1 + la2);
    double arg = 0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3);
    arg = std::clamp(arg, -1.0, 1.0);
    return static_cast<int>(kEarthRadius * std::acos(arg) + 1.0);
}

int dist_att(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
    const double t = nint(r);
    return static_cast<int>(t < r ? t + 1.0 : t);
}

WeightedGraph parse(std::istream& source, CoordDistance coord_mode) {
    Reader reader(source);

    std::string name;
    int dimension = -1;
    std::optional<WeightType> wtype;
    std::optional<WeightFormat> wformat;
    std::vector<std::pair<double, double>> coords;
    std::vector<double> weight_entries;
    bool saw_coord_section = false;
    bool saw_weight_section = false;

    auto read_weights_line = [](const Line& wl, std::vector<double>& out,
                                std::size_t count) {
        std::istringstream ss(wl.text);
        double v;
        while (out.size() < count && ss >> v) {
            out.push_back(v);
        }
        ss.clear();
        std::string rest;
        if (ss >> rest) {
            if (out.size() >= count) {
                throw ParseError("EDGE_WEIGHT_SECTION has too many entries", wl.number);
            }
            throw ParseError("non-numeric token '" + rest + "' in EDGE_WEIGHT_SECTION",
                             wl.number);
        }
    };

    while (auto line = reader.next()) {
        auto [key, value] = split_keyword(line->text);
        if (key == "EOF") break;
        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE" || key == "COMMENT" || key == "DISPLAY_DATA_TYPE" ||
                   key == "NODE_COORD_TYPE") {
            // informational; ignored
        } else if (key == "DIMENSION") {
            try {
                dimension = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("invalid DIMENSION value '" + value + "'", line->number);
            }
            if (dimension < 2) {
                throw ParseError("DIMENSION must be at least 2", line->number);
            }
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "EUC_2D") wtype = WeightType::Euc2d;
            else if (value == "GEO") wtype = WeightType::Geo;
            else if (value == "ATT") wtype = WeightType::Att;
            else if (value == "EXPLICIT") wtype = WeightType::Explicit;
            else throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + value + "'",
                                              line->number);
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            if (value == "FULL_MATRIX") wformat = WeightFormat::FullMatrix;
            else if (value == "UPPER_ROW") wformat = WeightFormat::UpperRow;
            else if (value == "LOWER_ROW") wformat = WeightFormat::LowerRow;
            else if (value == "UPPER_DIAG_ROW") wformat = WeightFormat::UpperDiagRow;
            else if (value == "LOWER_DIAG_ROW") wformat = WeightFormat::LowerDiagRow;
            else if (value == "FUNCTION") wformat.reset();
            else throw UnsupportedFormatError("unsupported EDGE_WEIGHT_FORMAT '" + value + "'",
                                              line->number);
        } else if (key == "NODE_COORD_SECTION") {
            if (dimension < 0) {
                throw ParseError("NODE_COORD_SECTION before DIMENSION", line->number);
            }
            saw_coord_section = true;
            coords.assign(dimension, {std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN()});
            for (int k = 0; k < dimension; ++k) {
                auto cl = reader.next();
                if (!cl) {
                    throw ParseError("unexpected end of file in NODE_COORD_SECTION",
                                     reader.line_no());
                }
                std::istringstream ss(cl->text);
                int idx;
                double x, y;
                if (!(ss >> idx >> x >> y)) {
                    throw ParseError("malformed coordinate line '" + cl->text + "'",
                                     cl->number);
                }
                if (idx < 1 || idx > dimension) {
                    throw ParseError("coordinate index out of range", cl->number);
                }
                coords[idx - 1] = {x, y};
            }
            for (const auto& [x, y] : coords) {
                if (std::isnan(x)) {
                    throw ParseError("NODE_COORD_SECTION is missing entries",
                                     reader.line_no());
                }
            }
        } else if (key == "EDGE_WEIGHT_SECTION") {
            if (dimension < 0) {
                throw ParseError("EDGE_WEIGHT_SECTION before DIMENSION", line->number);
            }
            if (!wformat) {
                throw ParseError("EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT",
                                 line->number);
            }
            saw_weight_section = true;
            const std::size_t nd = static_cast<std::size_t>(dimension);
            std::size_t count = 0;
            switch (*wformat) {
            case WeightFormat::FullMatrix: count = nd * nd; break;
            case WeightFormat::UpperRow:
            case WeightFormat::LowerRow: count = nd * (nd - 1) / 2; break;
            case WeightFormat::UpperDiagRow:
            case WeightFormat::LowerDiagRow: count = nd * (nd + 1) / 2; break;
            }
            weight_entries.reserve(count);
            while (weight_entries.size() < count) {
                auto wl = reader.next();
                if (!wl) {
                    throw ParseError("EDGE_WEIGHT_SECTION has too few entries",
                                     reader.line_no());
                }
                if (is_section_keyword(split_keyword(wl->text).first)) {
                    throw ParseError("EDGE_WEIGHT_SECTION has too few entries", wl->number);
                }
                read_weights_line(*wl, weight_entries, count);
            }
        } else if (key == "DISPLAY_DATA_SECTION") {
            if (dimension < 0) {
                throw ParseError("DISPLAY_DATA_SECTION before DIMENSION", line->number);
            }
            for (int k = 0; k < dimension; ++k) {
                if (!reader.next()) break;
            }
        } else {
            throw ParseError("unknown keyword '" + key + "'", line->number);
        }
    }

    if (dimension < 0) throw ParseError("missing DIMENSION");
    if (!wtype) throw ParseError("missing EDGE_WEIGHT_TYPE");

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dimension, dimension);

    if (*wtype == WeightType::Explicit) {
        if (!saw_weight_section) throw ParseError("missing EDGE_WEIGHT_SECTION");
        std::size_t k = 0;
        auto at = [&]() -> double { return weight_entries[k++]; };
        switch (*wformat) {
        case WeightFormat::FullMatrix:
            for (int i = 0; i < dimension; ++i)
                for (int j = 0; j < dimension; ++j)
                    w(i, j) = at();
            for (int i = 0; i < dimension; ++i) {
                if (w(i, i) != 0.0) {
                    throw ParseError("FULL_MATRIX has a nonzero diagonal entry");
                }
                for (int j = i + 1; j < dimension; ++j) {
                    if (w(i, j) != w(j, i)) {
                        throw ParseError("FULL_MATRIX is not symmetric");
                    }
                }
            }
            break;
        case WeightFormat::UpperRow:
            for (int i = 0; i < dimension; ++i)
                for (int j = i + 1; j < dimension; ++j)
                    w(i, j) = w(j, i) = at();
            break;
        case WeightFormat::LowerRow:
            for (int i = 0; i < dimension; ++i)
                for (int j = 0; j < i; ++j)
                    w(i, j) = w(j, i) = at();
            break;
        case WeightFormat::UpperDiagRow:
            for (int i = 0; i < dimension; ++i)
                for (int j = i; j < dimension; ++j) {
                    const double v = at();
                    if (i == j) {
                        if (v != 0.0) throw ParseError("nonzero diagonal entry");
                    } else {
                        w(i, j) = w(j, i) = v;
                    }
                }
            break;
        case WeightFormat::LowerDiagRow:
            for (int i = 0; i < dimension; ++i)
                for (int j = 0; j <= i; ++j) {
                    const double v = at();
                    if (i == j) {
                        if (v != 0.0) throw ParseError("nonzero diagonal entry");
                    } else {
                        w(i, j) = w(j, i) = v;
                    }
                }
            break;
        }
    } else {
        if (!saw_coord_section) throw ParseError("missing NODE_COORD_SECTION");
        const bool as_euclidean = coord_mode == CoordDistance::ForceEuc2d;
        for (int i = 0; i < dimension; ++i) {
            for (int j = i + 1; j < dimension; ++j) {
                const auto& a = coords[i];
                const auto& b = coords[j];
                double d = 0.0;
                if (as_euclidean) {
                    d = dist_euc2d(a.first, a.second, b.first, b.second);
                } else {
                    switch (*wtype) {
                    case WeightType::Euc2d:
                        d = dist_euc2d(a.first, a.second, b.first, b.second);
                        break;
                    case WeightType::Geo:
                        d = dist_geo(a.first, a.second, b.first, b.second);
                        break;
                    case WeightType::Att:
                        d = dist_att(a.first, a.second, b.first, b.second);
                        break;
                    case WeightType::Explicit:
                        break; // unreachable
                    }
                }
                w(i, j) = w(j, i) = d;
            }
        }
    }

    return WeightedGraph(std::move(w), name);
}

WeightedGraph parse_string(const std::string& text, CoordDistance coord_mode) {
    std::istringstream ss(text);
    return parse(ss, coord_mode);
}

WeightedGraph parse_file(const std::string& path, CoordDistance coord_mode) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open instance file '" + path + "'");
    }
    return parse(in, coord_mode);
}

std::string write_explicit_full_matrix(const WeightedGraph& graph) {
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    const int n = graph.num_vertices();
    out << "NAME: " << (graph.name().empty() ? "unnamed" : graph.name()) << "\n"
        << "TYPE: TSP\n"
        << "DIMENSION: " << n << "\n"
        << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out << (j ? " " : "") << graph.weight(i, j);
        }
        out << "\n";
    }
    out << "EOF\n";
    return out.str();
}

} // namespace cdmc::tsplib
