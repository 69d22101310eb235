#include "qps/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qps {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

DensityMatrix load_state(const std::string& path, double tol) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("dim") || !j.contains("rho"))
        throw ParseError(path + ": state file needs \"dim\" and \"rho\"");
    if (!j["dim"].is_number_integer())
        throw ParseError(path + ": \"dim\" must be an integer");
    const Dimension dim = Dimension::validate(j["dim"].get<int>());
    const int n = dim.n();
    const auto& rows = j["rho"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError(path + ": \"rho\" must have " + std::to_string(n) +
                         " rows");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(path + ": rho row " + std::to_string(i) +
                             " must have " + std::to_string(n) + " entries");
        for (int jj = 0; jj < n; ++jj) {
            const auto& e = row[jj];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
                !e[1].is_number())
                throw ParseError(path + ": rho entries must be [re, im] pairs");
            m(i, jj) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return DensityMatrix::validate(m, dim, tol);
}

void save_state(const std::string& path, const DensityMatrix& rho) {
    const int n = rho.dim().n();
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j)
            row.push_back({rho.matrix()(i, j).real(), rho.matrix()(i, j).imag()});
        rows.push_back(std::move(row));
    }
    auto out = open_out(path);
    out << json{{"dim", n}, {"rho", std::move(rows)}}.dump(2) << '\n';
}

void write_wigner_grid(const std::string& path, const RealGrid& w,
                       Dimension dim, FileFormat format) {
    const int n = dim.n();
    auto out = open_out(path);
    if (format == FileFormat::csv) {
        out << "q,p,value\n";
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
                out << q << ',' << p << ',' << format_double(w(q, p)) << '\n';
        return;
    }
    json rows = json::array();
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) rows.push_back({q, p, w(q, p)});
    out << json{{"kind", "wigner"}, {"dim", n}, {"rows", std::move(rows)}}.dump(2)
        << '\n';
}

void write_kirkwood_grid(const std::string& path, const ComplexGrid& k,
                         Dimension dim, FileFormat format) {
    const int n = dim.n();
    auto out = open_out(path);
    if (format == FileFormat::csv) {
        out << "q,p,re,im\n";
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
                out << q << ',' << p << ',' << format_double(k(p, q).real())
                    << ',' << format_double(k(p, q).imag()) << '\n';
        return;
    }
    json rows = json::array();
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            rows.push_back({q, p, k(p, q).real(), k(p, q).imag()});
    out << json{{"kind", "kirkwood"}, {"dim", n}, {"rows", std::move(rows)}}.dump(2)
        << '\n';
}

namespace {

GridData read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw ParseError(path + ": empty grid file");
    GridData data;
    if (header == "q,p,value")
        data.kind = GridKind::wigner;
    else if (header == "q,p,re,im")
        data.kind = GridKind::kirkwood;
    else
        throw ParseError(path + ": unrecognized CSV header \"" + header + "\"");

    struct Row {
        int q, p;
        Complex v;
    };
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        Row row{};
        char comma = 0;
        double re = 0.0, im = 0.0;
        ss >> row.q >> comma >> row.p >> comma >> re;
        if (data.kind == GridKind::kirkwood) ss >> comma >> im;
        if (!ss) throw ParseError(path + ": bad CSV row \"" + line + "\"");
        row.v = Complex(re, im);
        rows.push_back(row);
    }
    const int n = static_cast<int>(std::lround(std::sqrt(double(rows.size()))));
    if (static_cast<std::size_t>(n) * n != rows.size())
        throw ParseError(path + ": grid needs N^2 rows");
    data.dim = n;
    data.values = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& row : rows) {
        if (row.q < 0 || row.q >= n || row.p < 0 || row.p >= n)
            throw ParseError(path + ": grid index out of range");
        data.values(row.q, row.p) = row.v;
    }
    return data;
}

GridData read_grid_json(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.contains("kind") || !j.contains("dim") || !j.contains("rows"))
        throw ParseError(path + ": grid file needs kind, dim, rows");
    GridData data;
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "wigner")
        data.kind = GridKind::wigner;
    else if (kind == "kirkwood")
        data.kind = GridKind::kirkwood;
    else
        throw ParseError(path + ": unknown grid kind \"" + kind + "\"");
    data.dim = j["dim"].get<int>();
    const int n = data.dim;
    data.values = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& row : j["rows"]) {
        const int q = row[0].get<int>();
        const int p = row[1].get<int>();
        const double re = row[2].get<double>();
        const double im =
            data.kind == GridKind::kirkwood ? row[3].get<double>() : 0.0;
        data.values(q, p) = Complex(re, im);
    }
    return data;
}

}  // namespace

GridData read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    char first = 0;
    in >> first;
    in.close();
    return first == '{' ? read_grid_json(path) : read_grid_csv(path);
}

}  // namespace qps
