#include "tamesys/io.hpp"

#include <fstream>
#include <sstream>

namespace tamesys {

namespace {

unsigned long parse_ulong(const std::string& tok) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw ParseError("trailing characters in number: " + tok);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a number: " + tok);
    }
}

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        return line.substr(a, b - a + 1);
    }
    return {};
}

FieldPtr parse_field_header(const std::string& line) {
    if (line.rfind("q=", 0) != 0) throw ParseError("expected q=<order> header");
    std::istringstream ss(line.substr(2));
    std::string qtok;
    ss >> qtok;
    std::size_t caret = qtok.find('^');
    if (caret == std::string::npos) {
        // prime order, or a prime power without explicit modulus
        unsigned long q = parse_ulong(qtok);
        for (unsigned long p = 2; p * p <= q; ++p) {
            if (q % p) continue;
            unsigned long e = 0, v = q;
            while (v % p == 0) { v /= p; ++e; }
            if (v != 1) break;  // not a prime power; let field_make reject it
            return field_make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
        }
        return field_make(static_cast<std::uint32_t>(q));
    }
    unsigned long p = parse_ulong(qtok.substr(0, caret));
    unsigned long e = parse_ulong(qtok.substr(caret + 1));
    std::string polytok;
    ss >> polytok;
    std::vector<std::uint32_t> modulus;
    if (!polytok.empty()) {
        if (polytok.rfind("poly=", 0) != 0) throw ParseError("expected poly=<c0,c1,...>");
        std::istringstream ps(polytok.substr(5));
        std::string item;
        while (std::getline(ps, item, ','))
            modulus.push_back(static_cast<std::uint32_t>(parse_ulong(item)));
    }
    return field_make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), modulus);
}

}  // namespace

Mat read_matrix(std::istream& in) {
    std::string header = next_data_line(in);
    if (header.empty()) throw ParseError("empty matrix file");
    FieldPtr f = parse_field_header(header);

    std::vector<std::vector<long long>> rows;
    std::string line;
    while (!(line = next_data_line(in)).empty()) {
        std::istringstream ss(line);
        std::vector<long long> row;
        long long v;
        while (ss >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix has no rows");
    return Mat::from_rows(f, rows);
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Mat& m) {
    const Field& F = *m.field();
    if (F.e() == 1) {
        out << "q=" << F.q() << "\n";
    } else {
        out << "q=" << F.p() << "^" << F.e() << " poly=";
        for (std::size_t i = 0; i < F.modulus().size(); ++i)
            out << (i ? "," : "") << F.modulus()[i];
        out << "\n";
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << "\n";
    }
}

namespace {

std::size_t parse_dim_header(std::istream& in) {
    std::string header = next_data_line(in);
    if (header.rfind("n=", 0) != 0) throw ParseError("expected n=<dim> header");
    return parse_ulong(header.substr(2));
}

}  // namespace

Tuple read_tuple(std::istream& in, const FieldPtr& f) {
    Tuple x;
    x.field = f;
    x.n = parse_dim_header(in);
    std::string line;
    while (!(line = next_data_line(in)).empty()) {
        std::istringstream ss(line);
        Point p;
        long long v;
        while (ss >> v) p.push_back(f->from_signed(v));
        if (p.size() != x.n) throw ParseError("point has wrong dimension");
        x.points.push_back(std::move(p));
    }
    if (x.points.empty() && x.n > 0) throw ParseError("tuple has no points");
    return x;
}

Tuple read_tuple_file(const std::string& path, const FieldPtr& f) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_tuple(in, f);
}

void write_tuple(std::ostream& out, const Tuple& x) {
    out << "n=" << x.n << "\n";
    for (const Point& p : x.points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << "\n";
    }
}

PointSet read_pointset(std::istream& in, const FieldPtr& f) {
    std::size_t n = parse_dim_header(in);
    PointSet s(f, n);
    std::string line;
    while (!(line = next_data_line(in)).empty()) {
        std::istringstream ss(line);
        Code c;
        while (ss >> c) s.add(c);
    }
    return s;
}

PointSet read_pointset_file(const std::string& path, const FieldPtr& f) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_pointset(in, f);
}

void write_pointset(std::ostream& out, const PointSet& s) {
    out << "n=" << s.n() << "\n";
    for (Code c : s.codes()) out << c << "\n";
}

}  // namespace tamesys
