#include "qcblock/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcblock {

namespace {

u32 read_u32(std::istream& in, const char* what) {
    long long v;
    if (!(in >> v) || v < 0 || v > 0xffffffffLL)
        throw std::invalid_argument(std::string("expected ") + what);
    return u32(v);
}

void expect_word(std::istream& in, const std::string& want) {
    std::string got;
    if (!(in >> got) || got != want)
        throw std::invalid_argument("expected '" + want + "' header, got '" + got + "'");
}

u32 read_element(std::istream& in, const Field& F) {
    u32 v = read_u32(in, "field element");
    if (v >= F.q()) throw std::invalid_argument("element encoding out of range");
    return v;
}

}  // namespace

const Field& field_from_order(u32 q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    u32 p = q;
    for (u32 f = 2; u64(f) * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    u32 d = 0;
    u32 r = q;
    while (r % p == 0) {
        r /= p;
        ++d;
    }
    if (r != 1) throw std::invalid_argument("field order is not a prime power");
    return Field::get(p, d);
}

const Field& parse_field_line(const std::string& line) {
    std::istringstream in(line);
    expect_word(in, "GF");
    u32 p = read_u32(in, "characteristic");
    u32 d = read_u32(in, "degree");
    std::vector<u32> mod(d + 1);
    for (u32 i = 0; i <= d; ++i) mod[i] = read_u32(in, "modulus coefficient");
    return Field::with_modulus(p, mod);
}

std::string mat_to_text(const Mat& A) {
    if (!A.square()) throw std::invalid_argument("matrix block format is square only");
    std::ostringstream out;
    out << "mat " << A.rows() << "\n";
    for (u32 i = 0; i < A.rows(); ++i) {
        for (u32 j = 0; j < A.cols(); ++j) out << (j ? " " : "") << A.at(i, j);
        out << "\n";
    }
    return out.str();
}

Mat parse_mat(const Field& F, std::istream& in) {
    expect_word(in, "mat");
    u32 l = read_u32(in, "matrix size");
    Mat A(F, l, l);
    for (u32 i = 0; i < l; ++i)
        for (u32 j = 0; j < l; ++j) A.set(i, j, read_element(in, F));
    return A;
}

std::string matpoly_to_text(const MatPoly& P) {
    std::ostringstream out;
    int deg = P.deg() < 0 ? 0 : P.deg();
    out << "matpoly " << deg << "\n";
    for (int i = 0; i <= deg; ++i) out << mat_to_text(P.coeff(u32(i)));
    return out.str();
}

MatPoly parse_matpoly(const Field& F, std::istream& in) {
    expect_word(in, "matpoly");
    u32 deg = read_u32(in, "degree");
    std::vector<Mat> coeffs;
    coeffs.reserve(deg + 1);
    for (u32 i = 0; i <= deg; ++i) coeffs.push_back(parse_mat(F, in));
    return MatPoly::from_coeffs(F, std::move(coeffs));
}

std::string code_to_text(const LinearCode& C) {
    u32 l = C.block_len().value_or(1);
    u32 m = C.n() / l;
    std::ostringstream out;
    out << "code " << C.field().q() << " " << C.n() << " " << C.k() << " " << m << " " << l
        << "\n";
    for (u32 i = 0; i < C.k(); ++i) {
        for (u32 j = 0; j < C.n(); ++j) out << (j ? " " : "") << C.generator().at(i, j);
        out << "\n";
    }
    return out.str();
}

LinearCode parse_code(std::istream& in) {
    expect_word(in, "code");
    u32 q = read_u32(in, "field order");
    u32 n = read_u32(in, "length");
    u32 k = read_u32(in, "dimension");
    u32 m = read_u32(in, "block count");
    u32 l = read_u32(in, "block width");
    if (l == 0 || u64(m) * l != n) throw std::invalid_argument("code header: n != m * l");
    const Field& F = field_from_order(q);
    Mat rows(F, k, n);
    for (u32 i = 0; i < k; ++i)
        for (u32 j = 0; j < n; ++j) rows.set(i, j, read_element(in, F));
    LinearCode C = LinearCode::from_rows(F, rows);
    if (C.k() != k) throw std::invalid_argument("stored generator rows are dependent");
    C.set_block_len(l);
    return C;
}

std::string qbch_spec_to_text(const QbchCode& Q) {
    std::ostringstream out;
    out << "qbch " << Q.Fq->q() << " " << Q.s << " " << Q.m << " " << Q.delta << "\n";
    out << mat_to_text(Q.root);
    return out.str();
}

QbchSpec parse_qbch_spec(std::istream& in) {
    expect_word(in, "qbch");
    u32 q = read_u32(in, "field order");
    u32 s = read_u32(in, "extension degree");
    u32 m = read_u32(in, "block count");
    u32 delta = read_u32(in, "designed distance");
    const Field& Fq = field_from_order(q);
    if (s == 0) throw std::invalid_argument("extension degree must be positive");
    const Field& Fqs = Field::get(Fq.p(), Fq.d() * s);
    Mat root = parse_mat(Fqs, in);
    return QbchSpec{&Fq, m, delta, std::move(root)};
}

std::vector<u32> parse_word(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<u32> out;
    long long v;
    while (in >> v) {
        if (v < 0 || v > 0xffffffffLL) throw std::invalid_argument("bad symbol value");
        out.push_back(u32(v));
    }
    if (!in.eof()) throw std::invalid_argument("bad word text");
    return out;
}

std::string word_to_text(const std::vector<u32>& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

}  // namespace qcblock
