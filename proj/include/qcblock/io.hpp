#pragma once
// Plain-text serialization of the algebraic objects.
//
// Elements are written as their integer encoding sum c_i p^i.  Formats:
//   field line:   GF p d c0 ... cd           (modulus little-endian)
//   matrix:       "mat l" then l lines of l integers (square only)
//   matrix poly:  "matpoly deg" then deg+1 matrix blocks
//   code:         "code q n k m l" then k generator rows of n integers
//   qbch spec:    "qbch q s m delta" then the root block over F_{q^s}
// Code and spec files name fields by order alone, so parsing them yields
// the default-modulus field of that order.

#include <iosfwd>
#include <string>
#include <vector>

#include "qcblock/qbch.hpp"
#include "qcblock/qccode.hpp"

namespace qcblock {

// Default-modulus field of order q = p^d; throws when q is not a prime power.
const Field& field_from_order(u32 q);
const Field& parse_field_line(const std::string& line);

std::string mat_to_text(const Mat& A);
Mat parse_mat(const Field& F, std::istream& in);

std::string matpoly_to_text(const MatPoly& P);
MatPoly parse_matpoly(const Field& F, std::istream& in);

std::string code_to_text(const LinearCode& C);
LinearCode parse_code(std::istream& in);

struct QbchSpec {
    const Field* Fq;
    u32 m;
    u32 delta;
    Mat root;  // over F_{q^s}
};
std::string qbch_spec_to_text(const QbchCode& Q);
QbchSpec parse_qbch_spec(std::istream& in);

// Comma or whitespace separated integer encodings.
std::vector<u32> parse_word(const std::string& text);
std::string word_to_text(const std::vector<u32>& w);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qcblock
