#include "hopfgate/matrix_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hopfgate {

using nlohmann::json;

const RationalMatrix& MatrixFile::matrix() const {
    if (!is_numeric()) throw ParseError("matrix file holds a sign pattern, not numeric entries");
    return std::get<RationalMatrix>(content);
}

const SignPattern& MatrixFile::pattern() const {
    if (is_numeric()) throw ParseError("matrix file holds numeric entries, not a sign pattern");
    return std::get<SignPattern>(content);
}

RationalMatrix MatrixFile::as_matrix() const {
    return is_numeric() ? std::get<RationalMatrix>(content)
                        : std::get<SignPattern>(content).unit_member();
}

namespace {

bool is_sign_symbol(const std::string& s) {
    return s == "+" || s == "-" || s == "−" || s == "0";
}

} // namespace

MatrixFile parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix file needs rows, cols and entries fields");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("rows and cols must be integers");
    int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError("rows and cols must be positive");
    const json& e = j["entries"];
    if (!e.is_array() || (int)e.size() != rows)
        throw ParseError("entries must be an array of rows rows");

    std::vector<std::vector<std::string>> cells(rows);
    bool all_signs = true;
    for (int i = 0; i < rows; ++i) {
        if (!e[i].is_array() || (int)e[i].size() != cols)
            throw ParseError("each entries row must have cols elements");
        for (int k = 0; k < cols; ++k) {
            const json& cell = e[i][k];
            std::string s;
            if (cell.is_string())
                s = cell.get<std::string>();
            else if (cell.is_number_integer())
                s = std::to_string(cell.get<long long>());
            else if (cell.is_number_float()) {
                std::ostringstream os;
                os.precision(17);
                os << cell.get<double>();
                s = os.str();
            } else
                throw ParseError("matrix entries must be strings or numbers");
            all_signs = all_signs && is_sign_symbol(s);
            cells[i].push_back(std::move(s));
        }
    }

    MatrixFile out;
    if (all_signs) {
        SignPattern p(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) p.set(i, k, SignPattern::sign_from_symbol(cells[i][k]));
        out.content = std::move(p);
    } else {
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const std::string& s = cells[i][k];
                if (s == "+" || s == "-" || s == "−")
                    throw ParseError("mixed numeric and sign-symbol entries in one file");
                try {
                    m(i, k) = rational_from_string(s);
                } catch (const std::exception&) {
                    throw ParseError("unparseable matrix entry: " + s);
                }
            }
        out.content = std::move(m);
    }
    return out;
}

MatrixFile load_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const RationalMatrix& m) {
    json e = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(rational_to_string(m(i, k)));
        e.push_back(std::move(row));
    }
    json j{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
    return j.dump(2) + "\n";
}

std::string pattern_to_json(const SignPattern& p) {
    json e = json::array();
    for (int i = 0; i < p.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < p.cols(); ++k)
            row.push_back(p(i, k) > 0 ? "+" : (p(i, k) < 0 ? "-" : "0"));
        e.push_back(std::move(row));
    }
    json j{{"rows", p.rows()}, {"cols", p.cols()}, {"entries", std::move(e)}};
    return j.dump(2) + "\n";
}

} // namespace hopfgate
