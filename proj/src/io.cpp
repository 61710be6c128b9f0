#include "zpzp2/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zpzp2 {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key \"") + key + "\" is not an integer");
    long long n = v.get<long long>();
    if (n < lo || n > hi)
        throw ParseError(std::string("key \"") + key + "\" = " + std::to_string(n) +
                         " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return static_cast<int>(n);
}

}  // namespace

CodeFile parse_code_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level is not a JSON object");
    int p_value = require_int(j, "p", 2, 1000);
    Prime p = [&] {
        try {
            return Prime(p_value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    int alpha = require_int(j, "alpha", 0, 1 << 20);
    int beta = require_int(j, "beta", 0, 1 << 20);
    if (alpha + beta <= 0) throw ParseError("alpha + beta must be positive");
    Shape shape{alpha, beta};
    if (!j.contains("rows")) throw ParseError("missing key \"rows\"");
    const json& rows_json = j.at("rows");
    if (!rows_json.is_array()) throw ParseError("key \"rows\" is not an array");
    int pv = p.value();
    std::vector<MixedWord> rows;
    for (std::size_t r = 0; r < rows_json.size(); ++r) {
        const json& row = rows_json[r];
        if (!row.is_array() || static_cast<int>(row.size()) != alpha + beta)
            throw ParseError("row " + std::to_string(r) + " must be an array of " +
                             std::to_string(alpha + beta) + " integers");
        MixedWord w(p, shape);
        for (int i = 0; i < alpha + beta; ++i) {
            const json& cell = row[i];
            if (!cell.is_number_integer())
                throw ParseError("row " + std::to_string(r) + " entry " +
                                 std::to_string(i) + " is not an integer");
            long long v = cell.get<long long>();
            int limit = i < alpha ? pv : pv * pv;
            if (v < 0 || v >= limit)
                throw ParseError("row " + std::to_string(r) + " entry " +
                                 std::to_string(i) + " = " + std::to_string(v) +
                                 " out of range [0, " + std::to_string(limit) + ")");
            if (i < alpha)
                w.set_x(i, static_cast<int>(v));
            else
                w.set_y(i - alpha, static_cast<int>(v));
        }
        rows.push_back(std::move(w));
    }
    return CodeFile{p, shape, std::move(rows)};
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_json(buf.str());
}

std::string code_to_json(Prime p, Shape shape, const std::vector<MixedWord>& rows) {
    json j;
    j["p"] = p.value();
    j["alpha"] = shape.alpha;
    j["beta"] = shape.beta;
    json rows_json = json::array();
    for (const MixedWord& w : rows) {
        json row = json::array();
        for (int i = 0; i < shape.alpha; ++i) row.push_back(w.x(i));
        for (int i = 0; i < shape.beta; ++i) row.push_back(w.y(i));
        rows_json.push_back(std::move(row));
    }
    j["rows"] = std::move(rows_json);
    return j.dump(2) + "\n";
}

void save_code_file(const std::string& path, Prime p, Shape shape,
                    const std::vector<MixedWord>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
    out << code_to_json(p, shape, rows);
    if (!out) throw ParseError("write to \"" + path + "\" failed");
}

namespace {

std::vector<int> parse_int_list(const std::string& part, int limit, const char* side) {
    std::vector<int> values;
    if (part.empty()) return values;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = part.find(',', pos);
        std::string token = part.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (token.empty())
            throw ParseError(std::string("empty entry in ") + side + " part of word literal");
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("\"" + token + "\" is not an integer");
        }
        if (used != token.size()) throw ParseError("\"" + token + "\" is not an integer");
        if (v < 0 || v >= limit)
            throw ParseError("entry " + std::to_string(v) + " out of range [0, " +
                             std::to_string(limit) + ")");
        values.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

}  // namespace

MixedWord parse_word_literal(Prime p, const std::string& text) {
    std::size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw ParseError("word literal needs a '|' between the X and Y parts");
    if (text.find('|', bar + 1) != std::string::npos)
        throw ParseError("word literal has more than one '|'");
    int pv = p.value();
    std::vector<int> xs = parse_int_list(text.substr(0, bar), pv, "X");
    std::vector<int> ys = parse_int_list(text.substr(bar + 1), pv * pv, "Y");
    Shape shape{static_cast<int>(xs.size()), static_cast<int>(ys.size())};
    if (shape.alpha + shape.beta <= 0) throw ParseError("word literal is empty");
    MixedWord w(p, shape);
    for (int i = 0; i < shape.alpha; ++i) w.set_x(i, xs[i]);
    for (int i = 0; i < shape.beta; ++i) w.set_y(i, ys[i]);
    return w;
}

std::string format_gray(const GrayWord& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(g[i]));
    }
    return out;
}

std::string format_type(const CodeType& t) {
    return "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + ";" +
           std::to_string(t.gamma) + "," + std::to_string(t.delta) + ";" +
           std::to_string(t.kappa) + ")";
}

std::string format_exponent_size(Prime p, int exponent) {
    return std::to_string(p.value()) + "^" + std::to_string(exponent);
}

std::string render_table_csv(const AchievabilityTable& table) {
    std::string out = "k\\r";
    for (int r : table.ranks) out += "," + std::to_string(r);
    out += "\n";
    for (std::size_t i = 0; i < table.kernel_dims.size(); ++i) {
        out += std::to_string(table.kernel_dims[i]);
        for (std::size_t j = 0; j < table.ranks.size(); ++j)
            out += table.achievable[i][j] ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

}  // namespace zpzp2
