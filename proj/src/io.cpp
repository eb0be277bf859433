#include "arcanon/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace arcanon {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::vector<int> columns;  // 1-based start column per token

    int column_of(size_t tok_index) const {
        return tok_index < columns.size() ? columns[tok_index] : 1;
    }
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line{number, {}, {}};
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            line.tokens.push_back(raw.substr(start, i - start));
            line.columns.push_back(static_cast<int>(start) + 1);
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_count(const Line& header, const std::string& kind) {
    if (header.tokens.size() != 2 || header.tokens[0] != kind)
        throw ParseError(header.number, "expected header '" + kind + " N'");
    try {
        int n = std::stoi(header.tokens[1]);
        if (n < 0) throw std::invalid_argument("");
        return n;
    } catch (const std::exception&) {
        throw ParseError(header.number, "invalid vertex count '" + header.tokens[1] + "'");
    }
}

// Names from an optional "names:" line, otherwise 1..n.
std::vector<VertexId> parse_names(const std::vector<Line>& lines, size_t& idx,
                                  int n, int header_line) {
    if (idx < lines.size() && lines[idx].tokens[0] == "names:") {
        const Line& line = lines[idx];
        std::vector<VertexId> names(line.tokens.begin() + 1, line.tokens.end());
        if (static_cast<int>(names.size()) != n)
            throw ParseError(line.number, "names: line must list exactly " +
                                              std::to_string(n) + " names");
        for (const auto& nm : names)
            if (nm.find('=') != std::string::npos)
                throw ParseError(line.number, "vertex names must not contain '='");
        ++idx;
        return names;
    }
    (void)header_line;
    std::vector<VertexId> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return names;
}

long long parse_suffix_value(const Line& line, size_t tok_index) {
    const std::string& token = line.tokens[tok_index];
    auto eq = token.find('=');
    try {
        return std::stoll(token.substr(eq + 1));
    } catch (const std::exception&) {
        throw ParseError(line.number, line.column_of(tok_index),
                         "invalid value in '" + token + "'");
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    int n = parse_count(lines[0], "graph");
    size_t idx = 1;
    auto names = parse_names(lines, idx, n, lines[0].number);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "an edge line needs exactly two vertices");
        edges.emplace_back(line.tokens[0], line.tokens[1]);
    }
    try {
        return Graph(names, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

Hypergraph parse_hypergraph(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    int n = parse_count(lines[0], "hypergraph");
    size_t idx = 1;
    auto names = parse_names(lines, idx, n, lines[0].number);
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    for (; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        std::vector<VertexId> members;
        Color color = 0;
        Mult mult = 1;
        for (size_t ti = 0; ti < line.tokens.size(); ++ti) {
            const auto& tok = line.tokens[ti];
            if (tok.rfind("color=", 0) == 0) color = parse_suffix_value(line, ti);
            else if (tok.rfind("mult=", 0) == 0) {
                mult = parse_suffix_value(line, ti);
                if (mult <= 0)
                    throw ParseError(line.number, line.column_of(ti),
                                     "mult must be positive");
            } else if (tok.find('=') != std::string::npos) {
                throw ParseError(line.number, line.column_of(ti),
                                 "unknown attribute '" + tok + "'");
            } else {
                members.push_back(tok);
            }
        }
        bool empty_marker = members.size() == 1 && members[0] == "empty" &&
                            std::find(names.begin(), names.end(), "empty") == names.end();
        if (empty_marker) members.clear();
        edges.emplace_back(std::move(members), color, mult);
    }
    try {
        return Hypergraph(names, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

BinaryMatrix parse_matrix(std::istream& in) {
    auto lines = tokenize(in);
    BinaryMatrix m;
    for (const auto& line : lines) {
        std::string row;
        for (const auto& tok : line.tokens) row += tok;
        if (m.rows == 0) m.cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != m.cols)
            throw ParseError(line.number, "rows must have equal length");
        std::vector<char> bits;
        for (size_t ci = 0; ci < row.size(); ++ci) {
            if (row[ci] != '0' && row[ci] != '1')
                throw ParseError(line.number, static_cast<int>(ci) + 1,
                                 "matrix entries must be 0 or 1");
            bits.push_back(row[ci] == '1');
        }
        m.cell.push_back(std::move(bits));
        ++m.rows;
    }
    return m;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}
Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}
BinaryMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.size() << "\n";
    os << "names:";
    for (const auto& v : g.names()) os << " " << v;
    os << "\n";
    for (const auto& [a, b] : g.edge_name_list()) os << a << " " << b << "\n";
    return os.str();
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << "hypergraph " << h.size() << "\n";
    os << "names:";
    for (const auto& v : h.names()) os << " " << v;
    os << "\n";
    for (const auto& e : h.edges()) {
        if (e.set.empty()) os << "empty";
        else {
            bool first = true;
            for (const auto& v : h.edge_names(e)) {
                os << (first ? "" : " ") << v;
                first = false;
            }
        }
        if (e.color != 0) os << " color=" << e.color;
        if (e.mult != 1) os << " mult=" << e.mult;
        os << "\n";
    }
    return os.str();
}

std::string emit_matrix(const BinaryMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) os << (m.cell[r][c] ? '1' : '0');
        os << "\n";
    }
    return os.str();
}

}  // namespace arcanon
